"""
Closed-form extremal estimates of the IE components and the Lagrange
sensitivities of the constrained maximization problems.

The sensitivities are evaluated exactly as the closed forms are stated, with
e the Napierian base; they describe the reaction of the objective function
to a change in the limitation, not a re-derivation.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional
import logging
import math

from .choices import Scenario
from .cycles import ContourSystem
from .entropy import IEVector
from .exceptions import InvalidParameter, NonPositiveParameter
from .graph import Graph
from .metrics import all_pairs_distances

logger = logging.getLogger(__name__)

INTERPRETATION = "reaction of the objective function to a change in the limitations"

# Parameters each scenario responds to, in reporting order.
SCENARIO_PARAMETERS = {
    Scenario.CONNECTIVITY: ('L', 'R'),
    Scenario.BRANCHING: ('K', 'R'),
    Scenario.REMOTENESS: ('K', 'd', 'eccentricity'),
    Scenario.CONTOUR_VERTICES: ('M', 'R'),
    Scenario.CONTOUR_COMPLEXITY: ('P', 'C_max'),
    Scenario.BRANCH_FREQUENCY: ('L', 'F_max'),
}

CONNECTIVITY_NOTE = (
    "the connectivity sensitivity uses the branching limit R, which is only "
    "introduced with the degree-bounded scenario; evaluated as stated"
)
ATTAINABILITY_NOTE = (
    "H1 bound 2*log2(K) needs constant degrees and constant remoteness at once; "
    "gaps are reported without asserting that both are attainable together"
)


@dataclass(frozen=True)
class VertexBounds:
    h11: float
    h12: float
    h1: float
    # continuous optimum of every degree, 2L / K
    degree: Fraction


@dataclass(frozen=True)
class ContourBounds:
    h21: float
    h22: float
    h23: float
    h2: float


@dataclass(frozen=True)
class Sensitivity:
    scenario: str
    value: float
    parameters: Dict[str, float]
    interpretation: str = INTERPRETATION


@dataclass(frozen=True)
class ComponentGap:
    component: str
    achieved: float
    bound: float

    @property
    def gap(self):
        return self.bound - self.achieved


@dataclass
class ExtremalReport:
    vertex_count: int
    branch_count: int
    row_count: int
    max_contour_vertices: int
    vertex: Optional[VertexBounds]
    contour: Optional[ContourBounds]
    gaps: List[ComponentGap] = field(default_factory=list)
    sensitivities: List[Sensitivity] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def h1_bound(self):
        return self.vertex.h1 if self.vertex else 0.0

    @property
    def h2_bound(self):
        return self.contour.h2 if self.contour else 0.0

    @property
    def contour_dominates(self):
        """True when the contour bound exceeds the vertex bound."""
        return self.h2_bound > self.h1_bound

    def gap(self, component):
        for row in self.gaps:
            if row.component == component:
                return row
        raise KeyError(component)


def _require_positive(**values):
    for name, value in values.items():
        if value is None:
            raise InvalidParameter(f"missing parameter {name}", parameter=name)
        if value <= 0:
            raise NonPositiveParameter(f"parameter {name} must be positive, got {value}", parameter=name)


def vertex_bounds(vertex_count: int, branch_count: int) -> VertexBounds:
    if vertex_count < 2 or branch_count < vertex_count - 1:
        raise InvalidParameter(
            f"vertex bounds need K >= 2 and L >= K - 1, got K={vertex_count}, L={branch_count}",
            parameter='vertex_count',
        )
    log_k = math.log2(vertex_count)
    return VertexBounds(h11=log_k, h12=log_k, h1=2 * log_k, degree=Fraction(2 * branch_count, vertex_count))


def contour_bounds(row_count: int, contour_vertices: int, branch_count: int) -> ContourBounds:
    if row_count < 1 or contour_vertices < 2 or branch_count < 1:
        raise InvalidParameter(
            f"contour bounds need P >= 1, M >= 2, L >= 1, got P={row_count}, M={contour_vertices}, L={branch_count}",
            parameter='row_count',
        )
    h21 = row_count * math.log2(contour_vertices)
    h22 = math.log2(row_count)
    h23 = math.log2(branch_count)
    return ContourBounds(h21=h21, h22=h22, h23=h23, h2=h21 + h22 + h23)


def lagrange_sensitivities(scenario, **params) -> Sensitivity:
    """
    Evaluate the sensitivity of one constrained scenario. Parameter names:
    ``L``, ``K``, ``R``, ``d``, ``eccentricity``, ``M``, ``P``, ``C_max``,
    ``F_max`` as listed in ``SCENARIO_PARAMETERS``.
    """
    scenario = Scenario(scenario)
    names = SCENARIO_PARAMETERS[scenario]
    _require_positive(**{name: params.get(name) for name in names})
    p = {name: params[name] for name in names}
    e = math.e

    if scenario == Scenario.CONNECTIVITY:
        value = -(1 / (2 * p['L'])) * math.log2(e * p['R'])
    elif scenario == Scenario.BRANCHING:
        value = -(1 / (p['K'] * p['R'])) * math.log2(e * p['R'])
    elif scenario == Scenario.REMOTENESS:
        k = p['K']
        value = -((k - 1) / k ** 2) * (1 / (p['eccentricity'] + p['d'])) * math.log2(e / k)
    elif scenario == Scenario.CONTOUR_VERTICES:
        m = p['M']
        value = -((m - 1) / m ** 2) * (1 / p['R']) * math.log2(e / p['R'])
    elif scenario == Scenario.CONTOUR_COMPLEXITY:
        rows = p['P']
        value = -((rows - 1) / rows ** 2) * (1 / p['C_max']) * math.log2(e / rows)
    else:
        branches = p['L']
        value = -((branches - 1) / branches ** 2) * (1 / p['F_max']) * math.log2(e / branches)

    # avoid a signed zero when a (n - 1) factor vanishes
    return Sensitivity(scenario=scenario, value=value + 0.0, parameters=p)


def bound_audit(graph: Graph, ie: IEVector, system: ContourSystem) -> ExtremalReport:
    """
    Compare the achieved components of one graph with their extremal
    estimates and evaluate every scenario's sensitivity at the graph's own
    resource levels.
    """
    k, branches = graph.vertex_count, graph.branch_count
    rows = system.row_count
    max_m = int(system.vertex_counts.max()) if rows else 0
    report = ExtremalReport(
        vertex_count=k,
        branch_count=branches,
        row_count=rows,
        max_contour_vertices=max_m,
        vertex=vertex_bounds(k, branches) if k >= 2 else None,
        contour=contour_bounds(rows, max_m, branches) if rows else None,
        notes=[CONNECTIVITY_NOTE, ATTAINABILITY_NOTE],
    )
    if report.vertex:
        report.gaps += [
            ComponentGap('h11', ie.h11, report.vertex.h11),
            ComponentGap('h12', ie.h12, report.vertex.h12),
            ComponentGap('h1', ie.h1, report.vertex.h1),
        ]
    if report.contour:
        report.gaps += [
            ComponentGap('h21', ie.h21, report.contour.h21),
            ComponentGap('h22', ie.h22, report.contour.h22),
            ComponentGap('h23', ie.h23, report.contour.h23),
            ComponentGap('h2', ie.h2, report.contour.h2),
        ]

    if k >= 2:
        profile = all_pairs_distances(graph)
        levels = {
            'K': k,
            'L': branches,
            'R': int(graph.degrees.max()),
            'd': int(profile.distances[ie.reference_vertex].max()),
            'eccentricity': profile.eccentricity(ie.reference_vertex),
        }
        if rows:
            levels.update({
                'M': max_m,
                'P': rows,
                'C_max': int(system.complexities.max()),
                'F_max': int(system.frequencies.max()),
            })
        for scenario, names in SCENARIO_PARAMETERS.items():
            if all(name in levels for name in names):
                report.sensitivities.append(lagrange_sensitivities(scenario, **levels))

    logger.debug(
        f"Bound audit of {graph.name or '<unnamed>'}: H1 bound {report.h1_bound:.6f}, H2 bound {report.h2_bound:.6f}"
    )
    return report
