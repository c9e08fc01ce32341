"""
Desk-scale experiments over families of structures: free tree enumeration,
IE distinctness, ranking by preference and base node placement sweeps.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import List, Tuple
import logging

import networkx as nx

from .canonical import DEFAULT_MAX_ORDER, canonical_form
from .choices import EpsVariant, H21Normalization, Reference
from .cycles import ContourSystem, union_system
from .entropy import IEVector, ie_vector
from .exceptions import InvalidParameter, NonPositiveParameter, TooLarge
from .graph import DegreePartition, Graph, degree_partition
from .metrics import Center, all_pairs_distances

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
MAX_DISTINCTNESS_ORDER = 10


def parallel_map(func, items, workers=1):
    """Map ``func`` over ``items`` keeping input order; a pool is used when ``workers > 1``."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


@dataclass
class GraphEstimate:
    graph: Graph
    ie: IEVector
    center: Center
    partition: DegreePartition
    system: ContourSystem


def estimate_graph(graph: Graph, reference=None, eps_variant=EpsVariant.CENTER,
                   h21_normalization=H21Normalization.ROW) -> GraphEstimate:
    profile = all_pairs_distances(graph)
    ie = ie_vector(graph, reference, eps_variant, h21_normalization, profile=profile)
    system = union_system(graph, ie.reference, profile, allow_empty=True)
    return GraphEstimate(
        graph=graph,
        ie=ie,
        center=graph.center,
        partition=degree_partition(graph),
        system=system,
    )


def enumerate_trees(order: int, max_order: int = DEFAULT_MAX_ORDER) -> List[Graph]:
    """One representative of every free tree with ``order`` vertices."""
    if order < 1:
        raise NonPositiveParameter(f"tree order must be at least 1, got {order}", parameter='order')
    if order > max_order:
        raise TooLarge(f"tree enumeration is limited to {max_order} vertices, got {order}", parameter='order')
    # older networkx releases reject order 1
    generated = [nx.empty_graph(1)] if order == 1 else nx.nonisomorphic_trees(order)
    trees = [Graph.from_networkx(tree, name=f"T{order}.{i + 1}") for i, tree in enumerate(generated)]
    logger.debug(f"Enumerated {len(trees)} trees on {order} vertices")
    return trees


def distinct_partitions(graphs: List[Graph]) -> int:
    return len({degree_partition(graph).parts for graph in graphs})


def _center_ie(graph, eps_variant=EpsVariant.CENTER, h21_normalization=H21Normalization.ROW):
    return ie_vector(graph, Reference.CENTER, eps_variant, h21_normalization)


def _same_vector(a: IEVector, b: IEVector, tolerance):
    return abs(a.h1 - b.h1) <= tolerance and abs(a.h2 - b.h2) <= tolerance


@dataclass
class Collision:
    first: int
    second: int
    first_certificate: str
    second_certificate: str


@dataclass
class DistinctnessReport:
    order: int
    trees: List[Graph]
    vectors: List[IEVector]
    partition_count: int
    distinct_count: int
    collisions: List[Collision] = field(default_factory=list)

    @property
    def tree_count(self):
        return len(self.trees)

    @property
    def all_distinct(self):
        return self.distinct_count == self.tree_count


def distinctness_experiment(order: int, tolerance: float = DEFAULT_TOLERANCE, workers: int = 1,
                            max_order: int = MAX_DISTINCTNESS_ORDER, eps_variant=EpsVariant.CENTER,
                            h21_normalization=H21Normalization.ROW) -> DistinctnessReport:
    """
    IE vectors (unmarked, center reference) of every free tree of ``order``
    vertices. Two vectors are the same when H1 and H2 agree within
    ``tolerance``; colliding pairs are listed with their certificates.
    """
    if order > max_order:
        raise TooLarge(f"distinctness experiment is limited to {max_order} vertices, got {order}", parameter='order')
    trees = enumerate_trees(order)
    compute = partial(_center_ie, eps_variant=eps_variant, h21_normalization=h21_normalization)
    vectors = parallel_map(compute, trees, workers)

    collisions = []
    representatives = []
    for i, vector in enumerate(vectors):
        matches = [j for j in representatives if _same_vector(vectors[j], vector, tolerance)]
        for j in matches:
            collisions.append(Collision(
                first=j,
                second=i,
                first_certificate=canonical_form(trees[j]).hex,
                second_certificate=canonical_form(trees[i]).hex,
            ))
        if not matches:
            representatives.append(i)

    report = DistinctnessReport(
        order=order,
        trees=trees,
        vectors=vectors,
        partition_count=distinct_partitions(trees),
        distinct_count=len(representatives),
        collisions=collisions,
    )
    logger.info(
        f"{report.tree_count} trees, {report.partition_count} partitions, "
        f"{report.distinct_count} distinct IE vectors on {order} vertices"
    )
    return report


def plot_rows(vectors: List[IEVector]):
    """Rows ``(x, H1, H2, H_m, phi)`` indexed by graph position, for external plotting."""
    return [(x, v.h1, v.h2, v.amplitude, v.phase) for x, v in enumerate(vectors, start=1)]


@dataclass
class RankingEntry:
    rank: int
    graph: Graph
    ie: IEVector

    @property
    def graph_id(self):
        return self.graph.name


def _rank_key(vector: IEVector, places):
    return tuple(round(value, places) for value in (vector.amplitude, vector.phase, vector.h1))


def rank_vectors(scored: List[Tuple[Graph, IEVector]], places: int = 9) -> List[RankingEntry]:
    """
    Dense ranking of already estimated structures: descending amplitude,
    then phase, then H1. Keys are rounded to ``places`` decimals so
    isomorphic structures tie and share a rank; ties keep input order.
    """
    keyed = sorted(scored, key=lambda pair: tuple(-k for k in _rank_key(pair[1], places)))
    entries = []
    previous = None
    for position, (graph, vector) in enumerate(keyed, start=1):
        key = _rank_key(vector, places)
        rank = entries[-1].rank if key == previous else position
        entries.append(RankingEntry(rank=rank, graph=graph, ie=vector))
        previous = key
    return entries


def rank_structures(graphs: List[Graph], reference=None, eps_variant=EpsVariant.CENTER,
                    h21_normalization=H21Normalization.ROW, workers: int = 1,
                    places: int = 9) -> List[RankingEntry]:
    """Estimate every structure and order them by preference (see ``rank_vectors``)."""
    graphs = list(graphs)
    compute = partial(ie_vector, reference=reference, eps_variant=eps_variant, h21_normalization=h21_normalization)
    return rank_vectors(list(zip(graphs, parallel_map(compute, graphs, workers))), places)


@dataclass
class SweepRow:
    vertex: int
    ie: IEVector
    distance_to_center: int
    label: str = ''


@dataclass
class BaseNodeSweep:
    graph: Graph
    center: Center
    rows: List[SweepRow]
    tolerance: float

    def minimizers(self, component='amplitude'):
        values = [getattr(row.ie, component) for row in self.rows]
        best = min(values)
        return [row.vertex for row, value in zip(self.rows, values) if value - best <= self.tolerance]

    def argmin(self, component='amplitude'):
        return self.minimizers(component)[0]

    def center_attains_minimum(self, component='amplitude'):
        return self.center.vertex in self.minimizers(component)

    def central_attains_minimum(self, component='amplitude'):
        """True when the center or any other vertex of minimum eccentricity is a minimizer."""
        return bool(set(self.center.central) & set(self.minimizers(component)))

    @property
    def distance_to_center(self):
        return self.rows[self.argmin()].distance_to_center


def bn_sweep(graph: Graph, eps_variant=EpsVariant.CENTER, h21_normalization=H21Normalization.ROW,
             tolerance: float = DEFAULT_TOLERANCE) -> BaseNodeSweep:
    """Marked IE with the base node placed at every vertex in turn."""
    graph = graph.without_base_node()
    profile = all_pairs_distances(graph)
    center = graph.center
    rows = []
    for vertex in range(graph.vertex_count):
        marked = graph.with_base_node(vertex)
        vector = ie_vector(marked, Reference.BN, eps_variant, h21_normalization, profile=profile)
        rows.append(SweepRow(
            vertex=vertex,
            ie=vector,
            distance_to_center=int(profile.distances[center.vertex, vertex]),
            label=graph.label(vertex),
        ))
    sweep = BaseNodeSweep(graph=graph, center=center, rows=rows, tolerance=tolerance)
    logger.debug(f"BN sweep of {graph.name or '<unnamed>'}: argmin {sweep.argmin()} center {center.vertex}")
    return sweep


SWEEP_COMPONENTS = ('amplitude', 'h1', 'h2')


@dataclass
class SweepException:
    order: int
    graph: Graph
    central: Tuple[int, ...]
    minimizers: List[int]
    certificate: str


@dataclass
class CenterMinimalityReport:
    max_order: int
    total: int
    hits: dict
    exceptions: List[SweepException]

    def rate(self, component='amplitude'):
        return self.hits[component] / self.total if self.total else 0.0


def center_minimality_experiment(max_order: int = 8, tolerance: float = DEFAULT_TOLERANCE,
                                 workers: int = 1, min_order: int = 2, eps_variant=EpsVariant.CENTER,
                                 h21_normalization=H21Normalization.ROW) -> CenterMinimalityReport:
    """
    Sweep the base node over every tree of ``min_order..max_order`` vertices
    and count how often a central vertex minimizes the amplitude, H1 and H2.
    Trees whose amplitude minimizers miss every central vertex are reported.
    """
    if max_order < min_order:
        raise InvalidParameter(
            f"center check needs trees of at least {min_order} vertices, got {max_order}", parameter='max_order',
        )
    trees = [tree for order in range(min_order, max_order + 1) for tree in enumerate_trees(order)]
    run_sweep = partial(bn_sweep, eps_variant=eps_variant, h21_normalization=h21_normalization, tolerance=tolerance)
    sweeps = parallel_map(run_sweep, trees, workers)
    hits = {component: 0 for component in SWEEP_COMPONENTS}
    exceptions = []
    for tree, sweep in zip(trees, sweeps):
        for component in SWEEP_COMPONENTS:
            hits[component] += sweep.central_attains_minimum(component)
        if not sweep.central_attains_minimum('amplitude'):
            exceptions.append(SweepException(
                order=tree.vertex_count,
                graph=tree,
                central=sweep.center.central,
                minimizers=sweep.minimizers('amplitude'),
                certificate=canonical_form(tree).hex,
            ))
    report = CenterMinimalityReport(max_order=max_order, total=len(trees), hits=hits, exceptions=exceptions)
    logger.info(
        f"Center minimality over {report.total} trees: amplitude {report.rate('amplitude'):.3f}, "
        f"H1 {report.rate('h1'):.3f}, H2 {report.rate('h2'):.3f}"
    )
    return report
