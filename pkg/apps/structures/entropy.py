"""
Information estimations (IE) of a graph.

The vertex component H1 = H11 + H12 combines the entropy of the degrees
with the entropy of the remoteness weights. The contour component
H2 = H21 + H22 + H23 combines the degree entropy inside every contour, the
entropy of the contour complexities and the entropy of the branch
frequencies. The IE is the vector (H1, H2) with its amplitude and phase.
All values are in bits.
"""
from dataclasses import dataclass
from typing import Optional
import logging
import math

import numpy as np
from scipy.stats import entropy as shannon_entropy

from .choices import EpsVariant, H21Normalization, Reference
from .cycles import ContourSystem, union_system
from .exceptions import AllZero
from .graph import Graph
from .metrics import DistanceProfile, all_pairs_distances, remoteness, resolve_reference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IEVector:
    h11: float = 0.0
    h12: float = 0.0
    h21: float = 0.0
    h22: float = 0.0
    h23: float = 0.0
    reference: str = Reference.CENTER
    reference_vertex: int = 0

    @property
    def h1(self):
        return self.h11 + self.h12

    @property
    def h2(self):
        return self.h21 + self.h22 + self.h23

    @property
    def amplitude(self):
        return math.hypot(self.h1, self.h2)

    @property
    def phase(self):
        """Angle of the vector in radians, within [0, pi/2]; 0 for the zero vector."""
        return math.atan2(self.h2, self.h1)

    def components(self):
        return {
            'h11': self.h11,
            'h12': self.h12,
            'h1': self.h1,
            'h21': self.h21,
            'h22': self.h22,
            'h23': self.h23,
            'h2': self.h2,
            'amplitude': self.amplitude,
            'phase': self.phase,
        }

    def close_to(self, other, tolerance):
        return all(abs(a - b) <= tolerance for a, b in zip(self.components().values(), other.components().values()))


def entropy_of_weights(weights) -> float:
    """Shannon entropy in bits of nonnegative weights, with 0 * log 0 = 0."""
    weights = np.asarray(weights, dtype=float)
    if weights.size and weights.min() < 0:
        raise ValueError("weights must be nonnegative")
    if weights.size == 0 or weights.sum() <= 0:
        raise AllZero("entropy is undefined for weights that sum to zero")
    return float(shannon_entropy(weights, base=2))


def h11(graph: Graph) -> float:
    """Entropy of the degrees rho_i / 2L."""
    if graph.branch_count == 0:
        return 0.0
    return entropy_of_weights(graph.degrees)


def h12(graph: Graph, reference=Reference.CENTER, eps_variant=EpsVariant.CENTER,
        profile: Optional[DistanceProfile] = None) -> float:
    """Entropy of the remoteness weights eps_ref + r_i."""
    if graph.vertex_count == 1:
        return 0.0
    if profile is None:
        profile = all_pairs_distances(graph)
    return entropy_of_weights(remoteness(graph, profile, reference, eps_variant))


def h1(graph: Graph, reference=Reference.CENTER, eps_variant=EpsVariant.CENTER,
       profile: Optional[DistanceProfile] = None) -> float:
    return h11(graph) + h12(graph, reference, eps_variant, profile)


def h21(system: ContourSystem, graph: Graph, normalization=H21Normalization.ROW) -> float:
    """
    Degree entropy of the vertices of every contour. Row normalization sums
    the per-row entropies; global normalization takes one entropy over all
    (row, vertex) occurrences.
    """
    if system.row_count == 0:
        return 0.0
    degrees = graph.degrees
    rows = [degrees[sorted(vertices)] for vertices in system.row_vertices]
    if H21Normalization(normalization) == H21Normalization.GLOBAL:
        return entropy_of_weights(np.concatenate(rows))
    return float(sum(entropy_of_weights(row) for row in rows))


def h22(system: ContourSystem) -> float:
    """Entropy of the contour complexities C_i."""
    if system.row_count == 0:
        return 0.0
    return entropy_of_weights(system.complexities)


def h23(system: ContourSystem) -> float:
    """Entropy of the branch frequencies F^j; uncovered branches contribute nothing."""
    if system.row_count == 0:
        return 0.0
    return entropy_of_weights(system.frequencies)


def h2(system: ContourSystem, graph: Graph, normalization=H21Normalization.ROW) -> float:
    return h21(system, graph, normalization) + h22(system) + h23(system)


def ie_vector(graph: Graph, reference=None, eps_variant=EpsVariant.CENTER,
              h21_normalization=H21Normalization.ROW, profile: Optional[DistanceProfile] = None,
              system: Optional[ContourSystem] = None) -> IEVector:
    """
    Full IE of a graph. ``reference=None`` uses the base node of a marked
    graph and the center otherwise. A single vertex yields the zero vector.
    """
    if profile is None:
        profile = all_pairs_distances(graph)
    mode, vertex = resolve_reference(graph, reference)
    if graph.vertex_count == 1:
        return IEVector(reference=mode, reference_vertex=vertex)
    if system is None:
        system = union_system(graph, mode, profile)
    vector = IEVector(
        h11=h11(graph),
        h12=h12(graph, mode, eps_variant, profile),
        h21=h21(system, graph, h21_normalization),
        h22=h22(system),
        h23=h23(system),
        reference=mode,
        reference_vertex=vertex,
    )
    logger.debug(f"IE of {graph.name or '<unnamed>'}: H1={vector.h1:.6f} H2={vector.h2:.6f}")
    return vector
