"""
Metric structure of a graph: hop distances, eccentricities, center and the
remoteness weights used by the metric entropy component.
"""
from dataclasses import dataclass
from typing import Optional, Tuple
import logging

import networkx as nx
import numpy as np
from django.utils.functional import cached_property

from .canonical import canonical_labeling
from .choices import EpsVariant, Reference
from .exceptions import NoBaseNode
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DistanceProfile:
    distances: np.ndarray

    @property
    def vertex_count(self):
        return self.distances.shape[0]

    @cached_property
    def eccentricities(self):
        return self.distances.max(axis=1)

    @cached_property
    def distance_sums(self):
        return self.distances.sum(axis=1)

    @property
    def radius(self):
        return int(self.eccentricities.min())

    @property
    def diameter(self):
        return int(self.eccentricities.max())

    def eccentricity(self, vertex):
        return int(self.eccentricities[vertex])


@dataclass(frozen=True)
class Center:
    vertex: int
    eccentricity: int
    # every vertex of minimum eccentricity, in index order
    central: Tuple[int, ...]
    bicenter: bool


def all_pairs_distances(graph: Graph) -> DistanceProfile:
    """Hop distances by breadth-first layering from every vertex."""
    k = graph.vertex_count
    distances = np.zeros((k, k), dtype=int)
    for source in range(k):
        for target, hops in nx.single_source_shortest_path_length(graph.nx_graph, source).items():
            distances[source, target] = hops
    return DistanceProfile(distances=distances)


def find_center(graph: Graph, profile: Optional[DistanceProfile] = None) -> Center:
    """
    The vertex of minimum eccentricity. When several vertices share it (a
    bicenter, or any tie in a cyclic graph) the smaller distance sum wins.
    Candidates still tied are ordered by the certificate of the graph marked
    at the candidate, so automorphic candidates compare equal and the choice
    is stable under relabeling; the lowest index settles the rest.
    """
    if profile is None:
        profile = all_pairs_distances(graph)
    eccentricities = profile.eccentricities
    radius = int(eccentricities.min())
    central = tuple(int(v) for v in np.flatnonzero(eccentricities == radius))
    sums = profile.distance_sums
    best_sum = min(sums[v] for v in central)
    candidates = [v for v in central if sums[v] == best_sum]
    if len(candidates) > 1:
        candidates.sort(key=lambda v: (canonical_labeling(graph, marked=v).certificate, v))
    bicenter = len(central) == 2 and central[1] in graph.adjacency[central[0]]
    center = Center(vertex=candidates[0], eccentricity=radius, central=central, bicenter=bicenter)
    logger.debug(f"Center of {graph.name or '<unnamed>'}: {center}")
    return center


def resolve_reference(graph: Graph, reference=None):
    """
    Return ``(Reference, vertex)``. ``None`` selects the base node of a
    marked graph and the center otherwise.
    """
    if reference is None:
        reference = Reference.BN if graph.is_marked else Reference.CENTER
    reference = Reference(reference)
    if reference == Reference.BN:
        if graph.base_node is None:
            raise NoBaseNode(f"graph {graph.name or '<unnamed>'} has no base node")
        return reference, graph.base_node
    return reference, graph.center.vertex


def remoteness(graph: Graph, profile: DistanceProfile, reference=Reference.CENTER,
               eps_variant=EpsVariant.CENTER) -> np.ndarray:
    """
    Remoteness weights ``t_i = eps_ref + d(ref, i)``; the reference vertex
    itself gets ``eps_ref``. With the per-vertex variant the eccentricity of
    vertex ``i`` replaces that of the reference.
    """
    _, vertex = resolve_reference(graph, reference)
    distances = profile.distances[vertex]
    if EpsVariant(eps_variant) == EpsVariant.PER_VERTEX:
        return profile.eccentricities + distances
    return profile.eccentricity(vertex) + distances
