"""
Contour space of a graph.

Closed contours are the fundamental cycles of a breadth-first spanning tree
rooted at the reference vertex (BN if set, else the center). Open contours
are the paths from the reference vertex to every other terminal vertex. Both
are encoded as unoriented {0, 1} rows over the branches of the graph and
stacked into the union matrix U = [W; N].

Neighbor order, cycle order and path tie-breaks follow the canonical labeling
of the graph marked at the reference vertex, so the resulting system depends
only on the structure and not on how vertices happen to be numbered.
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple
import csv
import logging

import networkx as nx
import numpy as np
from django.utils.functional import cached_property

from .canonical import canonical_labeling
from .exceptions import DimensionMismatch, EmptySystem
from .graph import Graph
from .metrics import DistanceProfile, all_pairs_distances, resolve_reference

logger = logging.getLogger(__name__)


def _empty_rows(graph):
    return np.zeros((0, graph.branch_count), dtype=int)


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    matrix: np.ndarray
    basic_vertex: int
    vertices: Tuple[int, ...]
    branches: Tuple[str, ...]

    def to_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.branches)
        writer.writerows(self.matrix.tolist())


@dataclass(frozen=True, eq=False)
class ContourSystem:
    reference: int
    branches: Tuple[str, ...]
    paths: np.ndarray
    cycles: np.ndarray
    path_vertices: Tuple[FrozenSet[int], ...] = field(default=())
    cycle_vertices: Tuple[FrozenSet[int], ...] = field(default=())

    @property
    def path_count(self):
        return self.paths.shape[0]

    @property
    def cycle_count(self):
        return self.cycles.shape[0]

    @property
    def row_count(self):
        return self.path_count + self.cycle_count

    @cached_property
    def union(self):
        return np.vstack([self.paths, self.cycles])

    @property
    def row_vertices(self):
        return self.path_vertices + self.cycle_vertices

    @cached_property
    def complexities(self):
        """C_i: number of branches in every row of U."""
        return np.abs(self.union).sum(axis=1)

    @cached_property
    def frequencies(self):
        """F^j: number of rows of U containing every branch."""
        return np.abs(self.union).sum(axis=0)

    @property
    def vertex_counts(self):
        """M_i: number of distinct vertices touched by every row of U."""
        return np.array([len(vertices) for vertices in self.row_vertices], dtype=int)

    def to_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.branches)
        writer.writerows(self.union.tolist())


def build_incidence(graph: Graph, basic_vertex: Optional[int] = None) -> IncidenceMatrix:
    """Unoriented incidence matrix with the basic vertex's row crossed out."""
    if basic_vertex is None:
        _, basic_vertex = resolve_reference(graph)
    vertices = tuple(v for v in range(graph.vertex_count) if v != basic_vertex)
    row = {v: i for i, v in enumerate(vertices)}
    matrix = np.zeros((len(vertices), graph.branch_count), dtype=int)
    for j, (u, v) in enumerate(graph.edges):
        for end in (u, v):
            if end != basic_vertex:
                matrix[row[end], j] = 1
    return IncidenceMatrix(matrix=matrix, basic_vertex=basic_vertex, vertices=vertices, branches=graph.branch_ids)


def _row(graph, vertex_sequence_edges):
    row = np.zeros(graph.branch_count, dtype=int)
    for u, v in vertex_sequence_edges:
        row[graph.edge_index[frozenset((u, v))]] = 1
    return row


def _pairs(sequence):
    return list(zip(sequence, sequence[1:]))


def _cycle_rows(graph, root, rank):
    tree_edges = list(nx.bfs_edges(
        graph.nx_graph, root, sort_neighbors=lambda nbrs: sorted(nbrs, key=rank.__getitem__),
    ))
    tree = nx.Graph()
    tree.add_nodes_from(range(graph.vertex_count))
    tree.add_edges_from(tree_edges)
    chords = sorted(
        (tuple(sorted((u, v), key=rank.__getitem__)) for u, v in graph.edges if not tree.has_edge(u, v)),
        key=lambda edge: (rank[edge[0]], rank[edge[1]]),
    )
    rows, vertex_sets = [], []
    for u, v in chords:
        tree_path = nx.shortest_path(tree, u, v)
        rows.append(_row(graph, _pairs(tree_path) + [(v, u)]))
        vertex_sets.append(frozenset(tree_path))
    return rows, vertex_sets


def _path_rows(graph, root, rank, distances):
    adjacency = graph.adjacency
    terminals = sorted(
        (v for v in range(graph.vertex_count) if graph.degrees[v] == 1 and v != root),
        key=rank.__getitem__,
    )
    rows, vertex_sets = [], []
    for terminal in terminals:
        # lexicographically least shortest path in canonical order
        sequence = [root]
        current = root
        while current != terminal:
            current = min(
                (u for u in adjacency[current] if distances[u, terminal] == distances[current, terminal] - 1),
                key=rank.__getitem__,
            )
            sequence.append(current)
        rows.append(_row(graph, _pairs(sequence)))
        vertex_sets.append(frozenset(sequence))
    return rows, vertex_sets


def _stack(graph, rows):
    if not rows:
        return _empty_rows(graph)
    return np.vstack(rows)


def _system(graph, reference, profile, with_paths, with_cycles):
    if profile is None:
        profile = all_pairs_distances(graph)
    _, root = resolve_reference(graph, reference)
    rank = canonical_labeling(graph, marked=root).rank
    paths, path_vertices = _path_rows(graph, root, rank, profile.distances) if with_paths else ([], [])
    cycles, cycle_vertices = _cycle_rows(graph, root, rank) if with_cycles else ([], [])
    return ContourSystem(
        reference=root,
        branches=graph.branch_ids,
        paths=_stack(graph, paths),
        cycles=_stack(graph, cycles),
        path_vertices=tuple(path_vertices),
        cycle_vertices=tuple(cycle_vertices),
    )


def fundamental_cycles(graph: Graph, reference=None, profile: Optional[DistanceProfile] = None) -> ContourSystem:
    """Contour matrix N: one row per chord of the breadth-first spanning tree."""
    return _system(graph, reference, profile, with_paths=False, with_cycles=True)


def open_contours(graph: Graph, reference=None, profile: Optional[DistanceProfile] = None) -> ContourSystem:
    """Path matrix W: one row per terminal vertex other than the reference."""
    return _system(graph, reference, profile, with_paths=True, with_cycles=False)


def union_system(graph: Graph, reference=None, profile: Optional[DistanceProfile] = None,
                 allow_empty: bool = False) -> ContourSystem:
    """
    The union matrix U with W stacked over N. Raises ``EmptySystem`` when U
    has no rows (a single vertex) unless ``allow_empty`` is set.
    """
    system = _system(graph, reference, profile, with_paths=True, with_cycles=True)
    if system.row_count == 0 and not allow_empty:
        raise EmptySystem(f"graph {graph.name or '<unnamed>'} has neither contours nor open contours")
    logger.debug(
        f"Contour system of {graph.name or '<unnamed>'}: "
        f"{system.path_count} paths, {system.cycle_count} cycles from vertex {system.reference}"
    )
    return system


def check_orthogonality(incidence: IncidenceMatrix, system: ContourSystem) -> bool:
    """True iff M * N^t = 0 over GF(2). Path rows are not cycles and take no part."""
    if incidence.matrix.shape[1] != system.cycles.shape[1] or incidence.branches != system.branches:
        raise DimensionMismatch(
            f"incidence matrix has {incidence.matrix.shape[1]} branches, contour matrix {system.cycles.shape[1]}"
        )
    product = incidence.matrix @ system.cycles.T
    return not np.any(product % 2)
