"""
Canonical labeling of small graphs.

Color refinement seeded with (marked, degree) followed by an
individualization search. At every search node the first smallest
non-singleton cell is split; vertices that are twins of an already explored
vertex are skipped since swapping twins is an automorphism. The certificate
is the least packed upper triangle of the relabelled adjacency matrix over
all leaves, so two graphs are isomorphic iff their certificates are equal.
"""
from dataclasses import dataclass
from typing import Optional, Tuple
import logging

import numpy as np

from .exceptions import TooLarge
from .graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 12


@dataclass(frozen=True)
class CanonicalLabeling:
    certificate: bytes
    # order[i] is the original vertex placed at canonical position i
    order: Tuple[int, ...]

    @property
    def rank(self):
        return {v: i for i, v in enumerate(self.order)}


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes

    @property
    def hex(self):
        return self.certificate.hex()


def _refine(adjacency, colors):
    n = len(colors)
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in adjacency[v])))
            for v in range(n)
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [ranks[sig] for sig in signatures]
        if len(ranks) == cells:
            return colors
        cells = len(ranks)


def _twins(adjacency, u, v):
    return adjacency[u] - {v} == adjacency[v] - {u}


def _target_cell(colors):
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    _, color = min((s, c) for c, s in sizes.items() if s > 1)
    return [v for v, c in enumerate(colors) if c == color]


class _Search:
    def __init__(self, graph: Graph):
        self.adjacency = graph.adjacency
        self.matrix = adjacency_matrix(graph)
        self.upper = np.triu_indices(graph.vertex_count, 1)
        self.header = bytes([graph.vertex_count % 256])
        self.best = None
        self.best_order = None
        self.leaves = 0

    def leaf(self, colors):
        order = sorted(range(len(colors)), key=colors.__getitem__)
        permuted = self.matrix[np.ix_(order, order)]
        certificate = self.header + np.packbits(permuted[self.upper]).tobytes()
        self.leaves += 1
        if self.best is None or certificate < self.best:
            self.best = certificate
            self.best_order = tuple(order)

    def run(self, colors):
        colors = _refine(self.adjacency, colors)
        if len(set(colors)) == len(colors):
            self.leaf(colors)
            return
        tried = []
        for v in _target_cell(colors):
            if any(_twins(self.adjacency, v, u) for u in tried):
                continue
            tried.append(v)
            individualized = [2 * c + 1 for c in colors]
            individualized[v] = 2 * colors[v]
            self.run(individualized)


def adjacency_matrix(graph: Graph):
    matrix = np.zeros((graph.vertex_count, graph.vertex_count), dtype=np.uint8)
    for u, v in graph.edges:
        matrix[u, v] = matrix[v, u] = 1
    return matrix


def canonical_labeling(graph: Graph, marked: Optional[int] = None) -> CanonicalLabeling:
    """
    Compute a canonical labeling, optionally treating ``marked`` as a
    distinguished vertex. A marked vertex always lands at canonical position 0.
    """
    if graph.vertex_count == 1:
        return CanonicalLabeling(certificate=bytes([1, int(marked is not None)]), order=(0,))
    degrees = graph.degrees
    colors = [(0 if v == marked else 1, int(degrees[v])) for v in range(graph.vertex_count)]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    search = _Search(graph)
    search.run([ranks[c] for c in colors])
    logger.debug(f"Canonical labeling of {graph.vertex_count} vertices explored {search.leaves} leaves")
    flag = bytes([int(marked is not None)])
    return CanonicalLabeling(certificate=search.best[:1] + flag + search.best[1:], order=search.best_order)


def canonical_form(graph: Graph, max_order: int = DEFAULT_MAX_ORDER) -> CanonicalForm:
    """Certificate of the graph; a base node, when set, is part of the structure."""
    if graph.vertex_count > max_order:
        raise TooLarge(
            f"canonical form is limited to {max_order} vertices, got {graph.vertex_count}",
            parameter='vertex_count',
        )
    return CanonicalForm(certificate=canonical_labeling(graph, marked=graph.base_node).certificate)
