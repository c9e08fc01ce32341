"""
Graph representation and structural validation.

A ``Graph`` is an immutable, undirected, simple and connected structure with
``vertex_count`` vertices (K) and an ordered tuple of branches (L). A marked
graph additionally carries a ``base_node`` (BN), for example the power source
of an electrical network.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import logging

import networkx as nx
import numpy as np
from django.utils.functional import cached_property

from .exceptions import (
    BadBaseNode,
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    GraphValidationError,
    SelfLoop,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    base_node: Optional[int] = None
    labels: Optional[Tuple[str, ...]] = None
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'edges', tuple((int(u), int(v)) for u, v in self.edges))
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(str(label) for label in self.labels))

    @classmethod
    def from_networkx(cls, nx_graph, name='', base_node=None):
        """Build a graph from any networkx graph, numbering nodes in iteration order."""
        nodes = list(nx_graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = tuple((index[u], index[v]) for u, v in nx_graph.edges)
        labels = tuple(str(node) for node in nodes)
        if base_node is not None:
            base_node = index[base_node]
        return cls(len(nodes), edges, base_node=base_node, labels=labels, name=name)

    @property
    def branch_count(self):
        return len(self.edges)

    @property
    def is_marked(self):
        return self.base_node is not None

    @property
    def branch_ids(self):
        return tuple(f"{u}-{v}" for u, v in self.edges)

    @cached_property
    def adjacency(self):
        neighbours = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(n) for n in neighbours)

    @cached_property
    def degrees(self):
        degrees = np.zeros(self.vertex_count, dtype=int)
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return degrees

    @cached_property
    def nx_graph(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def edge_index(self):
        """Column index of every branch, keyed by its unordered vertex pair."""
        return {frozenset(edge): j for j, edge in enumerate(self.edges)}

    @cached_property
    def center(self):
        from .metrics import find_center
        return find_center(self)

    def label(self, vertex):
        if self.labels is None:
            return str(vertex)
        return self.labels[vertex]

    def with_base_node(self, vertex):
        return Graph(self.vertex_count, self.edges, base_node=vertex, labels=self.labels, name=self.name)

    def without_base_node(self):
        return Graph(self.vertex_count, self.edges, labels=self.labels, name=self.name)

    def relabel(self, permutation: Sequence[int]):
        """Return the isomorphic graph in which vertex ``v`` becomes ``permutation[v]``."""
        if sorted(permutation) != list(range(self.vertex_count)):
            raise ValueError("permutation must be a rearrangement of the vertex indices")
        edges = tuple((permutation[u], permutation[v]) for u, v in self.edges)
        base_node = None if self.base_node is None else permutation[self.base_node]
        labels = None
        if self.labels is not None:
            relabelled = [''] * self.vertex_count
            for v, label in enumerate(self.labels):
                relabelled[permutation[v]] = label
            labels = tuple(relabelled)
        return Graph(self.vertex_count, edges, base_node=base_node, labels=labels, name=self.name)

    def validate(self):
        return validate_graph(self)

    def full_clean(self):
        """Raise the first validation error, if any; return the graph otherwise."""
        validate_graph(self).raise_first()
        return self


@dataclass
class ValidationResult:
    vertex_count: int
    branch_count: int
    degree_sum: int
    simple: bool
    connected: bool
    errors: List[GraphValidationError] = field(default_factory=list)

    @property
    def valid(self):
        return not self.errors

    def raise_first(self):
        if self.errors:
            raise self.errors[0]


def validate_graph(graph: Graph) -> ValidationResult:
    """
    Check the preconditions every information estimation relies on.

    The graph must be non-empty, simple (no self-loops or duplicate branches),
    reference only existing vertices, be connected and, when marked, carry a
    base node inside the vertex range. Each error names the first offending
    element.
    """
    errors = []
    k = graph.vertex_count

    if k < 1:
        errors.append(EmptyGraph("graph has no vertices", element=k))
    if graph.base_node is not None and not 0 <= graph.base_node < max(k, 0):
        errors.append(BadBaseNode(f"base node {graph.base_node} is outside 0..{k - 1}", element=graph.base_node))

    simple = True
    seen = set()
    for u, v in graph.edges:
        for vertex in (u, v):
            if not 0 <= vertex < k:
                errors.append(UnknownVertex(f"branch {u}-{v} references unknown vertex {vertex}", element=(u, v)))
                simple = False
                break
        else:
            if u == v:
                errors.append(SelfLoop(f"self-loop at vertex {u}", element=(u, v)))
                simple = False
                continue
            key = frozenset((u, v))
            if key in seen:
                errors.append(DuplicateEdge(f"duplicate branch {u}-{v}", element=(u, v)))
                simple = False
            seen.add(key)

    degree_sum = 2 * graph.branch_count
    connected = False
    if k >= 1 and simple:
        degree_sum = int(graph.degrees.sum())
        components = list(nx.connected_components(graph.nx_graph))
        connected = len(components) == 1
        if not connected:
            stray = min(min(c) for c in components if 0 not in c)
            errors.append(Disconnected(
                f"graph has {len(components)} components; vertex {stray} is unreachable from vertex 0",
                element=stray,
            ))

    if errors:
        logger.debug(f"Graph {graph.name or '<unnamed>'} rejected: {errors[0]}")
    return ValidationResult(
        vertex_count=k,
        branch_count=graph.branch_count,
        degree_sum=degree_sum,
        simple=simple,
        connected=connected,
        errors=errors,
    )


@dataclass(frozen=True)
class DegreePartition:
    """The degree multiset of a graph, read as a partition of 2L into K parts."""
    parts: Tuple[int, ...]
    vertex_count: int
    branch_count: int

    @property
    def total(self):
        return sum(self.parts)

    @property
    def is_tree(self):
        return self.branch_count == self.vertex_count - 1

    @property
    def is_graphic(self):
        return self.total == 2 * self.branch_count and (self.vertex_count == 1 or all(p > 0 for p in self.parts))


def degree_partition(graph: Graph) -> DegreePartition:
    parts = tuple(sorted((int(d) for d in graph.degrees), reverse=True))
    return DegreePartition(parts=parts, vertex_count=graph.vertex_count, branch_count=graph.branch_count)
