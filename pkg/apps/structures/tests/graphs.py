"""
Graph builders shared by the test modules.
"""
from itertools import combinations
import random

import networkx as nx

from ..graph import Graph


def path(order):
    return Graph(order, tuple((i, i + 1) for i in range(order - 1)), name=f"P{order}")


def cycle(order):
    return Graph(order, tuple((i, (i + 1) % order) for i in range(order)), name=f"C{order}")


def star(leaves):
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)), name=f"S{leaves}")


def complete(order):
    return Graph(order, tuple(combinations(range(order), 2)), name=f"K{order}")


def single_vertex():
    return Graph(1, (), name='K1')


def random_connected(rng: random.Random, max_order=12, min_order=2):
    """A random spanning tree from a Prufer sequence plus a random number of chords."""
    order = rng.randint(min_order, max_order)
    tree = nx.from_prufer_sequence([rng.randrange(order) for _ in range(order - 2)])
    edges = {tuple(sorted(edge)) for edge in tree.edges}
    missing = [pair for pair in combinations(range(order), 2) if pair not in edges]
    edges.update(rng.sample(missing, rng.randint(0, min(len(missing), order))))
    edges = sorted(edges)
    rng.shuffle(edges)
    return Graph(order, tuple(edges), name=f"R{order}")


def random_graphs(count, seed=0, max_order=12):
    rng = random.Random(seed)
    return [random_connected(rng, max_order=max_order) for _ in range(count)]


def shuffled(graph: Graph, rng: random.Random):
    permutation = list(range(graph.vertex_count))
    rng.shuffle(permutation)
    return graph.relabel(permutation)
