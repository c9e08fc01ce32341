from itertools import combinations
import random

from django.test import SimpleTestCase
import networkx as nx

from ..analysis import enumerate_trees
from ..canonical import canonical_form, canonical_labeling
from ..exceptions import TooLarge
from ..graph import Graph
from .graphs import complete, cycle, path, random_graphs, shuffled


class CanonicalFormTest(SimpleTestCase):
    """Certificates identify graphs up to isomorphism"""

    def test_relabelings_share_certificate(self):
        """Random relabellings keep the certificate"""
        rng = random.Random(5)
        for graph in random_graphs(40, seed=17, max_order=10):
            expected = canonical_form(graph).certificate
            for _ in range(5):
                self.assertEqual(canonical_form(shuffled(graph, rng)).certificate, expected)

    def test_certificate_agrees_with_isomorphism(self):
        """Equal certificates exactly when networkx finds an isomorphism"""
        graphs = random_graphs(40, seed=23, max_order=6)
        for a, b in combinations(graphs, 2):
            same = canonical_form(a).certificate == canonical_form(b).certificate
            self.assertEqual(same, nx.is_isomorphic(a.nx_graph, b.nx_graph))

    def test_free_trees_have_distinct_certificates(self):
        """The 23 trees on eight vertices get 23 certificates"""
        trees = enumerate_trees(8)
        self.assertEqual(len({canonical_form(tree).hex for tree in trees}), 23)

    def test_base_node_is_part_of_structure(self):
        """Marking a leaf and marking the middle of P3 give different certificates"""
        leaf = canonical_form(path(3).with_base_node(0))
        middle = canonical_form(path(3).with_base_node(1))
        unmarked = canonical_form(path(3))
        self.assertNotEqual(leaf.certificate, middle.certificate)
        self.assertNotEqual(leaf.certificate, unmarked.certificate)
        self.assertEqual(leaf.certificate, canonical_form(path(3).with_base_node(2)).certificate)

    def test_vertex_transitive_graphs(self):
        """Highly symmetric graphs keep their certificate"""
        for graph in (cycle(7), complete(6)):
            self.assertEqual(
                canonical_form(graph).certificate,
                canonical_form(shuffled(graph, random.Random(2))).certificate,
            )

    def test_order_limit(self):
        """Graphs above the order limit are refused unless it is raised"""
        with self.assertRaises(TooLarge):
            canonical_form(path(13))
        self.assertTrue(canonical_form(path(13), max_order=13).hex)


class CanonicalLabelingTest(SimpleTestCase):
    """Labeling order used to build contour systems"""

    def test_marked_vertex_comes_first(self):
        """The marked vertex gets canonical rank 0"""
        for marked in range(5):
            labeling = canonical_labeling(path(5), marked=marked)
            self.assertEqual(labeling.order[0], marked)

    def test_order_is_a_permutation(self):
        """The labeling order and rank are inverse permutations"""
        labeling = canonical_labeling(cycle(6))
        self.assertEqual(sorted(labeling.order), list(range(6)))
        self.assertEqual(labeling.rank[labeling.order[3]], 3)

    def test_order_reproduces_certificate(self):
        """Relabelling a graph by its canonical order yields the same certificate"""
        graph = random_graphs(1, seed=31, max_order=9)[0]
        labeling = canonical_labeling(graph)
        relabelled = graph.relabel([labeling.rank[v] for v in range(graph.vertex_count)])
        self.assertEqual(canonical_labeling(relabelled).certificate, labeling.certificate)

    def test_single_vertex(self):
        """K1 has a trivial labeling"""
        self.assertEqual(canonical_labeling(Graph(1, ())).order, (0,))
        self.assertNotEqual(
            canonical_labeling(Graph(1, ())).certificate,
            canonical_labeling(Graph(1, ()), marked=0).certificate,
        )
