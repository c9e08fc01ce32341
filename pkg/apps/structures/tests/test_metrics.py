import random

import networkx as nx
from django.test import SimpleTestCase

from ..choices import EpsVariant, Reference
from ..exceptions import NoBaseNode
from ..graph import Graph
from ..metrics import all_pairs_distances, find_center, remoteness, resolve_reference
from .graphs import cycle, path, random_graphs, shuffled, star


class DistanceProfileTest(SimpleTestCase):
    """Hop distances, eccentricities and distance sums"""

    def test_path_distances(self):
        """Distances, eccentricities and sums of P4 match a hand count"""
        profile = all_pairs_distances(path(4))
        self.assertEqual(profile.distances[0].tolist(), [0, 1, 2, 3])
        self.assertEqual(profile.eccentricities.tolist(), [3, 2, 2, 3])
        self.assertEqual(profile.distance_sums.tolist(), [6, 4, 4, 6])
        self.assertEqual(profile.radius, 2)
        self.assertEqual(profile.diameter, 3)

    def test_distances_are_symmetric(self):
        """d(u, v) = d(v, u) with a zero diagonal"""
        for graph in random_graphs(20, seed=3):
            distances = all_pairs_distances(graph).distances
            self.assertTrue((distances == distances.T).all())
            self.assertFalse(distances.diagonal().any())

    def test_rows_match_single_source_search(self):
        """Every row equals a breadth-first search run from that vertex alone"""
        for graph in random_graphs(20, seed=5):
            distances = all_pairs_distances(graph).distances
            for source in range(graph.vertex_count):
                lengths = nx.single_source_shortest_path_length(graph.nx_graph, source)
                self.assertEqual(distances[source].tolist(), [lengths[v] for v in range(graph.vertex_count)])

    def test_triangle_inequality(self):
        """d(u, w) <= d(u, v) + d(v, w) for every triple"""
        for graph in random_graphs(15, seed=9, max_order=9):
            distances = all_pairs_distances(graph).distances
            via = (distances[:, :, None] + distances[None, :, :]).min(axis=1)
            self.assertTrue((distances <= via).all())


class CenterTest(SimpleTestCase):
    """Center selection and its tie-breaks"""

    def test_bicenter_of_p4_picks_lower_index(self):
        """Both central vertices of P4 are automorphic, so the lower index wins"""
        center = find_center(path(4))
        self.assertEqual(center.vertex, 1)
        self.assertEqual(center.central, (1, 2))
        self.assertTrue(center.bicenter)
        self.assertEqual(center.eccentricity, 2)

    def test_unique_center(self):
        """P5 has a single center in the middle"""
        center = find_center(path(5))
        self.assertEqual(center.vertex, 2)
        self.assertFalse(center.bicenter)

    def test_star_center_is_hub(self):
        """The hub of a star is its center"""
        self.assertEqual(find_center(star(4)).vertex, 0)

    def test_vertex_transitive_graph(self):
        """On C6 every vertex is central and the lowest index is chosen"""
        center = find_center(cycle(6))
        self.assertEqual(center.vertex, 0)
        self.assertEqual(len(center.central), 6)

    def test_distance_sum_breaks_eccentricity_tie(self):
        """Among vertices of minimum eccentricity the smaller distance sum wins"""
        # P4 with two extra leaves on vertex 1
        graph = Graph(6, ((0, 1), (1, 2), (2, 3), (1, 4), (1, 5)))
        center = find_center(graph)
        self.assertEqual(center.central, (1, 2))
        self.assertEqual(center.vertex, 1)
        self.assertTrue(center.bicenter)

    def test_center_follows_relabeling(self):
        """The center of a relabelled graph is the image of the original center"""
        rng = random.Random(7)
        for graph in random_graphs(30, seed=11):
            permutation = list(range(graph.vertex_count))
            rng.shuffle(permutation)
            original = find_center(graph)
            relabelled = find_center(graph.relabel(permutation))
            self.assertEqual(relabelled.eccentricity, original.eccentricity)
            self.assertEqual(
                all_pairs_distances(graph).distance_sums[original.vertex],
                all_pairs_distances(graph.relabel(permutation)).distance_sums[relabelled.vertex],
            )

    def test_center_is_cached_on_graph(self):
        """Graph.center is computed once"""
        graph = shuffled(path(7), random.Random(1))
        self.assertIs(graph.center, graph.center)


class ReferenceTest(SimpleTestCase):
    """Reference vertex resolution and remoteness weights"""

    def test_unmarked_graph_uses_center(self):
        """Without a base node the center is the reference"""
        self.assertEqual(resolve_reference(path(5)), (Reference.CENTER, 2))

    def test_marked_graph_uses_base_node(self):
        """A marked graph is measured from its base node by default"""
        self.assertEqual(resolve_reference(path(5).with_base_node(0)), (Reference.BN, 0))

    def test_center_can_be_forced_on_marked_graph(self):
        """An explicit center reference overrides the base node"""
        self.assertEqual(resolve_reference(path(5).with_base_node(0), Reference.CENTER), (Reference.CENTER, 2))

    def test_bn_reference_requires_base_node(self):
        """Asking for the base node of an unmarked graph fails"""
        with self.assertRaises(NoBaseNode):
            resolve_reference(path(3), Reference.BN)

    def test_remoteness_from_center(self):
        """Weights are the center eccentricity plus the distance to the center"""
        graph = path(3)
        weights = remoteness(graph, all_pairs_distances(graph))
        self.assertEqual(weights.tolist(), [2, 1, 2])

    def test_remoteness_per_vertex_eccentricity(self):
        """The per-vertex variant uses every vertex's own eccentricity"""
        graph = path(3)
        weights = remoteness(graph, all_pairs_distances(graph), eps_variant=EpsVariant.PER_VERTEX)
        self.assertEqual(weights.tolist(), [3, 1, 3])

    def test_remoteness_from_leaf_base_node(self):
        """A leaf base node shifts every weight by its eccentricity"""
        graph = path(3).with_base_node(0)
        weights = remoteness(graph, all_pairs_distances(graph), Reference.BN)
        self.assertEqual(weights.tolist(), [2, 3, 4])
