import io

import numpy as np
from django.test import SimpleTestCase

from ..choices import Reference
from ..cycles import (
    build_incidence,
    check_orthogonality,
    fundamental_cycles,
    open_contours,
    union_system,
)
from ..exceptions import DimensionMismatch, EmptySystem
from ..graph import Graph
from .graphs import complete, cycle, path, random_graphs, single_vertex, star


class OrthogonalityTest(SimpleTestCase):
    """Incidence and contour matrices are orthogonal over GF(2)"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.graphs = random_graphs(1000, seed=2024)

    def test_random_suite(self):
        """M * N^t vanishes mod 2 for a thousand random connected graphs"""
        failures = [
            graph for graph in self.graphs
            if not check_orthogonality(build_incidence(graph), fundamental_cycles(graph))
        ]
        self.assertEqual(failures, [])

    def test_cycle_count_is_cyclomatic_number(self):
        """N has L - K + 1 rows"""
        for graph in self.graphs[:200]:
            system = fundamental_cycles(graph)
            self.assertEqual(system.cycle_count, graph.branch_count - graph.vertex_count + 1)

    def test_complexity_and_frequency_totals_agree(self):
        """Summing U by rows or by columns counts the same ones"""
        for graph in self.graphs[:200]:
            system = union_system(graph)
            self.assertEqual(system.complexities.sum(), system.frequencies.sum())

    def test_cycle_rows_close(self):
        """Every vertex of a contour touches an even number of its branches"""
        for graph in self.graphs[:100]:
            incidence = build_incidence(graph, basic_vertex=0)
            for row in fundamental_cycles(graph).cycles:
                self.assertFalse(np.any((incidence.matrix @ row) % 2))

    def test_dimension_mismatch(self):
        """Matrices over different branch sets are refused"""
        with self.assertRaises(DimensionMismatch):
            check_orthogonality(build_incidence(cycle(4)), fundamental_cycles(cycle(5)))


class ContourSystemTest(SimpleTestCase):
    """Rows of the path, contour and union matrices"""

    def test_cycle_graph_has_one_full_contour(self):
        """A cycle graph has one contour over every branch"""
        system = union_system(cycle(5))
        self.assertEqual(system.path_count, 0)
        self.assertEqual(system.cycle_count, 1)
        self.assertEqual(system.union.tolist(), [[1, 1, 1, 1, 1]])
        self.assertEqual(system.vertex_counts.tolist(), [5])

    def test_complete_graph_contours(self):
        """K4 has three triangular contours"""
        system = fundamental_cycles(complete(4))
        self.assertEqual(system.cycle_count, 3)
        # breadth-first tree from the center: every contour is a triangle
        self.assertEqual(system.complexities.tolist(), [3, 3, 3])

    def test_star_paths_from_hub(self):
        """A star has one open contour per leaf"""
        system = open_contours(star(3))
        self.assertEqual(system.reference, 0)
        self.assertEqual(system.path_count, 3)
        self.assertEqual(system.complexities.tolist(), [1, 1, 1])
        self.assertEqual(system.frequencies.tolist(), [1, 1, 1])

    def test_paths_from_leaf_base_node(self):
        """The reference is not a terminal of its own open contours"""
        system = union_system(path(3).with_base_node(0))
        self.assertEqual(system.reference, 0)
        self.assertEqual(system.path_count, 1)
        self.assertEqual(system.union.tolist(), [[1, 1]])
        self.assertEqual(system.vertex_counts.tolist(), [3])

    def test_center_reference_can_override_base_node(self):
        """Contours can be rooted at the center of a marked graph"""
        system = union_system(path(3).with_base_node(0), Reference.CENTER)
        self.assertEqual(system.reference, 1)
        self.assertEqual(system.path_count, 2)

    def test_union_stacks_paths_over_cycles(self):
        """U is W stacked over N"""
        # triangle with a pendant vertex
        graph = Graph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))
        system = union_system(graph)
        self.assertEqual(system.row_count, 2)
        self.assertEqual(system.union.shape, (2, 4))
        np.testing.assert_array_equal(system.union[0], system.paths[0])
        np.testing.assert_array_equal(system.union[1], system.cycles[0])

    def test_single_vertex_has_no_rows(self):
        """K1 has an empty system unless rows are required"""
        with self.assertRaises(EmptySystem):
            union_system(single_vertex())
        self.assertEqual(union_system(single_vertex(), allow_empty=True).row_count, 0)

    def test_incidence_drops_basic_vertex(self):
        """The basic vertex's row is crossed out"""
        incidence = build_incidence(path(3), basic_vertex=1)
        self.assertEqual(incidence.vertices, (0, 2))
        self.assertEqual(incidence.matrix.tolist(), [[1, 0], [0, 1]])

    def test_csv_export(self):
        """Matrices are written with a branch id header"""
        stream = io.StringIO()
        union_system(cycle(3)).to_csv(stream)
        self.assertEqual(stream.getvalue(), '0-1,1-2,2-0\n1,1,1\n')

        stream = io.StringIO()
        build_incidence(cycle(3), basic_vertex=0).to_csv(stream)
        self.assertEqual(stream.getvalue(), '0-1,1-2,2-0\n1,1,0\n0,1,1\n')
