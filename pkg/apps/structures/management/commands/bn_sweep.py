from ...analysis import bn_sweep
from ...choices import Reference
from ...exceptions import InvalidParameter
from ...parsers import read_graph
from ...serializers import BaseNodeSweepSerializer
from ..base import IE_HEADER, StructureCommand, ie_cells


class Command(StructureCommand):
    help = 'Places the base node at every vertex in turn and reports the marked IE of each placement'
    serializer_class = BaseNodeSweepSerializer
    header = ('vertex', 'label', 'distance_to_center') + IE_HEADER

    def add_input_arguments(self, parser):
        parser.add_argument('path', help='Edge-list or DOT file')

    def compute(self, path, reference=None, eps_variant=None, h21_normalization=None, tolerance=None, **options):
        if reference not in (None, Reference.BN):
            raise InvalidParameter("a base node sweep always measures from the placed base node", parameter='reference')
        return bn_sweep(read_graph(path), eps_variant, h21_normalization, tolerance)

    def rows(self, sweep):
        return [[row.vertex, row.label, row.distance_to_center] + ie_cells(row.ie) for row in sweep.rows]

    def summary(self, sweep):
        argmin, center = sweep.argmin(), sweep.center.vertex
        return (
            f"amplitude minimum at vertex {argmin} ({sweep.graph.label(argmin)}), "
            f"center {center} ({sweep.graph.label(center)}), distance {sweep.distance_to_center}"
        )
