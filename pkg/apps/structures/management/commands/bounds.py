from ...analysis import estimate_graph
from ...bounds import bound_audit
from ...parsers import read_graph
from ...serializers import ExtremalReportSerializer
from ..base import StructureCommand


class Command(StructureCommand):
    help = 'Compares the achieved IE components with their extremal estimates and evaluates the Lagrange sensitivities'
    serializer_class = ExtremalReportSerializer
    header = ('kind', 'name', 'achieved', 'bound', 'value')

    def add_input_arguments(self, parser):
        parser.add_argument('path', help='Edge-list or DOT file')

    def compute(self, path, reference=None, eps_variant=None, h21_normalization=None, **options):
        estimate = estimate_graph(read_graph(path), reference, eps_variant, h21_normalization)
        return bound_audit(estimate.graph, estimate.ie, estimate.system)

    def rows(self, report):
        rows = [['gap', gap.component, gap.achieved, gap.bound, gap.gap] for gap in report.gaps]
        rows += [['sensitivity', row.scenario, None, None, row.value] for row in report.sensitivities]
        return rows

    def summary(self, report):
        return f"H1 bound {report.h1_bound:.9f}, H2 bound {report.h2_bound:.9f}"
