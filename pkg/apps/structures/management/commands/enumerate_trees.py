from functools import partial

from django.conf import settings

from ...analysis import (
    SWEEP_COMPONENTS,
    center_minimality_experiment,
    distinct_partitions,
    distinctness_experiment,
    enumerate_trees,
    parallel_map,
    plot_rows,
)
from ...choices import Reference
from ...entropy import ie_vector
from ...exceptions import InvalidParameter
from ...graph import degree_partition
from ...serializers import (
    CenterMinimalityReportSerializer,
    DistinctnessReportSerializer,
    PlotPointSerializer,
    TreeSerializer,
)
from ..base import IE_HEADER, StructureCommand, ie_cells

PLOT_FIELDS = ('x', 'h1', 'h2', 'amplitude', 'phase')


class Command(StructureCommand):
    help = 'Enumerates the free trees on N vertices and runs the tree experiments'
    header = ('graph', 'partition', 'edges')

    def add_input_arguments(self, parser):
        parser.add_argument('order', type=int, help='Number of vertices N')
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument(
            '--distinctness', action='store_true',
            help='Check that the center-referenced IE vectors of the trees are pairwise distinct',
        )
        mode.add_argument(
            '--center-check', action='store_true',
            help='Sweep the base node over every tree of 2..N vertices and count central minima',
        )
        mode.add_argument(
            '--plot-data', action='store_true',
            help='Emit (x, H1, H2, amplitude, phase) rows for plotting',
        )

    def compute(self, order, distinctness=False, center_check=False, plot_data=False, tolerance=None,
                reference=None, eps_variant=None, h21_normalization=None, **options):
        max_order = getattr(settings, 'IE_MAX_ORDER', 12)
        # sweeps measure from the placed base node, the other modes from the center of an unmarked tree
        expected = Reference.BN if center_check else Reference.CENTER
        if reference not in (None, expected):
            raise InvalidParameter(f"this mode only supports --reference {expected}", parameter='reference')
        if distinctness:
            self.mode = 'distinctness'
            return distinctness_experiment(
                order,
                tolerance=tolerance,
                workers=self.workers,
                max_order=getattr(settings, 'IE_MAX_DISTINCTNESS_ORDER', 10),
                eps_variant=eps_variant,
                h21_normalization=h21_normalization,
            )
        if center_check:
            self.mode = 'center_check'
            return center_minimality_experiment(
                max_order=order,
                tolerance=tolerance,
                workers=self.workers,
                eps_variant=eps_variant,
                h21_normalization=h21_normalization,
            )

        trees = enumerate_trees(order, max_order=max_order)
        if plot_data:
            self.mode = 'plot_data'
            compute = partial(
                ie_vector, reference=Reference.CENTER, eps_variant=eps_variant, h21_normalization=h21_normalization,
            )
            vectors = parallel_map(compute, trees, self.workers)
            return [dict(zip(PLOT_FIELDS, row)) for row in plot_rows(vectors)]
        self.mode = 'trees'
        return trees

    def serialize(self, result):
        if self.mode == 'distinctness':
            return DistinctnessReportSerializer(result).data
        if self.mode == 'center_check':
            return CenterMinimalityReportSerializer(result).data
        if self.mode == 'plot_data':
            return PlotPointSerializer(result, many=True).data
        return TreeSerializer(result, many=True).data

    def emit(self, result, output_format):
        self.header = {
            'distinctness': ('graph',) + IE_HEADER,
            'center_check': ('component', 'hits', 'total', 'rate'),
            'plot_data': PLOT_FIELDS,
            'trees': ('graph', 'partition', 'edges'),
        }[self.mode]
        super().emit(result, output_format)

    def rows(self, result):
        if self.mode == 'distinctness':
            return [[tree.name] + ie_cells(vector) for tree, vector in zip(result.trees, result.vectors)]
        if self.mode == 'center_check':
            return [
                [component, result.hits[component], result.total, result.rate(component)]
                for component in SWEEP_COMPONENTS
            ]
        if self.mode == 'plot_data':
            return [[point[name] for name in PLOT_FIELDS] for point in result]
        return [
            [tree.name, degree_partition(tree).parts, ' '.join(f"{u}-{v}" for u, v in tree.edges)]
            for tree in result
        ]

    def summary(self, result):
        if self.mode == 'distinctness':
            return (
                f"{result.tree_count} trees, {result.partition_count} partitions, "
                f"{result.distinct_count} distinct IE vectors"
            )
        if self.mode == 'center_check':
            return (
                f"{result.total} trees, amplitude minimum at a central vertex in "
                f"{result.hits['amplitude']}, {len(result.exceptions)} exceptions"
            )
        if self.mode == 'trees':
            return f"{len(result)} trees, {distinct_partitions(result)} partitions"
        return ''
