from functools import partial
from pathlib import Path
import logging

from ...analysis import estimate_graph, parallel_map
from ...cycles import build_incidence
from ...serializers import GraphEstimateSerializer
from ..base import IE_HEADER, StructureCommand, attempt, ie_cells

logger = logging.getLogger(__name__)


class Command(StructureCommand):
    help = 'Computes the information estimations (H1, H2, amplitude, phase) of every input graph'
    serializer_class = GraphEstimateSerializer
    many = True
    header = ('graph', 'K', 'L', 'reference', 'reference_vertex', 'center', 'center_label') + IE_HEADER

    def add_input_arguments(self, parser):
        parser.add_argument('paths', nargs='+', help='Edge-list or DOT files')
        parser.add_argument(
            '--export-matrices', metavar='DIR', default=None,
            help='Write the incidence and union matrices of every graph as CSV into DIR',
        )

    def compute(self, paths, reference=None, eps_variant=None, h21_normalization=None,
                export_matrices=None, **options):
        graphs = self.read_batch(paths)
        estimate = partial(
            estimate_graph, reference=reference, eps_variant=eps_variant, h21_normalization=h21_normalization,
        )
        estimates = []
        for graph, (result, error) in zip(graphs, parallel_map(partial(attempt, estimate), graphs, self.workers)):
            if error:
                self.failures.append((graph.name, error))
            else:
                estimates.append(result)
        if export_matrices:
            self.export(estimates, Path(export_matrices))
        return estimates

    def export(self, estimates, directory):
        directory.mkdir(parents=True, exist_ok=True)
        for estimate in estimates:
            name = estimate.graph.name or 'graph'
            incidence = build_incidence(estimate.graph, estimate.ie.reference_vertex)
            with open(directory / f"{name}.incidence.csv", 'w', newline='') as stream:
                incidence.to_csv(stream)
            with open(directory / f"{name}.contours.csv", 'w', newline='') as stream:
                estimate.system.to_csv(stream)
            logger.debug(f"Exported matrices of {name} to {directory}")

    def rows(self, estimates):
        return [
            [
                estimate.graph.name, estimate.graph.vertex_count, estimate.graph.branch_count,
                estimate.ie.reference, estimate.ie.reference_vertex, estimate.center.vertex,
                estimate.graph.label(estimate.center.vertex),
            ] + ie_cells(estimate.ie)
            for estimate in estimates
        ]
