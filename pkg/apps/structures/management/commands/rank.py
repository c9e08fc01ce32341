from functools import partial

from ...analysis import parallel_map, rank_vectors
from ...entropy import ie_vector
from ...serializers import RankingEntrySerializer
from ..base import IE_HEADER, StructureCommand, attempt, ie_cells


class Command(StructureCommand):
    help = (
        'Ranks structures by preference: descending amplitude, then phase, then H1. '
        'Ties are decided on values rounded to IE_FLOAT_PLACES decimals; --tolerance does not apply.'
    )
    serializer_class = RankingEntrySerializer
    many = True
    header = ('rank', 'graph') + IE_HEADER

    def add_input_arguments(self, parser):
        parser.add_argument('paths', nargs='+', help='Edge-list or DOT files')

    def compute(self, paths, reference=None, eps_variant=None, h21_normalization=None, **options):
        graphs = self.read_batch(paths)
        estimate = partial(ie_vector, reference=reference, eps_variant=eps_variant, h21_normalization=h21_normalization)
        scored = []
        for graph, (vector, error) in zip(graphs, parallel_map(partial(attempt, estimate), graphs, self.workers)):
            if error:
                self.failures.append((graph.name, error))
            else:
                scored.append((graph, vector))
        return rank_vectors(scored, places=self.places)

    def rows(self, entries):
        return [[entry.rank, entry.graph_id] + ie_cells(entry.ie) for entry in entries]
