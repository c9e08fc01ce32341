from django.conf import settings
from rest_framework import serializers

from .analysis import SWEEP_COMPONENTS
from .canonical import canonical_form
from .graph import degree_partition


class BitsField(serializers.FloatField):
    """Float rounded to ``IE_FLOAT_PLACES`` decimals so reports are byte-stable."""

    def to_representation(self, value):
        places = getattr(settings, 'IE_FLOAT_PLACES', 9)
        return round(float(value), places) + 0.0


class IEVectorSerializer(serializers.Serializer):
    reference = serializers.CharField()
    reference_vertex = serializers.IntegerField()
    h11 = BitsField()
    h12 = BitsField()
    h1 = BitsField()
    h21 = BitsField()
    h22 = BitsField()
    h23 = BitsField()
    h2 = BitsField()
    amplitude = BitsField()
    phase = BitsField()


class CenterSerializer(serializers.Serializer):
    vertex = serializers.IntegerField()
    eccentricity = serializers.IntegerField()
    central = serializers.ListField(child=serializers.IntegerField())
    bicenter = serializers.BooleanField()


class GraphEstimateSerializer(serializers.Serializer):
    graph = serializers.CharField(source='graph.name')
    vertex_count = serializers.IntegerField(source='graph.vertex_count')
    branch_count = serializers.IntegerField(source='graph.branch_count')
    base_node = serializers.IntegerField(source='graph.base_node', allow_null=True)
    partition = serializers.ListField(child=serializers.IntegerField(), source='partition.parts')
    is_tree = serializers.BooleanField(source='partition.is_tree')
    center = CenterSerializer()
    center_label = serializers.SerializerMethodField()
    reference_label = serializers.SerializerMethodField()
    paths = serializers.IntegerField(source='system.path_count')
    cycles = serializers.IntegerField(source='system.cycle_count')
    ie = IEVectorSerializer()

    def get_center_label(self, estimate):
        return estimate.graph.label(estimate.center.vertex)

    def get_reference_label(self, estimate):
        return estimate.graph.label(estimate.ie.reference_vertex)


class RankingEntrySerializer(serializers.Serializer):
    rank = serializers.IntegerField()
    graph = serializers.CharField(source='graph_id')
    ie = IEVectorSerializer()


class SweepRowSerializer(serializers.Serializer):
    vertex = serializers.IntegerField()
    label = serializers.CharField()
    distance_to_center = serializers.IntegerField()
    ie = IEVectorSerializer()


class BaseNodeSweepSerializer(serializers.Serializer):
    graph = serializers.CharField(source='graph.name')
    center = CenterSerializer()
    center_label = serializers.SerializerMethodField()
    argmin = serializers.SerializerMethodField()
    minimizers = serializers.SerializerMethodField()
    distance_to_center = serializers.IntegerField()
    center_attains_minimum = serializers.SerializerMethodField()
    rows = SweepRowSerializer(many=True)

    def get_center_label(self, sweep):
        return sweep.graph.label(sweep.center.vertex)

    def get_argmin(self, sweep):
        return {component: sweep.argmin(component) for component in SWEEP_COMPONENTS}

    def get_minimizers(self, sweep):
        return {component: sweep.minimizers(component) for component in SWEEP_COMPONENTS}

    def get_center_attains_minimum(self, sweep):
        return {component: sweep.center_attains_minimum(component) for component in SWEEP_COMPONENTS}


class VertexBoundsSerializer(serializers.Serializer):
    h11 = BitsField()
    h12 = BitsField()
    h1 = BitsField()
    degree = BitsField()


class ContourBoundsSerializer(serializers.Serializer):
    h21 = BitsField()
    h22 = BitsField()
    h23 = BitsField()
    h2 = BitsField()


class ComponentGapSerializer(serializers.Serializer):
    component = serializers.CharField()
    achieved = BitsField()
    bound = BitsField()
    gap = BitsField()


class SensitivitySerializer(serializers.Serializer):
    scenario = serializers.CharField()
    value = BitsField()
    parameters = serializers.DictField(child=serializers.IntegerField())
    interpretation = serializers.CharField()


class ExtremalReportSerializer(serializers.Serializer):
    vertex_count = serializers.IntegerField()
    branch_count = serializers.IntegerField()
    row_count = serializers.IntegerField()
    max_contour_vertices = serializers.IntegerField()
    vertex = VertexBoundsSerializer(allow_null=True)
    contour = ContourBoundsSerializer(allow_null=True)
    h1_bound = BitsField()
    h2_bound = BitsField()
    contour_dominates = serializers.BooleanField()
    gaps = ComponentGapSerializer(many=True)
    sensitivities = SensitivitySerializer(many=True)
    notes = serializers.ListField(child=serializers.CharField())


class CollisionSerializer(serializers.Serializer):
    first = serializers.IntegerField()
    second = serializers.IntegerField()
    first_certificate = serializers.CharField()
    second_certificate = serializers.CharField()


class DistinctnessReportSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    tree_count = serializers.IntegerField()
    partition_count = serializers.IntegerField()
    distinct_count = serializers.IntegerField()
    all_distinct = serializers.BooleanField()
    collisions = CollisionSerializer(many=True)
    vectors = IEVectorSerializer(many=True)


class SweepExceptionSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    graph = serializers.CharField(source='graph.name')
    central = serializers.ListField(child=serializers.IntegerField())
    minimizers = serializers.ListField(child=serializers.IntegerField())
    certificate = serializers.CharField()


class CenterMinimalityReportSerializer(serializers.Serializer):
    max_order = serializers.IntegerField()
    total = serializers.IntegerField()
    hits = serializers.DictField(child=serializers.IntegerField())
    rates = serializers.SerializerMethodField()
    exceptions = SweepExceptionSerializer(many=True)

    def get_rates(self, report):
        places = getattr(settings, 'IE_FLOAT_PLACES', 9)
        return {component: round(report.rate(component), places) for component in report.hits}


class TreeSerializer(serializers.Serializer):
    graph = serializers.CharField(source='name')
    vertex_count = serializers.IntegerField()
    edges = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    partition = serializers.SerializerMethodField()
    certificate = serializers.SerializerMethodField()

    def get_partition(self, tree):
        return list(degree_partition(tree).parts)

    def get_certificate(self, tree):
        return canonical_form(tree).hex


class PlotPointSerializer(serializers.Serializer):
    x = serializers.IntegerField()
    h1 = BitsField()
    h2 = BitsField()
    amplitude = BitsField()
    phase = BitsField()
