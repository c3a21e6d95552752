"""
DjangoRestFramework serializers for the data the commands emit: check
reports, braid and Matsumoto graphs, word analyses, medians, and sweep
configs and reports.
"""
import ujson as json
from rest_framework import serializers

from .coxeter import resolve_system
from .exceptions import SystemSpecError
from .params import MAX_SWEEP_LENGTH, SWEEP_CONFIG_KEYS
from .sweeps import CHECKS, EXPORTS, MODES, RANDOM

import logging
log = logging.getLogger(__name__)


###############################################################################
#
# Checks and graphs
# -----------------
#

class CheckReportSerializer (serializers.Serializer):
    """
    Pass ``graph_stats`` in the context to merge the braid graph's vertex,
    edge, dimension, diameter and isometric dimension counts into ``stats``.
    """
    check = serializers.CharField()
    system = serializers.CharField(source='system_name')
    word = serializers.CharField(source='literal')
    status = serializers.CharField()
    witnesses = serializers.ListField(child=serializers.DictField())
    stats = serializers.SerializerMethodField()

    def get_stats(self, report):
        stats = dict(self.context.get('graph_stats') or {})
        stats.update(report.stats)
        return stats


class BraidGraphSerializer (serializers.Serializer):
    system = serializers.SerializerMethodField()
    vertices = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()
    shadowCenters = serializers.ListField(child=serializers.IntegerField(),
                                          source='shadow_centers')

    def get_system(self, bg):
        return str(bg.system)

    def get_vertices(self, bg):
        return [bg.system.format_word(w) for w in bg.vertices]

    def get_edges(self, bg):
        return [[u, v, label] for u, v, label in bg.edges]


class MatsumotoGraphSerializer (BraidGraphSerializer):
    shadowCenters = None

    def get_edges(self, mg):
        return [[u, v, kind] for u, v, kind in mg.edges]


class GraphSerializer (serializers.Serializer):
    """
    A plain networkx graph in the same schema, with vertices listed in
    sorted order and edges given by their positions in that list.
    """
    vertices = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()

    def get_vertices(self, g):
        return sorted(g)

    def get_edges(self, g):
        position = dict((v, k) for k, v in enumerate(sorted(g)))
        return sorted(sorted([position[u], position[v]]) for u, v in g.edges())


###############################################################################
#
# Analyses and medians
# --------------------
#

class GraphStatsSerializer (serializers.Serializer):
    vertices = serializers.IntegerField()
    edges = serializers.IntegerField()
    dim = serializers.IntegerField()
    diam = serializers.IntegerField()
    dimI = serializers.IntegerField(allow_null=True)
    median = serializers.BooleanField(allow_null=True)


class AnalysisSerializer (serializers.Serializer):
    system = serializers.CharField()
    word = serializers.CharField()
    reduced = serializers.BooleanField()
    witness = serializers.CharField(allow_null=True, required=False)
    reduced_form = serializers.CharField(allow_null=True, required=False)
    length = serializers.IntegerField()
    descents = serializers.ListField(child=serializers.IntegerField(), required=False)
    shadows = serializers.ListField(child=serializers.CharField(), required=False)
    class_shadows = serializers.ListField(child=serializers.CharField(), required=False)
    dimension = serializers.IntegerField(required=False)
    link = serializers.BooleanField(required=False)
    factorization = serializers.CharField(allow_null=True, required=False)
    signature = serializers.CharField(required=False)
    class_size = serializers.IntegerField(required=False)
    graph = GraphStatsSerializer(required=False)

    def to_representation(self, analysis):
        data = super(AnalysisSerializer, self).to_representation(analysis)
        # A non-reduced word has no class, so its analysis stops early.
        return dict((k, v) for k, v in data.items() if k in analysis)


class MedianSerializer (serializers.Serializer):
    system = serializers.CharField()
    words = serializers.ListField(child=serializers.CharField())
    majority = serializers.CharField()
    median = serializers.CharField(allow_null=True)
    signature = serializers.CharField(allow_null=True)


###############################################################################
#
# Sweeps
# ------
#

class SweepCapsSerializer (serializers.Serializer):
    triples = serializers.IntegerField(min_value=1, required=False)
    median_samples = serializers.IntegerField(min_value=1, required=False)
    cycles = serializers.IntegerField(min_value=1, required=False)


class SweepConfigSerializer (serializers.Serializer):
    """
    Validates a sweep config file. ``L`` is required in every mode; random
    mode also reads ``seed`` and ``count``.
    """
    system = serializers.CharField()
    mode = serializers.ChoiceField(choices=MODES, default='exhaustive')
    L = serializers.IntegerField(min_value=0)
    seed = serializers.IntegerField(min_value=0, default=0)
    count = serializers.IntegerField(min_value=1, required=False)
    checks = serializers.ListField(child=serializers.ChoiceField(choices=sorted(CHECKS)),
                                   default=list)
    caps = SweepCapsSerializer(required=False)
    min_dimension = serializers.IntegerField(min_value=0, default=0)
    links_only = serializers.BooleanField(default=False)
    explore = serializers.BooleanField(required=False)
    exports = serializers.ListField(child=serializers.ChoiceField(choices=EXPORTS), default=list)

    def to_internal_value(self, data):
        if isinstance(data, dict):
            unknown = sorted(set(data) - set(SWEEP_CONFIG_KEYS))
            if unknown:
                raise serializers.ValidationError(
                    dict((key, ['Unknown sweep config key.']) for key in unknown))
        return super(SweepConfigSerializer, self).to_internal_value(data)

    def validate_system(self, value):
        try:
            resolve_system(value)
        except SystemSpecError as e:
            raise serializers.ValidationError(str(e))
        return value

    def validate_L(self, value):
        if value > MAX_SWEEP_LENGTH():
            raise serializers.ValidationError(
                'L may be at most %d (COXBRAID_MAX_SWEEP_LENGTH).' % MAX_SWEEP_LENGTH())
        return value

    def validate(self, attrs):
        if 'count' in attrs and attrs['mode'] != RANDOM:
            raise serializers.ValidationError({'count': ['count only applies to random mode.']})
        if len(set(attrs['checks'])) != len(attrs['checks']):
            raise serializers.ValidationError({'checks': ['Checks may not repeat.']})
        return attrs


class SweepReportSerializer (serializers.Serializer):
    config = serializers.DictField()
    caps = serializers.DictField(child=serializers.IntegerField())
    instance_count = serializers.IntegerField()
    totals = serializers.DictField(child=serializers.DictField(child=serializers.IntegerField()))
    counterexamples = serializers.ListField(child=serializers.DictField())
    instances = serializers.ListField(child=serializers.DictField())


class SweepRowSerializer (serializers.Serializer):
    word = serializers.CharField()
    length = serializers.IntegerField()
    dimension = serializers.IntegerField()
    class_size = serializers.IntegerField()
    link = serializers.BooleanField()
    check = serializers.CharField()
    status = serializers.CharField()
    detail = serializers.CharField()


def sweep_rows(report):
    """
    Flatten a sweep report into one row per instance and check, with the
    check's details as a JSON string. Instances with no checks get one
    ``sanity`` row.
    """
    rows = []
    for result in report.instances:
        base = dict((key, result[key]) for key in ('word', 'length', 'dimension', 'class_size',
                                                   'link'))
        outcomes = sorted(result['checks'].items()) or [('sanity', {'status': 'pass'})]
        for name, outcome in outcomes:
            detail = dict((k, v) for k, v in outcome.items() if k != 'status')
            row = dict(base, check=name, status=outcome['status'],
                       detail=json.dumps(detail, sort_keys=True))
            rows.append(row)
    return rows
