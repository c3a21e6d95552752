from ...braids import braid_graph
from ...checks import observing
from ...coxeter import find_repeat, is_triangle_free, reduce, right_descents
from ...exceptions import GraphTooLarge, OutsideHypotheses
from ...graphs import is_median_graph, is_partial_cube, theta_classes
from ...links import is_link, link_factorization, shadows, signature
from ...serializers import AnalysisSerializer
from ..base import BraidCommand

import logging
log = logging.getLogger(__name__)


def analyze_word(system, w, budget=None, explore=None):
    """
    Everything the analyze command reports about one word, as a dict.
    """
    analysis = {
        'system': str(system),
        'word': system.format_word(w),
        'reduced': True,
        'length': len(w),
    }
    repeat = find_repeat(system, w, budget)
    if repeat is not None:
        word, i = repeat
        analysis['reduced'] = False
        analysis['witness'] = '%s repeats a letter at positions %d and %d' % (
            system.format_word(word), i, i + 1)
        analysis['reduced_form'] = system.format_word(reduce(system, w, budget))
        return analysis

    bg = braid_graph(system, w, budget, assume_reduced=True)
    bclass = bg.braid_class
    analysis['descents'] = sorted(right_descents(system, w, budget=budget))
    analysis['shadows'] = [str(s) for s in sorted(shadows(system, w))]
    analysis['class_shadows'] = ['[%d,%d]' % (c - 1, c + 1) for c in bclass.centers]
    analysis['dimension'] = bclass.dimension
    analysis['link'] = bool(w) and is_link(system, w, bclass=bclass)
    analysis['factorization'] = None
    if w:
        try:
            analysis['factorization'] = str(link_factorization(system, w, bclass=bclass))
        except OutsideHypotheses as e:
            log.warning('%s', e)
    analysis['signature'] = str(signature(system, w, bclass=bclass))
    analysis['class_size'] = len(bclass)
    analysis['graph'] = graph_summary(system, bg, explore)
    return analysis


def graph_summary(system, bg, explore=None):
    metric = bg.metric
    summary = {
        'vertices': len(bg),
        'edges': bg.graph.number_of_edges(),
        'dim': bg.dimension,
        'diam': metric.diameter,
        'dimI': None,
        'median': None,
    }
    if not is_triangle_free(system):
        try:
            observing(system, 'the dim_I and median checks', explore)
        except OutsideHypotheses as e:
            log.warning('%s', e)
            return summary

    if is_partial_cube(bg.graph, metric).result:
        summary['dimI'] = theta_classes(bg.graph, metric).count
    try:
        summary['median'] = is_median_graph(bg.graph, metric=metric).result
    except GraphTooLarge as e:
        log.warning('%s', e)
    return summary


class Command (BraidCommand):
    help = 'Report the shadows, dimension, link factorization, signature and braid graph of a word.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--word', required=True, help='Word literal, e.g. 4341232 or 1,10,2.')

    def run(self, **options):
        system = self.get_system(options)
        w = system.parse_word(options['word'])
        analysis = analyze_word(system, w, options['budget'], options['explore'])
        data = AnalysisSerializer(analysis).data
        self.emit(self.render(data, options), options)
