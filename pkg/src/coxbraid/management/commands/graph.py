from ...braids import braid_graph, matsumoto_graph
from ...params import BRAID_GRAPH, DOT_FORMAT, JSON_FORMAT, MATSUMOTO_GRAPH
from ...renderers import DOTRenderer, JSONRenderer
from ...serializers import BraidGraphSerializer, MatsumotoGraphSerializer
from ..base import BraidCommand

import logging
log = logging.getLogger(__name__)


class Command (BraidCommand):
    help = 'Write the braid graph of a word, or the Matsumoto graph of its element, as DOT or JSON.'
    formats = (DOT_FORMAT, JSON_FORMAT)

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--word', required=True)
        parser.add_argument('--kind', choices=(BRAID_GRAPH, MATSUMOTO_GRAPH), default=BRAID_GRAPH)

    def run(self, **options):
        system = self.get_system(options)
        w = system.parse_word(options['word'])

        if options['kind'] == MATSUMOTO_GRAPH:
            graph = matsumoto_graph(system, w, options['budget'])
            data = MatsumotoGraphSerializer(graph).data
            name = 'M(%s)' % (system.format_word(w) or 'e')
        else:
            graph = braid_graph(system, w, options['budget'])
            data = BraidGraphSerializer(graph).data
            name = 'B(%s)' % (system.format_word(graph.representative) or 'e')
        log.info('%s has %d vertices and %d edges', name, len(graph),
                 graph.graph.number_of_edges())

        renderer = DOTRenderer() if options['format'] == DOT_FORMAT else JSONRenderer()
        self.emit(renderer.render(data, renderer_context={'name': name}), options)
