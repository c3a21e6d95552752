import io
import ujson as json
import networkx as nx
from rest_framework.parsers import BaseParser, JSONParser, ParseError

from .renderers import JSONRenderer


class UJSONParser (JSONParser):
    renderer_class = JSONRenderer

    def parse(self, stream, media_type=None, parser_context=None):
        encoding = (parser_context or {}).get('encoding', 'utf-8')
        try:
            return json.loads(stream.read().decode(encoding))
        except ValueError as exc:
            raise ParseError('JSON parse error - %s' % (exc,))


class SweepConfigParser (UJSONParser):
    def parse(self, stream, media_type=None, parser_context=None):
        data = super(SweepConfigParser, self).parse(stream, media_type, parser_context)
        if not isinstance(data, dict):
            raise ParseError('Sweep config parse error - expected an object, not %s'
                             % (type(data).__name__,))
        return data


class GraphJSONParser (UJSONParser):
    """
    Reads the graph schema the graph command writes: ``vertices`` is a list
    (of word literals or anything else) and ``edges`` a list of
    ``[i, j]`` or ``[i, j, tag]`` index pairs into it. Vertices become the
    integers 0..n-1 with the listed value as the ``word`` attribute; an
    integer tag becomes the edge ``label`` and a string tag its ``kind``.
    """
    def parse(self, stream, media_type=None, parser_context=None):
        data = super(GraphJSONParser, self).parse(stream, media_type, parser_context)
        try:
            vertices, edges = data['vertices'], data['edges']
        except (KeyError, TypeError):
            raise ParseError('Graph parse error - "vertices" and "edges" are required')

        g = nx.Graph()
        for k, value in enumerate(vertices):
            g.add_node(k, word=value)
        for edge in edges:
            if len(edge) not in (2, 3):
                raise ParseError('Graph parse error - bad edge %r' % (edge,))
            u, v = edge[0], edge[1]
            if u not in g or v not in g:
                raise ParseError('Graph parse error - edge %r names a missing vertex' % (edge,))
            attrs = {}
            if len(edge) == 3:
                attrs['label' if isinstance(edge[2], int) else 'kind'] = edge[2]
            g.add_edge(u, v, **attrs)
        return g


class EdgeListParser (BaseParser):
    """
    Plain edge lists: one ``u v`` pair of 0-based integers per line. A line
    with a single integer adds an isolated vertex. Blank lines and ``#``
    comments are skipped.
    """
    media_type = 'text/plain'

    def parse(self, stream, media_type=None, parser_context=None):
        encoding = (parser_context or {}).get('encoding', 'utf-8')
        g = nx.Graph()
        for number, line in enumerate(stream.read().decode(encoding).splitlines(), 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 1 and parts[0].isdigit():
                g.add_node(int(parts[0]))
                continue
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError('Edge list parse error - line %d: %r' % (number, line))
            g.add_edge(int(parts[0]), int(parts[1]))
        return g


def read_graph(path):
    """
    Load a graph file, choosing the parser by extension: ``.json`` for the
    graph schema, anything else for an edge list.
    """
    parser = GraphJSONParser() if path.endswith('.json') else EdgeListParser()
    with open(path, 'rb') as f:
        return parser.parse(io.BytesIO(f.read()))
