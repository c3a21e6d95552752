import ujson as json
from rest_framework import renderers
from rest_framework_csv.renderers import CSVRenderer as BaseCSVRenderer


class JSONRenderer (renderers.JSONRenderer):
    """
    Indented JSON with keys in serializer order and a trailing newline, so
    identical inputs give byte-identical files.
    """
    indent = 2
    charset = 'utf-8'

    def render(self, data, accepted_media_type=None, renderer_context=None):
        if data is None:
            return b'null\n'
        text = json.dumps(data, indent=self.indent, ensure_ascii=False,
                          escape_forward_slashes=False)
        return (text + '\n').encode(self.charset)


class CSVRenderer (BaseCSVRenderer):
    """
    One row per sweep instance and check, columns in a fixed order.
    """
    header = ['word', 'length', 'dimension', 'class_size', 'link', 'check', 'status', 'detail']

    def render(self, data, media_type=None, renderer_context=None, writer_opts=None):
        content = super(CSVRenderer, self).render(data, media_type, renderer_context or {},
                                                  writer_opts)
        if isinstance(content, bytes):
            content = content.decode('utf-8')
        return content.encode('utf-8')


class DOTRenderer (renderers.BaseRenderer):
    """
    Renders serialized braid or Matsumoto graph data as an undirected
    Graphviz graph. Braid edges carry their shadow ordinal as ``label``;
    Matsumoto edges carry ``kind``. Set ``name`` in the renderer context to
    title the graph.
    """
    media_type = 'text/vnd.graphviz'
    format = 'dot'
    charset = 'utf-8'

    def render(self, data, accepted_media_type=None, renderer_context=None):
        name = (renderer_context or {}).get('name', 'G')
        lines = ['graph "%s" {' % name]
        for k, literal in enumerate(data['vertices']):
            lines.append('  %d [label="%s"];' % (k, literal))
        for u, v, tag in data['edges']:
            if isinstance(tag, int):
                lines.append('  %d -- %d [label=%d];' % (u, v, tag))
            else:
                lines.append('  %d -- %d [kind=%s];' % (u, v, tag))
        lines.append('}')
        return ('\n'.join(lines) + '\n').encode(self.charset)


class TextRenderer (renderers.BaseRenderer):
    """
    ``key: value`` lines for the analyze and median commands. Lists are
    comma separated and nested mappings become ``name=value`` pairs.
    """
    media_type = 'text/plain'
    format = 'text'
    charset = 'utf-8'

    def format_value(self, value):
        if value is None:
            return '-'
        if isinstance(value, bool):
            return 'yes' if value else 'no'
        if isinstance(value, dict):
            return ' '.join('%s=%s' % (k, self.format_value(v)) for k, v in value.items())
        if isinstance(value, (list, tuple)):
            return ', '.join(self.format_value(v) for v in value) if value else '(none)'
        return str(value)

    def render(self, data, accepted_media_type=None, renderer_context=None):
        lines = ['%s: %s' % (key, self.format_value(value)) for key, value in data.items()]
        return ('\n'.join(lines) + '\n').encode(self.charset)
