import io
import os
import ujson as json
from django.test import SimpleTestCase
from rest_framework.parsers import ParseError

from ..parsers import EdgeListParser, GraphJSONParser, SweepConfigParser, read_graph
from ..renderers import CSVRenderer, DOTRenderer, JSONRenderer, TextRenderer


FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


def stream(text):
    return io.BytesIO(text.encode('utf-8'))


class TestEdgeListParser (SimpleTestCase):
    def test_edges_comments_and_isolated_vertices(self):
        g = EdgeListParser().parse(stream('# a square\n0 1\n1 2\n\n2 3  # closing soon\n3 0\n7\n'))
        self.assertEqual(sorted(g), [0, 1, 2, 3, 7])
        self.assertEqual(g.number_of_edges(), 4)
        self.assertEqual(g.degree(7), 0)

    def test_bad_lines(self):
        with self.assertRaises(ParseError):
            EdgeListParser().parse(stream('0 1\n1 two\n'))
        with self.assertRaises(ParseError):
            EdgeListParser().parse(stream('0 1 2\n'))

    def test_read_graph_picks_the_parser(self):
        cube = read_graph(os.path.join(FIXTURES, 'cube.edges'))
        self.assertEqual((cube.number_of_nodes(), cube.number_of_edges()), (8, 12))
        braid = read_graph(os.path.join(FIXTURES, 'braid_4341232.json'))
        self.assertEqual(braid.nodes[0]['word'], '3413123')
        self.assertEqual(braid.edges[3, 4]['label'], 3)


class TestGraphJSONParser (SimpleTestCase):
    def test_tags(self):
        g = GraphJSONParser().parse(stream(
            '{"vertices": ["121", "212", "x"], "edges": [[0, 1, "braid"], [1, 2, 4], [0, 2]]}'))
        self.assertEqual(g.edges[0, 1]['kind'], 'braid')
        self.assertEqual(g.edges[1, 2]['label'], 4)
        self.assertEqual(g.edges[0, 2], {})

    def test_malformed_graphs(self):
        parser = GraphJSONParser()
        for text in ['{"vertices": []}', '[1, 2]', '{"vertices": [1], "edges": [[0, 1]]}',
                     '{"vertices": [1, 2], "edges": [[0]]}', '{"vertices": ']:
            with self.assertRaises(ParseError):
                parser.parse(stream(text))


class TestSweepConfigParser (SimpleTestCase):
    def test_object(self):
        with open(os.path.join(FIXTURES, 'sweep_a3.json'), 'rb') as f:
            data = SweepConfigParser().parse(f)
        self.assertEqual(data['L'], 4)

    def test_config_must_be_an_object(self):
        with self.assertRaises(ParseError):
            SweepConfigParser().parse(stream('["A:3", 4]'))


class TestRenderers (SimpleTestCase):
    def test_json_is_indented_with_a_trailing_newline(self):
        content = JSONRenderer().render({'word': '4341232', 'path': 'a/b'})
        self.assertTrue(content.endswith(b'\n'))
        self.assertIn(b'\n  "word"', content)
        self.assertIn(b'"a/b"', content)
        self.assertEqual(json.loads(content), {'word': '4341232', 'path': 'a/b'})
        self.assertEqual(JSONRenderer().render(None), b'null\n')

    def test_text(self):
        content = TextRenderer().render({'link': True, 'factorization': None, 'shadows': [],
                                         'graph': {'dim': 3, 'median': False}})
        self.assertEqual(content.decode('utf-8').splitlines(),
                         ['link: yes', 'factorization: -', 'shadows: (none)',
                          'graph: dim=3 median=no'])

    def test_dot(self):
        data = {'vertices': ['121', '212'], 'edges': [[0, 1, 1]]}
        content = DOTRenderer().render(data, renderer_context={'name': 'B(121)'})
        self.assertEqual(content.decode('utf-8'),
                         'graph "B(121)" {\n  0 [label="121"];\n  1 [label="212"];\n'
                         '  0 -- 1 [label=1];\n}\n')

    def test_csv_columns(self):
        rows = [{'detail': '{}', 'status': 'pass', 'check': 'diam_eq_dim', 'link': True,
                 'class_size': 2, 'dimension': 1, 'length': 3, 'word': '121'}]
        lines = CSVRenderer().render(rows).decode('utf-8').splitlines()
        self.assertEqual(lines[0], 'word,length,dimension,class_size,link,check,status,detail')
        self.assertEqual(lines[1], '121,3,1,2,True,diam_eq_dim,pass,{}')
