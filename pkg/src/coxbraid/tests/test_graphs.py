import os
from django.test import SimpleTestCase
import networkx as nx

from ..exceptions import (DisconnectedGraph, GraphTooLarge, NotACycle, NotAnEdge, NotAPartialCube,
    NotConvex)
from ..graphs import (CONVEX, ISOMETRIC, NEITHER, Metric, box_product, classify_cycle,
    contraction_sequence, convexity_witness, cycle_graph, diameter, diametrical_pairs, distance,
    embed_hypercube, f_matching_is_isomorphism, geodetic_number, hypercube_graph, interval,
    is_box_indecomposable, is_convex, is_isometric_subgraph, is_median_graph, is_partial_cube,
    isometric_dimension, matching_theta, median_triple, path_graph, peripheral_contraction,
    peripheral_expansion, raw_theta, semicube, theta_classes)
from ..parsers import read_graph


FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


def fixture_graph(name):
    return read_graph(os.path.join(FIXTURES, name))


def single_vertex():
    g = nx.Graph()
    g.add_node(0)
    return g


class TestMetric (SimpleTestCase):
    def test_distances(self):
        c6 = cycle_graph(6)
        self.assertEqual(distance(c6, 0, 3), 3)
        self.assertEqual(distance(c6, 1, 5), 2)
        self.assertEqual(diameter(c6), 3)
        self.assertEqual(diameter(single_vertex()), 0)

    def test_disconnected_graphs_are_rejected(self):
        g = nx.Graph([(0, 1), (2, 3)])
        with self.assertRaises(DisconnectedGraph):
            Metric(g)
        with self.assertRaises(DisconnectedGraph):
            diameter(nx.Graph())

    def test_intervals(self):
        c6 = cycle_graph(6)
        self.assertEqual(interval(c6, 2, 2), frozenset([2]))
        self.assertEqual(interval(c6, 0, 1), frozenset([0, 1]))
        self.assertEqual(interval(c6, 0, 3), frozenset(range(6)))
        self.assertEqual(interval(c6, 0, 2), frozenset([0, 1, 2]))

    def test_convexity(self):
        c6 = cycle_graph(6)
        self.assertTrue(is_convex(c6, [4]))
        self.assertTrue(is_convex(c6, [0, 1, 2]))
        self.assertFalse(is_convex(c6, [0, 3]))
        self.assertEqual(convexity_witness(c6, [0, 2]), (0, 2, 1))
        self.assertIsNone(convexity_witness(c6, [0, 1]))

    def test_isometric_subgraphs(self):
        cube = fixture_graph('cube.edges')
        self.assertTrue(is_isometric_subgraph(cube, cube.subgraph([1, 3, 2, 6, 4, 5])))
        path = cube.edge_subgraph([(1, 3), (3, 2), (2, 6), (6, 4), (4, 0)])
        self.assertFalse(is_isometric_subgraph(cube, path))


class TestCycles (SimpleTestCase):
    def setUp(self):
        self.cube = fixture_graph('cube.edges')

    def test_convex_cycle(self):
        self.assertEqual(classify_cycle(self.cube, [1, 3, 2, 0]), CONVEX)

    def test_isometric_cycle(self):
        self.assertEqual(classify_cycle(self.cube, [1, 3, 2, 6, 4, 5]), ISOMETRIC)

    def test_cycle_that_is_neither(self):
        self.assertEqual(classify_cycle(self.cube, [1, 3, 2, 6, 4, 0]), NEITHER)

    def test_not_a_cycle(self):
        with self.assertRaises(NotACycle):
            classify_cycle(self.cube, [0, 1, 7, 2])
        with self.assertRaises(NotACycle):
            classify_cycle(self.cube, [0, 1])


class TestSemicubes (SimpleTestCase):
    def test_single_edge(self):
        pair = semicube(path_graph(2), 0, 1)
        self.assertEqual(pair.W_uv, frozenset([0]))
        self.assertEqual(pair.W_vu, frozenset([1]))
        self.assertEqual(pair.F_uv, frozenset([(0, 1)]))

    def test_semicube_split(self):
        g = fixture_graph('semicubes.edges')
        pair = semicube(g, 0, 2)
        self.assertEqual(pair.W_uv, frozenset([0, 1, 4, 8, 9, 10]))
        self.assertEqual(pair.W_vu, frozenset([2, 3, 5, 6, 7]))
        self.assertEqual(pair.U_uv, frozenset([0, 1, 4]))
        self.assertEqual(pair.U_vu, frozenset([2, 3, 5]))
        self.assertEqual(pair.F_uv, frozenset([(0, 2), (1, 3), (4, 5)]))
        self.assertTrue(f_matching_is_isomorphism(g, pair))

    def test_one_step_law(self):
        g = fixture_graph('semicubes.edges')
        metric = Metric(g)
        for u, v in g.edges():
            pair = semicube(g, u, v, metric)
            for x in pair.W_uv:
                self.assertEqual(metric.d(x, v), metric.d(x, u) + 1)

    def test_odd_cycles_leave_vertices_out(self):
        pair = semicube(cycle_graph(5), 0, 1)
        self.assertEqual(len(pair.W_uv | pair.W_vu), 4)

    def test_not_an_edge(self):
        with self.assertRaises(NotAnEdge):
            semicube(cycle_graph(6), 0, 3)


class TestPartialCubes (SimpleTestCase):
    def test_theta_classes(self):
        self.assertEqual(theta_classes(fixture_graph('semicubes.edges')).count, 5)
        self.assertEqual(theta_classes(hypercube_graph(3)).count, 3)
        self.assertEqual(theta_classes(cycle_graph(6)).count, 3)

    def test_semicube_matching_agrees_with_the_definition(self):
        for g in [hypercube_graph(3), hypercube_graph(4), cycle_graph(6), single_vertex(),
                  fixture_graph('semicubes.edges'), fixture_graph('pendant_squares.edges'),
                  box_product(path_graph(2), path_graph(3))]:
            edges, groups = matching_theta(g)
            raw_edges, related = raw_theta(g)
            self.assertEqual(edges, raw_edges)
            self.assertEqual(sorted(i for group in groups for i in group), list(range(len(edges))))
            for group in groups:
                mask = sum(1 << i for i in group)
                for i in group:
                    self.assertEqual(related[i], mask)

    def test_semicube_matching_needs_a_transitive_theta(self):
        self.assertIsNone(matching_theta(fixture_graph('theta_not_transitive.edges')))
        self.assertIsNone(matching_theta(cycle_graph(5)))

    def test_theta_that_is_not_transitive(self):
        g = fixture_graph('theta_not_transitive.edges')
        theta = theta_classes(g)
        self.assertFalse(theta.transitive)
        self.assertEqual(len(theta.witness), 3)

        certificate = is_partial_cube(g)
        self.assertFalse(certificate.result)
        self.assertTrue(certificate.bipartite)
        self.assertFalse(certificate.theta_transitive)
        self.assertFalse(certificate.semicubes_convex)
        self.assertEqual(certificate.witness['reason'], 'theta not transitive')

    def test_partial_cubes(self):
        self.assertTrue(is_partial_cube(cycle_graph(6)).result)
        self.assertTrue(is_partial_cube(single_vertex()).result)
        c5 = is_partial_cube(cycle_graph(5))
        self.assertFalse(c5.result)
        self.assertEqual(c5.witness['reason'], 'not bipartite')

    def test_isometric_dimension(self):
        self.assertEqual(isometric_dimension(fixture_graph('semicubes.edges')), 5)
        self.assertEqual(isometric_dimension(cycle_graph(6)), 3)
        self.assertEqual(isometric_dimension(fixture_graph('pendant_squares.edges')), 4)
        self.assertEqual(isometric_dimension(hypercube_graph(4)), 4)
        self.assertEqual(isometric_dimension(single_vertex()), 0)
        with self.assertRaises(NotAPartialCube):
            isometric_dimension(fixture_graph('theta_not_transitive.edges'))

    def test_embedding_matches_distances(self):
        g = fixture_graph('semicubes.edges')
        embedding = embed_hypercube(g)
        self.assertEqual(embedding.dimension, 5)
        self.assertEqual(embedding.base, 0)
        self.assertEqual(embedding.coordinates[0], '00000')
        metric = Metric(g)
        for u in g:
            for v in g:
                hamming = sum(1 for p, q in zip(embedding.coordinates[u], embedding.coordinates[v])
                              if p != q)
                self.assertEqual(hamming, metric.d(u, v))


class TestMedians (SimpleTestCase):
    def test_median_of_a_triple(self):
        g = fixture_graph('semicubes.edges')
        self.assertEqual(median_triple(g, 8, 7, 5), frozenset([2]))
        self.assertTrue(is_median_graph(g).result)

    def test_hexagon_is_not_median(self):
        c6 = cycle_graph(6)
        self.assertEqual(median_triple(c6, 0, 2, 4), frozenset())
        certificate = is_median_graph(c6)
        self.assertFalse(certificate.result)
        self.assertEqual(len(certificate.witness['triple']), 3)

    def test_trees_are_median(self):
        self.assertTrue(is_median_graph(nx.balanced_tree(2, 3)).result)

    def test_median_graphs_are_partial_cubes(self):
        for g in [fixture_graph('semicubes.edges'), fixture_graph('squares_touching_tips.edges'),
                  hypercube_graph(3), nx.balanced_tree(3, 2)]:
            self.assertTrue(is_median_graph(g).result)
            self.assertTrue(is_partial_cube(g).result)

    def test_vertex_cap(self):
        with self.settings(COXBRAID_MEDIAN_VERTEX_CAP=4):
            with self.assertRaises(GraphTooLarge):
                is_median_graph(cycle_graph(6))
            self.assertFalse(is_median_graph(cycle_graph(6), force=True).result)


class TestPeripheralExpansion (SimpleTestCase):
    def test_expansions_from_a_single_vertex(self):
        g = single_vertex()
        steps = [[0], [0], [0, 2], [0, 1]]
        sizes = []
        for U in steps:
            g = peripheral_expansion(g, U)
            sizes.append(g.number_of_nodes())
            self.assertTrue(is_median_graph(g).result)
        self.assertEqual(sizes, [2, 3, 5, 7])
        self.assertTrue(nx.is_isomorphic(g, fixture_graph('squares_touching_tips.edges')))

    def test_expansion_along_a_non_convex_set(self):
        with self.assertRaises(NotConvex):
            peripheral_expansion(cycle_graph(6), [0, 2])

    def test_contraction_undoes_an_expansion(self):
        g = peripheral_expansion(path_graph(3), [1, 2])
        smaller = peripheral_contraction(g, 1, 3)
        self.assertEqual(sorted(smaller), [0, 1, 2])

    def test_median_graphs_contract_to_a_vertex(self):
        route = contraction_sequence(fixture_graph('squares_touching_tips.edges'))
        self.assertTrue(route.result)
        self.assertEqual(len(route.steps), 4)
        self.assertEqual(len(route.remaining), 1)

    def test_hexagon_does_not_contract(self):
        route = contraction_sequence(cycle_graph(6))
        self.assertFalse(route.result)
        self.assertEqual(len(route.remaining), 6)


class TestProducts (SimpleTestCase):
    def test_cubes(self):
        self.assertTrue(nx.is_isomorphic(box_product(path_graph(2), path_graph(2)),
                                         hypercube_graph(2)))
        for n in range(1, 4):
            for m in range(1, 4):
                if n + m <= 4:
                    self.assertTrue(nx.is_isomorphic(
                        box_product(hypercube_graph(n), hypercube_graph(m)),
                        hypercube_graph(n + m)))

    def test_grid(self):
        grid = box_product(path_graph(2), path_graph(3))
        self.assertEqual(grid.number_of_nodes(), 6)
        self.assertEqual(grid.number_of_edges(), 7)
        self.assertEqual(isometric_dimension(grid), 3)
        self.assertEqual(grid.nodes[0]['factors'], (0, 0))

    def test_products_of_medians_are_median(self):
        g = box_product(path_graph(3), fixture_graph('squares_touching_tips.edges'))
        self.assertTrue(is_median_graph(g).result)

    def test_indecomposable(self):
        self.assertTrue(is_box_indecomposable(cycle_graph(6)).indecomposable)
        self.assertTrue(is_box_indecomposable(
            fixture_graph('squares_touching_tips.edges')).indecomposable)
        self.assertTrue(is_box_indecomposable(path_graph(2)).indecomposable)

        split = is_box_indecomposable(box_product(path_graph(3), path_graph(2)))
        self.assertFalse(split.indecomposable)


class TestGeodeticNumber (SimpleTestCase):
    def test_hexagon(self):
        geodetic = geodetic_number(cycle_graph(6))
        self.assertEqual(geodetic.number, 2)
        self.assertEqual(geodetic.sets, [(0, 3), (1, 4), (2, 5)])

    def test_single_vertex(self):
        self.assertEqual(geodetic_number(single_vertex()).number, 1)

    def test_star_needs_every_leaf(self):
        geodetic = geodetic_number(nx.star_graph(3))
        self.assertEqual(geodetic.number, 3)
        self.assertEqual(geodetic.sets, [(1, 2, 3)])
        self.assertIsNone(geodetic_number(nx.star_graph(3), max_size=2).number)

    def test_diametrical_pairs(self):
        self.assertEqual(diametrical_pairs(cycle_graph(6)), [(0, 3), (1, 4), (2, 5)])
        self.assertEqual(diametrical_pairs(path_graph(4)), [(0, 3)])
