from itertools import combinations, islice
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from ..braids import braid_graph
from ..checks import (FAIL, MAX_WITNESSES, OBSERVED, PASS, PRECONDITION, CheckReport,
    cycle_laws_check, delta, factorization_box_check, four_cycles, geodesic_labels_check,
    graph_stats, helly_check, interval_sigbar_check, majority, majority_median_check,
    median_graph_check, median_via_majority, minimal_sequence, observing, property_suite, replay,
    semicube_sigbar_check, top_shadow_partition_check, verify_dimI_equals_dim,
    verify_distance_formula)
from ..coxeter import Word, reduce, resolve_system
from ..exceptions import LengthMismatch, NotBraidEquivalent, OutsideHypotheses
from ..graphs import cycle_graph, hypercube_graph, median_triple


class TestSignatureArithmetic (SimpleTestCase):
    def test_delta_counts_differing_entries(self):
        self.assertEqual(delta((1, 2, 3), (1, 3, 3)), 1)
        self.assertEqual(delta((4, 3, 2), (3, 1, 3)), 3)
        self.assertEqual(delta((), ()), 0)
        with self.assertRaises(LengthMismatch):
            delta((1, 2), (1, 2, 3))

    def test_majority_vote(self):
        self.assertEqual(tuple(majority((1, 2, 3), (1, 3, 4), (2, 3, 4))), (1, 3, 4))
        self.assertEqual(str(majority((4, 3, 2), (3, 1, 3), (3, 1, 2))), '(3,1,2)')

    def test_three_way_tie_takes_the_middle_signature(self):
        self.assertEqual(tuple(majority((1,), (2,), (3,))), (2,))

    def test_majority_needs_equal_lengths(self):
        with self.assertRaises(LengthMismatch):
            majority((1,), (1, 2), (1, 2))


class TestSignatureLaws (SimpleTestCase):
    affd4 = resolve_system('affD:4')

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=5), max_size=10))
    def test_distance_and_median_follow_the_signatures(self, letters):
        w = reduce(self.affd4, Word(letters))
        bg = braid_graph(self.affd4, w, assume_reduced=True)
        sigs = dict((x, bg.center_letters(x)) for x in bg.graph)
        for u, v in combinations(sorted(bg.graph), 2):
            self.assertEqual(bg.metric.d(u, v), delta(sigs[u], sigs[v]))
        for u, v, x in islice(combinations(sorted(bg.graph), 3), 200):
            vote = tuple(majority(sigs[u], sigs[v], sigs[x]))
            by_vote = frozenset(y for y in bg.graph if sigs[y] == vote)
            self.assertEqual(len(by_vote), 1)
            self.assertEqual(median_triple(bg.graph, u, v, x, bg.metric), by_vote)


class TestCheckReport (SimpleTestCase):
    def setUp(self):
        self.d4 = resolve_system('D:4')

    def test_witnesses_are_capped(self):
        report = CheckReport('demo', self.d4, Word('4341232'))
        for k in range(MAX_WITNESSES + 5):
            report.fail('broken', index=k)
        report.finish()
        self.assertEqual(report.status, FAIL)
        self.assertEqual(len(report.witnesses), MAX_WITNESSES)
        self.assertEqual(report.stats['failures'], MAX_WITNESSES + 5)
        self.assertEqual(report.literal, '4341232')

    def test_observations_record_the_outcome(self):
        report = CheckReport('demo', self.d4, Word('4341232'), observing=True)
        report.fail('broken')
        report.finish()
        self.assertEqual(report.status, OBSERVED)
        self.assertEqual(report.stats['outcome'], 'violated')


class TestHypotheses (SimpleTestCase):
    def setUp(self):
        self.affa2 = resolve_system('affA:2')
        self.bg = braid_graph(self.affa2, Word('121'))

    def test_triangle_free_systems_are_checked(self):
        self.assertFalse(observing(resolve_system('D:4'), 'demo'))

    def test_other_systems_are_refused(self):
        with self.assertRaises(OutsideHypotheses):
            observing(self.affa2, 'demo')
        with self.assertRaises(OutsideHypotheses):
            verify_distance_formula(self.affa2, self.bg)
        with self.assertRaises(OutsideHypotheses):
            median_via_majority(self.affa2, '121', '212', '121')

    def test_exploration_observes_without_asserting(self):
        report = verify_distance_formula(self.affa2, self.bg, explore=True)
        self.assertEqual(report.status, OBSERVED)
        self.assertEqual(report.stats['outcome'], 'holds')
        self.assertEqual(median_via_majority(self.affa2, '121', '212', '121', explore=True),
                         Word('121'))

    def test_a_class_that_uses_the_triangle(self):
        bg = braid_graph(self.affa2, Word('1213121'))
        self.assertEqual([self.affa2.format_word(w) for w in bg.vertices],
                         ['1213121', '1213212', '1231321', '2123121', '2123212', '2132312'])
        with self.assertRaises(OutsideHypotheses):
            median_graph_check(self.affa2, Word('1213121'), bg)

        report = median_graph_check(self.affa2, Word('1213121'), bg, explore=True)
        self.assertEqual(report.status, OBSERVED)
        self.assertEqual(report.stats, {'contractions': 4, 'outcome': 'holds'})

    def test_exploration_setting_is_the_default(self):
        with self.settings(COXBRAID_EXPLORE=True):
            self.assertTrue(observing(self.affa2, 'demo'))


class TestDistance (SimpleTestCase):
    def setUp(self):
        self.d4 = resolve_system('D:4')
        self.beta = braid_graph(self.d4, Word('4341232'))
        self.gamma = braid_graph(self.d4, Word('343132343'))

    def test_distance_is_signature_difference(self):
        report = verify_distance_formula(self.d4, self.beta)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats, {'diam': 3, 'dim': 3})
        self.assertEqual(verify_distance_formula(self.d4, self.gamma).status, PASS)

    def test_minimal_sequence_uses_each_differing_ordinal_once(self):
        sequence = minimal_sequence(self.d4, self.gamma, '343132343', '434132434')
        self.assertEqual(sorted(sequence.ordinals), [1, 4])
        self.assertEqual(replay(self.d4, self.gamma, sequence), Word('434132434'))

    def test_minimal_sequence_across_the_diameter(self):
        sequence = minimal_sequence(self.d4, self.beta, '3413123', '4341232')
        self.assertEqual(sorted(sequence.ordinals), [1, 2, 3])
        self.assertEqual(replay(self.d4, self.beta, sequence), Word('4341232'))

    def test_minimal_sequence_of_a_word_with_itself(self):
        sequence = minimal_sequence(self.d4, self.beta, '3413123', '3413123')
        self.assertEqual(sequence.ordinals, ())

    def test_minimal_sequence_needs_two_class_members(self):
        with self.assertRaises(NotBraidEquivalent):
            minimal_sequence(self.d4, self.beta, '3413123', '343132343')

    def test_geodesic_labels(self):
        self.assertEqual(geodesic_labels_check(self.d4, self.beta).status, PASS)
        self.assertEqual(geodesic_labels_check(self.d4, self.gamma).status, PASS)

    def test_graph_stats(self):
        self.assertEqual(graph_stats(self.beta),
                         {'vertices': 5, 'edges': 5, 'dim': 3, 'diam': 3, 'dimI': 3})


class TestSemicubesAndCycles (SimpleTestCase):
    def setUp(self):
        self.d4 = resolve_system('D:4')
        self.a6 = resolve_system('A:6')

    def test_semicubes_are_sigbar_sets(self):
        for system, w in [(self.d4, '4341232'), (self.d4, '343132343'),
                          (self.a6, '1213243565')]:
            report = semicube_sigbar_check(system, braid_graph(system, Word(w)))
            self.assertEqual(report.status, PASS, report.witnesses)

    def test_isometric_dimension_is_dimension(self):
        report = verify_dimI_equals_dim(self.d4, Word('343132343'))
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats, {'dimI': 4, 'dim': 4})

    def test_four_cycles_are_listed_once(self):
        self.assertEqual(len(list(four_cycles(hypercube_graph(3)))), 6)
        self.assertEqual(list(four_cycles(cycle_graph(6))), [])

    def test_cycle_laws(self):
        bg = braid_graph(self.d4, Word('4341232'))
        report = cycle_laws_check(self.d4, bg)
        self.assertEqual(report.status, PASS, report.witnesses)
        self.assertEqual(report.stats['four_cycles'], 1)

    def test_cycle_laws_on_a_ladder(self):
        bg = braid_graph(self.a6, Word('1213243565'))
        report = cycle_laws_check(self.a6, bg)
        self.assertEqual(report.status, PASS, report.witnesses)
        self.assertEqual(report.stats['four_cycles'], 3)

    def test_cycle_sampling_is_capped(self):
        bg = braid_graph(self.a6, Word('1213243565'))
        report = cycle_laws_check(self.a6, bg, cap=1)
        self.assertTrue(report.stats['cycles_capped'])
        self.assertEqual(report.stats['cycles'], 1)


class TestIntervalsAndMedians (SimpleTestCase):
    def setUp(self):
        self.d4 = resolve_system('D:4')
        self.beta = braid_graph(self.d4, Word('4341232'))

    def test_intervals_are_sigbar_sets(self):
        self.assertEqual(interval_sigbar_check(self.d4, self.beta).status, PASS)
        report = interval_sigbar_check(self.d4, self.beta, Word('3413123'), Word('4341232'))
        self.assertEqual(report.status, PASS)

    def test_median_is_the_majority_vote(self):
        self.assertEqual(median_via_majority(self.d4, '3413123', '4341232', '4341323'),
                         Word('4341323'))

    def test_median_in_type_d5(self):
        d5 = resolve_system('D:5')
        median = median_via_majority(d5, '34131234354', '43412324354', '43413243545')
        self.assertEqual(median, Word('43413234354'))

    def test_median_with_a_repeated_word(self):
        self.assertEqual(median_via_majority(self.d4, '3413123', '3413123', '4341232'),
                         Word('3413123'))

    def test_median_needs_braid_equivalent_words(self):
        with self.assertRaises(NotBraidEquivalent):
            median_via_majority(self.d4, '3413123', '4341232', '343132343')

    def test_sampled_majority_medians(self):
        report = majority_median_check(self.d4, self.beta)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats['triples'], 10)

        gamma = braid_graph(self.d4, Word('343132343'))
        report = majority_median_check(self.d4, gamma, samples=7, seed=3)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats['triples'], 7)

    def test_helly_property_of_sigbar_sets(self):
        family = [self.beta.sigbar(1, 4), self.beta.sigbar(2, 1), self.beta.sigbar(3, 2)]
        report = helly_check(self.d4, self.beta, family)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats['common'], ['3431323'])

    def test_helly_needs_pairwise_intersecting_sets(self):
        family = [self.beta.sigbar(1, 4), self.beta.sigbar(1, 3)]
        report = helly_check(self.d4, self.beta, family)
        self.assertEqual(report.status, PRECONDITION)
        self.assertEqual(report.witnesses[0]['sets'], [0, 1])

    def test_braid_graphs_are_median(self):
        report = median_graph_check(self.d4, Word('343132343'))
        self.assertEqual(report.status, PASS, report.witnesses)


class TestFactorizationAndTopShadow (SimpleTestCase):
    def test_box_product_of_the_factors(self):
        a6 = resolve_system('A:6')
        report = factorization_box_check(a6, Word('1213243565'))
        self.assertEqual(report.status, PASS, report.witnesses)
        self.assertEqual(report.stats['factors'], ['1213243', '565'])
        self.assertEqual(report.stats['sizes'], [4, 2])

    def test_box_product_with_three_factors(self):
        d8 = resolve_system('D:8')
        report = factorization_box_check(d8, Word('3231343565787'))
        self.assertEqual(report.status, PASS, report.witnesses)
        self.assertEqual(report.stats['sizes'], [5, 2, 2])

    def test_a_link_is_its_own_factor(self):
        d4 = resolve_system('D:4')
        report = factorization_box_check(d4, Word('4341232'))
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.stats['factors'], ['3413123'])

    def test_top_shadow_partition(self):
        affd5 = resolve_system('affD:5')
        report = top_shadow_partition_check(affd5, Word('32313435464'))
        self.assertEqual(report.status, PASS, report.witnesses)
        self.assertEqual(report.stats['upper'] + report.stats['lower'],
                         len(braid_graph(affd5, Word('32313435464'))))

    def test_top_shadow_skips_non_links(self):
        a6 = resolve_system('A:6')
        report = top_shadow_partition_check(a6, Word('1213243565'))
        self.assertEqual(report.status, PASS)
        self.assertIn('skipped', report.stats)


class TestPropertySuite (SimpleTestCase):
    def test_every_check_passes_on_a_link(self):
        d4 = resolve_system('D:4')
        reports = property_suite(d4, braid_graph(d4, Word('343132343')))
        self.assertEqual([r.check for r in reports],
                         ['bipartite', 'distance_formula', 'geodesic_labels', 'theta_equivalence',
                          'semicube_sigbar', 'dimI_equals_dim', 'cycle_laws', 'interval_sigbar',
                          'median_graph', 'majority_median', 'factorization_box',
                          'top_shadow_partition'])
        self.assertEqual(set(r.status for r in reports), set([PASS]))

    def test_empty_word_skips_the_factor_checks(self):
        d4 = resolve_system('D:4')
        reports = property_suite(d4, braid_graph(d4, Word()))
        self.assertEqual(len(reports), 10)
        self.assertEqual(set(r.status for r in reports), set([PASS]))
