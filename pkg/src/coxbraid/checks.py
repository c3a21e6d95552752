"""
Checks that tie braid graphs to their signatures: distance is signature
difference, semicubes are sig-bar sets, geodesics use each shadow once,
the cycle laws, intervals are sig-bar sets, and the median is the
majority vote.

Each check returns a CheckReport. On a system that is not triangle free a
check refuses to run (OutsideHypotheses) unless exploration is on, in which
case it runs and reports what it saw as ``observed`` without asserting.
"""
import random
from collections import namedtuple
from functools import lru_cache
from itertools import combinations, islice, product
import networkx as nx

from .braids import BraidGraph, braid_graph
from .coxeter import BRAID, MoveSite, Word, apply_move, is_triangle_free
from .exceptions import InvariantViolation, LengthMismatch, NotBraidEquivalent, OutsideHypotheses
from .graphs import (CONVEX, ISOMETRIC, classify_cycle, contraction_sequence, is_convex,
    is_median_graph, is_partial_cube, median_triple, semicube, theta_classes)
from .links import Signature, factor_classes, hat, is_link, link_factorization, top_shadow_split
from .utils import setting_or

import logging
log = logging.getLogger(__name__)


PASS = 'pass'
FAIL = 'fail'
OBSERVED = 'observed'
PRECONDITION = 'precondition'

MAX_WITNESSES = 10


class CheckReport (object):
    """
    Outcome of one check on one braid class. Witnesses hold the smallest
    offending objects (a pair, a triple, a cycle) as word literals.
    """
    def __init__(self, check, system, word, observing=False):
        self.check = check
        self.system = system
        self.word = Word(word)
        self.observing = observing
        self.status = PASS
        self.witnesses = []
        self.failures = 0
        self.stats = {}

    def fail(self, reason, **objects):
        self.status = FAIL
        self.failures += 1
        if len(self.witnesses) < MAX_WITNESSES:
            witness = {'reason': reason}
            witness.update(objects)
            self.witnesses.append(witness)

    def finish(self):
        if self.failures:
            self.stats['failures'] = self.failures
        if self.observing:
            self.stats['outcome'] = 'violated' if self.status == FAIL else 'holds'
            self.status = OBSERVED
        return self

    @property
    def failed(self):
        return self.status == FAIL

    @property
    def system_name(self):
        return str(self.system)

    @property
    def literal(self):
        return self.system.format_word(self.word)

    def __repr__(self):
        return '<CheckReport %s %s: %s>' % (self.check, self.literal, self.status)


class MajorityResult (Signature):
    pass


MinimalBraidSequence = namedtuple('MinimalBraidSequence', ['source', 'target', 'ordinals'])


def observing(system, check, explore=None):
    """
    False when the system is triangle free. Otherwise True if exploration
    is on, and OutsideHypotheses if not.
    """
    if is_triangle_free(system):
        return False
    if setting_or('EXPLORE', explore):
        log.warning('%s is not triangle free; running %s as an observation only.', system, check)
        return True
    raise OutsideHypotheses(
        '%s is not triangle free (its Coxeter graph has a 3-cycle), so %s has nothing to '
        'assert. Pass --explore to run it as an observation.' % (system, check))


def _start(check, system, bg, explore):
    return CheckReport(check, system, bg.representative, observing(system, check, explore))


def _lit(bg, *vertices):
    return [bg.system.format_word(bg.word(x)) for x in vertices]


def graph_stats(bg):
    metric = bg.metric
    certificate = is_partial_cube(bg.graph, metric)
    return {
        'vertices': len(bg),
        'edges': bg.graph.number_of_edges(),
        'dim': bg.dimension,
        'diam': metric.diameter,
        'dimI': theta_classes(bg.graph, metric).count if certificate.result else None,
    }


###############################################################################
#
# Signatures and distance
# -----------------------
#

def delta(sig_a, sig_b):
    if len(sig_a) != len(sig_b):
        raise LengthMismatch('Signatures %s and %s have different lengths.'
                             % (Signature(sig_a), Signature(sig_b)))
    return sum(1 for p, q in zip(sig_a, sig_b) if p != q)


def majority(sig_a, sig_b, sig_c):
    """
    Entry-wise two-of-three vote. If all three entries differ the entry of
    ``sig_b`` wins, which cannot happen for a triangle-free system.
    """
    if not len(sig_a) == len(sig_b) == len(sig_c):
        raise LengthMismatch('Signatures of a triple must have equal lengths.')
    return MajorityResult(a if a == b or a == c else b for a, b, c in zip(sig_a, sig_b, sig_c))


def verify_distance_formula(system, bg, explore=None):
    report = _start('distance_formula', system, bg, explore)
    metric = bg.metric
    for u, v in combinations(sorted(bg.graph), 2):
        d = metric.d(u, v)
        s = delta(bg.center_letters(u), bg.center_letters(v))
        if d != s:
            report.fail('distance differs from signature difference', pair=_lit(bg, u, v),
                        distance=d, delta=s)
            break
    report.stats.update(diam=metric.diameter, dim=bg.dimension)
    if metric.diameter > bg.dimension:
        report.fail('diameter exceeds dimension', diam=metric.diameter, dim=bg.dimension)
    return report.finish()


def _differing(bg, u, v):
    su, sv = bg.center_letters(u), bg.center_letters(v)
    return set(k + 1 for k in range(bg.dimension) if su[k] != sv[k])


def minimal_sequence(system, bg, a, b):
    """
    The shadow ordinals used along a geodesic from ``a`` to ``b``. In a
    triangle-free system each ordinal appears once and every geodesic uses
    the same set, namely the positions where the signatures differ.
    """
    a, b = Word(a), Word(b)
    for w in (a, b):
        if w not in bg.index:
            raise NotBraidEquivalent('%s is not a vertex of %r.' % (system.format_word(w), bg))
    i, j = bg.vertex(a), bg.vertex(b)

    path = nx.shortest_path(bg.graph, i, j)
    ordinals = tuple(bg.label(x, y) for x, y in zip(path, path[1:]))

    if is_triangle_free(system):
        expected = _differing(bg, i, j)
        if len(set(ordinals)) != len(ordinals) or set(ordinals) != expected:
            raise InvariantViolation('Geodesic from %s to %s uses ordinals %s; expected each of '
                                     '%s once.' % (system.format_word(a), system.format_word(b),
                                                   list(ordinals), sorted(expected)),
                                     witness=_lit(bg, *path))
        cap = setting_or('GEODESIC_CAP', None)
        for count, other in enumerate(nx.all_shortest_paths(bg.graph, i, j)):
            if count >= cap:
                log.warning('Stopped comparing geodesics from %s to %s after %d.',
                            system.format_word(a), system.format_word(b), cap)
                break
            labels = set(bg.label(x, y) for x, y in zip(other, other[1:]))
            if labels != set(ordinals):
                raise InvariantViolation('Two geodesics from %s to %s use different ordinals.'
                                         % (system.format_word(a), system.format_word(b)),
                                         witness=[_lit(bg, *path), _lit(bg, *other)])

    return MinimalBraidSequence(a, b, ordinals)


def replay(system, bg, sequence):
    """
    Apply the braid moves named by a MinimalBraidSequence to its source.
    """
    w = sequence.source
    for j in sequence.ordinals:
        w = apply_move(system, w, MoveSite(BRAID, bg.shadow_centers[j - 1] - 1))
    return w


def geodesic_labels_check(system, bg, explore=None):
    """
    Every edge on a geodesic between two vertices carries one of the
    ordinals at which their signatures differ. With the distance formula
    this makes each geodesic use every such ordinal exactly once.
    """
    report = _start('geodesic_labels', system, bg, explore)
    metric = bg.metric
    edges = bg.edges
    for u in sorted(bg.graph):
        du = metric.dist[u]
        for v in sorted(bg.graph):
            if v <= u:
                continue
            duv = du[v]
            dv = metric.dist[v]
            expected = _differing(bg, u, v)
            for x, y, label in edges:
                if du[x] > du[y]:
                    x, y = y, x
                if du[x] + 1 + dv[y] == duv and label not in expected:
                    report.fail('geodesic edge label outside the differing ordinals',
                                pair=_lit(bg, u, v), edge=_lit(bg, x, y), label=label)
                    return report.finish()
    return report.finish()


###############################################################################
#
# Semicubes, partial cubes and cycles
# -----------------------------------
#

def semicube_sigbar_check(system, bg, explore=None):
    report = _start('semicube_sigbar', system, bg, explore)
    metric = bg.metric
    theta = theta_classes(bg.graph, metric)

    for u, v, label in bg.edges:
        for a, b in ((u, v), (v, u)):
            pair = semicube(bg.graph, a, b, metric)
            expected = bg.sigbar(label, bg.center_letters(a)[label - 1])
            if pair.W_uv != expected:
                report.fail('semicube differs from sig-bar set', edge=_lit(bg, a, b), ordinal=label)

        same_class = set(theta.members(theta.class_of(u, v)))
        same_label = set((x, y) for x, y, j in bg.edges if j == label)
        if same_class != same_label:
            report.fail('theta class differs from label class', edge=_lit(bg, u, v), ordinal=label)

    for (i, letter), members in sorted(bg.sigbar_sets().items()):
        if not is_convex(bg.graph, members, metric):
            report.fail('sig-bar set is not convex', ordinal=i, letter=letter)

    report.stats.update(theta_classes=theta.count, dim=bg.dimension)
    return report.finish()


def verify_dimI_equals_dim(system, w, bg=None, explore=None):
    bg = bg if bg is not None else braid_graph(system, w)
    report = _start('dimI_equals_dim', system, bg, explore)
    certificate = is_partial_cube(bg.graph, bg.metric)
    if not certificate.result:
        report.fail('braid graph is not a partial cube', certificate=certificate.witness)
    else:
        dim_i = theta_classes(bg.graph, bg.metric).count
        report.stats.update(dimI=dim_i, dim=bg.dimension)
        if dim_i != bg.dimension:
            report.fail('isometric dimension differs from dimension', dimI=dim_i, dim=bg.dimension)
    return report.finish()


def theta_equivalence_check(system, bg, explore=None):
    report = _start('theta_equivalence', system, bg, explore)
    theta = theta_classes(bg.graph, bg.metric)
    if not theta.transitive:
        report.fail('theta is not transitive', edges=[_lit(bg, *e) for e in theta.witness])
    return report.finish()


def bipartite_check(system, bg, explore=None):
    report = _start('bipartite', system, bg, explore)
    if not nx.is_bipartite(bg.graph):
        report.fail('braid graph is not bipartite')
    return report.finish()


def four_cycles(g):
    """
    Each 4-cycle once, as (u, v, x, w) with edges uv, vx, xw, wu.
    """
    seen = set()
    for u in sorted(g):
        for v, w in combinations(sorted(g[u]), 2):
            for x in sorted(set(g[v]) & set(g[w])):
                if x == u:
                    continue
                key = frozenset([frozenset([u, v]), frozenset([v, x]),
                                 frozenset([x, w]), frozenset([w, u])])
                if key not in seen:
                    seen.add(key)
                    yield (u, v, x, w)


def cycle_laws_check(system, bg, explore=None, cap=None):
    report = _start('cycle_laws', system, bg, explore)
    g = bg.graph
    centers = bg.shadow_centers

    on_square = set()
    squares = 0
    for u, v, x, w in four_cycles(g):
        squares += 1
        on_square.update((u, v, x, w))
        i, j = bg.label(u, v), bg.label(u, w)
        if bg.label(w, x) != i or bg.label(v, x) != j:
            report.fail('opposite edges of a 4-cycle carry different ordinals',
                        cycle=_lit(bg, u, v, x, w))
        elif abs(centers[i - 1] - centers[j - 1]) < 3:
            report.fail('4-cycle ordinals have overlapping shadows', cycle=_lit(bg, u, v, x, w),
                        ordinals=[i, j])

    for x in sorted(g):
        if g.degree(x) >= 3 and x not in on_square:
            report.fail('vertex of degree at least 3 lies on no 4-cycle', vertex=_lit(bg, x))

    if nx.is_tree(g) and max(d for _, d in g.degree()) > 2:
        report.fail('braid graph is a tree but not a path')

    examined = convex = 0
    cap = setting_or('CYCLE_CAP', cap)
    if bg.dimension >= 2 and not nx.is_forest(g):
        cycles = nx.simple_cycles(g, length_bound=2 * bg.dimension)
        for cycle in islice(cycles, cap + 1):
            if examined == cap:
                report.stats['cycles_capped'] = True
                log.warning('Cycle sampling cap of %d reached for %r.', cap, bg)
                break
            examined += 1
            kind = classify_cycle(g, cycle, bg.metric)
            if kind == CONVEX:
                convex += 1
                if len(cycle) != 4:
                    report.fail('convex cycle longer than 4', cycle=_lit(bg, *cycle))
            if kind in (CONVEX, ISOMETRIC):
                half = len(cycle) // 2
                ring = list(cycle) + list(cycle)
                for k in range(half):
                    if bg.label(ring[k], ring[k + 1]) != bg.label(ring[k + half], ring[k + half + 1]):
                        report.fail('opposite edges of an isometric cycle carry different '
                                    'ordinals', cycle=_lit(bg, *cycle))
                        break

    report.stats.update(four_cycles=squares, cycles=examined, convex_cycles=convex)
    return report.finish()


###############################################################################
#
# Intervals and medians
# ---------------------
#

def interval_sigbar_check(system, bg, a=None, b=None, explore=None):
    report = _start('interval_sigbar', system, bg, explore)
    if a is None:
        pairs = combinations(sorted(bg.graph), 2)
    else:
        pairs = [(bg.vertex(a), bg.vertex(b))]
    for u, v in pairs:
        if bg.metric.interval(u, v) != bg.sigbar_pair(u, v):
            report.fail('interval differs from sig-bar set', pair=_lit(bg, u, v))
            break
    return report.finish()


def median_via_majority(system, a, b, c, bg=None, explore=None):
    """
    The median of three braid-equivalent words, found as the member whose
    signature is the majority vote of theirs, and cross-checked against the
    intersection of the three geodesic intervals.
    """
    watching = observing(system, 'median_via_majority', explore)
    words = [Word(w) for w in (a, b, c)]
    bg = bg if bg is not None else braid_graph(system, words[0])
    for w in words[1:]:
        if w not in bg.index:
            raise NotBraidEquivalent('%s is not braid equivalent to %s.'
                                     % (system.format_word(w), system.format_word(words[0])))

    u, v, w = [bg.vertex(x) for x in words]
    maj = majority(bg.center_letters(u), bg.center_letters(v), bg.center_letters(w))
    by_vote = [x for x in sorted(bg.graph) if bg.center_letters(x) == tuple(maj)]
    by_intervals = median_triple(bg.graph, u, v, w, bg.metric)

    if len(by_vote) == 1 and by_intervals == frozenset(by_vote):
        return bg.word(by_vote[0])

    problem = ('majority %s selects %s but the interval intersection is %s' % (
        maj, _lit(bg, *by_vote), _lit(bg, *sorted(by_intervals))))
    if not watching:
        raise InvariantViolation('Median of %s: %s.' % (_lit(bg, u, v, w), problem),
                                 witness=_lit(bg, u, v, w))
    log.warning('Median of %s: %s.', _lit(bg, u, v, w), problem)
    if len(by_intervals) == 1:
        return bg.word(next(iter(by_intervals)))
    return None


def majority_median_check(system, bg, samples=None, seed=0, explore=None):
    report = _start('majority_median', system, bg, explore)
    samples = setting_or('MEDIAN_SAMPLES', samples)
    nodes = sorted(bg.graph)
    if len(nodes) < 3:
        return report.finish()

    triples = list(combinations(nodes, 3))
    if len(triples) > samples:
        rng = random.Random(seed)
        triples = sorted(rng.sample(triples, samples))
    for u, v, w in triples:
        maj = majority(bg.center_letters(u), bg.center_letters(v), bg.center_letters(w))
        by_vote = frozenset(x for x in nodes if bg.center_letters(x) == tuple(maj))
        by_intervals = median_triple(bg.graph, u, v, w, bg.metric)
        if len(by_vote) != 1 or by_vote != by_intervals:
            report.fail('majority median differs from interval median', triple=_lit(bg, u, v, w),
                        majority=list(maj))
    report.stats['triples'] = len(triples)
    return report.finish()


def helly_check(system, bg, family, explore=None):
    """
    ``family`` is a list of vertex sets of ``bg`` (for example sig-bar
    sets). If they pairwise meet, they must all meet.
    """
    report = _start('helly', system, bg, explore)
    family = [frozenset(s) for s in family]
    for (i, s), (j, t) in combinations(enumerate(family), 2):
        if not s & t:
            report.status = PRECONDITION
            report.witnesses.append({'reason': 'family is not pairwise intersecting',
                                     'sets': [i, j]})
            return report
    common = frozenset(bg.graph)
    for s in family:
        common &= s
    if not common:
        report.fail('pairwise intersecting sets have no common vertex', sets=len(family))
    else:
        report.stats['common'] = _lit(bg, *sorted(common))
    return report.finish()


def _label_order(graph, edge):
    return -graph.edges[edge]['label']


def median_graph_check(system, w, bg=None, explore=None):
    bg = bg if bg is not None else braid_graph(system, w)
    report = _start('median_graph', system, bg, explore)

    certificate = is_median_graph(bg.graph, metric=bg.metric)
    if not certificate.result:
        report.fail('braid graph is not median', triple=_lit(bg, *certificate.witness['triple']),
                    medians=_lit(bg, *certificate.witness['medians']))

    route = contraction_sequence(bg.graph, order=_label_order)
    if not route.result:
        report.fail('no peripheral contraction route to a single vertex',
                    remaining=_lit(bg, *route.remaining))
    report.stats['contractions'] = len(route.steps)
    return report.finish()


###############################################################################
#
# Factorization and the top shadow
# --------------------------------
#

@lru_cache(maxsize=4096)
def _factor_graph(bclass):
    return BraidGraph(bclass)


def factorization_box_check(system, w, bg=None, explore=None):
    """
    The concatenation map from the product of the factor classes onto the
    class of ``w`` must carry the box product of the factor braid graphs
    onto B(w), ordinal for ordinal.
    """
    bg = bg if bg is not None else braid_graph(system, w)
    report = _start('factorization_box', system, bg, explore)
    if not bg.representative:
        return report.finish()

    try:
        factorization = link_factorization(system, bg.representative, bclass=bg.braid_class)
    except OutsideHypotheses as e:
        report.fail('no link factorization', problem=str(e))
        return report.finish()
    factors = [_factor_graph(c) for c in factor_classes(system, factorization)]
    offsets = [sum(f.dimension for f in factors[:k]) for k in range(len(factors))]

    images = {}
    for node in product(*[range(len(f)) for f in factors]):
        images[node] = bg.index.get(Word(letter for f, k in zip(factors, node)
                                         for letter in f.word(k)))
    if (None in images.values() or len(images) != len(bg) or
            len(set(images.values())) != len(bg)):
        report.fail('concatenation is not a bijection onto the braid class',
                    factors=[system.format_word(f.representative) for f in factors])
        return report.finish()

    product_edges = 0
    for node, x in sorted(images.items()):
        for k, f in enumerate(factors):
            for other in f.graph[node[k]]:
                if other < node[k]:
                    continue
                product_edges += 1
                y = images[node[:k] + (other,) + node[k + 1:]]
                expected = offsets[k] + f.label(node[k], other)
                if not bg.graph.has_edge(x, y) or bg.label(x, y) != expected:
                    report.fail('product edge does not map to an edge with the shifted ordinal',
                                edge=_lit(bg, x, y), ordinal=expected)
    if product_edges != bg.graph.number_of_edges():
        report.fail('edge counts differ', product=product_edges,
                    braid_graph=bg.graph.number_of_edges())

    report.stats.update(factors=[system.format_word(f) for f in factorization.factors],
                        sizes=[len(f) for f in factors])
    return report.finish()


def top_shadow_partition_check(system, w, bg=None, explore=None):
    """
    For a link of dimension r: the two sig-bar sets at the top shadow
    partition the class, and dropping the last two letters carries the
    first of them onto the braid graph of a link of dimension r-1.
    """
    bg = bg if bg is not None else braid_graph(system, w)
    report = _start('top_shadow_partition', system, bg, explore)
    rep = bg.representative
    if not rep or bg.dimension == 0 or not is_link(system, rep, bclass=bg.braid_class):
        report.stats['skipped'] = 'not a link of positive dimension'
        return report.finish()

    sigma, upper, lower = top_shadow_split(system, rep, bclass=bg.braid_class)
    if upper & lower or (upper | lower) != bg.braid_class.members:
        report.fail('top shadow sig-bar sets do not partition the class',
                    sigma=system.format_word(sigma))
        return report.finish()

    if bg.dimension >= 2:
        smaller = braid_graph(system, hat(system, sigma), assume_reduced=True)
        dropped = dict((x, x[:-2]) for x in upper)
        if set(dropped.values()) != smaller.braid_class.members or len(smaller) != len(upper):
            report.fail('dropping two letters does not map onto the smaller class',
                        sigma=system.format_word(sigma))
        elif smaller.dimension != bg.dimension - 1 or not is_link(
                system, smaller.representative, bclass=smaller.braid_class):
            report.fail('smaller class is not a link of dimension r-1',
                        sigma=system.format_word(sigma))
        else:
            for x, y in combinations(sorted(upper), 2):
                i, j = bg.vertex(x), bg.vertex(y)
                p, q = smaller.vertex(dropped[x]), smaller.vertex(dropped[y])
                if bg.graph.has_edge(i, j) != smaller.graph.has_edge(p, q):
                    report.fail('dropping two letters does not preserve adjacency',
                                pair=[system.format_word(x), system.format_word(y)])
                    break
    report.stats.update(sigma=system.format_word(sigma), upper=len(upper), lower=len(lower))
    return report.finish()


###############################################################################
#
# The whole suite
# ---------------
#

def property_suite(system, bg, seed=0, samples=None, explore=None, cycles=None):
    """
    Every structural property check on one braid class.
    """
    rep = bg.representative
    reports = [
        bipartite_check(system, bg, explore),
        verify_distance_formula(system, bg, explore),
        geodesic_labels_check(system, bg, explore),
        theta_equivalence_check(system, bg, explore),
        semicube_sigbar_check(system, bg, explore),
        verify_dimI_equals_dim(system, rep, bg, explore),
        cycle_laws_check(system, bg, explore, cycles),
        interval_sigbar_check(system, bg, explore=explore),
        median_graph_check(system, rep, bg, explore),
        majority_median_check(system, bg, samples, seed, explore),
    ]
    if rep:
        reports.append(factorization_box_check(system, rep, bg, explore))
        reports.append(top_shadow_partition_check(system, rep, bg, explore))
    return reports
