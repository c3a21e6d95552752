"""
Instance generation and conjecture sweeps.

A sweep walks the braid classes of a system (every class up to a word
length, a seeded sample of random reduced words, or only the links), runs
the requested conjecture checks on each class in a Celery task, and
reduces the per-class results into a SweepReport. Each class is also
re-checked against the structural properties; a failure there aborts
the sweep with InvariantViolation.
"""
import random
from itertools import combinations
from django.conf import settings

from .braids import BraidClass, braid_class, braid_graph
from .checks import (OBSERVED, graph_stats, median_graph_check, observing, property_suite,
    verify_dimI_equals_dim, verify_distance_formula)
from .coxeter import (BRAID, COMMUTATION, CoxeterSystem, Word, apply_move, enumerate_move_sites,
    is_reduced, move_closure, resolve_system, right_descents, tits_closure)
from .exceptions import BudgetExceeded, GraphTooLarge, InvariantViolation, SweepConfigError
from .graphs import diametrical_pairs, embed_hypercube, geodetic_number, is_box_indecomposable
from .links import is_link
from .utils import derive_seed, setting_or

import logging
log = logging.getLogger(__name__)


EXHAUSTIVE = 'exhaustive'
RANDOM = 'random'
LINKS = 'links'
MODES = (EXHAUSTIVE, RANDOM, LINKS)

PASS = 'pass'
COUNTEREXAMPLE = 'counterexample'
SKIPPED = 'skipped'
STATUSES = (PASS, COUNTEREXAMPLE, SKIPPED, OBSERVED)

EXPORTS = ('commutation', 'coordinates')

DEFAULT_RANDOM_COUNT = 100
MAX_DETAIL_ITEMS = 10


def default_caps():
    return {
        'triples': settings.COXBRAID_TRIPLE_CAP,
        'median_samples': settings.COXBRAID_MEDIAN_SAMPLES,
        'cycles': settings.COXBRAID_CYCLE_CAP,
    }


###############################################################################
#
# Instance specs
# --------------
#

class InstanceSpec (object):
    """
    What a sweep covers and what it checks. ``length`` is the word length L:
    exhaustive and links modes cover every reduced word up to it, random
    mode grows words to at most that length.
    """
    def __init__(self, system, mode=EXHAUSTIVE, length=None, seed=0, count=None, checks=(),
                 caps=None, links_only=False, min_dimension=0, explore=None, exports=(),
                 budget=None, word_budget=None):
        if not isinstance(system, CoxeterSystem):
            system = resolve_system(system)
        if mode not in MODES:
            raise SweepConfigError('Unknown sweep mode %r; expected one of %s.'
                                   % (mode, ', '.join(MODES)))
        if length is None:
            raise SweepConfigError('A sweep needs a word length L.')
        max_length = settings.COXBRAID_MAX_SWEEP_LENGTH
        if not 0 <= length <= max_length:
            raise SweepConfigError('L must be between 0 and %d (COXBRAID_MAX_SWEEP_LENGTH); '
                                   'got %d.' % (max_length, length))
        unknown = [name for name in checks if name not in CHECKS]
        if unknown:
            raise SweepConfigError('Unknown checks: %s. Available: %s.'
                                   % (', '.join(unknown), ', '.join(sorted(CHECKS))))
        unknown = [name for name in exports if name not in EXPORTS]
        if unknown:
            raise SweepConfigError('Unknown exports: %s. Available: %s.'
                                   % (', '.join(unknown), ', '.join(EXPORTS)))

        self.system = system
        self.mode = mode
        self.length = length
        self.seed = seed
        self.count = count if count is not None else DEFAULT_RANDOM_COUNT
        self.checks = list(checks)
        self.caps = default_caps()
        self.caps.update(caps or {})
        self.links_only = links_only or mode == LINKS
        self.min_dimension = min_dimension
        self.explore = setting_or('EXPLORE', explore)
        self.exports = list(exports)
        self.budget = setting_or('BUDGET', budget)
        self.word_budget = setting_or('SWEEP_WORD_BUDGET', word_budget)

    @classmethod
    def from_config(cls, config, **overrides):
        """
        Build a spec from a validated sweep config (see
        serializers.SweepConfigSerializer). Keyword arguments that are not
        None replace the config values.
        """
        options = {
            'mode': config.get('mode', EXHAUSTIVE),
            'length': config.get('L'),
            'seed': config.get('seed', 0),
            'count': config.get('count'),
            'checks': config.get('checks', ()),
            'caps': config.get('caps'),
            'links_only': config.get('links_only', False),
            'min_dimension': config.get('min_dimension', 0),
            'explore': config.get('explore'),
            'exports': config.get('exports', ()),
        }
        options.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(config['system'], **options)

    def with_checks(self, checks):
        spec = InstanceSpec.__new__(InstanceSpec)
        spec.__dict__.update(self.__dict__)
        spec.checks = list(checks)
        return spec

    def to_config(self):
        return {
            'system': str(self.system),
            'system_spec': self.system.to_spec(),
            'mode': self.mode,
            'L': self.length,
            'seed': self.seed,
            'count': self.count if self.mode == RANDOM else None,
            'checks': list(self.checks),
            'caps': dict(sorted(self.caps.items())),
            'links_only': self.links_only,
            'min_dimension': self.min_dimension,
            'explore': self.explore,
            'exports': list(self.exports),
        }

    def task_options(self):
        return {
            'checks': list(self.checks),
            'caps': dict(self.caps),
            'explore': self.explore,
            'exports': list(self.exports),
            'budget': self.budget,
        }

    def __repr__(self):
        return '<InstanceSpec %s %s L=%d>' % (self.system, self.mode, self.length)


###############################################################################
#
# Generating instances
# --------------------
#

def _element_levels(system, length, budget, word_budget):
    """
    Yield (k, {key: reduced expressions}) for the elements of length k,
    k = 0..length, each element keyed by its least reduced word. Elements
    of length k+1 come from appending a non-descent to those of length k.
    """
    level = {Word(): frozenset([Word()])}
    visited = 1
    yield 0, level

    for k in range(1, length + 1):
        found = {}
        owner = set()
        for key in sorted(level):
            descents = right_descents(system, key, closure=level[key])
            for s in system.generators:
                if s in descents:
                    continue
                w = key + (s,)
                if w in owner:
                    continue
                closure = tits_closure(system, w, budget)
                visited += len(closure)
                if visited > word_budget:
                    raise BudgetExceeded.of(word_budget, 'reduced words in the sweep')
                found[min(closure)] = closure
                owner.update(closure)
        if not found:
            log.info('%s has no elements of length %d; stopping early.', system, k)
            return
        log.debug('%d elements of length %d in %s', len(found), k, system)
        yield k, found
        level = found


def _braid_classes(system, words, budget):
    remaining = set(words)
    while remaining:
        start = min(remaining)
        members = move_closure(system, start, (BRAID,), budget)
        remaining -= members
        yield BraidClass(system, members)


def _exhaustive_classes(spec):
    for k, level in _element_levels(spec.system, spec.length, spec.budget, spec.word_budget):
        batch = []
        for key in sorted(level):
            batch.extend(_braid_classes(spec.system, level[key], spec.budget))
        for bclass in sorted(batch, key=lambda c: c.representative):
            yield bclass


def _random_word(system, length, rng, budget):
    w = Word()
    for _ in range(length):
        letters = list(system.generators)
        rng.shuffle(letters)
        for s in letters:
            candidate = w + (s,)
            if is_reduced(system, candidate, budget):
                w = candidate
                break
        else:
            break
    return w


def _random_classes(spec):
    rng = random.Random(spec.seed)
    found = {}
    for _ in range(spec.count):
        w = _random_word(spec.system, spec.length, rng, spec.budget)
        bclass = braid_class(spec.system, w, spec.budget, assume_reduced=True)
        found.setdefault(bclass.representative, bclass)
    for rep in sorted(found, key=lambda w: (len(w), w)):
        yield found[rep]


def _keep(spec, bclass):
    if bclass.dimension < spec.min_dimension:
        return False
    if spec.links_only:
        rep = bclass.representative
        return bool(rep) and is_link(spec.system, rep, bclass=bclass)
    return True


def generate_classes(spec):
    source = _random_classes(spec) if spec.mode == RANDOM else _exhaustive_classes(spec)
    for bclass in source:
        if _keep(spec, bclass):
            yield bclass


def generate_instances(spec):
    """
    Stream one representative (the least word) per braid class covered by
    ``spec``, shortest first.
    """
    for bclass in generate_classes(spec):
        yield bclass.representative


###############################################################################
#
# Checks on one instance
# ----------------------
#

def _outcome(ok, **detail):
    detail['status'] = PASS if ok else COUNTEREXAMPLE
    return detail


def _skipped(reason):
    return {'status': SKIPPED, 'reason': reason}


def _literals(bg, vertices):
    return [bg.system.format_word(bg.word(x)) for x in vertices]


def _is_link(bg):
    rep = bg.representative
    return bool(rep) and is_link(bg.system, rep, bclass=bg.braid_class)


def diam_eq_dim(bg, caps, seed):
    diam = bg.metric.diameter
    return _outcome(diam == bg.dimension, diam=diam, dim=bg.dimension)


def dimI_eq_diam(bg, caps, seed):
    stats = graph_stats(bg)
    if stats['dimI'] is None:
        return _skipped('braid graph is not a partial cube')
    return _outcome(stats['dimI'] == stats['diam'], dimI=stats['dimI'], diam=stats['diam'])


def geodetic_number_two(bg, caps, seed):
    if len(bg) == 1:
        return _outcome(True, number=1)
    geodetic = geodetic_number(bg.graph, bg.metric, max_size=3)
    detail = {
        'number': geodetic.number,
        'covering_sets': len(geodetic.sets),
        'sets': [_literals(bg, s) for s in geodetic.sets[:MAX_DETAIL_ITEMS]],
    }
    if geodetic.number != 2:
        return _outcome(False, **detail)
    if _is_link(bg):
        detail['link'] = True
        return _outcome(len(geodetic.sets) == 1, **detail)
    return _outcome(True, **detail)


def unique_diametrical_pair(bg, caps, seed):
    if not _is_link(bg):
        return _skipped('not a link')
    if len(bg) == 1:
        return _outcome(True, pairs=0)
    pairs = diametrical_pairs(bg.graph, bg.metric)
    return _outcome(len(pairs) == 1, pairs=len(pairs),
                    diametrical=[_literals(bg, p) for p in pairs[:MAX_DETAIL_ITEMS]])


def sigbar_triples(bg, caps, seed):
    """
    No three sig-bar sets of the class are pairwise disjoint. Beyond the
    triples cap a seeded sample of triples is examined instead.
    """
    if bg.dimension == 0:
        return _skipped('dimension 0')
    sets = sorted(bg.sigbar_sets().items())
    total = len(sets) * (len(sets) - 1) * (len(sets) - 2) // 6
    cap = caps['triples']
    if total > cap:
        rng = random.Random(seed)
        triples = sorted(tuple(sorted(rng.sample(range(len(sets)), 3))) for _ in range(cap))
        log.warning('Sampling %d of %d sig-bar triples for %r.', cap, total, bg)
    else:
        triples = combinations(range(len(sets)), 3)

    examined = 0
    for i, j, k in triples:
        examined += 1
        (ka, a), (kb, b), (kc, c) = sets[i], sets[j], sets[k]
        if not (a & b or a & c or b & c):
            return _outcome(False, examined=examined, total=total, capped=total > cap,
                            triple=[{'ordinal': key[0], 'letter': key[1],
                                     'members': _literals(bg, sorted(members))}
                                    for key, members in ((ka, a), (kb, b), (kc, c))])
    return _outcome(True, examined=examined, total=total, capped=total > cap)


def link_indecomposable(bg, caps, seed):
    if not _is_link(bg) or bg.dimension < 2:
        return _skipped('not a link of dimension at least 2')
    split = is_box_indecomposable(bg.graph, bg.metric)
    return _outcome(split.indecomposable, split=split.split)


def properties(bg, caps, seed, explore=None, reports=None):
    if reports is None:
        reports = property_suite(bg.system, bg, seed, caps['median_samples'], explore,
                                 caps['cycles'])
    failed = [r for r in reports if r.failed]
    if failed:
        raise InvariantViolation('%s failed on %r.' % (', '.join(r.check for r in failed), bg),
                                 witness=[r.witnesses for r in failed])
    return {'status': PASS, 'checks': dict((r.check, r.status) for r in reports)}


CHECKS = {
    'diam_eq_dim': diam_eq_dim,
    'geodetic_number_two': geodetic_number_two,
    'unique_diametrical_pair': unique_diametrical_pair,
    'sigbar_triples': sigbar_triples,
    'dimI_eq_diam': dimI_eq_diam,
    'link_indecomposable': link_indecomposable,
    'properties': properties,
}


SANITY_CHECKS = ('distance_formula', 'dimI_equals_dim', 'median_graph')


def _sanity(system, bg, explore, suite=None):
    """
    Re-verify the distance formula, the partial-cube property and the
    median property, reusing the reports of a property suite already run
    on ``bg``. Returns their statuses; raises InvariantViolation when one
    fails on a triangle-free system.
    """
    rep = bg.representative
    if suite is not None:
        reports = [r for r in suite if r.check in SANITY_CHECKS]
    else:
        reports = [
            verify_distance_formula(system, bg, explore),
            verify_dimI_equals_dim(system, rep, bg, explore),
        ]
        try:
            reports.append(median_graph_check(system, rep, bg, explore))
        except GraphTooLarge as e:
            log.warning('Skipping the median sanity check for %r: %s', bg, e)

    for report in reports:
        if report.failed:
            raise InvariantViolation('Sanity check %s failed on %s in %s: %s'
                                     % (report.check, report.literal, system,
                                        report.witnesses[0]['reason']),
                                     witness=report.witnesses)
    return dict((r.check, r.stats.get('outcome', r.status)) for r in reports)


def export_commutation(bg, budget=None):
    """
    Apply each commutation move available in the representative and
    describe the braid class it lands in.
    """
    system = bg.system
    rep = bg.representative
    rows = []
    for site in sorted(enumerate_move_sites(system, rep, (COMMUTATION,)), key=lambda s: s.position):
        w = apply_move(system, rep, site)
        other = braid_class(system, w, budget, assume_reduced=True)
        rows.append({
            'position': site.position,
            'word': system.format_word(w),
            'representative': system.format_word(other.representative),
            'link': is_link(system, w, bclass=other),
            'dimension': other.dimension,
            'class_size': len(other),
        })
    return rows


def export_coordinates(bg):
    embedding = embed_hypercube(bg.graph, bg.metric)
    return dict((bg.system.format_word(bg.word(x)), embedding.coordinates[x])
                for x in sorted(bg.graph))


def check_instance(system, w, checks=(), caps=None, seed=0, explore=None, exports=(),
                   budget=None):
    """
    Everything a sweep records about the braid class of the reduced word
    ``w``, as plain data.
    """
    explore = setting_or('EXPLORE', explore)
    watching = observing(system, 'the sweep', explore)
    all_caps = default_caps()
    all_caps.update(caps or {})

    bg = braid_graph(system, w, budget, assume_reduced=True)
    rep = bg.representative
    suite = None
    if 'properties' in checks:
        suite = property_suite(system, bg, seed, all_caps['median_samples'], explore,
                               all_caps['cycles'])
    result = {
        'word': system.format_word(rep),
        'length': len(rep),
        'dimension': bg.dimension,
        'class_size': len(bg),
        'link': _is_link(bg),
        'seed': seed,
        'stats': graph_stats(bg),
        'sanity': _sanity(system, bg, explore, suite),
        'checks': {},
    }

    for name in checks:
        if name == 'properties':
            outcome = properties(bg, all_caps, seed, explore, suite)
        else:
            outcome = CHECKS[name](bg, all_caps, seed)
        if watching and outcome['status'] != SKIPPED:
            outcome['outcome'] = 'holds' if outcome['status'] == PASS else 'violated'
            outcome['status'] = OBSERVED
        result['checks'][name] = outcome

    if exports:
        result['exports'] = {}
        if 'commutation' in exports:
            result['exports']['commutation'] = export_commutation(bg, budget) if rep else []
        if 'coordinates' in exports:
            result['exports']['coordinates'] = export_coordinates(bg)
    return result


###############################################################################
#
# Sweeps
# ------
#

class SweepReport (object):
    """
    Per-instance results, per-check status counts and the counterexamples
    found. Results may be added in any order; ``finish`` sorts them.
    """
    def __init__(self, spec):
        self.config = spec.to_config()
        self.caps = dict(sorted(spec.caps.items()))
        self.instances = []
        self.totals = dict((name, dict((s, 0) for s in STATUSES)) for name in spec.checks)
        self.counterexamples = []

    def add(self, result):
        self.instances.append(result)
        for name, outcome in result['checks'].items():
            self.totals[name][outcome['status']] += 1
            if outcome['status'] == COUNTEREXAMPLE:
                self.counterexamples.append({
                    'check': name,
                    'system': self.config['system'],
                    'system_spec': self.config['system_spec'],
                    'word': result['word'],
                    'seed': result['seed'],
                    'detail': outcome,
                })
        return self

    def finish(self):
        self.instances.sort(key=lambda r: (r['length'], r['word']))
        self.counterexamples.sort(key=lambda c: (c['check'], len(c['word']), c['word']))
        return self

    @property
    def instance_count(self):
        return len(self.instances)

    @property
    def has_counterexamples(self):
        return bool(self.counterexamples)

    def __repr__(self):
        return '<SweepReport %s: %d instances, %d counterexamples>' % (
            self.config['system'], len(self.instances), len(self.counterexamples))


def run_sweep(spec):
    """
    Generate the instances of ``spec`` (an InstanceSpec or a sweep config
    dict), check them in batches of Celery tasks with a seed per class
    derived from the master seed and the representative, and reduce the
    results.
    """
    from .tasks import check_batch_task

    if not isinstance(spec, InstanceSpec):
        spec = InstanceSpec.from_config(spec)
    observing(spec.system, 'a sweep', spec.explore)

    words = [spec.system.format_word(w) for w in generate_instances(spec)]
    log.info('Sweeping %d braid classes of %s (%s, L=%d) for %s', len(words), spec.system,
             spec.mode, spec.length, ', '.join(spec.checks) or 'sanity checks only')

    system = spec.system.to_dict()
    options = spec.task_options()
    size = settings.COXBRAID_SWEEP_BATCH
    pending = []
    for start in range(0, len(words), size):
        batch = words[start:start + size]
        seeds = [derive_seed(spec.seed, literal) for literal in batch]
        pending.append(check_batch_task.delay(system, batch, seeds, **options))

    report = SweepReport(spec)
    for results in pending:
        for result in results.get():
            report.add(result)
    report.finish()

    log.info('Sweep of %s done: %d instances, %d counterexamples', spec.system,
             report.instance_count, len(report.counterexamples))
    return report


def check_diam_eq_dim(spec):
    return run_sweep(spec.with_checks(['diam_eq_dim']))


def check_geodetic_number_two(spec):
    return run_sweep(spec.with_checks(['geodetic_number_two']))


def check_unique_diametrical_pair(spec):
    return run_sweep(spec.with_checks(['unique_diametrical_pair']))


def check_sigbar_triples(spec):
    return run_sweep(spec.with_checks(['sigbar_triples']))


def check_dimI_eq_diam(spec):
    return run_sweep(spec.with_checks(['dimI_eq_diam']))


def check_link_indecomposable(spec):
    return run_sweep(spec.with_checks(['link_indecomposable']))
