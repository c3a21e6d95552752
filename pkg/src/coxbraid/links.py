"""
Braid shadows, dimension, links and link factorization, signatures, and
the sig-bar sets of a braid class.

Most functions take an optional ``bclass`` so callers that already hold the
braid class of ``w`` do not pay for the closure search again.
"""
from collections import namedtuple
from functools import lru_cache
from itertools import product

from .braids import braid_class
from .coxeter import BRAID, Word, apply_move, is_triangle_free, MoveSite, neighbors
from .exceptions import (InvalidWord, InvariantViolation, NotBraidEquivalent, OutOfRange,
    OutsideHypotheses)
from .utils import setting_or

import logging
log = logging.getLogger(__name__)


class Shadow (namedtuple('Shadow', ['center'])):
    """
    The positions [center-1, center+1] of an sts factor.
    """
    __slots__ = ()

    @property
    def interval(self):
        return (self.center - 1, self.center + 1)

    def __str__(self):
        return '[%d,%d]' % self.interval


class Signature (tuple):
    """
    The letters found at the class shadow centers, left to right.
    """
    def __str__(self):
        return '(%s)' % ','.join(str(letter) for letter in self)

    def __repr__(self):
        return 'Signature%s' % (self,)


class LinkFactorization (namedtuple('LinkFactorization', ['factors', 'cuts'])):
    """
    ``factors`` are the maximal link factors; ``cuts`` are the positions p
    such that the word is cut between p and p+1.
    """
    __slots__ = ()

    def literal(self, system):
        return ' | '.join(system.format_word(f) for f in self.factors)

    def __str__(self):
        return ' | '.join(str(f) for f in self.factors)


def _class_of(system, w, bclass, budget=None):
    if bclass is None:
        return braid_class(system, w, budget)
    return bclass


###############################################################################
#
# Shadows and dimension
# ---------------------
#

def shadows(system, w):
    return frozenset(Shadow(site.position + 1)
                     for site, _ in neighbors(system, Word(w), (BRAID,)))


def shadow_centers(system, w):
    return set(site.position + 1 for site, _ in neighbors(system, Word(w), (BRAID,)))


def class_shadows(system, w, bclass=None, budget=None):
    bclass = _class_of(system, w, bclass, budget)
    return tuple(Shadow(c) for c in bclass.centers)


def dimension(system, w, bclass=None, budget=None):
    return _class_of(system, w, bclass, budget).dimension


def is_link(system, w, bclass=None, budget=None):
    w = Word(w)
    if not w:
        raise InvalidWord('The empty word is not a link.')
    if len(w) == 1:
        return True
    if len(w) % 2 == 0:
        return False
    centers = _class_of(system, w, bclass, budget).centers
    return centers == tuple(range(2, len(w), 2))


def _link_spans(centers):
    spans = []
    for c in centers:
        if spans and c - 1 <= spans[-1][1]:
            spans[-1] = (spans[-1][0], c + 1)
        else:
            spans.append((c - 1, c + 1))
    return spans


def link_factorization(system, w, bclass=None, budget=None):
    """
    Split ``w`` into its maximal link factors. Shadows of the class are
    chained while they overlap; each chain covers one factor and every
    position outside a chain is a factor of its own. The result is verified
    against the class before it is returned.
    """
    w = Word(w)
    if not w:
        raise InvalidWord('The empty word has no link factorization.')
    bclass = _class_of(system, w, bclass, budget)

    spans = _link_spans(bclass.centers)
    bounds = []
    position = 1
    for a, b in spans:
        bounds.extend((p, p) for p in range(position, a))
        bounds.append((a, b))
        position = b + 1
    bounds.extend((p, p) for p in range(position, len(w) + 1))

    factors = tuple(w.factor(a, b) for a, b in bounds)
    cuts = tuple(b for a, b in bounds[:-1])
    factorization = LinkFactorization(factors, cuts)

    problem = _factorization_problem(system, bclass, factorization, budget)
    if problem is not None:
        if is_triangle_free(system):
            raise InvariantViolation(problem, witness=[system.format_word(w)])
        raise OutsideHypotheses('%s is not triangle free and %s' % (system, problem))
    return factorization


@lru_cache(maxsize=4096)
def _factor_class(system, f, budget):
    return braid_class(system, f, budget, assume_reduced=True)


def factor_classes(system, factorization, budget=None):
    """
    The braid class of each factor. Factors repeat a lot across a sweep,
    so their classes are kept in a bounded cache.
    """
    budget = setting_or('BUDGET', budget)
    return [_factor_class(system, f, budget) for f in factorization.factors]


def _factorization_problem(system, bclass, factorization, budget=None):
    classes = factor_classes(system, factorization, budget)
    for f, c in zip(factorization.factors, classes):
        if not is_link(system, f, bclass=c):
            return 'factor %s of %s is not a link' % (
                system.format_word(f), system.format_word(bclass.representative))

    rebuilt = frozenset(Word(sum((tuple(m) for m in choice), ()))
                        for choice in product(*[c.words for c in classes]))
    if rebuilt != bclass.members:
        return 'the factor classes of %s do not rebuild its braid class' % (
            system.format_word(bclass.representative),)
    return None


###############################################################################
#
# Signatures and sig-bar sets
# ---------------------------
#

def signature(system, w, bclass=None, budget=None):
    bclass = _class_of(system, w, bclass, budget)
    return Signature(bclass.letters_at_centers(Word(w)))


def sigbar_i(system, w, i, bclass=None, budget=None):
    w = Word(w)
    bclass = _class_of(system, w, bclass, budget)
    if not 1 <= i <= bclass.dimension:
        raise OutOfRange('Shadow ordinal %d is outside 1..%d.' % (i, bclass.dimension))
    c = bclass.centers[i - 1]
    return frozenset(x for x in bclass.words if x[c - 1] == w[c - 1])


def sigbar_pair(system, a, b, bclass=None, budget=None):
    a, b = Word(a), Word(b)
    bclass = _class_of(system, a, bclass, budget)
    if a not in bclass.members or b not in bclass.members:
        raise NotBraidEquivalent('%s and %s are not braid equivalent.'
                                 % (system.format_word(a), system.format_word(b)))
    agree = [c for c in bclass.centers if a[c - 1] == b[c - 1]]
    return frozenset(x for x in bclass.words if all(x[c - 1] == a[c - 1] for c in agree))


def local_support(system, w, i, j, over_class=False, bclass=None, budget=None):
    """
    The generators appearing in positions i..j of ``w``, or of any member of
    its braid class when ``over_class`` is set.
    """
    w = Word(w)
    if not 1 <= i <= j <= len(w):
        raise OutOfRange('Interval [%d,%d] is outside a word of length %d.' % (i, j, len(w)))
    words = _class_of(system, w, bclass, budget).words if over_class else [w]
    return frozenset(letter for x in words for letter in x[i - 1:j])


###############################################################################
#
# The top shadow of a link
# ------------------------
#

def overlapping_realization(system, w, j, bclass=None, budget=None):
    """
    The least member of the class that shows the shadows with ordinals j
    and j+1 at the same time, or None when no member does.
    """
    bclass = _class_of(system, w, bclass, budget)
    if not 1 <= j < bclass.dimension:
        raise OutOfRange('Adjacent ordinals (%d,%d) are outside 1..%d.'
                         % (j, j + 1, bclass.dimension))
    wanted = set([bclass.centers[j - 1], bclass.centers[j]])
    for x in bclass.words:
        if wanted <= shadow_centers(system, x):
            return x
    return None


def top_shadow_split(system, w, bclass=None, budget=None):
    """
    Returns (sigma, upper, lower): sigma shows the top one or two shadows,
    upper is sigbar_r(sigma) and lower is sigbar_r of sigma after the top
    braid move, where r is the dimension.
    """
    bclass = _class_of(system, w, bclass, budget)
    r = bclass.dimension
    if r == 0:
        raise OutOfRange('A class of dimension 0 has no top shadow.')

    top = bclass.centers[-1]
    if r >= 2:
        sigma = overlapping_realization(system, w, r - 1, bclass=bclass)
    else:
        sigma = next((x for x in bclass.words if top in shadow_centers(system, x)), None)
    if sigma is None:
        raise InvariantViolation('No member of [%s] realizes its top shadows.'
                                 % system.format_word(bclass.representative))

    moved = apply_move(system, sigma, MoveSite(BRAID, top - 1))
    return (sigma, sigbar_i(system, sigma, r, bclass=bclass),
            sigbar_i(system, moved, r, bclass=bclass))


def hat(system, sigma):
    sigma = Word(sigma)
    if len(sigma) < 2:
        raise InvalidWord('Cannot drop the last two letters of %s.' % system.format_word(sigma))
    return sigma[:-2]


###############################################################################
#
# Structural assertions
# ---------------------
#

def structure_check(system, w, bclass=None, budget=None):
    """
    Check the structural facts about shadows and signatures that hold in
    triangle-free systems. Returns a list of problem descriptions; empty
    means everything holds.
    """
    w = Word(w)
    bclass = _class_of(system, w, bclass, budget)
    if not is_triangle_free(system):
        log.warning('%s is not triangle free; skipping the shadow and signature '
                    'assertions for %s.', system, system.format_word(w))
        return []

    problems = []
    centers = bclass.centers
    literal = system.format_word(bclass.representative)

    for c, d in zip(centers, centers[1:]):
        if d - c < 2:
            problems.append('shadows centered at %d and %d of [%s] overlap in two positions'
                            % (c, d, literal))

    for c in centers:
        support = local_support(system, w, c, c, over_class=True, bclass=bclass)
        if len(support) != 2:
            problems.append('center %d of [%s] carries %d generators, expected 2'
                            % (c, literal, len(support)))

    overlapping = [k for k in range(len(centers) - 1) if centers[k + 1] - centers[k] == 2]
    for x in bclass.words:
        sig = bclass.letters_at_centers(x)
        for k in overlapping:
            if sig[k] == sig[k + 1]:
                problems.append('%s repeats %d at overlapping centers %d and %d'
                                % (system.format_word(x), sig[k], centers[k], centers[k + 1]))

    if w and is_link(system, w, bclass=bclass):
        sigs = set(bclass.letters_at_centers(x) for x in bclass.words)
        if len(sigs) != len(bclass):
            problems.append('signatures do not tell the members of the link class [%s] apart'
                            % literal)
        for j in range(1, bclass.dimension):
            if overlapping_realization(system, w, j, bclass=bclass) is None:
                problems.append('no member of the link class [%s] shows shadows %d and %d '
                                'together' % (literal, j, j + 1))

    if w:
        factorization = link_factorization(system, w, bclass=bclass)
        classes = factor_classes(system, factorization)
        size = 1
        for c in classes:
            size *= len(c)
        if size != len(bclass):
            problems.append('factor class sizes of [%s] multiply to %d, not %d'
                            % (literal, size, len(bclass)))
        if sum(c.dimension for c in classes) != bclass.dimension:
            problems.append('factor dimensions of [%s] do not add up to %d'
                            % (literal, bclass.dimension))

    return problems
