"""
Simply-laced Coxeter systems, words over their generators, and the
commutation and braid moves that relate reduced expressions.

Group elements have no representation of their own here: an element is
the move closure of any of its reduced words.
"""
import re
from collections import deque, namedtuple
from functools import lru_cache
import networkx as nx

from .exceptions import SystemSpecError, InvalidWord, InvalidMove, BudgetExceeded
from .utils import setting_or

import logging
log = logging.getLogger(__name__)


COMMUTATION = 'commutation'
BRAID = 'braid'
MOVE_KINDS = (COMMUTATION, BRAID)

FAMILY_ALIASES = {
    'a': 'A',
    'd': 'D',
    'affa': 'affA',
    'affinea': 'affA',
    'affd': 'affD',
    'affined': 'affD',
}

MIN_RANK = {
    'A': 1,
    'D': 3,
    'affA': 2,
    'affD': 4,
}


###############################################################################
#
# Systems
# -------
#

def _check_pair(n, s, t):
    for g in (s, t):
        if not 1 <= g <= n:
            raise SystemSpecError('Generator index %d is out of range; expected 1..%d.' % (g, n))
    if s == t:
        raise SystemSpecError('Bond (%d,%d) is a self-loop; m(s,s) is always 1.' % (s, t))
    return (min(s, t), max(s, t))


class CoxeterSystem (object):
    """
    A simply-laced Coxeter system on generators 1..n. Only the pairs with
    m(s,t) = 3 are stored; every other pair of distinct generators commutes.
    Treat instances as immutable.
    """
    def __init__(self, n, edges=(), name=None, commutation_moves=None):
        try:
            n = int(n)
        except (TypeError, ValueError):
            raise SystemSpecError('The number of generators must be an integer, not %r.' % (n,))
        if n < 1:
            raise SystemSpecError('A Coxeter system needs at least one generator; got n=%d.' % n)

        pairs = set()
        for s, t in edges:
            pairs.add(_check_pair(n, s, t))

        self.n = n
        self.edges = tuple(sorted(pairs))
        self.name = name
        self.commutation_moves = bool(setting_or('COMMUTATION_MOVES', commutation_moves))
        self._bonded = frozenset(pairs)

    @property
    def generators(self):
        return range(1, self.n + 1)

    def m(self, s, t):
        if s == t:
            return 1
        return 3 if (min(s, t), max(s, t)) in self._bonded else 2

    @property
    def bonds(self):
        """
        The full bond table, keyed by ordered pairs (s, t) with s < t.
        """
        return dict(((s, t), self.m(s, t))
                    for s in self.generators for t in self.generators if s < t)

    def to_spec(self):
        if not self.edges:
            return 'n=%d' % self.n
        return 'n=%d; 3: %s' % (self.n, ''.join('(%d,%d)' % e for e in self.edges))

    def to_dict(self):
        return {
            'n': self.n,
            'edges': [list(e) for e in self.edges],
            'name': self.name,
            'commutation_moves': self.commutation_moves,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data['n'], [tuple(e) for e in data['edges']], name=data.get('name'),
                   commutation_moves=data.get('commutation_moves'))

    def _key(self):
        return (self.n, self.edges, self.commutation_moves)

    def __eq__(self, other):
        return isinstance(other, CoxeterSystem) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return self.name or self.to_spec()

    def __repr__(self):
        return '<CoxeterSystem %s>' % (self,)

    # Words

    def word(self, letters):
        w = Word(letters)
        self.validate(w)
        return w

    def validate(self, w):
        for letter in w:
            if not 1 <= letter <= self.n:
                raise InvalidWord('Letter %d is not a generator of %s (expected 1..%d).'
                                  % (letter, self, self.n))
        return w

    def parse_word(self, text):
        return parse_word(self, text)

    def format_word(self, w):
        return format_word(self, w)


def build_named_system(family, rank, commutation_moves=None):
    """
    Build one of the standard families on the usual labelling: a path for
    A; a fork at generator 3 for D; a cycle for affine A; forks at both ends
    for affine D. The affine families get an extra generator n+1.
    """
    canonical = FAMILY_ALIASES.get(str(family).lower())
    if canonical is None:
        raise SystemSpecError('Unknown family %r; expected one of A, D, affA, affD.' % (family,))
    family = canonical

    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise SystemSpecError('Rank must be an integer, not %r.' % (rank,))
    if rank < MIN_RANK[family]:
        raise SystemSpecError('Family %s needs rank >= %d; got %d.'
                              % (family, MIN_RANK[family], rank))

    if family == 'A':
        n = rank
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == 'D':
        n = rank
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
    elif family == 'affA':
        n = rank + 1
        edges = [(i, i + 1) for i in range(1, rank)] + [(1, rank + 1), (rank, rank + 1)]
    else:
        n = rank + 1
        edges = ([(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank - 1)] +
                 [(rank - 1, rank), (rank - 1, rank + 1)])

    return CoxeterSystem(n, edges, name='%s%d' % (family, rank),
                         commutation_moves=commutation_moves)


SHORTHAND_RE = re.compile(r'^\s*([A-Za-z]+)\s*:\s*(\d+)\s*$')
HEADER_RE = re.compile(r'^\s*n\s*=\s*(\d+)\s*$')
CLAUSE_RE = re.compile(r'^\s*(\d+)\s*:\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)*)$')
PAIR_RE = re.compile(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)')


def parse_system(text, commutation_moves=None):
    """
    Parse the textual system format, for example::

        n=3; 3: (1,2)(2,3)

    Clauses are separated by semicolons or newlines and ``#`` starts a
    comment. Pairs may be listed under bond 3 or, redundantly, under bond 2;
    unlisted pairs commute.
    """
    lines = [line.split('#', 1)[0] for line in str(text).splitlines()]
    clauses = [c.strip() for c in ';'.join(lines).split(';') if c.strip()]
    if not clauses:
        raise SystemSpecError('Empty system specification.')

    header = HEADER_RE.match(clauses[0])
    if header is None:
        raise SystemSpecError('A system specification must start with "n=<count>"; got %r.'
                              % clauses[0])
    n = int(header.group(1))

    bonded, commuting = set(), set()
    for clause in clauses[1:]:
        match = CLAUSE_RE.match(clause)
        if match is None:
            raise SystemSpecError('Malformed bond clause %r; expected e.g. "3: (1,2)(2,3)".'
                                  % clause)
        value = int(match.group(1))
        if value not in (2, 3):
            raise SystemSpecError('Bond value %d is not supported; only simply-laced bonds '
                                  '(2 or 3) are allowed.' % value)
        for s, t in PAIR_RE.findall(match.group(2)):
            s, t = int(s), int(t)
            (bonded if value == 3 else commuting).add((min(s, t), max(s, t)))

    clash = bonded & commuting
    if clash:
        raise SystemSpecError('Pair (%d,%d) is listed with both bond 2 and bond 3.'
                              % sorted(clash)[0])
    for s, t in commuting:
        _check_pair(n, s, t)

    return CoxeterSystem(n, sorted(bonded), commutation_moves=commutation_moves)


def resolve_system(text, commutation_moves=None):
    """
    Accept either the FAMILY:RANK shorthand (``D:4``, ``affA:2``) or the
    full textual format understood by ``parse_system``.
    """
    match = SHORTHAND_RE.match(str(text))
    if match:
        return build_named_system(match.group(1), match.group(2),
                                  commutation_moves=commutation_moves)
    return parse_system(text, commutation_moves=commutation_moves)


def coxeter_graph(system):
    g = nx.Graph()
    g.add_nodes_from(system.generators)
    g.add_edges_from(system.edges)
    return g


@lru_cache(maxsize=None)
def is_triangle_free(system):
    return not any(nx.triangles(coxeter_graph(system)).values())


###############################################################################
#
# Words
# -----
#

class Word (tuple):
    """
    A sequence of generator indices. Positions are 1-based wherever this
    package talks about them (``factor``, ``letter``, move sites, shadows).
    """
    def __new__(cls, letters=()):
        return super(Word, cls).__new__(cls, (int(letter) for letter in letters))

    def __getitem__(self, index):
        result = tuple.__getitem__(self, index)
        if isinstance(index, slice):
            return Word(result)
        return result

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def letter(self, i):
        if not 1 <= i <= len(self):
            raise InvalidWord('Position %d is outside a word of length %d.' % (i, len(self)))
        return self[i - 1]

    def factor(self, i, j):
        if not 1 <= i <= j <= len(self):
            raise InvalidWord('Factor [%d,%d] is outside a word of length %d.'
                              % (i, j, len(self)))
        return self[i - 1:j]

    def literal(self, n=None):
        if n is None:
            n = max(self) if self else 0
        if n <= 9:
            return ''.join(str(letter) for letter in self)
        return ','.join(str(letter) for letter in self)

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return 'Word(%r)' % self.literal()


def parse_word(system, text):
    """
    Read a word literal: a digit string for systems with at most nine
    generators, otherwise a comma-separated list. ``e`` and the empty string
    both denote the empty word.
    """
    text = str(text).strip()
    if text in ('', 'e'):
        return Word()

    if ',' in text or system.n > 9:
        parts = [p.strip() for p in text.split(',')]
    else:
        parts = list(text)

    if not all(p.isdigit() for p in parts):
        raise InvalidWord('Malformed word literal %r.' % text)
    return system.validate(Word(int(p) for p in parts))


def format_word(system, w):
    return Word(w).literal(system.n)


###############################################################################
#
# Moves
# -----
#

MoveSite = namedtuple('MoveSite', ['kind', 'position'])


def _iter_sites(system, w, kinds=MOVE_KINDS):
    commute = COMMUTATION in kinds and system.commutation_moves
    braid = BRAID in kinds
    for i in range(len(w) - 1):
        s, t = w[i], w[i + 1]
        if commute and system.m(s, t) == 2:
            yield MoveSite(COMMUTATION, i + 1)
        if braid and i + 2 < len(w) and w[i + 2] == s and system.m(s, t) == 3:
            yield MoveSite(BRAID, i + 1)


def _apply(w, site):
    # Letters are already valid here; bypass Word.__new__.
    letters = tuple.__getitem__(w, slice(None))
    i = site.position - 1
    s, t = letters[i], letters[i + 1]
    if site.kind == COMMUTATION:
        letters = letters[:i] + (t, s) + letters[i + 2:]
    else:
        letters = letters[:i] + (t, s, t) + letters[i + 3:]
    return tuple.__new__(Word, letters)


def enumerate_move_sites(system, w, kinds=MOVE_KINDS):
    """
    All legal move sites of ``w``. Restricted to braid moves, the sites are
    the braid shadows of ``w``: a braid site at position p is the shadow
    [p, p+2] with center p+1.
    """
    return frozenset(_iter_sites(system, w, kinds))


def apply_move(system, w, site):
    kind, p = site
    if kind not in MOVE_KINDS:
        raise InvalidMove('Unknown move kind %r.' % (kind,))
    span = 2 if kind == COMMUTATION else 3
    if not 1 <= p <= len(w) - span + 1:
        raise InvalidMove('A %s site at position %d does not fit in a word of length %d.'
                          % (kind, p, len(w)))

    s, t = w[p - 1], w[p]
    if kind == COMMUTATION:
        if not system.commutation_moves:
            raise InvalidMove('Commutation moves are disabled for %s.' % (system,))
        if system.m(s, t) != 2:
            raise InvalidMove('A commutation site needs m(s,t) = 2, but m(%d,%d) = %d at '
                              'position %d.' % (s, t, system.m(s, t), p))
    else:
        if w[p + 1] != s:
            raise InvalidMove('A braid site needs letters s,t,s, but positions %d..%d hold '
                              '%d,%d,%d.' % (p, p + 2, s, t, w[p + 1]))
        if system.m(s, t) != 3:
            raise InvalidMove('A braid site needs m(s,t) = 3, but m(%d,%d) = %d at position %d.'
                              % (s, t, system.m(s, t), p))

    return _apply(Word(w), MoveSite(kind, p))


def neighbors(system, w, kinds=MOVE_KINDS):
    """
    Yield (site, word) for each single move out of ``w``, in site order.
    """
    for site in _iter_sites(system, w, kinds):
        yield site, _apply(w, site)


###############################################################################
#
# Closures and reducedness
# ------------------------
#

def move_closure(system, w, kinds=MOVE_KINDS, budget=None):
    """
    Breadth-first closure of ``w`` under the given move kinds. Raises
    BudgetExceeded as soon as more than ``budget`` words have been found.
    """
    budget = setting_or('BUDGET', budget)
    w = Word(w)
    seen = {w}
    queue = deque([w])
    while queue:
        word = queue.popleft()
        for site in _iter_sites(system, word, kinds):
            other = _apply(word, site)
            if other not in seen:
                seen.add(other)
                if len(seen) > budget:
                    raise BudgetExceeded.of(budget)
                queue.append(other)

    log.debug('Closure of %s under %s has %d words', w, '+'.join(kinds), len(seen))
    return frozenset(seen)


def tits_closure(system, w, budget=None):
    return move_closure(system, w, MOVE_KINDS, budget)


def find_repeat(system, w, budget=None):
    """
    Search the move closure of ``w`` for a word with two equal adjacent
    letters. Returns (word, position) for the first one found, or None.
    """
    budget = setting_or('BUDGET', budget)
    w = Word(w)
    seen = {w}
    queue = deque([w])
    while queue:
        word = queue.popleft()
        for i in range(len(word) - 1):
            if word[i] == word[i + 1]:
                return word, i + 1
        for site in _iter_sites(system, word):
            other = _apply(word, site)
            if other not in seen:
                seen.add(other)
                if len(seen) > budget:
                    raise BudgetExceeded.of(budget)
                queue.append(other)
    return None


def is_reduced(system, w, budget=None):
    return find_repeat(system, w, budget) is None


def reduce(system, w, budget=None):
    """
    Cancel adjacent pairs until none can be exposed by moves. The result is a
    reduced word for the same group element.
    """
    w = Word(w)
    while True:
        witness = find_repeat(system, w, budget)
        if witness is None:
            return w
        word, i = witness
        w = word[:i - 1] + word[i + 1:]


def right_descents(system, w, closure=None, budget=None):
    """
    The generators s with l(ws) < l(w), for reduced ``w``: by the exchange
    condition these are exactly the last letters of its reduced expressions.
    """
    if closure is None:
        closure = tits_closure(system, w, budget)
    return frozenset(word[-1] for word in closure if word)
