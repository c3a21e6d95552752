"""
Braid classes, commutation classes, and the graphs built on them: the
Matsumoto graph of all reduced expressions of an element, and the labeled
braid graph of a single braid class.
"""
import networkx as nx

from .coxeter import (BRAID, COMMUTATION, MOVE_KINDS, Word, find_repeat, move_closure,
    neighbors)
from .exceptions import NotReduced
from .graphs.metric import Metric
from .utils import memo

import logging
log = logging.getLogger(__name__)


def require_reduced(system, w, budget=None):
    w = system.validate(Word(w))
    witness = find_repeat(system, w, budget)
    if witness is not None:
        raise NotReduced(w, witness)
    return w


def _closure_of_reduced(system, w, kinds, budget, assume_reduced):
    if assume_reduced:
        w = system.validate(Word(w))
    else:
        w = require_reduced(system, w, budget)
    return move_closure(system, w, kinds, budget)


class BraidClass (object):
    """
    The words reachable from a reduced word by braid moves alone. Members
    are kept sorted, so ``words[0]`` is the representative.
    """
    def __init__(self, system, members):
        self.system = system
        self.members = frozenset(members)
        self.words = tuple(sorted(self.members))
        self.representative = self.words[0]

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return Word(w) in self.members

    def __eq__(self, other):
        return (isinstance(other, BraidClass) and self.system == other.system and
                self.members == other.members)

    def __hash__(self):
        return hash((self.system, self.representative))

    def __repr__(self):
        return '<BraidClass [%s] of %d words>' % (self.system.format_word(self.representative),
                                                  len(self))

    @property
    def length(self):
        return len(self.representative)

    @property
    @memo
    def centers(self):
        """
        Center positions of the braid shadows of the class, left to right.
        """
        found = set()
        for w in self.words:
            for site, _ in neighbors(self.system, w, (BRAID,)):
                found.add(site.position + 1)
        return tuple(sorted(found))

    @property
    def dimension(self):
        return len(self.centers)

    def letters_at_centers(self, w):
        return tuple(w[c - 1] for c in self.centers)


def braid_class(system, w, budget=None, assume_reduced=False):
    members = _closure_of_reduced(system, w, (BRAID,), budget, assume_reduced)
    return BraidClass(system, members)


def commutation_class(system, w, budget=None, assume_reduced=False):
    return _closure_of_reduced(system, w, (COMMUTATION,), budget, assume_reduced)


def reduced_expressions(system, w, budget=None, assume_reduced=False):
    return _closure_of_reduced(system, w, MOVE_KINDS, budget, assume_reduced)


###############################################################################
#
# Graphs
# ------
#

class BraidGraph (object):
    """
    The braid graph of a braid class. Vertices are the integers
    0..len(class)-1 in lexicographic order of their words; each edge is a
    single braid move and carries ``label``, the 1-based ordinal of the
    class shadow the move acts on.
    """
    def __init__(self, bclass):
        self.system = bclass.system
        self.braid_class = bclass
        self.vertices = bclass.words
        self.index = dict((w, i) for i, w in enumerate(self.vertices))
        self.shadow_centers = bclass.centers

        ordinals = dict((c, j + 1) for j, c in enumerate(self.shadow_centers))
        g = nx.Graph()
        for i, w in enumerate(self.vertices):
            g.add_node(i, word=w)
        for i, w in enumerate(self.vertices):
            for site, other in neighbors(self.system, w, (BRAID,)):
                j = self.index[other]
                if i < j:
                    g.add_edge(i, j, label=ordinals[site.position + 1])
        self.graph = g

    @property
    def dimension(self):
        return len(self.shadow_centers)

    @property
    def representative(self):
        return self.braid_class.representative

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        return sorted((u, v, data['label']) for u, v, data in self.graph.edges(data=True))

    def label(self, u, v):
        return self.graph.edges[u, v]['label']

    def word(self, i):
        return self.vertices[i]

    def vertex(self, w):
        return self.index[Word(w)]

    @memo
    def center_letters(self, i):
        return self.braid_class.letters_at_centers(self.vertices[i])

    @property
    @memo
    def metric(self):
        return Metric(self.graph)

    @memo
    def sigbar(self, i, letter):
        """
        Vertices whose word carries ``letter`` at the center of shadow i.
        """
        return frozenset(x for x in self.graph if self.center_letters(x)[i - 1] == letter)

    def sigbar_sets(self):
        """
        Every distinct sig-bar set of the class, keyed by (ordinal, letter).
        """
        found = {}
        for i in range(1, self.dimension + 1):
            for letter in sorted(set(self.center_letters(x)[i - 1] for x in self.graph)):
                found[(i, letter)] = self.sigbar(i, letter)
        return found

    def sigbar_pair(self, u, v):
        su, sv = self.center_letters(u), self.center_letters(v)
        agree = [k for k in range(self.dimension) if su[k] == sv[k]]
        return frozenset(x for x in self.graph
                         if all(self.center_letters(x)[k] == su[k] for k in agree))

    def __repr__(self):
        return '<BraidGraph B(%s): %d vertices, %d edges>' % (
            self.system.format_word(self.representative), len(self),
            self.graph.number_of_edges())


def braid_graph(system, w, budget=None, assume_reduced=False):
    return BraidGraph(braid_class(system, w, budget, assume_reduced))


class MatsumotoGraph (object):
    """
    All reduced expressions of an element, joined by single moves. Each
    edge carries ``kind``, either commutation or braid.
    """
    def __init__(self, system, words):
        self.system = system
        self.vertices = tuple(sorted(words))
        self.index = dict((w, i) for i, w in enumerate(self.vertices))

        g = nx.Graph()
        for i, w in enumerate(self.vertices):
            g.add_node(i, word=w)
        for i, w in enumerate(self.vertices):
            for site, other in neighbors(system, w):
                j = self.index[other]
                if i < j:
                    g.add_edge(i, j, kind=site.kind)
        self.graph = g

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        return sorted((u, v, data['kind']) for u, v, data in self.graph.edges(data=True))

    def _components_keeping(self, kind):
        h = nx.Graph()
        h.add_nodes_from(self.graph)
        h.add_edges_from((u, v) for u, v, k in self.graph.edges(data='kind') if k == kind)
        return sorted((frozenset(self.vertices[i] for i in c)
                       for c in nx.connected_components(h)), key=min)

    def braid_components(self):
        """
        Components left after deleting the commutation edges: the braid
        classes of the element.
        """
        return self._components_keeping(BRAID)

    def commutation_components(self):
        return self._components_keeping(COMMUTATION)


def matsumoto_graph(system, w, budget=None, assume_reduced=False):
    return MatsumotoGraph(system, reduced_expressions(system, w, budget, assume_reduced))
