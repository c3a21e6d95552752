"""
Shortest-path metric of a connected graph: distances, intervals, convexity,
isometric subgraphs and the geodetic number.

Functions take an optional ``metric`` so repeated questions about the same
graph share one all-pairs BFS. Graphs are never mutated after a Metric has
been built for them.
"""
from collections import namedtuple
from itertools import combinations
import networkx as nx

from ..exceptions import DisconnectedGraph, NotACycle
from ..utils import bits, memo

import logging
log = logging.getLogger(__name__)


CONVEX = 'convex'
ISOMETRIC = 'isometric-not-convex'
NEITHER = 'neither'


def require_connected(g):
    if g.number_of_nodes() == 0:
        raise DisconnectedGraph('The graph has no vertices.')
    if not nx.is_connected(g):
        raise DisconnectedGraph('The graph has %d connected components; a connected graph '
                                'is required.' % nx.number_connected_components(g))


class Metric (object):
    """
    All-pairs distances of a connected graph, plus geodesic intervals kept
    as integer bitmasks over the sorted vertex list.
    """
    def __init__(self, g):
        require_connected(g)
        self.graph = g
        self.nodes = sorted(g)
        self.position = dict((v, k) for k, v in enumerate(self.nodes))
        self.dist = dict((u, dict(lengths)) for u, lengths in nx.all_pairs_shortest_path_length(g))
        self.full = (1 << len(self.nodes)) - 1

    def d(self, u, v):
        return self.dist[u][v]

    def mask(self, vertices):
        m = 0
        for v in vertices:
            m |= 1 << self.position[v]
        return m

    def vertices(self, mask):
        return frozenset(self.nodes[k] for k in bits(mask))

    def interval_mask(self, u, v):
        if self.position[u] > self.position[v]:
            u, v = v, u
        return self._interval_mask(u, v)

    @memo
    def _interval_mask(self, u, v):
        duv = self.dist[u][v]
        du, dv = self.dist[u], self.dist[v]
        m = 0
        for k, w in enumerate(self.nodes):
            if du[w] + dv[w] == duv:
                m |= 1 << k
        return m

    def interval(self, u, v):
        return self.vertices(self.interval_mask(u, v))

    @property
    @memo
    def diameter(self):
        return max(max(row.values()) for row in self.dist.values())


def _metric(g, metric):
    return metric if metric is not None else Metric(g)


def distance(g, u, v, metric=None):
    return _metric(g, metric).d(u, v)


def all_pairs(g, metric=None):
    """
    Distances as a nested mapping ``{u: {v: d(u, v)}}``.
    """
    return _metric(g, metric).dist


def diameter(g, metric=None):
    return _metric(g, metric).diameter


def interval(g, u, v, metric=None):
    return _metric(g, metric).interval(u, v)


def is_convex(g, vertices, metric=None):
    metric = _metric(g, metric)
    vertices = sorted(set(vertices))
    inside = metric.mask(vertices)
    for u, v in combinations(vertices, 2):
        if metric.interval_mask(u, v) & ~inside:
            return False
    return True


def convexity_witness(g, vertices, metric=None):
    """
    A pair of members whose interval leaves the set, with a vertex outside;
    None if the set is convex.
    """
    metric = _metric(g, metric)
    vertices = sorted(set(vertices))
    inside = metric.mask(vertices)
    for u, v in combinations(vertices, 2):
        outside = metric.interval_mask(u, v) & ~inside
        if outside:
            return (u, v, metric.nodes[next(bits(outside))])
    return None


def is_isometric_subgraph(g, h, metric=None):
    """
    True if the subgraph ``h`` of ``g`` keeps the distances of ``g``.
    """
    metric = _metric(g, metric)
    if not nx.is_connected(h):
        return False
    inner = dict((u, dict(lengths)) for u, lengths in nx.all_pairs_shortest_path_length(h))
    return all(inner[u][v] == metric.d(u, v) for u in h for v in h)


def classify_cycle(g, cycle, metric=None):
    """
    Classify a cycle, given as its vertices in order, as convex, isometric
    but not convex, or neither, against the metric of ``g``.
    """
    cycle = list(cycle)
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise NotACycle('A cycle needs at least three distinct vertices; got %r.' % (cycle,))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(a, b):
            raise NotACycle('%r and %r are consecutive on the cycle but not adjacent.' % (a, b))

    metric = _metric(g, metric)
    for i, j in combinations(range(k), 2):
        along = min(j - i, k - (j - i))
        if along != metric.d(cycle[i], cycle[j]):
            return NEITHER
    return CONVEX if is_convex(g, cycle, metric) else ISOMETRIC


def diametrical_pairs(g, metric=None):
    metric = _metric(g, metric)
    diam = metric.diameter
    return [(u, v) for u, v in combinations(metric.nodes, 2) if metric.d(u, v) == diam]


Geodetic = namedtuple('Geodetic', ['number', 'sets'])


def geodetic_number(g, metric=None, max_size=None):
    """
    The least k such that the geodesic intervals between the members of
    some k-set cover the graph. ``sets`` lists every covering k-set. Gives
    up (number None) once k would exceed ``max_size``.
    """
    metric = _metric(g, metric)
    nodes = metric.nodes
    if len(nodes) == 1:
        return Geodetic(1, [(nodes[0],)])

    k = 2
    while k <= len(nodes) and (max_size is None or k <= max_size):
        found = []
        for chosen in combinations(nodes, k):
            cover = 0
            for u, v in combinations(chosen, 2):
                cover |= metric.interval_mask(u, v)
            if cover == metric.full:
                found.append(chosen)
        if found:
            return Geodetic(k, found)
        k += 1
    return Geodetic(None, [])
