"""
Semicubes, the Djokovic-Winkler relation, partial-cube recognition and
hypercube embeddings.
"""
from collections import namedtuple
from itertools import combinations
import networkx as nx
from networkx.utils import UnionFind

from ..exceptions import InvariantViolation, NotAnEdge, NotAPartialCube
from ..utils import memoized
from .metric import Metric, convexity_witness

import logging
log = logging.getLogger(__name__)


SemicubePair = namedtuple('SemicubePair', ['u', 'v', 'W_uv', 'W_vu', 'U_uv', 'U_vu', 'F_uv'])

PartialCubeCertificate = namedtuple('PartialCubeCertificate', [
    'result', 'bipartite', 'theta_transitive', 'semicubes_convex', 'witness'])

HypercubeEmbedding = namedtuple('HypercubeEmbedding', ['dimension', 'base', 'coordinates'])


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


def sorted_edges(g):
    return sorted(edge_key(u, v) for u, v in g.edges())


def semicube(g, u, v, metric=None):
    """
    W_uv holds the vertices strictly closer to u than to v; U_uv those of
    W_uv with a neighbor in W_vu; F_uv the edges between the two W sets,
    each written with its W_uv end first.
    """
    if not g.has_edge(u, v):
        raise NotAnEdge('{%r, %r} is not an edge.' % (u, v))
    metric = metric if metric is not None else Metric(g)
    du, dv = metric.dist[u], metric.dist[v]

    W_uv = frozenset(x for x in metric.nodes if du[x] < dv[x])
    W_vu = frozenset(x for x in metric.nodes if dv[x] < du[x])
    F_uv = []
    for a, b in g.edges():
        if a in W_uv and b in W_vu:
            F_uv.append((a, b))
        elif b in W_uv and a in W_vu:
            F_uv.append((b, a))
    F_uv = frozenset(F_uv)
    U_uv = frozenset(a for a, b in F_uv)
    U_vu = frozenset(b for a, b in F_uv)
    return SemicubePair(u, v, W_uv, W_vu, U_uv, U_vu, F_uv)


###############################################################################
#
# The theta relation
# ------------------
#

class ThetaPartition (object):
    """
    Classes of the transitive closure of theta. ``transitive`` says whether
    the raw relation already was an equivalence; when it was not, ``witness``
    holds edges e, f, g with e theta f, f theta g, but not e theta g.
    """
    def __init__(self, edges, classes, transitive, witness):
        self.edges = edges
        self.classes = classes
        self.transitive = transitive
        self.witness = witness

    @property
    def count(self):
        return len(set(self.classes.values()))

    def members(self, k):
        return [e for e in self.edges if self.classes[e] == k]

    def class_of(self, u, v):
        return self.classes[edge_key(u, v)]

    def representative(self, k):
        return self.members(k)[0]

    def __repr__(self):
        return '<ThetaPartition %d classes%s>' % (
            self.count, '' if self.transitive else ', not transitive')


def _sides(metric, e):
    x, y = e
    dx, dy = metric.dist[x], metric.dist[y]
    return dict((w, (dx[w] > dy[w]) - (dx[w] < dy[w])) for w in metric.nodes)


def _side_masks(metric, e):
    x, y = e
    dx, dy = metric.dist[x], metric.dist[y]
    near_x = near_y = 0
    for k, w in enumerate(metric.nodes):
        if dx[w] < dy[w]:
            near_x |= 1 << k
        elif dy[w] < dx[w]:
            near_y |= 1 << k
    return near_x, near_y


def raw_theta(g, metric=None):
    """
    The raw relation as bitmasks over ``sorted_edges(g)``: bit k of
    ``related[i]`` is set when edge k joins W_xy to W_yx for edge i = xy.
    This is theta by its definition; ``theta_classes`` only falls back to
    it when ``matching_theta`` does not apply.
    """
    metric = metric if metric is not None else Metric(g)
    edges = sorted_edges(g)
    related = []
    for e in edges:
        side = _sides(metric, e)
        mask = 0
        for k, (a, b) in enumerate(edges):
            if side[a] * side[b] == -1:
                mask |= 1 << k
        related.append(mask)
    return edges, related


def matching_theta(g, metric=None):
    """
    Group the edges by their pair of semicubes {W_xy, W_yx}. Edges with the
    same pair are theta related. If the graph is bipartite and every edge
    joining the two semicubes of a group lies in that group, theta relates
    only edges with matching semicube pairs, so it is an equivalence whose
    classes are the groups.

    Returns (edges, groups), each group a sorted list of indexes into
    ``edges``, or None when that criterion fails.
    """
    metric = metric if metric is not None else Metric(g)
    edges = sorted_edges(g)
    groups = {}
    for i, e in enumerate(edges):
        near_x, near_y = _side_masks(metric, e)
        if near_x | near_y != metric.full:
            return None
        groups.setdefault((min(near_x, near_y), max(near_x, near_y)), []).append(i)

    ends = [(1 << metric.position[u], 1 << metric.position[v]) for u, v in edges]
    for (p, q), members in groups.items():
        crossing = sum(1 for a, b in ends if (a & p and b & q) or (a & q and b & p))
        if crossing != len(members):
            return None
    return edges, sorted(groups.values(), key=min)


def theta_classes(g, metric=None):
    metric = metric if metric is not None else Metric(g)
    if g is not metric.graph:
        return _theta_classes(g, metric)
    return memoized(metric, 'theta_classes', lambda: _theta_classes(g, metric))


def _theta_classes(g, metric):
    matched = matching_theta(g, metric)
    if matched is not None:
        edges, groups = matched
        numbered = {}
        for k, group in enumerate(groups):
            for i in group:
                numbered[edges[i]] = k
        return ThetaPartition(edges, numbered, True, None)

    log.debug('Semicube pairs do not match on a graph of %d vertices; using raw theta',
              g.number_of_nodes())
    edges, related = raw_theta(g, metric)

    classes = UnionFind(range(len(edges)))
    for i, mask in enumerate(related):
        k = 0
        while mask:
            if mask & 1:
                classes.union(i, k)
            mask >>= 1
            k += 1

    ids = {}
    numbered = {}
    for i, e in enumerate(edges):
        root = classes[i]
        if root not in ids:
            ids[root] = len(ids)
        numbered[e] = ids[root]

    transitive, witness = True, None
    for group in sorted((sorted(s) for s in classes.to_sets()), key=min):
        group_mask = sum(1 << k for k in group)
        for i in group:
            if related[i] & group_mask != group_mask:
                transitive = False
                witness = _transitivity_witness(edges, related, group)
                break
        if not transitive:
            break

    return ThetaPartition(edges, numbered, transitive, witness)


def _transitivity_witness(edges, related, group):
    for i in group:
        for j in group:
            if not related[i] >> j & 1:
                continue
            for k in group:
                if related[j] >> k & 1 and not related[i] >> k & 1:
                    return (edges[i], edges[j], edges[k])
    return None


###############################################################################
#
# Partial cubes
# -------------
#

def is_partial_cube(g, metric=None):
    """
    Decide whether ``g`` is a partial cube twice over: bipartite with a
    transitive theta, and bipartite with convex semicubes. The two answers
    must agree.
    """
    metric = metric if metric is not None else Metric(g)
    if g is not metric.graph:
        return _is_partial_cube(g, metric)
    return memoized(metric, 'is_partial_cube', lambda: _is_partial_cube(g, metric))


def _is_partial_cube(g, metric):
    edges = sorted_edges(g)

    bipartite = nx.is_bipartite(g)
    witness = None
    if not bipartite:
        for u, v in edges:
            du, dv = metric.dist[u], metric.dist[v]
            tie = next((x for x in metric.nodes if du[x] == dv[x]), None)
            if tie is not None:
                witness = {'reason': 'not bipartite', 'edge': [u, v], 'equidistant': tie}
                break

    theta = theta_classes(g, metric)
    if theta.transitive is False and witness is None:
        witness = {'reason': 'theta not transitive', 'edges': [list(e) for e in theta.witness]}

    convex = True
    for u, v in edges:
        pair = semicube(g, u, v, metric)
        for side, (a, b) in ((pair.W_uv, (u, v)), (pair.W_vu, (v, u))):
            found = convexity_witness(g, side, metric)
            if found is not None:
                convex = False
                if witness is None:
                    witness = {'reason': 'semicube not convex', 'edge': [a, b],
                               'pair': [found[0], found[1]], 'outside': found[2]}
                break
        if not convex:
            break

    by_theta = bipartite and theta.transitive
    by_convexity = bipartite and convex
    if by_theta != by_convexity:
        raise InvariantViolation(
            'Partial cube tests disagree: bipartite=%s, theta transitive=%s, semicubes '
            'convex=%s.' % (bipartite, theta.transitive, convex), witness=witness)

    return PartialCubeCertificate(by_theta, bipartite, theta.transitive, convex, witness)


def isometric_dimension(g, metric=None):
    metric = metric if metric is not None else Metric(g)
    certificate = is_partial_cube(g, metric)
    if not certificate.result:
        raise NotAPartialCube('Not a partial cube: %s.' % certificate.witness['reason'])
    return theta_classes(g, metric).count


def embed_hypercube(g, metric=None):
    """
    Coordinates in {0,1}^d for a partial cube, with the least vertex at the
    origin. Coordinate k of x is 0 when x lies on the origin's side of the
    k-th theta class; classes are numbered by their least edge.
    """
    metric = metric if metric is not None else Metric(g)
    certificate = is_partial_cube(g, metric)
    if not certificate.result:
        raise NotAPartialCube('Not a partial cube: %s.' % certificate.witness['reason'])

    theta = theta_classes(g, metric)
    base = metric.nodes[0]
    columns = []
    for k in range(theta.count):
        a, b = theta.representative(k)
        da, db = metric.dist[a], metric.dist[b]
        base_near_a = da[base] < db[base]
        columns.append(dict((x, '0' if (da[x] < db[x]) == base_near_a else '1')
                            for x in metric.nodes))
    coordinates = dict((x, ''.join(column[x] for column in columns)) for x in metric.nodes)

    for u, v in combinations(metric.nodes, 2):
        hamming = sum(1 for p, q in zip(coordinates[u], coordinates[v]) if p != q)
        if hamming != metric.d(u, v):
            raise InvariantViolation('Embedding puts %r and %r at Hamming distance %d, but '
                                     'their distance is %d.' % (u, v, hamming, metric.d(u, v)),
                                     witness=[u, v])

    return HypercubeEmbedding(theta.count, base, coordinates)


def f_matching_is_isomorphism(g, pair):
    """
    In a partial cube F_uv is a matching, and it carries G[U_uv] onto
    G[U_vu] edge for edge.
    """
    forward = dict(pair.F_uv)
    if len(forward) != len(pair.F_uv) or len(set(forward.values())) != len(forward):
        return False
    for a, b in combinations(sorted(forward), 2):
        if g.has_edge(a, b) != g.has_edge(forward[a], forward[b]):
            return False
    return True
