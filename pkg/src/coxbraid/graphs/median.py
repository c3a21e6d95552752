"""
Medians, median graphs, and peripheral expansion and contraction.
"""
from collections import namedtuple
from itertools import combinations
from django.conf import settings

from ..exceptions import GraphError, GraphTooLarge, NotConvex
from ..utils import bits, popcount
from .cubes import f_matching_is_isomorphism, semicube, theta_classes
from .metric import Metric, convexity_witness, is_convex

import logging
log = logging.getLogger(__name__)


MedianCertificate = namedtuple('MedianCertificate', ['result', 'witness'])

Contraction = namedtuple('Contraction', ['edge', 'removed'])

ContractionRoute = namedtuple('ContractionRoute', ['result', 'steps', 'remaining'])


def median_triple(g, u, v, w, metric=None):
    metric = metric if metric is not None else Metric(g)
    common = metric.interval_mask(u, v) & metric.interval_mask(u, w) & metric.interval_mask(v, w)
    return metric.vertices(common)


def is_median_graph(g, force=False, metric=None):
    """
    Check every triple of distinct vertices for a unique median. Graphs
    above COXBRAID_MEDIAN_VERTEX_CAP vertices need ``force``.
    """
    cap = settings.COXBRAID_MEDIAN_VERTEX_CAP
    if g.number_of_nodes() > cap and not force:
        raise GraphTooLarge('%d vertices is above the median check cap of %d; pass force=True '
                            'to run it anyway.' % (g.number_of_nodes(), cap))

    metric = metric if metric is not None else Metric(g)
    nodes = metric.nodes
    for u, v, w in combinations(nodes, 3):
        common = (metric.interval_mask(u, v) & metric.interval_mask(u, w) &
                  metric.interval_mask(v, w))
        if popcount(common) != 1:
            return MedianCertificate(False, {
                'triple': [u, v, w],
                'medians': [nodes[k] for k in bits(common)],
            })
    return MedianCertificate(True, None)


def peripheral_expansion(g, U, metric=None):
    """
    Attach a copy of G[U] to ``g``, matching each vertex of U to its copy.
    Vertices must be integers; copies are numbered after the largest vertex,
    in the order of U.
    """
    U = sorted(set(U))
    missing = [x for x in U if x not in g]
    if missing:
        raise GraphError('Vertices %r are not in the graph.' % (missing,))
    if not is_convex(g, U, metric):
        raise NotConvex('Cannot expand along %r: the set is not convex.' % (U,))

    start = max(g) + 1
    copy_of = dict((x, start + k) for k, x in enumerate(U))

    expanded = g.copy()
    for x in U:
        expanded.add_node(copy_of[x])
        expanded.add_edge(x, copy_of[x])
    for a, b in g.subgraph(U).edges():
        expanded.add_edge(copy_of[a], copy_of[b])
    return expanded


def peripheral_contraction(g, u, v, metric=None):
    """
    Undo a peripheral expansion: delete W_vu, provided every vertex of W_vu
    is matched into W_uv, U_uv is convex, and the matching is an
    isomorphism between U_uv and U_vu.
    """
    metric = metric if metric is not None else Metric(g)
    pair = semicube(g, u, v, metric)
    if pair.U_vu != pair.W_vu:
        raise GraphError('W_vu for edge {%r, %r} is not peripheral.' % (u, v))
    if not is_convex(g, pair.U_uv, metric):
        raise NotConvex('U_uv for edge {%r, %r} is not convex.' % (u, v))
    if not f_matching_is_isomorphism(g, pair):
        raise GraphError('F_uv for edge {%r, %r} is not an isomorphism.' % (u, v))
    return g.subgraph(pair.W_uv).copy()


def _try_contract(g, metric, edge):
    u, v = edge
    for a, b in ((u, v), (v, u)):
        try:
            smaller = peripheral_contraction(g, a, b, metric)
        except GraphError:
            continue
        return smaller, Contraction((a, b), sorted(set(g) - set(smaller)))
    return None, None


def contraction_sequence(g, order=None):
    """
    Shrink ``g`` to a single vertex by peripheral contractions. Theta classes
    are tried in the order given by ``order``, a key function on
    (graph, edge); by default the order of their least edges. Succeeds only
    for median graphs.
    """
    current = g
    steps = []
    while current.number_of_nodes() > 1:
        metric = Metric(current)
        theta = theta_classes(current, metric)
        candidates = [theta.representative(k) for k in range(theta.count)]
        if order is not None:
            candidates.sort(key=lambda edge: order(current, edge))

        for edge in candidates:
            smaller, step = _try_contract(current, metric, edge)
            if smaller is not None:
                break
        else:
            log.debug('No peripheral theta class left in a graph of %d vertices',
                      current.number_of_nodes())
            return ContractionRoute(False, steps, sorted(current))

        steps.append(step)
        current = smaller

    return ContractionRoute(True, steps, sorted(current))
