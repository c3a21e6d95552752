"""
Box products, the standard small graphs, and box-indecomposability of
partial cubes.
"""
from collections import namedtuple
from itertools import combinations
import networkx as nx

from .cubes import embed_hypercube
from .metric import Metric

import logging
log = logging.getLogger(__name__)


BoxSplit = namedtuple('BoxSplit', ['indecomposable', 'split'])


def _integer_labels(g, attribute):
    return nx.convert_node_labels_to_integers(g, ordering='sorted', label_attribute=attribute)


def box_product(g1, g2):
    """
    The box product with vertices renumbered 0..n-1 in lexicographic order of
    the pairs; each vertex keeps its pair in the ``factors`` attribute.
    """
    return _integer_labels(nx.cartesian_product(g1, g2), 'factors')


def path_graph(n):
    return nx.path_graph(n)


def cycle_graph(n):
    return nx.cycle_graph(n)


def hypercube_graph(n):
    if n == 0:
        g = nx.Graph()
        g.add_node(0)
        return g
    return _integer_labels(nx.hypercube_graph(n), 'bits')


def is_box_indecomposable(g, metric=None):
    """
    A partial cube factors as a box product exactly when its theta classes
    split into two groups A, B with |V| = |proj_A(V)| * |proj_B(V)| for the
    hypercube coordinates. Returns the first such split found, or marks the
    graph indecomposable.
    """
    metric = metric if metric is not None else Metric(g)
    embedding = embed_hypercube(g, metric)
    d = embedding.dimension
    if d < 2:
        return BoxSplit(True, None)

    words = list(embedding.coordinates.values())
    rest = list(range(1, d))
    for size in range(0, d - 1):
        for extra in combinations(rest, size):
            A = (0,) + extra
            B = tuple(k for k in rest if k not in extra)
            left = set(tuple(w[k] for k in A) for w in words)
            right = set(tuple(w[k] for k in B) for w in words)
            if len(left) * len(right) == len(words):
                return BoxSplit(False, (list(A), list(B)))
    return BoxSplit(True, None)
