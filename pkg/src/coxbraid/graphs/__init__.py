"""
A system-agnostic toolkit for connected simple graphs held as networkx
graphs: metric questions, semicubes and theta, partial cubes, medians and
box products.
"""
from .metric import *
from .cubes import *
from .median import *
from .products import *
