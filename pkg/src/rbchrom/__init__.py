"""Exact symmetric, quasisymmetric and noncommutative symmetric functions, with
chromatic and Redei-Berge invariants of graphs, digraphs and posets."""

from .core import SetPartition, PositionSubset
from .structures import Digraph, Graph, Poset
from .symfn import QSymElement, SymElement, UniPolynomial
from .ncsym import NCSymElement
from .invariants import W_redei, Y_chromatic, chromatic_sym, redei_berge, redei_berge_sym

__all__ = [
    "SetPartition", "PositionSubset", "Digraph", "Graph", "Poset",
    "QSymElement", "SymElement", "UniPolynomial", "NCSymElement",
    "W_redei", "Y_chromatic", "chromatic_sym", "redei_berge", "redei_berge_sym",
]
__version__ = "0.1.0"
