"""Acyclic matching toolkit.

A randomized fixed-parameter solver for finding acyclic matchings whose
size is close to the trivial n/2 upper bound, together with verifiers
and independent-set extractors for acyclic / induced / uniquely
restricted matchings, exact brute-force oracles, and certified instance
generators.
"""

from .graph import MultiGraph, VertexPath
from .matchings import IndependentSetCert
from .oracles import OracleReport
from .reductions import GadgetIndex, X3CFamily
from .solver import AmbtAnswer, ReplacementLog, VfvsOutcome, solve
from .weighted import WeightedInstance

__all__ = [
    "AmbtAnswer",
    "GadgetIndex",
    "IndependentSetCert",
    "MultiGraph",
    "OracleReport",
    "ReplacementLog",
    "VertexPath",
    "VfvsOutcome",
    "WeightedInstance",
    "X3CFamily",
    "solve",
]

__version__ = "0.1.0"
