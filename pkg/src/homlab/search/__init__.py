"""Homomorphism search: exhaustive oracle, AC-pruned backtracking, oracle-driven construction."""

from homlab.search.trace import TraceNode
from homlab.search.brute_force import brute_force_hom
from homlab.search.backtracking import homomorphically_equivalent, iter_homomorphisms, search_hom
from homlab.search.oracles import (
    ArcConsistencyOracle,
    BruteForceOracle,
    CountingOracle,
    DecisionOracle,
    KConsistencyOracle,
    OracleFactory,
    PathConsistencyOracle,
    SearchOracle,
    SingletonArcConsistencyOracle,
)
from homlab.search.construction import construct_solution

__all__ = [
    "TraceNode",
    "brute_force_hom",
    "homomorphically_equivalent",
    "iter_homomorphisms",
    "search_hom",
    "ArcConsistencyOracle",
    "BruteForceOracle",
    "CountingOracle",
    "DecisionOracle",
    "KConsistencyOracle",
    "OracleFactory",
    "PathConsistencyOracle",
    "SearchOracle",
    "SingletonArcConsistencyOracle",
    "construct_solution",
]
