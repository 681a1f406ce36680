"""Exact circumference, connectivity, fragment and scheme tools for small graphs."""

import json

from ._cyclebound import (
    BudgetExceeded,
    FamilySpecError,
    Graph,
    Graph6Error,
    ScanError,
    SchemeError,
    SearchInfeasible,
    circumference,
    circumference_dp,
    cli,
    connectivity,
    connectivity_exhaustive,
    independence_number,
    independence_number_exhaustive,
    min_degree,
    scheme_bound,
    statements,
)
from . import _cyclebound


def _graph(g):
    if isinstance(g, Graph):
        return g
    try:
        return Graph.construct(g)
    except FamilySpecError:
        return Graph.from_graph6(g)


def invariants(g, budget_ms=None):
    return json.loads(_cyclebound._invariants(_graph(g), budget_ms))


def fragments(g):
    return json.loads(_cyclebound._fragments(_graph(g)))


def verify(statement, g, budget_ms=None):
    return json.loads(_cyclebound._verify(statement, _graph(g), budget_ms))


def lemma(name, g):
    return json.loads(_cyclebound._lemma(name, _graph(g)))


def min_host(sizes, r, host, cap=14):
    found = _cyclebound._min_host(list(sizes), r, host, cap)
    return None if found is None else json.loads(found)


def scan(config):
    return json.loads(_cyclebound._scan(json.dumps(config)))


__all__ = [
    "BudgetExceeded",
    "FamilySpecError",
    "Graph",
    "Graph6Error",
    "ScanError",
    "SchemeError",
    "SearchInfeasible",
    "circumference",
    "circumference_dp",
    "cli",
    "connectivity",
    "connectivity_exhaustive",
    "fragments",
    "independence_number",
    "independence_number_exhaustive",
    "invariants",
    "lemma",
    "min_degree",
    "min_host",
    "scan",
    "scheme_bound",
    "statements",
    "verify",
]
