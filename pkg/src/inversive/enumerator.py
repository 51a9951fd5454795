"""Brute-force functional graph of the generator and its component decomposition.

This is the ground truth the analytic predictions are checked against, so it
shares nothing with :mod:`inversive.analytic` beyond the parameter type.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .exceptions import BudgetExceeded
from .iprng import Params
from .structure import (
    Component,
    ConvergentTree,
    CycleSet,
    GComponent,
    GraphStructure,
    OtherComponent,
    SelfLoop,
)

DEFAULT_BUDGET = 10**7
DOT_LIMIT = 10**4


@lru_cache(maxsize=8)
def _inverse_table(p: int, e: int) -> np.ndarray:
    """x^-1 mod p^e for every unit x (zero in non-unit slots)."""
    q = p**e
    x = np.arange(q, dtype=np.int64)
    units = x % p != 0
    # x^(phi(q) - 1) by square-and-multiply; q < 2^32 keeps products in int64.
    exp = p ** (e - 1) * (p - 1) - 1
    result = np.ones(q, dtype=np.int64)
    base = x.copy()
    while exp:
        if exp & 1:
            result = result * base % q
        base = base * base % q
        exp >>= 1
    result[~units] = 0
    result.setflags(write=False)
    return result


@dataclass(frozen=True)
class FunctionalGraph:
    params: Params
    successor: np.ndarray
    in_degree: np.ndarray

    @property
    def q(self) -> int:
        return len(self.successor)


def build_graph(P: Params, budget: int = DEFAULT_BUDGET) -> FunctionalGraph:
    q = P.q
    if q > budget:
        raise BudgetExceeded(f"state space {q} exceeds budget {budget}")
    if q >= 2**31:
        raise BudgetExceeded("vectorized construction needs q < 2^31")
    inv = _inverse_table(P.p, P.e)
    succ = (P.a * inv + P.b) % q
    succ[np.arange(q) % P.p == 0] = P.b
    indeg = np.bincount(succ, minlength=q)
    succ.setflags(write=False)
    indeg.setflags(write=False)
    return FunctionalGraph(P, succ, indeg)


@dataclass(frozen=True)
class ComponentInfo:
    """One connected component.

    ``tree_summary`` maps each cycle node that has a non-empty attached tree
    to ``(tree size, tree height)``.
    """

    cycle_nodes: Tuple[int, ...]
    cycle_length: int
    size: int
    tree_summary: Dict[int, Tuple[int, int]]
    shape: Component


@dataclass(frozen=True)
class ExactStructure:
    params: Params
    components: Tuple[ComponentInfo, ...]
    pre_period: np.ndarray  # distance of each node to its cycle
    period: np.ndarray  # cycle length of each node's component
    component_of: np.ndarray

    def to_graph_structure(self) -> GraphStructure:
        return GraphStructure(tuple(c.shape for c in self.components)).canonical()


def decompose(G: FunctionalGraph) -> ExactStructure:
    succ = G.successor.tolist()
    q = len(succ)
    indeg = G.in_degree.tolist()

    # Peel leaves until only cycle nodes remain; `order` lists tree nodes leaf-first.
    remaining = list(indeg)
    order: List[int] = [x for x in range(q) if remaining[x] == 0]
    i = 0
    while i < len(order):
        y = succ[order[i]]
        remaining[y] -= 1
        if remaining[y] == 0:
            order.append(y)
        i += 1
    on_cycle = [True] * q
    for x in order:
        on_cycle[x] = False

    comp = [-1] * q
    depth = [0] * q
    root = list(range(q))
    cycles: List[List[int]] = []
    for x in range(q):
        if on_cycle[x] and comp[x] < 0:
            cyc, y = [], x
            while comp[y] < 0:
                comp[y] = len(cycles)
                cyc.append(y)
                y = succ[y]
            cycles.append(cyc)
    for x in reversed(order):
        y = succ[x]
        comp[x], depth[x], root[x] = comp[y], depth[y] + 1, root[y]

    period = [len(cycles[c]) for c in comp]
    trees: Dict[int, List[int]] = {}
    for x in order:
        trees.setdefault(root[x], []).append(x)
    by_comp: Dict[int, List[int]] = {}
    for r in trees:
        by_comp.setdefault(comp[r], []).append(r)

    infos = []
    for cid, cyc in enumerate(cycles):
        hubs = by_comp.get(cid, [])
        summary = {r: (len(trees[r]), max(depth[x] for x in trees[r])) for r in sorted(hubs)}
        size = len(cyc) + sum(s for s, _ in summary.values())
        shape = _classify_shape(cyc, hubs, trees, succ, indeg, depth, on_cycle)
        infos.append(ComponentInfo(tuple(cyc), len(cyc), size, summary, shape))

    return ExactStructure(
        G.params,
        tuple(infos),
        np.asarray(depth, dtype=np.int64),
        np.asarray(period, dtype=np.int64),
        np.asarray(comp, dtype=np.int64),
    )


def _classify_shape(cyc, hubs, trees, succ, indeg, depth, on_cycle) -> Component:
    L = len(cyc)
    if not hubs:
        return SelfLoop(1) if L == 1 else CycleSet(L, 1)
    size = L + sum(len(trees[r]) for r in hubs)
    if len(hubs) == 1:
        nodes = trees[hubs[0]]
        # n disjoint paths of length L: every tree node has at most one
        # predecessor, and the n leaves all sit at depth L.
        leaves = [x for x in nodes if indeg[x] == 0]
        n = len(leaves)
        if (
            all(indeg[x] <= 1 for x in nodes)
            and len(nodes) == n * L
            and all(depth[x] == L for x in leaves)
        ):
            return GComponent(L, n)
        if L == 1:
            prof = Counter(depth[x] for x in nodes)
            prof[0] += 1
            return ConvergentTree(cyc[0], dict(prof))
    return OtherComponent(size, L)


def cycle_histogram(S: ExactStructure, units_only: bool = False) -> Dict[int, int]:
    p = S.params.p
    hist: Counter = Counter()
    for c in S.components:
        if units_only and any(x % p == 0 for x in c.cycle_nodes):
            continue
        hist[c.cycle_length] += 1
    return dict(sorted(hist.items()))


def export_dot(G: FunctionalGraph, limit: int = DOT_LIMIT) -> str:
    if G.q > limit:
        raise BudgetExceeded(f"refusing to render {G.q} nodes (limit {limit})")
    lines = ["digraph iprng {"]
    lines += [f"  {x} -> {y};" for x, y in enumerate(G.successor.tolist())]
    lines.append("}")
    return "\n".join(lines) + "\n"
