"""Exact clique counting and per-vertex clique numbers over bitset adjacency.

Counting uses ordered recursive expansion (each clique enumerated once, in
increasing vertex order). Maximal-clique enumeration uses Bron-Kerbosch with
pivoting under a degeneracy vertex ordering. Both honor an optional work
budget measured in recursion nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .graph import Graph, bits

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """Clique recursion exceeded its node budget."""

    def __init__(self, budget: int):
        super().__init__(f"clique enumeration exceeded work budget of {budget} nodes")
        self.budget = budget


@dataclass(frozen=True)
class CliqueProfile:
    """Per-vertex largest-containing-clique orders and the clique number."""

    c: tuple[int, ...]
    omega: int

    def __post_init__(self):
        if self.c and max(self.c) != self.omega:
            raise ValueError("omega must equal max of the per-vertex profile")


@dataclass(frozen=True)
class CliqueCount:
    t: int
    count: int


class _Work:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int | None):
        self.nodes = 0
        self.budget = DEFAULT_BUDGET if budget is None else budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


def _count_rec(adj: Sequence[int], cand: int, r: int, work: _Work) -> int:
    work.tick()
    if r == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if cand.bit_count() < r - 1:
            break
        sub = cand & adj[v]
        if sub.bit_count() >= r - 1:
            total += _count_rec(adj, sub, r - 1, work)
    return total


def count_cliques(g: Graph, t: int, budget: int | None = None) -> CliqueCount:
    """Exact number of t-vertex cliques in g."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    if t == 1:
        return CliqueCount(1, g.n)
    if t > g.n:
        return CliqueCount(t, 0)
    work = _Work(budget)
    return CliqueCount(t, _count_rec(g.adjacency, g.full_mask, t, work))


def count_cliques_in_neighborhood(g: Graph, v: int, t: int, budget: int | None = None) -> int:
    """Number of t-cliques inside the induced subgraph on N(v)."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    cand = g.adjacency[v]
    if t == 1:
        return cand.bit_count()
    work = _Work(budget)
    return _count_rec(g.adjacency, cand, t, work)


def enumerate_cliques(g: Graph, t: int, mask: int | None = None,
                      budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every t-clique within ``mask`` as a sorted vertex tuple."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    if mask is None:
        mask = g.full_mask
    adj = g.adjacency
    work = _Work(budget)
    stack: list[int] = []

    def rec(cand: int, r: int) -> Iterator[tuple[int, ...]]:
        work.tick()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append(v)
            if r == 1:
                yield tuple(stack)
            else:
                sub = cand & adj[v]
                if sub.bit_count() >= r - 1:
                    yield from rec(sub, r - 1)
            stack.pop()

    yield from rec(mask, t)


def clique_weight_sum(g: Graph, mask: int, t: int, weights: Sequence[Fraction],
                      budget: int | None = None) -> Fraction:
    """Sum over t-cliques within ``mask`` of the product of vertex weights."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    adj = g.adjacency
    work = _Work(budget)

    def rec(cand: int, r: int) -> Fraction:
        work.tick()
        if r == 1:
            return sum((weights[v] for v in bits(cand)), Fraction(0))
        total = Fraction(0)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            sub = cand & adj[v]
            if sub.bit_count() >= r - 1:
                total += weights[v] * rec(sub, r - 1)
        return total

    return rec(mask, t)


def _degeneracy_order(adj: Sequence[int], mask: int) -> list[int]:
    """Vertices of ``mask`` ordered by repeated minimum-degree removal."""
    remaining = mask
    order = []
    while remaining:
        best, best_deg = -1, -1
        for v in bits(remaining):
            d = (adj[v] & remaining).bit_count()
            if best < 0 or d < best_deg:
                best, best_deg = v, d
        order.append(best)
        remaining &= ~(1 << best)
    return order


def _maximal_cliques(adj: Sequence[int], mask: int, work: _Work) -> Iterator[int]:
    """Bron-Kerbosch with pivoting over the induced subgraph on ``mask``.

    Yields each maximal clique as a bitmask. The outer level follows a
    degeneracy ordering for output-sensitive behavior on sparse inputs.
    """

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        work.tick()
        if p == 0 and x == 0:
            yield r
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            d = (adj[u] & p).bit_count()
            if d > best:
                pivot, best = u, d
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            yield from bk(r | bit, p & adj[v] & mask, x & adj[v] & mask)
            p &= ~bit
            x |= bit

    order = _degeneracy_order(adj, mask)
    p = mask
    x = 0
    for v in order:
        bit = 1 << v
        yield from bk(bit, p & adj[v] & mask, x & adj[v] & mask)
        p &= ~bit
        x |= bit


def vertex_clique_numbers(g: Graph, budget: int | None = None) -> CliqueProfile:
    """c(v) = order of the largest clique containing v, for every vertex.

    Isolated vertices get c(v) = 1 (their only clique is the singleton).
    """
    if g.n == 0:
        return CliqueProfile((), 0)
    work = _Work(budget)
    c = [0] * g.n
    for clique in _maximal_cliques(g.adjacency, g.full_mask, work):
        size = clique.bit_count()
        for v in bits(clique):
            if size > c[v]:
                c[v] = size
    return CliqueProfile(tuple(c), max(c))


def _max_clique_order(adj: Sequence[int], mask: int, work: _Work) -> int:
    best = 0
    for clique in _maximal_cliques(adj, mask, work):
        size = clique.bit_count()
        if size > best:
            best = size
    return best


def max_clique_containing(g: Graph, s, budget: int | None = None) -> int:
    """Maximum order of a clique of g containing the clique ``s``.

    Equals |s| plus the clique number of the induced subgraph on the common
    neighborhood of s. Raises ValueError if s is not a clique.
    """
    s_list = list(s)
    verts = sorted(set(s_list))
    if len(verts) != len(s_list):
        raise ValueError("vertex set contains duplicates")
    s_mask = 0
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        s_mask |= 1 << v
    if not g.induces_clique(s_mask):
        raise ValueError(f"vertex set {verts} does not induce a clique")
    common = g.full_mask
    for v in verts:
        common &= g.adjacency[v]
    if common == 0:
        return len(verts)
    work = _Work(budget)
    return len(verts) + _max_clique_order(g.adjacency, common, work)
