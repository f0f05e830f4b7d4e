"""Brute-force reference implementations for small graphs.

These deliberately share no clique-expansion code with the fast paths in
``cliques``: everything here is plain subset enumeration over vertex tuples
with pairwise adjacency tests. A hard n <= 20 guard keeps cost bounded.
"""

from __future__ import annotations

from itertools import combinations

from .cliques import CliqueProfile
from .graph import Graph

MAX_ORACLE_N = 20


class OracleSizeError(ValueError):
    """Graph too large for brute-force enumeration."""


def _guard(g: Graph):
    if g.n > MAX_ORACLE_N:
        raise OracleSizeError(f"oracle limited to n <= {MAX_ORACLE_N}, got n={g.n}")


def _is_clique(g: Graph, verts) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(verts, 2))


def brute_count_cliques(g: Graph, t: int) -> int:
    """Count t-cliques by testing every C(n, t) vertex subset."""
    _guard(g)
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    return sum(1 for combo in combinations(range(g.n), t) if _is_clique(g, combo))


def brute_vertex_clique_numbers(g: Graph) -> CliqueProfile:
    """c(v) profile by enumerating every clique subset and updating maxima."""
    _guard(g)
    if g.n == 0:
        return CliqueProfile((), 0)
    c = [1] * g.n
    for k in range(2, g.n + 1):
        for combo in combinations(range(g.n), k):
            if _is_clique(g, combo):
                for v in combo:
                    if k > c[v]:
                        c[v] = k
    return CliqueProfile(tuple(c), max(c))


def brute_kirsch_nir_alpha(g: Graph, copy) -> int:
    """Largest clique order over all cliques containing ``copy``, by subsets."""
    _guard(g)
    copy_list = list(copy)
    base = sorted(set(copy_list))
    if len(base) != len(copy_list):
        raise ValueError("clique copy contains duplicates")
    if not _is_clique(g, base):
        raise ValueError(f"vertex set {base} is not a clique")
    others = [v for v in range(g.n) if v not in set(base)]
    for k in range(len(others), 0, -1):
        for extra in combinations(others, k):
            if _is_clique(g, base + list(extra)):
                return len(base) + k
    return len(base)
