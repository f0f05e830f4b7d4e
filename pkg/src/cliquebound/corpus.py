"""Named small graphs and seeded random corpora used by selfcheck and tests."""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, generate_complete_multipartite, generate_random


def complete_graph(n: int) -> Graph:
    return generate_complete_multipartite([1] * n) if n else Graph(0, ())


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def paw_graph() -> Graph:
    """Triangle {0,1,2} with a pendant vertex 3 attached to 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def octahedron() -> Graph:
    return generate_complete_multipartite([2, 2, 2])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def named_small_graphs() -> dict[str, Graph]:
    return {
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "paw": paw_graph(),
        "octahedron": octahedron(),
        "P4": path_graph(4),
        "star5": star_graph(5),
        "petersen": petersen_graph(),
        "empty3": empty_graph(3),
        "K33": generate_complete_multipartite([3, 3]),
    }


def seeded_random_corpus(count: int, ns, ps, base_seed: int) -> list[tuple[str, Graph]]:
    """Deterministic list of (name, graph): cycles through (n, p) pairs."""
    ns = list(ns)
    ps = [Fraction(p) for p in ps]
    out = []
    for k in range(count):
        n = ns[k % len(ns)]
        p = ps[(k // len(ns)) % len(ps)]
        seed = base_seed + k
        name = f"random_n{n}_p{p.numerator}-{p.denominator}_seed{seed}"
        out.append((name, generate_random(n, p, seed)))
    return out


def regular_multipartite_family(part_sizes=(1, 2, 3), part_counts=(2, 3, 4),
                                max_n: int = 12) -> list[tuple[str, Graph]]:
    """Every K_{s x r} with s in part_sizes, r in part_counts, s*r <= max_n."""
    out = []
    for s in part_sizes:
        for r in part_counts:
            if s * r <= max_n:
                out.append((f"K_{s}x{r}", generate_complete_multipartite([s] * r)))
    return out
