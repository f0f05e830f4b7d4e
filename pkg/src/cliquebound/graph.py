"""Immutable simple graphs with bitset adjacency rows, parsing, and generators.

Vertices are dense integers 0..n-1. Each adjacency row is a Python int used
as a bitset over [n], so neighborhood intersection is a single ``&``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class ParseError(GraphError):
    """Malformed graph input text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PartSpec:
    """Part sizes of a complete multipartite graph, all >= 1."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes:
            raise GraphError("PartSpec needs at least one part")
        if any(s < 1 for s in self.sizes):
            raise GraphError(f"part sizes must be >= 1, got {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def is_regular(self) -> bool:
        return len(set(self.sizes)) == 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adjacency[v]`` is the neighbor bitset of v."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise GraphError(f"adjacency row {v} references vertices >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def m(self) -> int:
        """Edge count; half the total popcount of the adjacency rows."""
        return sum(row.bit_count() for row in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adjacency[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency))
        return Graph(self.n, rows)

    def induces_clique(self, vertex_mask: int) -> bool:
        """True if the vertices in ``vertex_mask`` are pairwise adjacent."""
        for v in bits(vertex_mask):
            if vertex_mask & ~self.adjacency[v] & ~(1 << v):
                return False
        return True


# ---------------------------------------------------------------------------
# Edge-list format: UTF-8 lines "u v", "#" comments, optional "n m" header.
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list into a Graph.

    The first data line is read as an "n m" header when its first value
    exceeds every vertex index in the remaining lines and its second value
    equals the deduplicated edge count of those lines; otherwise it is an
    edge. Duplicate edges collapse silently; self-loops are errors.
    """
    pairs: list[tuple[int, int, int]] = []  # (u, v, line number)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        pairs.append((u, v, lineno))

    if not pairs:
        return Graph(0, ())

    def dedup(rest: list[tuple[int, int, int]]) -> set[tuple[int, int]]:
        out = set()
        for u, v, lineno in rest:
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            out.add((min(u, v), max(u, v)))
        return out

    head_u, head_v, _ = pairs[0]
    rest = pairs[1:]
    rest_max = max((max(u, v) for u, v, _ in rest), default=-1)
    if head_u > rest_max and head_v == len(dedup(rest)):
        n, edges = head_u, dedup(rest)
    else:
        edges = dedup(pairs)
        n = max(max(u, v) for u, v in edges) + 1
    if edges and max(max(u, v) for u, v in edges) >= n:
        raise ParseError(f"edge index exceeds declared vertex count {n}")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 format: 6-bit groups offset by 63, column-major upper triangle.
# ---------------------------------------------------------------------------

MAX_GRAPH6_N = 1 << 18


def to_graph6(g: Graph) -> str:
    """Encode a graph as a one-line graph6 string (nauty-compatible)."""
    n = g.n
    if n >= MAX_GRAPH6_N:
        raise GraphError(f"graph6 encoding capped at n < {MAX_GRAPH6_N}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr((n >> shift & 0x3F) + 63) for shift in (12, 6, 0))

    bitstream = []
    for col in range(1, n):
        column = g.adjacency[col]
        for row in range(col):
            bitstream.append(column >> row & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    body = []
    for k in range(0, len(bitstream), 6):
        group = 0
        for b in bitstream[k : k + 6]:
            group = group << 1 | b
        body.append(chr(group + 63))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 input")
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character at byte offset {offset}: {ch!r}")

    if s[0] != chr(126):
        n = ord(s[0]) - 63
        pos = 1
    elif len(s) >= 2 and s[1] != chr(126):
        if len(s) < 4:
            raise ParseError("truncated graph6 size field")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        if len(s) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for ch in s[2:8]:
            n = n << 6 | (ord(ch) - 63)
        pos = 8
    if n >= MAX_GRAPH6_N:
        raise ParseError(f"graph6 decoding capped at n < {MAX_GRAPH6_N}")

    need = n * (n - 1) // 2
    have = 6 * (len(s) - pos)
    if have < need or have >= need + 6:
        raise ParseError(
            f"graph6 bit stream length mismatch: need {need} bits, got {have}"
        )
    stream = 0
    for ch in s[pos:]:
        stream = stream << 6 | (ord(ch) - 63)
    stream >>= have - need  # drop padding

    rows = [0] * n
    bit = need - 1
    for col in range(1, n):
        for row in range(col):
            if stream >> bit & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            bit -= 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def generate_complete_multipartite(parts: PartSpec | Iterable[int]) -> Graph:
    """Complete multipartite graph: adjacent iff in different parts."""
    if not isinstance(parts, PartSpec):
        parts = PartSpec(tuple(parts))
    n = parts.n
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in parts.sizes:
        part_mask = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows.append(full & ~part_mask)
        start += size
    return Graph(n, tuple(rows))


def generate_random(n: int, p: Fraction, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with exact rational p.

    PRNG: Python's ``random.Random`` (Mersenne Twister) seeded with ``seed``.
    Pairs are visited in lexicographic order; the pair (u, v) is an edge iff
    getrandbits(64) / 2^64 < p, so identical seeds reproduce identical graphs.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    scaled = p * (1 << 64)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.getrandbits(64) < scaled:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
