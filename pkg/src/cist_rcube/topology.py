"""Logic-graph model of RCube-style server-centric data-center networks.

The logic graph L-RCube(n, m, k) abstracts the switches away: every basic
building element (n core servers and m edge servers behind one switch)
becomes a complete graph on n + m vertices, and k recursion levels wire n
copies of the previous level together. Vertices are server addresses,
digit vectors (a_k, ..., a_1, a_0) with a_0 in [0, n+m) and every other
digit in [0, n). A server is a core server when a_0 < n and an edge
server otherwise; edge servers reach other elements only through the
shifted-address attachments of core servers, which is what makes the
graph non-regular.

Two vertices u and v are adjacent when one of three rules holds:

1. they lie in the same element (equal prefixes, different last digit);
2. both are core servers that differ in exactly one digit position above
   the last (the hypercube-style links, the only links when m = 0);
3. one is an edge server e and, for some level i >= 1, the other agrees
   with e on all digits above position i, matches e's digits i..1 shifted
   down by one position, and is free in digit i.

Rule 3 is the logic-level footprint of an edge server plugging the same
local address into switches at every level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import ParameterError

Address = tuple[int, ...]


class VertexClass(Enum):
    CORE = "core"
    EDGE = "edge"


def format_address(addr: Address, n: int, m: int) -> str:
    """Display rendering: concatenated digits when unambiguous, else dotted."""
    if n + m <= 10:
        return "".join(str(d) for d in addr)
    return ".".join(str(d) for d in addr)


def parse_address(text: str, n: int, m: int, k: int) -> Address:
    """Parse a display rendering ("13" or "1.3") back into a digit vector."""
    if "." in text:
        parts = text.split(".")
    else:
        parts = list(text)
    try:
        digits = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParameterError(f"cannot parse address {text!r}") from exc
    _check_address(n, m, k, digits)
    return digits


def _check_address(n: int, m: int, k: int, addr: Address) -> None:
    if len(addr) != k + 1:
        raise ParameterError(f"address {addr} must have {k + 1} digits")
    if not 0 <= addr[-1] < n + m:
        raise ParameterError(f"last digit of {addr} out of range [0, {n + m})")
    for d in addr[:-1]:
        if not 0 <= d < n:
            raise ParameterError(f"digit {d} of {addr} out of range [0, {n})")


def _neighbor_addresses(n: int, m: int, k: int, addr: Address) -> set[Address]:
    """Enumerate the neighbors of one vertex directly from the adjacency rules."""
    out: set[Address] = set()
    prefix, last = addr[:-1], addr[-1]
    for b in range(n + m):
        if b != last:
            out.add(prefix + (b,))
    if last < n:
        for pos in range(k):
            for b in range(n):
                if b != addr[pos]:
                    out.add(addr[:pos] + (b,) + addr[pos + 1:])
        # edge-server partners: deleting digit i from this core address must
        # reproduce the partner's digits k..1
        for i in range(1, k + 1):
            base = addr[:k - i] + addr[k - i + 1:]
            for e0 in range(n, n + m):
                out.add(base + (e0,))
    else:
        for i in range(1, k + 1):
            head, tail = addr[:k - i], addr[k - i:k]
            for b in range(n):
                out.add(head + (b,) + tail)
    return out


class LogicGraph:
    """Immutable L-RCube(n, m, k) with explicit adjacency.

    Vertices are kept in lexicographic order, which also fixes the
    position map used by the CIST constructions: within each element the
    vertex with last digit j-1 is the element's j-th vertex. The graph is
    safe for unrestricted concurrent reads after construction.
    """

    __slots__ = ("n", "m", "k", "vertices", "_index", "_adj", "_edge_set",
                 "_elements", "core_vertices", "edge_vertices")

    def __init__(self, n: int, m: int, k: int):
        if n < 1:
            raise ParameterError(f"need n >= 1, got n={n}")
        if m < 0:
            raise ParameterError(f"need m >= 0, got m={m}")
        if k < 0:
            raise ParameterError(f"need k >= 0, got k={k}")
        if n + m < 2:
            raise ParameterError(f"need n + m >= 2, got n+m={n + m}")
        self.n, self.m, self.k = n, m, k
        vertices = tuple(
            prefix + (last,)
            for prefix in itertools.product(range(n), repeat=k)
            for last in range(n + m)
        )
        self.vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}
        self._adj = {
            v: tuple(sorted(_neighbor_addresses(n, m, k, v))) for v in vertices
        }
        self._edge_set = frozenset(
            (u, w) for u in vertices for w in self._adj[u] if u < w
        )
        self._elements = tuple(
            tuple(group)
            for _, group in itertools.groupby(vertices, key=lambda a: a[:-1])
        )
        self.core_vertices = tuple(v for v in vertices if v[-1] < n)
        self.edge_vertices = tuple(v for v in vertices if v[-1] >= n)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def elements(self) -> tuple[tuple[Address, ...], ...]:
        """Basic building elements (complete subgraphs), lexicographic order."""
        return self._elements

    def __contains__(self, v: Address) -> bool:
        return v in self._index

    def index_of(self, v: Address) -> int:
        return self._index[v]

    def neighbors(self, v: Address) -> tuple[Address, ...]:
        return self._adj[v]

    def degree(self, v: Address) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Address, v: Address) -> bool:
        return (u, v) in self._edge_set if u < v else (v, u) in self._edge_set

    def edges(self) -> list[tuple[Address, Address]]:
        return sorted(self._edge_set)

    def display(self, v: Address) -> str:
        return format_address(v, self.n, self.m)

    def __repr__(self) -> str:
        return f"LogicGraph(n={self.n}, m={self.m}, k={self.k}, |V|={self.num_vertices})"


def build_logic_graph(n: int, m: int, k: int) -> LogicGraph:
    """Build L-RCube(n, m, k); k = 0 yields a single complete graph."""
    return LogicGraph(n, m, k)


def classify_vertex(g: LogicGraph, v: Address) -> VertexClass:
    _require_vertex(g, v)
    return VertexClass.CORE if v[-1] < g.n else VertexClass.EDGE


def are_adjacent(g: LogicGraph, u: Address, v: Address) -> bool:
    """Rule-based adjacency test, independent of the stored adjacency sets."""
    _require_vertex(g, u)
    _require_vertex(g, v)
    if u == v:
        return False
    if u[:-1] == v[:-1]:
        return True
    if u[-1] == v[-1] and u[-1] < g.n:
        if sum(1 for a, b in zip(u[:-1], v[:-1]) if a != b) == 1:
            return True
    k = g.k
    if u[-1] >= g.n and _shift_match(u, v, k):
        return True
    if v[-1] >= g.n and _shift_match(v, u, k):
        return True
    return False


def _shift_match(e: Address, c: Address, k: int) -> bool:
    # edge server e and partner c share a switch at level i iff c carries
    # e's digits i..1 shifted into positions i-1..0 and agrees above i
    for i in range(1, k + 1):
        if e[:k - i] == c[:k - i] and e[k - i:k] == c[k - i + 1:]:
            return True
    return False


def _require_vertex(g: LogicGraph, v: Address) -> None:
    if v not in g:
        raise ParameterError(f"{v} is not a vertex of {g!r}")


@dataclass(frozen=True)
class Subcube:
    """One recursive block H: its vertices and its basic-element partition.

    ``leading_digit`` is the shared digit a_k (None for a k = 0 graph,
    which is a single element). ``elements`` are ordered lexicographically
    by element label; inside an element, index j holds the vertex with
    last digit j.
    """

    leading_digit: int | None
    vertices: tuple[Address, ...]
    elements: tuple[tuple[Address, ...], ...]


def decompose(g: LogicGraph) -> list[Subcube]:
    """Split the graph into its n order-(k-1) blocks, with element maps.

    For k = 0 the decomposition is the single element itself.
    """
    if g.k == 0:
        return [Subcube(None, g.vertices, (g.vertices,))]
    blocks = []
    for lead in range(g.n):
        vertices = tuple(v for v in g.vertices if v[0] == lead)
        elements = tuple(e for e in g.elements if e[0][0] == lead)
        blocks.append(Subcube(lead, vertices, elements))
    return blocks
