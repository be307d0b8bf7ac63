"""Constructions of completely independent spanning trees (CISTs).

A set of spanning trees is completely independent when the trees are
pairwise edge-disjoint and no vertex has degree >= 2 in more than one of
them. The constructions here cover:

* complete graphs: floor(N/2) double-star trees, tree j having exactly
  the two inner vertices j and j+floor(N/2) (1-based);
* L-RCube(n, m, 1): per-element double stars joined through a central
  core vertex (m > 0), or through both inner vertices with a spine-edge
  swap (m = 0, the BCube case);
* L-RCube(n, m, k): the order-1 construction lifted level by level; each
  level prefixes n copies of the previous trees and joins them at the
  first element's inner vertices.

Joins always connect two vertices that are already inner in their
subtrees, so no leaf ever turns into an inner vertex and the defining
property survives the recursion. The number of trees is
floor((1+m)/2) when n = 1 and min(n, floor((n+m)/2)) otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .errors import ParameterError, UnsupportedParametersError

Vertex = Hashable
Edge = tuple[Vertex, Vertex]


def _canon(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if u < v else (v, u)


class Tree:
    """An undirected tree stored as sorted adjacency lists.

    The constructor only checks local sanity (no loops, no duplicate
    edges); connectivity and acyclicity are the verify module's job.
    """

    __slots__ = ("_adj",)

    def __init__(self, edges: Iterable[Edge]):
        adj: dict[Vertex, set[Vertex]] = {}
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            if u in adj and v in adj[u]:
                raise ParameterError(f"duplicate edge ({u}, {v})")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in sorted(adj.items())}

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(
            (v, w) for v, ns in self._adj.items() for w in ns if v < w
        ))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(
            (v, w) for v, ns in self._adj.items() for w in ns if v < w
        )

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    @property
    def num_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __contains__(self, v: Vertex) -> bool:
        return v in self._adj

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def leaves(self) -> tuple[Vertex, ...]:
        return tuple(v for v, ns in self._adj.items() if len(ns) == 1)

    def inner_vertices(self) -> tuple[Vertex, ...]:
        return tuple(v for v, ns in self._adj.items() if len(ns) >= 2)

    def __repr__(self) -> str:
        return f"Tree(|V|={self.num_vertices}, |E|={self.num_edges})"


@dataclass(frozen=True)
class CistSet:
    """An ordered family of CISTs over one vertex set.

    ``inner_offset`` is the gap between the two inner-vertex positions of
    each element tree (floor((n+m)/2)); ``params`` records (n, m, k) when
    the set was built over a logic graph, None for a bare complete graph.
    """

    trees: tuple[Tree, ...]
    inner_offset: int
    params: tuple[int, int, int] | None = None

    @property
    def count(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)


def cist_count(n: int, m: int) -> int:
    """Number of CISTs the constructions produce for L-RCube(n, m, k)."""
    if n == 1:
        return (1 + m) // 2
    return min(n, (n + m) // 2)


def complete_graph_cist_edges(num_vertices: int) -> list[list[tuple[int, int]]]:
    """Edge lists (1-based indices) of floor(N/2) CISTs of the complete graph.

    Tree i connects its two inner vertices i and i+t directly, hangs
    vertices i+1 .. i+t-1 off vertex i, and the rest off vertex i+t.
    """
    if num_vertices < 4:
        raise UnsupportedParametersError(
            f"complete-graph construction needs >= 4 vertices, got {num_vertices}")
    half = num_vertices // 2
    trees = []
    for i in range(1, half + 1):
        edges = [(i, i + half)]
        edges += [(i, j) for j in range(i + 1, half + i)]
        edges += [(i + half, j) for j in range(1, i)]
        edges += [(i + half, j) for j in range(half + i + 1, num_vertices + 1)]
        trees.append(edges)
    return trees


def cists_complete_graph(n_vertices: int) -> CistSet:
    """All floor(N/2) CISTs of K_N over the vertices 1..N."""
    edge_lists = complete_graph_cist_edges(n_vertices)
    return CistSet(tuple(Tree(edges) for edges in edge_lists),
                   inner_offset=n_vertices // 2)


def _check_rcube_scope(n: int, m: int) -> None:
    if n < 1 or m < 0:
        raise ParameterError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if n + m < 4:
        raise UnsupportedParametersError(
            f"CIST construction needs n + m >= 4, got n+m={n + m}")


def _order1_edge_sets(n: int, m: int) -> list[set[Edge]]:
    """Canonical edge sets of the order-1 trees over length-2 addresses."""
    half = (n + m) // 2
    count = cist_count(n, m)
    base = complete_graph_cist_edges(n + m)[:count]
    if n == 1:
        return [{_canon((0, p - 1), (0, q - 1)) for p, q in t} for t in base]
    trees = []
    for j in range(1, count + 1):
        edges = {
            _canon((lead, p - 1), (lead, q - 1))
            for lead in range(n) for p, q in base[j - 1]
        }
        if m == 0:
            for lead in range(1, n):
                edges.add(_canon((0, j - 1), (lead, j - 1)))
                edges.add(_canon((0, j + half - 1), (lead, j + half - 1)))
                spine = _canon((lead, j - 1), (lead, j + half - 1))
                assert spine in edges, "element tree must connect its inner pair"
                edges.remove(spine)
        else:
            for lead in range(1, n):
                edges.add(_canon((0, j - 1), (lead, j - 1)))
        trees.append(edges)
    return trees


def _lift_edge_sets(edge_sets: list[set[Edge]], n: int, m: int,
                    k: int) -> list[set[Edge]]:
    """Lift order-1 edge sets to order k, one recursion level at a time."""
    half = (n + m) // 2
    for level in range(2, k + 1):
        lifted = []
        for j, edges in enumerate(edge_sets, start=1):
            out = {
                _canon((lead,) + u, (lead,) + v)
                for lead in range(n) for u, v in edges
            }
            hub = (0,) * (level - 1) + (j - 1,)
            hub_far = (0,) * (level - 1) + (j + half - 1,)
            if m == 0:
                for lead in range(1, n):
                    out.add(_canon((0,) + hub, (lead,) + hub))
                    out.add(_canon((0,) + hub_far, (lead,) + hub_far))
                    spine = _canon((lead,) + hub, (lead,) + hub_far)
                    assert spine in out, "lifted tree must carry its spine edge"
                    out.remove(spine)
            else:
                for lead in range(1, n):
                    out.add(_canon((0,) + hub, (lead,) + hub))
            lifted.append(out)
        edge_sets = lifted
    return edge_sets


def cists_rcube_order1(n: int, m: int) -> CistSet:
    """CISTs of L-RCube(n, m, 1)."""
    _check_rcube_scope(n, m)
    sets = _order1_edge_sets(n, m)
    return CistSet(tuple(Tree(sorted(s)) for s in sets),
                   inner_offset=(n + m) // 2, params=(n, m, 1))


def cists_rcube(n: int, m: int, k: int) -> CistSet:
    """CISTs of L-RCube(n, m, k) for k >= 1.

    n = 1 collapses to the complete-graph construction (the graph is
    K_{m+1} for every k); k = 1 is the order-1 construction; larger k is
    built bottom-up, which matches the recursive definition exactly while
    keeping the call stack flat.
    """
    _check_rcube_scope(n, m)
    if k < 1:
        raise UnsupportedParametersError(
            f"recursive construction needs k >= 1, got k={k}")
    if n == 1:
        prefix = (0,) * k
        base = complete_graph_cist_edges(1 + m)[:cist_count(n, m)]
        trees = tuple(
            Tree([(prefix + (p - 1,), prefix + (q - 1,)) for p, q in t])
            for t in base
        )
        return CistSet(trees, inner_offset=(1 + m) // 2, params=(n, m, k))
    sets = _order1_edge_sets(n, m)
    if k > 1:
        sets = _lift_edge_sets(sets, n, m, k)
    return CistSet(tuple(Tree(sorted(s)) for s in sets),
                   inner_offset=(n + m) // 2, params=(n, m, k))


def _bfs_farthest(tree: Tree, start: Vertex) -> tuple[Vertex, int]:
    dist = {start: 0}
    queue = deque([start])
    far, far_d = start, 0
    while queue:
        v = queue.popleft()
        for w in tree.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if dist[w] > far_d:
                    far, far_d = w, dist[w]
                queue.append(w)
    return far, far_d


def tree_diameter(tree: Tree) -> int:
    """Longest path length (edge count), by double breadth-first traversal."""
    if tree.num_vertices == 0:
        return 0
    far, _ = _bfs_farthest(tree, tree.vertices[0])
    _, diameter = _bfs_farthest(tree, far)
    return diameter
