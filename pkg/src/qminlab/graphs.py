"""Simple undirected graphs on dense vertex sets 0..n-1.

Graphs are immutable values: adjacency is stored as one neighbor bitmask per
vertex, which keeps breadth-first searches and structural predicates cheap at
the orders this package works at (n <= 62).  Every "mutating" operation
returns a new graph.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import CapacityExceededError, InvalidParameterError

#: Largest order accepted by the exhaustive isomorphism test.
ISO_ORDER_CAP = 10


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with vertices 0..n-1.

    ``nbr[v]`` is the bitmask of neighbors of ``v``; symmetry and
    irreflexivity are established at construction time.
    """

    n: int
    nbr: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph of order ``n`` from an iterable of (u, v) pairs."""
        if n < 1:
            raise InvalidParameterError(f"graph order must be >= 1, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    def __post_init__(self):
        if self.n < 1 or len(self.nbr) != self.n:
            raise InvalidParameterError("inconsistent graph order")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.nbr):
            if m & ~full:
                raise InvalidParameterError(f"neighbor mask of {v} out of range")
            if (m >> v) & 1:
                raise InvalidParameterError(f"self-loop at vertex {v}")
            for u in _bits(m):
                if not (self.nbr[u] >> v) & 1:
                    raise InvalidParameterError(f"asymmetric adjacency at ({v},{u})")

    # -- basic queries -----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.nbr[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        return _bits(self.nbr[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.nbr[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.nbr)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            m = self.nbr[u] >> (u + 1)
            for d in _bits(m):
                out.append((u, u + 1 + d))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbr) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} not in 0..{self.n - 1}")

    # -- derived graphs ----------------------------------------------------

    def permuted(self, perm) -> "Graph":
        """Relabel: vertex ``v`` of self becomes ``perm[v]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameterError("perm is not a permutation of the vertices")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidParameterError(f"({u},{v}) is not an edge")
        masks = list(self.nbr)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, tuple(masks))


# -- constructors ----------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    """The cycle on n >= 3 vertices with edges {i, (i+1) mod n}."""
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """The path on n >= 1 vertices; n = 1 is the trivial graph."""
    if n < 1:
        raise InvalidParameterError(f"a path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    """The complete graph on n >= 1 vertices."""
    if n < 1:
        raise InvalidParameterError(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def coalesce(g1: Graph, v: int, g2: Graph, u: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying vertex ``u`` with vertex ``v``.

    Re-indexing is fixed so constructions are byte-for-byte reproducible:
    g1's vertices keep their indices, the merged vertex keeps index ``v``,
    and g2's remaining vertices are appended in increasing original index.
    """
    g1._check_vertex(v)
    g2._check_vertex(u)
    remap = {u: v}
    nxt = g1.n
    for w in range(g2.n):
        if w != u:
            remap[w] = nxt
            nxt += 1
    edges = g1.edges() + [(remap[a], remap[b]) for a, b in g2.edges()]
    return Graph.from_edges(g1.n + g2.n - 1, edges)


def attach_pendants(g: Graph, v: int, m: int) -> Graph:
    """Attach ``m`` new degree-1 vertices to ``v``."""
    g._check_vertex(v)
    if m < 0:
        raise InvalidParameterError(f"pendant count must be >= 0, got {m}")
    edges = g.edges() + [(v, g.n + i) for i in range(m)]
    return Graph.from_edges(g.n + m, edges)


# -- structural predicates -------------------------------------------------


@dataclass(frozen=True)
class TwoColoring:
    """A proper 2-coloring: ``part[v]`` in {0, 1}, every edge bi-chromatic."""

    part: tuple[int, ...]


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    bipartite: Optional[TwoColoring]
    girth: Optional[int]
    odd_girth: Optional[int]
    pendant_count: int
    min_degree: int
    degrees: tuple[int, ...]


def _reach_mask(nbr, start_mask: int) -> int:
    """Bitmask of all vertices reachable from the vertices in start_mask."""
    reach = start_mask
    frontier = start_mask
    while frontier:
        acc = 0
        for v in _bits(frontier):
            acc |= nbr[v]
        frontier = acc & ~reach
        reach |= frontier
    return reach


def is_connected(g: Graph) -> bool:
    return _reach_mask(g.nbr, 1) == (1 << g.n) - 1


def two_coloring(g: Graph) -> Optional[TwoColoring]:
    """A proper 2-coloring of g, or None if some component has an odd cycle."""
    part = [-1] * g.n
    for root in range(g.n):
        if part[root] >= 0:
            continue
        part[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in _bits(g.nbr[x]):
                if part[y] < 0:
                    part[y] = 1 - part[x]
                    queue.append(y)
                elif part[y] == part[x]:
                    return None
    return TwoColoring(tuple(part))


def _bfs_dist(nbr, n: int, src: int, dst: int, skip_edge=None) -> Optional[int]:
    """BFS distance src -> dst, optionally ignoring one edge."""
    masks = list(nbr)
    if skip_edge is not None:
        a, b = skip_edge
        masks[a] &= ~(1 << b)
        masks[b] &= ~(1 << a)
    if src == dst:
        return 0
    reach = 1 << src
    frontier = reach
    dist = 0
    while frontier:
        acc = 0
        for v in _bits(frontier):
            acc |= masks[v]
        frontier = acc & ~reach
        reach |= frontier
        dist += 1
        if (frontier >> dst) & 1:
            return dist
    return None


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest.

    Every shortest cycle uses some edge uv and decomposes as uv plus a
    shortest u-v path avoiding uv, so scanning all edges is exact.
    """
    best = None
    for u, v in g.edges():
        d = _bfs_dist(g.nbr, g.n, u, v, skip_edge=(u, v))
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
    return best


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or None if g is bipartite.

    The shortest odd closed walk through any vertex equals the shortest odd
    cycle, so a parity-layered BFS from each vertex suffices.
    """
    best = None
    for root in range(g.n):
        seen = [0, 0]  # reached-vertex masks by parity
        seen[0] = 1 << root
        frontier, parity = 1 << root, 0
        level = 0
        while frontier and (best is None or level < best):
            acc = 0
            for v in _bits(frontier):
                acc |= g.nbr[v]
            parity ^= 1
            level += 1
            frontier = acc & ~seen[parity]
            seen[parity] |= frontier
            if parity == 1 and (frontier >> root) & 1:
                if best is None or level < best:
                    best = level
                break
    return best


def structure_report(g: Graph) -> StructureReport:
    degs = g.degrees()
    return StructureReport(
        connected=is_connected(g),
        bipartite=two_coloring(g),
        girth=girth(g),
        odd_girth=odd_girth(g),
        pendant_count=sum(1 for d in degs if d == 1),
        min_degree=min(degs),
        degrees=degs,
    )


# -- isomorphism -------------------------------------------------------------


@functools.lru_cache(maxsize=65536)
def _refined_colors(g: Graph) -> tuple[int, ...]:
    """Iterative neighborhood color refinement (degree-partition and beyond).

    Color ids are assigned from the sorted signature list each round, so
    colors are directly comparable between different graphs.
    """
    colors = tuple(m.bit_count() for m in g.nbr)
    for _ in range(g.n):
        sigs = tuple(
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.nbr[v]))))
            for v in range(g.n)
        )
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = tuple(palette[s] for s in sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new
    return colors


def _find_mapping(g: Graph, h: Graph) -> bool:
    """Backtracking search for an edge-preserving bijection g -> h.

    Vertices are assigned in order of ascending color-class size (most
    constrained first); a candidate image must carry the same refined color
    and reproduce the adjacency of the already-assigned prefix exactly.
    """
    n = g.n
    gc = _refined_colors(g)
    hc = _refined_colors(h)
    if sorted(gc) != sorted(hc):
        return False
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(hc[w], []).append(w)
    class_size = {c: len(ws) for c, ws in by_color.items()}
    order = sorted(range(n), key=lambda v: (class_size[gc[v]], gc[v], v))
    image = [-1] * n

    def assign(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        needed = 0
        for u in _bits(g.nbr[v]):
            if image[u] >= 0:
                needed |= 1 << image[u]
        for w in by_color[gc[v]]:
            if (used >> w) & 1:
                continue
            if h.nbr[w] & used != needed:
                continue
            image[v] = w
            if assign(i + 1, used | (1 << w)):
                return True
            image[v] = -1
        return False

    return assign(0, 0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff some vertex bijection maps edges onto edges (order <= 10)."""
    if max(g.n, h.n) > ISO_ORDER_CAP:
        raise CapacityExceededError(
            f"isomorphism is capped at order {ISO_ORDER_CAP}, got {max(g.n, h.n)}"
        )
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return _find_mapping(g, h)
