"""Immutable simple-graph core: vertex sets, components, cutset reports.

Vertices are dense 0-based ints. The constructor rejects self-loops and
parallel edges instead of normalizing them, so every Graph is a simple
graph by construction. All derived quantities that feed certificates are
exact: average degrees are rationals, never floats.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphError, PreconditionError

# Minimality of a cutset is decided exhaustively only up to this size;
# larger sets get minimal=None ("unknown").
MINIMALITY_EXHAUSTIVE_LIMIT = 6


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges", "_adj", "_adj_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge must be a pair, got {e!r}") from None
            if not isinstance(u, int) or not isinstance(v, int):
                raise GraphError(f"edge endpoints must be ints, got {e!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} rejected")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"parallel edge {key!r} rejected")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._adj_sets: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        masks = []
        for a in adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self._masks: tuple[int, ...] = tuple(masks)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted (u, v) pairs with u < v."""
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def adjacency_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask (bit w set iff vw is an edge)."""
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexSet:
    """A duplicate-free sorted set of vertex ids tied to a parent order.

    The constructor normalizes any iterable of ids and validates the range,
    so downstream code can rely on members being sorted and in-range.
    """

    members: tuple[int, ...]
    parent_n: int

    def __init__(self, members: Iterable[int], parent_n: int):
        ms = tuple(sorted(set(members)))
        for v in ms:
            if not isinstance(v, int):
                raise GraphError(f"vertex id must be an int, got {v!r}")
            if not (0 <= v < parent_n):
                raise GraphError(f"vertex id {v} out of range for n={parent_n}")
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "parent_n", parent_n)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True)
class CutsetReport:
    """Exact statistics for a vertex set considered as a cutset.

    avg_degree_in_s is kept as an exact rational via the induced edge
    count; minimal is True/False when decided exhaustively and None when
    the set is too large for the exhaustive subset check.
    """

    cutset: VertexSet
    max_degree_in_s: int
    induced_edge_count: int
    component_count: int
    minimal: bool | None

    @property
    def is_cutset(self) -> bool:
        return self.component_count >= 2

    @property
    def avg_degree_in_s(self) -> Fraction:
        if len(self.cutset) == 0:
            return Fraction(0)
        return Fraction(2 * self.induced_edge_count, len(self.cutset))

    def to_dict(self) -> dict:
        avg = self.avg_degree_in_s
        return {
            "cutset": list(self.cutset.members),
            "max_degree_in_s": self.max_degree_in_s,
            "induced_edge_count": self.induced_edge_count,
            "avg_degree_in_s": [avg.numerator, avg.denominator],
            "component_count": self.component_count,
            "minimal": self.minimal,
        }


def as_vertex_set(g: Graph, s: Iterable[int] | VertexSet) -> VertexSet:
    """Coerce an iterable of ids into a VertexSet of g."""
    if isinstance(s, VertexSet):
        if s.parent_n != g.n:
            raise GraphError(f"vertex set for n={s.parent_n} used with graph n={g.n}")
        return s
    return VertexSet(s, g.n)


def components(g: Graph, removed: Iterable[int] | VertexSet = ()) -> list[VertexSet]:
    """Connected components of g minus the removed set, by smallest member."""
    gone = as_vertex_set(g, removed).as_set()
    seen = [False] * g.n
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen[start] or start in gone:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w] and w not in gone:
                    seen[w] = True
                    queue.append(w)
        out.append(VertexSet(comp, g.n))
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def is_cutset(g: Graph, s: Iterable[int] | VertexSet) -> bool:
    """Whether removing s leaves at least two components.

    The empty set is a cutset exactly when g is already disconnected.
    Passing all of V(G) is an error: there is nothing left to disconnect.
    """
    vs = as_vertex_set(g, s)
    if len(vs) == g.n:
        raise PreconditionError("is_cutset: S must be a proper subset of V(G)")
    return len(components(g, vs)) >= 2


def induced_edge_count(g: Graph, s: Iterable[int] | VertexSet) -> int:
    vs = as_vertex_set(g, s).as_set()
    return sum(1 for u in vs for w in g.neighbors(u) if w > u and w in vs)


def max_degree_in(g: Graph, s: Iterable[int] | VertexSet) -> int:
    """Maximum degree of the subgraph induced by s."""
    vs = as_vertex_set(g, s).as_set()
    best = 0
    for u in vs:
        d = len(g.neighbor_set(u) & vs)
        if d > best:
            best = d
    return best


def induced_stats(g: Graph, s: Iterable[int] | VertexSet) -> CutsetReport:
    """Full exact report for s: degrees, components, minimality."""
    vs = as_vertex_set(g, s)
    comp_count = len(components(g, vs))
    report = CutsetReport(
        cutset=vs,
        max_degree_in_s=max_degree_in(g, vs),
        induced_edge_count=induced_edge_count(g, vs),
        component_count=comp_count,
        minimal=_minimality(g, vs, comp_count >= 2),
    )
    return report


def _minimality(g: Graph, vs: VertexSet, cuts: bool) -> bool | None:
    if not cuts or len(vs) == g.n:
        return False
    if len(vs) > MINIMALITY_EXHAUSTIVE_LIMIT:
        return None
    # minimal iff no proper subset is a cutset; single-vertex deletions
    # alone do not suffice because cutset-ness is not upward monotone
    for size in range(len(vs)):
        for sub in combinations(vs.members, size):
            if len(components(g, VertexSet(sub, g.n))) >= 2:
                return False
    return True


def min_degree_vertex(g: Graph) -> int:
    """Smallest-id vertex of minimum degree."""
    if g.n == 0:
        raise PreconditionError("min_degree_vertex: graph has no vertices")
    best = 0
    for v in range(1, g.n):
        if g.degree(v) < g.degree(best):
            best = v
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int] | VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the mapping from new ids to original ids.

    Position i of the mapping holds the original id of new vertex i.
    """
    vs = as_vertex_set(g, vertices)
    old = vs.members
    index = {v: i for i, v in enumerate(old)}
    edges = [
        (index[u], index[w])
        for u in old
        for w in g.neighbors(u)
        if w > u and w in index
    ]
    return Graph(len(old), edges), old


def neighborhood_induced(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the open neighborhood of v, with id mapping."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex id {v} out of range for n={g.n}")
    return induced_subgraph(g, g.neighbors(v))
