"""Independent brute-force oracles used to verify certificates.

Everything here works from the graph alone (adjacency bitmasks plus its
own flood fill and flow routines) and shares no logic with the
constructive algorithms it audits. Exponential searches are gated by an
OracleBudget; running out of budget raises BudgetExhausted, which is a
first-class outcome distinct from a definitive "none".
"""

from __future__ import annotations

import time
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .certificates import (
    Certificate,
    GoodCutset,
    IndependentCutset,
    IsIcosahedron,
    KrrWitness,
    SquaredCycleIso,
)
from .errors import BudgetExhausted, PreconditionError
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class OracleBudget:
    """Caps for the exhaustive searches.

    max_n gates every exponential enumeration, max_subset_size caps
    searches that go subset-size by subset-size, and time_hint_s is a soft
    wall-clock limit checked between enumeration batches.
    """

    max_n: int = 24
    max_subset_size: int = 6
    time_hint_s: float | None = None


class _Deadline:
    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self) -> None:
        if self.seconds is not None and time.monotonic() - self.start > self.seconds:
            raise BudgetExhausted(f"oracle time budget of {self.seconds}s exceeded")


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _component_count(masks: tuple[int, ...], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        count += 1
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= masks[b.bit_length() - 1]
                f ^= b
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        rest &= ~comp
    return count


def _masks(g: Graph) -> tuple[int, ...]:
    return tuple(g.adjacency_mask(v) for v in range(g.n))


def _is_cutset_bits(masks: tuple[int, ...], full: int, smask: int) -> bool:
    alive = full & ~smask
    return alive != 0 and _component_count(masks, alive) >= 2


def _require_small(g: Graph, budget: OracleBudget, what: str) -> None:
    if g.n > budget.max_n:
        raise BudgetExhausted(
            f"{what}: n={g.n} exceeds oracle cap max_n={budget.max_n}"
        )


# --------------------------------------------------------- cutset enumeration


def enumerate_min_cutsets(g: Graph, budget: OracleBudget | None = None) -> list[VertexSet]:
    """All cutsets of minimum order, in lexicographic order.

    A complete graph has no cutset at all and yields the empty list (its
    connectivity is the conventional n-1). Requires a connected input.
    """
    budget = budget or OracleBudget()
    _require_small(g, budget, "enumerate_min_cutsets")
    masks = _masks(g)
    full = (1 << g.n) - 1
    if g.n > 0 and _component_count(masks, full) != 1:
        raise PreconditionError("enumerate_min_cutsets requires a connected graph")
    if g.m == g.n * (g.n - 1) // 2:
        return []
    deadline = _Deadline(budget.time_hint_s)
    # kappa <= min degree for connected non-complete graphs, so the scan
    # below is guaranteed to stop by then
    limit = g.min_degree()
    for k in range(1, limit + 1):
        if k > budget.max_subset_size:
            raise BudgetExhausted(
                f"enumerate_min_cutsets: min cutset order exceeds cap "
                f"max_subset_size={budget.max_subset_size}"
            )
        found = []
        for i, combo in enumerate(combinations(range(g.n), k)):
            if i % 4096 == 0:
                deadline.check()
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _is_cutset_bits(masks, full, smask):
                found.append(VertexSet(combo, g.n))
        if found:
            return found
    raise PreconditionError(
        "enumerate_min_cutsets: no cutset up to the minimum degree; "
        "input was not a connected simple graph"
    )


# ------------------------------------------------------------------------ flow


def _flow_between(g: Graph, s: int, t: int, stop_at: int) -> int:
    """Number of internally vertex-disjoint s-t paths, via unit-capacity
    max flow on the split digraph. Stops early once stop_at is reached."""
    cap: dict[tuple[int, int], int] = defaultdict(int)
    adj: dict[int, list[int]] = defaultdict(list)

    def arc(a: int, b: int) -> None:
        if cap[(a, b)] == 0 and cap[(b, a)] == 0:
            adj[a].append(b)
            adj[b].append(a)
        cap[(a, b)] += 1

    for v in range(g.n):
        arc(2 * v, 2 * v + 1)  # in -> out, vertex capacity 1
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v)
        arc(2 * v + 1, 2 * u)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < stop_at:
        prev: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            x = queue.popleft()
            for y in adj[x]:
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if snk not in prev:
            break
        y = snk
        while prev[y] is not None:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via max flow over vertex-split networks.

    Flows are rooted at a minimum-degree vertex and each of its neighbors;
    any minimum cut misses at least one of those roots, so the minimum
    over root-to-nonneighbor flows is exact. Complete graphs return n-1.
    """
    if g.n <= 1:
        return max(g.n - 1, 0)
    masks = _masks(g)
    if _component_count(masks, (1 << g.n) - 1) != 1:
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    v0 = 0
    for v in range(1, g.n):
        if g.degree(v) < g.degree(v0):
            v0 = v
    best = g.degree(v0)
    roots = (v0,) + g.neighbors(v0)
    for r in roots:
        for u in range(g.n):
            if u == r or g.has_edge(r, u):
                continue
            best = min(best, _flow_between(g, r, u, best))
            if best == 0:
                return 0
    return best


# -------------------------------------------------------- constrained searches


def find_independent_cutset(
    g: Graph, budget: OracleBudget | None = None
) -> VertexSet | None:
    """Independent cutset by increasing size, lexicographic within a size.

    Returns the first hit, a definitive None when the full enumeration
    finishes empty, or raises BudgetExhausted. A disconnected input
    returns the empty set, which is an independent cutset by convention.
    """
    budget = budget or OracleBudget()
    _require_small(g, budget, "find_independent_cutset")
    if g.n == 0:
        return None
    masks = _masks(g)
    full = (1 << g.n) - 1
    if _component_count(masks, full) >= 2:
        return VertexSet([], g.n)
    deadline = _Deadline(budget.time_hint_s)
    counter = 0

    def sized(start: int, chosen: int, left: int):
        nonlocal counter
        if left == 0:
            yield chosen
            return
        for v in range(start, g.n - left + 1):
            if masks[v] & chosen:
                continue
            counter += 1
            if counter % 4096 == 0:
                deadline.check()
            yield from sized(v + 1, chosen | (1 << v), left - 1)

    for k in range(1, g.n - 1):
        deadline.check()
        for smask in sized(0, 0, k):
            if _is_cutset_bits(masks, full, smask):
                return VertexSet(_bits(smask), g.n)
    return None


def find_constrained_cutset(
    g: Graph,
    max_delta: int | None = None,
    max_avg: tuple[int, int] | Fraction | None = None,
    budget: OracleBudget | None = None,
) -> VertexSet | None:
    """Cutset with max internal degree <= max_delta and/or average internal
    degree strictly below max_avg.

    With max_delta given, the degree constraint is hereditary, so the
    search walks the whole family of qualifying sets in depth-first
    inclusion order and a None answer is exhaustive over all sizes. With
    only an average bound there is nothing hereditary to prune on, so the
    scan covers sizes up to budget.max_subset_size and None means "none
    within that cap".
    """
    budget = budget or OracleBudget()
    _require_small(g, budget, "find_constrained_cutset")
    if max_delta is None and max_avg is None:
        raise PreconditionError("find_constrained_cutset needs at least one constraint")
    avg: Fraction | None = None
    if max_avg is not None:
        avg = max_avg if isinstance(max_avg, Fraction) else Fraction(*max_avg)
    masks = _masks(g)
    full = (1 << g.n) - 1
    deadline = _Deadline(budget.time_hint_s)
    counter = 0

    def avg_ok(smask: int, size: int) -> bool:
        if avg is None:
            return True
        edges2 = 0
        m = smask
        while m:
            b = m & -m
            edges2 += (masks[b.bit_length() - 1] & smask).bit_count()
            m ^= b
        # edges2 counts each induced edge twice; require edges2/size < avg
        return edges2 * avg.denominator < avg.numerator * size

    if max_delta is not None:
        deg_in_s = [0] * g.n

        def dfs(start: int, smask: int, size: int) -> int | None:
            nonlocal counter
            if size and avg_ok(smask, size) and _is_cutset_bits(masks, full, smask):
                return smask
            for v in range(start, g.n):
                counter += 1
                if counter % 2048 == 0:
                    deadline.check()
                inside = masks[v] & smask
                dv = inside.bit_count()
                if dv > max_delta:
                    continue
                if any(deg_in_s[u] + 1 > max_delta for u in _bits(inside)):
                    continue
                for u in _bits(inside):
                    deg_in_s[u] += 1
                deg_in_s[v] = dv
                hit = dfs(v + 1, smask | (1 << v), size + 1)
                if hit is not None:
                    return hit
                deg_in_s[v] = 0
                for u in _bits(inside):
                    deg_in_s[u] -= 1
            return None

        hit = dfs(0, 0, 0)
        return None if hit is None else VertexSet(_bits(hit), g.n)

    for k in range(1, min(budget.max_subset_size, g.n - 1) + 1):
        for i, combo in enumerate(combinations(range(g.n), k)):
            if i % 4096 == 0:
                deadline.check()
            smask = 0
            for v in combo:
                smask |= 1 << v
            if avg_ok(smask, k) and _is_cutset_bits(masks, full, smask):
                return VertexSet(combo, g.n)
    return None


def find_krr(
    g: Graph, r: int, budget: OracleBudget | None = None
) -> tuple[VertexSet, VertexSet] | None:
    """A complete bipartite K_{r,r} subgraph, as (side_a, side_b), or None.

    Scans r-subsets in lexicographic order; side_b is the r smallest
    common neighbors. The subgraph need not be induced.
    """
    if r < 1:
        raise PreconditionError(f"find_krr requires r >= 1, got {r}")
    budget = budget or OracleBudget()
    _require_small(g, budget, "find_krr")
    masks = _masks(g)
    deadline = _Deadline(budget.time_hint_s)
    for i, combo in enumerate(combinations(range(g.n), r)):
        if i % 4096 == 0:
            deadline.check()
        common = (1 << g.n) - 1
        for v in combo:
            common &= masks[v]
        if common.bit_count() >= r:
            side_b = _bits(common)[:r]
            return VertexSet(combo, g.n), VertexSet(side_b, g.n)
    return None


# ------------------------------------------------------------------ recognizers


def recognize_pattern(g: Graph, pattern: str) -> bool:
    """Exact isomorphism test against one of the tiny named patterns."""
    degs = sorted(g.degree(v) for v in range(g.n))
    if pattern == "C5":
        return g.n == 5 and g.m == 5 and degs == [2] * 5 and _connected(g)
    if pattern == "TwoK2":
        return g.n == 4 and g.m == 2 and degs == [1, 1, 1, 1]
    if pattern == "P4":
        return g.n == 4 and g.m == 3 and degs == [1, 1, 2, 2] and _connected(g)
    raise PreconditionError(f"unknown pattern {pattern!r}; known: C5, P4, TwoK2")


def _connected(g: Graph) -> bool:
    return g.n == 0 or _component_count(_masks(g), (1 << g.n) - 1) == 1


def _cyclic_dist(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def recognize_squared_cycle(g: Graph) -> tuple[int, ...] | None:
    """If g is a squared cycle, the vertex order around it, else None.

    For n <= 6 the neighborhood structure degenerates (C5^2 = K5 and C6^2
    is 4-regular with C4 neighborhoods), so those orders use a direct
    exhaustive isomorphism. From n = 7 on, each neighborhood must induce
    P4 whose interior vertices are the two cycle neighbors; following them
    reconstructs the cycle, which is then verified edge for edge.
    """
    n = g.n
    if n < 5:
        return None
    if n <= 6:
        for perm in permutations(range(n)):
            if _order_matches(g, perm):
                return perm
        return None
    if any(g.degree(v) != 4 for v in range(n)):
        return None
    inner: list[tuple[int, int] | None] = [None] * n
    for v in range(n):
        nb = g.neighbors(v)
        nbset = g.neighbor_set(v)
        deg2 = [u for u in nb if len(g.neighbor_set(u) & nbset) == 2]
        deg_counts = sorted(len(g.neighbor_set(u) & nbset) for u in nb)
        if deg_counts != [1, 1, 2, 2]:
            return None
        inner[v] = (deg2[0], deg2[1])
    order = [0, min(inner[0])]
    while len(order) < n:
        prev, cur = order[-2], order[-1]
        a, b = inner[cur]
        if prev == a:
            nxt = b
        elif prev == b:
            nxt = a
        else:
            return None
        if nxt in (order[0], order[1]) or nxt in order[2:]:
            return None
        order.append(nxt)
    perm = tuple(order)
    return perm if _order_matches(g, perm) else None


def _order_matches(g: Graph, order: tuple[int, ...]) -> bool:
    n = g.n
    for i in range(n):
        for j in range(i + 1, n):
            expect = _cyclic_dist(i, j, n) in (1, 2)
            if g.has_edge(order[i], order[j]) != expect:
                return False
    return True


def find_induced_squared_path(
    g: Graph, k: int, budget: OracleBudget | None = None
) -> tuple[int, ...] | None:
    """Vertices, in path order, whose induced subgraph is P_k squared.

    Position i must be adjacent to positions i-1 and i-2 and to nothing
    earlier. Returns the first hit in depth-first lexicographic order.
    """
    if k < 1:
        raise PreconditionError(f"find_induced_squared_path requires k >= 1, got {k}")
    budget = budget or OracleBudget()
    _require_small(g, budget, "find_induced_squared_path")
    masks = _masks(g)
    deadline = _Deadline(budget.time_hint_s)
    counter = 0

    def extend(seq: list[int], used: int) -> tuple[int, ...] | None:
        nonlocal counter
        if len(seq) == k:
            return tuple(seq)
        need = 0
        forbid = used
        if seq:
            need = masks[seq[-1]]
            forbid ^= 1 << seq[-1]
        if len(seq) >= 2:
            need &= masks[seq[-2]]
            forbid ^= 1 << seq[-2]
        for v in range(g.n):
            counter += 1
            if counter % 4096 == 0:
                deadline.check()
            bit = 1 << v
            if used & bit:
                continue
            if seq and not (need & bit):
                continue
            if masks[v] & forbid:
                continue
            hit = extend(seq + [v], used | bit)
            if hit is not None:
                return hit
        return None

    return extend([], 0)


# --------------------------------------------------------------------- matching


def bipartite_matching(
    g: Graph, left: VertexSet | tuple[int, ...], right: VertexSet | tuple[int, ...]
) -> list[tuple[int, int]]:
    """Maximum matching between two disjoint vertex sets, by augmenting
    paths in deterministic ascending order. Returns (left, right) pairs."""
    ls = tuple(sorted(set(left)))
    rs = frozenset(right)
    if set(ls) & rs:
        raise PreconditionError("bipartite_matching: sides must be disjoint")
    match_of: dict[int, int] = {}  # right -> left

    def augment(u: int, seen: set[int]) -> bool:
        for w in g.neighbors(u):
            if w not in rs or w in seen:
                continue
            seen.add(w)
            if w not in match_of or augment(match_of[w], seen):
                match_of[w] = u
                return True
        return False

    for u in ls:
        augment(u, set())
    return sorted((u, w) for w, u in match_of.items())


# ------------------------------------------------------------------ verification


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Re-check a certificate from the graph alone."""
    if isinstance(cert, GoodCutset):
        return _verify_cutset_claim(
            g,
            cert.cutset,
            size_bound=cert.size_bound,
            degree_bound=cert.degree_bound,
            avg_bound=cert.avg_bound_strict,
            require_minimal=cert.require_minimal,
        )
    if isinstance(cert, IndependentCutset):
        return _verify_cutset_claim(
            g, cert.cutset, size_bound=cert.size_bound, degree_bound=0
        )
    if isinstance(cert, KrrWitness):
        return _verify_krr(g, cert)
    if isinstance(cert, SquaredCycleIso):
        return (
            g.n >= 5
            and len(cert.order) == g.n
            and sorted(cert.order) == list(range(g.n))
            and _order_matches(g, cert.order)
        )
    if isinstance(cert, IsIcosahedron):
        return _verify_icosahedron(g)
    raise PreconditionError(f"unknown certificate type {type(cert).__name__}")


def _verify_cutset_claim(
    g: Graph,
    cutset: tuple[int, ...],
    size_bound: int | None = None,
    degree_bound: int | None = None,
    avg_bound: tuple[int, int] | None = None,
    require_minimal: bool = False,
) -> bool:
    if len(set(cutset)) != len(cutset):
        return False
    if any(not (0 <= v < g.n) for v in cutset):
        return False
    if len(cutset) >= g.n:
        return False
    masks = _masks(g)
    full = (1 << g.n) - 1
    smask = 0
    for v in cutset:
        smask |= 1 << v
    if not _is_cutset_bits(masks, full, smask):
        return False
    if size_bound is not None and len(cutset) > size_bound:
        return False
    edges2 = sum((masks[v] & smask).bit_count() for v in cutset)
    maxdeg = max(((masks[v] & smask).bit_count() for v in cutset), default=0)
    if degree_bound is not None and maxdeg > degree_bound:
        return False
    if avg_bound is not None:
        num, den = avg_bound
        if len(cutset) == 0:
            return False
        if not (edges2 * den < num * len(cutset)):
            return False
    if require_minimal:
        if len(cutset) > 6:
            return False
        for size in range(len(cutset)):
            for sub in combinations(sorted(cutset), size):
                sub_mask = 0
                for v in sub:
                    sub_mask |= 1 << v
                if _is_cutset_bits(masks, full, sub_mask):
                    return False
    return True


def _verify_krr(g: Graph, cert: KrrWitness) -> bool:
    a, b = cert.side_a, cert.side_b
    if cert.r < 1 or len(a) != cert.r or len(b) != cert.r:
        return False
    if len(set(a)) != cert.r or len(set(b)) != cert.r or set(a) & set(b):
        return False
    if any(not (0 <= v < g.n) for v in (*a, *b)):
        return False
    return all(g.has_edge(u, w) for u in a for w in b)


def _verify_icosahedron(g: Graph) -> bool:
    if g.n != 12 or g.m != 30:
        return False
    for v in range(12):
        nbset = g.neighbor_set(v)
        if len(nbset) != 5:
            return False
        # 2-regular on five vertices is exactly C5
        if any(len(g.neighbor_set(u) & nbset) != 2 for u in nbset):
            return False
    return True
