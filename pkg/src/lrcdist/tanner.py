"""Bipartite check/variable structures connecting graphs to codes.

A full Tanner graph for (n, k, r) has n variable nodes and n - k check
nodes; every check is either local (degree exactly r + 1) or global
(adjacent to all n variables), and every variable touches at least one
local check.  Such a graph fixes the zero pattern of a parity-check
matrix, and its combinatorial minimum distance (largest d such that
every eta checks, eta in [n-k-d+2, n-k], see at least eta + k variables)
matches the best distance a code with that zero pattern can reach.

Pruned graphs are the reduced object the multigraph equivalence works
through: global checks removed, degree-one variables removed, leaving
h checks of degree <= r + 1, every variable of degree >= 2, and exactly
h(r+1) - (n - m) edges.  ``refine`` normalizes any pruned graph to the
canonical shape (h = n1 checks, m = n2 variables, all of degree two)
without ever lowering the minimum distance; a degree-two variable is
just an edge between two checks, which is where the multigraph appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .errors import (
    EnvelopeExceeded,
    InvalidTanner,
    NothingToReduce,
    ShapeMismatch,
    UnknownCheck,
)
from .multigraph import Multigraph
from .params import CodeParams

CHECK_ENVELOPE = 24

# strategy: given the spare-capacity check indices and the ordinal of the
# fresh variable being attached, return the chosen check index
AttachStrategy = Callable[[list[int], int], int]

BUILTIN_STRATEGIES: dict[str, AttachStrategy] = {
    "first": lambda cands, i: cands[0],
    "last": lambda cands, i: cands[-1],
    "cycle": lambda cands, i: cands[i % len(cands)],
}


@dataclass(frozen=True)
class FullTannerGraph:
    n: int
    k: int
    r: int
    local_checks: tuple[frozenset[int], ...]
    global_count: int

    def __post_init__(self):
        n, k, r = self.n, self.k, self.r
        if not (1 <= r <= k < n):
            raise InvalidTanner(f"bad parameters (n={n}, k={k}, r={r})")
        n1 = -(-n // (r + 1))
        if len(self.local_checks) < n1:
            raise InvalidTanner(
                f"{len(self.local_checks)} local checks, need at least {n1}"
            )
        if len(self.local_checks) + self.global_count != n - k:
            raise InvalidTanner(
                f"{len(self.local_checks)} local + {self.global_count} global checks != n - k = {n - k}"
            )
        covered = set()
        for c in self.local_checks:
            if len(c) != r + 1:
                raise InvalidTanner(f"local check of degree {len(c)}, expected {r + 1}")
            if any(not 0 <= v < n for v in c):
                raise InvalidTanner(f"variable index out of range in {sorted(c)}")
            covered |= c
        if len(covered) != n:
            raise InvalidTanner("some variable is not covered by any local check")

    @property
    def check_count(self) -> int:
        return len(self.local_checks) + self.global_count


@dataclass(frozen=True)
class PrunedGraph:
    n: int
    k: int
    r: int
    m: int
    checks: tuple[frozenset[int], ...]

    def __post_init__(self):
        n, k, r, m = self.n, self.k, self.r, self.m
        if not (1 <= r <= k < n):
            raise InvalidTanner(f"bad parameters (n={n}, k={k}, r={r})")
        if not 0 <= m <= n:
            raise InvalidTanner(f"variable count m={m} outside [0, {n}]")
        h = len(self.checks)
        n1 = -(-n // (r + 1))
        if not n1 <= h <= n - k:
            raise InvalidTanner(f"check count h={h} outside [{n1}, {n - k}]")
        degree = [0] * m
        edge_count = 0
        for c in self.checks:
            if len(c) > r + 1:
                raise InvalidTanner(f"check of degree {len(c)} > r + 1 = {r + 1}")
            for v in c:
                if not 0 <= v < m:
                    raise InvalidTanner(f"variable index {v} outside 0..{m - 1}")
                degree[v] += 1
            edge_count += len(c)
        if any(d < 2 for d in degree):
            raise InvalidTanner("every variable in a pruned graph must have degree >= 2")
        expected = h * (r + 1) - (n - m)
        if edge_count != expected:
            raise InvalidTanner(f"edge count {edge_count} != h(r+1) - (n - m) = {expected}")

    @property
    def h(self) -> int:
        return len(self.checks)

    @property
    def n1(self) -> int:
        return -(-self.n // (self.r + 1))

    @property
    def n2(self) -> int:
        return self.n1 * (self.r + 1) - self.n


def f2p(t: FullTannerGraph) -> PrunedGraph:
    """Drop global checks, then drop the variables left with degree one."""
    degree: dict[int, int] = {}
    for c in t.local_checks:
        for v in c:
            degree[v] = degree.get(v, 0) + 1
    keep = sorted(v for v, d in degree.items() if d >= 2)
    remap = {v: i for i, v in enumerate(keep)}
    checks = tuple(frozenset(remap[v] for v in c if v in remap) for c in t.local_checks)
    return PrunedGraph(n=t.n, k=t.k, r=t.r, m=len(keep), checks=checks)


def p2f(p: PrunedGraph, strategy: str | AttachStrategy = "first") -> FullTannerGraph:
    """Rebuild a full Tanner graph: attach fresh degree-one variables until
    every check reaches degree r + 1, then top up with global checks.

    The spare capacity over all checks is exactly n - m, the number of fresh
    variables, so any attachment policy succeeds and every check ends at
    degree exactly r + 1.
    """
    pick = BUILTIN_STRATEGIES[strategy] if isinstance(strategy, str) else strategy
    checks = [set(c) for c in p.checks]
    spare = sum((p.r + 1) - len(c) for c in checks)
    assert spare == p.n - p.m, "pruned-graph edge identity guarantees exact capacity"
    for i, v in enumerate(range(p.m, p.n)):
        candidates = [ci for ci, c in enumerate(checks) if len(c) < p.r + 1]
        assert candidates, "capacity exhausted early; pruned graph was invalid"
        chosen = pick(candidates, i)
        if chosen not in candidates:
            raise InvalidTanner(f"strategy chose check {chosen} without spare capacity")
        checks[chosen].add(v)
    return FullTannerGraph(
        n=p.n,
        k=p.k,
        r=p.r,
        local_checks=tuple(frozenset(c) for c in checks),
        global_count=(p.n - p.k) - p.h,
    )


def neighborhood_size(t: FullTannerGraph, checks: Sequence[int]) -> int:
    """|N(S)| for a set of check indices (locals first, then globals)."""
    total = t.check_count
    local_count = len(t.local_checks)
    seen: set[int] = set()
    for c in checks:
        if not 0 <= c < total:
            raise UnknownCheck(f"check index {c} outside 0..{total - 1}")
        if c >= local_count:
            return t.n
        seen |= t.local_checks[c]
    return len(seen)


def _local_min_neighborhoods(masks: list[int], local_count: int) -> dict[int, int]:
    """Minimum |N(S)| over all-local subsets S, for every subset size."""
    mins: dict[int, int] = {}
    if local_count <= 20:
        union = [0] * (1 << local_count)
        for mask in range(1, 1 << local_count):
            low = (mask & -mask).bit_length() - 1
            union[mask] = union[mask ^ (1 << low)] | masks[low]
            eta = mask.bit_count()
            size = union[mask].bit_count()
            if eta not in mins or size < mins[eta]:
                mins[eta] = size
    else:
        for eta in range(1, local_count + 1):
            best = None
            for combo in combinations(range(local_count), eta):
                u = 0
                for c in combo:
                    u |= masks[c]
                s = u.bit_count()
                if best is None or s < best:
                    best = s
            mins[eta] = best
    return mins


def tanner_min_distance(t: FullTannerGraph) -> int:
    """Largest d in [1, n - k] such that every eta checks, for every eta in
    [n - k - d + 2, n - k], are adjacent to at least eta + k variables.

    Any subset containing a global check sees all n variables, so only
    all-local subsets can fail; those are enumerated exhaustively.
    """
    n, k = t.n, t.k
    if n - k > CHECK_ENVELOPE:
        raise EnvelopeExceeded(f"check-subset enumeration limited to n - k <= {CHECK_ENVELOPE}")
    local_count = len(t.local_checks)
    masks = [sum(1 << v for v in c) for c in t.local_checks]
    mins = _local_min_neighborhoods(masks, local_count)
    worst_failing = 0
    for eta in range(1, local_count + 1):
        if mins[eta] < eta + k:
            worst_failing = eta
    return (n - k) - worst_failing + 1 if worst_failing else n - k


def reduce_check_nodes(p: PrunedGraph) -> PrunedGraph:
    """Remove one check node while keeping the pruned-graph invariants.

    The minimum-degree check is removed; then r + 1 - l edges are stripped
    from currently-highest-degree variables (always possible, by the edge
    identity); then variables left at degree one are dropped.  The Tanner
    minimum distance never decreases.
    """
    if p.h <= p.n1:
        raise NothingToReduce(f"already at the minimum of {p.n1} checks")
    checks = [set(c) for c in p.checks]
    victim = min(range(len(checks)), key=lambda i: (len(checks[i]), i))
    removed_degree = len(checks[victim])
    del checks[victim]

    def var_degree(v: int) -> int:
        return sum(1 for c in checks if v in c)

    for _ in range((p.r + 1) - removed_degree):
        degrees = {v: var_degree(v) for v in range(p.m)}
        candidates = [v for v, d in degrees.items() if d >= 2]
        assert candidates, "edge identity guarantees a degree->=2 variable exists"
        v = max(candidates, key=lambda x: (degrees[x], -x))
        hosts = [ci for ci, c in enumerate(checks) if v in c]
        host = max(hosts, key=lambda ci: (len(checks[ci]), -ci))
        checks[host].discard(v)

    keep = sorted(v for v in range(p.m) if var_degree(v) >= 2)
    remap = {v: i for i, v in enumerate(keep)}
    new_checks = tuple(frozenset(remap[v] for v in c if v in remap) for c in checks)
    return PrunedGraph(n=p.n, k=p.k, r=p.r, m=len(keep), checks=new_checks)


def refine(p: PrunedGraph) -> PrunedGraph:
    """Normalize to h = n1 checks, m = n2 variables, every variable degree two.

    Applies check-node reduction until h = n1, then splits high-degree
    variables: a fresh variable joined to two of the host's checks replaces
    one of the host's edges.  Neither step lowers the minimum distance.
    """
    while p.h > p.n1:
        p = reduce_check_nodes(p)
    checks = [set(c) for c in p.checks]
    m = p.m

    def degree(v: int) -> int:
        return sum(1 for c in checks if v in c)

    while True:
        high = [v for v in range(m) if degree(v) > 2]
        if not high:
            break
        v = min(high, key=lambda x: (-degree(x), x))
        c1, c2 = sorted(ci for ci, c in enumerate(checks) if v in c)[:2]
        fresh = m
        m += 1
        checks[c1].add(fresh)
        checks[c2].add(fresh)
        checks[c2].discard(v)
    out = PrunedGraph(
        n=p.n, k=p.k, r=p.r, m=m, checks=tuple(frozenset(c) for c in checks)
    )
    assert out.m == p.n2, "refined pruned graph must have exactly n2 variables"
    return out


def graph_to_pruned(g: Multigraph, p: CodeParams) -> PrunedGraph:
    """Vertices become check nodes; each edge becomes a degree-two variable."""
    if g.order != p.n1 or g.size != p.n2:
        raise ShapeMismatch(
            f"need order n1={p.n1} and size n2={p.n2}, got order {g.order} size {g.size}"
        )
    checks: list[set[int]] = [set() for _ in range(p.n1)]
    var = 0
    for (u, v), mult in g.pair_multiplicities():
        for _ in range(mult):
            checks[u].add(var)
            checks[v].add(var)
            var += 1
    return PrunedGraph(
        n=p.n, k=p.k, r=p.r, m=p.n2, checks=tuple(frozenset(c) for c in checks)
    )


def tanner_to_json(t: FullTannerGraph) -> dict:
    return {
        "n": t.n,
        "k": t.k,
        "r": t.r,
        "local_checks": [sorted(c) for c in t.local_checks],
        "global_count": t.global_count,
    }


def tanner_from_json(data: dict) -> FullTannerGraph:
    try:
        return FullTannerGraph(
            n=data["n"],
            k=data["k"],
            r=data["r"],
            local_checks=tuple(frozenset(c) for c in data["local_checks"]),
            global_count=data["global_count"],
        )
    except (KeyError, TypeError) as exc:
        raise InvalidTanner(f"malformed Tanner graph JSON: {exc}") from exc
