"""Loopless multigraphs with exact induced-subgraph size queries.

The central predicate of the whole package lives here: a multigraph is
"(k, s)-family-free" when no k of its vertices induce more than s edges
(counted with multiplicity).  The best code distance for parameters
(n, k, r) equals the bound d* exactly when a family-free multigraph of
order n1 and size n2 exists for the family (k1, k2).

Graphs are immutable; the multiplicity lives in a dense symmetric
matrix, which is the right trade-off for the desk-scale orders (<= 16)
every exhaustive search in this package operates at.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import BadArgs, BadK, EnvelopeExceeded, UnknownVertex

DENSITY_ENVELOPE = 16


@dataclass(frozen=True)
class ForbiddenFamily:
    """All multigraphs of a fixed order with size strictly above ``max_size``."""

    order: int
    max_size: int

    def __post_init__(self):
        if self.order < 1:
            raise BadArgs(f"family order must be >= 1, got {self.order}")
        if self.max_size < 0:
            raise BadArgs(f"family max_size must be >= 0, got {self.max_size}")


class Multigraph:
    """Immutable loopless multigraph on vertices 0..order-1."""

    __slots__ = ("order", "_rows", "_size")

    def __init__(self, order: int, multiplicities: Mapping[tuple[int, int], int] | None = None):
        if order < 0:
            raise BadArgs(f"order must be >= 0, got {order}")
        rows = [[0] * order for _ in range(order)]
        size = 0
        for (u, v), m in (multiplicities or {}).items():
            if not (0 <= u < order and 0 <= v < order):
                raise UnknownVertex(f"vertex pair ({u}, {v}) outside 0..{order - 1}")
            if u == v:
                raise BadArgs(f"self-loop on vertex {u} is not allowed")
            if m < 0:
                raise BadArgs(f"negative multiplicity {m} on ({u}, {v})")
            rows[u][v] += m
            rows[v][u] += m
            size += m
        self.order = order
        self._rows = tuple(tuple(r) for r in rows)
        self._size = size

    @classmethod
    def empty(cls, order: int) -> "Multigraph":
        return cls(order, {})

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build from an edge list; repeated pairs accumulate multiplicity."""
        mult: dict[tuple[int, int], int] = {}
        for u, v in edges:
            key = (u, v) if u <= v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        return cls(order, mult)

    @property
    def size(self) -> int:
        """Edge count with multiplicity."""
        return self._size

    def multiplicity(self, u: int, v: int) -> int:
        if not (0 <= u < self.order and 0 <= v < self.order):
            raise UnknownVertex(f"vertex pair ({u}, {v}) outside 0..{self.order - 1}")
        return self._rows[u][v]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise UnknownVertex(f"vertex {v} outside 0..{self.order - 1}")
        return sum(self._rows[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self._rows)

    def pair_multiplicities(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Nonzero (u, v) -> multiplicity pairs with u < v, in lexicographic order."""
        for u in range(self.order):
            row = self._rows[u]
            for v in range(u + 1, self.order):
                if row[v]:
                    yield (u, v), row[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with each pair repeated by its multiplicity."""
        out: list[tuple[int, int]] = []
        for (u, v), m in self.pair_multiplicities():
            out.extend([(u, v)] * m)
        return out

    def induced_size(self, vertices: Iterable[int]) -> int:
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.order:
                raise UnknownVertex(f"vertex {v} outside 0..{self.order - 1}")
        total = 0
        for i, u in enumerate(vs):
            row = self._rows[u]
            for v in vs[i + 1:]:
                total += row[v]
        return total

    def is_almost_regular(self) -> bool:
        """True when all vertex degrees differ by at most one."""
        if self.order == 0:
            return True
        degs = self.degrees()
        return max(degs) - min(degs) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.order == other.order
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.order, self._rows))

    def __repr__(self) -> str:
        return f"Multigraph(order={self.order}, size={self._size})"


def induced_size(g: Multigraph, vertices: Iterable[int]) -> int:
    """Sum of edge multiplicities over pairs inside ``vertices``."""
    return g.induced_size(vertices)


def k_density(g: Multigraph, k: int) -> int:
    """Maximum induced size over all k-vertex subsets, by exhaustive enumeration."""
    if not 1 <= k <= g.order:
        raise BadK(f"k must be in [1, {g.order}], got {k}")
    rows = g._rows
    best = 0
    for combo in combinations(range(g.order), k):
        total = 0
        for i in range(1, k):
            row = rows[combo[i]]
            for j in range(i):
                total += row[combo[j]]
        if total > best:
            best = total
    return best


def density_profile(g: Multigraph) -> list[int]:
    """k_density(g, k) for every k in 0..order, via one pass over all subsets.

    Cheaper than repeated k_density calls when several k values are needed.
    """
    n = g.order
    if n > DENSITY_ENVELOPE:
        raise EnvelopeExceeded(f"density profile limited to order <= {DENSITY_ENVELOPE}")
    rows = g._rows
    size_of = [0] * (1 << n)
    best = [0] * (n + 1)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        row = rows[v]
        s = size_of[rest]
        w = rest
        while w:
            u = (w & -w).bit_length() - 1
            s += row[u]
            w &= w - 1
        size_of[mask] = s
        c = mask.bit_count()
        if s > best[c]:
            best[c] = s
    return best


def is_family_free(g: Multigraph, family: ForbiddenFamily) -> bool:
    """True iff no subgraph of ``family.order`` vertices has size > ``family.max_size``."""
    if family.order > g.order:
        raise BadK(
            f"family order {family.order} exceeds graph order {g.order}"
        )
    return k_density(g, family.order) <= family.max_size


def multigraph_to_json(g: Multigraph) -> dict:
    """JSON form: {"order": N, "edges": [[u, v], ...]}, repeats encode multiplicity."""
    return {"order": g.order, "edges": [[u, v] for (u, v) in g.edges()]}


def multigraph_from_json(data: dict) -> Multigraph:
    if not isinstance(data, dict) or "order" not in data or "edges" not in data:
        raise BadArgs("graph JSON must have 'order' and 'edges' keys")
    order = data["order"]
    if not isinstance(order, int) or order < 0:
        raise BadArgs(f"bad order {order!r}")
    edges = []
    for item in data["edges"]:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise BadArgs(f"bad edge entry {item!r}")
        u, v = item
        if u == v:
            raise BadArgs(f"loop edge [{u}, {v}] rejected")
        edges.append((u, v))
    return Multigraph.from_edges(order, edges)
