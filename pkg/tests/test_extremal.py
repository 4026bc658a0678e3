import random
from itertools import combinations

import pytest

from lrcdist.errors import BadArgs, EnvelopeExceeded, UnboundedFamily
from lrcdist.extremal import (
    free_multigraph,
    max_size_girth,
    max_size_multigraph,
    max_size_simple,
    t_bound,
)
from lrcdist.multigraph import (
    ForbiddenFamily,
    Multigraph,
    is_family_free,
    k_density,
)


def has_short_cycle(g, k):
    """Independent girth check: BFS distances on the simple graph."""
    n = g.order
    adj = [[v for v in range(n) if g.multiplicity(u, v)] for u in range(n)]
    for u in range(n):
        for v in adj[u]:
            if u < v:
                # distance from u to v avoiding the edge (u, v)
                dist = {u: 0}
                frontier = [u]
                while frontier:
                    nxt = []
                    for x in frontier:
                        for y in adj[x]:
                            if (x, y) in ((u, v), (v, u)):
                                continue
                            if y not in dist:
                                dist[y] = dist[x] + 1
                                nxt.append(y)
                    frontier = nxt
                if v in dist and dist[v] + 1 <= k:
                    return True
    if any(g.multiplicity(u, v) > 1 for u in range(n) for v in range(u + 1, n)):
        return True
    return False


def test_multigraph_oracle_examples():
    res = max_size_multigraph(4, ForbiddenFamily(3, 2))
    assert res.value == 4
    assert res.witness.size == 4
    assert res.exhaustive
    assert max_size_multigraph(3, ForbiddenFamily(2, 0)).value == 0
    assert max_size_multigraph(5, ForbiddenFamily(3, 2)).value == 6


def test_simple_oracle_examples():
    assert max_size_simple(4, ForbiddenFamily(3, 2)).value == 4
    # the whole vertex set is itself a 5-subset, so size is capped at 4;
    # consistent with girth > 5 forcing a forest on 5 vertices
    assert max_size_simple(5, ForbiddenFamily(5, 4)).value == 4
    assert max_size_simple(3, ForbiddenFamily(3, 2)).value == 2


def test_girth_oracle_examples():
    res = max_size_girth(5, 4)
    assert res.value == 5
    assert res.witness.size == 5
    assert max_size_girth(5, 5).value == 4
    assert max_size_girth(4, 3).value == 4


def test_witnesses_satisfy_their_own_predicate():
    for order in range(3, 7):
        for fam in [ForbiddenFamily(3, 2), ForbiddenFamily(3, 1), ForbiddenFamily(order, order - 1)]:
            res = max_size_multigraph(order, fam)
            assert res.witness.order == order
            assert res.witness.size == res.value
            assert is_family_free(res.witness, fam)
            res = max_size_simple(order, fam)
            assert is_family_free(res.witness, fam)
            assert all(m <= 1 for _, m in res.witness.pair_multiplicities())
    for order in range(3, 8):
        for k in (3, 4, 5):
            res = max_size_girth(order, k)
            assert not has_short_cycle(res.witness, k)


def test_multigraph_at_least_simple():
    for order in range(3, 7):
        for f_order in range(2, order + 1):
            for f_size in range(0, 4):
                fam = ForbiddenFamily(f_order, f_size)
                assert (
                    max_size_multigraph(order, fam).value
                    >= max_size_simple(order, fam).value
                )


def test_mantel_closed_form():
    for n in range(3, 8):
        assert max_size_multigraph(n, ForbiddenFamily(3, 2)).value == n * n // 4


def test_pair_family_closed_form():
    # forbidding 2-subsets of size > s caps every pair at s
    for n in range(2, 6):
        for s in range(0, 4):
            assert max_size_multigraph(n, ForbiddenFamily(2, s)).value == s * n * (n - 1) // 2


def test_girth_equalities_small():
    for k in (3, 4, 5):
        for n in range(k, 8):
            fam = ForbiddenFamily(k, k - 1)
            ex_fam = max_size_simple(n, fam).value
            assert max_size_multigraph(n, fam).value == ex_fam
            assert ex_fam == max_size_girth(n, k).value


def test_envelope_and_family_validation():
    with pytest.raises(EnvelopeExceeded):
        max_size_multigraph(11, ForbiddenFamily(3, 2))
    with pytest.raises(UnboundedFamily):
        max_size_multigraph(4, ForbiddenFamily(1, 0))
    with pytest.raises(BadArgs):
        max_size_multigraph(3, ForbiddenFamily(4, 2))
    with pytest.raises(BadArgs):
        max_size_girth(5, 2)


def test_free_multigraph_matches_maximum():
    for order in range(2, 6):
        for fam in [ForbiddenFamily(2, 1), ForbiddenFamily(3, 2), ForbiddenFamily(3, 1)]:
            if fam.order > order:
                continue
            best = max_size_multigraph(order, fam).value
            for size in range(0, best + 3):
                g = free_multigraph(order, size, fam)
                if size <= best:
                    assert g is not None
                    assert g.order == order and g.size == size
                    assert is_family_free(g, fam)
                else:
                    assert g is None


def test_free_multigraph_never_violated_family():
    # order-1 families cannot be violated; any size is realizable on >= 2 vertices
    g = free_multigraph(5, 7, ForbiddenFamily(1, 0))
    assert g is not None and g.size == 7
    assert free_multigraph(1, 1, ForbiddenFamily(1, 0)) is None
    assert free_multigraph(1, 0, ForbiddenFamily(1, 0)).size == 0


def test_t_bound_examples():
    assert t_bound(5, 7, 3, "ceil") == 2
    assert t_bound(5, 7, 3, "floor") == 3
    for variant in ("ceil", "floor"):
        assert t_bound(6, 4, 6, variant) == 4  # empty recursion
    with pytest.raises(BadArgs):
        t_bound(4, 3, 5)
    with pytest.raises(BadArgs):
        t_bound(4, 3, 2, "round")


def test_t_bound_soundness_random():
    rng = random.Random(11)
    pairs = None
    floor_beats_ceil = 0
    for _ in range(300):
        n1 = rng.randint(2, 7)
        n2 = rng.randint(0, 8)
        pairs = list(combinations(range(n1), 2))
        mult = {}
        for _ in range(n2):
            u, v = rng.choice(pairs)
            mult[(u, v)] = mult.get((u, v), 0) + 1
        g = Multigraph(n1, mult)
        for k1 in range(1, n1 + 1):
            fl = t_bound(n1, n2, k1, "floor")
            ce = t_bound(n1, n2, k1, "ceil")
            assert fl >= ce
            if fl > ce >= 0:
                floor_beats_ceil += 1
            assert k_density(g, k1) >= fl
    assert floor_beats_ceil > 0


def test_determinism():
    a = max_size_multigraph(6, ForbiddenFamily(3, 2))
    b = max_size_multigraph(6, ForbiddenFamily(3, 2))
    assert a.witness == b.witness


def naive_family_max(order, fk, fs, simple):
    # referee with no pruning and no symmetry breaking
    from itertools import product

    pairs = list(combinations(range(order), 2))
    top = min(fs, 1) if simple else fs
    best = 0
    for assign in product(range(top + 1), repeat=len(pairs)):
        g = Multigraph(order, dict(zip(pairs, assign)))
        if is_family_free(g, ForbiddenFamily(fk, fs)):
            best = max(best, g.size)
    return best


def test_engine_matches_naive_enumeration():
    for order in range(2, 5):
        for fk in range(2, order + 1):
            for fs in range(0, 3):
                fam = ForbiddenFamily(fk, fs)
                naive = naive_family_max(order, fk, fs, False)
                assert max_size_multigraph(order, fam).value == naive
                assert max_size_simple(order, fam).value == naive_family_max(
                    order, fk, fs, True
                )
                for size in range(naive + 2):
                    assert (free_multigraph(order, size, fam) is not None) == (
                        size <= naive
                    )


def naive_girth_max(order, k):
    pairs = list(combinations(range(order), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Multigraph.from_edges(order, edges)
        if len(edges) > best and not has_short_cycle(g, k):
            best = len(edges)
    return best


def test_girth_engine_matches_naive_enumeration():
    for order in range(2, 6):
        for k in (3, 4, 5):
            assert max_size_girth(order, k).value == naive_girth_max(order, k)
