"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import random
import time
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from lrcdist.codec import (
    build_parity_check,
    construct_optimal_lrc,
    default_field,
    gf,
    min_distance,
    verify_locality,
)
from lrcdist.constructions import DegreeSequence, is_graphic, realize
from lrcdist.decider import decide, forest_component_min
from lrcdist.errors import InvalidParams
from lrcdist.extremal import (
    free_multigraph,
    max_size_girth,
    max_size_multigraph,
    max_size_simple,
    t_bound,
)
from lrcdist.multigraph import ForbiddenFamily, Multigraph, density_profile
from lrcdist.params import derive_params
from lrcdist.tanner import (
    FullTannerGraph,
    f2p,
    graph_to_pruned,
    p2f,
    refine,
    tanner_min_distance,
)


def _report(num, name, t0, detail=""):
    extra = f" {detail}" if detail else ""
    print(f"ACCEPTANCE {num} ({name}): PASS in {time.time() - t0:.1f}s{extra}")


def envelope_instances(n_max=24, r_max=6, n1_max=8):
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for r in range(1, min(k, r_max) + 1):
                try:
                    p = derive_params(n, k, r)
                except InvalidParams:
                    continue
                if p.n1 <= n1_max:
                    yield p


def oracle_value(p):
    witness = free_multigraph(p.n1, p.n2, ForbiddenFamily(p.k1, p.k2))
    return p.d_star if witness is not None else p.d_star - 1


def random_multigraph(rng, order, size):
    pairs = list(combinations(range(order), 2))
    mult = {}
    for _ in range(size):
        u, v = rng.choice(pairs)
        mult[(u, v)] = mult.get((u, v), 0) + 1
    return Multigraph(order, mult)


def random_full_tanner(rng, n, k, r, locals_count):
    while True:
        slots = locals_count * (r + 1)
        fill = list(range(n))
        rng.shuffle(fill)
        while len(fill) < slots:
            fill.append(rng.randrange(n))
        rng.shuffle(fill)
        checks = [fill[i * (r + 1):(i + 1) * (r + 1)] for i in range(locals_count)]
        if all(len(set(c)) == r + 1 for c in checks):
            return FullTannerGraph(
                n=n, k=k, r=r,
                local_checks=tuple(frozenset(c) for c in checks),
                global_count=(n - k) - locals_count,
            )


def test_criterion_1_rules_agree_with_oracle():
    t0 = time.time()
    count = 0
    for p in envelope_instances():
        a = decide(p, 8)
        b = decide(p, 8, use_rules=False)
        assert a.status == b.status == "exact", p
        assert a.value == b.value, (p, a.rule, a.value, b.value)
        count += 1
    elapsed = time.time() - t0
    assert elapsed < 600
    _report(1, "rule/oracle agreement", t0, f"[{count} instances]")


def test_criterion_2_mantel_reproduction():
    t0 = time.time()
    for n1 in range(3, 8):
        res = max_size_multigraph(n1, ForbiddenFamily(3, 2))
        assert res.value == n1 * n1 // 4, n1
        assert res.exhaustive
    witness4 = max_size_multigraph(4, ForbiddenFamily(3, 2)).witness
    assert witness4.size == 4
    assert time.time() - t0 < 60
    _report(2, "Mantel numbers", t0)


def test_criterion_3_multigraph_equals_simple():
    t0 = time.time()
    for k in (3, 4, 5):
        fam = ForbiddenFamily(k, k - 1)
        for n in range(k, 8):
            assert (
                max_size_multigraph(n, fam).value == max_size_simple(n, fam).value
            ), (n, k)
    assert time.time() - t0 < 300
    _report(3, "multigraph/simple equality", t0)


def test_criterion_4_simple_equals_girth():
    t0 = time.time()
    for k in (3, 4, 5):
        fam = ForbiddenFamily(k, k - 1)
        for n in range(k, 9):
            assert max_size_simple(n, fam).value == max_size_girth(n, k).value, (n, k)
    assert time.time() - t0 < 300
    _report(4, "family/girth equality", t0)


def test_criterion_5_forest_rule_matches_oracle():
    t0 = time.time()
    count = 0
    for p in envelope_instances():
        if p.k2 >= p.k1 - 1:
            continue
        count += 1
        rule_says = p.d_star if p.n2 <= p.n1 - forest_component_min(p.n1, p.k1, p.k2) else p.d_star - 1
        assert rule_says == oracle_value(p), p
    assert count > 50
    _report(5, "forest closed form", t0, f"[{count} instances]")


def test_criterion_6_degree_peeling_rule_matches_oracle():
    t0 = time.time()
    count = 0
    for p in envelope_instances():
        if p.n1 - p.k1 != 1:
            continue
        count += 1
        rule_says = p.d_star if p.n2 - (2 * p.n2) // p.n1 <= p.k2 else p.d_star - 1
        assert rule_says == oracle_value(p), p
    assert count > 20

    listed = [(16, 9, 4), (19, 12, 5), (19, 11, 5), (22, 14, 6), (22, 13, 6)]
    values = []
    for n, k, r in listed:
        p = derive_params(n, k, r)
        assert p.n1 - p.k1 == 1
        d = decide(p)
        assert d.status == "exact"
        formula = p.d_star if p.n2 - (2 * p.n2) // p.n1 <= p.k2 else p.d_star - 1
        assert d.value == formula
        assert p.n1 <= 8 and d.value == oracle_value(p)
        values.append(d.value)
    assert values[0] == 6
    _report(6, "n1-k1=1 rule", t0, f"[{count} envelope + {len(listed)} listed]")


def test_criterion_7_end_to_end_construction():
    t0 = time.time()
    for (n, k, r) in [(16, 9, 4), (12, 7, 3)]:
        p = derive_params(n, k, r)
        d = decide(p)
        assert d.value == p.d_star
        t = p2f(graph_to_pruned(d.witness, p))
        field = default_field(p)
        successes = 0
        for seed in range(100):
            code = build_parity_check(t, field, seed)
            code.claimed_distance = p.d_star
            if (
                gf.rank_mod(code.H, field.q) == p.n - p.k
                and verify_locality(code)
                and min_distance(code) == p.d_star
            ):
                successes += 1
        assert successes >= 99, (n, k, r, successes)

    # exhaustive w <= 6 distance check budget for one n = 16 code
    p = derive_params(16, 9, 4)
    code = construct_optimal_lrc(p, seed=0)
    t1 = time.time()
    assert min_distance(code) == 6
    assert time.time() - t1 < 120
    _report(7, "end-to-end construction", t0)


def test_criterion_8_attach_strategy_invariance():
    t0 = time.time()
    rng = random.Random(101)
    strategies = [
        "first",
        "last",
        "cycle",
        lambda cands, i: rng.choice(cands),
        lambda cands, i: cands[(3 * i + 1) % len(cands)],
    ]
    shapes = [(8, 4, 3), (10, 5, 4), (12, 7, 3), (9, 4, 2), (16, 9, 4)]
    checked = 0
    while checked < 50:
        n, k, r = shapes[checked % len(shapes)]
        p = derive_params(n, k, r)
        g = random_multigraph(rng, p.n1, p.n2)
        pruned = graph_to_pruned(g, p)
        distances = {tanner_min_distance(p2f(pruned, s)) for s in strategies}
        assert len(distances) == 1, (n, k, r)
        checked += 1
    _report(8, "attach-strategy invariance", t0, f"[{checked} graphs x 5 strategies]")


def test_criterion_9_refinement_normalizes_and_monotone():
    t0 = time.time()
    rng = random.Random(202)
    shapes = [(8, 4, 3), (10, 5, 4), (12, 7, 3), (9, 4, 2)]
    for trial in range(50):
        n, k, r = shapes[trial % len(shapes)]
        n1 = -(-n // (r + 1))
        locals_count = rng.randint(n1, n - k)
        pruned = f2p(random_full_tanner(rng, n, k, r, locals_count))
        before = tanner_min_distance(p2f(pruned))
        out = refine(pruned)
        assert out.h == out.n1
        assert out.m == out.n2
        degrees = [sum(1 for c in out.checks if v in c) for v in range(out.m)]
        assert all(d == 2 for d in degrees)
        assert tanner_min_distance(p2f(out)) >= before
    _report(9, "refinement monotonicity", t0, "[50 graphs]")


def test_criterion_10_peeling_bound_soundness():
    t0 = time.time()
    rng = random.Random(303)
    floor_strictly_better = 0
    for n1 in range(2, 9):
        for n2 in range(0, 9):
            for _ in range(200):
                g = random_multigraph(rng, n1, n2)
                profile = density_profile(g)
                for k1 in range(1, n1 + 1):
                    fl = t_bound(n1, n2, k1, "floor")
                    ce = t_bound(n1, n2, k1, "ceil")
                    assert fl >= ce
                    assert profile[k1] >= fl
                    if ce >= 0 and fl > ce:
                        floor_strictly_better += 1
    assert floor_strictly_better > 0
    _report(10, "peeling-bound soundness", t0, f"[floor>ceil seen {floor_strictly_better}x]")


@lru_cache(maxsize=None)
def _realizable(residual: tuple) -> bool:
    """Independent realizability oracle: assign the first vertex's remaining
    degree to later vertices in every possible way, then recurse."""
    if len(residual) == 1:
        return residual[0] == 0
    d0 = residual[0]
    rest = residual[1:]

    def spread(i, remaining, acc):
        if remaining == 0:
            return _realizable(tuple(sorted(acc, reverse=True)))
        if i == len(acc):
            return False
        top = min(remaining, rest[i])
        for take in range(top, -1, -1):
            acc2 = list(acc)
            acc2[i] -= take
            if spread(i + 1, remaining - take, acc2):
                return True
        return False

    return spread(0, d0, list(rest))


def test_criterion_11_realization_correctness():
    t0 = time.time()
    checked = 0
    for n in range(1, 7):
        for degs in combinations_with_replacement(range(6, -1, -1), n):
            seq = DegreeSequence(degs)
            expected = _realizable(seq.degrees)
            assert is_graphic(seq) == expected, degs
            if expected:
                assert realize(seq).degrees() == seq.degrees, degs
            checked += 1
    assert checked == 1715
    _report(11, "degree-sequence realization", t0, f"[{checked} sequences]")
