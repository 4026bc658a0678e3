"""Resolution of the best achievable minimum distance for (n, k, r).

The answer is always d* or d* - 1, and equals d* exactly when some
loopless multigraph of order n1 and size n2 has every k1-subset inducing
at most k2 edges.  ``decide`` settles the question by a chain of
closed-form rules (each sound in both directions unless noted), falling
back to the exhaustive multigraph oracle inside the search envelope, and
attaches the witness graph whenever the answer is d*.

Rule identifiers, in evaluation order (cheap arithmetic first, then
construction-evaluating rules, then oracles):

    k1_eq_1              r = k: every 1-vertex subgraph is empty
    divides              n2 = 0: the empty graph is trivially free
    n2_le_k2             n2 <= k2 (and n2 > 0): total size already small enough
    k2_zero              k2 = 0, k1 >= 2, n2 >= 1: a single edge violates
    k1_eq_2              k1 = 2: saturated pair graph is extremal, free
                         iff n2 <= C(n1, 2) * k2
    many_edges           n2 >= k2 + 1 and k1 >= 2k2 + 2: any k2 + 1 edges
                         span at most k1 vertices and violate
    t_bound              min-degree peeling bound exceeds k2: no free graph
    forest_k2_lt_k1m1    k2 < k1 - 1: balanced forests are extremal
    real_n1m1            n1 - k1 = 1: almost-regular graphs are extremal,
                         free iff n2 - floor(2 n2 / n1) <= k2
    mantel               k1 = 3, k2 = 2: free iff n2 <= floor(n1^2 / 4)
    turan_sufficient     k2 = C(k1, 2) - 1: the balanced complete
                         (k1-1)-partite graph is free (one-sided rule)
    forest_n2_lt_n1      n2 < n1: the balanced forest minimizes k1-density
    cycle_n2_eq_n1       n2 = n1: the cycle minimizes k1-density
    girth_k2_eq_k1m1     k2 = k1 - 1: free graphs of this size exist iff
                         simple graphs of girth > k1 reach size n2
    oracle               exhaustive multigraph search
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import constructions as cons
from . import extremal
from .multigraph import ForbiddenFamily, Multigraph, is_family_free, k_density
from .params import CodeParams

DEFAULT_ORACLE_LIMIT = 8


@dataclass(frozen=True)
class Decision:
    """Resolved distance value with rule provenance and an optional witness."""

    params: CodeParams
    value: int | tuple[int, int]
    status: str  # "exact" | "unresolved"
    rule: str
    witness: Multigraph | None
    notes: tuple[str, ...] = field(default=())


def forest_component_min(n1: int, k1: int, k2: int) -> int:
    """Fewest components of a free balanced forest on n1 vertices (k2 < k1 - 1).

    Freeness of a forest says the k1 - k2 - 1 largest components together
    hold at most k1 - 1 vertices.  With component orders differing by at
    most one that caps the large-component order at L = ceil(k1 / (k1-k2-1))
    with at most (k1 - 1) mod (k1-k2-1) components that large, and the rest
    at L - 1.  The smallest component count able to cover n1 vertices under
    those caps is returned.
    """
    kappa = k1 - k2 - 1
    if kappa <= 0:
        raise ValueError("component bound requires k2 < k1 - 1")
    large = -(-k1 // kappa)
    n_large = (k1 - 1) % kappa
    covered_by_large = n_large * large
    if n1 <= covered_by_large:
        return -(-n1 // large)
    return n_large + -(-(n1 - covered_by_large) // (large - 1))


def _truncate(g: Multigraph, size: int) -> Multigraph:
    """Remove excess multiplicity in lexicographic pair order down to ``size``."""
    excess = g.size - size
    if excess < 0:
        raise ValueError(f"cannot truncate size {g.size} to larger size {size}")
    mult = {}
    for (u, v), m in g.pair_multiplicities():
        drop = min(m, excess)
        excess -= drop
        if m - drop:
            mult[(u, v)] = m - drop
    return Multigraph(g.order, mult)


def _resolve(p: CodeParams, oracle_limit: int, use_rules: bool):
    """Return (is_d_star | None, rule, witness, notes)."""
    n1, n2, k1, k2 = p.n1, p.n2, p.k1, p.k2
    family = ForbiddenFamily(order=k1, max_size=k2)
    search_limit = min(oracle_limit, extremal.SEARCH_ENVELOPE)

    if use_rules:
        if k1 == 1:
            return True, "k1_eq_1", cons.almost_regular(n1, n2), ()
        if n2 == 0:
            return True, "divides", Multigraph.empty(n1), ()
        if k2 >= n2:
            return True, "n2_le_k2", cons.almost_regular(n1, n2), ()
        if k2 == 0 and k1 >= 2:
            return False, "k2_zero", None, ()
        if k1 == 2:
            if n2 <= comb(n1, 2) * k2:
                witness = _truncate(cons.saturated_pair_graph(n1, k2), n2)
                return True, "k1_eq_2", witness, ()
            return False, "k1_eq_2", None, ()
        if n2 >= k2 + 1 and k1 >= 2 * k2 + 2:
            return False, "many_edges", None, ()
        if extremal.t_bound(n1, n2, k1, "floor") > k2:
            return False, "t_bound", None, ()
        if k2 < k1 - 1:
            c_min = forest_component_min(n1, k1, k2)
            if n2 <= n1 - c_min:
                return True, "forest_k2_lt_k1m1", cons.balanced_forest(n1, n1 - n2), ()
            return False, "forest_k2_lt_k1m1", None, ()
        if n1 - k1 == 1:
            if n2 - (2 * n2) // n1 <= k2:
                return True, "real_n1m1", cons.almost_regular(n1, n2), ()
            return False, "real_n1m1", None, ()
        if k1 == 3 and k2 == 2:
            if n2 <= n1 * n1 // 4:
                return True, "mantel", _truncate(cons.turan_graph(n1, 2), n2), ()
            return False, "mantel", None, ()
        if k2 == comb(k1, 2) - 1:
            # forbidding k1-subsets of size C(k1,2) means forbidding k1-cliques;
            # the balanced complete (k1-1)-partite graph is the densest such
            # simple graph, so this rule is sufficient-only
            turan = cons.turan_graph(n1, k1 - 1)
            if n2 <= turan.size:
                return True, "turan_sufficient", _truncate(turan, n2), ()
        if n2 < n1:
            forest = cons.balanced_forest(n1, n1 - n2)
            if k_density(forest, k1) <= k2:
                return True, "forest_n2_lt_n1", forest, ()
            return False, "forest_n2_lt_n1", None, ()
        if n2 == n1:
            cyc = cons.cycle_graph(n1)
            if k_density(cyc, k1) <= k2:
                return True, "cycle_n2_eq_n1", cyc, ()
            return False, "cycle_n2_eq_n1", None, ()
        if k2 == k1 - 1 and k1 >= 3 and n1 <= search_limit:
            girth = extremal.max_size_girth(n1, k1)
            if n2 <= girth.value:
                return True, "girth_k2_eq_k1m1", _truncate(girth.witness, n2), ()
            return False, "girth_k2_eq_k1m1", None, ()

    if n1 <= search_limit:
        witness = extremal.free_multigraph(n1, n2, family)
        if witness is not None:
            return True, "oracle", witness, ()
        return False, "oracle", None, ()

    notes = [f"n1={n1} exceeds oracle limit {search_limit}"]
    if not use_rules:
        notes.append("closed-form rules disabled")
    elif k2 == k1 - 1 and k1 >= 3:
        notes.append("resolvable via the girth oracle at a higher limit")
    return None, "unresolved", None, tuple(notes)


def decide(p: CodeParams, oracle_limit: int = DEFAULT_ORACLE_LIMIT, *, use_rules: bool = True) -> Decision:
    """Resolve the best achievable distance for validated parameters ``p``.

    ``oracle_limit`` caps the order at which the exhaustive searches run
    (values above the module envelope are clamped).  With ``use_rules=False``
    the closed-form catalogue is skipped and only the exhaustive oracle is
    consulted, which is how the rule chain itself gets audited.

    Witness materialization assumes desk-scale n1 (the dense multigraph
    representation); the value itself is cheap for any valid parameters.
    """
    is_d_star, rule, witness, notes = _resolve(p, oracle_limit, use_rules)
    if is_d_star is None:
        return Decision(
            params=p,
            value=(p.d_star - 1, p.d_star),
            status="unresolved",
            rule=rule,
            witness=None,
            notes=notes,
        )
    if is_d_star:
        assert witness is not None
        assert witness.order == p.n1 and witness.size == p.n2
        # self-check the witness where the density sweep is affordable
        if comb(p.n1, p.k1) <= 20_000:
            assert is_family_free(witness, ForbiddenFamily(p.k1, p.k2))
        return Decision(
            params=p, value=p.d_star, status="exact", rule=rule, witness=witness, notes=notes
        )
    return Decision(
        params=p, value=p.d_star - 1, status="exact", rule=rule, witness=None, notes=notes
    )
