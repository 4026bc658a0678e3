import pytest

from lrcdist.errors import InvalidParams
from lrcdist.params import derive_params


def ceil_div(a, b):
    # independent oracle for the derivations: ceil via float-free arithmetic
    return (a + b - 1) // b


def test_known_derivations():
    p = derive_params(16, 9, 4)
    assert (p.n1, p.n2, p.k1, p.k2, p.d_star) == (4, 4, 3, 3, 6)
    p = derive_params(12, 7, 3)
    assert (p.n1, p.n2, p.k1, p.k2, p.d_star) == (3, 0, 3, 2, 4)
    p = derive_params(6, 3, 3)
    assert (p.n1, p.n2, p.k1, p.k2, p.d_star) == (2, 2, 1, 0, 4)


def test_rate_bound_rejected():
    with pytest.raises(InvalidParams) as exc:
        derive_params(5, 4, 1)
    assert exc.value.reason == "locality"


@pytest.mark.parametrize(
    "n,k,r",
    [(4, 5, 1), (4, 4, 1), (5, 2, 3), (5, 2, 0), (3, 0, 1), (5, 3, -1)],
)
def test_ordering_rejected(n, k, r):
    with pytest.raises(InvalidParams) as exc:
        derive_params(n, k, r)
    assert exc.value.reason == "ordering"


def test_non_integer_rejected():
    with pytest.raises(InvalidParams):
        derive_params(10.0, 4, 2)
    with pytest.raises(InvalidParams):
        derive_params(10, True, 1)


def test_identities_and_invariants_over_sweep():
    seen = 0
    for n in range(2, 40):
        for k in range(1, n):
            for r in range(1, k + 1):
                try:
                    p = derive_params(n, k, r)
                except InvalidParams:
                    continue
                seen += 1
                assert p.n1 * (r + 1) - p.n2 == n
                assert p.k1 * r - p.k2 == k
                assert p.n1 == ceil_div(n, r + 1)
                assert p.k1 == ceil_div(k, r)
                assert 0 <= p.n2 <= r
                assert 0 <= p.k2 <= r - 1
                assert p.n1 >= p.k1
                assert p.d_star >= 2
    assert seen > 1000


def test_deterministic():
    assert derive_params(100, 60, 5) == derive_params(100, 60, 5)


def test_large_inputs_total():
    p = derive_params(2**30, 2**29, 2**10)
    assert p.n1 * (p.r + 1) - p.n2 == p.n
