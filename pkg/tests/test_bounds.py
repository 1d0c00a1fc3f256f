from fractions import Fraction

import pytest

from lintersect import (
    best_bound,
    binomial,
    bound_barg_musin,
    bound_bose,
    bound_edf,
    bound_ekr,
    bound_fisher_uniform,
    bound_frankl_furedi,
    bound_main,
    bound_rw,
    projective_plane,
    star,
    sunflower,
)
from lintersect.bounds import BoundError, BoundReport


def fact_binom(n, r):
    """Binomial from factorial products, independent of math.comb."""
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= n - i
        den *= i + 1
    return num // den


@pytest.mark.parametrize("n,r,expected", [(7, 3, 35), (5, 0, 1), (4, 7, 0), (4, -1, 0)])
def test_binomial_values(n, r, expected):
    assert binomial(n, r) == expected


def test_binomial_pascal_and_symmetry():
    for n in range(1, 201):
        for r in range(0, n + 1):
            assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)
            assert binomial(n, r) == binomial(n, n - r)
    assert binomial(200, 100) == fact_binom(200, 100)


@pytest.mark.parametrize("n,s,v", [(7, 1, 7), (10, 3, 120), (13, 1, 13)])
def test_rw(n, s, v):
    r = bound_rw(n, s)
    assert r.value == v and r.applicable == "yes"


def test_rw_rejects_bad_s():
    for n, s in [(3, 4), (3, 0)]:
        with pytest.raises(BoundError):
            bound_rw(n, s)


def test_main_examples():
    r = bound_main(40, 3, [1])
    assert (r.value, r.applicable) == (39, "yes")
    assert "37" in r.condition
    r = bound_main(7, 3, [1])
    assert (r.value, r.applicable) == (6, "no")


def test_main_threshold_edge():
    # C(16,3)*2 + 2 = 1122 exactly
    assert fact_binom(16, 3) * 2 + 2 == 1122
    r = bound_main(1122, 4, [2, 3])
    assert r.applicable == "yes"
    assert r.value == fact_binom(1120, 2) == 626640
    assert bound_main(1121, 4, [2, 3]).applicable == "no"


@pytest.mark.parametrize("L", [[0, 1], [1, 3], [3]])
def test_main_rejects(L):
    with pytest.raises(BoundError):
        bound_main(20, 3, L)


@pytest.mark.parametrize("n,s,v", [(7, 1, 7), (10, 2, 46), (13, 1, 13)])
def test_frankl_furedi(n, s, v):
    assert bound_frankl_furedi(n, s).value == v


def test_bose():
    assert [bound_bose(n).value for n in (7, 13, 1)] == [7, 13, 1]


def test_fisher_uniform():
    r = bound_fisher_uniform(100, 3, 1)
    assert (r.value, r.applicable) == (99, "yes")
    r = bound_fisher_uniform(20, 3, 1)
    assert (r.value, r.applicable) == (19, "no")
    assert fact_binom(9, 3) + 2 == 86
    r = bound_fisher_uniform(90, 3, 2)
    assert (r.value, r.applicable) == (88, "yes")
    with pytest.raises(BoundError):
        bound_fisher_uniform(20, 3, 3)


def test_ekr():
    r = bound_ekr(10, 4, 2)
    assert (r.value, r.applicable) == (28, "no")
    assert "n0(4,2)" in r.condition
    r = bound_ekr(1122, 4, 2)
    assert (r.value, r.applicable) == (626640, "yes")
    for n, k in [(9, 4), (12, 5)]:
        assert bound_ekr(n, k, k - 1).value == n - k + 1
    assert bound_ekr(5, 5, 2).value == 1
    with pytest.raises(BoundError):
        bound_ekr(10, 3, 3)
    with pytest.raises(BoundError):
        bound_ekr(3, 4, 1)


def test_edf():
    r = bound_edf(100, 4, [1, 2, 3])
    assert r.applicable == "unknown"
    assert r.value == (99 // 3) * (98 // 2) * 97 == 156849
    assert bound_edf(7, 3, [1]).value == 3
    for k in range(2, 8):
        assert bound_edf(k + 1, k, [k - 1]).value == 2
    with pytest.raises(BoundError):
        bound_edf(10, 3, [3])


def test_barg_musin_examples():
    r = bound_barg_musin(20, 5, [1, 2, 3])
    assert r.applicable == "yes"
    # C(20,3) - C(20,2)*17/19, in integers
    assert (fact_binom(20, 3) * 19 - fact_binom(20, 2) * 17) // 19 == 970
    assert r.value == 970
    r = bound_barg_musin(8, 3, [1, 2])
    assert r.applicable == "no"
    assert "16/3" in r.condition


def test_barg_musin_sign_argument():
    # 2k <= n/4 makes the left side negative, so any positive L passes
    r = bound_barg_musin(40, 4, [1, 2, 3])
    assert r.applicable == "yes"


def test_barg_musin_denominator_guard():
    with pytest.raises(BoundError, match="denominator nonpositive"):
        bound_barg_musin(4, 3, [0, 1, 2])


def test_best_bound_examples():
    t = best_bound(40, 3, [1])
    assert t.minimum.name == "main" and t.minimum.value == 39
    assert next(r for r in t.reports if r.name == "rw").value == 40
    t = best_bound(7, 3, [1])
    assert t.minimum.name == "rw" and t.minimum.value == 7
    t = best_bound(100, 3, [1, 2])
    vals = {r.name: r.value for r in t.reports}
    assert vals["frankl_furedi"] == 1 + 99 + 4851
    assert vals["main"] == 4851
    assert t.minimum.value == 4851


def test_best_bound_excludes_unknown():
    t = best_bound(100, 4, [1, 2, 3])
    edf = next(r for r in t.reports if r.name == "edf")
    assert edf.applicable == "unknown"
    assert t.minimum.name != "edf"


def test_best_bound_records_errors_without_failing():
    t = best_bound(4, 3, [0, 1, 2])
    assert any(name == "barg_musin" for name, _ in t.errors)
    assert t.minimum is not None


def test_main_never_exceeds_rw_when_applicable():
    for k in range(2, 6):
        for l1 in range(1, k):
            for s in range(1, k - l1 + 1):
                L = list(range(l1, l1 + s))
                thresh = fact_binom(k * k, l1 + 1) * s + l1
                for n in (thresh, thresh + 1, thresh + 17):
                    m = bound_main(n, k, L)
                    assert m.applicable == "yes"
                    assert m.value <= bound_rw(n, s).value


def test_frankl_furedi_dominates_top_term():
    for n in range(2, 40):
        for s in range(1, n):
            assert bound_frankl_furedi(n, s).value >= binomial(n - 1, s)


def test_reports_roundtrip_and_decimal_strings():
    r = bound_main(1122, 4, [2, 3])
    d = r.to_dict()
    assert d["value"] == "626640"
    assert BoundReport.from_dict(d) == r
    assert bound_main(1122, 4, [2, 3]) == r


def test_barg_musin_rational_exactness():
    # condition compares exact rationals: n odd makes n/2 fractional
    r = bound_barg_musin(21, 5, [1, 2, 3])
    lhs = Fraction(3 * 23) * (10 - Fraction(21, 2)) / (21 - 4)
    assert str(lhs) in r.condition


def _constructions():
    for n in range(3, 13):
        for k in range(2, n):
            for t in range(1, k):
                yield n, k, list(range(t, k)), len(star(n, k, t))
    for n, k, lam in [(7, 3, 1), (10, 4, 2), (12, 3, 2), (13, 5, 1)]:
        m = (n - lam) // (k - lam)
        yield n, k, [lam], len(sunflower(n, k, lam, m))
    for q in (2, 3, 4, 5):
        P = projective_plane(q)
        yield P.n, P.k, [1], len(P.lines)


def test_constructions_against_every_applicable_bound():
    violations = set()
    for n, k, L, size in _constructions():
        for r in best_bound(n, k, L).reports:
            if r.applicable == "yes" and size > r.value:
                violations.add((n, k, tuple(L), r.name, r.value, size))
    # The Barg-Musin inequality in the form evaluated here is beaten by the
    # line families of PG(2,4) and PG(2,5); nothing else is.
    assert violations == {
        (21, 5, (1,), "barg_musin", 20, 21),
        (31, 6, (1,), "barg_musin", 30, 31),
    }
