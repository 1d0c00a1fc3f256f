import pytest

from lintersect import (
    BlockSet,
    FamilyError,
    binomial,
    bound_rw,
    intersection_sizes,
    is_l_intersecting,
    is_uniform,
    kernel,
    projective_plane,
    star,
    sunflower,
)


def test_star_example():
    assert star(5, 3, 2).to_lists() == [[1, 2, 3], [1, 2, 4], [1, 2, 5]]
    assert len(star(10, 4, 2)) == 28
    for n, k in [(9, 4), (6, 2), (11, 5)]:
        assert len(star(n, k, k - 1)) == n - k + 1


def test_star_rejects():
    with pytest.raises(FamilyError):
        star(5, 3, 3)
    with pytest.raises(FamilyError):
        star(3, 4, 1)


def test_sunflower_examples():
    assert sunflower(7, 3, 1, 3).to_lists() == [[1, 2, 3], [1, 4, 5], [1, 6, 7]]
    F = sunflower(10, 4, 2, 4)
    assert len(F) == 4
    assert intersection_sizes(F) == [2]
    assert kernel(F) == BlockSet.of([1, 2])


def test_sunflower_capacity_error():
    with pytest.raises(FamilyError, match="maximum feasible m = 2"):
        sunflower(5, 3, 1, 3)


def test_sunflower_invariants():
    for n in range(3, 13):
        for k in range(2, n + 1):
            for lam in range(1, k):
                top = (n - lam) // (k - lam)
                for m in range(2, top + 1):
                    F = sunflower(n, k, lam, m)
                    assert intersection_sizes(F) == [lam]
                    assert kernel(F) == BlockSet.of(range(1, lam + 1))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_projective_plane_invariants(q):
    P = projective_plane(q)
    assert P.n == len(P.lines) == q * q + q + 1
    assert all(P.check().values())
    assert is_uniform(P.lines, q + 1)
    assert intersection_sizes(P.lines) == [1]
    assert kernel(P.lines) == BlockSet(0)


def test_plane_labels_and_incidence_text():
    P = projective_plane(2)
    assert P.points[0] == (0, 0, 1)
    text = P.incidence_text()
    assert len(text.splitlines()) == 21
    pairs = {tuple(map(int, line.split())) for line in text.splitlines()}
    assert pairs == set(P.incidences())


def test_plane_rejects():
    for q in (6, 10, 1):
        with pytest.raises(FamilyError, match="not a prime power"):
            projective_plane(q)
    with pytest.raises(FamilyError, match="supported range"):
        projective_plane(17)


def test_fano_beats_conjectured_bound_at_threshold():
    # n = 7 = k^2 - k + 1 with k = 3 is exactly the excluded case
    P = projective_plane(2)
    assert is_l_intersecting(P.lines, [1])
    assert len(P.lines) == 7 > binomial(6, 1)
    assert len(P.lines) == bound_rw(7, 1).value
