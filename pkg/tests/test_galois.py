from itertools import product

import pytest

from lintersect import field_make
from lintersect.galois import first_irreducible, prime_power


def test_prime_power():
    assert prime_power(5) == (5, 1)
    assert prime_power(16) == (2, 4)
    assert prime_power(9) == (3, 2)
    for q in (0, 1, 6, 12, 15):
        assert prime_power(q) is None


def test_prime_field():
    F = field_make(5)
    assert F.mul(2, 3) == 1
    assert F.inv(2) == 3


def test_gf4_forced_modulus():
    F = field_make(4)
    assert F.modulus_str == "x^2+x+1"
    x = 2  # digits (0, 1)
    assert F.mul(x, x) == 3  # x + 1


@pytest.mark.parametrize("q,modulus", [(8, "x^3+x+1"), (16, "x^4+x+1"), (9, "x^2+1"), (27, "x^3+2x+1")])
def test_first_irreducible(q, modulus):
    assert field_make(q).modulus_str == modulus


def test_first_irreducible_is_lexicographically_first():
    # every earlier monic cubic over GF(2) has a root
    for tail in product(range(2), repeat=3):
        m = list(reversed(tail)) + [1]
        if tuple(m) == first_irreducible(2, 3):
            break
        assert any(sum(c * x**i for i, c in enumerate(m)) % 2 == 0 for x in range(2))


def test_gf9_orders_divide_8():
    F = field_make(9)
    orders = [F.order(a) for a in range(1, 9)]
    assert all(8 % o == 0 for o in orders)
    assert 8 in orders


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_field_axioms(q):
    F = field_make(q)
    E = list(F.elements)
    for a in E:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b, c in product(E, repeat=3) if q <= 9 else []:
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    # multiplicative group is cyclic: some element has order q - 1
    assert max(F.order(a) for a in E if a) == q - 1


def test_rejects_non_prime_power():
    with pytest.raises(ValueError):
        field_make(6)
