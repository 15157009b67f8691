import random

import pytest

from superell.ff import (
    FieldMismatchError,
    NonPrimeModulusError,
    frobenius,
    is_prime,
    lift_to,
    make_field,
)


def brute_force_smallest_irreducible_quadratic(p):
    # scan (const, linear) ascending; irreducible <=> no roots for degree 2
    for c0 in range(p):
        for c1 in range(p):
            if all((a * a + c1 * a + c0) % p != 0 for a in range(p)):
                return (c0, c1, 1)
    raise AssertionError


def test_prime_field_has_no_modulus():
    F5 = make_field(5, 1)
    assert F5.p == 5 and F5.k == 1 and F5.modulus is None


def test_f9_modulus_is_smallest_lexicographic():
    F9 = make_field(3, 2)
    assert F9.modulus == brute_force_smallest_irreducible_quadratic(3)
    assert F9.modulus == (1, 0, 1)  # x^2 + 1


def test_f25_modulus_matches_independent_scan():
    F25 = make_field(5, 2)
    assert F25.modulus == brute_force_smallest_irreducible_quadratic(5)


def test_non_prime_rejected():
    with pytest.raises(NonPrimeModulusError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(5, 0)


def test_degree_four_field_over_f2():
    # forces the full irreducibility test (gcd with x^(p^i) - x)
    F16 = make_field(2, 4)
    # independent scan: first vector (c0, c1, c2, c3) in ascending tuple
    # order whose monic quartic has no linear or quadratic factor
    def divides(small, big):
        big = list(big)
        while len(big) >= len(small):
            if big[-1]:
                shift = len(big) - len(small)
                big = [(x - y) % 2 for x, y in zip(big, [0] * shift + list(small))]
            big.pop()
        return not any(big)

    import itertools

    smalls = [(0, 1), (1, 1), (1, 1, 1)]  # x, x+1, x^2+x+1
    expected = None
    for low in itertools.product(range(2), repeat=4):
        cand = list(low) + [1]
        if not any(divides(s, cand) for s in smalls):
            expected = tuple(cand)
            break
    assert F16.modulus == expected == (1, 0, 0, 1, 1)  # x^4 + x^3 + 1
    one = F16.one()
    for a in F16.elements():
        if not a.is_zero():
            assert a**15 == one


def test_frobenius_fixes_prime_field():
    F5 = make_field(5)
    a = F5.element(2)
    assert frobenius(a) == a


def test_frobenius_on_f9_generator():
    F9 = make_field(3, 2)
    t = F9.gen()
    # t^2 = -1, so t^3 = -t; check against direct repeated multiplication
    assert t * t == -F9.one()
    assert frobenius(t) == t * t * t == -t


def test_frobenius_of_zero():
    F49 = make_field(7, 2)
    assert frobenius(F49.zero()) == F49.zero()


def test_arith_examples():
    F5 = make_field(5)
    assert F5.element(3) * F5.element(4) == F5.element(2)
    F7 = make_field(7)
    assert F7.element(2).inverse() == F7.element(4)
    with pytest.raises(ZeroDivisionError):
        F7.zero().inverse()


def test_field_mismatch_rejected():
    F5, F7 = make_field(5), make_field(7)
    with pytest.raises(FieldMismatchError):
        F5.element(1) + F7.element(1)


def test_extension_inverse_round_trip():
    rng = random.Random(7)
    for p, k in ((3, 2), (5, 2), (7, 2), (3, 3)):
        K = make_field(p, k)
        elems = list(K.elements())
        for _ in range(50):
            a = elems[rng.randrange(1, len(elems))]
            assert a * a.inverse() == K.one()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_additivity(p):
    K = make_field(p, 2)
    rng = random.Random(p)
    elems = list(K.elements())
    for _ in range(100):
        a = elems[rng.randrange(len(elems))]
        b = elems[rng.randrange(len(elems))]
        assert frobenius(a + b) == frobenius(a) + frobenius(b)


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (7, 2), (2, 4)])
def test_frobenius_iterated_k_times_is_identity(p, k):
    K = make_field(p, k)
    rng = random.Random(p * k)
    elems = list(K.elements())
    for _ in range(200):
        a = elems[rng.randrange(len(elems))]
        b = a
        for _ in range(k):
            b = frobenius(b)
        assert b == a


def test_multiplicative_group_order():
    for p, k in ((3, 2), (5, 2), (7, 2)):
        K = make_field(p, k)
        one = K.one()
        for a in K.elements():
            if not a.is_zero():
                assert a ** (p**k - 1) == one


def test_lift_to_extension():
    F3 = make_field(3)
    F9 = make_field(3, 2)
    a = lift_to(F3.element(2), F9)
    assert a.field == F9 and a == F9.element(2)
    with pytest.raises(FieldMismatchError):
        lift_to(F9.gen(), make_field(3, 3))


def test_is_prime_small_values():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
