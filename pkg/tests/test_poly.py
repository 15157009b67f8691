import random

import pytest

from superell.ff import make_field
from superell.poly import Polynomial, is_squarefree, poly_gcd, poly_pow, roots_in_field


def schoolbook_square_ints(coeffs, p):
    out = [0] * (2 * len(coeffs) - 1)
    for i, a in enumerate(coeffs):
        for j, b in enumerate(coeffs):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def test_square_of_x5_minus_x_over_f5():
    F5 = make_field(5)
    f = Polynomial(F5, [0, -1, 0, 0, 0, 1])
    expected = schoolbook_square_ints([0, 4, 0, 0, 0, 1], 5)
    got = poly_pow(f, 2)
    assert [c.lift() for c in got.coeffs] == expected
    # x^10 + 3 x^6 + x^2
    assert got == Polynomial(F5, [0, 0, 1, 0, 0, 0, 3, 0, 0, 0, 1])


def test_pow_zero_exponent_and_zero_base():
    F7 = make_field(7)
    f = Polynomial(F7, [3, 1])
    assert poly_pow(f, 0) == Polynomial.one(F7)
    assert poly_pow(Polynomial.zero(F7), 3) == Polynomial.zero(F7)
    assert poly_pow(Polynomial.zero(F7), 0) == Polynomial.one(F7)


def test_coeff_extraction():
    F3 = make_field(3)
    f = Polynomial(F3, [0, -1, 0, 0, 0, 1])  # x^5 - x
    assert f.coeff(5).lift() == 1
    assert f.coeff(-1).is_zero()
    assert f.coeff(99).is_zero()
    F5 = make_field(5)
    sq = poly_pow(Polynomial(F5, [0, -1, 0, 0, 0, 1]), 2)
    assert sq.coeff(4).is_zero()


def test_pow_additivity_random():
    rng = random.Random(11)
    F5 = make_field(5)
    for _ in range(25):
        f = Polynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 5))])
        a, b = rng.randrange(4), rng.randrange(4)
        assert poly_pow(f, a + b) == poly_pow(f, a) * poly_pow(f, b)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_freshman_dream(p):
    rng = random.Random(p)
    F = make_field(p)
    for _ in range(10):
        f = Polynomial(F, [rng.randrange(p) for _ in range(4)])
        g = Polynomial(F, [rng.randrange(p) for _ in range(4)])
        assert poly_pow(f + g, p) == poly_pow(f, p) + poly_pow(g, p)


def test_squarefree_examples():
    F3 = make_field(3)
    assert is_squarefree(Polynomial(F3, [0, -1, 0, 0, 0, 1]))  # x^5 - x
    F5 = make_field(5)
    assert not is_squarefree(Polynomial(F5, [0, 0, 1]))  # x^2
    F7 = make_field(7)
    assert is_squarefree(Polynomial(F7, [0, -1] + [0] * 5 + [1]))  # x^7 - x
    with pytest.raises(ValueError):
        is_squarefree(Polynomial.zero(F3))


def test_pth_power_is_not_squarefree():
    F3 = make_field(3)
    # (x + 1)^3 = x^3 + 1 has zero derivative
    assert not is_squarefree(Polynomial(F3, [1, 0, 0, 1]))


def test_roots_by_exhaustive_evaluation():
    F5 = make_field(5)
    f = Polynomial(F5, [0, -1, 0, 0, 0, 1])
    assert roots_in_field(f, F5) == set(F5.elements())

    F3 = make_field(3)
    g = Polynomial(F3, [1, 0, 1])  # x^2 + 1
    assert roots_in_field(g, F3) == set()
    F9 = make_field(3, 2)
    got = roots_in_field(g, F9)
    # independent scan of all nine elements
    lifted = g.lift_coeffs(F9)
    expected = {a for a in F9.elements() if lifted.eval(a).is_zero()}
    assert got == expected
    t = F9.gen()
    assert got == {t, -t}


def test_root_count_bounded_by_degree():
    rng = random.Random(3)
    F7 = make_field(7)
    for _ in range(30):
        coeffs = [rng.randrange(7) for _ in range(rng.randrange(2, 7))]
        f = Polynomial(F7, coeffs)
        if f.is_zero():
            continue
        assert len(roots_in_field(f, F7)) <= max(f.degree, 0)


def test_divmod_round_trip():
    rng = random.Random(19)
    F5 = make_field(5)
    for _ in range(40):
        f = Polynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 8))])
        g = Polynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 5))])
        if g.is_zero():
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree or r.is_zero()


def test_gcd_of_known_factors():
    F5 = make_field(5)
    x = Polynomial.x(F5)
    one = Polynomial.one(F5)
    a = (x + one) * (x + one.scale(2))
    b = (x + one) * (x + one.scale(3))
    assert poly_gcd(a, b) == x + one


def test_eval_in_extension():
    F3 = make_field(3)
    F9 = make_field(3, 2)
    f = Polynomial(F3, [1, 0, 1])
    t = F9.gen()
    assert f.eval(t).is_zero()
