import pytest

from superell.canrep import sl2_generators, zeta_of_order
from superell.curve import (
    ASQ,
    GENERAL,
    HYPERELLIPTIC,
    INFINITY,
    CurveAutomorphism,
    InvalidCurveError,
    SuperellipticCurve,
    UnsupportedModelError,
    apply_automorphism,
    count_infinite_points,
    count_points,
    enumerate_points,
    genus,
    orbit_partition,
    _normalize_point,
)
from superell.ff import make_field
from superell.poly import Polynomial


def curve(m, coeffs, p, kind=None):
    return SuperellipticCurve(m, Polynomial(make_field(p), coeffs), kind=kind)


def pair_count_oracle(X, e):
    """Independent O(q^2) affine enumeration plus the infinity rule."""
    K = make_field(X.p, e)
    f = X.f.lift_coeffs(K)
    n = 0
    for x in K.elements():
        fx = f.eval(x)
        for y in K.elements():
            if y**X.m == fx:
                n += 1
    return n + count_infinite_points(X, K)


# -- model validation -------------------------------------------------------


def test_gcd_constraint_enforced():
    with pytest.raises(InvalidCurveError):
        curve(3, [0, -1, 0, 1], 3)  # gcd(3, 3) != 1


def test_hyperelliptic_requires_squarefree():
    with pytest.raises(InvalidCurveError):
        curve(2, [0, 0, 1], 5, kind=HYPERELLIPTIC)


def test_kind_inference():
    bolza = curve(2, [0, -1, 0, 0, 0, 1], 5)
    assert bolza.kind == HYPERELLIPTIC
    hermitian_form = curve(6, [0, -1, 0, 0, 0, 1], 5)
    assert hermitian_form.kind == ASQ
    other = curve(3, [1, 1, 0, 1], 5)
    assert other.kind == GENERAL


# -- genus ------------------------------------------------------------------


def test_genus_examples():
    assert genus(curve(6, [0, -1, 0, 0, 0, 1], 5)) == 10
    assert genus(curve(2, [0, -1, 0, 0, 0, 1], 5)) == 2
    assert genus(curve(4, [0, -1, 0, 1], 3)) == 3
    with pytest.raises(UnsupportedModelError):
        genus(curve(3, [1, 1, 0, 1], 5))


# -- point counting ---------------------------------------------------------


def test_count_matches_pair_oracle():
    cases = [
        curve(2, [0, -1, 0, 0, 0, 1], 5),   # genus 2, odd degree
        curve(2, [0, -1, 0, 0, 0, 1], 3),
        curve(4, [0, -1, 0, 1], 3),         # Artin-Schreier quotient
        curve(3, [0, -1, 0, 0, 0, 1], 5),
        curve(2, [2, 1, 0, 0, 0, 0, 1], 5), # even degree, infinity rule
    ]
    for X in cases:
        for e in (1, 2):
            assert count_points(X, e).count == pair_count_oracle(X, e)


def test_bolza_count_over_f25_is_minimal():
    X = curve(2, [0, -1, 0, 0, 0, 1], 5)
    pc = count_points(X, 2)
    assert pc.count == 6  # == 25 - 2*2*5 + 1
    assert pc.status == "minimal"
    assert pc.count in (6, 46)


def test_maximal_member_of_quotient_family():
    # m' = (p+1)/m even makes y^m = x^p - x attain the upper Weil bound
    X = curve(3, [0, -1, 0, 0, 0, 1], 5)
    pc = count_points(X, 2)
    assert pc.count == 66 == 25 + 2 * 4 * 5 + 1
    assert pc.status == "maximal"


def test_weil_window_example():
    X = curve(2, [0, 1, 0, 1], 5)  # y^2 = x^3 + x, genus 1
    pc = count_points(X, 1)
    assert 2 <= pc.count <= 10
    assert pc.status is None


def test_count_rejects_general_kind():
    X = curve(3, [1, 1, 0, 1], 5)
    with pytest.raises(UnsupportedModelError):
        count_points(X, 2)


@pytest.mark.parametrize("p,m", [(3, 2), (3, 4), (5, 2), (5, 3), (5, 6), (7, 2), (7, 4)])
def test_weil_bound_on_quotient_family(p, m):
    coeffs = [0, -1] + [0] * (p - 2) + [1]
    X = curve(m, coeffs, p)
    g = genus(X)
    for e in (1, 2):
        pc = count_points(X, e)
        assert (pc.count - p**e - 1) ** 2 <= 4 * g * g * p**e


def test_even_degree_infinity_counts():
    # leading coefficient 1 is always a square: two points at infinity
    X = curve(2, [2, 1, 0, 0, 0, 0, 1], 5)
    assert count_infinite_points(X, make_field(5)) == 2
    # non-square leading coefficient over F_5 (2 is not a QR)
    Y = curve(2, [1, 1, 0, 0, 0, 0, 2], 5)
    assert count_infinite_points(Y, make_field(5)) == 0
    # squares appear after the quadratic extension
    assert count_infinite_points(Y, make_field(5, 2)) == 2


# -- automorphisms ----------------------------------------------------------


def test_vertical_map_fixes_branch_point():
    X = curve(2, [0, -1, 0, 0, 0, 1], 5)
    F5 = make_field(5)
    sigma = CurveAutomorphism.root_of_unity(F5.element(-1), 2)
    P = (F5.zero(), F5.zero())
    assert apply_automorphism(X, sigma, P) == P


def test_translation_moves_branch_point():
    X = curve(6, [0, -1, 0, 0, 0, 1], 5)
    F5 = make_field(5)
    t = CurveAutomorphism.mobius_ints(F5, 1, 1, 0, 1)
    P = (F5.zero(), F5.zero())
    assert apply_automorphism(X, t, P) == (F5.element(1), F5.zero())


def test_inversion_sends_infinity_to_origin():
    X = curve(6, [0, -1, 0, 0, 0, 1], 5)
    F5 = make_field(5)
    s = CurveAutomorphism.mobius_ints(F5, 0, 1, -1, 0)
    K = make_field(5, 2)
    img = _normalize_point(apply_automorphism(X, s, INFINITY), K)
    assert img == (K.zero(), K.zero())


def test_identity_mobius_fixes_every_point():
    X = curve(4, [0, -1, 0, 1], 3)
    F3 = make_field(3)
    ident = CurveAutomorphism.mobius_ints(F3, 1, 0, 0, 1)
    K = make_field(3, 2)
    for P in enumerate_points(X, 2):
        assert _normalize_point(apply_automorphism(X, ident, P), K) == P


def test_mobius_determinant_validated():
    F5 = make_field(5)
    with pytest.raises(InvalidCurveError):
        CurveAutomorphism.mobius_ints(F5, 2, 0, 0, 1)  # det = 2


def test_automorphism_is_bijection_on_points():
    X = curve(4, [0, -1, 0, 1], 3)
    K = make_field(3, 2)
    pts = enumerate_points(X, 2)
    t, s = sl2_generators(3)
    zeta = CurveAutomorphism.root_of_unity(zeta_of_order(K, 4), 4)
    for g in (t, s, zeta):
        images = {_normalize_point(apply_automorphism(X, g, P), K) for P in pts}
        assert images == set(pts)


# -- orbits -----------------------------------------------------------------


def test_translation_orbits_on_small_quotient_curve():
    X = curve(4, [0, -1, 0, 1], 3)
    F3 = make_field(3)
    t = CurveAutomorphism.mobius_ints(F3, 1, 1, 0, 1)
    orbits = orbit_partition(X, [t], 2)
    sizes = sorted(len(o) for o in orbits)
    assert sizes.count(1) == 1                     # unique fixed point
    assert all(s == 3 for s in sizes[1:])          # free elsewhere
    singleton = [o for o in orbits if len(o) == 1][0]
    assert singleton == [INFINITY]


def test_two_short_orbits_for_middle_m():
    X = curve(3, [0, -1, 0, 0, 0, 1], 5)
    K = make_field(5, 2)
    zeta = CurveAutomorphism.root_of_unity(zeta_of_order(K, 3), 3)
    t, s = sl2_generators(5)
    orbits = orbit_partition(X, [zeta, t, s], 2)
    # genus 4 = c(p-1)/2 with c = 2: orbit sizes p+1 and (c+1)p(p-1)
    assert sorted(len(o) for o in orbits) == [6, 60]


def test_empty_generator_list_gives_singletons():
    X = curve(4, [0, -1, 0, 1], 3)
    orbits = orbit_partition(X, [], 2)
    assert all(len(o) == 1 for o in orbits)
    assert len(orbits) == count_points(X, 2).count


def test_orbits_are_deterministic():
    X = curve(4, [0, -1, 0, 1], 3)
    F3 = make_field(3)
    t = CurveAutomorphism.mobius_ints(F3, 1, 1, 0, 1)
    assert orbit_partition(X, [t], 2) == orbit_partition(X, [t], 2)


def test_compose_is_left_to_right():
    F5 = make_field(5)
    a = CurveAutomorphism.mobius_ints(F5, 1, 1, 0, 1)   # x -> x + 1
    b = CurveAutomorphism.mobius_ints(F5, 0, 1, -1, 0)  # x -> -1/x
    ab = a.compose(b)
    X = curve(6, [0, -1, 0, 0, 0, 1], 5)
    P = (F5.zero(), F5.zero())
    step = apply_automorphism(X, a, P)
    expected = apply_automorphism(X, b, step)
    assert apply_automorphism(X, ab, P) == expected


def test_maximal_status_respects_genus_ceiling():
    # a curve attaining the upper Weil bound over F_{p^2} has genus at
    # most p(p-1)/2
    for p, m in ((3, 2), (3, 4), (5, 2), (5, 3), (7, 2), (7, 4)):
        coeffs = [0, -1] + [0] * (p - 2) + [1]
        X = curve(m, coeffs, p)
        pc = count_points(X, 2)
        if pc.status == "maximal":
            assert genus(X) <= p * (p - 1) // 2
