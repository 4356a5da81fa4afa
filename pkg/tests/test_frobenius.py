import dataclasses

import pytest

from oracles import random_homogeneous, random_ideal_gens

from cases import SQUARES_QUARTIC, diagonal_ci, hypersurface, poly, ring, squares_ci

from fsing.errors import RegularSequenceError, RingMismatch
from fsing.frobenius import (
    CompleteIntersection,
    TauClass,
    bracket_power,
    classify_tau,
    compute_tau,
    fedder_test_at_m,
    frobenius_root_ideal,
    frobenius_root_principal,
    isolated_non_f_pure_test,
    m_bracket,
)
from fsing.groebner import Ideal, maximal_ideal
from fsing.ring import Polynomial, RingDescriptor, monomials_of_degree

R3 = ring(3)
R5_2 = ring(5, "xy")


# ---------------------------------------------------------------------------
# bracket powers


def test_m_bracket_examples():
    assert m_bracket(R3, 3) == Ideal(
        R3, (poly("x^3", R3), poly("y^3", R3), poly("z^3", R3))
    )
    assert m_bracket(R3, 1) == maximal_ideal(R3)
    for bad in (6, 2, 0):
        with pytest.raises(ValueError):
            m_bracket(R3, bad)


def test_bracket_power_of_principal_ideal():
    r = ring(2, "xy")
    I = Ideal(r, (poly("x + y", r),))
    assert bracket_power(I, 2) == Ideal(r, (poly("x^2 + y^2", r),))
    with pytest.raises(ValueError):
        bracket_power(I, 3)


def test_bracket_power_distributes_over_sums(rng):
    for _ in range(6):
        p = rng.choice((2, 3, 5))
        r = ring(p, "xy")
        I = Ideal(r, random_ideal_gens(rng, r, 2, 3))
        J = Ideal(r, random_ideal_gens(rng, r, 2, 3))
        assert bracket_power(I + J, p) == bracket_power(I, p) + bracket_power(J, p)


def test_bracket_power_is_generator_independent(rng):
    for _ in range(6):
        p = rng.choice((2, 3))
        r = ring(p, "xy")
        I = Ideal(r, random_ideal_gens(rng, r, 3, 3))
        regenerated = Ideal(r, I.groebner().elements)
        assert bracket_power(I, p) == bracket_power(regenerated, p)


# ---------------------------------------------------------------------------
# Frobenius roots


def test_root_examples():
    assert frobenius_root_principal(poly("x^3", R3)) == Ideal(R3, (poly("x", R3),))
    assert frobenius_root_principal(poly("x^2*y", R3)).is_unit()
    assert frobenius_root_principal(poly("x^7*y^5", R3)) == Ideal(
        R3, (poly("x^2*y", R3),)
    )
    f = poly(SQUARES_QUARTIC, R3)
    assert frobenius_root_principal(f**2) == maximal_ideal(R3)


def test_root_of_zero():
    assert frobenius_root_principal(Polynomial.zero(R3)).is_zero()
    assert frobenius_root_ideal(Ideal.zero(R3)).is_zero()


def test_root_satisfies_defining_containment(rng):
    for _ in range(12):
        p = rng.choice((2, 3, 5))
        r = ring(p, rng.choice(("xy", "xyz")))
        h = random_homogeneous(rng, r, rng.randint(1, 6))
        root = frobenius_root_principal(h)
        assert bracket_power(root, p).contains(h)


def test_root_is_minimal_over_constructed_memberships(rng):
    # whenever h is a combination sum g_i^p * mu_i, the root must land in (g_i)
    for _ in range(12):
        p = rng.choice((2, 3))
        r = ring(p, "xy")
        gens = random_ideal_gens(rng, r, 2, 2)
        target = p * max(g.degree() for g in gens) + rng.randint(0, 2)
        h = Polynomial.zero(r)
        for g in gens:
            shift = target - p * g.degree()
            mus = monomials_of_degree(r, shift)
            h = h + g**p * Polynomial.monomial(r, rng.choice(mus))
        if not h:
            continue
        assert Ideal(r, gens).contains_ideal(frobenius_root_principal(h))


def test_root_ideal_sums_generator_roots(rng):
    for _ in range(6):
        p = rng.choice((2, 3))
        r = ring(p, "xy")
        gens = random_ideal_gens(rng, r, 3, 4)
        expected = Ideal.zero(r)
        for g in gens:
            expected = expected + frobenius_root_principal(g)
        assert frobenius_root_ideal(Ideal(r, gens)) == expected


# ---------------------------------------------------------------------------
# complete intersections


def test_ci_derived_fields():
    ci = squares_ci(3)
    assert ci.c == 1
    assert ci.n == 2
    assert ci.degrees == (4,)
    assert ci.d == 4
    assert ci.f == ci.forms[0]

    r4 = ring(5, "xyzw")
    forms = (poly("x*z - y*w", r4), poly("x^2 + y^2 + z^2 + w^2", r4))
    ci2 = CompleteIntersection(r4, forms)
    assert ci2.c == 2
    assert ci2.n == 3
    assert ci2.degrees == (2, 2)
    assert ci2.d == 4
    assert ci2.f == forms[0] * forms[1]


def test_ci_is_frozen():
    ci = squares_ci(3)
    with pytest.raises(dataclasses.FrozenInstanceError):
        ci.d = 5


def test_ci_accepts_linear_pair():
    ci = CompleteIntersection(R3, (poly("x", R3), poly("y", R3)))
    assert ci.degrees == (1, 1)


def test_ci_rejects_overlapping_monomial_forms():
    # V(xy, yz) contains the plane y = 0, so codimension drops
    with pytest.raises(RegularSequenceError, match="not a regular sequence"):
        CompleteIntersection(R3, (poly("x*y", R3), poly("y*z", R3)))


def test_ci_rejects_repeated_form():
    g = poly("x^2 + y*z", R3)
    with pytest.raises(RegularSequenceError):
        CompleteIntersection(R3, (g, g))


def test_ci_rejects_non_artinian_full_length():
    with pytest.raises(RegularSequenceError, match="not Artinian"):
        CompleteIntersection(
            ring(5, "xy"), (poly("x^2", R5_2), poly("x*y", R5_2))
        )


def test_ci_shape_validation():
    with pytest.raises(RegularSequenceError, match="need between 1 and 3 forms"):
        CompleteIntersection(R3, tuple(poly(v, R3) for v in "xyz") * 2)
    with pytest.raises(RegularSequenceError, match="positive degree"):
        CompleteIntersection(R3, (Polynomial.zero(R3),))
    with pytest.raises(RegularSequenceError, match="positive degree"):
        CompleteIntersection(R3, (Polynomial.constant(R3, 2),))
    with pytest.raises(RegularSequenceError, match="positive degree"):
        CompleteIntersection(R3, (poly("x + x^2", R3),))
    with pytest.raises(RingMismatch):
        CompleteIntersection(R3, (poly("x", R5_2),))


def test_artinian_ci_accepted_with_matching_histogram():
    # (x^2, y^3): quotient dimensions 1, 2, 2, 1 over degrees 0..3
    ci = CompleteIntersection(R5_2, (poly("x^2", R5_2), poly("y^3", R5_2)))
    assert ci.d == 5


# ---------------------------------------------------------------------------
# tau


def test_tau_of_squares_quartic_p3():
    result = compute_tau(squares_ci(3))
    assert result.tau == maximal_ideal(R3)
    assert not result.is_unit
    assert result.is_m_primary
    assert result.ell == 0


def test_tau_of_monomial_hypersurface_is_unit():
    result = compute_tau(hypersurface(5, "x*y", names="xy"))
    assert result.is_unit
    assert not result.is_m_primary
    assert result.ell is None


def test_tau_of_diagonal_cubic_two_vars_p2():
    result = compute_tau(diagonal_ci(2, 3, names="xy"))
    assert result.tau == maximal_ideal(ring(2, "xy"))
    assert result.ell == 0


def test_tau_result_is_unhashable():
    with pytest.raises(TypeError):
        hash(compute_tau(squares_ci(3)))


def test_tau_minimality_probe():
    # dropping any root generator either leaves tau unchanged or breaks the
    # bracket containment that defines it
    for ci in (squares_ci(3), diagonal_ci(2, 3, names="xy"), diagonal_ci(5, 3)):
        p = ci.ring.p
        fpow = ci.f ** (p - 1)
        root = frobenius_root_principal(fpow)
        tau = Ideal(ci.ring, ci.forms + root.generators)
        for i in range(len(root.generators)):
            kept = root.generators[:i] + root.generators[i + 1 :]
            smaller = Ideal(ci.ring, ci.forms + kept)
            if smaller == tau:
                continue
            assert not bracket_power(smaller, p).contains(fpow)


# ---------------------------------------------------------------------------
# F-purity at m


def test_fedder_examples():
    assert fedder_test_at_m(hypersurface(5, "x*y", names="xy"))
    assert not fedder_test_at_m(squares_ci(3))
    # diagonal cubic in three variables: the p = 7 multinomial coefficient
    # 6!/(2!2!2!) = 90 = 6 mod 7 survives, the p = 5 expansion has no
    # monomial with all exponents below 5
    assert fedder_test_at_m(diagonal_ci(7, 3))
    assert not fedder_test_at_m(diagonal_ci(5, 3))


def test_fedder_agrees_with_tau_being_unit():
    family = [
        squares_ci(3),
        squares_ci(5),
        hypersurface(5, "x*y", names="xy"),
        diagonal_ci(5, 3),
        diagonal_ci(7, 3),
        diagonal_ci(2, 3, names="xy"),
    ]
    for ci in family:
        assert fedder_test_at_m(ci) == compute_tau(ci).is_unit


def test_classification_three_ways():
    assert isolated_non_f_pure_test(diagonal_ci(7, 3)) is TauClass.EVERYWHERE_F_PURE
    assert (
        isolated_non_f_pure_test(squares_ci(3))
        is TauClass.ISOLATED_NON_F_PURE_POINT
    )
    flat = hypersurface(3, "x^2*y^2", names="xy")
    assert (
        isolated_non_f_pure_test(flat)
        is TauClass.NON_F_PURE_LOCUS_POSITIVE_DIMENSIONAL
    )
    result = compute_tau(flat)
    assert result.tau == Ideal(flat.ring, (poly("x*y", flat.ring),))
    assert classify_tau(result) is TauClass.NON_F_PURE_LOCUS_POSITIVE_DIMENSIONAL
