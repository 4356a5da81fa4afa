import pytest

from oracles import oracle_m_q, random_m_primary_gens

from cases import diagonal_ci, hypersurface, poly, ring, squares_ci

from fsing.errors import ResourceLimit
from fsing.frobenius import CompleteIntersection, TauClass, compute_tau, m_bracket
from fsing.groebner import Ideal, maximal_ideal
from fsing.invariants import (
    AnalysisReport,
    a_invariant,
    analyze,
    cor_bound,
    find_stable_q,
    hilbert_series_ci,
    isolated_singularity_test,
    jacobian_ideal,
    m_q,
    power_containment,
    regularity_artinian,
    stabilization_check,
    thmA_bound,
    thmB_threshold,
)
from fsing.ring import Polynomial, RingDescriptor, monomials_of_degree

R3 = ring(3)


def m_power(r, k):
    return Ideal(
        r, tuple(Polynomial.monomial(r, m) for m in monomials_of_degree(r, k))
    )


def two_var_powers(p, a, b):
    r = ring(p, "xy")
    return r, Ideal(r, (poly(f"x^{a}", r), poly(f"y^{b}", r)))


# ---------------------------------------------------------------------------
# regularity and power containment


def test_regularity_examples():
    assert regularity_artinian(maximal_ideal(R3)) == 0
    for a, b in ((2, 3), (3, 3), (2, 5)):
        _, I = two_var_powers(5, a, b)
        assert regularity_artinian(I) == a + b - 2
    assert regularity_artinian(Ideal(R3, tuple(poly(f"{v}^3", R3) for v in "xyz"))) == 6


def test_regularity_errors():
    with pytest.raises(ValueError, match="zero ring"):
        regularity_artinian(Ideal(R3, (Polynomial.constant(R3, 1),)))
    with pytest.raises(ValueError, match="Artinian"):
        regularity_artinian(Ideal(R3, (poly("x", R3),)))


def test_power_containment_examples():
    assert power_containment(m_power(R3, 2), 2)
    r, I = two_var_powers(5, 2, 3)
    assert not power_containment(I, 3)  # x*y^2 is missed
    tau = compute_tau(squares_ci(3)).tau
    assert power_containment(tau, 1)
    assert not power_containment(tau, 0)
    with pytest.raises(ValueError):
        power_containment(I, -1)


def test_regularity_against_containment(rng):
    for _ in range(6):
        p = rng.choice((2, 3, 5))
        r = ring(p, "xy")
        I = Ideal(r, random_m_primary_gens(rng, r, 4))
        reg = regularity_artinian(I)
        first = next(k for k in range(reg + 2) if power_containment(I, k))
        assert first == reg + 1


# ---------------------------------------------------------------------------
# M_q


def test_m_q_examples():
    r5, I5 = two_var_powers(5, 2, 3)
    assert m_q(I5, 5) == 2 * 5 - (2 + 3)
    r2, I2 = two_var_powers(2, 2, 3)
    assert m_q(I2, 2) == 0  # q <= min(a, b): the colon is everything
    assert m_q(I2, 4) == 2 * 4 - (2 + 3)
    assert m_q(maximal_ideal(R3), 3) == 6  # socle generator (xyz)^2


def test_m_q_closed_form_two_variable_powers():
    # three regimes: 0 for q <= a, q - a in between, 2q - (a+b) past b
    for a, b in ((2, 3), (3, 3), (2, 5)):
        for p in (2, 3, 5):
            q = p
            while q <= p**2:
                r, I = two_var_powers(p, a, b)
                if q <= a:
                    expected = 0
                elif q <= b:
                    expected = q - a
                else:
                    expected = 2 * q - (a + b)
                assert m_q(I, q) == expected, (a, b, p, q)
                q *= p


def test_m_q_validation():
    with pytest.raises(ValueError, match="zero ideal"):
        m_q(Ideal.zero(R3), 3)
    with pytest.raises(ValueError, match="proper"):
        m_q(Ideal(R3, (Polynomial.constant(R3, 1),)), 3)
    with pytest.raises(ValueError, match="power"):
        m_q(maximal_ideal(R3), 6)


def test_m_q_matches_oracle(rng):
    for _ in range(6):
        p = rng.choice((2, 3, 5))
        nv = rng.choice((2, 3))
        r = ring(p, "xyz"[:nv])
        gens = random_m_primary_gens(rng, r, 4)
        q = p if (nv == 3 or p == 5) else p ** rng.choice((1, 2))
        assert m_q(Ideal(r, gens), q) == oracle_m_q(gens, q, r)


# ---------------------------------------------------------------------------
# stabilization


def test_stabilization_examples():
    assert stabilization_check(maximal_ideal(R3), 3)
    assert stabilization_check(maximal_ideal(R3), 9)
    _, I5 = two_var_powers(5, 2, 3)
    assert stabilization_check(I5, 5)
    _, I2 = two_var_powers(2, 2, 3)
    assert not stabilization_check(I2, 2)
    assert stabilization_check(I2, 4)


def test_find_stable_q():
    tau = compute_tau(squares_ci(3)).tau
    assert find_stable_q(tau) == 3
    _, I2 = two_var_powers(2, 2, 3)
    assert find_stable_q(I2) == 4
    with pytest.raises(ResourceLimit, match="no stabilization certificate"):
        find_stable_q(I2, max_q=2)


def test_containment_iff_m_q_bound(rng):
    # for stable q: (n+1)q - M_q(I) <= n + ell exactly when m^ell lies in I
    for _ in range(6):
        p = rng.choice((2, 3, 5))
        r = ring(p, "xy")
        I = Ideal(r, random_m_primary_gens(rng, r, 4))
        qs = [find_stable_q(I)]
        qs.append(qs[0] * p)
        reg = regularity_artinian(I)
        values = {q: 2 * q - m_q(I, q) for q in qs}
        for ell in range(reg + 3):
            bound_holds = all(values[q] <= 1 + ell for q in qs)
            assert bound_holds == power_containment(I, ell)


def test_colon_reversal_iff_containment(rng):
    # (m^[q] : I) inside (m^[q] : m^ell) exactly when m^ell lies in I
    for _ in range(4):
        p = rng.choice((2, 3))
        r = ring(p, "xy")
        I = Ideal(r, random_m_primary_gens(rng, r, 3))
        qs = [find_stable_q(I)]
        qs.append(qs[0] * p)
        reg = regularity_artinian(I)
        for ell in range(1, reg + 3):
            reversed_all = all(
                m_bracket(r, q)
                .colon(m_power(r, ell))
                .contains_ideal(m_bracket(r, q).colon(I))
                for q in qs
            )
            assert reversed_all == power_containment(I, ell)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("nv", [2, 3])
def test_bracket_colon_power_identity(p, nv):
    # (m^[q] : m^ell) = m^[q] + m^((n+1)q - (n + ell)) for ell <= q
    r = ring(p, "xyz"[:nv])
    qs = [p]
    if (nv == 2 and p**2 <= 25) or (nv == 3 and p <= 3):
        qs.append(p**2)
    for q in qs:
        for ell in range(1, min(q, 6) + 1):
            lhs = m_bracket(r, q).colon(m_power(r, ell))
            rhs = m_bracket(r, q) + m_power(r, nv * q - (nv - 1 + ell))
            assert lhs == rhs, (p, nv, q, ell)


# ---------------------------------------------------------------------------
# bounds


def test_a_invariant_examples():
    assert a_invariant(squares_ci(3)) == 1
    assert a_invariant(diagonal_ci(5, 3)) == 0
    r4 = ring(5, "xyzw")
    ci = CompleteIntersection(r4, (poly("x^2", r4), poly("y^3", r4)))
    assert a_invariant(ci) == 1


def test_thmA_bound_examples():
    ci = squares_ci(3)
    assert thmA_bound(ci, compute_tau(ci)) == 1
    fermat2 = diagonal_ci(2, 3)
    result = compute_tau(fermat2)
    assert result.is_m_primary
    assert thmA_bound(fermat2, result) == 0 - result.ell


def test_thmA_bound_rejects_wrong_tau_shape():
    flat = hypersurface(3, "x^2*y^2", names="xy")
    with pytest.raises(ValueError, match="m-primary"):
        thmA_bound(flat, compute_tau(flat))
    pure = hypersurface(5, "x*y", names="xy")
    with pytest.raises(ValueError, match="m-primary"):
        thmA_bound(pure, compute_tau(pure))


def test_closed_form_bounds():
    assert cor_bound(2, 1, 4) == -8
    assert thmB_threshold(2, 1, 4) == 6
    assert cor_bound(1, 2, 2) == 0
    assert thmB_threshold(1, 2, 2) == 0
    assert thmB_threshold(2, 1, 3) == 4


def test_bound_argument_validation():
    for bad in ((2, 0, 4), (2, 4, 4), (2, 1, 0)):
        with pytest.raises(ValueError):
            cor_bound(*bad)
        with pytest.raises(ValueError):
            thmB_threshold(*bad)


def test_thmA_dominates_cor_bound():
    family = [
        squares_ci(3),
        squares_ci(5),
        squares_ci(7),
        diagonal_ci(2, 3, names="xy"),
        diagonal_ci(2, 3),
        diagonal_ci(3, 4),
        diagonal_ci(2, 5),
    ]
    for ci in family:
        result = compute_tau(ci)
        assert result.is_m_primary
        assert thmA_bound(ci, result) >= cor_bound(ci.ring.n, ci.c, ci.d)


# ---------------------------------------------------------------------------
# Hilbert series


def test_hilbert_series_examples():
    assert hilbert_series_ci([2], [2], 1) == [1, 2, 1]
    assert len(hilbert_series_ci([4], [3, 3], 2)) == 8  # degree 7
    with pytest.raises(ValueError, match="factors"):
        hilbert_series_ci([2], [2], 2)
    with pytest.raises(ValueError, match="positive"):
        hilbert_series_ci([0], [2], 1)


def test_hilbert_series_matches_artinian_data():
    for a, b in ((2, 3), (3, 3), (2, 5)):
        series = hilbert_series_ci([a], [b], 1)
        assert len(series) - 1 == a + b - 2
        assert series == series[::-1]  # complete intersections are Gorenstein
        assert sum(series) == a * b
        _, I = two_var_powers(5, a, b)
        assert regularity_artinian(I) == len(series) - 1


# ---------------------------------------------------------------------------
# Jacobian and isolated singularities


def test_jacobian_examples():
    fermat = diagonal_ci(5, 3)
    r5 = ring(5)
    assert jacobian_ideal(fermat) == Ideal(
        r5, tuple(poly(f"3*{v}^2", r5) for v in "xyz")
    )
    assert isolated_singularity_test(fermat)
    assert not isolated_singularity_test(squares_ci(3))


def test_jacobian_codimension_two_snapshot():
    r4 = ring(5, "xyzw")
    ci = CompleteIntersection(
        r4, (poly("x*z - y*w", r4), poly("x^2 + y^2 + z^2 + w^2", r4))
    )
    minors = jacobian_ideal(ci)
    assert len(minors.generators) == 6  # all 2x2 row pairs of a 4x2 matrix
    assert isolated_singularity_test(ci) is False


def test_jacobian_minor_limit():
    r5 = ring(3, "abcde")
    ci = CompleteIntersection(r5, tuple(poly(v, r5) for v in "abcde"))
    with pytest.raises(ValueError, match="c <= 4"):
        jacobian_ideal(ci)


# ---------------------------------------------------------------------------
# the aggregate report


SQUARES_P3_REPORT = {
    "a_invariant": 1,
    "reg_s_mod_tau": 0,
    "ell": 0,
    "thmA_bound": 1,
    "cor_bound": -8,
    "thmB_threshold": 6,
    "fpure_at_m": False,
    "tau_class": "isolated_non_f_pure_point",
    "isolated_singularity": False,
}

CODIM_TWO_P5_REPORT = {
    "a_invariant": 0,
    "reg_s_mod_tau": None,
    "ell": None,
    "thmA_bound": None,
    "cor_bound": -8,
    "thmB_threshold": 4,
    "fpure_at_m": True,
    "tau_class": "everywhere_f_pure",
    "isolated_singularity": False,
}


def test_analyze_squares_quartic_p3():
    assert analyze(squares_ci(3)).to_json_dict() == SQUARES_P3_REPORT


def test_analyze_codimension_two_snapshot():
    r4 = ring(5, "xyzw")
    ci = CompleteIntersection(
        r4, (poly("x*z - y*w", r4), poly("x^2 + y^2 + z^2 + w^2", r4))
    )
    assert analyze(ci).to_json_dict() == CODIM_TWO_P5_REPORT


def test_report_json_roundtrip():
    report = analyze(squares_ci(3))
    assert AnalysisReport.from_json_dict(report.to_json_dict()) == report
    assert list(report.to_json_dict()) == list(SQUARES_P3_REPORT)


def test_report_cross_field_checks():
    good = dict(SQUARES_P3_REPORT, tau_class=TauClass.ISOLATED_NON_F_PURE_POINT)
    AnalysisReport(**good)
    with pytest.raises(AssertionError):
        AnalysisReport(**dict(good, reg_s_mod_tau=2))
    with pytest.raises(AssertionError):
        AnalysisReport(**dict(good, thmA_bound=-9))
