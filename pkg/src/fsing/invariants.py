"""Numeric invariants and degree bounds for graded complete intersections.

The central quantity is M_q(I), the largest ell with (m^[q] : I) contained in
m^[q] + m^ell.  For m-primary I it stabilizes: (n+1)q - M_q(I) equals
reg(S/I) + (n+1) once q is large enough, and `stabilization_check` certifies
that identity at a concrete q, which is how "q large enough" is made
effective throughout.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass

from .errors import ResourceLimit
from .frobenius import (
    CompleteIntersection,
    TauClass,
    TauResult,
    classify_tau,
    compute_tau,
    fedder_test_at_m,
    m_bracket,
)
from .groebner import Ideal
from .ring import Polynomial, is_power_of, mono_degree, monomials_of_degree

DEFAULT_MAX_Q_EXPONENT = 6


def regularity_artinian(I: Ideal) -> int:
    """Top degree in which S/I is nonzero, for m-primary proper I."""
    if I.is_unit():
        raise ValueError("regularity of the zero ring is undefined")
    if not I.is_zero_dimensional():
        raise ValueError("regularity is only computed for Artinian quotients")
    return max(mono_degree(m) for m in I.standard_monomials())


def power_containment(I: Ideal, ell: int) -> bool:
    """Whether m^ell is contained in I; checks the degree-ell monomials."""
    if ell < 0:
        raise ValueError("negative power")
    return all(
        I.contains(Polynomial.monomial(I.ring, m))
        for m in monomials_of_degree(I.ring, ell)
    )


def m_q(I: Ideal, q: int) -> int:
    """M_q(I) = max{ell : (m^[q] : I) inside m^[q] + m^ell}.

    Membership in m^[q] + m^ell is monomial-by-monomial, so the maximum is
    the least degree of a reduced-basis generator of the colon that has a
    monomial with all exponents below q; 0 when the colon is the unit ideal.
    """
    if I.is_zero():
        raise ValueError("M_q of the zero ideal is undefined")
    if I.is_unit():
        raise ValueError("M_q needs a proper ideal")
    if not is_power_of(q, I.ring.p):
        raise ValueError(f"{q} is not a power of {I.ring.p}")
    colon = m_bracket(I.ring, q).colon(I)
    best = None
    for g in colon.groebner():
        if any(max(m) < q for m in g.terms):
            deg = g.degree()
            if best is None or deg < best:
                best = deg
    if best is None:
        # the colon always contains the socle generator (x_0...x_n)^(q-1)
        raise RuntimeError("internal: colon collapsed to the bracket power")
    return best


def stabilization_check(I: Ideal, q: int) -> bool:
    """Certify (n+1)q - M_q(I) = reg(S/I) + (n+1) at this q."""
    nv = I.ring.nvars
    return nv * q - m_q(I, q) == regularity_artinian(I) + nv


def find_stable_q(I: Ideal, max_q: int | None = None) -> int:
    """Smallest q = p^e, e >= 1, certified stable; capped to fail loudly."""
    p = I.ring.p
    cap = max_q if max_q is not None else p**DEFAULT_MAX_Q_EXPONENT
    q = p
    while q <= cap:
        if stabilization_check(I, q):
            return q
        q *= p
    raise ResourceLimit(f"no stabilization certificate for any q <= {cap}")


def a_invariant(ci: CompleteIntersection) -> int:
    """Top degree of the top local cohomology of R: d - (n+1)."""
    return ci.d - ci.ring.nvars


def thmA_bound(ci: CompleteIntersection, tau_result: TauResult) -> int:
    """a(R) - reg(S/tau): Frobenius is injective on the top local cohomology
    strictly below this degree, with a guaranteed kernel element at it."""
    if tau_result.is_unit or not tau_result.is_m_primary:
        raise ValueError("the injectivity bound needs m-primary proper tau")
    return a_invariant(ci) - tau_result.ell


def _check_bound_args(n: int, c: int, d: int):
    if not 1 <= c <= n + 1:
        raise ValueError(f"need 1 <= c <= n+1, got c={c}, n={n}")
    if d < c:
        raise ValueError(f"total degree {d} below form count {c}")


def cor_bound(n: int, c: int, d: int) -> int:
    """Uniform injectivity bound -(n+1-c)*d, independent of tau."""
    _check_bound_args(n, c, d)
    return -(n + 1 - c) * d


def thmB_threshold(n: int, c: int, d: int) -> int:
    """Primes >= (n+1-c)*(d-c) give Frobenius injectivity in negative
    degrees for isolated singularities."""
    _check_bound_args(n, c, d)
    return (n + 1 - c) * (d - c)


def hilbert_series_ci(degrees, aux_degrees, n: int) -> list[int]:
    """Coefficients of prod(1-t^e) over both degree lists divided by
    (1-t)^(n+1), which is a polynomial exactly when the lists together have
    n+1 entries: each factor cancels to 1 + t + ... + t^(e-1)."""
    all_degrees = list(degrees) + list(aux_degrees)
    if len(all_degrees) != n + 1:
        raise ValueError(
            f"series with {len(all_degrees)} factors over {n + 1} variables "
            "is not a polynomial"
        )
    coeffs = [1]
    for e in all_degrees:
        if e < 1:
            raise ValueError(f"factor degree {e} must be positive")
        box = [1] * e
        coeffs = [
            sum(coeffs[i] * box[s - i] for i in range(len(coeffs)) if 0 <= s - i < e)
            for s in range(len(coeffs) + e - 1)
        ]
    return coeffs


def jacobian_ideal(ci: CompleteIntersection) -> Ideal:
    """Ideal of c x c minors of the Jacobian matrix (df_j/dx_i)."""
    c = ci.c
    if c > 4:
        raise ValueError("minor expansion is limited to c <= 4")
    nv = ci.ring.nvars
    partials = [
        [g.partial_derivative(i) for g in ci.forms] for i in range(nv)
    ]
    minors = []
    for rows in itertools.combinations(range(nv), c):
        minors.append(_det([partials[i] for i in rows]))
    return Ideal(ci.ring, minors)


def _det(matrix) -> Polynomial:
    if len(matrix) == 1:
        return matrix[0][0]
    ring = matrix[0][0].ring
    total = Polynomial.zero(ring)
    for i, row in enumerate(matrix):
        rest = [r[1:] for j, r in enumerate(matrix) if j != i]
        term = row[0] * _det(rest)
        total = total - term if i % 2 else total + term
    return total


def isolated_singularity_test(ci: CompleteIntersection) -> bool:
    """Whether the Jacobian ideal plus the forms cuts out at most the origin."""
    critical = jacobian_ideal(ci) + Ideal(ci.ring, ci.forms)
    if critical.is_unit():
        return True
    return critical.is_zero_dimensional()


@dataclass(frozen=True)
class AnalysisReport:
    """Every invariant the library computes for one complete intersection.

    The three optional fields are present exactly when tau is m-primary and
    proper; reg_s_mod_tau and ell always agree, they are kept separate
    because they are computed along different routes.
    """

    a_invariant: int
    reg_s_mod_tau: int | None
    ell: int | None
    thmA_bound: int | None
    cor_bound: int
    thmB_threshold: int
    fpure_at_m: bool
    tau_class: TauClass
    isolated_singularity: bool

    def __post_init__(self):
        if self.reg_s_mod_tau is not None and self.ell is not None:
            assert self.reg_s_mod_tau == self.ell
        if self.thmA_bound is not None:
            assert self.thmA_bound >= self.cor_bound

    def to_json_dict(self) -> dict:
        return {
            "a_invariant": self.a_invariant,
            "reg_s_mod_tau": self.reg_s_mod_tau,
            "ell": self.ell,
            "thmA_bound": self.thmA_bound,
            "cor_bound": self.cor_bound,
            "thmB_threshold": self.thmB_threshold,
            "fpure_at_m": self.fpure_at_m,
            "tau_class": self.tau_class.value,
            "isolated_singularity": self.isolated_singularity,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "AnalysisReport":
        fields = dict(data)
        fields["tau_class"] = TauClass(fields["tau_class"])
        return cls(**fields)


def analyze(ci: CompleteIntersection) -> AnalysisReport:
    """Run every test and bound on one complete intersection."""
    tau_result = compute_tau(ci)
    fpure = fedder_test_at_m(ci)
    # Fedder's test and the unit-tau verdict are independent computations
    # of the same fact
    assert fpure == tau_result.is_unit
    applicable = tau_result.is_m_primary
    return AnalysisReport(
        a_invariant=a_invariant(ci),
        reg_s_mod_tau=regularity_artinian(tau_result.tau) if applicable else None,
        ell=tau_result.ell,
        thmA_bound=thmA_bound(ci, tau_result) if applicable else None,
        cor_bound=cor_bound(ci.ring.n, ci.c, ci.d),
        thmB_threshold=thmB_threshold(ci.ring.n, ci.c, ci.d),
        fpure_at_m=fpure,
        tau_class=classify_tau(tau_result),
        isolated_singularity=isolated_singularity_test(ci),
    )
