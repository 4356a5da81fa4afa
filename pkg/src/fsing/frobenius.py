"""Characteristic-p ideal operations: bracket powers, Frobenius roots of
principal ideals, the minimal ideal tau attached to a graded complete
intersection, and the F-purity test at the irrelevant maximal ideal.

tau is the smallest ideal containing the defining forms whose p-th bracket
power contains (f_1*...*f_c)^(p-1); the quotient is F-pure at the maximal
ideal exactly when tau is the unit ideal, and the locus where F-purity fails
is cut out by tau otherwise.
"""

from __future__ import annotations

import enum

from dataclasses import dataclass, field

from .errors import RegularSequenceError, RingMismatch
from .groebner import Ideal
from .linalg import as_matrix, rank
from .ring import (
    Monomial,
    Polynomial,
    RingDescriptor,
    is_power_of,
    mono_degree,
    monomials_of_degree,
)


def m_bracket(ring: RingDescriptor, q: int) -> Ideal:
    """The bracket power (x_0^q, ..., x_n^q) of the maximal ideal."""
    if not is_power_of(q, ring.p):
        raise ValueError(f"{q} is not a power of {ring.p}")
    gens = []
    for i in range(ring.nvars):
        exps = tuple(q if j == i else 0 for j in range(ring.nvars))
        gens.append(Polynomial._raw(ring, {exps: 1}))
    return Ideal(ring, gens)


def bracket_power(I: Ideal, q: int) -> Ideal:
    """I^[q]: the ideal generated by g^q over generators g of I.

    Because q-th power is a ring endomorphism in characteristic p, the result
    does not depend on the chosen generating set.
    """
    if not is_power_of(q, I.ring.p):
        raise ValueError(f"{q} is not a power of {I.ring.p}")
    return Ideal(I.ring, tuple(g**q for g in I.generators))


def frobenius_root_principal(h: Polynomial) -> Ideal:
    """The smallest ideal K with h in K^[p], for homogeneous h.

    Write each exponent vector as p*floor + eps with eps in {0..p-1}^(n+1)
    and group terms by eps; then h = sum over eps of (g_eps)^p * x^eps, and
    the g_eps generate K.  Coefficients carry over unchanged since c^p = c
    on F_p.
    """
    ring = h.ring
    p = ring.p
    groups: dict[Monomial, dict] = {}
    for m, c in h.terms.items():
        eps = tuple(e % p for e in m)
        # (eps, floor) determines m, so no accumulation is needed
        groups.setdefault(eps, {})[tuple(e // p for e in m)] = c
    return Ideal(ring, tuple(Polynomial._raw(ring, d) for d in groups.values()))


def frobenius_root_ideal(I: Ideal) -> Ideal:
    """Smallest K with I contained in K^[p].  Auxiliary; tau only needs the
    principal case.  Equals the sum of the roots of any generating set."""
    out = Ideal.zero(I.ring)
    for g in I.generators:
        out = out + frobenius_root_principal(g)
    return out


class TauClass(enum.Enum):
    EVERYWHERE_F_PURE = "everywhere_f_pure"
    ISOLATED_NON_F_PURE_POINT = "isolated_non_f_pure_point"
    NON_F_PURE_LOCUS_POSITIVE_DIMENSIONAL = "non_f_pure_locus_positive_dimensional"


@dataclass(frozen=True)
class CompleteIntersection:
    """A graded complete intersection R = S/(f_1, ..., f_c) over F_p.

    Construction validates the shape (1 <= c <= n+1, homogeneous forms of
    positive degree) and that the forms are a regular sequence, the latter by
    comparing quotient dimensions degree by degree against the expected
    series prod(1 - t^(d_j)) / (1 - t)^(n+1) up to degree d = sum d_j.
    Derived fields: degrees d_j, their sum d, and the product form f.
    """

    ring: RingDescriptor
    forms: tuple[Polynomial, ...]
    degrees: tuple[int, ...] = field(init=False)
    d: int = field(init=False)
    f: Polynomial = field(init=False)

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        nv = self.ring.nvars
        if not 1 <= len(forms) <= nv:
            raise RegularSequenceError(
                f"need between 1 and {nv} forms, got {len(forms)}"
            )
        for g in forms:
            if g.ring != self.ring:
                raise RingMismatch(f"{g.ring} vs {self.ring}")
            if not g or not g.is_homogeneous() or g.degree() < 1:
                raise RegularSequenceError(
                    f"form {g} is not homogeneous of positive degree"
                )
        degrees = tuple(g.degree() for g in forms)
        product = forms[0]
        for g in forms[1:]:
            product = product * g
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "d", sum(degrees))
        object.__setattr__(self, "f", product)
        _check_regular_sequence(self.ring, forms, degrees)

    @property
    def c(self) -> int:
        return len(self.forms)

    @property
    def n(self) -> int:
        return self.ring.n


def _expected_quotient_dims(degrees, nvars: int, top: int) -> list[int]:
    # coefficients of prod(1 - t^d) / (1 - t)^nvars, truncated at degree top
    coeffs = [1] + [0] * top
    for d in degrees:
        coeffs = [c - (coeffs[s - d] if s >= d else 0) for s, c in enumerate(coeffs)]
    for _ in range(nvars):
        total = 0
        for s in range(top + 1):
            total += coeffs[s]
            coeffs[s] = total
    return coeffs


def _check_regular_sequence(ring, forms, degrees):
    nv = ring.nvars
    top = sum(degrees)
    expected = _expected_quotient_dims(degrees, nv, top)
    if len(forms) == nv:
        # expected-Artinian case: count standard monomials degree by degree
        quotient = Ideal(ring, forms)
        if not quotient.is_zero_dimensional():
            raise RegularSequenceError(
                "not a regular sequence: the quotient is not Artinian"
            )
        actual = [0] * (top + 1)
        for m in quotient.standard_monomials():
            s = mono_degree(m)
            if s > top or actual[s] >= expected[s]:
                raise RegularSequenceError(_hilbert_mismatch(s, expected, actual))
            actual[s] += 1
        for s in range(top + 1):
            if actual[s] != expected[s]:
                raise RegularSequenceError(_hilbert_mismatch(s, expected, actual))
        return
    # general case: quotient dimension in each degree by linear algebra
    for s in range(top + 1):
        basis = monomials_of_degree(ring, s)
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for g, dg in zip(forms, degrees):
            for mu in monomials_of_degree(ring, s - dg):
                shifted = g * Polynomial.monomial(ring, mu)
                row = [0] * len(basis)
                for m, c in shifted.terms.items():
                    row[index[m]] = c
                rows.append(row)
        dim = len(basis) - rank(as_matrix(rows, len(basis)), ring.p)
        if dim != expected[s]:
            raise RegularSequenceError(
                f"not a regular sequence: quotient dimension {dim} in degree {s}, "
                f"expected {expected[s]}"
            )


def _hilbert_mismatch(s, expected, actual):
    return (
        f"not a regular sequence: quotient dimension {actual[s] + 1} or more in "
        f"degree {s}, expected {expected[s]}"
    )


@dataclass(frozen=True)
class TauResult:
    """tau together with its coarse classification.

    ell is the top degree in which S/tau is nonzero, present exactly when tau
    is m-primary and proper.
    """

    tau: Ideal
    is_unit: bool
    is_m_primary: bool
    ell: int | None

    __hash__ = None


def compute_tau(ci: CompleteIntersection) -> TauResult:
    """The smallest ideal containing the forms whose p-th bracket power
    contains f^(p-1): the defining forms plus the Frobenius root of f^(p-1).
    """
    p = ci.ring.p
    fpow = ci.f ** (p - 1)
    root = frobenius_root_principal(fpow)
    tau = Ideal(ci.ring, ci.forms + root.generators)
    unit = tau.is_unit()
    m_primary = False if unit else tau.is_zero_dimensional()
    ell = None
    if m_primary:
        ell = max(mono_degree(m) for m in tau.standard_monomials())
    # re-check the two defining conditions on the constructed ideal
    assert all(tau.contains(g) for g in ci.forms)
    assert bracket_power(tau, p).contains(fpow)
    return TauResult(tau=tau, is_unit=unit, is_m_primary=m_primary, ell=ell)


def fedder_test_at_m(ci: CompleteIntersection) -> bool:
    """F-purity at the maximal ideal: f^(p-1) outside (x_0^p, ..., x_n^p)."""
    p = ci.ring.p
    return not m_bracket(ci.ring, p).contains(ci.f ** (p - 1))


def classify_tau(result: TauResult) -> TauClass:
    if result.is_unit:
        return TauClass.EVERYWHERE_F_PURE
    if result.is_m_primary:
        return TauClass.ISOLATED_NON_F_PURE_POINT
    return TauClass.NON_F_PURE_LOCUS_POSITIVE_DIMENSIONAL


def isolated_non_f_pure_test(ci: CompleteIntersection) -> TauClass:
    """Locate the non-F-pure locus: empty, the origin only, or bigger."""
    return classify_tau(compute_tau(ci))
