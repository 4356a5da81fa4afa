"""Top local cohomology of a graded complete intersection, made concrete.

A class is a fraction [g/x^q] with x^q = (x_0...x_n)^q, subject to g times
each defining form landing in the bracket power m^[q]; the class vanishes
exactly when g itself lies in m^[q], and Frobenius sends [g/x^q] to
[f^(p-1)g^p/x^(pq)].  Since m^[q] is a monomial ideal, all membership here
is per-monomial divisibility, never a basis computation.

Graded pieces are enumerated as nullspaces of the annihilation constraints
over F_p, which is what lets injectivity of Frobenius be verified degree by
degree by plain rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimit
from .frobenius import CompleteIntersection, TauResult, m_bracket
from .invariants import a_invariant, find_stable_q, jacobian_ideal
from .linalg import as_matrix, rank
from .ring import (
    EXPONENT_CAP,
    Monomial,
    Polynomial,
    is_power_of,
    monomials_of_degree,
)

DEFAULT_MAX_COLUMNS = 20000


def _in_m_bracket(poly: Polynomial, q: int) -> bool:
    # membership in the monomial ideal (x_0^q, ..., x_n^q)
    return all(max(m) >= q for m in poly.terms)


@dataclass(frozen=True)
class CohClass:
    """A local cohomology class [numerator / (x_0...x_n)^q].

    degree is the internal degree of the class: deg(numerator) - (n+1)q + d.
    """

    numerator: Polynomial
    q: int
    ci: CompleteIntersection
    degree: int

    def to_json_dict(self) -> dict:
        return {"numerator": str(self.numerator), "q": self.q, "degree": self.degree}


def make_class(g: Polynomial, q: int, ci: CompleteIntersection) -> CohClass:
    """Validated class [g/x^q]; g must be nonzero homogeneous and must
    annihilate every defining form modulo m^[q]."""
    if not g:
        raise ValueError("zero numerator; represent the zero class by a "
                         "numerator inside the bracket power")
    if g.ring != ci.ring:
        raise ValueError(f"numerator lives in {g.ring}, not {ci.ring}")
    if not g.is_homogeneous():
        raise ValueError(f"numerator {g} is not homogeneous")
    if not is_power_of(q, ci.ring.p):
        raise ValueError(f"{q} is not a power of {ci.ring.p}")
    for j, form in enumerate(ci.forms):
        if not _in_m_bracket(form * g, q):
            raise ValueError(
                f"annihilation failure: form {j + 1} times the numerator is "
                f"not in the bracket power with q = {q}"
            )
    degree = g.degree() - ci.ring.nvars * q + ci.d
    return CohClass(numerator=g, q=q, ci=ci, degree=degree)


def is_zero(alpha: CohClass) -> bool:
    return _in_m_bracket(alpha.numerator, alpha.q)


def rescale(alpha: CohClass, q_new: int) -> CohClass:
    """The same class written over the denominator x^q_new."""
    if q_new < alpha.q:
        raise ValueError("cannot rescale to a smaller denominator")
    if q_new == alpha.q:
        return alpha
    ring = alpha.ci.ring
    shift = Polynomial.monomial(ring, (q_new - alpha.q,) * ring.nvars)
    out = make_class(alpha.numerator * shift, q_new, alpha.ci)
    assert out.degree == alpha.degree
    return out


def classes_equal(alpha: CohClass, beta: CohClass) -> bool:
    if alpha.ci != beta.ci:
        raise ValueError("classes from different complete intersections")
    q = max(alpha.q, beta.q)
    diff = rescale(alpha, q).numerator - rescale(beta, q).numerator
    return _in_m_bracket(diff, q)


def frobenius_action(alpha: CohClass) -> CohClass:
    """[g/x^q] -> [f^(p-1) g^p / x^(pq)], the natural Frobenius on classes."""
    ci = alpha.ci
    p = ci.ring.p
    if alpha.q * p > EXPONENT_CAP:
        raise OverflowError("denominator exponent exceeds the cap")
    fpow = ci.f ** (p - 1)
    image = make_class(fpow * alpha.numerator**p, alpha.q * p, ci)
    assert image.degree == p * alpha.degree
    return image


def kernel_witness(
    ci: CompleteIntersection, tau_result: TauResult, max_q: int | None = None
) -> CohClass:
    """A nonzero class of degree a(R) - ell killed by Frobenius.

    Works at a q certified stable for tau and picks a least-degree generator
    of (m^[q] : tau) that survives outside m^[q]; monomials inside m^[q] are
    stripped since they stay in the colon without affecting the class.
    """
    if tau_result.is_unit or not tau_result.is_m_primary:
        raise ValueError("kernel witness needs m-primary proper tau")
    ring = ci.ring
    q = find_stable_q(tau_result.tau, max_q)
    colon = m_bracket(ring, q).colon(tau_result.tau)
    pick = None
    for g in colon.groebner():
        if any(max(m) < q for m in g.terms):
            if pick is None or g.degree() < pick.degree():
                pick = g
    if pick is None:
        raise RuntimeError("internal: colon collapsed to the bracket power")
    numerator = Polynomial._raw(
        ring, {m: c for m, c in pick.terms.items() if max(m) < q}
    )
    witness = make_class(numerator, q, ci)
    assert not is_zero(witness)
    assert witness.degree == a_invariant(ci) - tau_result.ell
    assert is_zero(frobenius_action(witness))
    return witness


@dataclass(frozen=True)
class GradedPieceBasis:
    """Basis of the degree-t piece of the top local cohomology.

    Coordinates are the degree-s monomials with all exponents below q, where
    s = t - d + (n+1)q; vectors span the solutions of the annihilation
    constraints in those coordinates.
    """

    degree: int
    q: int
    coordinates: tuple[Monomial, ...]
    vectors: tuple[tuple[int, ...], ...]
    ci: CompleteIntersection

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def polynomial(self, vector) -> Polynomial:
        ring = self.ci.ring
        return Polynomial._raw(
            ring, {m: int(c) for m, c in zip(self.coordinates, vector) if c}
        )

    def class_for(self, vector) -> CohClass:
        return make_class(self.polynomial(vector), self.q, self.ci)


def _admissible(q: int, t: int, ci: CompleteIntersection) -> bool:
    # numerators must have non-negative degree, and every class of internal
    # degree t must be writable over the denominator x^q
    nv = ci.ring.nvars
    return nv * q + t - ci.d >= 0 and q >= ci.d - t - ci.ring.n


def graded_piece_basis(
    ci: CompleteIntersection,
    t: int,
    q: int | None = None,
    max_cols: int = DEFAULT_MAX_COLUMNS,
) -> GradedPieceBasis:
    """Solve the annihilation constraints for internal degree t.

    q defaults to the smallest admissible power of p; any admissible power
    gives the same dimension.
    """
    ring = ci.ring
    p = ring.p
    if q is None:
        q = 1
        while not _admissible(q, t, ci):
            q *= p
            if q > EXPONENT_CAP:
                raise OverflowError("no admissible q below the exponent cap")
    else:
        if not is_power_of(q, p):
            raise ValueError(f"{q} is not a power of {p}")
        if not _admissible(q, t, ci):
            raise ValueError(f"q = {q} cannot represent degree {t}")
    s = t - ci.d + ring.nvars * q
    coords = [m for m in monomials_of_degree(ring, s) if max(m) < q]
    if len(coords) > max_cols:
        raise ResourceLimit(
            f"{len(coords)} coordinate monomials exceed the cap {max_cols}"
        )
    if not coords:
        return GradedPieceBasis(t, q, (), (), ci)
    index = {m: i for i, m in enumerate(coords)}
    rows: dict[tuple, list] = {}
    for j, form in enumerate(ci.forms):
        for mu in coords:
            shifted = form * Polynomial.monomial(ring, mu)
            for m, c in shifted.terms.items():
                if max(m) < q:
                    row = rows.get((j, m))
                    if row is None:
                        row = rows[(j, m)] = [0] * len(coords)
                    row[index[mu]] = c
    kernel = _nullspace_vectors(list(rows.values()), len(coords), p)
    return GradedPieceBasis(t, q, tuple(coords), kernel, ci)


def _nullspace_vectors(rows, ncols, p):
    from .linalg import nullspace

    return tuple(tuple(int(x) for x in v) for v in nullspace(as_matrix(rows, ncols), p))


@dataclass(frozen=True)
class InjectivityResult:
    degree: int
    dim_source: int
    dim_kernel: int

    @property
    def injective(self) -> bool:
        return self.dim_kernel == 0

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dim_source": self.dim_source,
            "dim_kernel": self.dim_kernel,
        }


def verify_injectivity(
    ci: CompleteIntersection, t: int, max_cols: int = DEFAULT_MAX_COLUMNS
) -> InjectivityResult:
    """Kernel dimension of Frobenius on the degree-t piece, by brute force.

    Images f^(p-1)g^p are reduced modulo m^[pq]; the kernel of the resulting
    coefficient matrix is exactly the kernel of Frobenius on the piece.
    """
    basis = graded_piece_basis(ci, t, max_cols=max_cols)
    if basis.dim == 0:
        return InjectivityResult(degree=t, dim_source=0, dim_kernel=0)
    ring = ci.ring
    p = ring.p
    target_q = basis.q * p
    fpow = ci.f ** (p - 1)
    columns: dict[Monomial, int] = {}
    sparse_rows = []
    for v in basis.vectors:
        image = fpow * basis.polynomial(v) ** p
        entries = {}
        for m, c in image.terms.items():
            if max(m) < target_q:
                entries[columns.setdefault(m, len(columns))] = c
        sparse_rows.append(entries)
        if len(columns) > max_cols:
            raise ResourceLimit(
                f"{len(columns)} image monomials exceed the cap {max_cols}"
            )
    dense = []
    for entries in sparse_rows:
        row = [0] * len(columns)
        for col, c in entries.items():
            row[col] = c
        dense.append(row)
    matrix_rank = rank(as_matrix(dense, len(columns)), p)
    return InjectivityResult(
        degree=t, dim_source=basis.dim, dim_kernel=basis.dim - matrix_rank
    )


def minimal_t_vector(g: Polynomial, q: int, ci: CompleteIntersection):
    """Componentwise-minimal exponent vectors t in {0..p-1}^c with
    f_1^t_1 * ... * f_c^t_c * g^p inside m^[q].

    The feasible set is upward closed, so its minimal elements form an
    antichain; returns (lexicographically least minimal vector, the full
    antichain sorted).  Fails when even (p-1, ..., p-1) is infeasible.
    """
    ring = ci.ring
    p = ring.p
    if not is_power_of(q, p):
        raise ValueError(f"{q} is not a power of {p}")
    gp = g**p
    powers = [[Polynomial.constant(ring, 1)] for _ in ci.forms]
    for j, form in enumerate(ci.forms):
        for _ in range(p - 1):
            powers[j].append(powers[j][-1] * form)

    def product(vector):
        acc = gp
        for j, e in enumerate(vector):
            if e:
                acc = acc * powers[j][e]
        return acc

    minimal: list[tuple[int, ...]] = []
    candidates = sorted(
        ((sum(v), v) for v in _exponent_box(p, ci.c)), key=lambda sv: sv
    )
    for _, v in candidates:
        if any(all(a <= b for a, b in zip(m, v)) for m in minimal):
            continue
        if _in_m_bracket(product(v), q):
            minimal.append(v)
    if not minimal:
        raise ValueError(
            "no feasible exponent vector: f^(p-1)*g^p is outside the bracket power"
        )
    return min(minimal), tuple(sorted(minimal))


def _exponent_box(p, c):
    if c == 0:
        yield ()
        return
    for head in range(p):
        for tail in _exponent_box(p, c - 1):
            yield (head,) + tail


def jacobian_annihilation_check(g: Polynomial, q: int, ci: CompleteIntersection) -> bool:
    """Check f^(t') * g^p * minor inside m^[q] for every Jacobian minor,
    where t' lowers the least minimal exponent vector by one at its first
    nonzero coordinate (that coordinate's form plays the distinguished role;
    the implied reordering is exactly this pivot choice)."""
    lex_least, _ = minimal_t_vector(g, q, ci)
    pivot = next((i for i, e in enumerate(lex_least) if e), None)
    if pivot is None:
        raise ValueError("minimal exponent vector is zero; nothing to lower")
    lowered = list(lex_least)
    lowered[pivot] -= 1
    base = g ** ci.ring.p
    for j, e in enumerate(lowered):
        for _ in range(e):
            base = base * ci.forms[j]
    return all(
        _in_m_bracket(base * minor, q) for minor in jacobian_ideal(ci).generators
    )
