"""Exact arithmetic layer: prime fields, monomials as exponent tuples, sparse
multivariate polynomials over F_p, and the polynomial text format.

Monomial orders are realized as sort keys on exponent tuples.  Everything in
the package uses graded reverse lexicographic order with the first declared
variable largest; `grevlex_key` is that order's key.
"""

from __future__ import annotations

import math

from dataclasses import dataclass

from .errors import ParseError, RingMismatch

# Exponents are kept within machine-int range so downstream consumers can
# pack them into fixed-width arrays.
EXPONENT_CAP = 2**31 - 1


def is_prime(p: int) -> bool:
    """Trial division, adequate for word-sized characteristics."""
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def is_power_of(value: int, base: int) -> bool:
    """True when value = base^e for some e >= 0."""
    if value < 1:
        return False
    while value % base == 0:
        value //= base
    return value == 1


@dataclass(frozen=True)
class PrimeField:
    """F_p with canonical representatives in [0, p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, -1, self.p)


@dataclass(frozen=True)
class RingDescriptor:
    """Ambient graded polynomial ring: characteristic p and variable names.

    Variables are listed largest-first for the monomial order; with names
    ("x", "y", "z") the order satisfies x > y > z.
    """

    p: int
    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if not self.variables:
            raise ValueError("at least one variable is required")
        seen = set()
        for name in self.variables:
            if not name or not name[0].isalpha() or not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def n(self) -> int:
        # projective convention: nvars = n + 1
        return len(self.variables) - 1

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def variable_index(self, name: str) -> int:
        return self.variables.index(name)

    def __repr__(self):
        return f"F_{self.p}[{', '.join(self.variables)}]"


# ---------------------------------------------------------------------------
# monomials: plain exponent tuples

Monomial = tuple[int, ...]


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(m: Monomial):
    """Sort key for grevlex with the first variable largest.

    Compare total degree first; ties are broken by the reversed, negated
    exponent tuple, so the monomial with the smaller last exponent wins.
    """
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(ring: RingDescriptor, s: int) -> list[Monomial]:
    """All monomials of total degree s, largest first; empty for s < 0."""
    if s < 0:
        return []
    out = list(_compositions(s, ring.nvars))
    out.sort(key=grevlex_key, reverse=True)
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial over F_p keyed by exponent tuples.

    Stored coefficients are always nonzero canonical representatives, so two
    polynomials are equal exactly when their term dicts are.
    """

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: RingDescriptor, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Monomial, int] = {}
        nvars, p = ring.nvars, ring.p
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"exponent tuple {mono} has wrong length")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = (acc.get(mono, 0) + coeff) % p
        self.ring = ring
        self.terms = {m: c for m, c in acc.items() if c}
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, ring, clean: dict) -> "Polynomial":
        # internal: clean must already be reduced mod p with zeros pruned
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.terms = clean
        poly._sorted = None
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring, c: int) -> "Polynomial":
        c %= ring.p
        return cls._raw(ring, {(0,) * ring.nvars: c} if c else {})

    @classmethod
    def variable(cls, ring, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(ring.nvars))
        return cls._raw(ring, {exps: 1})

    @classmethod
    def monomial(cls, ring, mono: Monomial, c: int = 1) -> "Polynomial":
        return cls(ring, {tuple(mono): c})

    # -- queries ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(map(sum, self.terms))

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        buckets: dict[int, dict] = {}
        for m, c in self.terms.items():
            buckets.setdefault(sum(m), {})[m] = c
        return {s: Polynomial._raw(self.ring, d) for s, d in sorted(buckets.items())}

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def sorted_terms(self):
        """Terms as ((monomial, coeff), ...), largest monomial first."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)
            )
        return self._sorted

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms()[0][0]

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        if self.degree() + other.degree() > EXPONENT_CAP:
            raise OverflowError("product degree exceeds the exponent cap")
        p = self.ring.p
        acc: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mm = mono_mul(ma, mb)
                acc[mm] = acc.get(mm, 0) + ca * cb
        return Polynomial._raw(self.ring, {m: v % p for m, v in acc.items() if v % p})

    __rmul__ = __mul__

    def scaled(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if c == 0:
            return Polynomial.zero(self.ring)
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: (v * c) % p for m, v in self.terms.items()})

    def frobenius_power(self, q: int) -> "Polynomial":
        """self^q for q a power of p: scale every exponent, keep coefficients.

        Coefficientwise this uses c^q = c on F_p.
        """
        if not is_power_of(q, self.ring.p):
            raise ValueError(f"{q} is not a power of {self.ring.p}")
        if self.terms and self.degree() * q > EXPONENT_CAP:
            raise OverflowError("Frobenius power exceeds the exponent cap")
        return Polynomial._raw(
            self.ring, {tuple(e * q for e in m): c for m, c in self.terms.items()}
        )

    def _pow_binary(self, e: int) -> "Polynomial":
        result = Polynomial.constant(self.ring, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("negative exponent")
        if e == 0:
            return Polynomial.constant(self.ring, 1)
        # peel off the p-part of the exponent; those factors are term maps
        p = self.ring.p
        rest, k = e, 1
        while rest % p == 0:
            rest //= p
            k *= p
        base = self._pow_binary(rest)
        return base.frobenius_power(k) if k > 1 else base

    def partial_derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < self.ring.nvars:
            raise ValueError(f"no variable with index {index}")
        p = self.ring.p
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            e = m[index]
            coeff = (c * e) % p
            if e and coeff:
                lowered = m[:index] + (e - 1,) + m[index + 1 :]
                out[lowered] = coeff
        return Polynomial._raw(self.ring, out)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            if coeff != 1 or not any(mono):
                factors.append(str(coeff))
            for name, e in zip(self.ring.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


# ---------------------------------------------------------------------------
# parsing
#
# expr    := [sign] product { (+|-) product }
# product := power { * power }
# power   := atom [ ^ INT ]
# atom    := INT | NAME | ( expr )
#
# Implicit multiplication is a syntax error; exponents are non-negative
# integer literals at most 2^31 - 1.


def _tokenize(text: str):
    tokens = []
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < size and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < size and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}", position=i)
    tokens.append(("end", None, size))
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        poly = self.expression()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(
                f"unexpected {value!r} at position {pos} (missing operator?)", position=pos
            )
        return poly

    def expression(self):
        negate = False
        if self.peek()[0] in "+-":
            negate = self.advance()[0] == "-"
        result = self.product()
        if negate:
            result = -result
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            term = self.product()
            result = result - term if op == "-" else result + term
        return result

    def product(self):
        result = self.power()
        while self.peek()[0] == "*":
            self.advance()
            result = result * self.power()
        return result

    def power(self):
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.advance()
        kind, value, pos = self.peek()
        if kind != "int":
            raise ParseError(f"expected integer exponent at position {pos}", position=pos)
        self.advance()
        if value > EXPONENT_CAP:
            raise ParseError(f"exponent overflow at position {pos}", position=pos)
        try:
            return base**value
        except OverflowError:
            raise ParseError(f"exponent overflow at position {pos}", position=pos) from None

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return Polynomial.constant(self.ring, value)
        if kind == "name":
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r} at position {pos}", position=pos)
            return Polynomial.variable(self.ring, self.index[value])
        if kind == "(":
            inner = self.expression()
            kind2, _, pos2 = self.advance()
            if kind2 != ")":
                raise ParseError(f"expected ')' at position {pos2}", position=pos2)
            return inner
        if kind == "end":
            raise ParseError(f"unexpected end of input at position {pos}", position=pos)
        raise ParseError(f"unexpected {value!r} at position {pos}", position=pos)


def parse_polynomial(text: str, ring: RingDescriptor) -> Polynomial:
    """Parse the polynomial grammar above into a canonical Polynomial."""
    try:
        return _Parser(_tokenize(text), ring).parse()
    except OverflowError:
        # a product of in-range powers can still blow the cap
        raise ParseError("exponent overflow") from None
