"""Exact sparse polynomial and rational-function arithmetic over Q.

Polynomials live in Q[a1..an] where a1..an are the integral weight-lattice
generators of the acting torus; everything is exact (Fraction coefficients,
no floats anywhere).  Three value types:

  Polynomial       sparse exponent-tuple -> Fraction map, immutable
  LinearForm       integer vector c with sum(c_l * a_l), sign-normalized so
                   that the first nonzero coefficient is positive (a chosen
                   representative of a weight defined up to sign)
  RationalFunction numerator / denominator pair; simplification cancels
                   rational content and linear factors only, which covers
                   every denominator produced by fixed-point localization

Divisibility by a linear form is decided by eliminating the form's pivot
variable and testing for the zero polynomial; quotients come from synthetic
division.  All moduli appearing in congruence checks are linear forms or
products of pairwise coprime linear forms, handled factor by factor.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Polynomial:
    """Immutable sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms=None, _internal: bool = False):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        self.num_vars = num_vars
        if terms is None:
            self._terms = {}
        elif _internal:
            self._terms = terms
        else:
            clean = {}
            for e, c in dict(terms).items():
                e = tuple(int(x) for x in e)
                if len(e) != num_vars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for {num_vars} variables")
                c = Fraction(c)
                if c:
                    clean[e] = clean.get(e, _ZERO) + c
            self._terms = {e: c for e, c in clean.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars, {}, _internal=True)

    @classmethod
    def constant(cls, num_vars: int, value) -> "Polynomial":
        c = Fraction(value)
        if not c:
            return cls.zero(num_vars)
        return cls(num_vars, {(0,) * num_vars: c}, _internal=True)

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        """The generator a_{index} with 1-based index."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        e = [0] * num_vars
        e[index - 1] = 1
        return cls(num_vars, {tuple(e): _ONE}, _internal=True)

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        """Max total degree; None is the marker for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.num_vars, _ZERO)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(
            self.num_vars, {e: c for e, c in self._terms.items() if sum(e) == d}, _internal=True
        )

    def homogeneous_parts(self) -> dict[int, "Polynomial"]:
        out: dict[int, dict] = {}
        for e, c in self._terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.num_vars, t, _internal=True) for d, t in sorted(out.items())}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"mismatched num_vars: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return Polynomial(self.num_vars, kernels.add_terms(self._terms, other._terms), _internal=True)

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return Polynomial(self.num_vars, kernels.sub_terms(self._terms, other._terms), _internal=True)

    def __neg__(self):
        return Polynomial(self.num_vars, kernels.neg_terms(self._terms), _internal=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return Polynomial(self.num_vars, kernels.mul_terms(self._terms, other._terms), _internal=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.num_vars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other)!r}")

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.num_vars, kernels.scale_terms(self._terms, Fraction(c)), _internal=True)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def sq(self) -> "Polynomial":
        """The ring homomorphism a_i -> a_i^2 (exponent doubling)."""
        return Polynomial(self.num_vars, kernels.sq_terms(self._terms), _internal=True)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.num_vars:
            raise ValueError("point length must equal num_vars")
        return kernels.eval_terms(self._terms, tuple(Fraction(x) for x in point))

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.num_vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self._terms.items())))

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"Polynomial({self.num_vars}, {render_poly(self)!r})"


def _term_sort_key(e):
    return (sum(e), e)


def render_poly(p: Polynomial) -> str:
    """Canonical text form: terms by ascending (degree, exponents), 'a1' style."""
    if p.is_zero():
        return "0"
    pieces = []
    for e in sorted(p._terms, key=_term_sort_key):
        c = p._terms[e]
        mono = "*".join(
            f"a{i + 1}" if x == 1 else f"a{i + 1}^{x}" for i, x in enumerate(e) if x
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += sign + body
    return out


_TOKEN = re.compile(r"\s*([+-]|a\d+|\^\d+|\*|\d+/\d+|\d+)")


def parse_poly(text: str, num_vars: int) -> Polynomial:
    """Parse the canonical rendering back into a Polynomial."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial at: {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    terms: dict[tuple, Fraction] = {}
    i = 0

    def flush(sign, coeff, exps):
        e = tuple(exps)
        c = sign * coeff
        if c:
            terms[e] = terms.get(e, _ZERO) + c

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ValueError("dangling sign in polynomial text")
        coeff = _ONE
        exps = [0] * num_vars
        expect_factor = True
        while i < len(tokens):
            t = tokens[i]
            if t in "+-":
                break
            if t == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError(f"missing '*' before {t!r}")
            if t.startswith("a"):
                idx = int(t[1:])
                if not 1 <= idx <= num_vars:
                    raise ValueError(f"variable {t} out of range for {num_vars} variables")
                power = 1
                if i + 1 < len(tokens) and tokens[i + 1].startswith("^"):
                    power = int(tokens[i + 1][1:])
                    i += 1
                exps[idx - 1] += power
            else:
                coeff *= Fraction(t)
            i += 1
            expect_factor = False
        flush(sign, coeff, exps)
    clean = {e: c for e, c in terms.items() if c}
    return Polynomial(num_vars, clean, _internal=True)


class LinearForm:
    """Integer linear form sum(c_l * a_l), sign-normalized, not all zero.

    The stored representative of the weight class [w] (defined up to sign)
    has its highest-index nonzero coefficient positive, so a_j - a_i with
    j > i is kept as written.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = tuple(int(x) for x in coeffs)
        if not any(c):
            raise ValueError("linear form must be nonzero")
        for x in reversed(c):
            if x != 0:
                if x < 0:
                    c = tuple(-y for y in c)
                break
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)

    @classmethod
    def var(cls, num_vars: int, index: int) -> "LinearForm":
        e = [0] * num_vars
        e[index - 1] = 1
        return cls(e)

    @classmethod
    def diff(cls, num_vars: int, j: int, i: int) -> "LinearForm":
        """a_j - a_i."""
        e = [0] * num_vars
        e[j - 1] += 1
        e[i - 1] -= 1
        return cls(e)

    @classmethod
    def plus(cls, num_vars: int, j: int, i: int) -> "LinearForm":
        """a_j + a_i."""
        e = [0] * num_vars
        e[j - 1] += 1
        e[i - 1] += 1
        return cls(e)

    def to_polynomial(self) -> Polynomial:
        terms = {}
        for l, c in enumerate(self.coeffs):
            if c:
                e = [0] * len(self.coeffs)
                e[l] = 1
                terms[tuple(e)] = Fraction(c)
        return Polynomial(len(self.coeffs), terms, _internal=True)

    def independent_from(self, other: "LinearForm") -> bool:
        """True unless the two forms are proportional (rank-2 check)."""
        a, b = self.coeffs, other.coeffs
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if a[i] * b[j] - a[j] * b[i]:
                    return True
        return False

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __str__(self):
        return render_poly(self.to_polynomial())

    def __repr__(self):
        return f"LinearForm({self.coeffs})"


# -- spec operations ---------------------------------------------------------


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def divisible_by_linear(p: Polynomial, w: LinearForm) -> bool:
    """True iff p vanishes after eliminating w's pivot variable."""
    if p.num_vars != w.num_vars:
        raise ValueError("num_vars mismatch between polynomial and form")
    if p.is_zero():
        return True
    return not kernels.substitute_linear(p._terms, w.coeffs)


def quotient_by_linear(p: Polynomial, w: LinearForm) -> Polynomial:
    """Exact quotient q with p = q*w; raises if w does not divide p."""
    if p.num_vars != w.num_vars:
        raise ValueError("num_vars mismatch between polynomial and form")
    q, r = kernels.divmod_linear(p._terms, w.coeffs)
    if r:
        raise ArithmeticError(f"{p} is not divisible by {w}")
    return Polynomial(p.num_vars, q, _internal=True)


def quotient_by_linear_forms(p: Polynomial, forms: Iterable[LinearForm]) -> Polynomial:
    for w in forms:
        p = quotient_by_linear(p, w)
    return p


def substitute_linear_zero(p: Polynomial, w: LinearForm) -> Polynomial:
    """The image of p under the elimination substitution for w (reduction mod w)."""
    return Polynomial(p.num_vars, kernels.substitute_linear(p._terms, w.coeffs), _internal=True)


def congruent_mod_linear(a: Polynomial, b: Polynomial, w: LinearForm) -> bool:
    return divisible_by_linear(a - b, w)


def sq_map(p: Polynomial) -> Polynomial:
    return p.sq()


def evaluate(p: Polynomial, point: Sequence) -> Fraction:
    return p.evaluate(point)


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient a/b for a single divisor; raises if not divisible."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = kernels.divmod_poly(a._terms, b._terms)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return Polynomial(a.num_vars, q, _internal=True)


# -- rational functions ------------------------------------------------------


def _candidate_forms(num_vars: int):
    """All linear forms occurring as localization denominators: a_i, a_j +- a_i."""
    for i in range(1, num_vars + 1):
        yield LinearForm.var(num_vars, i)
    for i in range(1, num_vars + 1):
        for j in range(i + 1, num_vars + 1):
            yield LinearForm.diff(num_vars, j, i)
            yield LinearForm.plus(num_vars, j, i)


class RationalFunction:
    """Quotient of polynomials with linear-factor-only simplification.

    The denominator may be carried in factored form (a multiset of linear
    forms and a rational scale), which is how the localization sums build
    their terms; the expanded denominator is available on demand.
    """

    __slots__ = ("num", "_factors", "_scale")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *,
                 factors: Sequence[tuple[LinearForm, int]] | None = None, scale=1):
        self.num = num
        sc = Fraction(scale)
        if den is not None:
            if factors is not None:
                raise ValueError("pass either an expanded or a factored denominator")
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            factors, sc2 = _extract_linear_factors(den)
            sc = sc * sc2
        if not sc:
            raise ZeroDivisionError("zero denominator scale")
        fs: dict[LinearForm, int] = {}
        for w, m in factors or ():
            if m:
                fs[w] = fs.get(w, 0) + m
        self._factors = tuple(sorted(fs.items(), key=lambda t: t[0].coeffs))
        self._scale = sc

    @property
    def denominator(self) -> Polynomial:
        den = Polynomial.constant(self.num.num_vars, self._scale)
        for w, m in self._factors:
            wp = w.to_polynomial()
            for _ in range(m):
                den = den * wp
        return den

    @property
    def numerator(self) -> Polynomial:
        return self.num

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.num_vars != other.num.num_vars:
            raise ValueError("num_vars mismatch")
        fa, fb = dict(self._factors), dict(other._factors)
        common = {w: max(fa.get(w, 0), fb.get(w, 0)) for w in set(fa) | set(fb)}
        num_a = self.num.scale(1 / self._scale)
        num_b = other.num.scale(1 / other._scale)
        for w, m in common.items():
            ka = m - fa.get(w, 0)
            kb = m - fb.get(w, 0)
            wp = w.to_polynomial()
            for _ in range(ka):
                num_a = num_a * wp
            for _ in range(kb):
                num_b = num_b * wp
        out = RationalFunction(num_a + num_b, factors=list(common.items()))
        return out.simplified()

    def simplified(self) -> "RationalFunction":
        """Cancel every factored linear form that divides the numerator."""
        num = self.num
        if num.is_zero():
            return RationalFunction(Polynomial.zero(num.num_vars), factors=())
        left: list[tuple[LinearForm, int]] = []
        for w, m in self._factors:
            while m and divisible_by_linear(num, w):
                num = quotient_by_linear(num, w)
                m -= 1
            if m:
                left.append((w, m))
        return RationalFunction(num, factors=left, scale=self._scale)

    def evaluate(self, point: Sequence) -> Fraction:
        den = Fraction(self._scale)
        for w, m in self._factors:
            v = sum(Fraction(c) * Fraction(x) for c, x in zip(w.coeffs, point))
            den *= v**m
        if not den:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(point) / den

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self.num * other.denominator) == (other.num * self.denominator)

    def __str__(self):
        return f"({self.num}) / ({self.denominator})"


def _extract_linear_factors(den: Polynomial):
    """Split a denominator into linear-form factors and a rational scale.

    Factors are searched in the finite catalogue of localization forms and
    in the polynomial's own linear part; whatever remains must be constant
    (localization denominators are always products of linear forms).
    """
    factors: list[tuple[LinearForm, int]] = []
    for w in _candidate_forms(den.num_vars):
        m = 0
        while divisible_by_linear(den, w):
            den = quotient_by_linear(den, w)
            m += 1
        if m:
            factors.append((w, m))
        if den.degree() in (None, 0):
            break
    if den.degree() == 1:
        # leftover linear factor outside the catalogue
        lead = {e: c for e, c in den.terms.items() if sum(e) == 1}
        ks = sorted(lead)
        coeffs = [0] * den.num_vars
        denom_lcm = 1
        for e in ks:
            denom_lcm = denom_lcm * lead[e].denominator // _gcd(denom_lcm, lead[e].denominator)
        for e in ks:
            idx = e.index(1)
            coeffs[idx] = int(lead[e] * denom_lcm)
        w = LinearForm(coeffs)
        if divisible_by_linear(den, w):
            den = quotient_by_linear(den, w)
            factors.append((w, 1))
    if den.degree() not in (None, 0):
        raise ArithmeticError(
            "denominator is not a product of linear forms times a constant: " + str(den)
        )
    return factors, den.constant_term()


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) or 1


def ratfn_sum(terms: Sequence[RationalFunction]) -> RationalFunction:
    """Exact sum with incremental cancellation after each addition."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum: num_vars unknown")
    acc = terms[0].simplified()
    for t in terms[1:]:
        acc = acc + t
    return acc


def ratfn_to_poly(r: RationalFunction) -> Polynomial:
    """The polynomial value of r; raises if r is not a polynomial."""
    s = r.simplified()
    if not s._factors:
        return s.num.scale(1 / s._scale)
    num = s.num
    for w, m in s._factors:
        for _ in range(m):
            if not divisible_by_linear(num, w):
                raise ArithmeticError(f"rational function is not a polynomial: {r}")
            num = quotient_by_linear(num, w)
    return num.scale(1 / s._scale)


def prod_polys(ps: Iterable[Polynomial], num_vars: int) -> Polynomial:
    out = Polynomial.constant(num_vars, 1)
    for p in ps:
        out = out * p
    return out
