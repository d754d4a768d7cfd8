"""The Grassmannian families and their fixed-point data.

Nine families are supported, all acted on by the torus T^n:

  C(k,n)              complex Grassmannian of k-planes in C^n
  R / OR (K,N)        real / oriented K-planes in R^N, split by parity into
                      even-even  G_{2k}(R^{2n}),   even-odd G_{2k}(R^{2n+1}),
                      odd-odd    G_{2k+1}(R^{2n+1}), odd-even G_{2k+1}(R^{2n+2})

A SpaceId records the family plus (k, n) in the torus-rank normalization;
the CLI grammar uses the actual subspace/ambient dimensions K, N.  Fixed
points are k-element subsets S of {1..n} (bitsets), doubled into S_+/S_-
for the even-dimensional oriented families and turned into circles for the
odd-dimensional families.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from .polyring import LinearForm
from .report import Report


class Family(Enum):
    COMPLEX = "C"
    REAL_EVEN_EVEN = "R_ee"
    REAL_EVEN_ODD = "R_eo"
    REAL_ODD_ODD = "R_oo"
    REAL_ODD_EVEN = "R_oe"
    ORIENTED_EVEN_EVEN = "OR_ee"
    ORIENTED_EVEN_ODD = "OR_eo"
    ORIENTED_ODD_ODD = "OR_oo"
    ORIENTED_ODD_EVEN = "OR_oe"


REAL_FAMILIES = {
    Family.REAL_EVEN_EVEN,
    Family.REAL_EVEN_ODD,
    Family.REAL_ODD_ODD,
    Family.REAL_ODD_EVEN,
}
ORIENTED_FAMILIES = {
    Family.ORIENTED_EVEN_EVEN,
    Family.ORIENTED_EVEN_ODD,
    Family.ORIENTED_ODD_ODD,
    Family.ORIENTED_ODD_EVEN,
}
# families whose fixed points split into +/- twins
SIGNED_FAMILIES = {
    Family.ORIENTED_EVEN_EVEN,
    Family.ORIENTED_EVEN_ODD,
    Family.ORIENTED_ODD_ODD,
}
# odd-dimensional families: fixed circles, classes carry a theta part
CIRCLE_FAMILIES = {Family.REAL_ODD_EVEN, Family.ORIENTED_ODD_EVEN}

_ORIENTED_PARTNER = {
    Family.REAL_EVEN_EVEN: Family.ORIENTED_EVEN_EVEN,
    Family.REAL_EVEN_ODD: Family.ORIENTED_EVEN_ODD,
    Family.REAL_ODD_ODD: Family.ORIENTED_ODD_ODD,
    Family.REAL_ODD_EVEN: Family.ORIENTED_ODD_EVEN,
}


@dataclass(frozen=True)
class SpaceId:
    family: Family
    k: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.k < 0 or self.k > self.n:
            raise ValueError(f"need 0 <= k <= n with n >= 1, got k={self.k}, n={self.n}")
        if self.n > 62:
            raise ValueError("n is limited to 62 (subset bitsets)")

    # -- structure ----------------------------------------------------------

    @property
    def is_complex(self) -> bool:
        return self.family is Family.COMPLEX

    @property
    def is_oriented(self) -> bool:
        return self.family in ORIENTED_FAMILIES

    @property
    def has_sign_pairs(self) -> bool:
        return self.family in SIGNED_FAMILIES

    @property
    def has_theta(self) -> bool:
        return self.family in CIRCLE_FAMILIES

    @property
    def is_orientable(self) -> bool:
        return self.family not in (Family.REAL_EVEN_ODD, Family.REAL_ODD_ODD)

    @property
    def subspace_dim(self) -> int:
        f = self.family
        if f is Family.COMPLEX:
            return self.k
        if f in (Family.REAL_EVEN_EVEN, Family.REAL_EVEN_ODD,
                 Family.ORIENTED_EVEN_EVEN, Family.ORIENTED_EVEN_ODD):
            return 2 * self.k
        return 2 * self.k + 1

    @property
    def ambient_dim(self) -> int:
        f = self.family
        if f is Family.COMPLEX:
            return self.n
        if f in (Family.REAL_EVEN_EVEN, Family.ORIENTED_EVEN_EVEN):
            return 2 * self.n
        if f in (Family.REAL_ODD_EVEN, Family.ORIENTED_ODD_EVEN):
            return 2 * self.n + 2
        return 2 * self.n + 1

    def oriented_partner(self) -> "SpaceId":
        if self.is_oriented:
            return self
        if self.is_complex:
            raise ValueError("complex Grassmannians have no oriented partner")
        return SpaceId(_ORIENTED_PARTNER[self.family], self.k, self.n)

    def real_partner(self) -> "SpaceId":
        if self.family in REAL_FAMILIES:
            return self
        if self.is_complex:
            raise ValueError("complex Grassmannians have no real partner")
        inv = {v: r for r, v in _ORIENTED_PARTNER.items()}
        return SpaceId(inv[self.family], self.k, self.n)

    def perp_dual(self) -> "SpaceId":
        """The perpendicular-complement identification of the two odd-K types."""
        if self.family is Family.REAL_EVEN_ODD:
            return SpaceId(Family.REAL_ODD_ODD, self.n - self.k, self.n)
        if self.family is Family.REAL_ODD_ODD:
            return SpaceId(Family.REAL_EVEN_ODD, self.n - self.k, self.n)
        if self.family is Family.ORIENTED_EVEN_ODD:
            return SpaceId(Family.ORIENTED_ODD_ODD, self.n - self.k, self.n)
        if self.family is Family.ORIENTED_ODD_ODD:
            return SpaceId(Family.ORIENTED_EVEN_ODD, self.n - self.k, self.n)
        raise ValueError(f"{self} has no perpendicular twin in another family")

    def label(self) -> str:
        if self.is_complex:
            return f"C({self.k},{self.n})"
        prefix = "OR" if self.is_oriented else "R"
        return f"{prefix}({self.subspace_dim},{self.ambient_dim})"

    def __str__(self):
        return self.label()


_SPACE_RE = re.compile(r"^\s*(C|R|OR)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_space(text: str) -> SpaceId:
    """Parse 'C(k,n)', 'R(K,N)' or 'OR(K,N)' (capital K,N = actual dimensions)."""
    m = _SPACE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse space {text!r}; expected C(k,n), R(K,N) or OR(K,N)")
    tag, a, b = m.group(1), int(m.group(2)), int(m.group(3))
    if tag == "C":
        return SpaceId(Family.COMPLEX, a, b)
    if a > b:
        raise ValueError(f"subspace dimension {a} exceeds ambient dimension {b}")
    oriented = tag == "OR"
    if a % 2 == 0 and b % 2 == 0:
        fam = Family.ORIENTED_EVEN_EVEN if oriented else Family.REAL_EVEN_EVEN
        return SpaceId(fam, a // 2, b // 2)
    if a % 2 == 0 and b % 2 == 1:
        fam = Family.ORIENTED_EVEN_ODD if oriented else Family.REAL_EVEN_ODD
        return SpaceId(fam, a // 2, (b - 1) // 2)
    if a % 2 == 1 and b % 2 == 1:
        fam = Family.ORIENTED_ODD_ODD if oriented else Family.REAL_ODD_ODD
        return SpaceId(fam, (a - 1) // 2, (b - 1) // 2)
    fam = Family.ORIENTED_ODD_EVEN if oriented else Family.REAL_ODD_EVEN
    return SpaceId(fam, (a - 1) // 2, (b - 2) // 2)


@dataclass(frozen=True)
class FixedVertex:
    """A fixed point (or circle): subset bitset plus a decoration.

    decoration: '' isolated point, '+'/'-' oriented twin points, 'o' circle.
    """

    bits: int
    decoration: str = ""

    def elements(self) -> tuple[int, ...]:
        out = []
        b, i = self.bits, 1
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return tuple(out)

    def label(self) -> str:
        body = "{" + ",".join(str(i) for i in self.elements()) + "}"
        return body + self.decoration

    def __str__(self):
        return self.label()


@lru_cache(maxsize=None)
def subsets_colex(n: int, k: int) -> tuple[int, ...]:
    """All k-subsets of {1..n} as bitsets, in colexicographic order."""
    combos = sorted(combinations(range(n), k), key=lambda c: tuple(reversed(c)))
    return tuple(sum(1 << i for i in c) for c in combos)


def bits_of(elements) -> int:
    return sum(1 << (i - 1) for i in elements)


@lru_cache(maxsize=None)
def fixed_points(space: SpaceId) -> tuple[FixedVertex, ...]:
    subsets = subsets_colex(space.n, space.k)
    if space.has_sign_pairs:
        out = []
        for s in subsets:
            out.append(FixedVertex(s, "+"))
            out.append(FixedVertex(s, "-"))
        return tuple(out)
    if space.has_theta:
        return tuple(FixedVertex(s, "o") for s in subsets)
    return tuple(FixedVertex(s, "") for s in subsets)


def vertex_index(space: SpaceId, v: FixedVertex) -> int:
    try:
        return fixed_points(space).index(v)
    except ValueError:
        raise ValueError(f"{v} is not a fixed point of {space}") from None


def isotropy_weights(space: SpaceId, v: FixedVertex) -> tuple[LinearForm, ...]:
    """Isotropy weights at a fixed point/circle, as sign-normalized forms."""
    if v not in fixed_points(space):
        raise ValueError(f"{v} is not a fixed point of {space}")
    n = space.n
    inside = v.elements()
    outside = tuple(j for j in range(1, n + 1) if j not in inside)
    f = space.family
    weights: list[LinearForm] = []
    if f is Family.COMPLEX:
        for i in inside:
            for j in outside:
                weights.append(LinearForm.diff(n, j, i))
        return tuple(sorted(weights, key=lambda w: w.coeffs))
    for i in inside:
        for j in outside:
            weights.append(LinearForm.diff(n, j, i))
            weights.append(LinearForm.plus(n, j, i))
    if f in (Family.REAL_EVEN_ODD, Family.ORIENTED_EVEN_ODD):
        weights.extend(LinearForm.var(n, i) for i in inside)
    elif f in (Family.REAL_ODD_ODD, Family.ORIENTED_ODD_ODD):
        weights.extend(LinearForm.var(n, j) for j in outside)
    elif f in CIRCLE_FAMILIES:
        weights.extend(LinearForm.var(n, i) for i in inside)
        weights.extend(LinearForm.var(n, j) for j in outside)
    return tuple(sorted(weights, key=lambda w: w.coeffs))


def dimension(space: SpaceId) -> int:
    """Real dimension of the manifold."""
    if space.is_complex:
        return 2 * space.k * (space.n - space.k)
    return space.subspace_dim * (space.ambient_dim - space.subspace_dim)


def total_betti(space: SpaceId) -> int:
    c = _binom(space.n, space.k)
    if space.is_complex or space.family in (
        Family.REAL_EVEN_EVEN, Family.REAL_EVEN_ODD, Family.REAL_ODD_ODD,
    ):
        return c
    return 2 * c


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# -- Poincare series ---------------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer coefficient lists; asserts zero remainder."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        q, r = divmod(a[i + len(b) - 1], b[-1])
        if r:
            raise ArithmeticError("inexact power-series division")
        out[i] = q
        for j, y in enumerate(b):
            a[i + j] -= q * y
    if any(a):
        raise ArithmeticError("inexact power-series division")
    return out


@lru_cache(maxsize=None)
def _complex_poincare(k: int, n: int) -> tuple[int, ...]:
    """Coefficients of the Poincare polynomial of C(k,n) in t."""
    if k < 0 or k > n:
        return (0,)
    num = [1]
    for i in range(1, n + 1):
        num = _poly_mul(num, [1] + [0] * (2 * i - 1) + [-1])
    den = [1]
    for i in range(1, k + 1):
        den = _poly_mul(den, [1] + [0] * (2 * i - 1) + [-1])
    for i in range(1, n - k + 1):
        den = _poly_mul(den, [1] + [0] * (2 * i - 1) + [-1])
    return tuple(_poly_divexact(num, den))


def _stretch(p, factor: int) -> list[int]:
    """p(t) -> p(t^factor)."""
    out = [0] * ((len(p) - 1) * factor + 1)
    for i, c in enumerate(p):
        out[i * factor] = c
    return out


def _shift(p, offset: int) -> list[int]:
    return [0] * offset + list(p)


def _padd(a, b) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def poincare_series(space: SpaceId) -> tuple[int, ...]:
    """Exact coefficient vector of P(t), length dimension(space)+1."""
    k, n, f = space.k, space.n, space.family
    base = _stretch(_complex_poincare(k, n), 2)
    if f is Family.COMPLEX:
        p = list(_complex_poincare(k, n))
    elif f in (Family.REAL_EVEN_EVEN, Family.REAL_EVEN_ODD, Family.REAL_ODD_ODD):
        p = base
    elif f in (Family.REAL_ODD_EVEN, Family.ORIENTED_ODD_EVEN):
        p = _padd(base, _shift(base, 2 * n + 1))
    elif f is Family.ORIENTED_EVEN_ODD:
        p = _padd(base, _shift(base, 2 * k))
    elif f is Family.ORIENTED_ODD_ODD:
        p = _padd(base, _shift(base, 2 * (n - k)))
    else:  # oriented even-even: three-term formula
        p = base
        p = _padd(p, _shift(_stretch(_complex_poincare(k, n - 1), 2), 2 * k))
        p = _padd(p, _shift(_stretch(_complex_poincare(k - 1, n - 1), 2), 2 * (n - k)))
    d = dimension(space)
    out = list(p) + [0] * (d + 1 - len(p))
    if len(out) != d + 1 or any(c < 0 for c in out):
        raise AssertionError(f"Poincare series of {space} has wrong shape: {out}")
    return tuple(out)


def check_formality(space: SpaceId) -> Report:
    """Total Betti count of the fixed set vs. the space (circles count 2)."""
    rep = Report(f"formality {space}")
    pts = fixed_points(space)
    fixed_total = sum(2 if v.decoration == "o" else 1 for v in pts)
    betti = total_betti(space)
    series_total = sum(poincare_series(space))
    rep.record(
        fixed_total == betti,
        f"fixed-set Betti {fixed_total} != total Betti {betti}",
    )
    rep.record(
        series_total == betti,
        f"Poincare series at t=1 gives {series_total}, expected {betti}",
    )
    return rep
