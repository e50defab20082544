"""Exact Lefschetz-polynomial arithmetic and point counts.

Classes of generalized flag varieties in the Grothendieck ring of
varieties are polynomials in the Lefschetz class L with nonnegative
integer coefficients: the Bruhat decomposition gives one affine cell per
minimal coset representative, graded by length.  Isotropic Grassmannians
IGr(d, 2n) also admit a closed product formula, which doubles as a point
count over F_q on substituting q for L; the two routes are kept separate
so they can certify each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .weyl import ParabolicSubgroup, coset_lengths


class ExactDivisionError(ArithmeticError):
    """A division that the formulas guarantee exact failed to be exact."""


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = list(int(c) for c in coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class LPolynomial:
    """A polynomial in the Lefschetz class with exact integer coefficients.

    coeffs[k] is the coefficient of L^k; trailing zeros are normalised
    away, so the zero polynomial has empty coeffs and equality is plain
    coefficient comparison.
    """

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls) -> "LPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "LPolynomial":
        return cls((1,))

    @classmethod
    def lefschetz(cls) -> "LPolynomial":
        return cls((0, 1))

    @classmethod
    def projective_space(cls, r: int) -> "LPolynomial":
        """[P^r] = 1 + L + ... + L^r."""
        if r < 0:
            raise ValueError(f"projective space dimension must be >= 0, got {r}")
        return cls((1,) * (r + 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __add__(self, other: "LPolynomial") -> "LPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        )

    def __sub__(self, other: "LPolynomial") -> "LPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LPolynomial(
            (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
            for i in range(n)
        )

    def __neg__(self) -> "LPolynomial":
        return LPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: "LPolynomial") -> "LPolynomial":
        if self.is_zero or other.is_zero:
            return LPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return LPolynomial(out)

    def exact_div(self, other: "LPolynomial") -> "LPolynomial":
        """Polynomial division that must leave remainder zero."""
        if other.is_zero:
            raise ExactDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        div = other.coeffs
        if len(rem) < len(div):
            if any(rem):
                raise ExactDivisionError("inexact polynomial division")
            return LPolynomial.zero()
        out = [0] * (len(rem) - len(div) + 1)
        lead = div[-1]
        for k in range(len(out) - 1, -1, -1):
            q, r = divmod(rem[k + len(div) - 1], lead)
            if r:
                raise ExactDivisionError("inexact polynomial division")
            out[k] = q
            if q:
                for j, d in enumerate(div):
                    rem[k + j] -= q * d
        if any(rem):
            raise ExactDivisionError("inexact polynomial division")
        return LPolynomial(out)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def render(self, var: str = "L") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
            parts.append((c < 0, body))
        text = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __str__(self) -> str:
        return self.render()


def class_of_quotient(
    P: ParabolicSubgroup,
    cap: Optional[int] = None,
    cache_dir: Optional[str] = None,
) -> LPolynomial:
    """[G/P] in the Grothendieck ring: one L^length per Bruhat cell."""
    lengths = coset_lengths(P, cap=cap, cache_dir=cache_dir)
    top = max(lengths)
    coeffs = [0] * (top + 1)
    for l in lengths:
        coeffs[l] += 1
    return LPolynomial(coeffs)


def _validate_igr(d: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"symplectic rank n must be >= 1, got {n}")
    if not 1 <= d <= n:
        raise ValueError(f"isotropic dimension d must satisfy 1 <= d <= n, got {d}")


def igr_point_count(d: int, n: int, q: int) -> int:
    """Number of F_q-points of IGr(d, 2n): prod (q^{2(n-j+1)}-1)/(q^j-1).

    Numerator and denominator are multiplied out before the single exact
    division (the individual factors need not divide).
    """
    _validate_igr(d, n)
    if q < 2:
        raise ValueError(f"point counts need q >= 2, got {q}")
    num = 1
    den = 1
    for j in range(1, d + 1):
        num *= q ** (2 * (n - j + 1)) - 1
        den *= q**j - 1
    quotient, rem = divmod(num, den)
    if rem:
        raise ExactDivisionError("isotropic Grassmannian point count was not integral")
    return quotient


def igr_class(d: int, n: int) -> LPolynomial:
    """[IGr(d, 2n)] via the same product formula, as exact polynomial division."""
    _validate_igr(d, n)
    num = LPolynomial.one()
    den = LPolynomial.one()
    for j in range(1, d + 1):
        e = 2 * (n - j + 1)
        num = num * LPolynomial([-1] + [0] * (e - 1) + [1])
        den = den * LPolynomial([-1] + [0] * (j - 1) + [1])
    return num.exact_div(den)


def roof_identity_residual(f1: LPolynomial, f2: LPolynomial, r: int) -> LPolynomial:
    """[P^{r-2}] * (f2 - f1) for a roof of projective bundles of rank r.

    Zero certifies L^{r-1} ([Z_1] - [Z_2]) = 0 for the zero loci cut out by
    a common section, because [P^{r-1}][F_1] - [P^{r-1}][F_2] telescopes
    against the blow-up decompositions along Z_1 and Z_2.
    """
    if r < 2:
        raise ValueError(f"roof rank must be >= 2, got {r}")
    return LPolynomial.projective_space(r - 2) * (f2 - f1)
