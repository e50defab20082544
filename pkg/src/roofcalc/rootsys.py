"""Root systems of types A, C, D, F4 and G2 in exact integer arithmetic.

Conventions
-----------

Weights live in the fundamental weight basis: coordinate i of a weight chi
is the pairing <chi, alpha_i-vee> with the i-th simple coroot.  Simple
roots are numbered 1..rank following the usual Dynkin labels, and column i
of the Cartan matrix is alpha_i written in fundamental coordinates, so the
simple reflection acts by

    s_i(chi) = chi - chi[i] * alpha_i .

Type C_n uses the symplectic convention alpha_i = L_i - L_{i+1} for i < n
and alpha_n = 2 L_n, hence omega_i = L_1 + ... + L_i.  For F4 the node
numbering is fixed by

    s_1(w_1) = -w_1 + w_2          s_2(w_2) = w_1 - w_2 + 2 w_3
    s_3(w_3) = w_2 - w_3 + w_4     s_4(w_4) = w_3 - w_4

(nodes 1, 2 long; nodes 3, 4 short).  For G2, alpha_1 is long.

The L-basis ("orthogonal") coordinates exist for types A, C and D via
to_orthogonal / from_orthogonal; type A is normalised to the lattice
section whose last orthogonal coordinate vanishes.  Types F4 and G2 reject
the map.

Everything is exact: weight coordinates are Python ints, the only rational
intermediates (orthogonal spin coordinates, heights) are Fractions.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Tuple

SUPPORTED_TYPES = ("A", "C", "D", "F4", "G2")


class RootSystemError(ValueError):
    """Unsupported type/rank combination or malformed weight data."""


class Weight(tuple):
    """An integral weight in fundamental coordinates.

    Immutable, hashable, ordered lexicographically (tuple order), with
    componentwise vector arithmetic.  Coordinates must be exact integers.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> "Weight":
        try:
            vals = tuple(operator.index(c) for c in coords)
        except TypeError:
            raise RootSystemError(
                f"weight coordinates must be integers, got {tuple(coords)!r}"
            ) from None
        return tuple.__new__(cls, vals)

    def __add__(self, other) -> "Weight":
        return Weight(a + b for a, b in zip(self, other, strict=True))

    __radd__ = __add__

    def __sub__(self, other) -> "Weight":
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self)

    def __mul__(self, k) -> "Weight":
        k = operator.index(k)
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Weight{tuple.__repr__(self)}"


@dataclass(frozen=True)
class RootData:
    """A positive root with the exact data the formulas need.

    weight        the root in fundamental coordinates
    coefficients  its coordinates in the simple root basis (all >= 0)
    coroot        the coroot beta-vee in the simple coroot basis (integers)
    norm          (beta, beta) under the form with short roots of norm 2
    """

    weight: Weight
    coefficients: Tuple[int, ...]
    coroot: Tuple[int, ...]
    norm: int


@dataclass(frozen=True, eq=False)
class RootSystem:
    """An irreducible root system; instances are interned per (type, rank)."""

    type_label: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[int, ...]
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    root_data: Tuple[RootData, ...]
    rho: Weight
    # L-basis matrix (rows: L_j as a function of fundamental coordinates),
    # None for F4 and G2.
    orthogonal_basis_map: Optional[Tuple[Tuple[Fraction, ...], ...]]
    # Sum of the simple-root-basis coordinates of omega_i; height(chi) is
    # the dot product of this vector with chi.
    height_coefficients: Tuple[Fraction, ...]
    # fundamental coordinates -> simple-root-basis coordinates, for
    # positivity tests on root images.
    root_coefficient_index: Mapping[Weight, Tuple[int, ...]]

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}, {self.rank})"

    def coroot_pairing(self, chi: Weight, data: RootData) -> int:
        """<chi, beta-vee> for a positive root, exact integer."""
        return sum(c * x for c, x in zip(data.coroot, chi, strict=True))

    def form(self, chi: Weight, coefficients: Tuple[int, ...]) -> int:
        """(chi, beta) for beta given in simple-root coordinates.

        Uses (chi, alpha_j) = d_j * <chi, alpha_j-vee> where d_j is the
        symmetrizer entry, so the result is an exact integer.
        """
        return sum(
            d * m * x
            for d, m, x in zip(self.symmetrizer, coefficients, chi, strict=True)
        )

    def height(self, chi: Weight) -> Fraction:
        """<chi, rho-vee>: the sum of chi's simple-root-basis coordinates.

        Strictly increases along the positive root cone, which is what the
        dominant-weight peeling needs.
        """
        return sum(
            (h * c for h, c in zip(self.height_coefficients, chi, strict=True)),
            start=Fraction(0),
        )


def _cartan_matrix(type_label: str, rank: int) -> list[list[int]]:
    n = rank
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 2
    if type_label in ("A", "C", "D"):
        chain = n if type_label != "D" else n - 1
        for i in range(chain - 1):
            mat[i][i + 1] = -1
            mat[i + 1][i] = -1
    if type_label == "C" and n >= 2:
        # alpha_n long: <alpha_n, alpha_{n-1}-vee> = -2
        mat[n - 2][n - 1] = -2
        mat[n - 1][n - 2] = -1
    if type_label == "D":
        mat[n - 3][n - 1] = -1
        mat[n - 1][n - 3] = -1
    if type_label == "F4":
        mat = [
            [2, -1, 0, 0],
            [-1, 2, -1, 0],
            [0, -2, 2, -1],
            [0, 0, -1, 2],
        ]
    if type_label == "G2":
        mat = [
            [2, -1],
            [-3, 2],
        ]
    return mat


def _symmetrizer(type_label: str, rank: int) -> Tuple[int, ...]:
    # d_i = (alpha_i, alpha_i) / 2 with short roots of squared length 2.
    if type_label == "C":
        return tuple([1] * (rank - 1) + [2]) if rank >= 2 else (1,)
    if type_label == "F4":
        return (2, 2, 1, 1)
    if type_label == "G2":
        return (3, 1)
    return (1,) * rank


def _positive_root_closure(
    cartan: Tuple[Tuple[int, ...], ...], rank: int
) -> list[tuple[Weight, Tuple[int, ...]]]:
    """All positive roots by reflection closure from the simple roots."""
    columns = [Weight(cartan[i][j] for i in range(rank)) for j in range(rank)]
    seen: dict[Weight, Tuple[int, ...]] = {}
    frontier: list[tuple[Weight, Tuple[int, ...]]] = []
    for j, alpha in enumerate(columns):
        coeffs = tuple(1 if k == j else 0 for k in range(rank))
        seen[alpha] = coeffs
        frontier.append((alpha, coeffs))
    while frontier:
        nxt: list[tuple[Weight, Tuple[int, ...]]] = []
        for beta, coeffs in frontier:
            for i in range(rank):
                c = beta[i]
                image = beta - c * columns[i]
                new_coeffs = list(coeffs)
                new_coeffs[i] -= c
                if min(new_coeffs) < 0:
                    continue  # image is a negative root
                image_coeffs = tuple(new_coeffs)
                if image not in seen:
                    seen[image] = image_coeffs
                    nxt.append((image, image_coeffs))
        frontier = nxt
    roots = sorted(seen.items(), key=lambda item: (sum(seen[item[0]]), item[1]))
    return [(w, coeffs) for w, coeffs in roots]


def _orthogonal_matrix(
    type_label: str, rank: int
) -> Optional[Tuple[Tuple[Fraction, ...], ...]]:
    n = rank
    if type_label in ("A", "C"):
        # c_j = sum_{i >= j} chi_i  (omega_i = L_1 + ... + L_i)
        return tuple(
            tuple(Fraction(1) if i >= j else Fraction(0) for i in range(n))
            for j in range(n)
        )
    if type_label == "D":
        rows = []
        half = Fraction(1, 2)
        for j in range(n):
            row = [Fraction(0)] * n
            for i in range(n - 2):
                if i >= j:
                    row[i] = Fraction(1)
            # spin columns
            row[n - 2] = half if j <= n - 2 else -half
            row[n - 1] = half
            rows.append(tuple(row))
        return tuple(rows)
    return None


def _height_coefficients(
    cartan: Tuple[Tuple[int, ...], ...], rank: int
) -> Tuple[Fraction, ...]:
    # Solve cartan^T y = (1,...,1); then height(chi) = y . chi.
    n = rank
    aug = [[Fraction(cartan[j][i]) for j in range(n)] + [Fraction(1)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def _validate(type_label: str, rank: int) -> str:
    label = type_label.strip().upper()
    if label not in SUPPORTED_TYPES:
        raise RootSystemError(
            f"unsupported type {type_label!r}; supported: {', '.join(SUPPORTED_TYPES)}"
        )
    if rank < 1:
        raise RootSystemError(f"rank must be >= 1, got {rank}")
    if label == "D" and rank < 3:
        raise RootSystemError("type D needs rank >= 3")
    if label == "F4" and rank != 4:
        raise RootSystemError("type F4 has rank 4")
    if label == "G2" and rank != 2:
        raise RootSystemError("type G2 has rank 2")
    return label


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct (and intern) the root system of the given type and rank.

    The label is case-insensitive; interning happens after normalization
    so every spelling of a system yields the same object.
    """
    return _build_interned(_validate(type_label, int(rank)), int(rank))


@lru_cache(maxsize=None)
def _build_interned(label: str, rank: int) -> RootSystem:
    cartan = tuple(tuple(row) for row in _cartan_matrix(label, rank))
    sym = _symmetrizer(label, rank)
    for i in range(rank):
        for j in range(rank):
            if sym[i] * cartan[i][j] != sym[j] * cartan[j][i]:
                raise AssertionError("symmetrizer does not symmetrize the Cartan matrix")
    simple = tuple(Weight(cartan[i][j] for i in range(rank)) for j in range(rank))
    closure = _positive_root_closure(cartan, rank)

    data = []
    index: dict[Weight, Tuple[int, ...]] = {}
    for weight, coeffs in closure:
        norm = sum(
            d * m * x for d, m, x in zip(sym, coeffs, weight, strict=True)
        )
        coroot = []
        for d, m in zip(sym, coeffs, strict=True):
            num = 2 * d * m
            if num % norm:
                raise AssertionError("coroot coordinates must be integral")
            coroot.append(num // norm)
        data.append(RootData(weight, coeffs, tuple(coroot), norm))
        index[weight] = coeffs
    rho = Weight((1,) * rank)
    return RootSystem(
        type_label=label,
        rank=rank,
        cartan=cartan,
        symmetrizer=sym,
        simple_roots=simple,
        positive_roots=tuple(d.weight for d in data),
        root_data=tuple(data),
        rho=rho,
        orthogonal_basis_map=_orthogonal_matrix(label, rank),
        height_coefficients=_height_coefficients(cartan, rank),
        root_coefficient_index=index,
    )


def make_weight(system: RootSystem, coords: Iterable[int]) -> Weight:
    """Validate coordinate data against the system's rank."""
    w = coords if isinstance(coords, Weight) else Weight(coords)
    if len(w) != system.rank:
        raise RootSystemError(
            f"weight has {len(w)} coordinates, {system!r} has rank {system.rank}"
        )
    return w


def pair(system: RootSystem, chi: Weight, i: int) -> int:
    """<chi, alpha_i-vee> for a simple coroot, 1-based node index."""
    chi = make_weight(system, chi)
    if not 1 <= i <= system.rank:
        raise RootSystemError(f"node index {i} out of range 1..{system.rank}")
    return chi[i - 1]


def reflect(system: RootSystem, chi: Weight, i: int) -> Weight:
    """Simple reflection s_i(chi) = chi - <chi, alpha_i-vee> alpha_i."""
    chi = make_weight(system, chi)
    if not 1 <= i <= system.rank:
        raise RootSystemError(f"node index {i} out of range 1..{system.rank}")
    c = chi[i - 1]
    if c == 0:
        return chi
    return chi - c * system.simple_roots[i - 1]


def to_orthogonal(system: RootSystem, chi: Weight) -> Tuple[Fraction, ...]:
    """Express chi in L-basis coordinates (types A, C, D only)."""
    chi = make_weight(system, chi)
    mat = system.orthogonal_basis_map
    if mat is None:
        raise RootSystemError(
            f"type {system.type_label} has no orthogonal basis map here"
        )
    return tuple(
        sum((r * c for r, c in zip(row, chi, strict=True)), start=Fraction(0))
        for row in mat
    )


def from_orthogonal(system: RootSystem, coords: Iterable) -> Weight:
    """Inverse of to_orthogonal; rejects vectors outside the weight lattice."""
    mat = system.orthogonal_basis_map
    if mat is None:
        raise RootSystemError(
            f"type {system.type_label} has no orthogonal basis map here"
        )
    c = [Fraction(x) for x in coords]
    n = system.rank
    if len(c) != n:
        raise RootSystemError(f"expected {n} orthogonal coordinates, got {len(c)}")
    if system.type_label in ("A", "C"):
        fund = [c[i] - (c[i + 1] if i + 1 < n else 0) for i in range(n)]
    else:  # D
        fund = [c[i] - c[i + 1] for i in range(n - 2)]
        fund.append(c[n - 2] - c[n - 1])
        fund.append(c[n - 2] + c[n - 1])
    ints = []
    for x in fund:
        if x.denominator != 1:
            raise RootSystemError(
                f"orthogonal coordinates {tuple(map(str, c))} are outside the weight lattice"
            )
        ints.append(int(x))
    return Weight(ints)


def is_positive_root(system: RootSystem, chi: Weight) -> bool:
    return chi in system.root_coefficient_index


def is_root(system: RootSystem, chi: Weight) -> bool:
    return chi in system.root_coefficient_index or (-chi) in system.root_coefficient_index
