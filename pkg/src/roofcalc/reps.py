"""Levi representations: dimensions, weight multisets, exterior powers.

A LeviIrrep is the irreducible representation of the Levi factor of a
parabolic P with a given P-dominant highest weight (coordinates >= 0 on
retained nodes; crossed coordinates are unconstrained central charges).
The full group is the parabolic with nothing crossed.

Dimensions come from the Weyl dimension formula over the Levi positive
roots, weight multiplicities from the Freudenthal recursion.  Both use the
invariant form given by the symmetrized Cartan matrix normalised so that
short roots have squared length 2; with full-group rho in place of the
Levi half-sum (the difference pairs to zero with every Levi root), all
intermediates are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .limits import check_cap, resource_cap
from .rootsys import RootSystem, RootSystemError, Weight, make_weight
from .weyl import (
    ParabolicSubgroup,
    act,
    levi_root_data,
    longest_element,
    orbit,
    parabolic,
)


class DominanceError(ValueError):
    """A weight violates the dominance required by an operation."""


class NotARepresentation(ValueError):
    """A weight multiset is not the character of any Levi representation."""


def is_dominant(chi: Weight, P: ParabolicSubgroup) -> bool:
    """Dominance for the Levi: coordinates >= 0 on all retained nodes."""
    chi = make_weight(P.system, chi)
    return all(chi[i - 1] >= 0 for i in P.retained)


def _require_dominant(chi: Weight, P: ParabolicSubgroup) -> Weight:
    chi = make_weight(P.system, chi)
    for i in sorted(P.retained):
        if chi[i - 1] < 0:
            raise DominanceError(
                f"coordinate {chi[i - 1]} at retained node {i} of {chi!r}; "
                f"dominance for {P!r} requires >= 0"
            )
    return chi


class WeightMultiset:
    """A finite multiset of weights with positive integer multiplicities."""

    __slots__ = ("counts", "total")

    def __init__(self, counts: Mapping[Weight, int]):
        clean: Dict[Weight, int] = {}
        total = 0
        for w, m in counts.items():
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w!r}")
            if m:
                clean[Weight(w)] = m
                total += m
        self.counts = MappingProxyType(dict(sorted(clean.items())))
        self.total = total

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return dict(self.counts) == dict(other.counts)

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))

    def __iter__(self):
        return iter(self.counts.items())

    def __len__(self) -> int:
        return len(self.counts)

    def __contains__(self, w) -> bool:
        return w in self.counts

    def multiplicity(self, w: Weight) -> int:
        return self.counts.get(w, 0)

    def __repr__(self) -> str:
        inner = ", ".join(f"{w!r}: {m}" for w, m in self.counts.items())
        return f"WeightMultiset({{{inner}}})"


SystemOrParabolic = Union[RootSystem, ParabolicSubgroup]


def _as_parabolic(system: SystemOrParabolic) -> ParabolicSubgroup:
    if isinstance(system, ParabolicSubgroup):
        return system
    if isinstance(system, RootSystem):
        return parabolic(system, ())
    raise TypeError(f"expected RootSystem or ParabolicSubgroup, got {system!r}")


def weyl_dimension(system: SystemOrParabolic, chi: Weight) -> int:
    """Exact dimension of the (Levi) irreducible with highest weight chi.

    Product over the (Levi) positive roots of <chi+rho, beta-vee> over
    <rho, beta-vee>, evaluated in big integers with a single exact division.
    """
    P = _as_parabolic(system)
    chi = _require_dominant(chi, P)
    num = 1
    den = 1
    for data in levi_root_data(P):
        a = sum(c * (x + 1) for c, x in zip(data.coroot, chi, strict=True))
        b = sum(data.coroot)
        num *= a
        den *= b
    q, r = divmod(num, den)
    if r:
        raise AssertionError("Weyl dimension formula produced a non-integer")
    return q


@dataclass(frozen=True, eq=False)
class LeviIrrep:
    """Irreducible representation of the Levi of P with highest weight chi."""

    parabolic: ParabolicSubgroup
    highest_weight: Weight

    def __post_init__(self):
        _require_dominant(self.highest_weight, self.parabolic)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeviIrrep):
            return NotImplemented
        return (
            self.parabolic == other.parabolic
            and self.highest_weight == other.highest_weight
        )

    def __hash__(self) -> int:
        return hash((self.parabolic, self.highest_weight))

    def __repr__(self) -> str:
        return f"LeviIrrep({self.parabolic!r}, {self.highest_weight!r})"

    @property
    def dimension(self) -> int:
        return weyl_dimension(self.parabolic, self.highest_weight)


def _dominant_conjugate(P: ParabolicSubgroup, chi: Weight) -> Optional[Weight]:
    """The Levi-dominant W_I-conjugate of chi (always exists, unique)."""
    system = P.system
    retained = sorted(P.retained)
    mu = list(chi)
    simple = system.simple_roots
    while True:
        node = 0
        for i in retained:
            if mu[i - 1] < 0:
                node = i
                break
        if not node:
            return Weight(mu)
        c = mu[node - 1]
        alpha = simple[node - 1]
        for j in range(system.rank):
            mu[j] -= c * alpha[j]


@lru_cache(maxsize=None)
def _dominant_multiplicities(
    P: ParabolicSubgroup, hw: Weight
) -> Tuple[Tuple[Weight, int], ...]:
    """Freudenthal recursion: multiplicities of the dominant weights <= hw."""
    system = P.system
    lroots = levi_root_data(P)
    sym = system.symmetrizer

    # Dominant weights of the irrep: breadth-first subtraction of Levi
    # positive roots, keeping Levi-dominant results; offsets track hw - mu
    # in simple-root coordinates.
    zero = tuple(0 for _ in range(system.rank))
    offsets: Dict[Weight, Tuple[int, ...]] = {hw: zero}
    frontier = [hw]
    while frontier:
        nxt = []
        for mu in frontier:
            off = offsets[mu]
            for data in lroots:
                cand = mu - data.weight
                if not is_dominant(cand, P):
                    continue
                if cand in offsets:
                    continue
                offsets[cand] = tuple(
                    o + m for o, m in zip(off, data.coefficients)
                )
                nxt.append(cand)
        frontier = nxt

    order = sorted(offsets, key=lambda mu: (sum(offsets[mu]), offsets[mu]))
    mult: Dict[Weight, int] = {}
    for mu in order:
        if mu == hw:
            mult[mu] = 1
            continue
        total = 0
        for data in lroots:
            beta = data.weight
            norm = data.norm
            base = system.form(mu, data.coefficients)  # (mu, beta)
            nu = mu + beta
            k = 1
            while True:
                m = mult.get(_dominant_conjugate(P, nu), 0)
                if not m:
                    break  # root strings through a weight have no gaps
                total += m * (base + k * norm)
                nu = nu + beta
                k += 1
        off = offsets[mu]
        denom = sum(
            d * o * (h + m + 2)
            for d, o, h, m in zip(sym, off, hw, mu, strict=True)
        )
        q, r = divmod(2 * total, denom)
        if r or q <= 0:
            raise AssertionError("Freudenthal recursion left a non-integer multiplicity")
        mult[mu] = q
    return tuple(mult.items())


def weight_multiset(rep: LeviIrrep, cap: Optional[int] = None) -> WeightMultiset:
    """All weights of the irrep with multiplicities (W_I-orbit expansion)."""
    limit = resource_cap(cap)
    dim = rep.dimension
    check_cap(f"weight multiset of {rep!r}", dim, limit)
    counts: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(rep.parabolic, rep.highest_weight):
        for w in orbit(mu, rep.parabolic, cap=limit):
            counts[w] = m
    ms = WeightMultiset(counts)
    if ms.total != dim:
        raise AssertionError(
            f"character size {ms.total} disagrees with Weyl dimension {dim}"
        )
    return ms


def exterior_power(
    ms: WeightMultiset, p: int, cap: Optional[int] = None
) -> WeightMultiset:
    """Weights of the p-th exterior power: sums over p-element sub-multisets."""
    p = int(p)
    if not 0 <= p <= ms.total:
        raise ValueError(f"exterior power degree {p} outside 0..{ms.total}")
    limit = resource_cap(cap)
    check_cap("exterior power", comb(ms.total, p), limit)
    elements: list[Weight] = []
    for w, m in ms:
        elements.extend([w] * m)
    rank = len(elements[0]) if elements else 0
    zero = Weight((0,) * rank)
    layers: list[Dict[Weight, int]] = [dict() for _ in range(p + 1)]
    layers[0][zero] = 1
    for idx, w in enumerate(elements):
        top = min(p, idx + 1)
        for k in range(top - 1, -1, -1):
            if not layers[k]:
                continue
            dest = layers[k + 1]
            for s, c in layers[k].items():
                key = s + w
                dest[key] = dest.get(key, 0) + c
    return WeightMultiset(layers[p])


def decompose_levi(
    ms: WeightMultiset, P: ParabolicSubgroup, cap: Optional[int] = None
) -> Tuple[Tuple[Weight, int], ...]:
    """Decompose a W_I-stable multiset into Levi highest weights.

    Peels the height-maximal dominant weight (lexicographic tie-break),
    subtracting the full character of its irrep each round.  Raises
    NotARepresentation if the multiset is not a genuine character.
    """
    system = P.system
    remaining: Dict[Weight, int] = dict(ms.counts)
    out: list[Tuple[Weight, int]] = []
    while remaining:
        best = None
        best_key = None
        for w in remaining:
            if not is_dominant(w, P):
                continue
            key = (system.height(w), w)
            if best_key is None or key > best_key:
                best, best_key = w, key
        if best is None:
            raise NotARepresentation(
                "leftover weights contain no Levi-dominant member"
            )
        m = remaining[best]
        char = weight_multiset(LeviIrrep(P, best), cap=cap)
        for w, c in char:
            have = remaining.get(w, 0) - m * c
            if have < 0:
                raise NotARepresentation(
                    f"multiplicity of {w!r} drops below zero while peeling {best!r}"
                )
            if have:
                remaining[w] = have
            else:
                remaining.pop(w, None)
        out.append((best, m))
    return tuple(out)


def dual_highest_weight(chi: Weight, P: ParabolicSubgroup) -> Weight:
    """Highest weight of the dual irrep: -w_0(chi) for the Levi longest w_0."""
    chi = _require_dominant(chi, P)
    res = -act(longest_element(P), chi)
    if not is_dominant(res, P):
        raise AssertionError("dual highest weight came out non-dominant")
    return res


def line_bundle_rank_check(chi: Weight, P: ParabolicSubgroup) -> bool:
    """True iff the equivariant bundle of chi has rank one.

    Equivalent to chi being supported on the crossed nodes: the characters
    of P are exactly the weights orthogonal to the Levi roots.
    """
    return weyl_dimension(P, chi) == 1


def is_ample(chi: Weight, P: ParabolicSubgroup) -> bool:
    """Ampleness of E_P(chi) on G/P: positive across crossed nodes.

    True iff coords > 0 on every crossed node and >= 0 on every retained
    node (for line bundles, retained coordinates are zero anyway).
    """
    chi = make_weight(P.system, chi)
    return all(chi[i - 1] > 0 for i in P.crossed) and all(
        chi[i - 1] >= 0 for i in P.retained
    )
