"""Partitions and the monomial / elementary bases of symmetric polynomials.

Rewriting a symmetric polynomial in the elementary basis is done by the
classical leading-term reduction, with symmetry certified first by comparing
coefficients across whole permutation orbits of exponent vectors (checking
every orbit is equivalent to checking invariance under all n! permutations,
and gives a concrete witness permutation on failure).

Partitions are ordered only within a fixed weight, by lexicographic
comparison of part sequences, largest part first.  That is the order under
which the e-to-m change of basis is unitriangular.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from redchern.poly import MPoly, e_vars, format_rational, parse_rational, x_vars


class Partition:
    """Weakly decreasing sequence of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def to_json_obj(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json_obj(cls, obj) -> "Partition":
        return cls(obj)


def compare_order(lam: Partition, mu: Partition) -> int:
    """Total order within one weight: -1, 0 or 1, largest-part-first lex.

    Partitions of different weights are not comparable here.
    """
    if lam.weight != mu.weight:
        raise ValueError(
            f"cannot order partitions of different weights: {lam!r} vs {mu!r}"
        )
    if lam.parts == mu.parts:
        return 0
    return 1 if lam.parts > mu.parts else -1


def json_sort_key(lam: Partition):
    """Weight-major ascending, then descending within weight (serialization order)."""
    return (lam.weight, tuple(-p for p in lam.parts))


def partitions_of(d: int, max_parts: int) -> list[Partition]:
    """All partitions of weight d with at most max_parts parts, descending."""
    if d < 0:
        raise ValueError("weight must be >= 0")
    if max_parts < 1:
        raise ValueError("max_parts must be >= 1")

    def gen(rest, max_part, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, max_part), 0, -1):
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    return [Partition(p) for p in gen(d, d if d else 1, max_parts)]


@lru_cache(maxsize=None)
def elementary_symmetric(r: int, n: int) -> MPoly:
    """The elementary symmetric polynomial of degree r in x1..xn (zero if r > n)."""
    table = x_vars(n)
    if r == 0:
        return MPoly.one(table)
    if r > n:
        return MPoly.zero(table)
    terms = {}
    for subset in itertools.combinations(range(n), r):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return MPoly(table, terms)


def monomial_symmetric(lam: Partition, n: int) -> MPoly:
    """m_lambda in n variables: the sum over distinct permutations of x^lambda."""
    if len(lam) > n:
        raise ValueError(f"partition {lam!r} has more than {n} parts")
    padded = lam.parts + (0,) * (n - len(lam))
    table = x_vars(n)
    return MPoly(table, {e: Fraction(1) for e in set(itertools.permutations(padded))})


def elementary_product(lam: Partition, n: int) -> MPoly:
    """e_lambda = product of elementary symmetric polynomials, one per part."""
    result = MPoly.one(x_vars(n))
    for p in lam.parts:
        result = result * elementary_symmetric(p, n)
    return result


class NotSymmetricError(ValueError):
    """Raised when a polynomial is not invariant under variable permutations.

    witness is an index permutation pi (new exponent i comes from position
    pi[i]) under which the polynomial changes.
    """

    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(f"polynomial is not symmetric; witness permutation {witness}")


def _matching_permutation(src, dst) -> tuple[int, ...]:
    """A permutation pi with dst[i] == src[pi[i]] for exponent multisets."""
    pools: dict[int, list[int]] = {}
    for j, v in enumerate(src):
        pools.setdefault(v, []).append(j)
    return tuple(pools[v].pop() for v in dst)


def _orbit_size(rep) -> int:
    """Number of distinct permutations of an exponent multiset."""
    size = 1
    for k in range(2, len(rep) + 1):
        size *= k
    mult: dict[int, int] = {}
    for v in rep:
        mult[v] = mult.get(v, 0) + 1
    for m in mult.values():
        for k in range(2, m + 1):
            size //= k
    return size


def symmetry_witness(p: MPoly):
    """None when p is symmetric, else a witness permutation of variable indices.

    Invariance under all n! permutations is equivalent to every orbit of
    exponent vectors being fully present with one shared coefficient, so the
    pass path only counts orbit members; permutations are materialized only
    to construct a witness.
    """
    degrees = set(p.table.degrees)
    if len(degrees) > 1:
        raise ValueError("symmetry is only defined for equal-degree variables")
    groups: dict[tuple[int, ...], dict] = {}
    for exps, coeff in p.terms.items():
        rep = tuple(sorted(exps, reverse=True))
        groups.setdefault(rep, {})[exps] = coeff
    for rep, present in groups.items():
        base_exps, base_coeff = next(iter(present.items()))
        if len(present) == _orbit_size(rep) and all(
            c == base_coeff for c in present.values()
        ):
            continue
        for member in itertools.permutations(rep):
            if present.get(member) != base_coeff:
                return _matching_permutation(base_exps, member)
    return None


def is_symmetric(p: MPoly) -> bool:
    return symmetry_witness(p) is None


@dataclass(frozen=True)
class SymPolyInBasis:
    """Coordinates of a symmetric polynomial in the m- or e-basis."""

    basis: str
    coeffs: dict

    def __post_init__(self):
        if self.basis not in ("m", "e"):
            raise ValueError(f"unknown basis tag {self.basis!r}")

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, Fraction(0))

    def expand(self, n: int) -> MPoly:
        """Expand into an explicit polynomial in x1..xn."""
        result = MPoly.zero(x_vars(n))
        for lam, coeff in self.coeffs.items():
            basis_poly = (
                monomial_symmetric(lam, n)
                if self.basis == "m"
                else elementary_product(lam, n)
            )
            result = result + basis_poly * coeff
        return result

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: json_sort_key(kv[0]))

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": [
                {"partition": lam.to_json_obj(), "coeff": format_rational(c)}
                for lam, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "SymPolyInBasis":
        return cls(
            obj["basis"],
            {
                Partition.from_json_obj(item["partition"]): parse_rational(item["coeff"])
                for item in obj["coeffs"]
            },
        )


def monomial_coefficients(p: MPoly) -> SymPolyInBasis:
    """The m-basis coordinates of a symmetric polynomial."""
    witness = symmetry_witness(p)
    if witness is not None:
        raise NotSymmetricError(witness)
    coeffs: dict[Partition, Fraction] = {}
    for exps, coeff in p.terms.items():
        rep = tuple(sorted(exps, reverse=True))
        if rep == exps:
            coeffs[Partition(tuple(v for v in rep if v))] = coeff
    return SymPolyInBasis("m", coeffs)


def elementary_to_monomial(lam: Partition, n: int) -> SymPolyInBasis:
    """m-basis coordinates of e_lambda, by expansion and orbit collection."""
    if len(lam) > n:
        raise ValueError(f"partition {lam!r} has more than {n} parts")
    if lam.parts and lam.parts[0] > n:
        raise ValueError(f"part {lam.parts[0]} exceeds the variable count {n}")
    return monomial_coefficients(elementary_product(lam, n))


def express_in_elementary(p: MPoly) -> MPoly:
    """Rewrite a symmetric polynomial as a polynomial in e1..en.

    Exact inverse of expansion: substituting e_i = sigma_i(x) into the result
    recovers p.  Non-symmetric input raises NotSymmetricError with a witness.
    """
    n = len(p.table)
    if any(d != 1 for d in p.table.degrees):
        raise ValueError("input must live in degree-1 root variables")
    witness = symmetry_witness(p)
    if witness is not None:
        raise NotSymmetricError(witness)
    evt = e_vars(n)
    out: dict[tuple[int, ...], Fraction] = {}
    work = p
    while not work.is_zero():
        alpha = max(work.terms)
        coeff = work.terms[alpha]
        if tuple(sorted(alpha, reverse=True)) != alpha:
            raise AssertionError(f"leading monomial {alpha} of a symmetric poly")
        beta = tuple(
            alpha[i] - (alpha[i + 1] if i + 1 < n else 0) for i in range(n)
        )
        out[beta] = out.get(beta, Fraction(0)) + coeff
        subtrahend = MPoly.one(p.table)
        for i, b in enumerate(beta):
            if b:
                subtrahend = subtrahend * elementary_symmetric(i + 1, n) ** b
        work = work - subtrahend * coeff
    return MPoly(evt, out)


def root_compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All (m_1..m_n) with m_i >= 0 summing to n: the index set of the y-roots.

    Ordered with the n extreme compositions n*delta_i first, then the rest
    ascending lexicographically.  The count is C(2n-1, n).
    """
    extremes = [tuple(n if j == i else 0 for j in range(n)) for i in range(n)]
    extreme_set = set(extremes)

    def gen(slots, rest):
        if slots == 1:
            yield (rest,)
            return
        for first in range(rest + 1):
            for tail in gen(slots - 1, rest - first):
                yield (first,) + tail

    rest = sorted(m for m in gen(n, n) if m not in extreme_set)
    result = tuple(extremes) + tuple(rest)
    assert len(result) == comb(2 * n - 1, n)
    return result
