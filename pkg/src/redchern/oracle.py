"""Brute-force verification substrate: finite graded rings as oracles.

A toy ring is a quotient of a polynomial ring by monomial relations plus a
global degree cap, so normal forms are confluent without any Groebner
machinery, and every graded piece is a finite-dimensional vector space with
a monomial basis.  The symbolic identities proved in the c-variables are
universal, so specializing them to random bundles over random toy rings can
only fail if the symbolic side is wrong; that is what check_identity tests,
evaluating both sides of each identity independently in the ring.

Gradings are algebraic throughout: deg c_i = i and the projective-bundle
class xi has degree 1 (no topological doubling).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from redchern import chern, universal
from redchern.poly import MPoly, VarTable


class ToyRing:
    """Finitely presented truncated graded commutative ring over the rationals."""

    def __init__(self, ring_id, generators, relations=(), top_degree=12):
        self.id = str(ring_id)
        self.table = VarTable(generators)
        self.top_degree = int(top_degree)
        if self.top_degree < 0:
            raise ValueError("top_degree must be >= 0")
        pats = []
        for rel in relations:
            exps = [0] * len(self.table)
            if not rel:
                raise ValueError("empty relation")
            for name, power in dict(rel).items():
                power = int(power)
                if power < 1:
                    raise ValueError(f"relation power for {name!r} must be >= 1")
                exps[self.table.index(name)] = power
            pats.append(tuple(exps))
        self.relations = tuple(pats)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ToyRing)
            and self.table == other.table
            and self.relations == other.relations
            and self.top_degree == other.top_degree
        )

    def __repr__(self) -> str:
        return f"ToyRing({self.id!r})"

    # ---- normal form ----

    def _dead(self, exps) -> bool:
        if self.table.wdeg(exps) > self.top_degree:
            return True
        for pat in self.relations:
            if all(e >= p for e, p in zip(exps, pat)):
                return True
        return False

    def normalize(self, terms: Mapping) -> dict:
        out = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if self._dead(exps):
                continue
            q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if not q:
                continue
            prev = out.get(exps)
            total = q if prev is None else prev + q
            if total:
                out[exps] = total
            elif prev is not None:
                del out[exps]
        return out

    # ---- elements ----

    def element(self, terms: Mapping) -> "ToyElement":
        return ToyElement(self, self.normalize(terms))

    def zero(self) -> "ToyElement":
        return ToyElement(self, {})

    def one(self) -> "ToyElement":
        return self.element({(0,) * len(self.table): Fraction(1)})

    def gen(self, name: str) -> "ToyElement":
        return self.element({self.table.unit(self.table.index(name)): Fraction(1)})

    # ---- graded structure ----

    def graded_basis(self, d: int) -> list[tuple[int, ...]]:
        """Monomial basis of the degree-d piece, lexicographically sorted."""
        if d < 0 or d > self.top_degree:
            return []
        degrees = self.table.degrees
        found: list[tuple[int, ...]] = []

        def rec(i, rest, acc):
            if i == len(degrees):
                if rest == 0:
                    found.append(tuple(acc))
                return
            step = degrees[i]
            for e in range(rest // step + 1):
                rec(i + 1, rest - e * step, acc + [e])

        rec(0, d, [])
        return sorted(e for e in found if not self._dead(e))

    def graded_dimension(self, d: int) -> int:
        return len(self.graded_basis(d))

    def random_element(self, d: int, rng: random.Random, span: int = 3) -> "ToyElement":
        """A random homogeneous degree-d element with small integer coefficients."""
        return self.element(
            {exps: Fraction(rng.randint(-span, span)) for exps in self.graded_basis(d)}
        )


class ToyElement:
    """Normal-formed element of a ToyRing; immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ToyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ToyElement") -> None:
        if self.ring != other.ring:
            raise ValueError("elements of different toy rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.element({(0,) * len(self.ring.table): Fraction(other)})
        if not isinstance(other, ToyElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            total = c if prev is None else prev + c
            if total:
                out[e] = total
            elif prev is not None:
                del out[e]
        return ToyElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return ToyElement(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.element({(0,) * len(self.ring.table): Fraction(other)})
        if not isinstance(other, ToyElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return self.ring.zero()
            return ToyElement(self.ring, {e: c * q for e, c in self.terms.items()})
        if not isinstance(other, ToyElement):
            return NotImplemented
        self._check(other)
        raw: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prev = raw.get(e)
                raw[e] = ca * cb if prev is None else prev + ca * cb
        return self.ring.element(raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.element({(0,) * len(self.ring.table): Fraction(other)})
        if not isinstance(other, ToyElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def ring_one(self) -> "ToyElement":
        return self.ring.one()

    def graded_component(self, d: int) -> "ToyElement":
        wdeg = self.ring.table.wdeg
        return ToyElement(
            self.ring, {e: c for e, c in self.terms.items() if wdeg(e) == d}
        )

    def min_degree_component(self) -> "ToyElement":
        """The lowest-degree nonzero graded piece (zero for the zero element)."""
        if not self.terms:
            return self
        wdeg = self.ring.table.wdeg
        return self.graded_component(min(wdeg(e) for e in self.terms))

    def to_json_obj(self) -> dict:
        return MPoly(self.ring.table, self.terms).to_json_obj()

    def __repr__(self) -> str:
        return f"ToyElement({MPoly(self.ring.table, self.terms)})"


def make_toy_ring(spec: Mapping) -> ToyRing:
    """Build a ToyRing from a plain spec dict.

    Expected keys: "id", "generators" (list of [name, degree]), "relations"
    (list of name -> power monomial dicts, each read as monomial = 0) and
    "top_degree".
    """
    return ToyRing(
        spec.get("id", "ring"),
        [(g[0], g[1]) for g in spec.get("generators", [])],
        spec.get("relations", ()),
        spec.get("top_degree", 12),
    )


@dataclass(frozen=True)
class ToyBundle:
    """Rank plus classes in a toy ring, each homogeneous of its index degree."""

    rank: int
    classes: tuple

    def __post_init__(self):
        if len(self.classes) != self.rank:
            raise ValueError("need exactly rank classes")
        for i, cls in enumerate(self.classes, start=1):
            if not cls.graded_component(i) == cls:
                raise ValueError(f"class {i} is not homogeneous of degree {i}")

    @property
    def ring(self) -> ToyRing:
        return self.classes[0].ring


def random_bundle(ring: ToyRing, n: int, seed) -> ToyBundle:
    """A seeded random rank-n bundle: one draw per graded piece."""
    if n < 2:
        raise ValueError("rank must be >= 2")
    rng = random.Random(seed)
    return ToyBundle(n, tuple(ring.random_element(i, rng) for i in range(1, n + 1)))


# ---- the symbolic theory consumed by toy-ring checks ----


@dataclass(frozen=True)
class RankTheory:
    """All universal polynomials of one rank, ready for specialization."""

    rank: int
    reduced: tuple[MPoly, ...]
    twisted: tuple[MPoly, ...]
    f_classes: tuple[MPoly, ...]
    phi: tuple[MPoly, ...]


@lru_cache(maxsize=None)
def rank_theory(n: int) -> RankTheory:
    return RankTheory(
        rank=n,
        reduced=tuple(chern.reduced_chern_roots(n, r) for r in range(1, n + 1)),
        twisted=chern.twist(chern.ChernVector.free(n), "t").classes,
        f_classes=tuple(chern.sym_power_det_inverse_chern(n, n)),
        phi=universal.compute_phi(n).phi,
    )


def _bump_coefficient(p: MPoly, delta=1) -> MPoly:
    """Add delta to the first canonical coefficient (or constant if zero)."""
    if p.is_zero():
        return p + delta
    exps, _ = p.sorted_terms()[0]
    return p + MPoly.monomial(p.table, exps, Fraction(delta))


def mutate_phi(theory: RankTheory, i: int, delta=1) -> RankTheory:
    """A corrupted theory with one coefficient of phi_i perturbed."""
    phi = list(theory.phi)
    phi[i - 2] = _bump_coefficient(phi[i - 2], delta)
    return RankTheory(theory.rank, theory.reduced, theory.twisted, theory.f_classes, tuple(phi))


def mutate_reduced(theory: RankTheory, r: int, delta=1) -> RankTheory:
    """A corrupted theory with one coefficient of the degree-r class perturbed."""
    reduced = list(theory.reduced)
    reduced[r - 1] = _bump_coefficient(reduced[r - 1], delta)
    return RankTheory(theory.rank, tuple(reduced), theory.twisted, theory.f_classes, theory.phi)


# ---- identity checks ----

IDENTITY_TAGS = ("twist", "c1-zero", "phi-roundtrip", "c1F-zero", "projective-bundle")


@dataclass(frozen=True)
class CheckResult:
    """One verification outcome, serializable as a JSON report line."""

    identity: str
    ring: str
    rank: int
    seed: int
    status: str
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "ring": self.ring,
            "rank": self.rank,
            "seed": self.seed,
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
        }


def _class_values(bundle: ToyBundle) -> dict:
    return {f"c{i}": bundle.classes[i - 1] for i in range(1, bundle.rank + 1)}


def _first_difference(lhs, rhs):
    diff = lhs - rhs
    return None if diff.is_zero() else diff.min_degree_component()


def check_identity(
    tag: str,
    ring: ToyRing,
    rank: int,
    seed: int,
    theory: RankTheory | None = None,
) -> CheckResult:
    """Specialize one universal identity to a seeded random bundle.

    Both sides are evaluated independently in the ring; a failure reports
    the first differing graded component as witness.  Passing a corrupted
    theory is how the suite's mutation sensitivity is exercised.
    """
    if tag not in IDENTITY_TAGS:
        raise ValueError(f"unknown identity tag {tag!r}")
    if theory is None:
        theory = rank_theory(rank)
    n = rank
    one = ring.one()
    bundle = random_bundle(ring, n, seed)
    values = _class_values(bundle)
    witness = None

    if tag == "twist":
        rng = random.Random((seed + 1) << 4)
        line = ring.random_element(1, rng)
        tv = dict(values)
        tv["t"] = line
        twisted_values = {
            f"c{k}": theory.twisted[k - 1].evaluate(tv, one) for k in range(1, n + 1)
        }
        for r in range(1, n + 1):
            lhs = theory.reduced[r - 1].evaluate(twisted_values, one)
            rhs = theory.reduced[r - 1].evaluate(values, one)
            witness = _first_difference(lhs, rhs)
            if witness is not None:
                break
    elif tag == "c1-zero":
        flat = dict(values)
        flat["c1"] = ring.zero()
        for r in range(1, n + 1):
            lhs = theory.reduced[r - 1].evaluate(flat, one)
            witness = _first_difference(lhs, flat[f"c{r}"])
            if witness is not None:
                break
    elif tag == "phi-roundtrip":
        f_values = {
            f"u{k}": theory.f_classes[k - 1].evaluate(values, one)
            for k in range(2, n + 1)
        }
        for i in range(2, n + 1):
            lhs = theory.phi[i - 2].evaluate(f_values, one)
            rhs = theory.reduced[i - 1].evaluate(values, one)
            witness = _first_difference(lhs, rhs)
            if witness is not None:
                break
    elif tag == "c1F-zero":
        witness = _first_difference(
            theory.f_classes[0].evaluate(values, one), ring.zero()
        )
    elif tag == "projective-bundle":
        ext = projective_bundle_ring(ring, bundle)
        residue = ext.relation_residue()
        ok = residue.is_zero()
        if not ok:
            for coeff in residue.coefficients:
                if not coeff.is_zero():
                    witness = coeff.min_degree_component()
                    break
        if ok:
            ok = all(
                ext.graded_dimension(dd)
                == sum(ring.graded_dimension(dd - i) for i in range(n))
                for dd in range(ring.top_degree + 1)
            )
        if ok:
            rng = random.Random((seed + 3) << 4)
            sample = [
                ext.inject(ring.random_element(rng.randint(0, 2), rng)) * ext.xi() ** rng.randint(0, n)
                for _ in range(3)
            ]
            u, v, w = sample
            ok = (u * v) * w == u * (v * w) and u * v == v * u
        if not ok and witness is None:
            witness = ring.one()

    status = "pass" if witness is None else "fail"
    return CheckResult(tag, ring.id, rank, seed, status, witness)


# ---- projective-bundle extension ----


class ProjectiveBundleRing:
    """The base ring with a degree-1 class xi adjoined.

    Elements are vectors (a_0..a_{n-1}) of base elements standing for
    sum a_i xi^i; the defining relation
        xi^n + c_1 xi^{n-1} + ... + c_n = 0
    rewrites every higher power of xi back into that basis, so the
    extension is by construction a free module of rank n over the base.
    """

    def __init__(self, base: ToyRing, bundle: ToyBundle):
        self.base = base
        self.bundle = bundle
        self.rank = bundle.rank

    def element(self, coefficients: Sequence) -> "ProjectiveElement":
        coeffs = list(coefficients)
        if len(coeffs) > self.rank:
            coeffs = self._reduce(coeffs)
        while len(coeffs) < self.rank:
            coeffs.append(self.base.zero())
        return ProjectiveElement(self, tuple(coeffs))

    def zero(self) -> "ProjectiveElement":
        return self.element([])

    def one(self) -> "ProjectiveElement":
        return self.element([self.base.one()])

    def inject(self, a) -> "ProjectiveElement":
        return self.element([a])

    def xi(self) -> "ProjectiveElement":
        return self.element([self.base.zero(), self.base.one()])

    def _reduce(self, coeffs: list) -> list:
        n = self.rank
        classes = self.bundle.classes
        for k in range(len(coeffs) - 1, n - 1, -1):
            head = coeffs[k]
            coeffs[k] = self.base.zero()
            for i in range(1, n + 1):
                coeffs[k - i] = coeffs[k - i] - classes[i - 1] * head
        return coeffs[:n]

    def relation_residue(self) -> "ProjectiveElement":
        """xi^n + c_1 xi^{n-1} + ... + c_n, reduced; zero by construction."""
        n = self.rank
        raw = [self.base.zero()] * (n + 1)
        raw[n] = self.base.one()
        for i in range(1, n + 1):
            raw[n - i] = raw[n - i] + self.bundle.classes[i - 1]
        return self.element(raw)

    def graded_dimension(self, d: int) -> int:
        """dim of the degree-d piece: sum of base dims shifted by deg xi^i = i."""
        return sum(self.base.graded_dimension(d - i) for i in range(self.rank))


class ProjectiveElement:
    __slots__ = ("ext", "coefficients")

    def __init__(self, ext: ProjectiveBundleRing, coefficients: tuple):
        self.ext = ext
        self.coefficients = coefficients

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coefficients)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ext.inject(self.ext.base.one() * Fraction(other))
        if not isinstance(other, ProjectiveElement):
            return NotImplemented
        return self.ext.element(
            [a + b for a, b in zip(self.coefficients, other.coefficients)]
        )

    __radd__ = __add__

    def __neg__(self):
        return self.ext.element([-a for a in self.coefficients])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ext.inject(self.ext.base.one() * Fraction(other))
        if not isinstance(other, ProjectiveElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ext.element([a * Fraction(other) for a in self.coefficients])
        if not isinstance(other, ProjectiveElement):
            return NotImplemented
        n = self.ext.rank
        raw = [self.ext.base.zero()] * (2 * n - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                raw[i + j] = raw[i + j] + a * b
        return self.ext.element(raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ext.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectiveElement):
            return NotImplemented
        return self.ext is other.ext and all(
            a == b for a, b in zip(self.coefficients, other.coefficients)
        )

    __hash__ = None  # type: ignore[assignment]

    def ring_one(self) -> "ProjectiveElement":
        return self.ext.one()

    def __repr__(self) -> str:
        return f"ProjectiveElement({self.coefficients!r})"


def projective_bundle_ring(ring: ToyRing, bundle: ToyBundle) -> ProjectiveBundleRing:
    """Adjoin the class xi of the bundle's projectivization to the base ring."""
    if bundle.rank < 1:
        raise ValueError("rank must be >= 1")
    return ProjectiveBundleRing(ring, bundle)
