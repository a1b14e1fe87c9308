"""Exact sparse multivariate polynomials over the rationals.

An MPoly is a dict from exponent tuples to nonzero Fraction coefficients,
keyed to an ordered VarTable of (name, degree) pairs.  Degrees are weights:
a Chern-class variable c_i has degree i, so the weighted degree of a term is
the dot product of its exponent tuple with the variable degrees, and all
truncation bounds are weighted.  Coefficients are fractions.Fraction, which
already guarantees lowest terms, a positive denominator and arbitrary
precision; there is no floating point anywhere in this package.

Two MPoly values over the same table are equal iff their term dicts are
equal (canonical form: zero coefficients are never stored).  The canonical
term order, used for serialization and rendering, is ascending weighted
degree, then ascending lexicographic on exponent tuples.

The JSON form is
    {"vars": [{"name": "c1", "degree": 1}, ...],
     "terms": [{"coeff": "p/q", "exps": [a1, ...]}, ...]}
with terms in canonical order and coefficients as lowest-terms strings
("3", "-1/4"); a denominator of 1 is omitted on output but accepted on
input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from redchern.kernels import mul_trunc

Exponents = tuple[int, ...]


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p" or "p/q" in lowest terms."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse a "p" or "p/q" string; Fraction normalizes to lowest terms."""
    return Fraction(s)


class VarTable:
    """Ordered, immutable table of (name, weighted degree) pairs."""

    __slots__ = ("pairs", "names", "degrees", "_pos")

    def __init__(self, pairs: Iterable[tuple[str, int]]):
        clean = []
        for name, degree in pairs:
            name = str(name)
            degree = int(degree)
            if not name:
                raise ValueError("variable name must be nonempty")
            if degree < 1:
                raise ValueError(f"variable {name!r} must have positive degree")
            clean.append((name, degree))
        self.pairs: tuple[tuple[str, int], ...] = tuple(clean)
        self.names: tuple[str, ...] = tuple(n for n, _ in clean)
        self.degrees: tuple[int, ...] = tuple(d for _, d in clean)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._pos = {n: i for i, n in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarTable) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}:{d}" for n, d in self.pairs)
        return f"VarTable({inner})"

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def wdeg(self, exps: Exponents) -> int:
        """Weighted degree of an exponent tuple."""
        return sum(e * d for e, d in zip(exps, self.degrees))

    def unit(self, i: int) -> Exponents:
        return tuple(1 if j == i else 0 for j in range(len(self.names)))

    def extend(self, pairs: Iterable[tuple[str, int]]) -> "VarTable":
        return VarTable(self.pairs + tuple(pairs))


def x_vars(n: int) -> VarTable:
    """Chern-root style variables x1..xn, all of degree 1."""
    return VarTable((f"x{i}", 1) for i in range(1, n + 1))


def c_vars(n: int) -> VarTable:
    """Chern-class variables c1..cn with deg c_i = i."""
    return VarTable((f"c{i}", i) for i in range(1, n + 1))


def e_vars(n: int) -> VarTable:
    """Elementary symmetric variables e1..en with deg e_i = i."""
    return VarTable((f"e{i}", i) for i in range(1, n + 1))


def s_vars(n: int) -> VarTable:
    """Invariant generator variables s1..sn with deg s_i = i."""
    return VarTable((f"s{i}", i) for i in range(1, n + 1))


def u_vars(n: int) -> VarTable:
    """Pushforward class variables u2..un with deg u_i = i."""
    return VarTable((f"u{i}", i) for i in range(2, n + 1))


class MPoly:
    """Immutable sparse polynomial over a VarTable.

    Do not mutate `terms` after construction; all operations return new
    values, so instances can be shared freely across threads.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[Exponents, object] = ()):
        self.table = table
        nv = len(table)
        clean: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise ValueError(f"exponent tuple {exps} does not match {table!r}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if q:
                prev = clean.get(exps)
                total = q if prev is None else prev + q
                if total:
                    clean[exps] = total
                elif prev is not None:
                    del clean[exps]
        self.terms = clean

    # ---- constructors ----

    @classmethod
    def zero(cls, table: VarTable) -> "MPoly":
        return cls(table)

    @classmethod
    def one(cls, table: VarTable) -> "MPoly":
        return cls.constant(table, 1)

    @classmethod
    def constant(cls, table: VarTable, value) -> "MPoly":
        return cls(table, {(0,) * len(table): Fraction(value)})

    @classmethod
    def variable(cls, table: VarTable, name: str) -> "MPoly":
        return cls(table, {table.unit(table.index(name)): Fraction(1)})

    @classmethod
    def monomial(cls, table: VarTable, exps: Exponents, coeff=1) -> "MPoly":
        return cls(table, {tuple(exps): Fraction(coeff)})

    # ---- basic queries ----

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def weighted_degree(self) -> int | None:
        """Maximum weighted term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        wdeg = self.table.wdeg
        return max(wdeg(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical order: (weighted degree, exponents) ascending."""
        wdeg = self.table.wdeg
        return sorted(self.terms.items(), key=lambda item: (wdeg(item[0]), item[0]))

    def variables_used(self) -> tuple[str, ...]:
        used = [any(e[i] for e in self.terms) for i in range(len(self.table))]
        return tuple(n for n, u in zip(self.table.names, used) if u)

    # ---- arithmetic ----

    def _check_table(self, other: "MPoly") -> None:
        if self.table != other.table:
            raise ValueError(
                f"mismatched variable tables: {self.table!r} vs {other.table!r}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.table, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_table(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            total = c if prev is None else prev + c
            if total:
                out[e] = total
            elif prev is not None:
                del out[e]
        p = MPoly.__new__(MPoly)
        p.table = self.table
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly.__new__(MPoly)
        p.table = self.table
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.table, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            p = MPoly.__new__(MPoly)
            p.table = self.table
            p.terms = {e: c * q for e, c in self.terms.items()} if q else {}
            return p
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.table, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def mul_truncated(self, other: "MPoly", cap: int | None) -> "MPoly":
        """Product with every term of weighted degree > cap discarded.

        cap=None means the full product.
        """
        if not isinstance(other, MPoly):
            raise ValueError("mul_truncated expects an MPoly")
        self._check_table(other)
        if cap is not None and cap < 0:
            raise ValueError("cap must be None or >= 0")
        raw = mul_trunc(
            self.terms, other.terms, self.table.degrees, -1 if cap is None else cap
        )
        p = MPoly.__new__(MPoly)
        p.table = self.table
        p.terms = raw
        return p

    def truncate(self, cap: int) -> "MPoly":
        """Drop every term of weighted degree > cap."""
        wdeg = self.table.wdeg
        p = MPoly.__new__(MPoly)
        p.table = self.table
        p.terms = {e: c for e, c in self.terms.items() if wdeg(e) <= cap}
        return p

    def graded_component(self, d: int) -> "MPoly":
        """Sum of the terms of weighted degree exactly d."""
        if d < 0:
            raise ValueError("degree must be >= 0")
        wdeg = self.table.wdeg
        p = MPoly.__new__(MPoly)
        p.table = self.table
        p.terms = {e: c for e, c in self.terms.items() if wdeg(e) == d}
        return p

    # ---- substitution and evaluation ----

    def substitute(self, assignment: Mapping[str, "MPoly"]) -> "MPoly":
        """Ring-homomorphic image under name -> MPoly.

        Every variable occurring in self must be assigned, and all images
        must share one variable table.
        """
        images: dict[int, MPoly] = {}
        target: VarTable | None = None
        for name, img in assignment.items():
            if not isinstance(img, MPoly):
                raise ValueError(f"image of {name!r} is not an MPoly")
            if target is None:
                target = img.table
            elif img.table != target:
                raise ValueError("assignment images use mismatched variable tables")
            if name in self.table.names:
                images[self.table.index(name)] = img
        for name in self.variables_used():
            if self.table.index(name) not in images:
                raise ValueError(f"variable {name!r} is not assigned")
        if target is None:
            target = self.table
        result = MPoly.zero(target)
        pow_cache: dict[tuple[int, int], MPoly] = {}
        for exps, coeff in self.terms.items():
            term = MPoly.constant(target, coeff)
            for i, e in enumerate(exps):
                if not e:
                    continue
                key = (i, e)
                power = pow_cache.get(key)
                if power is None:
                    power = images[i] ** e
                    pow_cache[key] = power
                term = term * power
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object], one):
        """Evaluate in any commutative ring.

        values maps occurring variable names to ring elements; `one` is the
        ring identity.  Ring elements must support +, * between themselves
        and * by Fraction.
        """
        indexed: dict[int, object] = {}
        for name in self.variables_used():
            if name not in values:
                raise ValueError(f"variable {name!r} has no value")
            indexed[self.table.index(name)] = values[name]
        total = one * Fraction(0)
        pow_cache: dict[tuple[int, int], object] = {}
        for exps, coeff in self.terms.items():
            term = one * coeff
            for i, e in enumerate(exps):
                if not e:
                    continue
                key = (i, e)
                power = pow_cache.get(key)
                if power is None:
                    power = indexed[i]
                    for _ in range(e - 1):
                        power = power * indexed[i]
                    pow_cache[key] = power
                term = term * power
            total = total + term
        return total

    def ring_one(self) -> "MPoly":
        """The identity of this value's ring (cf. toy-ring elements)."""
        return MPoly.one(self.table)

    # ---- table plumbing ----

    def with_table(self, table: VarTable) -> "MPoly":
        """Reinterpret over a same-length table (variable renaming)."""
        if len(table) != len(self.table):
            raise ValueError("replacement table has different length")
        return MPoly(table, self.terms)

    def embed(self, table: VarTable) -> "MPoly":
        """Inject into a larger table containing this one's names."""
        pos = [table.index(n) for n in self.table.names]
        nv = len(table)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            big = [0] * nv
            for p, e in zip(pos, exps):
                big[p] = e
            out[tuple(big)] = coeff
        p = MPoly.__new__(MPoly)
        p.table = table
        p.terms = out
        return p

    # ---- serialization ----

    def to_json_obj(self) -> dict:
        return {
            "vars": [{"name": n, "degree": d} for n, d in self.table.pairs],
            "terms": [
                {"coeff": format_rational(c), "exps": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MPoly":
        table = VarTable((v["name"], v["degree"]) for v in obj["vars"])
        return cls(
            table,
            {tuple(t["exps"]): parse_rational(t["coeff"]) for t in obj["terms"]},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def loads(cls, s: str) -> "MPoly":
        return cls.from_json_obj(json.loads(s))

    def __repr__(self) -> str:
        return f"MPoly({render_text(self)})"

    def __str__(self) -> str:
        return render_text(self)


def _split_name(name: str) -> tuple[str, str]:
    """Split a trailing integer index off a variable name ("c12" -> ("c", "12"))."""
    i = len(name)
    while i > 0 and name[i - 1].isdigit():
        i -= 1
    return name[:i], name[i:]


_LATEX_NAMES = {"xi": r"\xi"}


def _name_text(name: str) -> str:
    head, idx = _split_name(name)
    return f"{head}_{idx}" if head and idx else name


def _name_latex(name: str) -> str:
    if name in _LATEX_NAMES:
        return _LATEX_NAMES[name]
    head, idx = _split_name(name)
    if head and idx:
        return f"{head}_{idx}" if len(idx) == 1 else f"{head}_{{{idx}}}"
    return name


def _render(p: MPoly, name_of, coeff_of, pow_of) -> str:
    if not p.terms:
        return "0"
    parts: list[str] = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(p.table.names, exps):
            if e == 0:
                continue
            v = name_of(name)
            factors.append(v if e == 1 else v + pow_of(e))
        mono = " ".join(factors)
        mag = abs(coeff)
        if not mono:
            body = coeff_of(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{coeff_of(mag)} {mono}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def render_text(p: MPoly) -> str:
    """Plain-text rendering in canonical term order, e.g. "c_2 - 1/3 c_1^2"."""
    return _render(p, _name_text, format_rational, lambda e: f"^{e}")


def render_latex(p: MPoly) -> str:
    """LaTeX rendering in canonical term order, e.g. "c_2 - \\frac{1}{3} c_1^2"."""

    def coeff_of(q: Fraction) -> str:
        if q.denominator == 1:
            return str(q.numerator)
        return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"

    def pow_of(e: int) -> str:
        return f"^{e}" if e < 10 else f"^{{{e}}}"

    return _render(p, _name_latex, coeff_of, pow_of)
