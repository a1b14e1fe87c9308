"""Universal polynomials tying reduced classes to symmetric-power classes.

For rank n, the C(2n-1, n) linear forms m_1 x_1 + ... + m_n x_n (over all
compositions m of n) have elementary symmetric polynomials s_1, s_2, ...
whose first n members generate the ring of symmetric polynomials: each s_r
is lead_r * e_r plus a combination of products of lower e's with lead_r > 0,
and back-substituting through that triangular system solves e_i as a
rational polynomial psi_i in s_1..s_n.

Setting s_1 to zero in psi_i gives phi_i(u_2..u_n); evaluated at the classes
of the twisted symmetric power of a bundle, phi_i returns the bundle's
reduced classes, which is what makes the recipe applicable to any
projective-space bundle through its pushforward classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from redchern import symfun
from redchern.chern import ensure_rank
from redchern.kernels import expand_linear_chain
from redchern.poly import MPoly, e_vars, format_rational, s_vars, u_vars, x_vars
from redchern.symfun import Partition


class InternalInconsistencyError(RuntimeError):
    """A structural fact the triangular solve relies on failed to hold."""


@dataclass(frozen=True)
class YRootSet:
    """The linear forms m_1 x_1 + ... + m_n x_n with m a composition of n."""

    rank: int
    compositions: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.compositions)

    def forms(self) -> list[MPoly]:
        table = x_vars(self.rank)
        return [
            MPoly(table, {table.unit(i): Fraction(m[i]) for i in range(self.rank) if m[i]})
            for m in self.compositions
        ]


def y_roots(n: int) -> YRootSet:
    """The root set at rank n: exactly C(2n-1, n) forms, n*x_i first."""
    ensure_rank(n)
    return YRootSet(n, symfun.root_compositions(n))


def s_in_elementary(n: int, r_max: int | None = None) -> list[MPoly]:
    """s_1..s_r_max in the elementary basis, expanded under a degree cap.

    Truncating the product of the 1 + y_i at degree r_max is exact for the
    graded pieces up to r_max, which are all that s_1..s_r_max need.
    """
    ensure_rank(n)
    if r_max is None:
        r_max = n
    if not 1 <= r_max <= n:
        raise ValueError(f"r_max {r_max} outside 1..{n}")
    roots = y_roots(n)
    product = MPoly(
        x_vars(n), expand_linear_chain(roots.compositions, n, r_max)
    )
    return [
        symfun.express_in_elementary(product.graded_component(r))
        for r in range(1, r_max + 1)
    ]


@dataclass(frozen=True)
class UniversalPolys:
    """The solved system at one rank.

    psi[i-1] expresses e_i in s_1..s_n; phi[i-2] is psi_i with s_1 = 0 and
    s_j renamed u_j; lead[r-1] is the (positive) coefficient of e_r in s_r,
    and d maps (r, lambda) to the coefficient of e_lambda in s_r for the
    remaining partitions lambda of r.
    """

    rank: int
    count: int
    psi: tuple[MPoly, ...]
    phi: tuple[MPoly, ...]
    lead: tuple[Fraction, ...]
    d: Mapping

    def to_json_obj(self) -> dict:
        return {
            "n": self.rank,
            "N": self.count,
            "psi": [p.to_json_obj() for p in self.psi],
            "phi": [p.to_json_obj() for p in self.phi],
            "lead": [format_rational(c) for c in self.lead],
        }


def _partition_from_e_exps(exps) -> Partition:
    parts = []
    for i, e in enumerate(exps):
        parts.extend([i + 1] * e)
    return Partition(sorted(parts, reverse=True))


def solve_psi(n: int) -> UniversalPolys:
    """Back-substitute the triangular system e_r = (s_r - lower terms)/lead_r.

    The round trip psi_i(s(e)) = e_i is verified exactly before returning.
    """
    s_list = s_in_elementary(n)
    evt = e_vars(n)
    svt = s_vars(n)
    solved: list[MPoly] = []
    leads: list[Fraction] = []
    dcoef: dict[tuple[int, Partition], Fraction] = {}
    for r in range(1, n + 1):
        s_e = s_list[r - 1]
        unit = evt.unit(r - 1)
        lead = s_e.coefficient(unit)
        if lead == 0:
            raise InternalInconsistencyError(
                f"s_{r} at rank {n} has no e_{r} component"
            )
        leads.append(lead)
        rest = s_e - MPoly.monomial(evt, unit, lead)
        for exps, coeff in rest.terms.items():
            dcoef[(r, _partition_from_e_exps(exps))] = coeff
        if rest.is_zero():
            rest_s = MPoly.zero(svt)
        else:
            rest_s = rest.substitute(
                {f"e{i}": solved[i - 1] for i in range(1, r)}
            )
        psi_r = (MPoly.variable(svt, f"s{r}") - rest_s) * (Fraction(1) / lead)
        solved.append(psi_r)
    substitution = {f"s{i}": s_list[i - 1] for i in range(1, n + 1)}
    for r in range(1, n + 1):
        back = solved[r - 1].substitute(substitution)
        if back != MPoly.variable(evt, f"e{r}"):
            raise InternalInconsistencyError(
                f"psi_{r} at rank {n} fails the round trip through s(e)"
            )
    return UniversalPolys(
        rank=n,
        count=comb(2 * n - 1, n),
        psi=tuple(solved),
        phi=(),
        lead=tuple(leads),
        d=dcoef,
    )


@lru_cache(maxsize=None)
def compute_phi(n: int) -> UniversalPolys:
    """Complete the solved system with phi_i = psi_i(0, u_2, ..., u_n)."""
    ups = solve_psi(n)
    uvt = u_vars(n)
    assignment = {"s1": MPoly.zero(uvt)}
    for j in range(2, n + 1):
        assignment[f"s{j}"] = MPoly.variable(uvt, f"u{j}")
    phi = tuple(ups.psi[i - 1].substitute(assignment) for i in range(2, n + 1))
    return UniversalPolys(
        rank=ups.rank,
        count=ups.count,
        psi=ups.psi,
        phi=phi,
        lead=ups.lead,
        d=ups.d,
    )


def brauer_reduced(n: int, pushforward_classes: Sequence) -> list:
    """Evaluate phi_2..phi_n at the classes of a pushforward bundle.

    The inputs are the degree-2..n classes, as elements of any commutative
    coefficient ring (MPoly values or toy-ring elements); when they are the
    classes of the twisted symmetric power of a bundle, the output is that
    bundle's reduced classes.
    """
    ups = compute_phi(n)
    if len(pushforward_classes) != n - 1:
        raise ValueError(
            f"rank {n} needs {n - 1} classes, got {len(pushforward_classes)}"
        )
    values = {f"u{j}": pushforward_classes[j - 2] for j in range(2, n + 1)}
    one = pushforward_classes[0].ring_one()
    return [ups.phi[i - 2].evaluate(values, one) for i in range(2, n + 1)]
