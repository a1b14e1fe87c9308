"""Named verification suites over the symbolic and toy-ring checks.

Each suite returns CheckResult records; the CLI serializes them as JSON
lines.  Symbolic suites run in the free polynomial rings and report under
ring id "symbolic"; the toy-ring suite specializes every universal identity
to seeded random bundles over a small catalog of rings.  Results are sorted,
so reports are deterministic for a given seed regardless of any execution
interleaving.
"""

from __future__ import annotations

from redchern import chern, oracle, symfun, universal
from redchern.kernels import expand_linear_chain
from redchern.oracle import CheckResult
from redchern.poly import MPoly, c_vars, x_vars

SUITE_NAMES = (
    "formula-agreement",
    "twist",
    "c1-zero",
    "phi-roundtrip",
    "positivity",
    "triangularity",
    "toy-rings",
)

SYMBOLIC = "symbolic"

# Catalog for the transfer suite: rings with nontrivial pieces in the class
# degrees, rich enough that random bundles rarely vanish outright.
TOY_RING_SPECS = (
    {
        "id": "nilpotent-line",
        "generators": [["h", 1]],
        "relations": [{"h": 6}],
        "top_degree": 10,
    },
    {
        "id": "two-lines",
        "generators": [["a", 1], ["b", 1]],
        "relations": [{"a": 3}, {"b": 4}],
        "top_degree": 10,
    },
    {
        "id": "mixed-degrees",
        "generators": [["h", 1], ["g", 2]],
        "relations": [{"h": 4}, {"g": 3}],
        "top_degree": 10,
    },
)

TOY_SEED_COUNT = 20


def _result(identity, rank, ok, witness=None, ring=SYMBOLIC, seed=0) -> CheckResult:
    return CheckResult(
        identity, ring, rank, seed, "pass" if ok else "fail", witness
    )


def _diff_witness(lhs: MPoly, rhs: MPoly):
    diff = lhs - rhs
    return None if diff.is_zero() else diff


def suite_formula_agreement(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Closed binomial formula against the root definition, exactly."""
    results = []
    for n in range(2, max_rank + 1):
        for r in range(1, n + 1):
            witness = _diff_witness(
                chern.reduced_chern_formula(n, r), chern.reduced_chern_roots(n, r)
            )
            results.append(_result("formula-agreement", n, witness is None, witness))
    return results


def suite_twist(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Substituting twisted classes into a reduced class must eliminate t."""
    results = []
    for n in range(2, max_rank + 1):
        twisted = chern.twist(chern.ChernVector.free(n), "t")
        target = twisted.table
        assignment = {f"c{i}": twisted.classes[i - 1] for i in range(1, n + 1)}
        for r in range(1, n + 1):
            rc = chern.reduced_chern_roots(n, r)
            lhs = rc.substitute(assignment)
            witness = _diff_witness(lhs, rc.embed(target))
            results.append(_result("twist", n, witness is None, witness))
    return results


def suite_c1_zero(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Setting c_1 = 0 in a reduced class must leave the plain class."""
    results = []
    for n in range(2, max_rank + 1):
        table = c_vars(n)
        assignment = {"c1": MPoly.zero(table)}
        for i in range(2, n + 1):
            assignment[f"c{i}"] = MPoly.variable(table, f"c{i}")
        for r in range(1, n + 1):
            lhs = chern.reduced_chern_roots(n, r).substitute(assignment)
            rhs = assignment[f"c{r}"] if r > 1 else MPoly.zero(table)
            witness = _diff_witness(lhs, rhs)
            results.append(_result("c1-zero", n, witness is None, witness))
    return results


def suite_phi_roundtrip(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """phi_i at the symmetric-power classes must return the reduced classes."""
    results = []
    for n in range(2, max_rank + 1):
        f_classes = chern.sym_power_det_inverse_chern(n, n)
        results.append(
            _result("c1F-zero", n, f_classes[0].is_zero(), None if f_classes[0].is_zero() else f_classes[0])
        )
        recovered = universal.brauer_reduced(n, f_classes[1:])
        for i in range(2, n + 1):
            witness = _diff_witness(recovered[i - 2], chern.reduced_chern_roots(n, i))
            results.append(_result("phi-roundtrip", n, witness is None, witness))
    return results


def suite_positivity(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Every s_i must expand with nonnegative monomial-basis coefficients."""
    results = []
    for n in range(2, max_rank + 1):
        roots = universal.y_roots(n)
        product = MPoly(x_vars(n), expand_linear_chain(roots.compositions, n, n))
        for i in range(1, n + 1):
            coords = symfun.monomial_coefficients(product.graded_component(i))
            bad = {
                lam: c for lam, c in coords.coeffs.items() if c < 0
            }
            witness = None
            if bad:
                witness = symfun.SymPolyInBasis("m", bad).expand(n)
            results.append(_result("positivity", n, not bad, witness))
    return results


def suite_triangularity(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Leading structure of the s-system, and of the e-to-m change of basis."""
    results = []
    for n in range(2, max_rank + 1):
        ups = universal.solve_psi(n)
        ok = all(c > 0 for c in ups.lead) and ups.lead[0] == ups.count
        ok = ok and all(
            len(lam) >= 2 and lam.weight == r for (r, lam) in ups.d
        )
        results.append(_result("triangularity", n, ok))
        ok_em = True
        for d in range(1, min(n + 2, 7)):
            for lam in symfun.partitions_of(d, n):
                if lam.parts and lam.parts[0] > n:
                    continue
                coords = symfun.elementary_to_monomial(lam, n)
                conj = lam.conjugate()
                if coords.coefficient(conj) != 1:
                    ok_em = False
                for mu in coords.coeffs:
                    if mu != conj and symfun.compare_order(mu, conj) >= 0:
                        ok_em = False
        results.append(_result("triangularity-e-to-m", n, ok_em))
    return results


def suite_toy_rings(max_rank: int, seed: int = 0) -> list[CheckResult]:
    """Specialize every universal identity over the toy-ring catalog."""
    results = []
    for spec in TOY_RING_SPECS:
        ring = oracle.make_toy_ring(spec)
        for n in range(2, max_rank + 1):
            for tag in oracle.IDENTITY_TAGS:
                for k in range(TOY_SEED_COUNT):
                    results.append(
                        oracle.check_identity(tag, ring, n, seed + k)
                    )
    return results


_SUITES = {
    "formula-agreement": suite_formula_agreement,
    "twist": suite_twist,
    "c1-zero": suite_c1_zero,
    "phi-roundtrip": suite_phi_roundtrip,
    "positivity": suite_positivity,
    "triangularity": suite_triangularity,
    "toy-rings": suite_toy_rings,
}


def run_suite(name: str, max_rank: int = 4, seed: int = 0) -> list[CheckResult]:
    if name == "all":
        return run_all(max_rank, seed)
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    results = _SUITES[name](max_rank, seed)
    results.sort(key=lambda r: (r.identity, r.ring, r.rank, r.seed))
    return results


def run_all(max_rank: int = 4, seed: int = 0) -> list[CheckResult]:
    results = []
    for name in SUITE_NAMES:
        results.extend(_SUITES[name](max_rank, seed))
    results.sort(key=lambda r: (r.identity, r.ring, r.rank, r.seed))
    return results
