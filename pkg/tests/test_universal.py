"""The triangular system, psi/phi, and the pushforward-class recipe."""

import random
from fractions import Fraction
from math import comb

import pytest

from redchern import oracle
from redchern.kernels import expand_linear_chain
from redchern.chern import reduced_chern_roots, sym_power_det_inverse_chern
from redchern.poly import MPoly, c_vars, e_vars, s_vars, u_vars, x_vars
from redchern.symfun import (
    Partition,
    elementary_symmetric,
    monomial_coefficients,
    monomial_symmetric,
    partitions_of,
)
from redchern.universal import (
    brauer_reduced,
    compute_phi,
    s_in_elementary,
    solve_psi,
    y_roots,
)

from . import naive


class TestYRoots:
    def test_counts(self):
        for n, count in ((2, 3), (3, 10), (4, 35), (5, 126)):
            roots = y_roots(n)
            assert roots.count == count == comb(2 * n - 1, n)

    def test_rank_two_forms(self):
        roots = y_roots(2)
        assert roots.compositions == ((2, 0), (0, 2), (1, 1))
        forms = roots.forms()
        assert forms[0] == 2 * MPoly.variable(x_vars(2), "x1")

    def test_composition_invariants(self):
        for n in (2, 3, 4):
            comps = y_roots(n).compositions
            assert all(sum(m) == n for m in comps)
            assert all(min(m) >= 0 for m in comps)

    def test_permutation_stability(self):
        comps = set(y_roots(3).compositions)
        swapped = {(m[1], m[0], m[2]) for m in comps}
        assert swapped == comps

    def test_rank_bounds(self):
        with pytest.raises(ValueError):
            y_roots(1)
        with pytest.raises(ValueError):
            y_roots(7)


class TestSInElementary:
    def test_rank_two_values(self):
        s1, s2 = s_in_elementary(2)
        evt = e_vars(2)
        assert s1 == 3 * MPoly.variable(evt, "e1")
        assert s2 == 4 * MPoly.variable(evt, "e2") + 2 * MPoly.variable(evt, "e1") ** 2

    def test_rank_two_against_naive_subsets(self):
        forms = [naive.nlinear(2, m) for m in ((2, 0), (0, 2), (1, 1))]
        s1, s2 = s_in_elementary(2)
        for r, s_e in ((1, s1), (2, s2)):
            expanded = s_e.substitute(
                {f"e{i}": elementary_symmetric(i, 2) for i in (1, 2)}
            )
            assert expanded.terms == naive.nsigma_of_forms(forms, r, 2)

    def test_lead_is_root_count(self):
        for n in (2, 3, 4):
            s_list = s_in_elementary(n)
            evt = e_vars(n)
            assert s_list[0] == comb(2 * n - 1, n) * MPoly.variable(evt, "e1")

    def test_homogeneity(self):
        for n in (2, 3):
            for r, s_e in enumerate(s_in_elementary(n), start=1):
                assert s_e.graded_component(r) == s_e


class TestSolvePsi:
    def test_rank_two_pinned(self):
        ups = solve_psi(2)
        svt = s_vars(2)
        s1, s2 = MPoly.variable(svt, "s1"), MPoly.variable(svt, "s2")
        assert ups.psi[0] == Fraction(1, 3) * s1
        assert ups.psi[1] == Fraction(1, 4) * s2 - Fraction(1, 18) * s1**2
        assert ups.lead == (Fraction(3), Fraction(4))
        assert ups.d == {(2, Partition((1, 1))): Fraction(2)}

    def test_rank_three_pinned(self):
        # coefficients confirmed by subset-sum expansion of the ten forms
        ups = solve_psi(3)
        assert ups.lead == (Fraction(10), Fraction(15), Fraction(27))
        assert ups.d == {
            (2, Partition((1, 1))): Fraction(40),
            (3, Partition((2, 1))): Fraction(111),
            (3, Partition((1, 1, 1))): Fraction(82),
        }

    def test_rank_three_against_naive_subsets(self):
        forms = [naive.nlinear(3, m) for m in y_roots(3).compositions]
        e1 = naive.nsigma_vars(1, 3)
        e2 = naive.nsigma_vars(2, 3)
        e3 = naive.nsigma_vars(3, 3)
        s2 = naive.nsigma_of_forms(forms, 2, 3)
        assert s2 == naive.nadd(
            naive.nscale(e2, 15), naive.nscale(naive.nmul(e1, e1), 40)
        )
        s3 = naive.nsigma_of_forms(forms, 3, 3)
        expected = naive.nadd(
            naive.nadd(
                naive.nscale(e3, 27), naive.nscale(naive.nmul(e2, e1), 111)
            ),
            naive.nscale(naive.npow(e1, 3), 82),
        )
        assert s3 == expected

    def test_round_trip_to_rank_four(self):
        for n in (2, 3, 4):
            ups = solve_psi(n)
            s_list = s_in_elementary(n)
            substitution = {f"s{i}": s_list[i - 1] for i in range(1, n + 1)}
            for r in range(1, n + 1):
                back = ups.psi[r - 1].substitute(substitution)
                assert back == MPoly.variable(e_vars(n), f"e{r}")

    def test_leads_positive_and_triangular(self):
        for n in (2, 3, 4):
            ups = solve_psi(n)
            assert all(c > 0 for c in ups.lead)
            assert ups.lead[0] == ups.count
            for (r, lam) in ups.d:
                assert lam.weight == r and len(lam) >= 2

    def test_positivity_of_s(self):
        for n in (2, 3, 4):
            roots = y_roots(n)
            product = MPoly.one(x_vars(n))
            for form in roots.forms():
                product = product.mul_truncated(1 + form, n)
            for i in range(1, n + 1):
                coords = monomial_coefficients(product.graded_component(i))
                assert all(c >= 0 for c in coords.coeffs.values())

    def test_zero_lead_is_an_internal_error(self, monkeypatch):
        # a vanishing leading coefficient would falsify the whole solve; the
        # guard must trip rather than divide by zero or return garbage
        from redchern import universal as umod
        from redchern.universal import InternalInconsistencyError

        broken = [
            MPoly.zero(e_vars(2)),
            s_in_elementary(2)[1],
        ]
        monkeypatch.setattr(umod, "s_in_elementary", lambda n, r_max=None: broken)
        with pytest.raises(InternalInconsistencyError):
            umod.solve_psi(2)

    @pytest.mark.large
    def test_rank_five_pipeline(self):
        ups = solve_psi(5)
        assert ups.count == 126
        assert all(c > 0 for c in ups.lead)
        assert ups.lead[0] == 126
        s_list = s_in_elementary(5)
        substitution = {f"s{i}": s_list[i - 1] for i in range(1, 6)}
        for r in range(1, 6):
            assert ups.psi[r - 1].substitute(substitution) == MPoly.variable(
                e_vars(5), f"e{r}"
            )
        product = MPoly(
            x_vars(5), expand_linear_chain(y_roots(5).compositions, 5, 5)
        )
        for i in range(1, 6):
            coords = monomial_coefficients(product.graded_component(i))
            assert all(c >= 0 for c in coords.coeffs.values())


class TestComputePhi:
    def test_rank_two_pinned(self):
        ups = compute_phi(2)
        assert ups.phi[0] == Fraction(1, 4) * MPoly.variable(u_vars(2), "u2")

    def test_no_constant_term(self):
        for n in (2, 3, 4):
            for phi in compute_phi(n).phi:
                assert phi.constant_term() == 0
                zero = {f"u{j}": MPoly.zero(u_vars(n)) for j in range(2, n + 1)}
                assert phi.substitute(zero).is_zero()

    def test_main_round_trip(self):
        for n in (2, 3, 4):
            f_classes = sym_power_det_inverse_chern(n, n)
            recovered = brauer_reduced(n, f_classes[1:])
            for i in range(2, n + 1):
                assert recovered[i - 2] == reduced_chern_roots(n, i)

    def test_json_shape(self):
        obj = compute_phi(2).to_json_obj()
        assert set(obj) == {"n", "N", "psi", "phi", "lead"}
        assert obj["n"] == 2 and obj["N"] == 3
        assert obj["lead"] == ["3", "4"]
        assert MPoly.from_json_obj(obj["phi"][0]) == compute_phi(2).phi[0]


class TestBrauerReduced:
    def test_rank_two_pinned(self):
        table = c_vars(2)
        c1, c2 = MPoly.variable(table, "c1"), MPoly.variable(table, "c2")
        [out] = brauer_reduced(2, [4 * c2 - c1**2])
        assert out == c2 - Fraction(1, 4) * c1**2

    def test_zero_inputs_give_zero(self):
        for n in (2, 3, 4):
            zeros = [MPoly.zero(u_vars(n))] * (n - 1)
            assert all(v.is_zero() for v in brauer_reduced(n, zeros))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            brauer_reduced(3, [MPoly.zero(u_vars(3))])

    def test_toy_ring_comparison(self):
        # 3-fold comparison in a concrete ring: phi applied to toy F-classes
        # equals the toy evaluation of the symbolic reduced classes
        ring = oracle.make_toy_ring(
            {
                "id": "cmp",
                "generators": [["a", 1], ["b", 1]],
                "relations": [{"a": 4}, {"b": 3}],
                "top_degree": 9,
            }
        )
        bundle = oracle.random_bundle(ring, 3, seed=5)
        values = {f"c{i}": bundle.classes[i - 1] for i in (1, 2, 3)}
        one = ring.one()
        f_classes = sym_power_det_inverse_chern(3, 3)
        toy_f = [f_classes[k].evaluate(values, one) for k in (1, 2)]
        recovered = brauer_reduced(3, toy_f)
        for i in (2, 3):
            expected = reduced_chern_roots(3, i).evaluate(values, one)
            assert recovered[i - 2] == expected


class TestGeneration:
    def test_random_invariants_rewrite_through_s(self):
        # any symmetric polynomial is a polynomial in s_1..s_n: rewrite in
        # the e-basis, replace e_i by psi_i(s), expand s back, compare
        from redchern.symfun import express_in_elementary

        rng = random.Random(17)
        for n in (2, 3, 4):
            ups = solve_psi(n)
            s_list = s_in_elementary(n)
            pool = [lam for d in range(1, n + 1) for lam in partitions_of(d, n)]
            for _ in range(5):
                p = MPoly.zero(x_vars(n))
                for lam in rng.sample(pool, min(3, len(pool))):
                    p = p + monomial_symmetric(lam, n) * rng.randint(-3, 3)
                q_e = express_in_elementary(p)
                q_s = q_e.substitute(
                    {f"e{i}": ups.psi[i - 1] for i in range(1, n + 1)}
                )
                back_e = q_s.substitute(
                    {f"s{i}": s_list[i - 1] for i in range(1, n + 1)}
                )
                expanded = back_e.substitute(
                    {f"e{i}": elementary_symmetric(i, n) for i in range(1, n + 1)}
                )
                assert expanded == p
