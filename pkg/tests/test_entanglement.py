"""Coupling coefficients, residue calculus, and the resolvent-chain algebra."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from stokes_isola.basis import Mode
from stokes_isola.entanglement import (
    MU_STAR,
    OMEGA_STAR,
    RESONANT_MODES,
    JetIndex,
    chain_apply,
    chain_bracket,
    ent_coeff,
    is_pole,
    op_bracket_right,
    project,
    residue,
    residue_contour,
)
from goldens import ENT_01_PLUS

LOW, HIGH = RESONANT_MODES

B10 = JetIndex(1, 0)
B01 = JetIndex(0, 1)
B02 = JetIndex(0, 2)
B03 = JetIndex(0, 3)
B04 = JetIndex(0, 4)
B11 = JetIndex(1, 1)
B12 = JetIndex(1, 2)
B13 = JetIndex(1, 3)

ALL_JETS = [B10, B01, B02, B03, B04, B11, B12, B13]

#: modes with flat frequency well separated from 3/4, plus the resonant pair
MODE_POOL = [Mode(j, s) for j in range(-3, 5) for s in (1, -1)]


def _supports(ell: JetIndex, kappa: int) -> bool:
    i, n = ell.mu_order, ell.eps_order
    if (i, n) == (1, 0):
        return kappa == 0
    if i == 0 and 1 <= n <= 4 or i == 1 and 1 <= n <= 3:
        return abs(kappa) <= n and (kappa - n) % 2 == 0
    return False


class TestJetIndex:
    def test_validation(self):
        with pytest.raises(ValueError):
            JetIndex(0, 0)
        with pytest.raises(ValueError):
            JetIndex(3, 1)
        with pytest.raises(ValueError):
            JetIndex(1, 5)


class TestEntCoeff:
    def test_frozen_value(self):
        got = ent_coeff(B01, +1, LOW, +1)
        assert got == pytest.approx(ENT_01_PLUS, abs=1e-14)

    def test_outside_support_is_exact_zero(self):
        src = Mode(1, 1)
        assert ent_coeff(B01, 2, src, 1) == 0
        assert ent_coeff(B02, 1, src, -1) == 0
        assert ent_coeff(B10, 1, src, 1) == 0
        assert ent_coeff(B04, 3, src, 1) == 0
        assert ent_coeff(B13, 2, src, -1) == 0

    def test_undefined_at_zero_symbol(self):
        with pytest.raises(ValueError):
            ent_coeff(B01, 1, Mode(0, 1), 1, mu=0.0)

    def test_conjugation_symmetry_sweep(self):
        # conj of (j,s) -> (j+k,s') coupling equals the reversed coupling
        mu = 0.25
        for ell in ALL_JETS:
            for j in range(-6, 7):
                for kappa in range(-4, 5):
                    for s in (1, -1):
                        for sp in (1, -1):
                            lhs = ent_coeff(ell, kappa, Mode(j, s), sp, mu=mu)
                            rhs = ent_coeff(ell, -kappa, Mode(j + kappa, sp), s, mu=mu)
                            assert abs(lhs.conjugate() - rhs) <= 1e-13

    @given(
        elli=st.sampled_from(ALL_JETS),
        j=st.integers(min_value=-10, max_value=10),
        kappa=st.integers(min_value=-4, max_value=4),
        s=st.sampled_from([1, -1]),
        sp=st.sampled_from([1, -1]),
    )
    def test_conjugation_symmetry_property(self, elli, j, kappa, s, sp):
        lhs = ent_coeff(elli, kappa, Mode(j, s), sp)
        rhs = ent_coeff(elli, -kappa, Mode(j + kappa, sp), s)
        assert abs(lhs.conjugate() - rhs) <= 1e-13


class TestIsPole:
    def test_resonant_pair(self):
        assert is_pole(LOW)
        assert is_pole(HIGH)

    def test_non_poles(self):
        for mode in [Mode(0, 1), Mode(2, -1), Mode(1, 1), Mode(1, -1), Mode(-1, -1), Mode(3, 1)]:
            assert not is_pole(mode)

    def test_float_fallback(self):
        assert is_pole(LOW, 0.25, 0.75)
        assert not is_pole(Mode(1, 1), 0.25, 0.75)


class TestResidue:
    def test_empty_path_rejected(self):
        with pytest.raises(ValueError):
            residue([])

    def test_single_mode(self):
        assert residue([LOW]) == 1.0
        assert residue([Mode(1, 1)]) == 0.0

    def test_no_pole_vanishes(self):
        assert residue([Mode(1, 1), Mode(-1, -1), Mode(3, 1)]) == 0.0

    def test_all_pole_vanishes(self):
        assert residue([LOW, HIGH]) == 0.0
        assert residue([LOW, LOW, HIGH]) == 0.0

    def test_one_pole_product(self):
        from stokes_isola.stokes import omega

        path = [LOW, Mode(1, 1), Mode(-1, -1)]
        expected = 1.0
        for m in path[1:]:
            expected /= omega(m.j, m.sigma, 0.25) - 0.75
        assert residue(path) == pytest.approx(expected, rel=1e-14)

    def test_two_pole_formula(self):
        from stokes_isola.stokes import omega

        path = [LOW, Mode(1, 1), HIGH]
        d = omega(1, 1, 0.25) - 0.75
        assert residue(path) == pytest.approx(-1.0 / d**2, rel=1e-14)

    def test_three_poles_rejected(self):
        with pytest.raises(ValueError):
            residue([LOW, HIGH, LOW, Mode(1, 1)])

    def test_permutation_invariance_fixed(self):
        rng = random.Random(7)
        for path in (
            [LOW, Mode(1, 1), Mode(2, 1)],
            [LOW, Mode(1, -1), HIGH, Mode(-1, -1)],
            [Mode(1, 1), Mode(3, 1), Mode(-2, -1)],
        ):
            base = residue(path)
            for _ in range(6):
                shuffled = path[:]
                rng.shuffle(shuffled)
                assert residue(shuffled) == pytest.approx(base, abs=1e-13)

    @settings(max_examples=60)
    @given(
        path=st.lists(st.sampled_from(MODE_POOL), min_size=1, max_size=4),
        seed=st.integers(min_value=0, max_value=2**16),
    )
    def test_permutation_invariance_property(self, path, seed):
        flags = sum(is_pole(m) for m in path)
        if flags >= 3 and flags < len(path):
            return  # outside the supported case analysis
        shuffled = path[:]
        random.Random(seed).shuffle(shuffled)
        assert residue(shuffled) == pytest.approx(residue(path), abs=1e-12)

    def test_contour_agreement_random_paths(self):
        rng = random.Random(20260819)
        checked = 0
        while checked < 50:
            path = [rng.choice(MODE_POOL) for _ in range(rng.randint(1, 4))]
            npoles = sum(is_pole(m) for m in path)
            if npoles > 2 and npoles < len(path):
                continue
            got = residue_contour(path)
            want = residue(path)
            assert abs(got.imag) <= 1e-8
            assert abs(got.real - want) <= 1e-8
            checked += 1


class TestProject:
    def test_branches(self):
        vec = {LOW: 1.0 + 0j, Mode(1, 1): 2.0 + 0j, HIGH: 3j}
        assert project(vec, None) == vec
        assert project(vec, "P0") == {LOW: 1.0 + 0j, HIGH: 3j}
        assert project(vec, "Q0") == {Mode(1, 1): 2.0 + 0j}
        with pytest.raises(ValueError):
            project(vec, "P1")


class TestChainAlgebra:
    def test_empty_chain_rejected(self):
        with pytest.raises(ValueError):
            chain_apply([], LOW)

    def test_all_pole_two_mode_path_vanishes(self):
        # the direct low -> high hop sits entirely on the pole set, so the
        # resonant component dies; the (2,-) companion hop survives
        vec = chain_apply([(B02, +2)], LOW)
        assert abs(vec.get(HIGH, 0j)) == 0.0
        assert abs(vec[Mode(2, -1)]) > 0.0

    def test_projector_noop_off_resonance(self):
        # a single +1 hop cannot land on the resonant pair
        assert chain_apply([(B01, +1)], LOW, "Q0") == chain_apply([(B01, +1)], LOW)
        assert chain_apply([(B01, +1)], LOW, "P0") == {}

    def test_length_one_bracket_is_bare_coupling(self):
        got = chain_bracket([(B01, +1)], LOW, Mode(1, 1))
        assert got == pytest.approx(ent_coeff(B01, +1, LOW, 1), abs=1e-15)

    def test_mismatched_harmonics_vanish(self):
        assert chain_bracket([(B01, +1)], LOW, Mode(2, 1)) == 0

    def _random_dual_pair(self, rng: random.Random):
        """One application-order chain between resonant modes plus its reverse."""
        src = rng.choice(RESONANT_MODES)
        tgt = rng.choice(RESONANT_MODES)
        q = rng.randint(1, 3)
        pool = [
            (ell, kappa)
            for ell in ALL_JETS
            for kappa in range(-3, 4)
            if _supports(ell, kappa)
        ]
        for _ in range(200):
            tail = [rng.choice(pool) for _ in range(q)]
            k_first = tgt.j - src.j - sum(k for _, k in tail)
            first_choices = [ell for ell in ALL_JETS if _supports(ell, k_first)]
            if not first_choices or abs(src.j + k_first) > 5:
                continue
            chain = [(rng.choice(first_choices), k_first)] + tail
            # keep intermediate harmonics small so magnitudes stay tame
            js = [src.j]
            for _, k in chain:
                js.append(js[-1] + k)
            if max(abs(j) for j in js) > 5:
                continue
            return chain, src, tgt
        raise AssertionError("failed to draw a harmonically consistent chain")

    def test_dual_bracket_equality_random_chains(self):
        # pairing the chain against the target equals pairing the source
        # against the reversed, harmonic-negated chain
        rng = random.Random(1234)
        checked = 0
        while checked < 30:
            chain, src, tgt = self._random_dual_pair(rng)
            try:
                left = chain_bracket(chain, src, tgt)
                reversed_tail = [(ell, -k) for ell, k in reversed(chain[1:])]
                right = op_bracket_right(chain[0], src, chain_apply(reversed_tail, tgt))
            except ValueError:
                continue  # path touched the unsupported residue case
            assert abs(left - right) <= 1e-12 * max(1.0, abs(left))
            checked += 1

    def test_dual_bracket_documented_example(self):
        left = chain_bracket([(B01, +1), (B01, +1)], LOW, HIGH)
        right = op_bracket_right((B01, +1), LOW, chain_apply([(B01, -1)], HIGH))
        assert abs(left - right) <= 1e-13


class TestExactConstants:
    def test_stars(self):
        assert float(MU_STAR) == 0.25
        assert float(OMEGA_STAR) == 0.75
        assert LOW == Mode(0, -1)
        assert HIGH == Mode(2, 1)

    def test_resonant_frequencies_collide(self):
        from stokes_isola.stokes import omega

        assert omega(LOW.j, LOW.sigma, 0.25) == pytest.approx(0.75, abs=1e-15)
        assert omega(HIGH.j, HIGH.sigma, 0.25) == pytest.approx(0.75, abs=1e-15)
