import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rackcount import fixtures
from rackcount.cohomology import (
    Cochain,
    chi,
    cochain_from_support,
    delta1,
    delta2,
    diagonalize_mod,
    dumps_cochain,
    enumerate_reduced_cocycles,
    is_cocycle,
    is_n_reduced,
    loads_cochain,
    solve_homogeneous_mod,
    zero_cochain,
)
from rackcount.racks import make_constant_action, make_ts_rack, trivial_quandle, validate_rack


def small_racks(max_n=4):
    """Every rack with at most three elements, plus some of order four."""
    out = []
    for n in range(1, 4):
        for flat in itertools.product(range(1, n + 1), repeat=n * n):
            table = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
            if oracles.is_rack(table):
                out.append(validate_rack(table))
    if max_n >= 4:
        out += [
            fixtures.rack("m_t"),
            make_constant_action([2, 3, 4, 1]),
            make_constant_action([2, 1, 4, 3]),
            make_ts_rack(4, 1, 2),
            make_ts_rack(4, 3, 2),
            trivial_quandle(4),
        ]
    return out


SMALL = small_racks()


def test_small_rack_census():
    # racks of order 1, 2, 3 found by brute force
    counts = [sum(r.n == n for r in SMALL) for n in (1, 2, 3)]
    assert counts[:2] == [1, 2]
    assert counts[2] > 0


class TestChi:
    def test_single_entry(self):
        c = chi(4, 13, 1, 2)
        assert c(1, 2) == 1
        assert int(c.values.sum()) == 1

    def test_char_two(self):
        assert (chi(3, 2, 1, 2) + chi(3, 2, 1, 2)).is_zero()

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            chi(3, 5, 4, 1)

    def test_reduced_representatives(self):
        c = Cochain(5, np.array([[-1, 7], [12, 0]]))
        assert c.values.tolist() == [[4, 2], [2, 0]]


class TestDelta:
    def test_delta1_constant(self, m_t):
        f = Cochain(7, np.full(4, 3))
        assert delta1(m_t, f).is_zero()

    def test_delta1_trivial_quandle(self):
        f = Cochain(5, np.array([0, 1, 4]))
        assert delta1(trivial_quandle(3), f).is_zero()

    def test_delta1_m12(self, m12):
        f = Cochain(2, np.array([0, 1]))
        assert delta1(m12, f).values.tolist() == [[1, 1], [1, 1]]

    def test_delta2_zero(self, m_t):
        assert delta2(m_t, zero_cochain(4, 13)).is_zero()

    def test_delta1_formula(self, t_ex6):
        rng = np.random.default_rng(3)
        f = Cochain(11, rng.integers(0, 11, 7))
        d = delta1(t_ex6, f)
        for x in range(1, 8):
            for y in range(1, 8):
                assert d(x, y) == (f(t_ex6.op(x, y)) - f(x)) % 11

    def test_delta2_formula(self, t_ex6):
        rng = np.random.default_rng(4)
        phi = Cochain(6, rng.integers(0, 6, (7, 7)))
        d = delta2(t_ex6, phi)
        op = t_ex6.op
        for x, y, z in itertools.product(range(1, 8), repeat=3):
            want = phi(x, y) - phi(x, z) + phi(op(x, y), z) - phi(op(x, z), op(y, z))
            assert d(x, y, z) == want % 6

    @pytest.mark.parametrize("m", [2, 3])
    def test_delta_squared_exhaustive(self, m):
        for rack in SMALL:
            for vals in itertools.product(range(m), repeat=rack.n):
                f = Cochain(m, np.array(vals))
                assert delta2(rack, delta1(rack, f)).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.sampled_from([4, 6, 9, 13]))
    def test_delta_squared_random(self, seed, m):
        rng = np.random.default_rng(seed)
        rack = [fixtures.rack("t_ex6"), fixtures.rack("z8_3_2"), make_ts_rack(6, 5, 2)][seed % 3]
        f = Cochain(m, rng.integers(0, m, rack.n))
        assert delta2(rack, delta1(rack, f)).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(-5, 5), st.integers(-5, 5))
    def test_linearity(self, seed, a, b):
        rack = fixtures.rack("m_t")
        rng = np.random.default_rng(seed)
        m = 12
        p, q = (Cochain(m, rng.integers(0, m, (4, 4))) for _ in range(2))
        assert delta2(rack, a * p + b * q) == a * delta2(rack, p) + b * delta2(rack, q)
        f, g = (Cochain(m, rng.integers(0, m, 4)) for _ in range(2))
        assert delta1(rack, a * f + b * g) == a * delta1(rack, f) + b * delta1(rack, g)


class TestConditions:
    def test_known_cocycle(self, m_t, phi13):
        assert is_cocycle(m_t, phi13)
        assert is_n_reduced(m_t, phi13)

    def test_chi_11_not_cocycle(self, m_t):
        phi = chi(4, 13, 1, 1)
        assert not is_cocycle(m_t, phi)
        # witness found by scanning every triple
        d = delta2(m_t, phi)
        assert d(1, 1, 2) != 0 or d.support()

    def test_reduced_examples(self, m_t):
        assert is_n_reduced(m_t, chi(4, 13, 1, 3))
        assert not is_n_reduced(m_t, chi(4, 13, 3, 3))

    @pytest.mark.parametrize("rack", [r for r in SMALL if r.is_quandle()], ids=lambda r: f"n{r.n}")
    def test_quandle_reduced_iff_diagonal_vanishes(self, rack):
        rng = np.random.default_rng(rack.n)
        for _ in range(30):
            vals = rng.integers(0, 3, (rack.n, rack.n))
            if rng.random() < 0.5:
                np.fill_diagonal(vals, 0)
            phi = Cochain(3, vals)
            assert is_n_reduced(rack, phi) == (not np.diag(phi.values).any())

    def test_coboundary_shift_preserves_reducedness(self, m_t, phi13):
        for vals in itertools.product(range(3), repeat=4):
            f = Cochain(13, np.array(vals))
            shifted = phi13 + delta1(m_t, f)
            assert is_cocycle(m_t, shifted)
            assert is_n_reduced(m_t, shifted)


class TestLinearAlgebra:
    def test_diagonalize_counts_match_brute_force(self):
        rng = np.random.default_rng(0)
        for m in (2, 4, 6, 12, 13):
            a = rng.integers(-5, 6, (6, 4))
            _, V = diagonalize_mod(a, m)
            det = round(np.linalg.det(np.array(V, dtype=np.int64))) % m
            assert math.gcd(det, m) == 1
            brute = sum(
                1
                for x in itertools.product(range(m), repeat=4)
                if not (a @ np.array(x) % m).any()
            )
            assert solve_homogeneous_mod(a, m).count == brute

    def test_solution_iteration_distinct_and_valid(self):
        a = np.array([[2, 4, 0], [0, 6, 3]])
        m = 12
        sol = solve_homogeneous_mod(a, m)
        vecs = [tuple(v) for v in sol]
        assert len(vecs) == len(set(vecs)) == sol.count
        for v in vecs:
            assert not (a @ np.array(v) % m).any()


BRUTE_CASES = [("m12", 2), ("trivial1", 5), ("m12", 3), ("trivial3", 2)]


class TestEnumerate:
    @pytest.mark.parametrize("name,m", BRUTE_CASES)
    def test_count_matches_brute_force(self, name, m):
        rack = fixtures.rack(name)
        sols = enumerate_reduced_cocycles(rack, m)
        assert sols.count == oracles.count_reduced_cocycles(rack.to_list(), m)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_all_two_element_racks(self, m):
        for rack in (r for r in SMALL if r.n == 2):
            sols = enumerate_reduced_cocycles(rack, m)
            assert sols.count == oracles.count_reduced_cocycles(rack.to_list(), m)

    def test_three_element_racks_mod_2(self):
        for rack in (r for r in SMALL if r.n == 3):
            sols = enumerate_reduced_cocycles(rack, 2)
            assert sols.count == oracles.count_reduced_cocycles(rack.to_list(), 2)

    def test_frozen_counts(self):
        # frozen from the brute-force oracle above
        assert enumerate_reduced_cocycles(fixtures.rack("m12"), 2).count == 2
        assert enumerate_reduced_cocycles(fixtures.rack("trivial1"), 5).count == 1

    def test_trivial_one_is_zero_space(self):
        sols = enumerate_reduced_cocycles(trivial_quandle(1), 7)
        assert sols.count == 1
        assert [b.is_zero() for b in sols.basis] == [True]

    def test_m_t_contains_known_cocycle(self, m_t, phi13):
        sols = enumerate_reduced_cocycles(m_t, 13)
        members = {c for c in sols.solutions()}
        assert phi13 in members
        assert len(members) == sols.count

    @pytest.mark.parametrize("name,m", [("m_t", 13), ("m_t", 4), ("t_ex6", 2), ("m123", 6), ("z8_3_2", 2)])
    def test_members_are_admissible(self, name, m):
        rack = fixtures.rack(name)
        sols = enumerate_reduced_cocycles(rack, m)
        for phi in sols.basis:
            assert is_cocycle(rack, phi) and is_n_reduced(rack, phi)
        for phi in sols.solutions(limit=200):
            assert is_cocycle(rack, phi) and is_n_reduced(rack, phi)

    def test_composite_modulus_count(self):
        # Z_4 is not a field: the count need not be a power of 4
        rack = fixtures.rack("m12")
        sols = enumerate_reduced_cocycles(rack, 4)
        assert sols.count == oracles.count_reduced_cocycles(rack.to_list(), 4)

    def test_limit(self, m_t):
        sols = enumerate_reduced_cocycles(m_t, 13)
        assert len(list(sols.solutions(limit=5))) == 5


class TestFormat:
    def test_round_trip(self, phi13):
        assert loads_cochain(dumps_cochain(phi13)) == phi13

    def test_shipped_cochain(self, phi13):
        assert fixtures.cochain("phi13_mt") == phi13
        assert dumps_cochain(phi13).splitlines()[:2] == ["4 13", "0 1 0 1"]
