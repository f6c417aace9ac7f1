"""Spin decomposition, tensor products, genus counts, and Jordan censuses."""

import random
from fractions import Fraction

import pytest

from gvmot import linalg
from gvmot.errors import NotRepresentationError, ShapeMismatchError, VirtualInputError
from gvmot.lefschetz import (
    BispinContent,
    GradedNilpotent,
    JordanCensus,
    SpinMultiset,
    census_count,
    census_from_bispin,
    genus_count,
    genus_decompose,
    jordan_census,
    realize_bispin,
    spin_decompose,
    tensor,
    torus_rep,
)
from gvmot.verify import random_bispin, random_graded_nilpotent, random_spins


def tensor_weight_oracle(x: SpinMultiset, y: SpinMultiset) -> SpinMultiset:
    """Brute-force tensor product: convolve weight dimensions, then decompose."""
    if x.is_zero() or y.is_zero():
        return SpinMultiset.zero()
    conv = {}
    for u, du in x.weight_dims().items():
        for w, dw in y.weight_dims().items():
            conv[u + w] = conv.get(u + w, 0) + du * dw
    return spin_decompose(conv)


class TestSpinDecompose:
    def test_single_spin_one_string(self):
        assert spin_decompose({-2: 1, 0: 1, 2: 1}) == SpinMultiset({2: 1})

    def test_genus_one_weights(self):
        assert spin_decompose({-1: 1, 0: 2, 1: 1}) == SpinMultiset({1: 1, 0: 2})

    def test_trivial_action(self):
        assert spin_decompose({0: 5}) == SpinMultiset({0: 5})

    def test_symmetry_violation(self):
        with pytest.raises(NotRepresentationError):
            spin_decompose({-1: 1, 0: 1})

    def test_unimodality_violation(self):
        with pytest.raises(NotRepresentationError):
            spin_decompose({-2: 1, 0: 0, 2: 1})

    def test_roundtrip_random(self):
        rng = random.Random(11)
        for _ in range(300):
            x = random_spins(rng)
            assert spin_decompose(x.weight_dims()) == x


class TestTensor:
    def test_half_times_half(self):
        half = SpinMultiset({1: 1})
        assert tensor(half, half) == SpinMultiset({2: 1, 0: 1})

    def test_torus_squared(self):
        expected = SpinMultiset({2: 1, 1: 4, 0: 5})
        got = tensor(torus_rep(1), torus_rep(1))
        assert got == expected
        assert got == tensor_weight_oracle(torus_rep(1), torus_rep(1))

    def test_trivial_identity(self):
        rng = random.Random(12)
        unit = SpinMultiset({0: 1})
        for _ in range(50):
            x = random_spins(rng)
            assert tensor(x, unit) == x

    def test_oracle_agreement(self):
        rng = random.Random(13)
        for _ in range(200):
            x, y = random_spins(rng, 4, 3), random_spins(rng, 4, 3)
            assert tensor(x, y) == tensor_weight_oracle(x, y)

    def test_dimension_multiplicative(self):
        rng = random.Random(14)
        for _ in range(500):
            x, y = random_spins(rng, 4, 3), random_spins(rng, 4, 3)
            assert tensor(x, y).dimension() == x.dimension() * y.dimension()


class TestTorusRep:
    def test_genus_zero(self):
        assert torus_rep(0) == SpinMultiset({0: 1})

    def test_genus_one(self):
        assert torus_rep(1) == SpinMultiset({1: 1, 0: 2})

    def test_genus_two_frozen_from_oracle(self):
        # frozen from the brute-force tensor oracle
        assert torus_rep(2) == SpinMultiset({2: 1, 1: 4, 0: 5})
        assert torus_rep(2) == tensor_weight_oracle(torus_rep(1), torus_rep(1))

    def test_dimension_power_of_four(self):
        for g in range(6):
            assert torus_rep(g).dimension() == 4**g


class TestGenusDecompose:
    def test_point(self):
        out = genus_decompose(BispinContent({(0, 0): 1}))
        assert out == {0: SpinMultiset({0: 1})}

    def test_torus_basis_element(self):
        v = BispinContent({(1, 0): 1, (0, 0): 2})
        out = genus_decompose(v)
        assert out == {1: SpinMultiset({0: 1})}

    def test_left_spin_one_triangular_solve(self):
        # (1)_L = I_2 - 4 I_1 + 3 I_0, frozen from the triangular oracle
        out = genus_decompose(BispinContent({(2, 0): 1}))
        assert out == {
            0: SpinMultiset({0: 3}),
            1: SpinMultiset({0: -4}),
            2: SpinMultiset({0: 1}),
        }

    def test_reconstruction_random_virtual(self):
        rng = random.Random(15)
        for _ in range(300):
            v = random_bispin(rng, 5, 4, virtual=True)
            rebuilt = {}
            for g, right in genus_decompose(v).items():
                for two_jl, ml in torus_rep(g).items():
                    for two_jr, mr in right.items():
                        key = (two_jl, two_jr)
                        rebuilt[key] = rebuilt.get(key, 0) + ml * mr
            assert BispinContent(rebuilt) == v


class TestGenusCount:
    def test_point(self):
        pt = BispinContent({(0, 0): 1})
        assert [genus_count(pt, g) for g in range(3)] == [1, 0, 0]

    def test_left_spin_one(self):
        v = BispinContent({(2, 0): 1})
        assert [genus_count(v, g) for g in (0, 1, 2)] == [3, -4, 1]

    def test_vanishes_above_top_left_spin(self):
        rng = random.Random(16)
        for _ in range(100):
            v = random_bispin(rng, 4, 3)
            top = max(jl for (jl, _) in v.mult)
            assert genus_count(v, top + 1) == 0
            assert genus_count(v, top + 3) == 0


class TestJordanCensus:
    def test_zero_operator(self):
        op = GradedNilpotent({0: 4})
        assert jordan_census(op) == JordanCensus({(0, 1): 4})

    def test_identity_chain(self):
        op = GradedNilpotent({-2: 1, 0: 1, 2: 1}, {-2: [[1]], 0: [[1]]})
        assert jordan_census(op) == JordanCensus({(-2, 3): 1})

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            GradedNilpotent({0: 2, 2: 1}, {0: [[1], [1]]})

    def test_map_into_missing_degree_rejected_when_nonzero(self):
        with pytest.raises(ShapeMismatchError):
            GradedNilpotent({0: 1}, {0: [[1]]})

    def test_total_dimension(self):
        rng = random.Random(17)
        for _ in range(100):
            op = random_graded_nilpotent(rng)
            assert jordan_census(op).total_dimension() == op.dimension()

    def test_conjugation_invariance(self):
        rng = random.Random(18)
        for _ in range(40):
            op = random_graded_nilpotent(rng)
            basis = {d: linalg.random_invertible(rng, n) for d, n in op.dims.items()}
            assert jordan_census(op) == jordan_census(op.conjugate(basis))


class TestCensusFromBispin:
    def test_point(self):
        assert census_from_bispin(BispinContent({(0, 0): 1})) == JordanCensus({(0, 1): 1})

    def test_right_string_of_length_three(self):
        assert census_from_bispin(BispinContent({(0, 2): 1})) == JordanCensus({(-2, 3): 1})

    def test_left_spin_one_weights(self):
        got = census_from_bispin(BispinContent({(2, 0): 1}))
        assert got == JordanCensus({(-2, 1): 1, (0, 1): 1, (2, 1): 1})

    def test_virtual_rejected(self):
        with pytest.raises(VirtualInputError):
            census_from_bispin(BispinContent({(0, 0): -1}))

    def test_realize_matches(self):
        rng = random.Random(19)
        for _ in range(60):
            v = random_bispin(rng, 4, 2)
            assert jordan_census(realize_bispin(v)) == census_from_bispin(v)


class TestCensusCount:
    def test_point_validates_binomial_convention(self):
        # with the generalized binomial C(-1, 1) = -1 this would give 2
        assert census_count(JordanCensus({(0, 1): 1}), 0) == 1

    def test_matches_spin_route_on_left_spin_one(self):
        census = JordanCensus({(-2, 1): 1, (0, 1): 1, (2, 1): 1})
        assert [census_count(census, g) for g in (0, 1, 2)] == [3, -4, 1]

    def test_empty_census(self):
        for g in range(4):
            assert census_count(JordanCensus(), g) == 0

    def test_sign_convention_on_virtual_negative_degree(self):
        # census entries read off flattened polynomials may sit at negative
        # odd degrees; the sign is literal parity of alpha + g (convention pin)
        census = JordanCensus({(-1, 3): 1})
        assert census_count(census, 0) == -6
        assert census_count(JordanCensus({(-3, 1): 1}), 0) == 0

    def test_routes_agree_randomized(self):
        rng = random.Random(20)
        for _ in range(300):
            v = random_bispin(rng, 6, 5)
            census = census_from_bispin(v)
            for g in range(6):
                assert genus_count(v, g) == census_count(census, g)


class TestDenseOracle:
    def test_census_sizes_match_kernel_powers(self):
        from gvmot.verify import _dense_size_distribution

        rng = random.Random(21)
        for _ in range(40):
            op = random_graded_nilpotent(rng)
            sizes = {}
            for (_, l), n in jordan_census(op).items():
                sizes[l] = sizes.get(l, 0) + n
            assert sizes == _dense_size_distribution(op)


def build_from_strings(cells: dict[tuple[int, int], int]) -> GradedNilpotent:
    """Ground-truth operator: an explicit direct sum of strings.

    Basis slots are (string id, position); the operator sends each position
    to the next one along its string with coefficient 1.
    """
    slots: dict[int, list[tuple[int, int]]] = {}
    strings = []
    for (alpha, l), n in cells.items():
        for _ in range(n):
            strings.append((alpha, l))
    for sid, (alpha, l) in enumerate(strings):
        for pos in range(l):
            slots.setdefault(alpha + 2 * pos, []).append((sid, pos))
    dims = {d: len(v) for d, v in slots.items()}
    maps = {}
    for degree, basis in slots.items():
        target = slots.get(degree + 2)
        if not target:
            continue
        index = {slot: i for i, slot in enumerate(target)}
        mat = [[Fraction(0)] * len(basis) for _ in range(len(target))]
        for j, (sid, pos) in enumerate(basis):
            alpha, l = strings[sid]
            if pos + 1 < l:
                mat[index[(sid, pos + 1)]][j] = Fraction(1)
        maps[degree] = mat
    return GradedNilpotent(dims, maps)


class TestGroundTruthStrings:
    def random_cells(self, rng):
        cells = {}
        for _ in range(rng.randint(1, 5)):
            alpha = rng.randint(-4, 3)
            l = rng.randint(1, 4)
            cells[(alpha, l)] = cells.get((alpha, l), 0) + rng.randint(1, 2)
        return cells

    def test_census_recovers_chosen_strings(self):
        rng = random.Random(22)
        for _ in range(60):
            cells = self.random_cells(rng)
            op = build_from_strings(cells)
            assert jordan_census(op) == JordanCensus(cells)

    def test_census_survives_conjugation_of_ground_truth(self):
        rng = random.Random(23)
        for _ in range(60):
            cells = self.random_cells(rng)
            op = build_from_strings(cells)
            basis = {d: linalg.random_invertible(rng, n) for d, n in op.dims.items()}
            assert jordan_census(op.conjugate(basis)) == JordanCensus(cells)
