"""Phases, inclusion-exclusion decompositions, evaluation, and genus extraction."""

import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from gvmot.counting import (
    CentralCharge,
    ClassLattice,
    EvalModel,
    FreeHallElement,
    NumClass,
    counting_polynomial,
    evaluate,
    gv_from_polynomial,
    phase,
    same_phase_decompositions,
    semistable_exp,
    semistable_log,
)
from gvmot.errors import (
    AsymmetricDefectError,
    ConeNotPointedError,
    MissingAtomError,
    NotEffectiveError,
    NotPolynomialError,
    OddWeightedDegreeError,
    ResourceLimitError,
    ZeroChargeError,
)
from gvmot.laurent import LaurentPoly, RationalFn
from gvmot.motives import AbsMotive, over_point_from_betti, point_atom, smooth_from_betti, upsilon_rel
from gvmot.stacks import StackClass, quotient_by_special_group, upsilon_stack
from gvmot.verify import random_pointed_setup, random_effective


def rank1() -> tuple[ClassLattice, CentralCharge]:
    return ClassLattice(1, [(1,)]), CentralCharge([Fraction(0)], [Fraction(1)])


def decompositions_rank1_oracle(charge: CentralCharge, v: NumClass, k_bound: int = 6):
    """Brute-force ordered same-phase decompositions for the rank-1 lattice (1,).

    Enumerates candidate pieces over an integer grid and keeps exactly those
    proportional to v's charge with positive ratio, then recurses on the
    remainder.  Independent of the production enumeration.
    """
    re_v, im_v = charge.value(v)

    def same_phase(piece: NumClass) -> bool:
        re_p, im_p = charge.value(piece)
        if re_p == 0 and im_p == 0:
            return False
        if im_p * re_v != im_v * re_p:
            return False
        direction = im_p if im_p else -re_p
        reference = im_v if im_v else -re_v
        return (direction > 0) == (reference > 0)

    pieces = []
    for m in range(0, v.beta[0] + 1):
        for k in range(-k_bound, k_bound + 1):
            if m == 0 and k <= 0:
                continue
            p = NumClass((m,), k)
            if same_phase(p):
                pieces.append(p)

    found = []

    def recurse(rem_beta: int, rem_k: int, acc):
        if rem_beta == 0 and rem_k == 0 and acc:
            found.append(tuple(acc))
        for p in pieces:
            if p.beta[0] <= rem_beta and (p.beta[0] > 0 or rem_beta == 0):
                if p.beta[0] == 0 and not (0 < p.k <= rem_k):
                    continue
                if p.beta[0] > 0 or p.k <= rem_k:
                    acc.append(p)
                    recurse(rem_beta - p.beta[0], rem_k - p.k, acc)
                    acc.pop()

    recurse(v.beta[0], v.k, [])
    return sorted(set(found))


class TestPhase:
    def test_zero_dimensional_class_has_phase_one(self):
        lat, z = rank1()
        assert phase(z, NumClass((0,), 1)).exact_angle() == 1

    def test_pure_curve_class_has_phase_half(self):
        lat, z = rank1()
        assert phase(z, NumClass((3,), 0)).exact_angle() == Fraction(1, 2)

    def test_unit_euler_class_second_octant(self):
        lat, z = rank1()
        p = phase(z, NumClass((2,), 1))
        # Re Z = -1 < 0, Im Z > 0: strictly between 1/2 and 1
        assert p.exact_angle() is None
        assert p.re_sign < 0 and p.im_sign > 0
        assert p.in_unit_range()

    def test_negated_class_leaves_unit_range(self):
        lat, z = rank1()
        assert not phase(z, NumClass((-2,), -1)).in_unit_range()

    def test_zero_charge_rejected(self):
        lat, z = rank1()
        with pytest.raises(ZeroChargeError):
            phase(z, NumClass((0,), 0))

    def test_equality_is_proportionality(self):
        lat, z = rank1()
        assert phase(z, NumClass((1,), 1)) == phase(z, NumClass((2,), 2))
        assert phase(z, NumClass((1,), 1)) != phase(z, NumClass((2,), 1))


class TestDecompositions:
    def test_generator_has_single_decomposition(self):
        lat, z = rank1()
        e = NumClass((1,), 0)
        assert same_phase_decompositions(lat, z, e) == [(e,)]

    def test_double_class_matches_oracle(self):
        lat, z = rank1()
        v = NumClass((2,), 0)
        got = sorted(same_phase_decompositions(lat, z, v))
        assert got == decompositions_rank1_oracle(z, v)
        e = NumClass((1,), 0)
        assert got == sorted([(v,), (e, e)])

    def test_unit_euler_admits_no_splitting(self):
        lat, z = rank1()
        for m in (1, 2, 3):
            v = NumClass((m,), 1)
            assert same_phase_decompositions(lat, z, v) == [(v,)]

    def test_random_inputs_match_oracle(self):
        lat, z0 = rank1()
        rng = random.Random(51)
        for _ in range(40):
            b = tuple([Fraction(rng.randint(-1, 1))])
            z = CentralCharge(b, (Fraction(1),))
            v = NumClass((rng.randint(1, 4),), rng.randint(-3, 3))
            got = sorted(same_phase_decompositions(lat, z, v))
            assert got == decompositions_rank1_oracle(z, v)

    def test_phase_one_pieces_are_integer_compositions(self):
        lat, z = rank1()
        decomps = same_phase_decompositions(lat, z, NumClass((0,), 3))
        assert len(decomps) == 4  # compositions of 3
        for d in decomps:
            assert all(p.beta == (0,) and p.k > 0 for p in d)

    def test_composition_counts(self):
        # ordered decompositions of m over one generator: 2^{m-1}
        lat, z = rank1()
        for m in range(1, 8):
            assert len(same_phase_decompositions(lat, z, NumClass((m,), 0))) == 2 ** (m - 1)
            assert len(same_phase_decompositions(lat, z, NumClass((0,), m))) == 2 ** (m - 1)

    def test_not_effective(self):
        lat, z = rank1()
        with pytest.raises(NotEffectiveError):
            same_phase_decompositions(lat, z, NumClass((-1,), 1))
        with pytest.raises(NotEffectiveError):
            same_phase_decompositions(lat, z, NumClass((0,), -2))

    def test_cone_not_pointed(self):
        lat = ClassLattice(1, [(1,)])
        with pytest.raises(ConeNotPointedError):
            lat.check_positive((Fraction(-1),))
        with pytest.raises(ConeNotPointedError):
            same_phase_decompositions(lat, CentralCharge([0], [-1]), NumClass((1,), 0))

    def test_resource_limit(self):
        lat, z = rank1()
        with pytest.raises(ResourceLimitError):
            same_phase_decompositions(lat, z, NumClass((4,), 0), max_compositions=2)


class TestLogExp:
    def test_generator_log_is_single_letter(self):
        lat, z = rank1()
        e = NumClass((1,), 0)
        assert semistable_log(lat, z, e) == FreeHallElement.letter(e)

    def test_double_class_log(self):
        lat, z = rank1()
        e = NumClass((1,), 0)
        v = NumClass((2,), 0)
        expected = FreeHallElement(
            {
                (v,): RationalFn.one(),
                (e, e): RationalFn.from_fraction(Fraction(-1, 2)),
            }
        )
        assert semistable_log(lat, z, v) == expected

    def test_double_class_exp(self):
        lat, z = rank1()
        e = NumClass((1,), 0)
        v = NumClass((2,), 0)
        log_table = {
            v: FreeHallElement.letter(v),
            e: FreeHallElement.letter(e),
        }
        expected = FreeHallElement(
            {
                (v,): RationalFn.one(),
                (e, e): RationalFn.from_fraction(Fraction(1, 2)),
            }
        )
        assert semistable_exp(lat, z, v, log_table=log_table) == expected

    def test_roundtrip_random_cones(self):
        rng = random.Random(52)
        for _ in range(40):
            lattice, charge = random_pointed_setup(rng)
            beta = random_effective(rng, lattice, charge.omega, bound=5)
            if beta is None:
                continue
            v = NumClass(beta, rng.randint(-2, 2))
            assert semistable_exp(lattice, charge, v) == FreeHallElement.letter(v)

    def test_unit_euler_log_is_delta(self):
        rng = random.Random(53)
        for _ in range(40):
            lattice, _ = random_pointed_setup(rng)
            charge = CentralCharge((Fraction(0),) * lattice.rank, tuple(Fraction(1) for _ in range(lattice.rank)))
            try:
                lattice.check_positive(charge.omega)
            except ConeNotPointedError:
                continue
            beta = random_effective(rng, lattice, charge.omega, bound=5)
            if beta is None:
                continue
            v = NumClass(beta, 1)
            assert semistable_log(lattice, charge, v) == FreeHallElement.letter(v)


def conifold_model() -> tuple[ClassLattice, CentralCharge, EvalModel]:
    lat, z = rank1()
    gm = AbsMotive.multiplicative_group()
    point_class = quotient_by_special_group(point_atom(), gm)
    atoms = {}
    for m in (1, 2, 3):
        for k in (1, -1):
            atoms[NumClass((m,), k)] = point_class if m == 1 else StackClass.zero()
    return lat, z, EvalModel(atoms)


class TestEvaluate:
    def test_single_letter_is_stack_value(self):
        lat, z, model = conifold_model()
        v = NumClass((1,), 1)
        value = evaluate(FreeHallElement.letter(v), model)
        assert value == upsilon_stack(model.atom(v))

    def test_commutator_vanishes(self):
        v1 = NumClass((1,), 0)
        v2 = NumClass((2,), 1)
        x = smooth_from_betti([1, 0, 1], 1)
        model = EvalModel(
            {v1: StackClass.of_variety(x), v2: StackClass.of_variety(point_atom())},
            [(v1, v2, 3)],
        )
        f1, f2 = FreeHallElement.letter(v1), FreeHallElement.letter(v2)
        assert evaluate(f1.commutator(f2), model) == RationalFn.zero()

    def test_two_letter_word_hand_expansion(self):
        # defect 3 contributes t^6; the default combinator multiplies values
        v1 = NumClass((1,), 0)
        v2 = NumClass((2,), 1)
        x = smooth_from_betti([1, 0, 1, 0, 1], 2)
        model = EvalModel(
            {v1: StackClass.of_variety(x), v2: StackClass.of_variety(x)},
            [(v1, v2, 3)],
        )
        word = FreeHallElement({(v1, v2): RationalFn.one()})
        expected = RationalFn.from_poly(
            LaurentPoly.t(6) * upsilon_rel(x) * upsilon_rel(x)
        )
        assert evaluate(word, model) == expected

    def test_missing_atom(self):
        lat, z, model = conifold_model()
        with pytest.raises(MissingAtomError):
            evaluate(FreeHallElement.letter(NumClass((4,), 1)), model)

    def test_asymmetric_defect_rejected(self):
        v1, v2 = NumClass((1,), 0), NumClass((2,), 1)
        with pytest.raises(AsymmetricDefectError):
            EvalModel({}, [(v1, v2, 1), (v2, v1, 2)])

    def test_word_permutation_invariance(self):
        rng = random.Random(54)
        classes = [NumClass((i + 1,), i % 2) for i in range(3)]
        x = smooth_from_betti([1, 0, 1], 1)
        defects = []
        for i, a in enumerate(classes):
            for b in classes[i:]:
                defects.append((a, b, rng.randint(-2, 3)))
        model = EvalModel({c: StackClass.of_variety(x) for c in classes}, defects)
        for _ in range(30):
            word = [rng.choice(classes) for _ in range(rng.randint(2, 4))]
            shuffled = word[:]
            rng.shuffle(shuffled)
            lhs = evaluate(FreeHallElement({tuple(word): RationalFn.one()}), model)
            rhs = evaluate(FreeHallElement({tuple(shuffled): RationalFn.one()}), model)
            assert lhs == rhs


class TestCountingPolynomial:
    def test_conifold_unit_class(self):
        lat, z, model = conifold_model()
        assert counting_polynomial(lat, z, NumClass((1,), 1), model) == RationalFn.one()

    def test_conifold_multiples_vanish(self):
        lat, z, model = conifold_model()
        for m in (2, 3):
            assert counting_polynomial(lat, z, NumClass((m,), 1), model) == RationalFn.zero()

    def test_negative_rule(self):
        lat, z, model = conifold_model()
        for m in (1, 2, 3):
            direct = counting_polynomial(lat, z, NumClass((m,), 1), model)
            flipped = counting_polynomial(lat, z, NumClass((-m,), -1), model)
            assert direct == flipped

    def test_off_cone_class_counts_zero(self):
        lat, z, model = conifold_model()
        assert counting_polynomial(lat, z, NumClass((0,), 0), model) == RationalFn.zero()

    def test_betti_shadow(self):
        lat, z = rank1()
        rng = random.Random(55)
        gm = AbsMotive.multiplicative_group()
        for _ in range(10):
            b2, b3 = rng.randint(0, 100), rng.randint(0, 100)
            bettis = [1, 0, b2, b3, b2, 0, 1]
            atom = over_point_from_betti(bettis)
            v = NumClass((0,), 1)
            model = EvalModel({v: quotient_by_special_group(atom, gm)})
            value = counting_polynomial(lat, z, v, model)
            assert value == RationalFn.from_poly(
                LaurentPoly({(i, 0): b for i, b in enumerate(bettis) if b})
            )

    def test_missing_atom_propagates(self):
        lat, z = rank1()
        model = EvalModel({})
        with pytest.raises(MissingAtomError):
            counting_polynomial(lat, z, NumClass((2,), 1), model)

    def test_charge_independence_on_example_data(self):
        # transformation coefficients under charge changes are out of scope;
        # invariance of the count is checked on the worked examples instead
        lat, _, model = conifold_model()
        reference = {}
        for b in (Fraction(0), Fraction(1, 2), Fraction(-1, 3)):
            for w in (Fraction(1), Fraction(2), Fraction(5, 2)):
                z = CentralCharge([b], [w])
                for m in (-2, -1, 1, 2):
                    value = counting_polynomial(lat, z, NumClass((m,), 1), model)
                    if m in reference:
                        assert value == reference[m], (b, w, m)
                    else:
                        reference[m] = value

        gm = AbsMotive.multiplicative_group()
        atom = over_point_from_betti([1, 0, 4, 10, 4, 0, 1])
        v = NumClass((0,), 1)
        shadow_model = EvalModel({v: quotient_by_special_group(atom, gm)})
        values = {
            counting_polynomial(lat, CentralCharge([b], [w]), v, shadow_model).num
            for b in (Fraction(0), Fraction(1, 2))
            for w in (Fraction(1), Fraction(3))
        }
        assert len(values) == 1


class TestMultiLetterEvaluation:
    def setup_model(self):
        lat, z = rank1()
        gm = AbsMotive.multiplicative_group()
        point_class = quotient_by_special_group(point_atom(), gm)
        v1 = NumClass((1,), 1)
        v2 = NumClass((2,), 2)
        model = EvalModel({v1: point_class, v2: point_class}, [(v1, v1, -1)])
        return lat, z, model, v1, v2

    def test_decomposable_class_log(self):
        lat, z, model, v1, v2 = self.setup_model()
        log_elem = semistable_log(lat, z, v2)
        assert set(log_elem.words) == {(v2,), (v1, v1)}
        assert log_elem.words[(v1, v1)] == RationalFn.from_fraction(Fraction(-1, 2))

    def test_counting_polynomial_through_two_letter_words(self):
        # hand composition of the stratum formula:
        # P = (L-1) * [ atom(v2) - 1/2 * L^{e(v1,v1)} * atom(v1)^2 ]
        lat, z, model, v1, v2 = self.setup_model()
        gm_poly = LaurentPoly.t(2) - LaurentPoly.one()
        atom_value = RationalFn(LaurentPoly.one(), gm_poly)
        lefschetz_inverse = RationalFn.from_poly(LaurentPoly.t(-2))
        expected = RationalFn.from_poly(gm_poly) * (
            atom_value
            - RationalFn.from_fraction(Fraction(1, 2)) * lefschetz_inverse * atom_value * atom_value
        )
        got = counting_polynomial(lat, z, v2, model)
        assert got == expected

    def test_rank_mismatch_rejected(self):
        lat, z, model, v1, v2 = self.setup_model()
        with pytest.raises(ValueError):
            counting_polynomial(lat, z, NumClass((1, 0), 1), model)
        with pytest.raises(ValueError):
            same_phase_decompositions(lat, z, NumClass((1, 0), 1))


class TestCombinators:
    def test_default_product_on_point_bases_matches_convolution(self):
        from gvmot.counting import census_convolution, product_combinator

        values = [
            upsilon_rel(over_point_from_betti([1, 0, 1])),
            upsilon_rel(over_point_from_betti([1, 2, 1])),
        ]
        assert product_combinator(values) == census_convolution(values)

    def test_convolution_differs_on_long_cells(self):
        from gvmot.counting import census_convolution, product_combinator
        from gvmot.lefschetz import JordanCensus
        from gvmot.motives import Atom

        # a single size-2 string spanning degrees -1, +1: value s; the tensor
        # of two such strings splits as one size-3 plus one size-1 string
        cell = upsilon_rel(Atom(name="string", dim=1, census=JordanCensus({(-1, 2): 1})))
        assert cell == LaurentPoly.s(1)
        conv = census_convolution([cell, cell])
        assert conv == LaurentPoly({(0, 2): 1, (2, 0): 1})
        assert product_combinator([cell, cell]) == LaurentPoly.s(2)

    def test_convolution_is_symmetric(self):
        from gvmot.counting import census_convolution

        a = upsilon_rel(smooth_from_betti([1, 0, 1, 0, 1], 2))
        b = upsilon_rel(smooth_from_betti([1, 0, 1], 1))
        assert census_convolution([a, b]) == census_convolution([b, a])

    def test_model_accepts_custom_combinator(self):
        from gvmot.counting import census_convolution

        v = NumClass((1,), 1)
        atom = StackClass.of_variety(point_atom())
        model = EvalModel({v: atom}, combine=census_convolution)
        assert evaluate(FreeHallElement.letter(v), model) == RationalFn.one()


def test_concurrent_evaluations_agree():
    # pure call paths: parallel (class, genus) computations share nothing
    from concurrent.futures import ThreadPoolExecutor

    lat = ClassLattice(1, [(1,)])
    z = CentralCharge([Fraction(0)], [Fraction(1)])
    gm = AbsMotive.multiplicative_group()
    point_class = quotient_by_special_group(point_atom(), gm)
    atoms = {
        NumClass((m,), k): point_class if m == 1 else StackClass.zero()
        for m in (1, 2, 3)
        for k in (1, -1)
    }
    model = EvalModel(atoms)
    jobs = [(NumClass((m,), 1), g) for m in (-3, -2, -1, 1, 2, 3) for g in range(3)]

    def work(job):
        v, g = job
        return gv_from_polynomial(counting_polynomial(lat, z, v, model), g)

    serial = [work(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=4) as pool:
        threaded = list(pool.map(work, jobs))
    assert threaded == serial


class TestGvFromPolynomial:
    def test_conifold_counts(self):
        assert gv_from_polynomial(RationalFn.one(), 0) == 1
        for g in range(1, 4):
            assert gv_from_polynomial(RationalFn.one(), g) == 0

    def test_s_squared_census(self):
        # flat(s^2) = t^-2 s^2, one string of size 3 at degree -2:
        # g = 0 term is 3 * (C(1,1) - C(-1,1)) = 3, higher genus vanishes
        p = RationalFn.from_poly(LaurentPoly.s(2))
        assert gv_from_polynomial(p, 0) == 3
        assert gv_from_polynomial(p, 1) == 0
        assert gv_from_polynomial(p, 2) == 0

    def test_zero_polynomial(self):
        for g in range(4):
            assert gv_from_polynomial(RationalFn.zero(), g) == 0

    def test_rejects_non_polynomial(self):
        bad = RationalFn(LaurentPoly.one(), LaurentPoly.t(2) - LaurentPoly.one())
        with pytest.raises(NotPolynomialError):
            gv_from_polynomial(bad, 0)

    def test_rejects_negative_exponent(self):
        with pytest.raises(NotPolynomialError):
            gv_from_polynomial(LaurentPoly.t(-2), 0)

    def test_rejects_odd_degree(self):
        with pytest.raises(OddWeightedDegreeError):
            gv_from_polynomial(LaurentPoly({(1, 1): 1}), 0)
