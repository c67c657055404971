from unittest import TestCase

import numpy as np

from operators import (
    MaxEntRep,
    OperatorMeasure,
    deterministic_rep,
    eval_max_ent,
    random_max_ent_rep,
    random_pvm,
    rank_profile,
    trace_correlation,
    validate_measure,
    validate_rep,
)
from tensors import deterministic_correlation, is_nonsignalling, is_synchronous, marginals, validate_correlation
from utils.errors import ComplexProbability, MalformedInput, RankSumMismatch, ShapeMismatch
from utils.types import MeasureKind


def diagonal_measure(kind: str = MeasureKind.PVM) -> OperatorMeasure:
    return OperatorMeasure(np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]), kind)


def half_identity(kind: str) -> OperatorMeasure:
    return OperatorMeasure(np.array([np.eye(2) / 2, np.eye(2) / 2]), kind)


class TestValidateMeasure(TestCase):

    def test_diagonal_projections(self) -> None:
        self.assertTrue(validate_measure(diagonal_measure()).ok)

    def test_half_identity_is_not_a_projection(self) -> None:
        report = validate_measure(half_identity(MeasureKind.PVM))
        self.assertFalse(report.ok)
        self.assertEqual(len(report.violations), 2)
        self.assertTrue(all(v.startswith("idempotence") for v in report.violations))
        self.assertAlmostEqual(report.worst_residual, 0.25)

    def test_half_identity_is_a_povm(self) -> None:
        self.assertTrue(validate_measure(half_identity(MeasureKind.POVM)).ok)

    def test_incomplete_and_negative_elements(self) -> None:
        measure = OperatorMeasure(np.array([np.diag([1.2, 0.0]), np.diag([-0.3, 1.0])]), MeasureKind.POVM)
        report = validate_measure(measure)
        self.assertFalse(report.ok)
        kinds = {v.split(":")[0] for v in report.violations}
        self.assertEqual(kinds, {"completeness", "positivity"})

    def test_non_hermitian_element(self) -> None:
        element = np.array([[1.0, 0.5], [0.0, 0.0]])
        measure = OperatorMeasure(np.array([element, np.eye(2) - element]), MeasureKind.POVM)
        report = validate_measure(measure)
        self.assertTrue(any(v.startswith("hermiticity") for v in report.violations))


class TestRandomPVM(TestCase):

    def test_full_rank_element_is_identity(self) -> None:
        for seed in range(5):
            measure = random_pvm(2, 2, [2, 0], seed)
            np.testing.assert_allclose(measure.elements[0], np.eye(2), atol=1e-12)
            np.testing.assert_allclose(measure.elements[1], np.zeros((2, 2)), atol=1e-12)

    def test_rank_one_elements_are_valid(self) -> None:
        measure = random_pvm(3, 3, [1, 1, 1], 42)
        self.assertTrue(validate_measure(measure).ok)
        np.testing.assert_allclose(np.trace(measure.elements, axis1=1, axis2=2).real, [1, 1, 1], atol=1e-12)

    def test_same_seed_same_bits(self) -> None:
        first = random_pvm(4, 2, [3, 1], 9)
        second = random_pvm(4, 2, [3, 1], 9)
        self.assertEqual(first.elements.tobytes(), second.elements.tobytes())

    def test_rank_sum_checked(self) -> None:
        with self.assertRaises(RankSumMismatch):
            random_pvm(3, 2, [1, 1], 0)


class TestEvalMaxEnt(TestCase):

    def test_scalar_rep_is_deterministic(self) -> None:
        rep = deterministic_rep([1, 0], [0, 0, 1], 2)
        p = eval_max_ent(rep)
        np.testing.assert_array_equal(p.values, deterministic_correlation([1, 0], [0, 0, 1], 2).values)

    def test_diagonal_projections_are_perfectly_correlated(self) -> None:
        measure = diagonal_measure()
        rep = MaxEntRep((measure, measure), (measure, measure))
        p = eval_max_ent(rep)
        expected = np.zeros((2, 2, 2, 2))
        expected[:, :, 0, 0] = expected[:, :, 1, 1] = 0.5
        np.testing.assert_allclose(p.values, expected, atol=1e-15)
        self.assertTrue(is_synchronous(p))

    def test_random_reps_are_valid_and_nonsignalling(self) -> None:
        for seed in range(30):
            rep = random_max_ent_rep(2, 3, 3, 4, seed)
            p = eval_max_ent(rep)
            self.assertTrue(validate_correlation(p).ok)
            ok, defect = is_nonsignalling(p, 1e-10)
            self.assertTrue(ok, defect)

    def test_marginals_are_multiples_of_one_over_d(self) -> None:
        cases = 0
        for seed in range(200):
            d = 1 + seed % 6
            n_a, n_b, m = 1 + seed % 3, 1 + (seed // 3) % 3, 1 + (seed // 9) % 3
            rep = random_max_ent_rep(n_a, n_b, m, d, seed)
            pair = marginals(eval_max_ent(rep))
            for table in (pair.alice, pair.bob):
                scaled = table * d
                self.assertLess(float(np.abs(scaled - np.rint(scaled)).max()) / d, 1e-9)
            alice_ranks, bob_ranks = rank_profile(rep)
            np.testing.assert_allclose(pair.alice, alice_ranks / d, atol=1e-9)
            np.testing.assert_allclose(pair.bob, bob_ranks / d, atol=1e-9)
            cases += 1
        self.assertEqual(cases, 200)

    def test_equal_measures_are_synchronous(self) -> None:
        for seed in range(10):
            rep = random_max_ent_rep(3, 3, 2, 3, seed)
            synchronous = MaxEntRep(rep.alice, rep.alice)
            self.assertTrue(is_synchronous(eval_max_ent(synchronous), 1e-10))

    def test_mixed_dimensions_rejected(self) -> None:
        with self.assertRaises(ShapeMismatch):
            MaxEntRep((diagonal_measure(),), (random_pvm(3, 2, [2, 1], 0),))

    def test_rep_json_round_trip(self) -> None:
        rep = random_max_ent_rep(2, 1, 2, 2, 5)
        restored = MaxEntRep.from_data(rep.json())
        np.testing.assert_array_equal(restored.alice_stack(), rep.alice_stack())
        np.testing.assert_array_equal(restored.bob_stack(), rep.bob_stack())
        self.assertTrue(validate_rep(restored).ok)

    def test_complex_trace_rejected(self) -> None:
        alice = np.full((1, 1, 1, 1), 1j)
        bob = np.ones((1, 1, 1, 1), dtype=complex)
        with self.assertRaises(ComplexProbability):
            trace_correlation(alice, bob)

    def test_non_list_measures_rejected(self) -> None:
        with self.assertRaises(MalformedInput):
            MaxEntRep.from_data({"alice": [1], "bob": [1]})
        with self.assertRaises(MalformedInput):
            MaxEntRep.from_data({"alice": 1, "bob": 1})
