from unittest import TestCase

import numpy as np

from operators import (
    MaxEntRep,
    OperatorMeasure,
    StateRep,
    canonicalize,
    eval_max_ent,
    eval_state_rep,
    haar_unitary,
    is_maximally_entangled,
    maximally_entangled_state,
    random_max_ent_rep,
    schmidt_decompose,
)
from tensors import is_synchronous, sup_distance
from utils import make_rng
from utils.errors import NotMaximallyEntangled, NotUnitNorm, ZeroVector
from utils.types import MeasureKind


def basis(d: int, k: int) -> np.ndarray:
    vector = np.zeros(d, dtype=complex)
    vector[k] = 1.0
    return vector


def rotated_state_rep(seed: int, d: int = 3) -> StateRep:
    """Random projective measures sharing a maximally entangled state written in random local bases"""
    rng = make_rng(seed)
    rep = random_max_ent_rep(2, 2, 2, d, int(rng.integers(2 ** 31)))
    left, right = haar_unitary(d, rng), haar_unitary(d, rng)
    state = np.kron(left, right) @ maximally_entangled_state(d)
    return StateRep(rep.alice, rep.bob, state)


class TestSchmidtDecompose(TestCase):

    def test_product_vector(self) -> None:
        form = schmidt_decompose(np.kron(basis(2, 0), basis(2, 1)), 2, 2)
        np.testing.assert_allclose(form.coefficients, [1.0], atol=1e-12)

    def test_bell_state(self) -> None:
        form = schmidt_decompose(maximally_entangled_state(2), 2, 2)
        np.testing.assert_allclose(form.coefficients, [1 / np.sqrt(2)] * 2, atol=1e-12)

    def test_random_vector_matches_singular_values(self) -> None:
        rng = make_rng(31)
        vector = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        vector /= np.linalg.norm(vector)
        form = schmidt_decompose(vector, 3, 3)
        np.testing.assert_allclose(form.coefficients, np.linalg.svd(vector.reshape(3, 3), compute_uv=False), atol=1e-12)
        np.testing.assert_allclose(form.reconstruct(), vector, atol=1e-10)
        self.assertAlmostEqual(float(np.sum(form.coefficients ** 2)), 1.0, places=12)
        np.testing.assert_allclose(form.left_basis.conj() @ form.left_basis.T, np.eye(3), atol=1e-10)

    def test_rectangular_reconstruction(self) -> None:
        rng = make_rng(32)
        vector = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        vector /= np.linalg.norm(vector)
        form = schmidt_decompose(vector, 2, 3)
        self.assertEqual(form.coefficients.size, 2)
        np.testing.assert_allclose(form.reconstruct(), vector, atol=1e-10)

    def test_zero_and_unnormalized(self) -> None:
        with self.assertRaises(ZeroVector):
            schmidt_decompose(np.zeros(4), 2, 2)
        with self.assertRaises(NotUnitNorm):
            schmidt_decompose(np.ones(4), 2, 2)


class TestMaximallyEntangled(TestCase):

    def test_bell_state(self) -> None:
        self.assertTrue(is_maximally_entangled(maximally_entangled_state(2), 2, 2))

    def test_product_state(self) -> None:
        self.assertFalse(is_maximally_entangled(np.kron(basis(2, 0), basis(2, 0)), 2, 2))

    def test_unequal_coefficients(self) -> None:
        state = np.sqrt(0.6) * np.kron(basis(2, 0), basis(2, 0)) + np.sqrt(0.4) * np.kron(basis(2, 1), basis(2, 1))
        self.assertFalse(is_maximally_entangled(state, 2, 2))

    def test_unequal_dimensions(self) -> None:
        self.assertFalse(is_maximally_entangled(np.kron(basis(2, 0), basis(3, 0)), 2, 3))


class TestEvalStateRep(TestCase):

    def test_product_state_is_deterministic(self) -> None:
        measure = OperatorMeasure(np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]), MeasureKind.PVM)
        rep = StateRep((measure, measure), (measure,), np.kron(basis(2, 0), basis(2, 0)))
        p = eval_state_rep(rep)
        self.assertTrue(np.all(p.values[:, :, 0, 0] == 1.0))
        self.assertEqual(float(p.values.sum()), 2.0)

    def test_bell_state_is_perfectly_correlated(self) -> None:
        measure = OperatorMeasure(np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]), MeasureKind.PVM)
        p = eval_state_rep(StateRep((measure,), (measure,), maximally_entangled_state(2)))
        np.testing.assert_allclose(p.values[0, 0], np.eye(2) / 2, atol=1e-15)

    def test_unit_norm_enforced(self) -> None:
        measure = OperatorMeasure(np.array([np.eye(2)]), MeasureKind.PVM)
        with self.assertRaises(NotUnitNorm):
            StateRep((measure,), (measure,), np.ones(4))


class TestCanonicalize(TestCase):

    def test_canonical_rep_with_real_symmetric_bob_is_unchanged(self) -> None:
        real = np.array([[0.5, 0.5], [0.5, 0.5]])
        measure = OperatorMeasure(np.array([real, np.eye(2) - real]), MeasureKind.PVM)
        rep = StateRep((measure,), (measure,), maximally_entangled_state(2))
        canonical = canonicalize(rep)
        np.testing.assert_allclose(canonical.alice_stack(), rep.alice[0].elements[None], atol=1e-12)
        np.testing.assert_allclose(canonical.bob_stack(), rep.bob[0].elements[None], atol=1e-12)

    def test_swapped_schmidt_bases(self) -> None:
        rep = random_max_ent_rep(2, 2, 2, 2, 3)
        swap = np.array([[0, 1], [1, 0]])
        state = np.kron(swap, np.eye(2)) @ maximally_entangled_state(2)
        state_rep = StateRep(rep.alice, rep.bob, state)
        self.assertLess(sup_distance(eval_max_ent(canonicalize(state_rep)), eval_state_rep(state_rep)), 1e-10)

    def test_both_evaluation_paths_agree(self) -> None:
        for seed in range(25):
            rep = rotated_state_rep(seed)
            self.assertLess(sup_distance(eval_max_ent(canonicalize(rep)), eval_state_rep(rep)), 1e-10)

    def test_synchronous_input_gives_equal_measures(self) -> None:
        d = 3
        rng = make_rng(77)
        base = random_max_ent_rep(2, 2, 3, d, 8)
        left, right = haar_unitary(d, rng), haar_unitary(d, rng)
        alice = tuple(OperatorMeasure(left @ m.elements @ left.conj().T, m.kind) for m in base.alice)
        bob = tuple(
            OperatorMeasure(right @ m.elements.transpose(0, 2, 1) @ right.conj().T, m.kind) for m in base.alice
        )
        state = np.kron(left, right) @ maximally_entangled_state(d)
        state_rep = StateRep(alice, bob, state)
        self.assertTrue(is_synchronous(eval_state_rep(state_rep), 1e-10))
        canonical = canonicalize(state_rep)
        np.testing.assert_allclose(canonical.alice_stack(), canonical.bob_stack(), atol=1e-9)

    def test_rejects_partially_entangled(self) -> None:
        measure = OperatorMeasure(np.array([np.eye(2)]), MeasureKind.PVM)
        state = np.sqrt(0.6) * np.kron(basis(2, 0), basis(2, 0)) + np.sqrt(0.4) * np.kron(basis(2, 1), basis(2, 1))
        with self.assertRaises(NotMaximallyEntangled):
            canonicalize(StateRep((measure,), (measure,), state))

    def test_canonical_rep_is_a_max_ent_rep(self) -> None:
        canonical = canonicalize(rotated_state_rep(4))
        self.assertIsInstance(canonical, MaxEntRep)
        self.assertEqual(canonical.d, 3)
