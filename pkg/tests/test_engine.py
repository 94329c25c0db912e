import numpy as np
import pytest
from numpy.testing import assert_allclose

from eigenstruct_numeric.engine import EigenstructureAnalyzer, complete_eigenstructure
from eigenstruct_numeric.kcf import (
    BlockKind,
    KCFSpec,
    jordan,
    jordan_inf,
    kcf_of_pencil,
    left_block,
    materialize_kcf,
    right_block,
    signature_of_kcf,
)
from eigenstruct_numeric.recovery import companion_recovery
from eigenstruct_numeric.tolerance import ToleranceProfile
from generic_model.families import GenericStructure, generic_structures
from generic_model.realize import realize
from poly_core import Pencil, first_companion, new_polynomial, random_polynomial, second_companion, zero_polynomial
from poly_core.companion import companion_distance
from utils_ops.errors import BalanceError, HypothesisError, RecoveryError

from tests.conftest import random_kcf, well_conditioned


def test_zero_polynomial_structure():
    sig = complete_eigenstructure(zero_polynomial(2, 3, 2))
    assert sig.rank == 0
    assert sig.right == (0, 0, 0)
    assert sig.left == (0, 0)
    assert not sig.has_elementary_divisors()


def test_pencil_L2_structure():
    sig = complete_eigenstructure(materialize_kcf(KCFSpec.singular(right=[2])))
    assert (sig.rank, sig.right, sig.left, sig.finite, sig.infinite) == (2, (2,), (), (), ())


def test_realized_polynomial_structure(tol):
    P = realize(GenericStructure(2, 3, 1, 2, 1), seed=1, tol=tol)
    sig = complete_eigenstructure(P, tol)
    assert sig.rank == 1
    assert sig.right == (0, 1)
    assert sig.left == (1,)
    assert not sig.has_elementary_divisors()


def test_regular_polynomial_finite_structure():
    # diag(lambda, lambda^2) at grade 2: eigenvalue 0 with multiplicities 1, 2, one at infinity
    P = new_polynomial(2, 2, 2, [np.zeros((2, 2)), np.diag([1, 0]), np.diag([0, 1])])
    sig = complete_eigenstructure(P)
    assert sig.rank == 2
    assert len(sig.finite) == 1
    eig, mults = sig.finite[0]
    assert abs(eig) < 1e-6
    assert mults == (1, 2)
    assert sig.infinite == (1,)
    assert sig.balance_residual() == 0


def test_eigenvalue_with_full_geometric_multiplicity(rng):
    # Q (lambda - 0.3) I_2 R vanishes entirely at its eigenvalue
    L = Pencil(np.eye(2), -0.3 * np.eye(2)).transformed(well_conditioned(rng, 2), well_conditioned(rng, 2))
    sig = complete_eigenstructure(L)
    assert len(sig.finite) == 1
    eig, mults = sig.finite[0]
    assert abs(eig - 0.3) < 1e-6
    assert mults == (1, 1)


def test_simple_eigenvalues_under_equivalence(rng):
    spec = KCFSpec((jordan(-1j, 1), jordan(-2.0, 2)))
    L = materialize_kcf(spec).transformed(well_conditioned(rng, 3), well_conditioned(rng, 3))
    assert complete_eigenstructure(L).same_structure(signature_of_kcf(spec))


def test_large_finite_eigenvalue():
    sig = complete_eigenstructure(new_polynomial(1, 1, 1, [[[-2e4]], [[1]]]))
    assert len(sig.finite) == 1
    eig, mults = sig.finite[0]
    assert abs(eig - 2e4) < 1e-6 * 2e4
    assert mults == (1,)
    assert sig.infinite == ()


@pytest.mark.parametrize("gap", [5e-3, 1e-3])
def test_close_simple_eigenvalues_are_kept_apart(gap):
    spec = KCFSpec((jordan(-1.0, 1), jordan(-1.0 - gap, 1)))
    sig = complete_eigenstructure(materialize_kcf(spec))
    assert sig.same_structure(signature_of_kcf(spec))
    assert [mults for _, mults in sig.finite] == [(1,), (1,)]


def test_close_eigenvalues_of_a_singular_pencil():
    spec = KCFSpec((jordan(-0.5, 1), jordan(-0.505, 1), right_block(1), left_block(0)))
    m, n = spec.shape
    rng = np.random.default_rng(3)
    L = materialize_kcf(spec).transformed(well_conditioned(rng, m), well_conditioned(rng, n))
    assert complete_eigenstructure(L, ToleranceProfile(seed=3)).same_structure(signature_of_kcf(spec))


def test_analyzer_is_callable(tol):
    analyzer = EigenstructureAnalyzer(tol)
    L = materialize_kcf(KCFSpec((jordan(-2.0, 1), right_block(1))))
    assert analyzer(L) == analyzer.analyze(L)


def test_balance_violation_is_reported(monkeypatch):
    # drop every eigenvalue candidate: the structure no longer adds up
    monkeypatch.setattr("eigenstruct_numeric.engine.eigenvalue_candidates", lambda *args, **kwargs: [])
    L = materialize_kcf(KCFSpec((jordan(-1.0, 2),)))
    with pytest.raises(BalanceError) as excinfo:
        complete_eigenstructure(L)
    assert excinfo.value.diagnostics["residual"] == -2


def test_materialize_L1():
    L1 = materialize_kcf(KCFSpec.singular(right=[1]))
    assert_allclose(L1.A, [[1, 0]])
    assert_allclose(L1.B, [[0, 1]])


def test_materialize_blocks():
    E = materialize_kcf(KCFSpec((jordan(3.0, 2),)))
    assert_allclose(E.A, np.eye(2))
    assert_allclose(E.B, [[3, 1], [0, 3]])
    N = materialize_kcf(KCFSpec((jordan_inf(2),)))
    assert_allclose(N.A, [[0, 1], [0, 0]])
    assert_allclose(N.B, np.eye(2))
    LT = materialize_kcf(KCFSpec.singular(left=[2]))
    assert LT.shape == (3, 2)


def test_kcf_spec_shape_and_rank():
    spec = KCFSpec((right_block(0), left_block(0), jordan(1.0, 2), jordan_inf(1), right_block(2)))
    assert spec.shape == (0 + 1 + 2 + 1 + 2, 1 + 0 + 2 + 1 + 3)
    assert spec.rank == 5
    assert spec.of_kind(BlockKind.JORDAN)[0].eigenvalue == -1.0
    assert KCFSpec((right_block(2), right_block(0))) == KCFSpec((right_block(0), right_block(2)))


def test_kcf_roundtrip_of_jordan_block():
    spec = KCFSpec((jordan(0.0, 2),))
    assert kcf_of_pencil(materialize_kcf(spec)).matches(spec)


def test_signature_of_kcf_groups_eigenvalues():
    sig = signature_of_kcf(KCFSpec((jordan(-1.0, 2), jordan(-1.0, 1), jordan_inf(3), left_block(1))))
    assert sig.finite == ((1.0 + 0j, (1, 2)),)
    assert sig.infinite == (3,)
    assert sig.left == (1,)
    assert sig.balance_residual() == 0


@pytest.mark.slow
def test_equivalence_oracle():
    rng = np.random.default_rng(7)
    for trial in range(100):
        spec = random_kcf(rng)
        m, n = spec.shape
        L = materialize_kcf(spec).transformed(well_conditioned(rng, m), well_conditioned(rng, n))
        computed = complete_eigenstructure(L, ToleranceProfile(seed=trial))
        assert computed.same_structure(signature_of_kcf(spec)), f"trial {trial}: {spec}"
        assert kcf_of_pencil(L, ToleranceProfile(seed=trial)).matches(spec)


def _realized(m, n, r, d, seed):
    return [realize(K, seed=seed + K.a, tol=ToleranceProfile(seed=seed)) for K in generic_structures(m, n, r, d)]


@pytest.mark.slow
@pytest.mark.parametrize("m, n, r, d", [
    (2, 3, 1, 2), (3, 3, 2, 2), (3, 2, 1, 3), (3, 4, 2, 2), (4, 3, 2, 1), (4, 4, 2, 2),
    (2, 2, 1, 3), (3, 5, 2, 2), (4, 5, 3, 2), (5, 3, 2, 2), (2, 4, 1, 4),
])
def test_companion_shift_laws(m, n, r, d):
    tol = ToleranceProfile(seed=5)
    for P in _realized(m, n, r, d, seed=31):
        sig = complete_eigenstructure(P, tol)
        assert complete_eigenstructure(first_companion(P), tol) == sig.companion_prediction(1)
        assert complete_eigenstructure(second_companion(P), tol) == sig.companion_prediction(2)


def test_recovery_fixed_point():
    P = random_polynomial(2, 3, 3, seed=12)
    recovered = companion_recovery(first_companion(P).pencil, 2, 3, 3)
    assert_allclose(recovered.coeffs, P.coeffs, atol=1e-10)


def test_recovery_of_pencils_is_identity():
    P = random_polynomial(2, 2, 1, seed=2)
    assert companion_recovery(first_companion(P).pencil, 2, 2, 1) == P


def test_recovery_bound_under_perturbation():
    rng = np.random.default_rng(13)
    delta = 1e-6
    for d in (2, 3):
        P = random_polynomial(2, 3, d, rng)
        P = P.scaled(1 / P.norm())
        C = first_companion(P)
        E = Pencil(rng.standard_normal(C.shape), rng.standard_normal(C.shape))
        E = Pencil(E.A / E.norm(), E.B / E.norm())
        L = Pencil(C.A + delta * E.A, C.B + delta * E.B)
        recovered = companion_recovery(L, 2, 3, d)
        assert companion_distance(C, first_companion(recovered)) <= 4 * d * (1 + P.norm()) * delta


def test_recovery_rejects_missing_identity():
    P = random_polynomial(2, 2, 2, seed=1)
    C = first_companion(P)
    A = np.array(C.A)
    A[2:, 2:] = 0
    with pytest.raises(RecoveryError):
        companion_recovery(Pencil(A, C.B), 2, 2, 2)


def test_recovery_rejects_wrong_size():
    with pytest.raises(HypothesisError):
        companion_recovery(Pencil(np.zeros((3, 3)), np.zeros((3, 3))), 2, 2, 2)
