import numpy as np
import pytest
from numpy.testing import assert_array_equal

from eigenstruct_numeric.kcf import KCFSpec, jordan, materialize_kcf, right_block
from eigenstruct_numeric.minimal_indices import convolution_matrix, kernel_dimension, left_minimal_indices, right_minimal_indices
from eigenstruct_numeric.multiplicities import conjugate_partition, infinite_multiplicities, partial_multiplicities_at
from eigenstruct_numeric.rank import normal_rank, numerical_rank, singular_gap_report
from eigenstruct_numeric.signature import StructureSignature
from eigenstruct_numeric.tolerance import ToleranceProfile
from poly_core import Pencil, new_polynomial, random_polynomial, zero_polynomial
from utils_ops.errors import HypothesisError, ToleranceError


def pencil_poly(spec: KCFSpec):
    return materialize_kcf(spec).as_polynomial()


def test_numerical_rank_examples():
    assert numerical_rank(np.eye(3)) == 3
    assert numerical_rank(np.zeros((2, 4))) == 0
    assert numerical_rank(np.diag([1.0, 1e-12])) == 1


def test_numerical_rank_against_a_reference_scale():
    tiny = np.array([[1e-15]])
    assert numerical_rank(tiny) == 1
    assert numerical_rank(tiny, reference=1.0) == 0
    assert numerical_rank(np.eye(2), reference=1e-3) == 2
    assert singular_gap_report(tiny, reference=1.0)["largest_dropped"] == pytest.approx(1e-15)


def test_singular_gap_report_brackets_the_cutoff():
    report = singular_gap_report(np.diag([1.0, 1e-3, 1e-12]))
    assert report["smallest_kept"] == pytest.approx(1e-3)
    assert report["largest_dropped"] == pytest.approx(1e-12)


def test_normal_rank_dependent_rows():
    # [[lambda, lambda^2], [1, lambda]]: row 1 = lambda * row 2
    P = new_polynomial(2, 2, 2, [[[0, 0], [1, 0]], [[1, 0], [0, 1]], [[0, 1], [0, 0]]])
    assert normal_rank(P) == 1


def test_normal_rank_zero_polynomial():
    assert normal_rank(zero_polynomial(2, 3, 2)) == 0


def test_normal_rank_of_random_polynomials():
    hits = sum(normal_rank(random_polynomial(3, 5, 2, seed=s)) == 3 for s in range(100))
    assert hits >= 99


def test_tolerance_profile_validates():
    with pytest.raises(HypothesisError):
        ToleranceProfile(rel_rank_tol=0)
    with pytest.raises(HypothesisError):
        ToleranceProfile(probe_count=0)
    assert ToleranceProfile().with_seed(9).seed == 9


def test_right_minimal_indices_of_L1():
    L1 = new_polynomial(1, 2, 1, [[[0, 1]], [[1, 0]]])
    assert right_minimal_indices(L1) == [1]
    assert left_minimal_indices(L1) == []
    assert kernel_dimension(L1, 0) == 0
    assert kernel_dimension(L1, 1) == 1


def test_minimal_indices_of_zero_polynomial():
    Z = zero_polynomial(2, 3, 1)
    assert right_minimal_indices(Z) == [0, 0, 0]
    assert left_minimal_indices(Z) == [0, 0]


def test_minimal_indices_of_direct_sums():
    assert right_minimal_indices(pencil_poly(KCFSpec.singular(right=[1, 2]))) == [1, 2]
    assert left_minimal_indices(pencil_poly(KCFSpec.singular(left=[1]))) == [1]
    P = pencil_poly(KCFSpec.singular(right=[2], left=[1]))
    assert right_minimal_indices(P) == [2]
    assert left_minimal_indices(P) == [1]


def test_kernel_dimension_law():
    right = [0, 1, 1, 3]
    P = pencil_poly(KCFSpec.singular(right=right, left=[2]))
    for k in range(5):
        expected = sum(k - e + 1 for e in right if e <= k)
        assert kernel_dimension(P, k) == expected


def test_convolution_matrix_layout():
    P = random_polynomial(2, 3, 2, seed=1)
    T = convolution_matrix(P, 1)
    assert T.shape == (4 * 2, 2 * 3)
    assert_array_equal(T[2:4, 3:6], P.coeffs[0])
    assert_array_equal(T[6:8, 3:6], P.coeffs[2])


def test_minimal_index_search_fails_loudly_on_a_wrong_rank():
    L1 = new_polynomial(1, 2, 1, [[[0, 1]], [[1, 0]]])
    # claims rank 0: two indices expected, the kernel never grows that fast
    with pytest.raises(ToleranceError) as excinfo:
        right_minimal_indices(L1, rank=0)
    assert "kernel_dimensions" in excinfo.value.diagnostics


def test_partial_multiplicities_diagonal():
    # diag(lambda, lambda^2)
    P = new_polynomial(2, 2, 2, [np.zeros((2, 2)), np.diag([1, 0]), np.diag([0, 1])])
    assert partial_multiplicities_at(P, 0.0) == [1, 2]
    assert partial_multiplicities_at(P, 1.0) == []


def test_partial_multiplicities_of_random_regular_polynomials():
    rng = np.random.default_rng(3)
    empty = 0
    for s in range(100):
        P = random_polynomial(2, 2, 2, seed=s)
        point = complex(rng.standard_normal(), rng.standard_normal())
        empty += partial_multiplicities_at(P, point) == []
    assert empty >= 99


def test_partial_multiplicities_ignore_singular_part():
    # L_1 + E_2(-1): eigenvalue 1 with one Jordan chain of length 2
    P = pencil_poly(KCFSpec((right_block(1), jordan(-1.0, 2))))
    assert partial_multiplicities_at(P, 1.0) == [2]
    assert partial_multiplicities_at(P, 0.3) == []


def test_partial_multiplicities_at_a_point_off_by_roundoff():
    P = new_polynomial(1, 1, 1, [[[-1j]], [[1]]])
    assert partial_multiplicities_at(P, 1j) == [1]
    assert partial_multiplicities_at(P, 1j + 1e-15) == [1]


def test_partial_multiplicities_of_a_full_geometric_eigenvalue(rng):
    # Q (lambda - 0.3) R: P(0.3) vanishes entirely, up to roundoff
    Q, R = rng.standard_normal((2, 2, 2)) + 1j * rng.standard_normal((2, 2, 2))
    P = new_polynomial(2, 2, 1, [-0.3 * Q @ R, Q @ R])
    assert partial_multiplicities_at(P, 0.3) == [1, 1]
    assert partial_multiplicities_at(P, 0.3 + 1e-14) == [1, 1]


def test_infinite_multiplicities():
    assert infinite_multiplicities(new_polynomial(2, 2, 1, [np.zeros((2, 2)), np.eye(2)])) == []
    assert infinite_multiplicities(new_polynomial(2, 2, 1, [np.eye(2), np.zeros((2, 2))])) == [1, 1]


def test_conjugate_partition():
    assert conjugate_partition([3, 1]) == [1, 1, 2]
    assert conjugate_partition([2, 2]) == [2, 2]
    assert conjugate_partition([]) == []


def test_signature_validates_index_counts():
    with pytest.raises(HypothesisError):
        StructureSignature(m=2, n=3, grade=1, rank=1, right=[0], left=[1])


def test_signature_is_canonical():
    a = StructureSignature(m=3, n=3, grade=1, rank=3, finite=[(2.0, [1]), (1j, [2, 1])], infinite=[])
    b = StructureSignature(m=3, n=3, grade=1, rank=3, finite=[(1j, [1, 2]), (2.0, [1])], infinite=[])
    assert a == b
    assert a.finite_degree == 4
    assert a.balance_residual() == 1


def test_signature_dict_form():
    sig = StructureSignature(m=2, n=3, grade=2, rank=1, right=[1, 0], left=[1])
    payload = sig.to_dict()
    assert payload == {"rank": 1, "right": [0, 1], "left": [1], "finite": [], "infinite": []}
    assert StructureSignature.from_dict(payload, 2, 3, 2) == sig


def test_companion_prediction_shifts_the_right_side():
    sig = StructureSignature(m=2, n=3, grade=2, rank=1, right=[0, 1], left=[1])
    first = sig.companion_prediction(1)
    assert (first.m, first.n, first.rank) == (5, 6, 4)
    assert first.right == (1, 2)
    assert first.left == (1,)
    second = sig.companion_prediction(2)
    assert (second.m, second.n, second.rank) == (4, 5, 3)
    assert second.right == (0, 1)
    assert second.left == (2,)


def test_pencil_needs_matching_parts():
    with pytest.raises(HypothesisError):
        Pencil(np.zeros((2, 2)), np.zeros((2, 3)))
