"""Qudit-to-qubit conversion, measurement plans, and the decode pipeline."""

import numpy as np
import pytest

from gqudits import linalg, oracle
from gqudits.bases import BasisAssignment, FieldBasis, find_self_dual, polynomial_basis
from gqudits.css import new_css
from gqudits.errors import DecodeFailure, DimensionMismatch
from gqudits.field import make_field
from gqudits.gates import pi_map
from gqudits.grs import make_qrs
from gqudits.pauli import PauliWord
from gqudits.q2b import (
    QubitCssCode,
    convert_code,
    convert_logicals,
    default_assignment,
    end_to_end_decode,
    expand_dual,
    expand_vector,
    export_alist,
    export_dense,
    import_alist,
    lift_dual,
    lift_vector,
    make_plan,
    reconstruct_syndrome,
)


def random_assignment(gf, n, rng):
    gf2 = make_field(1)
    bases = []
    for _ in range(n):
        M = linalg.random_invertible(gf2, rng, gf.s)
        bases.append(
            FieldBasis(gf, [int(sum((int(b) & 1) << i for i, b in enumerate(row))) for row in M])
        )
    return BasisAssignment(bases)


class TestExpansion:
    def test_zero_vector(self):
        gf = make_field(2)
        A = default_assignment(gf, 3)
        assert not expand_vector(A, [0, 0, 0]).any()

    def test_single_qudit_reduces_to_decompose(self):
        gf = make_field(3)
        B = polynomial_basis(gf)
        A = BasisAssignment.uniform(B, 1)
        for eta in gf.elements():
            assert np.array_equal(expand_vector(A, [eta]), B.decompose(eta))

    def test_trace_inner_product_transfer(self):
        gf = make_field(2)
        rng = np.random.default_rng(137)
        for A in (default_assignment(gf, 2), random_assignment(gf, 2, rng)):
            for _ in range(100):
                v = rng.integers(0, 4, 2)
                w = rng.integers(0, 4, 2)
                lhs = int(expand_vector(A, v) @ expand_dual(A, w)) % 2
                assert lhs == gf.trace(gf.dot(v, w))

    def test_lift_inverts_expand(self):
        gf = make_field(3)
        rng = np.random.default_rng(139)
        A = random_assignment(gf, 2, rng)
        for _ in range(20):
            v = rng.integers(0, 8, 2)
            assert np.array_equal(lift_vector(A, expand_vector(A, v)), v)
            assert np.array_equal(lift_dual(A, expand_dual(A, v)), v)

    def test_linear(self):
        gf = make_field(2)
        A = default_assignment(gf, 2)
        rng = np.random.default_rng(141)
        for _ in range(50):
            v1 = rng.integers(0, 4, 2)
            v2 = rng.integers(0, 4, 2)
            assert np.array_equal(
                (expand_vector(A, v1) + expand_vector(A, v2)) % 2, expand_vector(A, v1 ^ v2)
            )


class TestConvertCode:
    def test_trivial_qudit_code(self):
        gf = make_field(2)
        code = new_css(gf, 2, np.zeros((0, 2)), np.zeros((0, 2)))
        qubit = convert_code(code)
        assert qubit.ns == 4 and qubit.k == 4

    def test_qrs_gives_24_9(self):
        gf = make_field(3)
        qubit = convert_code(make_qrs(gf, 8, 2, 5).css)
        gf2 = make_field(1)
        assert qubit.ns == 24
        assert linalg.rank(gf2, qubit.hx) == 6
        assert linalg.rank(gf2, qubit.hz) == 9
        assert qubit.k == 9
        assert not np.any((qubit.hx @ qubit.hz.T) % 2)

    def test_orthogonality_transfer_random_bases(self):
        gf = make_field(2)
        rng = np.random.default_rng(149)
        code = make_qrs(gf, 4, 1, 3).css
        for _ in range(5):
            A = random_assignment(gf, 4, rng)
            qubit = convert_code(code, A)
            assert not np.any((qubit.hx @ qubit.hz.T) % 2)

    def test_dimension_transfer(self):
        gf = make_field(3)
        rng = np.random.default_rng(151)
        code = make_qrs(gf, 6, 2, 4).css
        gf2 = make_field(1)
        for A in (default_assignment(gf, 6), random_assignment(gf, 6, rng)):
            qubit = convert_code(code, A)
            assert linalg.rank(gf2, qubit.hx) == gf.s * code.m_x
            assert linalg.rank(gf2, qubit.hz) == gf.s * code.m_z

    def test_method_one_equivalence(self):
        """phi maps the qudit codespace onto the converted qubit codespace
        (projector comparison at q=4, n=2)."""
        gf = make_field(2)
        for gx, gz in (
            ([[1, 1]], np.zeros((0, 2), dtype=np.int64)),
            ([[1, 2]], [[1, gf.div(1, 2)]]),
        ):
            code = new_css(gf, 2, gx, gz)
            A = default_assignment(gf, 2)
            qudit_proj = np.eye(16, dtype=np.complex128)
            for row in code.gx:
                qudit_proj = qudit_proj @ oracle.projectors(PauliWord.x_word(gf, row))[0]
            for row in code.gz:
                qudit_proj = qudit_proj @ oracle.projectors(PauliWord.z_word(gf, row))[0]
            mapped = pi_map(A, oracle.DenseOperator(gf, 2, qudit_proj)).mat

            qubit = convert_code(code, A)
            gf2 = make_field(1)
            qubit_proj = np.eye(16, dtype=np.complex128)
            for row in qubit.hx:
                qubit_proj = qubit_proj @ oracle.projectors(PauliWord.x_word(gf2, row))[0]
            for row in qubit.hz:
                qubit_proj = qubit_proj @ oracle.projectors(PauliWord.z_word(gf2, row))[0]
            assert np.allclose(mapped, qubit_proj, atol=1e-10)

    def test_bundle_round_trip(self):
        gf = make_field(3)
        qubit = convert_code(make_qrs(gf, 8, 2, 5).css)
        again = QubitCssCode.from_json(qubit.to_json())
        assert np.array_equal(again.hx, qubit.hx) and np.array_equal(again.hz, qubit.hz)


class TestConvertLogicals:
    def test_k_zero_logical_spaces_equal_stabilisers(self):
        gf = make_field(2)
        code = new_css(gf, 2, [[1, 1]], [[1, 1]])
        z_space, x_space = convert_logicals(code)
        qubit = convert_code(code)
        gf2 = make_field(1)
        for space, stab in ((z_space, qubit.hz), (x_space, qubit.hx)):
            r1, _ = linalg.rref(gf2, space)
            r2, _ = linalg.rref(gf2, stab)
            assert np.array_equal(r1[: linalg.rank(gf2, space)], r2[: linalg.rank(gf2, stab)])

    def test_qrs_rank_counts(self):
        gf = make_field(3)
        code = make_qrs(gf, 8, 2, 5).css
        z_space, x_space = convert_logicals(code)
        gf2 = make_field(1)
        assert linalg.rank(gf2, z_space) == 24 - 3 * 2  # ns - s dim L_X
        assert linalg.rank(gf2, x_space) == 24 - 3 * 3  # ns - s dim L_Z

    def test_qudit_logicals_map_into_binary_spaces(self):
        from gqudits.css import logical_spaces

        gf = make_field(3)
        code = make_qrs(gf, 8, 2, 5).css
        A = default_assignment(gf, 8)
        z_space, x_space = convert_logicals(code, A)
        z_reps, x_reps = logical_spaces(code)
        gf2 = make_field(1)
        for rep in z_reps:
            assert linalg.in_row_space(gf2, z_space, expand_dual(A, rep))
        for rep in x_reps:
            assert linalg.in_row_space(gf2, x_space, expand_vector(A, rep))


class TestWorkedExamples:
    def test_single_qudit_x_measurement(self):
        """The one-check code {X^1} expands to s independent X-type qubit
        checks, for any qudit-to-qubit basis."""
        rng = np.random.default_rng(157)
        for s in (2, 3):
            gf = make_field(s)
            code = new_css(gf, 1, [[1]], np.zeros((0, 1), dtype=np.int64))
            gf2 = make_field(1)
            for A in (default_assignment(gf, 1), random_assignment(gf, 1, rng)):
                plan = make_plan(code, A)
                (group,) = plan.x_checks
                assert group.shape == (s, s)
                assert linalg.rank(gf2, group) == s

    def test_two_qudit_xx_pairwise_form(self):
        """With identical per-qudit bases the XX check expands to s checks
        of the block form (b_i, b_i)."""
        gf = make_field(3)
        B = find_self_dual(gf)
        A = BasisAssignment.uniform(B, 2)
        code = new_css(gf, 2, [[1, 1]], np.zeros((0, 2), dtype=np.int64))
        gf2 = make_field(1)
        for expansion in (find_self_dual(gf), polynomial_basis(gf)):
            plan = make_plan(code, A, x_bases=[expansion])
            (group,) = plan.x_checks
            left, right = group[:, :3], group[:, 3:]
            assert np.array_equal(left, right)
            assert linalg.rank(gf2, left) == 3


class TestReconstructSyndrome:
    def test_zero_bits(self):
        gf = make_field(2)
        assert reconstruct_syndrome(gf, [0, 0], find_self_dual(gf)) == 0

    def test_exhaustive_round_trip_q4(self):
        gf = make_field(2)
        rng = np.random.default_rng(163)
        bases = [find_self_dual(gf), polynomial_basis(gf)]
        gf2 = make_field(1)
        M = linalg.random_invertible(gf2, rng, 2)
        bases.append(FieldBasis(gf, [int(r[0] + 2 * r[1]) for r in M]))
        for B in bases:
            for eta in gf.elements():
                bits = [gf.trace(gf.mul(b, eta)) for b in B.elements]
                assert reconstruct_syndrome(gf, bits, B) == eta

    def test_planted_component(self):
        gf = make_field(3)
        qrs = make_qrs(gf, 8, 2, 5)
        B = find_self_dual(gf)
        rng = np.random.default_rng(167)
        for _ in range(20):
            W = rng.integers(0, 8, 8)
            for j, v in enumerate(qrs.css.gx):
                target = gf.dot(v, W)
                bits = [gf.trace(gf.mul(b, target)) for b in B.elements]
                assert reconstruct_syndrome(gf, bits, B) == target


@pytest.fixture(scope="module")
def setup():
    gf = make_field(3)
    qrs = make_qrs(gf, 8, 2, 5)
    A = default_assignment(gf, 8)
    plan = make_plan(qrs.css, A)
    return gf, qrs, A, plan


class TestEndToEnd:
    def test_zero_error(self, setup):
        gf, qrs, A, plan = setup
        for kind in ("Z", "X"):
            out = end_to_end_decode(qrs, A, plan, np.zeros(24, dtype=np.int64), kind)
            assert not out.any()

    def test_weight_one_qudit_errors_recovered(self, setup):
        gf, qrs, A, plan = setup
        rng = np.random.default_rng(173)
        for _ in range(200):
            kind = "Z" if rng.integers(2) else "X"
            W = np.zeros(8, dtype=np.int64)
            W[int(rng.integers(8))] = int(rng.integers(1, 8))
            bits = expand_dual(A, W) if kind == "Z" else expand_vector(A, W)
            assert np.array_equal(end_to_end_decode(qrs, A, plan, bits, kind), bits)

    def test_beyond_radius_fails_or_stays_consistent(self, setup):
        """Qudit weight 2 exceeds both decode radii here: the pipeline must
        fail loudly or return a syndrome-consistent error within radius."""
        gf, qrs, A, plan = setup
        rng = np.random.default_rng(179)
        failures = 0
        for _ in range(100):
            W = np.zeros(8, dtype=np.int64)
            pos = rng.choice(8, size=2, replace=False)
            W[pos] = rng.integers(1, 8, 2)
            bits = expand_dual(A, W)
            try:
                out = end_to_end_decode(qrs, A, plan, bits, "Z")
            except DecodeFailure:
                failures += 1
                continue
            lifted = lift_dual(A, out)
            assert np.array_equal(
                gf.matvec(qrs.css.gx, lifted), gf.matvec(qrs.css.gx, W)
            )
            assert int((lifted != 0).sum()) <= 1
        assert failures > 0


class TestQubitParams:
    def test_empirical_qubit_distance(self):
        """No closed form is asserted; the brute force just has to agree
        with a direct enumeration on a small instance."""
        gf = make_field(2)
        qubit = convert_code(make_qrs(gf, 4, 1, 3).css)
        p = qubit.params()
        assert (p.n, p.k) == (8, 4)
        assert p.distance_status == "exact" and p.d is not None and p.d >= 1

    def test_budget_guard(self):
        gf = make_field(3)
        qubit = convert_code(make_qrs(gf, 8, 2, 5).css)
        p = qubit.params(distance_budget=16)
        assert p.distance_status == "not-computed"


class TestExports:
    def test_alist_round_trip(self):
        gf = make_field(3)
        qubit = convert_code(make_qrs(gf, 8, 2, 5).css)
        text = export_alist(qubit.hx)
        back = import_alist(text)
        assert np.array_equal(back, qubit.hx)

    def test_alist_header_and_degrees(self):
        M = np.array([[1, 0, 1], [0, 1, 1]])
        lines = export_alist(M).strip().splitlines()
        assert lines[0] == "3 2"
        assert lines[1] == "2 2"
        assert lines[2] == "1 1 2"
        assert lines[3] == "2 2"
        assert lines[4].split() == ["1", "0"]  # zero padded to max degree

    def test_dense_export(self):
        M = np.array([[1, 0], [0, 1]])
        assert export_dense(M) == "10\n01\n"


class TestValidation:
    def test_mismatched_vector_length(self):
        gf = make_field(2)
        A = default_assignment(gf, 2)
        with pytest.raises(DimensionMismatch):
            expand_vector(A, [1])

    def test_conflicting_check_matrices_rejected(self):
        gf2 = make_field(1)
        code = new_css(gf2, 2, [[1, 0]], [[0, 1]])
        with pytest.raises(DimensionMismatch):
            QubitCssCode(2, [[1, 0]], [[1, 0]], code, default_assignment(make_field(1), 2))
