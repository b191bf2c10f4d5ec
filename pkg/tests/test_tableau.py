"""Tableau validation, row operations, Clifford updates, and measurement,
cross-checked against the dense oracle."""

import numpy as np
import pytest

from gqudits import linalg, oracle
from gqudits.errors import (
    FullTableauRequired,
    InvalidScale,
    NotCommuting,
    NotCssPreserving,
    PureTypeRequired,
    RankDeficient,
)
from gqudits.field import make_field
from gqudits.gates import build_gate, embed_single
from gqudits.pauli import PauliWord
from gqudits.tableau import (
    CssTableau,
    add_row,
    apply_gate,
    canonical_form,
    cat_block_tableau,
    deterministic_outcome,
    measure,
    measure_postselect,
    new_tableau,
    run_cat_gadget,
    scale_row,
    tableaux_equal,
)


def random_full_tableau(gf, n, rng):
    m_x = int(rng.integers(0, n + 1))
    m_z = n - m_x
    gx = linalg.random_full_rank(gf, rng, m_x, n) if m_x else np.zeros((0, n), dtype=np.int64)
    if m_z:
        K = linalg.kernel_basis(gf, gx)
        gz = gf.matmul(linalg.random_invertible(gf, rng, m_z), K)
    else:
        gz = np.zeros((0, n), dtype=np.int64)
    return new_tableau(
        gf, n, gx, gz,
        rng.integers(0, gf.q, m_x, dtype=np.int64),
        rng.integers(0, gf.q, m_z, dtype=np.int64),
    )


def random_pure_word(gf, n, rng):
    while True:
        codes = rng.integers(0, gf.q, n, dtype=np.int64)
        if codes.any():
            break
    return PauliWord.x_word(gf, codes) if rng.integers(2) else PauliWord.z_word(gf, codes)


def scramble(t, rng, ops=8):
    out = t
    for _ in range(ops):
        block = "x" if rng.integers(2) else "z"
        rows = out.xrows if block == "x" else out.zrows
        m = rows.shape[0]
        if m == 0:
            continue
        if m >= 2 and rng.integers(2):
            i, j = rng.choice(m, size=2, replace=False)
            out = add_row(out, block, int(i), int(j))
        else:
            out = scale_row(out, block, int(rng.integers(m)), int(rng.integers(1, t.gf.q)))
    return out


class TestValidation:
    def test_qudit_cat_rows_valid(self):
        gf = make_field(3)
        g = [3, 5, 6, 7]
        t = new_tableau(
            gf, 4,
            [g],
            [[g[1], g[0], 0, 0], [0, g[2], g[1], 0], [0, 0, g[3], g[2]]],
            [0], [0, 0, 0],
        )
        assert t.is_full

    def test_duplicate_row_rejected(self):
        gf = make_field(2)
        with pytest.raises(RankDeficient):
            new_tableau(gf, 2, [[1, 1], [1, 1]], np.zeros((0, 2)), [0, 0], [])

    def test_non_orthogonal_rejected(self):
        gf = make_field(2)
        with pytest.raises(NotCommuting):
            new_tableau(gf, 2, [[1, 0]], [[1, 0]], [0], [0])

    def test_json_round_trip(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 2]], [[2, 1]], [3], [1])
        t2 = CssTableau.from_json(t.to_json())
        assert tableaux_equal(t, t2)


def walkthrough_tableaux(gf, gammas, etas, eta):
    """The four displayed forms of the measurement walkthrough, as X blocks."""
    g1, g2, g3, g4 = gammas
    e1, e2, e3 = etas
    zeros = [0, 0, 0, 0]

    def unit_pair(j):
        row = [0] * 8
        row[j] = 1
        row[j + 4] = 1
        return row

    first = (
        [[g1, g2, g3, g4] + zeros, unit_pair(0), unit_pair(1), unit_pair(2), zeros + [g1, g2, g3, g4]],
        [0, e1, e2, e3, eta],
    )
    scaled_pairs = []
    for j, g in enumerate((g1, g2, g3)):
        row = [0] * 8
        row[j] = g
        row[j + 4] = g
        scaled_pairs.append(row)
    second = (
        [[g1, g2, g3, g4] + zeros] + scaled_pairs + [zeros + [g1, g2, g3, g4]],
        [0, gf.mul(g1, e1), gf.mul(g2, e2), gf.mul(g3, e3), eta],
    )
    acc = eta
    for g, e in zip((g1, g2, g3), (e1, e2, e3)):
        acc ^= gf.mul(g, e)
    top3 = [0, 0, 0, g4, 0, 0, 0, g4]
    third = ([top3] + scaled_pairs + [zeros + [g1, g2, g3, g4]], [acc] + second[1][1:4] + [eta])
    top4 = [0, 0, 0, 1, 0, 0, 0, 1]
    fourth = (
        [top4] + scaled_pairs + [zeros + [g1, g2, g3, g4]],
        [gf.mul(gf.inv(g4), acc)] + second[1][1:4] + [eta],
    )
    return first, second, third, fourth


class TestRowOperations:
    def test_scale_by_one_is_identity(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], [[1, 1]], [2], [3])
        assert tableaux_equal(t, scale_row(t, "x", 0, 1))

    def test_scale_by_zero_rejected(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], [[1, 1]], [0], [0])
        with pytest.raises(InvalidScale):
            scale_row(t, "x", 0, 0)

    def test_walkthrough_row_rewrites(self):
        """Scaling rows 2-4 by gamma_i, folding them plus the code row into
        row 1, then normalising row 1 reproduces the displayed sequence."""
        gf = make_field(3)
        gammas = (2, 7, 3, 5)
        etas = (4, 1, 6)
        eta = 3
        first, second, third, fourth = walkthrough_tableaux(gf, gammas, etas, eta)
        t = CssTableau(gf, 8, np.array(first[0]), np.zeros((0, 8)), np.array(first[1]), [])
        for j, g in enumerate(gammas[:3], start=1):
            t = scale_row(t, "x", j, g)
        assert np.array_equal(t.xrows, np.array(second[0]))
        assert np.array_equal(t.xsyn, np.array(second[1]))
        for j in (1, 2, 3, 4):
            t = add_row(t, "x", j, 0)
        assert np.array_equal(t.xrows, np.array(third[0]))
        assert np.array_equal(t.xsyn, np.array(third[1]))
        t = scale_row(t, "x", 0, gf.inv(gammas[3]))
        assert np.array_equal(t.xrows, np.array(fourth[0]))
        assert np.array_equal(t.xsyn, np.array(fourth[1]))

    def test_walkthrough_forms_share_canonical_form(self):
        gf = make_field(3)
        forms = walkthrough_tableaux(gf, (2, 7, 3, 5), (4, 1, 6), 3)
        canon = []
        for rows, syn in forms:
            t = CssTableau(gf, 8, np.array(rows), np.zeros((0, 8)), np.array(syn), [])
            canon.append(canonical_form(t))
        for c in canon[1:]:
            assert np.array_equal(c.xrows, canon[0].xrows)
            assert np.array_equal(c.xsyn, canon[0].xsyn)


class TestCanonicalForm:
    def test_idempotent(self):
        gf = make_field(2)
        rng = np.random.default_rng(43)
        for _ in range(20):
            t = random_full_tableau(gf, 3, rng)
            c = canonical_form(t)
            assert tableaux_equal(c, canonical_form(c))

    def test_scrambles_share_canonical_form(self):
        gf = make_field(2)
        rng = np.random.default_rng(47)
        for _ in range(100):
            t = random_full_tableau(gf, 3, rng)
            assert tableaux_equal(t, scramble(t, rng))

    def test_state_equality_soundness(self):
        """Canonical forms match iff the oracle states agree up to phase."""
        rng = np.random.default_rng(53)
        same = diff = 0
        for _ in range(200):
            gf = make_field(int(rng.integers(1, 3)))
            n = int(rng.integers(1, 4))
            t1 = random_full_tableau(gf, n, rng)
            t2 = scramble(t1, rng) if rng.integers(2) else random_full_tableau(gf, n, rng)
            equal_canon = tableaux_equal(t1, t2)
            equal_state = oracle.states_equal_up_to_phase(
                oracle.stabiliser_state(t1), oracle.stabiliser_state(t2)
            )
            assert equal_canon == equal_state
            same += equal_canon
            diff += not equal_canon
        assert same > 20 and diff > 20  # both branches genuinely exercised


class TestApplyGate:
    def test_mult_by_one_is_identity(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], [[1, 1]], [0], [0])
        assert tableaux_equal(t, apply_gate(t, "mult", 0, delta=1))

    def test_qubit_cnot_rule(self):
        gf = make_field(1)
        t = new_tableau(gf, 2, [[1, 0]], [[0, 1]], [0], [0])
        t2 = apply_gate(t, "cnot", 0, 1)
        assert np.array_equal(t2.xrows, [[1, 1]])
        assert np.array_equal(t2.zrows, [[1, 1]])

    @pytest.mark.parametrize("kind,sites,extra", [
        ("cnot", (0, 1), {}),
        ("mult", (0,), {"delta": 2}),
        ("mult", (1,), {"delta": 3}),
    ])
    def test_update_matches_oracle_conjugation(self, kind, sites, extra):
        gf = make_field(2)
        rng = np.random.default_rng(59)
        if kind == "cnot":
            gate = build_gate(gf, "cnot")
        else:
            gate = embed_single(gf, 2, sites[0], build_gate(gf, "mult", **extra))
        for _ in range(100):
            t = random_full_tableau(gf, 2, rng)
            t2 = apply_gate(t, kind, *sites, **extra)
            lhs = oracle.stabiliser_state(t2)
            rhs = oracle.StateVector(gf, 2, gate.mat @ oracle.stabiliser_state(t).amps)
            assert oracle.states_equal_up_to_phase(lhs, rhs)

    def test_hadamard_legal_case_matches_oracle(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[2, 0]], [[0, 3]], [1], [2])
        t2 = apply_gate(t, "hadamard", 0)
        assert t2.m_x == 0 and t2.m_z == 2  # the site-0 X row switched blocks
        gate = embed_single(gf, 2, 0, build_gate(gf, "hadamard"))
        lhs = oracle.stabiliser_state(t2)
        rhs = oracle.StateVector(gf, 2, gate.mat @ oracle.stabiliser_state(t).amps)
        assert oracle.states_equal_up_to_phase(lhs, rhs)

    def test_hadamard_mixing_rejected(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], [[1, 1]], [0], [0])
        with pytest.raises(NotCssPreserving):
            apply_gate(t, "hadamard", 0)


class TestMeasure:
    def test_existing_row_is_deterministic(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 2]], [[1, 3]], [2], [1])
        eta, t2 = measure(t, PauliWord.x_word(gf, [1, 2]), np.random.default_rng(0))
        assert eta == 2 and t2 is t
        # a scalar multiple of the row scales the outcome
        eta, _ = measure(t, PauliWord.x_word(gf, [gf.mul(3, 1), gf.mul(3, 2)]), np.random.default_rng(0))
        assert eta == gf.mul(3, 2)

    def test_measure_requires_full_tableau(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], np.zeros((0, 2)), [0], [])
        with pytest.raises(FullTableauRequired):
            measure(t, PauliWord.x_word(gf, [1, 0]), np.random.default_rng(0))

    def test_measure_requires_pure_type(self):
        gf = make_field(2)
        t = new_tableau(gf, 2, [[1, 1]], [[1, 1]], [0], [0])
        with pytest.raises(PureTypeRequired):
            measure(t, PauliWord.from_vectors(gf, [1, 0], [0, 1]), np.random.default_rng(0))

    def test_random_branch_preserves_structure(self):
        gf = make_field(2)
        rng = np.random.default_rng(61)
        for _ in range(50):
            t = random_full_tableau(gf, 3, rng)
            P = random_pure_word(gf, 3, rng)
            eta, t2 = measure(t, P, rng)
            assert t2.is_full
            # rank and orthogonality are revalidated by construction inside
            # measure; a deliberate recheck:
            assert linalg.rank(gf, t2.xrows) == t2.m_x
            assert linalg.rank(gf, t2.zrows) == t2.m_z
            if t2.m_x and t2.m_z:
                assert not np.any(gf.matmul(t2.xrows, t2.zrows.T))
            # measuring the same word again is now deterministic with the
            # same outcome
            eta2, t3 = measure(t2, P, rng)
            assert eta2 == eta and t3 is t2

    def test_agreement_with_oracle(self):
        rng = np.random.default_rng(67)
        for _ in range(60):
            gf = make_field(int(rng.integers(1, 3)))
            n = int(rng.integers(1, 4))
            t = random_full_tableau(gf, n, rng)
            P = random_pure_word(gf, n, rng)
            psi = oracle.stabiliser_state(t)
            det = deterministic_outcome(t, P)
            if det is not None:
                assert oracle.syndrome_component(psi, P) == det
            else:
                assert np.allclose(oracle.born_probabilities(psi, P), 1 / gf.q, atol=1e-8)
                for eta in gf.elements():
                    t2 = measure_postselect(t, P, eta)
                    assert oracle.states_equal_up_to_phase(
                        oracle.stabiliser_state(t2), oracle.collapse(psi, P, eta)
                    )


class TestCatGadget:
    def test_qubit_trivial_case(self):
        gf = make_field(1)
        res = run_cat_gadget(gf, [1, 1, 1, 1], 0, np.random.default_rng(2))
        assert res.recovered == 0

    def test_q8_recovers_planted_syndrome(self):
        gf = make_field(3)
        rng = np.random.default_rng(71)
        for _ in range(25):
            gammas = [int(g) for g in rng.integers(1, 8, 4)]
            eta = int(rng.integers(0, 8))
            res = run_cat_gadget(gf, gammas, eta, rng)
            assert res.recovered == eta

    def test_zero_gamma_rejected(self):
        with pytest.raises(InvalidScale):
            cat_block_tableau(make_field(3), [1, 0, 1, 1], 0)

    def test_intermediate_matches_displayed_tableau(self):
        """After three XX measurements the X block matches the displayed
        five-row form (same canonical form, syndromes included)."""
        gf = make_field(3)
        gammas = (2, 7, 3, 5)
        eta = 6
        rng = np.random.default_rng(73)
        t = cat_block_tableau(gf, gammas, eta)
        etas = []
        for j in range(3):
            codes = [0] * 8
            codes[j] = 1
            codes[j + 4] = 1
            out, t = measure(t, PauliWord.x_word(gf, codes), rng)
            etas.append(out)
        first, *_ = walkthrough_tableaux(gf, gammas, tuple(etas), eta)
        displayed = CssTableau(gf, 8, np.array(first[0]), np.zeros((0, 8)), np.array(first[1]), [])
        got = canonical_form(CssTableau(gf, 8, t.xrows, np.zeros((0, 8)), t.xsyn, []))
        want = canonical_form(displayed)
        assert np.array_equal(got.xrows, want.xrows)
        assert np.array_equal(got.xsyn, want.xsyn)

    def test_fourth_outcome_closed_form(self):
        gf = make_field(3)
        rng = np.random.default_rng(79)
        for _ in range(25):
            gammas = [int(g) for g in rng.integers(1, 8, 4)]
            eta = int(rng.integers(0, 8))
            res = run_cat_gadget(gf, gammas, eta, rng)
            acc = eta
            for g, o in zip(gammas[:3], res.outcomes[:3]):
                acc ^= gf.mul(g, o)
            assert res.outcomes[3] == gf.mul(gf.inv(gammas[3]), acc)


class TestDimensionCut:
    def test_extra_row_cuts_dimension_q_fold(self):
        """Each added syndrome constraint divides the stabilised subspace
        dimension by q (projector-trace check at q=4, n=2)."""
        gf = make_field(2)
        w1 = PauliWord.x_word(gf, [1, 1])
        w2 = PauliWord.z_word(gf, [1, 1])
        p1 = oracle.projectors(w1)[0]
        dim1 = round(np.trace(p1).real)
        assert dim1 == 4  # q^(n-1)
        p12 = p1 @ oracle.projectors(w2)[0]
        assert round(np.trace(p12).real) == 1  # q^(n-2)
