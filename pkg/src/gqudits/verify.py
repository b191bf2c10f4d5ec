"""Acceptance-criteria runner shared by `gqudits verify all` and the tests.

Every criterion is a pure function of the seed, so two runs with the same
seed render byte-identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import css as css_mod
from . import gates as gates_mod
from . import grs as grs_mod
from . import linalg
from . import oracle as oracle_mod
from . import q2b as q2b_mod
from . import tableau as tab_mod
from .bases import BasisAssignment, FieldBasis, dual_basis, find_self_dual, polynomial_basis
from .field import make_field
from .pauli import PauliWord

# 0.999 quantiles of the chi-squared distribution (significance 1e-3)
_CHI2_CRITICAL = {1: 10.828, 3: 16.266, 7: 24.322, 15: 37.697}


@dataclass
class CriterionResult:
    index: int
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.index:2d} {self.name}: {self.detail}"


def _random_basis(gf, rng) -> FieldBasis:
    gf2 = make_field(1)
    M = linalg.random_invertible(gf2, rng, gf.s)
    codes = [int(sum((int(b) & 1) << i for i, b in enumerate(row))) for row in M]
    return FieldBasis(gf, codes)


def _fail(detail: str) -> tuple[bool, str]:
    return False, detail


# -- criterion 1: field suite -----------------------------------------------------


def criterion_field(seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    checked = 0
    for s in (1, 2, 3, 4):
        gf = make_field(s)
        q = gf.q
        els = range(q)
        for a in els:
            for b in els:
                if gf.add(a, b) != gf.add(b, a) or gf.mul(a, b) != gf.mul(b, a):
                    return _fail(f"commutativity fails at q={q}")
                for c in els:
                    if gf.add(gf.add(a, b), c) != gf.add(a, gf.add(b, c)):
                        return _fail(f"additive associativity fails at q={q}")
                    if gf.mul(gf.mul(a, b), c) != gf.mul(a, gf.mul(b, c)):
                        return _fail(f"multiplicative associativity fails at q={q}")
                    if gf.mul(a, gf.add(b, c)) != gf.add(gf.mul(a, b), gf.mul(a, c)):
                        return _fail(f"distributivity fails at q={q}")
                    checked += 1
        for a in els:
            if gf.add(a, a) != 0 or gf.mul(a, 1) != a or gf.add(a, 0) != a:
                return _fail(f"identities fail at q={q}")
            if a and gf.mul(a, gf.inv(a)) != 1:
                return _fail(f"inverses fail at q={q}")
            if gf.pow(a, q) != a:
                return _fail(f"eta^q != eta at q={q}")
            if gf.pow(a, q - 1) != (1 if a else 0):
                return _fail(f"eta^(q-1) law fails at q={q}")
            if gf.trace(a) not in (0, 1) or gf.trace(gf.frobenius(a)) != gf.trace(a):
                return _fail(f"trace laws fail at q={q}")
            for b in els:
                if gf.trace(gf.add(a, b)) != gf.trace(a) ^ gf.trace(b):
                    return _fail(f"trace additivity fails at q={q}")
        for _ in range(50):
            tup = rng.integers(0, q, size=int(rng.integers(1, 9)))
            total = 0
            sq = 0
            for e in tup:
                total ^= int(e)
                sq ^= gf.mul(int(e), int(e))
            if gf.mul(total, total) != sq:
                return _fail(f"square-distribution law fails at q={q}")
    f8 = make_field(modulus=0b1011)
    if f8.mul(0b110, 0b111) != 0b100:
        return _fail("F_8 worked product (a+a^2)(1+a+a^2) != a^2")
    return True, f"axiom triples={checked}, q in (2,4,8,16), F_8 product reproduced"


# -- criterion 2: basis suite -----------------------------------------------------


def criterion_bases(seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    pairings = 0
    for s in (1, 2, 3, 4):
        gf = make_field(s)
        bases = [polynomial_basis(gf), find_self_dual(gf), _random_basis(gf, rng), _random_basis(gf, rng)]
        for B in bases:
            Bd = dual_basis(B)
            for beta in gf.elements():
                db = B.decompose(beta)
                for gamma in gf.elements():
                    dg = Bd.decompose(gamma)
                    if gf.trace(gf.mul(beta, gamma)) != int(db @ dg) % 2:
                        return _fail(f"trace/inner-product identity fails at q={gf.q}")
                    pairings += 1
            # recovery: rho = sum tr(b_i rho) b_i*
            for rho in gf.elements():
                acc = 0
                for b, bd in zip(B.elements, Bd.elements):
                    if gf.trace(gf.mul(b, rho)):
                        acc ^= bd
                if acc != rho:
                    return _fail(f"trace-value recovery fails at q={gf.q}")
    gram_ok = []
    for s in range(1, 9):
        gf = make_field(s)
        sd = find_self_dual(gf)
        if not sd.is_self_dual():
            return _fail(f"self-dual search returned a non-self-dual basis at s={s}")
        gram_ok.append(s)
    return True, f"pairings={pairings}, self-dual Gram identity for s={gram_ok}"


# -- criterion 3: tableau vs oracle -------------------------------------------------


def _random_full_tableau(gf, n: int, rng) -> tab_mod.CssTableau:
    m_x = int(rng.integers(0, n + 1))
    m_z = n - m_x
    gx = linalg.random_full_rank(gf, rng, m_x, n) if m_x else np.zeros((0, n), dtype=np.int64)
    if m_z:
        K = linalg.kernel_basis(gf, gx)
        L = linalg.random_invertible(gf, rng, m_z)
        gz = gf.matmul(L, K)
    else:
        gz = np.zeros((0, n), dtype=np.int64)
    xsyn = rng.integers(0, gf.q, size=m_x, dtype=np.int64)
    zsyn = rng.integers(0, gf.q, size=m_z, dtype=np.int64)
    return tab_mod.new_tableau(gf, n, gx, gz, xsyn, zsyn)


def _random_pure_word(gf, n: int, rng) -> PauliWord:
    while True:
        codes = rng.integers(0, gf.q, size=n, dtype=np.int64)
        if np.any(codes):
            break
    if rng.integers(0, 2):
        return PauliWord.x_word(gf, codes)
    return PauliWord.z_word(gf, codes)


def criterion_tableau_oracle(seed: int = 0, cases: int = 200) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    det_cases = 0
    rand_cases = 0
    counts: dict[int, np.ndarray] = {2: np.zeros(2), 4: np.zeros(4)}
    for _ in range(cases):
        gf = make_field(int(rng.integers(1, 3)))
        n = int(rng.integers(1, 4))
        t = _random_full_tableau(gf, n, rng)
        P = _random_pure_word(gf, n, rng)
        psi = oracle_mod.stabiliser_state(t)
        det = tab_mod.deterministic_outcome(t, P)
        if det is not None:
            det_cases += 1
            if oracle_mod.syndrome_component(psi, P) != det:
                return _fail("deterministic outcome disagrees with the oracle")
        else:
            rand_cases += 1
            probs = oracle_mod.born_probabilities(psi, P)
            if np.max(np.abs(probs - 1.0 / gf.q)) > 1e-8:
                return _fail("random-branch Born probabilities are not uniform")
            for eta in gf.elements():
                t2 = tab_mod.measure_postselect(t, P, eta)
                tab_state = oracle_mod.stabiliser_state(t2)
                collapsed = oracle_mod.collapse(psi, P, eta)
                if not oracle_mod.states_equal_up_to_phase(tab_state, collapsed):
                    return _fail("post-measurement state disagrees with oracle collapse")
            for _ in range(25):
                eta, _t3 = tab_mod.measure(t, P, rng)
                counts[gf.q][eta] += 1
    stats = {}
    for q, cnt in counts.items():
        total = cnt.sum()
        if total == 0:
            continue
        expected = total / q
        stat = float(((cnt - expected) ** 2 / expected).sum())
        stats[q] = round(stat, 3)
        if stat > _CHI2_CRITICAL[q - 1]:
            return _fail(f"chi-squared {stat:.3f} exceeds critical value at q={q}")
    return True, f"det={det_cases}, random={rand_cases}, chi2={stats}"


# -- criterion 4: cat-state gadget ----------------------------------------------------


def criterion_cat_gadget(seed: int = 0, trials: int = 100) -> tuple[bool, str]:
    gf = make_field(3)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        gammas = [int(g) for g in rng.integers(1, 8, size=4)]
        eta = int(rng.integers(0, 8))
        res = tab_mod.run_cat_gadget(gf, gammas, eta, rng)
        if res.recovered != eta:
            return _fail(f"gadget recovered {res.recovered}, planted {eta}")
        acc = eta
        for g, o in zip(gammas[:3], res.outcomes[:3]):
            acc ^= gf.mul(g, o)
        expected_fourth = gf.mul(gf.inv(gammas[3]), acc)
        if res.outcomes[3] != expected_fourth:
            return _fail("deterministic fourth outcome violates the closed form")
    return True, f"trials={trials} at q=8, fourth outcome closed form verified"


# -- criterion 5: gate identities -------------------------------------------------------


def _close(A: np.ndarray, B: np.ndarray, atol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(A - B)) <= atol)


def criterion_gate_identities(seed: int = 0) -> tuple[bool, str]:
    del seed  # fully deterministic
    for s in (1, 2, 3):
        gf = make_field(s)
        H = gates_mod.build_gate(gf, "hadamard").mat
        if not _close(H @ H, np.eye(gf.q)):
            return _fail(f"H^2 != I at q={gf.q}")
        CNOT = gates_mod.build_gate(gf, "cnot").mat
        for beta in gf.elements():
            X = oracle_mod.pauli_matrix(PauliWord.x_word(gf, [beta])).mat
            Z = oracle_mod.pauli_matrix(PauliWord.z_word(gf, [beta])).mat
            if not _close(H @ X @ H.conj().T, Z):
                return _fail(f"H X H+ != Z at q={gf.q}")
            if not _close(H @ Z @ H.conj().T, X):
                return _fail(f"H Z H+ != X at q={gf.q}")
            XX = oracle_mod.pauli_matrix(PauliWord.x_word(gf, [beta, 0])).mat
            XB = oracle_mod.pauli_matrix(PauliWord.x_word(gf, [beta, beta])).mat
            if not _close(CNOT @ XX @ CNOT.conj().T, XB):
                return _fail(f"CNOT X-propagation fails at q={gf.q}")
            ZZ = oracle_mod.pauli_matrix(PauliWord.z_word(gf, [0, beta])).mat
            ZB = oracle_mod.pauli_matrix(PauliWord.z_word(gf, [beta, beta])).mat
            if not _close(CNOT @ ZZ @ CNOT.conj().T, ZB):
                return _fail(f"CNOT Z-propagation fails at q={gf.q}")
        for delta in gf.nonzero_elements():
            M = gates_mod.build_gate(gf, "mult", delta=delta).mat
            for beta in gf.elements():
                X = oracle_mod.pauli_matrix(PauliWord.x_word(gf, [beta])).mat
                Xd = oracle_mod.pauli_matrix(PauliWord.x_word(gf, [gf.mul(delta, beta)])).mat
                if not _close(M @ X @ M.conj().T, Xd):
                    return _fail(f"M X conjugation fails at q={gf.q}")
                Z = oracle_mod.pauli_matrix(PauliWord.z_word(gf, [beta])).mat
                Zd = oracle_mod.pauli_matrix(
                    PauliWord.z_word(gf, [gf.mul(beta, gf.inv(delta))])
                ).mat
                if not _close(M @ Z @ M.conj().T, Zd):
                    return _fail(f"M Z conjugation fails at q={gf.q}")
    gf4 = make_field(2)
    ccz1 = gates_mod.build_gate(gf4, "ccz", gamma=1).mat
    for gamma in gf4.nonzero_elements():
        cczg = gates_mod.build_gate(gf4, "ccz", gamma=gamma).mat
        Mg = gates_mod.embed_single(gf4, 3, 0, gates_mod.build_gate(gf4, "mult", delta=gamma)).mat
        Mi = gates_mod.embed_single(
            gf4, 3, 0, gates_mod.build_gate(gf4, "mult", delta=gf4.inv(gamma))
        ).mat
        if not _close(cczg, Mi @ ccz1 @ Mg):
            return _fail(f"CCZ^gamma != M^(1/gamma) CCZ M^gamma at gamma={gamma}")
    witness = None
    for g1 in gf4.elements():
        for g2 in gf4.elements():
            S1 = gates_mod.build_gate(gf4, "s", gamma=g1).mat
            S2 = gates_mod.build_gate(gf4, "s", gamma=g2).mat
            S12 = gates_mod.build_gate(gf4, "s", gamma=g1 ^ g2).mat
            if not _close(S1 @ S2, S12):
                witness = (g1, g2)
                break
        if witness:
            break
    if witness is None:
        return _fail("no S-gate non-additivity witness found at q=4")
    return True, f"conjugation tables at q in (2,4,8); S witness gammas={witness}"


# -- criterion 6: hierarchy levels ---------------------------------------------------


def criterion_hierarchy(seed: int = 0) -> tuple[bool, str]:
    del seed
    reports = []
    for s in (1, 2):
        gf = make_field(s)
        for kind, params, expect in (
            ("cnot", {}, 2),
            ("hadamard", {}, 2),
        ):
            lvl = gates_mod.hierarchy_level(gates_mod.build_gate(gf, kind, **params), 4, kind).level
            if lvl != expect:
                return _fail(f"{kind} at q={gf.q} reported level {lvl}, expected {expect}")
        for delta in gf.nonzero_elements():
            lvl = gates_mod.hierarchy_level(
                gates_mod.build_gate(gf, "mult", delta=delta), 4, "mult"
            ).level
            expect = 1 if delta == 1 else 2  # M^1 is the identity, a Pauli
            if lvl != expect:
                return _fail(f"mult({delta}) at q={gf.q} reported level {lvl}")
        for gamma in gf.nonzero_elements():
            lvl = gates_mod.hierarchy_level(
                gates_mod.build_gate(gf, "ccz", gamma=gamma), 4, "ccz"
            ).level
            if lvl != 3:
                return _fail(f"ccz({gamma}) at q={gf.q} reported level {lvl}, expected 3")
        reports.append(gf.q)
    gf8 = make_field(3)
    for beta in gf8.elements():
        U = gates_mod.build_gate(gf8, "u_n", n=7, beta=beta)
        is_id = _close(U.mat, np.eye(8))
        if gf8.trace(beta) == 0:
            if not is_id:
                return _fail(f"U_7^{beta} should be the identity (tr=0)")
        else:
            if is_id:
                return _fail(f"U_7^{beta} should not be the identity (tr=1)")
            lvl = gates_mod.hierarchy_level(U, 4, "u_n").level
            if lvl != 3:
                return _fail(f"U_7^{beta} reported level {lvl}, expected exactly 3")
    return True, f"cnot/h/mult level 2 and ccz level 3 at q={reports}; U_7 cases at q=8"


# -- criterion 7: isomorphism suite ---------------------------------------------------


def criterion_isomorphism(seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    gf = make_field(2)
    B = find_self_dual(gf)
    zoo1 = {
        "hadamard": gates_mod.build_gate(gf, "hadamard"),
        "mult2": gates_mod.build_gate(gf, "mult", delta=2),
        "mult3": gates_mod.build_gate(gf, "mult", delta=3),
        "s1": gates_mod.build_gate(gf, "s", gamma=1),
        "x2": oracle_mod.pauli_matrix(PauliWord.x_word(gf, [2])),
        "z3": oracle_mod.pauli_matrix(PauliWord.z_word(gf, [3])),
    }
    names = sorted(zoo1)
    for a in names:
        for b in names:
            U1, U2 = zoo1[a], zoo1[b]
            lhs = gates_mod.pi_map(B, oracle_mod.DenseOperator(gf, 1, U1.mat @ U2.mat)).mat
            rhs = gates_mod.pi_map(B, U1).mat @ gates_mod.pi_map(B, U2).mat
            if not _close(lhs, rhs, 1e-10):
                return _fail(f"Pi homomorphism fails on {a} * {b}")
    Bd = B.dual()
    for gamma in gf.elements():
        lhs = gates_mod.pi_map(B, oracle_mod.pauli_matrix(PauliWord.x_word(gf, [gamma]))).mat
        bits = B.decompose(gamma)
        rhs = oracle_mod.pauli_matrix(PauliWord.x_word(make_field(1), bits)).mat
        if not _close(lhs, rhs, 1e-10):
            return _fail(f"Pi(X^{gamma}) != X^(D_B) as matrices")
        lhs = gates_mod.pi_map(B, oracle_mod.pauli_matrix(PauliWord.z_word(gf, [gamma]))).mat
        rhs = oracle_mod.pauli_matrix(PauliWord.z_word(make_field(1), Bd.decompose(gamma))).mat
        if not _close(lhs, rhs, 1e-10):
            return _fail(f"Pi(Z^{gamma}) != Z^(D_B*) as matrices")
    # hierarchy level preserved across the map for the zoo gates
    checked_levels = []
    for name, U, n in (
        ("hadamard", gates_mod.build_gate(gf, "hadamard"), 1),
        ("mult2", gates_mod.build_gate(gf, "mult", delta=2), 1),
        ("cnot", gates_mod.build_gate(gf, "cnot"), 2),
        ("ccz", gates_mod.build_gate(gf, "ccz", gamma=1), 3),
    ):
        assignment = BasisAssignment.uniform(B, n)
        lq = gates_mod.hierarchy_level(U, 4, name).level
        lb = gates_mod.hierarchy_level(gates_mod.pi_map(assignment, U), 4, name).level
        checked_levels.append((name, lq))
        if lq != lb:
            return _fail(f"hierarchy level not preserved for {name}: {lq} vs {lb}")
    # Pi(CNOT) is exactly the pairwise qubit CNOTs
    assignment2 = BasisAssignment.uniform(B, 2)
    got = gates_mod.pi_map(assignment2, gates_mod.build_gate(gf, "cnot")).mat
    expected = np.zeros((16, 16))
    for j in range(16):
        b = [(j >> (3 - i)) & 1 for i in range(4)]
        tgt = [b[0], b[1], b[2] ^ b[0], b[3] ^ b[1]]
        expected[sum(v << (3 - i) for i, v in enumerate(tgt)), j] = 1.0
    if not _close(got, expected, 0):
        return _fail("Pi(CNOT) is not the pairwise qubit CNOT matrix")
    # compatibility Pi(U) phi = phi U on random states
    ops = [zoo1["hadamard"], zoo1["mult2"], zoo1["s1"]]
    for trial in range(100):
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi = oracle_mod.StateVector(gf, 1, amps / np.linalg.norm(amps))
        U = ops[trial % len(ops)]
        lhs = gates_mod.pi_map(B, U).mat @ gates_mod.phi_map(B, psi).amps
        rhs = gates_mod.phi_map(B, U.apply(psi)).amps
        if np.max(np.abs(lhs - rhs)) > 1e-10:
            return _fail("compatibility Pi(U) phi != phi U on a random state")
    return True, f"homomorphism, Pauli map, CNOT block form, levels={checked_levels}"


# -- criterion 8: GRS suite ---------------------------------------------------------


def _enumerate_weights(code: grs_mod.GrsCode) -> np.ndarray:
    gf = code.gf
    G = grs_mod.generator_matrix(code)
    hist = np.zeros(code.n + 1, dtype=np.int64)
    shifts = np.array([gf.s * (code.k - 1 - i) for i in range(code.k)], dtype=np.int64)
    for idx in range(gf.q**code.k):
        msg = (idx >> shifts) & (gf.q - 1)
        word = gf.matvec(G.T, msg)
        hist[int((word != 0).sum())] += 1
    return hist


def criterion_grs(seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    for trial in range(20):
        gf = make_field(2 if trial % 2 else 3)
        n = int(rng.integers(2, gf.q + 1))
        k = int(rng.integers(1, n + 1))
        alpha = rng.permutation(gf.q)[:n].astype(np.int64)
        v = rng.integers(1, gf.q, size=n, dtype=np.int64)
        code = grs_mod.GrsCode(gf, k, alpha, v)
        dualc = grs_mod.dual(code)
        G, Gd = grs_mod.generator_matrix(code), grs_mod.generator_matrix(dualc)
        if G.size and Gd.size and np.any(gf.matmul(G, Gd.T)):
            return _fail(f"dual generator matrices not orthogonal (trial {trial})")
    census = []
    for s, n, k in ((2, 3, 2), (3, 7, 3)):
        gf = make_field(s)
        code = grs_mod.GrsCode(
            gf, k, np.arange(n, dtype=np.int64), np.ones(n, dtype=np.int64)
        )
        hist = _enumerate_weights(code)
        d = n - k + 1
        if int(hist[0]) != 1 or int(hist.sum()) != gf.q**k:
            return _fail(f"weight census does not total q^k at (q={gf.q},n={n},k={k})")
        for w in range(1, n + 1):
            expect = grs_mod.mds_weight_count(n, k, gf.q, w) if w >= d else 0
            if int(hist[w]) != expect:
                return _fail(f"weight enumerator mismatch at (q={gf.q},n={n},k={k},w={w})")
        words = set()
        for roots in combinations(code.alpha.tolist(), k - 1):
            for eta in gf.nonzero_elements():
                cw = grs_mod.min_weight_codeword(code, roots, eta)
                if int((cw != 0).sum()) != d:
                    return _fail("minimum-weight codeword has the wrong weight")
                words.add(tuple(cw.tolist()))
        expect_census = (gf.q - 1) * math.comb(n, k - 1)
        if len(words) != expect_census or int(hist[d]) != expect_census:
            return _fail(f"minimum-weight census mismatch at (q={gf.q},n={n},k={k})")
        census.append(expect_census)
    return True, f"20 dual-orthogonality instances; censuses={census}"


# -- criterion 9: QRS end to end -------------------------------------------------------


def criterion_qrs(seed: int = 0, trials: int = 500) -> tuple[bool, str]:
    gf = make_field(3)
    qrs = grs_mod.make_qrs(gf, 8, 2, 5)
    p = css_mod.params(qrs.css)
    if (p.k, p.d_x, p.d_z) != (3, 4, 3):
        return _fail(f"QRS(8,8,2,5) parameters {p.to_json()} disagree with the formulas")
    if (p.d_x, p.d_z) != (qrs.d_x_formula, qrs.d_z_formula):
        return _fail("enumerated distances disagree with the closed forms")
    assignment = q2b_mod.default_assignment(gf, 8)
    qubit = q2b_mod.convert_code(qrs.css, assignment)
    gf2 = make_field(1)
    rx, rz = linalg.rank(gf2, qubit.hx), linalg.rank(gf2, qubit.hz)
    if qubit.ns != 24 or rx != 6 or rz != 9 or qubit.k != 9:
        return _fail(f"conversion gave [[{qubit.ns},{qubit.k}]] with ranks ({rx},{rz})")
    plan = q2b_mod.make_plan(qrs.css, assignment)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        kind = "Z" if rng.integers(0, 2) else "X"
        W = np.zeros(8, dtype=np.int64)
        W[int(rng.integers(0, 8))] = int(rng.integers(1, 8))
        bits = (
            q2b_mod.expand_dual(assignment, W)
            if kind == "Z"
            else q2b_mod.expand_vector(assignment, W)
        )
        recovered = q2b_mod.end_to_end_decode(qrs, assignment, plan, bits, kind)
        if not np.array_equal(recovered, bits):
            return _fail(f"pipeline failed to recover a weight-1 {kind} error")
    return True, f"[[24,9]] conversion, ranks (6,9), {trials} within-radius recoveries"


# -- criterion 10: determinism ---------------------------------------------------------


_CRITERIA: list[tuple[str, object]] = [
    ("field-suite", criterion_field),
    ("basis-suite", criterion_bases),
    ("tableau-vs-oracle", criterion_tableau_oracle),
    ("cat-state-gadget", criterion_cat_gadget),
    ("gate-identities", criterion_gate_identities),
    ("hierarchy-levels", criterion_hierarchy),
    ("isomorphism-suite", criterion_isomorphism),
    ("grs-suite", criterion_grs),
    ("qrs-end-to-end", criterion_qrs),
]


def run_criteria(seed: int = 0) -> list[CriterionResult]:
    out = []
    for i, (name, fn) in enumerate(_CRITERIA, start=1):
        ok, detail = fn(seed)
        out.append(CriterionResult(i, name, ok, detail))
    return out


def render_report(results: list[CriterionResult]) -> str:
    return "\n".join(r.line() for r in results)


def criterion_determinism(seed: int = 0) -> tuple[bool, str]:
    first = render_report(run_criteria(seed))
    second = render_report(run_criteria(seed))
    if first != second:
        return _fail("two runs with the same seed rendered different reports")
    return True, f"two seeded runs rendered byte-identical reports ({len(first)} bytes)"


def run_all(seed: int = 0) -> tuple[str, bool]:
    """Full acceptance report: criteria 1-9 plus the determinism re-run."""
    results = run_criteria(seed)
    again = render_report(run_criteria(seed))
    det_ok = render_report(results) == again
    detail = (
        f"two seeded runs rendered byte-identical reports ({len(again)} bytes)"
        if det_ok
        else "two runs with the same seed rendered different reports"
    )
    results.append(CriterionResult(10, "determinism", det_ok, detail))
    ok = all(r.ok for r in results)
    passed = sum(1 for r in results if r.ok)
    lines = render_report(results)
    summary = f"{'OK' if ok else 'FAILED'} ({passed}/{len(results)} criteria passed, seed={seed})"
    return lines + "\n" + summary + "\n", ok
