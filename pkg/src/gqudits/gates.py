"""The qudit gate zoo, Clifford-hierarchy testing, and the qudit-to-qubit maps.

Gate matrices are dense and tiny.  Hierarchy membership is the operational
recursion: level 1 is "proportional to a Pauli", level k+1 conjugates the
single-site X/Z generators over a fixed F_2-basis into level k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import BasisAssignment, FieldBasis
from .errors import DimensionMismatch, InvalidGate, NonUnitary, TooLarge
from .field import GF, make_field
from .oracle import DenseOperator, StateVector, all_digits, pauli_matrix
from .pauli import PauliWord

HIERARCHY_DIM_CAP = 1 << 9
_PAULI_ATOL = 1e-8


# -- gate construction ----------------------------------------------------------


def _diag_phase_op(gf: GF, n: int, phase_of_digits) -> np.ndarray:
    digits = all_digits(gf, n)
    return np.diag(np.array([phase_of_digits(u) for u in digits], dtype=np.complex128))


def _take(params: dict, kind: str, name: str):
    if name not in params:
        raise InvalidGate(f"gate {kind!r} needs parameter {name!r}")
    return params.pop(name)


def build_gate(gf: GF, kind: str, **params) -> DenseOperator:
    """Dense matrix for a named gate.

    Kinds: x(beta), z(gamma), hadamard, mult(delta), cnot, ccz(gamma),
    multi_cz(l, gamma), u_n(n, beta), s(gamma), t(gamma).
    """
    q = gf.q
    if kind == "x":
        beta = gf.check_code(_take(params, kind, "beta"))
        op = pauli_matrix(PauliWord.x_word(gf, [beta]))
    elif kind == "z":
        gamma = gf.check_code(_take(params, kind, "gamma"))
        op = pauli_matrix(PauliWord.z_word(gf, [gamma]))
    elif kind == "hadamard":
        mat = np.zeros((q, q), dtype=np.complex128)
        for mu in gf.elements():
            for eta in gf.elements():
                mat[mu, eta] = 1 - 2 * gf.trace(gf.mul(mu, eta))
        op = DenseOperator(gf, 1, mat / np.sqrt(q))
    elif kind == "mult":
        delta = gf.check_code(_take(params, kind, "delta"))
        if delta == 0:
            raise NonUnitary("multiplication by 0 is not unitary")
        mat = np.zeros((q, q), dtype=np.complex128)
        for eta in gf.elements():
            mat[gf.mul(delta, eta), eta] = 1.0
        op = DenseOperator(gf, 1, mat)
    elif kind == "cnot":
        mat = np.zeros((q * q, q * q), dtype=np.complex128)
        for e1 in gf.elements():
            for e2 in gf.elements():
                mat[e1 * q + (e2 ^ e1), e1 * q + e2] = 1.0
        op = DenseOperator(gf, 2, mat)
    elif kind in ("ccz", "multi_cz"):
        if kind == "ccz":
            l = 3
        else:
            l = int(_take(params, kind, "l"))
            if not 2 <= l <= 4 or q > 4:
                raise TooLarge("multi_cz supported for l <= 4 and q <= 4 only")
        gamma = gf.check_code(_take(params, kind, "gamma"))

        def phase(u, gamma=gamma):
            prod = 1
            for c in u:
                prod = gf.mul(prod, int(c))
            return 1 - 2 * gf.trace(gf.mul(gamma, prod))

        op = DenseOperator(gf, l, _diag_phase_op(gf, l, phase))
    elif kind == "u_n":
        npow = int(_take(params, kind, "n"))
        beta = gf.check_code(_take(params, kind, "beta"))
        if npow < 1:
            raise InvalidGate("u_n needs a power n >= 1")
        mat = _diag_phase_op(
            gf, 1, lambda u: 1 - 2 * gf.trace(gf.mul(beta, gf.pow(int(u[0]), npow)))
        )
        op = DenseOperator(gf, 1, mat)
    elif kind == "s":
        gamma = gf.check_code(_take(params, kind, "gamma"))
        mat = _diag_phase_op(gf, 1, lambda u: 1j ** gf.trace(gf.mul(gamma, int(u[0]))))
        op = DenseOperator(gf, 1, mat)
    elif kind == "t":
        gamma = gf.check_code(_take(params, kind, "gamma"))
        root8 = np.exp(1j * np.pi / 4)
        mat = _diag_phase_op(gf, 1, lambda u: root8 ** gf.trace(gf.mul(gamma, int(u[0]))))
        op = DenseOperator(gf, 1, mat)
    else:
        raise InvalidGate(f"unknown gate kind {kind!r}")
    if params:
        raise InvalidGate(f"unused parameters for {kind!r}: {sorted(params)}")
    return op


def embed_single(gf: GF, n: int, site: int, U: DenseOperator) -> DenseOperator:
    """Tensor a single-qudit operator into an n-qudit identity background."""
    if U.n != 1:
        raise DimensionMismatch("embed_single takes a 1-qudit operator")
    mat = np.eye(1, dtype=np.complex128)
    for i in range(n):
        mat = np.kron(mat, U.mat if i == site else np.eye(gf.q))
    return DenseOperator(gf, n, mat)


# -- Pauli decomposition ----------------------------------------------------------


def _chi_matrix(gf: GF, n: int) -> np.ndarray:
    """CHI[b, j] = (-1)^tr(b . j) over packed indices b, j."""
    q = gf.q
    chi1 = np.empty((q, q), dtype=np.int8)
    for b in range(q):
        for j in range(q):
            chi1[b, j] = 1 - 2 * gf.trace(gf.mul(b, j))
    out = np.ones((1, 1), dtype=np.int8)
    for _ in range(n):
        out = np.kron(out, chi1)
    return out


def pauli_coefficient_matrix(U: DenseOperator, cap: int = HIERARCHY_DIM_CAP) -> np.ndarray:
    """C[a, b] with U = sum_{a,b} C[a, b] X^a Z^b over packed index vectors."""
    d = U.dim
    if d > cap:
        raise TooLarge(f"dimension {d} exceeds cap {cap}")
    cols = np.arange(d, dtype=np.int64)
    xoridx = cols[:, None] ^ cols[None, :]
    diagonals = U.mat[xoridx, cols[None, :]]  # row a holds U[j ^ a, j]
    chi = _chi_matrix(U.gf, U.n).astype(np.float64)
    return (diagonals @ chi.T) / d


def pauli_decompose(U: DenseOperator, tol: float = 1e-12, cap: int = HIERARCHY_DIM_CAP) -> dict:
    """Map (x codes, z codes) -> coefficient, dropping entries below tol."""
    gf = U.gf
    C = pauli_coefficient_matrix(U, cap)
    digits = all_digits(gf, U.n)
    out = {}
    for a in range(C.shape[0]):
        for b in range(C.shape[1]):
            c = C[a, b]
            if abs(c) > tol:
                out[(tuple(digits[a]), tuple(digits[b]))] = complex(c)
    return out


def pauli_reconstruct(gf: GF, n: int, coeffs: dict) -> DenseOperator:
    d = gf.q**n
    mat = np.zeros((d, d), dtype=np.complex128)
    for (x, z), c in coeffs.items():
        mat += c * pauli_matrix(PauliWord.from_vectors(gf, x, z)).mat
    return DenseOperator(gf, n, mat)


def is_pauli_multiple(U: DenseOperator, atol: float = _PAULI_ATOL) -> bool:
    """Single dominant Pauli coefficient; all others below atol."""
    C = np.abs(pauli_coefficient_matrix(U))
    top = np.unravel_index(int(np.argmax(C)), C.shape)
    C[top] = 0.0
    return bool(np.max(C) <= atol)


# -- Clifford hierarchy -----------------------------------------------------------


@dataclass
class HierarchyReport:
    gate: str
    q: int
    max_level: int
    level: int | None  # None = above max_level
    witness: str | None  # generator whose conjugate fails one level down

    def to_json(self) -> dict:
        return {
            "gate": self.gate,
            "q": self.q,
            "max_level": self.max_level,
            "level": self.level if self.level is not None else "above max",
            "witness": self.witness,
        }


def _hierarchy_generators(gf: GF, n: int) -> list[tuple[PauliWord, np.ndarray]]:
    gens = []
    for site in range(n):
        for i in range(gf.s):
            b = 1 << i
            xcodes = [0] * n
            xcodes[site] = b
            zcodes = [0] * n
            zcodes[site] = b
            for word in (PauliWord.x_word(gf, xcodes), PauliWord.z_word(gf, zcodes)):
                gens.append((word, pauli_matrix(word).mat))
    return gens


def _memo_key(mat: np.ndarray) -> bytes:
    return np.ascontiguousarray(np.round(mat, 8)).tobytes()


def hierarchy_level(
    U: DenseOperator, max_level: int = 4, gate_name: str = "gate"
) -> HierarchyReport:
    """Least hierarchy level of U up to max_level, with a failure witness.

    Conjugation is tested over the 2*n*s single-site X/Z generators of the
    Pauli group; lower levels are memoised on the rounded matrix since the
    same conjugates recur heavily.
    """
    if U.dim > HIERARCHY_DIM_CAP:
        raise TooLarge(f"dimension {U.dim} exceeds cap {HIERARCHY_DIM_CAP}")
    gens = _hierarchy_generators(U.gf, U.n)
    memo: dict[tuple[bytes, int], bool] = {}

    def in_level(mat: np.ndarray, k: int) -> tuple[bool, PauliWord | None]:
        key = (_memo_key(mat), k)
        if key in memo:
            return memo[key], None
        if k == 1:
            ok = is_pauli_multiple(DenseOperator(U.gf, U.n, mat))
            failing = None
        else:
            ok, failing = True, None
            for word, g in gens:
                conj = mat @ g @ mat.conj().T
                inner, _ = in_level(conj, k - 1)
                if not inner:
                    ok, failing = False, word
                    break
        memo[key] = ok
        return ok, failing

    witness_word: PauliWord | None = None
    level: int | None = None
    for k in range(1, max_level + 1):
        ok, failing = in_level(U.mat, k)
        if ok:
            level = k
            break
        witness_word = failing
    # witness explains non-membership one level below the reported level
    witness = witness_word.to_text() if witness_word is not None else None
    return HierarchyReport(gate_name, U.gf.q, max_level, level, witness)


# -- qudit-to-qubit maps ----------------------------------------------------------


def _as_assignment(bases, n: int) -> BasisAssignment:
    if isinstance(bases, BasisAssignment):
        assignment = bases
    elif isinstance(bases, FieldBasis):
        assignment = BasisAssignment.uniform(bases, n)
    else:
        assignment = BasisAssignment(bases)
    if assignment.n != n:
        raise DimensionMismatch(f"assignment covers {assignment.n} qudits, state has {n}")
    return assignment


def qubit_permutation(assignment: BasisAssignment) -> np.ndarray:
    """perm[qudit index] = qubit index under the blockwise decomposition."""
    gf = assignment.gf
    n = assignment.n
    digits = all_digits(gf, n)
    d = digits.shape[0]
    perm = np.zeros(d, dtype=np.int64)
    for i in range(n):
        bits = assignment[i].decompose_arr(digits[:, i])  # (d, s)
        block = np.zeros(d, dtype=np.int64)
        for b in range(gf.s):
            block = (block << 1) | bits[:, b]
        perm = (perm << gf.s) | block
    return perm


def phi_map(bases, psi: StateVector) -> StateVector:
    """Relabel qudit basis kets as qubit kets: |eta> -> |D_B(eta)> blockwise."""
    assignment = _as_assignment(bases, psi.n)
    perm = qubit_permutation(assignment)
    out = np.zeros_like(psi.amps)
    out[perm] = psi.amps
    return StateVector(make_field(1), psi.n * psi.gf.s, out)


def phi_inverse(bases, Psi: StateVector, gf: GF) -> StateVector:
    n = Psi.n // gf.s
    assignment = _as_assignment(bases, n)
    perm = qubit_permutation(assignment)
    return StateVector(gf, n, Psi.amps[perm])


def pi_map(bases, U: DenseOperator) -> DenseOperator:
    """Conjugate by the basis relabelling: Pi(U) = phi U phi^-1."""
    assignment = _as_assignment(bases, U.n)
    perm = qubit_permutation(assignment)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(perm.size, dtype=np.int64)
    mat = U.mat[np.ix_(inv, inv)]
    return DenseOperator(make_field(1), U.n * U.gf.s, mat)
