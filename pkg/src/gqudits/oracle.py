"""Brute-force dense statevector engine over (C^q)^(tensor n).

Ground truth for the tableau, gate, and code modules at tiny n.  Basis
kets are indexed by tuples in F_q^n, row-major with the leftmost qudit as
the most significant digit; since q = 2^s, vector addition over F_q^n is
plain XOR on packed indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from . import bases as _bases
from .errors import DimensionMismatch, FullTableauRequired, PureTypeRequired, TooLarge
from .field import GF
from .pauli import PauliWord

if TYPE_CHECKING:
    from .tableau import CssTableau

ATOL = 1e-8
DIM_CAP = 1 << 14


class NotEigenstate:
    """Sentinel result: the state has no syndrome component under the word."""

    def __repr__(self) -> str:
        return "NOT_EIGENSTATE"


NOT_EIGENSTATE = NotEigenstate()


@dataclass
class StateVector:
    gf: GF
    n: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        self.amps = np.asarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (self.gf.q**self.n,):
            raise DimensionMismatch(
                f"expected {self.gf.q ** self.n} amplitudes, got {self.amps.shape}"
            )

    @property
    def dim(self) -> int:
        return self.amps.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalised(self) -> "StateVector":
        return StateVector(self.gf, self.n, self.amps / np.linalg.norm(self.amps))


@dataclass
class DenseOperator:
    gf: GF
    n: int
    mat: np.ndarray

    def __post_init__(self) -> None:
        self.mat = np.asarray(self.mat, dtype=np.complex128)
        d = self.gf.q**self.n
        if self.mat.shape != (d, d):
            raise DimensionMismatch(f"expected {d} x {d} matrix, got {self.mat.shape}")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def is_unitary(self, atol: float = 1e-10) -> bool:
        d = self.dim
        return bool(np.allclose(self.mat.conj().T @ self.mat, np.eye(d), atol=atol))

    def apply(self, psi: StateVector) -> StateVector:
        if psi.gf != self.gf or psi.n != self.n:
            raise DimensionMismatch("operator and state live on different systems")
        return StateVector(self.gf, self.n, self.mat @ psi.amps)


# -- index bookkeeping ---------------------------------------------------------


def index_of(gf: GF, u) -> int:
    """Packed index of a digit vector (leftmost digit most significant)."""
    u = np.asarray(u, dtype=np.int64)
    n = u.size
    out = 0
    for i in range(n):
        out = (out << gf.s) | int(u[i])
    return out


def digits_of(gf: GF, n: int, idx: int) -> np.ndarray:
    mask = gf.q - 1
    return np.array([(idx >> (gf.s * (n - 1 - i))) & mask for i in range(n)], dtype=np.int64)


def all_digits(gf: GF, n: int) -> np.ndarray:
    """(q^n, n) array of every digit vector in index order."""
    idx = np.arange(gf.q**n, dtype=np.int64)
    mask = gf.q - 1
    shifts = np.array([gf.s * (n - 1 - i) for i in range(n)], dtype=np.int64)
    return (idx[:, None] >> shifts[None, :]) & mask


def _check_cap(gf: GF, n: int, cap: int) -> int:
    d = gf.q**n
    if d > cap:
        raise TooLarge(f"q^n = {d} exceeds cap {cap}")
    return d


def _trace_dot_with(gf: GF, codes: np.ndarray, digits: np.ndarray) -> np.ndarray:
    """tr(codes . u) for every digit row u; values in {0, 1}."""
    t = np.zeros(digits.shape[0], dtype=np.int64)
    for i, c in enumerate(codes):
        if c:
            t ^= gf.trace_arr(gf.mul_arr(int(c), digits[:, i]))
    return t


# -- Pauli matrices and projectors ------------------------------------------------


def pauli_matrix(P: PauliWord, cap: int = DIM_CAP) -> DenseOperator:
    """Dense matrix of sign * X^x Z^z: maps |u> to sign*(-1)^tr(z.u) |u+x>."""
    gf = P.gf
    d = _check_cap(gf, P.n, cap)
    cols = np.arange(d, dtype=np.int64)
    rows = cols ^ index_of(gf, P.x_array)
    digits = all_digits(gf, P.n)
    phases = P.sign * (1 - 2 * _trace_dot_with(gf, P.z_array, digits))
    mat = np.zeros((d, d), dtype=np.complex128)
    mat[rows, cols] = phases
    return DenseOperator(gf, P.n, mat)


def _require_measurable(P: PauliWord) -> None:
    if not P.is_pure() or P.sign != 1:
        raise PureTypeRequired("measurement semantics need an unsigned pure-type word")


def power_matrices(P: PauliWord, cap: int = DIM_CAP) -> list[np.ndarray]:
    """Matrices of P^mu for every mu in F_q."""
    _require_measurable(P)
    return [pauli_matrix(P.power(mu), cap).mat for mu in P.gf.elements()]


def projectors(P: PauliWord, cap: int = DIM_CAP) -> list[np.ndarray]:
    """The q syndrome projectors Pi_eta = q^-1 sum_mu (-1)^tr(mu eta) P^mu."""
    gf = P.gf
    mats = power_matrices(P, cap)
    out = []
    for eta in gf.elements():
        acc = np.zeros_like(mats[0])
        for mu, m in enumerate(mats):
            acc += (1 - 2 * gf.trace(gf.mul(mu, eta))) * m
        out.append(acc / gf.q)
    return out


# -- stabiliser states --------------------------------------------------------------


def stabiliser_state(t: "CssTableau", cap: int = DIM_CAP) -> StateVector:
    """The unique state fixed by every P^mu of a full tableau's rows.

    Built directly as sum over u in L_X of (-1)^tr(u . t0) |x0 + u>, where
    x0 solves the Z-syndrome constraints and t0 the X-syndrome constraints;
    the defining eigen-equations are then re-checked exactly.
    """
    from . import linalg

    gf = t.gf
    if not t.is_full:
        raise FullTableauRequired(f"m_X + m_Z = {t.m_x + t.m_z} != n = {t.n}")
    d = _check_cap(gf, t.n, cap)

    x0 = linalg.solve(gf, t.zrows, t.zsyn) if t.m_z else np.zeros(t.n, dtype=np.int64)
    t0 = linalg.solve(gf, t.xrows, t.xsyn) if t.m_x else np.zeros(t.n, dtype=np.int64)
    if x0 is None or t0 is None:
        raise RuntimeError("inconsistent constraints in a validated tableau")

    msgs = all_digits(gf, t.m_x) if t.m_x else np.zeros((1, 0), dtype=np.int64)
    shifts = np.array([gf.s * (t.n - 1 - i) for i in range(t.n)], dtype=np.int64)
    words = gf.matmul(msgs, t.xrows) if t.m_x else np.zeros((1, t.n), dtype=np.int64)
    signs = 1 - 2 * _trace_dot_with(gf, t0, words)
    idx = ((words ^ x0[None, :]) << shifts[None, :]).sum(axis=1)
    amps = np.zeros(d, dtype=np.int64)
    amps[idx] = signs

    _verify_eigen_equations(t, amps)
    vec = amps.astype(np.complex128)
    return StateVector(gf, t.n, vec / np.linalg.norm(vec))


def _verify_eigen_equations(t: "CssTableau", amps: np.ndarray) -> None:
    """Exact +-1 check of every defining relation of the tableau."""
    gf = t.gf
    digits = all_digits(gf, t.n)
    for j in range(t.m_x):
        row, syn = t.xrows[j], int(t.xsyn[j])
        for mu in gf.elements():
            shift = index_of(gf, gf.mul_arr(mu, row))
            sign = 1 - 2 * gf.trace(gf.mul(mu, syn))
            src = np.arange(amps.size, dtype=np.int64) ^ shift
            if not np.array_equal(amps[src] * sign, amps):
                raise RuntimeError("constructed state violates an X eigen-equation")
    for j in range(t.m_z):
        row, syn = t.zrows[j], int(t.zsyn[j])
        for mu in gf.elements():
            phase = 1 - 2 * _trace_dot_with(gf, gf.mul_arr(mu, row), digits)
            sign = 1 - 2 * gf.trace(gf.mul(mu, syn))
            if not np.array_equal(phase * amps * sign, amps):
                raise RuntimeError("constructed state violates a Z eigen-equation")


# -- syndrome extraction -----------------------------------------------------------


def syndrome_component(psi: StateVector, P: PauliWord, atol: float = ATOL):
    """The eta with P^mu |psi> = (-1)^tr(mu eta) |psi> for all mu, if any.

    Returns NOT_EIGENSTATE when no field element fits within tolerance.
    Testing mu over an F_2-basis suffices: P^mu is multiplicative in mu for
    pure-type words, so the basis relations extend exactly.
    """
    gf = psi.gf
    _require_measurable(P)
    if P.n != psi.n or P.gf != gf:
        raise DimensionMismatch("word and state live on different systems")
    poly = _bases.polynomial_basis(gf)
    dual = poly.dual()
    eta = 0
    for i in range(gf.s):
        mat = pauli_matrix(P.power(1 << i)).mat
        moved = mat @ psi.amps
        if np.max(np.abs(moved - psi.amps)) <= atol:
            bit = 0
        elif np.max(np.abs(moved + psi.amps)) <= atol:
            bit = 1
        else:
            return NOT_EIGENSTATE
        if bit:
            eta ^= dual.elements[i]
    return eta


def born_probabilities(psi: StateVector, P: PauliWord, cap: int = DIM_CAP) -> np.ndarray:
    """Probability of each syndrome outcome eta in code order."""
    projs = projectors(P, cap)
    probs = np.array([float(np.vdot(pr @ psi.amps, pr @ psi.amps).real) for pr in projs])
    probs = np.clip(probs, 0.0, None)
    return probs / probs.sum()


def collapse(psi: StateVector, P: PauliWord, eta: int, cap: int = DIM_CAP) -> StateVector:
    """Renormalised projection of psi onto the syndrome-eta sector."""
    pr = projectors(P, cap)[eta]
    vec = pr @ psi.amps
    nrm = np.linalg.norm(vec)
    if nrm < ATOL:
        raise ValueError(f"outcome {eta} has zero probability")
    return StateVector(psi.gf, psi.n, vec / nrm)


def measure_projective(
    psi: StateVector, P: PauliWord, rng: np.random.Generator, cap: int = DIM_CAP
) -> tuple[int, StateVector]:
    """Sample a syndrome component with Born probabilities and collapse."""
    probs = born_probabilities(psi, P, cap)
    eta = int(rng.choice(psi.gf.q, p=probs))
    return eta, collapse(psi, P, eta, cap)


def states_equal_up_to_phase(a: StateVector, b: StateVector, atol: float = ATOL) -> bool:
    if a.amps.shape != b.amps.shape:
        return False
    i = int(np.argmax(np.abs(a.amps)))
    if abs(a.amps[i]) < atol or abs(b.amps[i]) < atol:
        return bool(np.max(np.abs(a.amps - b.amps)) <= atol)
    phase = b.amps[i] / a.amps[i]
    if abs(abs(phase) - 1.0) > atol:
        return False
    return bool(np.max(np.abs(phase * a.amps - b.amps)) <= atol)
