"""F_2-bases of F_q: decomposition maps, dual bases, and self-dual bases.

A basis B = (eta_0, ..., eta_{s-1}) turns F_q into the bit-vector space
F_2^s via the decomposition map; the dual basis B* satisfies
tr(eta_i * mu_j) = delta_ij, which is what makes X-type data travel through
B and Z-type data through B* in the qudit-to-qubit mappings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import DimensionMismatch, FieldMismatch, SelfDualRequired
from .field import GF, make_field


def _bits_of(code: int, s: int) -> np.ndarray:
    return np.array([(code >> i) & 1 for i in range(s)], dtype=np.int64)


class FieldBasis:
    """An ordered F_2-basis of F_q with a cached decomposition matrix."""

    def __init__(self, gf: GF, elements):
        self.gf = gf
        self.elements = tuple(int(e) for e in elements)
        if len(self.elements) != gf.s:
            raise DimensionMismatch(f"basis needs {gf.s} elements, got {len(self.elements)}")
        for e in self.elements:
            gf.check_code(e)
        # columns are the polynomial-basis bits of each basis element
        cols = np.array([_bits_of(e, gf.s) for e in self.elements], dtype=np.int64).T
        gf2 = make_field(1)
        if not linalg.is_invertible(gf2, cols):
            raise DimensionMismatch(f"elements {self.elements} are F_2-dependent")
        R, inv, _ = linalg.rref_augmented(gf2, cols, np.eye(gf.s, dtype=np.int64))
        self._inv_cols = inv  # maps polynomial-basis bits to B-coordinates
        self._dual: FieldBasis | None = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldBasis)
            and other.gf == self.gf
            and other.elements == self.elements
        )

    def __hash__(self) -> int:
        return hash((self.gf, self.elements))

    def __repr__(self) -> str:
        return f"FieldBasis(q={self.gf.q}, elements={list(self.elements)})"

    # -- decomposition -----------------------------------------------------

    def decompose(self, eta: int) -> np.ndarray:
        """Coefficients c with eta = sum_i c_i eta_i."""
        self.gf.check_code(eta)
        return (self._inv_cols @ _bits_of(eta, self.gf.s)) % 2

    def decompose_arr(self, codes) -> np.ndarray:
        """Row-wise decomposition of an array of codes; shape (..., s)."""
        codes = np.asarray(codes, dtype=np.int64)
        shifts = np.arange(self.gf.s, dtype=np.int64)
        bits = (codes[..., None] >> shifts) & 1
        return (bits @ self._inv_cols.T) % 2

    def recompose(self, coeffs) -> int:
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (self.gf.s,):
            raise DimensionMismatch(f"expected {self.gf.s} coefficients, got {coeffs.shape}")
        out = 0
        for c, e in zip(coeffs, self.elements):
            if c & 1:
                out ^= e
        return out

    # -- duality -----------------------------------------------------------

    def gram(self) -> np.ndarray:
        """Matrix of tr(eta_i * eta_j)."""
        s = self.gf.s
        G = np.zeros((s, s), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                G[i, j] = self.gf.trace(self.gf.mul(a, b))
        return G

    def is_self_dual(self) -> bool:
        return bool(np.array_equal(self.gram(), np.eye(self.gf.s, dtype=np.int64)))

    def dual(self) -> "FieldBasis":
        if self._dual is None:
            self._dual = dual_basis(self)
        return self._dual

    def component_by_trace(self, eta: int, i: int) -> int:
        """i-th coefficient of eta, valid only for a self-dual basis."""
        if not self.is_self_dual():
            raise SelfDualRequired(f"{self!r} is not self-dual")
        return self.gf.trace(self.gf.mul(eta, self.elements[i]))


@dataclass(frozen=True)
class BasisPair:
    """A basis together with its dual, validated on construction."""

    primal: FieldBasis
    dual: FieldBasis

    def __post_init__(self) -> None:
        gf = self.primal.gf
        gf.check_same(self.dual.gf)
        for i, a in enumerate(self.primal.elements):
            for j, b in enumerate(self.dual.elements):
                if gf.trace(gf.mul(a, b)) != (1 if i == j else 0):
                    raise DimensionMismatch("tr(eta_i mu_j) != delta_ij")


def polynomial_basis(gf: GF) -> FieldBasis:
    """(1, alpha, alpha^2, ...): the packing basis of the element codes."""
    return FieldBasis(gf, [1 << i for i in range(gf.s)])


def decompose(basis: FieldBasis, eta: int) -> np.ndarray:
    return basis.decompose(eta)


def recompose(basis: FieldBasis, coeffs) -> int:
    return basis.recompose(coeffs)


def dual_basis(basis: FieldBasis) -> FieldBasis:
    """The unique basis (mu_j) with tr(eta_i * mu_j) = delta_ij."""
    gf = basis.gf
    s = gf.s
    # tr(eta_i * mu) is F_2-linear in the polynomial-basis bits of mu
    T = np.zeros((s, s), dtype=np.int64)
    for i, e in enumerate(basis.elements):
        for b in range(s):
            T[i, b] = gf.trace(gf.mul(e, 1 << b))
    gf2 = make_field(1)
    R, X, pivots = linalg.rref_augmented(gf2, T, np.eye(s, dtype=np.int64))
    if len(pivots) != s:
        raise RuntimeError("trace form degenerate; should be impossible for F_{2^s}")
    duals = []
    for j in range(s):
        bits = X[:, j]  # solves T x = e_j
        duals.append(int(sum((int(b) & 1) << k for k, b in enumerate(bits))))
    out = FieldBasis(gf, duals)
    out._dual = basis
    return out


@lru_cache(maxsize=None)
def _find_self_dual_cached(modulus: int) -> tuple[int, ...]:
    gf = make_field(modulus=modulus)
    s, q = gf.s, gf.q
    tr_mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            t = gf.trace(gf.mul(a, b))
            tr_mul[a, b] = t
            tr_mul[b, a] = t
    candidates = [a for a in range(1, q) if tr_mul[a, a] == 1]

    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == s:
            return True
        for a in candidates:
            if a < start:
                continue
            if tr_mul[a, a] != 1:
                continue
            if any(tr_mul[a, b] for b in chosen):
                continue
            chosen.append(a)
            if extend(a + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError(f"no self-dual basis found for q={q}; should be impossible")
    return tuple(chosen)


def find_self_dual(gf: GF) -> FieldBasis:
    """First basis, in lexicographic element order, whose Gram matrix is I.

    A depth-first search over elements with tr(eta^2) = 1, pruning on the
    pairwise trace constraints; existence is a classical fact for every
    F_{2^s} over F_2.
    """
    basis = FieldBasis(gf, _find_self_dual_cached(gf.modulus))
    basis._dual = basis
    return basis


class BasisAssignment:
    """One basis per qudit, defining the block decomposition maps."""

    def __init__(self, bases):
        bases = tuple(bases)
        if not bases:
            raise DimensionMismatch("assignment needs at least one basis")
        gf = bases[0].gf
        for b in bases:
            if b.gf != gf:
                raise FieldMismatch("assignment mixes different fields")
        self.gf = gf
        self.bases = bases
        self.n = len(bases)

    @classmethod
    def uniform(cls, basis: FieldBasis, n: int) -> "BasisAssignment":
        return cls([basis] * n)

    @classmethod
    def default_self_dual(cls, gf: GF, n: int) -> "BasisAssignment":
        return cls.uniform(find_self_dual(gf), n)

    def duals(self) -> "BasisAssignment":
        return BasisAssignment([b.dual() for b in self.bases])

    def __getitem__(self, i: int) -> FieldBasis:
        return self.bases[i]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"BasisAssignment(n={self.n}, q={self.gf.q})"
