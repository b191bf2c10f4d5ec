"""Generalized Reed-Solomon codes and the quantum Reed-Solomon construction.

Codewords are evaluations of degree-<k polynomials at distinct points,
scaled by non-zero column multipliers.  Message coefficients are in the
monomial basis, low degree first.  Decoding is interpolation-based unique
decoding up to floor((n-k)/2) errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .css import CssCode, new_css
from .errors import (
    DecodeFailure,
    DimensionMismatch,
    InvalidNesting,
    InvalidSupport,
    WeightBelowDistance,
)
from .field import GF


# -- dense univariate polynomials over F_q (coefficient lists, low first) -------


def _ptrim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdeg(p: list[int]) -> int:
    return len(p) - 1


def _padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return _ptrim(out)


def _pmul(gf: GF, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] ^= gf.mul(ca, cb)
    return _ptrim(out)


def _pdivmod(gf: GF, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    quot = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = gf.inv(b[-1])
    while len(r) >= len(b):
        f = gf.mul(r[-1], inv_lead)
        shift = len(r) - len(b)
        quot[shift] = f
        for i, cb in enumerate(b):
            r[shift + i] ^= gf.mul(f, cb)
        _ptrim(r)
        if not r:
            break
    return _ptrim(quot), r


def _peval(gf: GF, p: list[int], x: int) -> int:
    out = 0
    for c in reversed(p):
        out = gf.mul(out, x) ^ c
    return out


def _pinterpolate(gf: GF, xs, ys) -> list[int]:
    """Lagrange interpolation through distinct points."""
    out: list[int] = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        term = [yi]
        for j, xj in enumerate(xs):
            if j == i:
                continue
            term = _pmul(gf, term, [xj, 1])  # (x + x_j) == (x - x_j)
            term = [gf.mul(c, gf.inv(xi ^ xj)) for c in term]
        out = _padd(out, term)
    return out


# -- classical GRS -------------------------------------------------------------


@dataclass
class GrsCode:
    gf: GF
    k: int
    alpha: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        self.alpha = np.asarray(self.alpha, dtype=np.int64).reshape(-1)
        self.v = np.asarray(self.v, dtype=np.int64).reshape(-1)
        n = self.alpha.size
        if self.v.size != n:
            raise DimensionMismatch("need one multiplier per evaluation point")
        if n > self.gf.q:
            raise DimensionMismatch(f"n = {n} exceeds q = {self.gf.q} distinct points")
        if len(set(self.alpha.tolist())) != n:
            raise InvalidSupport("evaluation points must be distinct")
        if np.any(self.v == 0):
            raise InvalidSupport("column multipliers must be non-zero")
        if not 0 <= self.k <= n:
            raise DimensionMismatch(f"dimension k = {self.k} outside 0..{n}")
        for c in self.alpha:
            self.gf.check_code(int(c))

    @property
    def n(self) -> int:
        return self.alpha.size

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def radius(self) -> int:
        return (self.n - self.k) // 2


def generator_matrix(c: GrsCode) -> np.ndarray:
    """Row j holds v_i * alpha_i^j for j = 0..k-1."""
    G = np.zeros((c.k, c.n), dtype=np.int64)
    row = c.v.copy()
    for j in range(c.k):
        G[j] = row
        row = c.gf.mul_arr(row, c.alpha)
    return G


def encode(c: GrsCode, coeffs) -> np.ndarray:
    """(v_1 f(alpha_1), ..., v_n f(alpha_n)) for message coefficients of f."""
    coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1)
    if coeffs.size != c.k:
        raise DimensionMismatch(f"message needs {c.k} coefficients, got {coeffs.size}")
    if c.k == 0:
        return np.zeros(c.n, dtype=np.int64)
    return c.gf.matvec(generator_matrix(c).T, coeffs)


def dual_multipliers(gf: GF, alpha, v) -> np.ndarray:
    """u with u_i^-1 = v_i * prod_{j != i} (alpha_i - alpha_j)."""
    alpha = np.asarray(alpha, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    u = np.zeros_like(v)
    for i in range(alpha.size):
        prod = int(v[i])
        for j in range(alpha.size):
            if j != i:
                prod = gf.mul(prod, int(alpha[i]) ^ int(alpha[j]))
        u[i] = gf.inv(prod)
    return u


def dual(c: GrsCode) -> GrsCode:
    """GRS_{n-k}(alpha, u): generator matrices satisfy G . G'^T = 0."""
    return GrsCode(c.gf, c.n - c.k, c.alpha, dual_multipliers(c.gf, c.alpha, c.v))


def mds_weight_count(n: int, k: int, q: int, w: int) -> int:
    """Number of weight-w codewords in any [n, k, n-k+1] MDS code over F_q."""
    d = n - k + 1
    if w < d:
        raise WeightBelowDistance(f"w = {w} below distance d = {d}")
    if w > n:
        raise DimensionMismatch(f"w = {w} exceeds length n = {n}")
    total = 0
    for j in range(w - d + 1):
        term = math.comb(w - 1, j) * q ** (w - d - j)
        total += -term if j % 2 else term
    return math.comb(n, w) * (q - 1) * total


def min_weight_codeword(c: GrsCode, roots, eta: int) -> np.ndarray:
    """Evaluations of eta * prod_{beta in roots} (x - beta): weight n-k+1."""
    roots = [int(r) for r in roots]
    alpha_set = set(c.alpha.tolist())
    if len(set(roots)) != len(roots) or not set(roots) <= alpha_set:
        raise InvalidSupport("roots must be distinct evaluation points")
    if len(roots) != c.k - 1:
        raise InvalidSupport(f"need k-1 = {c.k - 1} roots, got {len(roots)}")
    if eta == 0:
        raise InvalidSupport("eta must be non-zero")
    poly = [eta]
    for r in roots:
        poly = _pmul(c.gf, poly, [r, 1])
    return encode(c, poly + [0] * (c.k - len(poly)))


def decode(c: GrsCode, received) -> tuple[np.ndarray, np.ndarray]:
    """Interpolation decoding of codeword + error, radius floor((n-k)/2).

    Returns (codeword, error).  Raises DecodeFailure rather than returning a
    word further than the radius from the input.
    """
    gf = c.gf
    received = np.asarray(received, dtype=np.int64).reshape(-1)
    if received.size != c.n:
        raise DimensionMismatch(f"received word needs length {c.n}")
    if c.k == 0:
        if int((received != 0).sum()) > c.radius:
            raise DecodeFailure("error weight exceeds the decoding radius")
        return np.zeros(c.n, dtype=np.int64), received.copy()
    stripped = gf.mul_arr(received, gf.inv_arr(c.v)).tolist()

    g0: list[int] = [1]
    for a in c.alpha:
        g0 = _pmul(gf, g0, [int(a), 1])
    g1 = _pinterpolate(gf, c.alpha.tolist(), stripped)

    r_prev, r_cur = g0, g1
    b_prev: list[int] = []
    b_cur: list[int] = [1]
    while r_cur and 2 * _pdeg(r_cur) >= c.n + c.k:
        quot, rem = _pdivmod(gf, r_prev, r_cur)
        r_prev, r_cur = r_cur, rem
        b_prev, b_cur = b_cur, _padd(b_prev, _pmul(gf, quot, b_cur))

    f, rem = _pdivmod(gf, r_cur, b_cur) if b_cur else ([], [1])
    if rem or _pdeg(f) >= c.k:
        raise DecodeFailure("no codeword within the unique-decoding radius")
    codeword = encode(c, f + [0] * (c.k - len(f)))
    error = received ^ codeword
    if int((error != 0).sum()) > c.radius:
        raise DecodeFailure("error weight exceeds the decoding radius")
    return codeword, error


# -- quantum Reed-Solomon --------------------------------------------------------


@dataclass
class QrsCode:
    gf: GF
    k1: int
    k2: int
    alpha: np.ndarray
    v: np.ndarray
    u: np.ndarray
    css: CssCode

    @property
    def n(self) -> int:
        return self.alpha.size

    @property
    def k(self) -> int:
        return self.k2 - self.k1

    @property
    def d_x_formula(self) -> int:
        return self.n - self.k2 + 1

    @property
    def d_z_formula(self) -> int:
        return self.k1 + 1

    def x_side_code(self) -> GrsCode:
        """L_X = GRS_{k1}(alpha, v)."""
        return GrsCode(self.gf, self.k1, self.alpha, self.v)

    def z_side_code(self) -> GrsCode:
        """L_Z = GRS_{n-k2}(alpha, u)."""
        return GrsCode(self.gf, self.n - self.k2, self.alpha, self.u)

    def to_json(self) -> dict:
        data = self.css.to_json()
        data.update(
            {
                "n": self.n,
                "k1": self.k1,
                "k2": self.k2,
                "alpha": self.alpha.tolist(),
                "v": self.v.tolist(),
            }
        )
        return data


def make_qrs(gf: GF, n: int, k1: int, k2: int, alpha=None, v=None) -> QrsCode:
    """CSS(L_X = GRS_k1, L_Z = GRS_{n-k2} with dual multipliers).

    Logical qudits k = k2 - k1, d_X = n - k2 + 1, d_Z = k1 + 1.
    """
    if k1 > k2:
        raise InvalidNesting(f"k1 = {k1} > k2 = {k2}")
    if alpha is None:
        alpha = np.arange(n, dtype=np.int64)  # all of F_q in code order when n = q
    if v is None:
        v = np.ones(n, dtype=np.int64)
    cx = GrsCode(gf, k1, alpha, v)
    if k2 > cx.n:
        raise InvalidNesting(f"k2 = {k2} exceeds n = {cx.n}")
    u = dual_multipliers(gf, cx.alpha, cx.v)
    cz = GrsCode(gf, cx.n - k2, cx.alpha, u)
    css = new_css(gf, cx.n, generator_matrix(cx), generator_matrix(cz))
    return QrsCode(gf, k1, k2, cx.alpha, cx.v, u, css)
