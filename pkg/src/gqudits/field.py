"""Arithmetic in binary extension fields F_{2^s}.

Field elements are packed into integers: bit i of the code is the
coefficient of alpha^i, where alpha is the adjoined root of the irreducible
modulus polynomial.  Polynomials over F_2 use the same packing (least
significant bit = constant term), so a modulus is itself just an integer,
e.g. 0b1011 = x^3 + x + 1 for F_8.

Addition is XOR.  Multiplication is a carry-less product reduced modulo the
field modulus; for s <= 16 log/antilog tables are kept so that scalar and
numpy-vectorised products are table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidPolynomial,
    IrreducibleRequired,
    UnsupportedDegree,
)

MAX_DEGREE = 31
_TABLE_CAP = 16  # log/exp and trace tables only kept up to q = 2^16


def poly_degree(p: int) -> int:
    """Degree of a packed F_2[x] polynomial; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two packed polynomials over F_2."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    """Remainder of a packed polynomial modulo m."""
    if m == 0:
        raise InvalidPolynomial("division by the zero polynomial")
    dm = poly_degree(m)
    da = poly_degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = poly_degree(a)
    return a


def poly_str(p: int) -> str:
    """Human-readable form, e.g. 0b1011 -> 'x^3 + x + 1'."""
    if p == 0:
        return "0"
    terms = []
    for i in range(poly_degree(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms)


def is_irreducible(p: int) -> bool:
    """Whether p has no non-trivial factorisation over F_2.

    Trial division by every candidate divisor of degree <= deg(p)/2; cheap
    at the desk scales this package works at.
    """
    if p == 0:
        raise InvalidPolynomial("the zero polynomial cannot be tested")
    d = poly_degree(p)
    if d < 1:
        raise InvalidPolynomial("irreducibility needs degree >= 1")
    if d == 1:
        return True
    if p & 1 == 0:
        return False  # divisible by x
    for div in range(3, 1 << (d // 2 + 1), 2):
        if poly_mod(p, div) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(s: int) -> int:
    """Irreducible degree-s polynomial with the smallest integer encoding.

    s = 1 uses x + 1 so that alpha reduces to 1 and F_2 behaves as the
    ordinary bit field.
    """
    if s < 1 or s > MAX_DEGREE:
        raise UnsupportedDegree(f"degree {s} outside 1..{MAX_DEGREE}")
    if s == 1:
        return 0b11
    p = (1 << s) + 1
    while not is_irreducible(p):
        p += 2
    return p


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


class GF:
    """The binary extension field F_{2^s} defined by an irreducible modulus.

    Scalar operations act on integer element codes in [0, q).  Vectorised
    variants (``mul_arr`` etc.) act on numpy integer arrays and are used by
    the matrix routines throughout the package.
    """

    def __init__(self, modulus: int):
        if modulus <= 0:
            raise InvalidPolynomial("modulus must be a non-zero polynomial")
        s = poly_degree(modulus)
        if s < 1 or s > MAX_DEGREE:
            raise UnsupportedDegree(f"degree {s} outside 1..{MAX_DEGREE}")
        if not is_irreducible(modulus):
            raise IrreducibleRequired(f"0b{modulus:b} = {poly_str(modulus)} factors over F_2")
        self.modulus = modulus
        self.s = s
        self.q = 1 << s
        self.primitive = self._find_primitive()
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._trace: np.ndarray | None = None
        if s <= _TABLE_CAP:
            self._build_tables()

    # -- construction internals -------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        out = 0
        top = 1 << self.s
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            if a & top:
                a ^= self.modulus
            b >>= 1
        return out

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return out

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        checks = [order // f for f in _prime_factors(order)]
        for cand in range(2, self.q):
            if all(self._pow_raw(cand, c) != 1 for c in checks):
                return cand
        raise RuntimeError("no primitive element found; multiplicative group not cyclic?")

    def _build_tables(self) -> None:
        order = self.q - 1
        exp = np.zeros(2 * order + 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        val = 1
        for i in range(order):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, self.primitive)
        exp[order : 2 * order] = exp[:order]
        exp[2 * order] = 1
        self._exp = exp
        self._log = log
        self._trace = np.fromiter(
            (self._trace_raw(a) for a in range(self.q)), dtype=np.int64, count=self.q
        )

    def _trace_raw(self, a: int) -> int:
        t = 0
        x = a
        for _ in range(self.s):
            t ^= x
            x = self._mul_raw(x, x)
        return t

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("GF", self.modulus))

    def __repr__(self) -> str:
        return f"GF(2^{self.s}, modulus=0b{self.modulus:b})"

    def check_same(self, other: "GF") -> None:
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")

    def check_code(self, code: int) -> int:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} outside [0, {self.q})")
        return code

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add  # characteristic 2

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._exp is not None:
            return int(self._exp[(self.q - 1) - self._log[a]])
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def trace(self, a: int) -> int:
        if self._trace is not None:
            return int(self._trace[a])
        return self._trace_raw(a)

    def linear_map(self, gamma: int, eta: int) -> int:
        """The gamma-indexed F_2-linear map eta -> tr(gamma * eta)."""
        return self.trace(self.mul(gamma, eta))

    # -- element iteration ---------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, self.check_code(code))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive)

    # -- vectorised arithmetic -------------------------------------------------

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._exp is None:
            mul = np.frompyfunc(self.mul, 2, 1)
            return mul(a, b).astype(np.int64)
        nz = (a != 0) & (b != 0)
        # log[0] is 0; the mask keeps those lanes at result 0
        idx = self._log[a] + self._log[b]
        return np.where(nz, self._exp[idx], 0)

    def inv_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._exp is None:
            inv = np.frompyfunc(self.inv, 1, 1)
            return inv(a).astype(np.int64)
        return self._exp[(self.q - 1) - self._log[a]]

    def trace_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._trace is None:
            tr = np.frompyfunc(self.trace, 1, 1)
            return tr(a).astype(np.int64)
        return self._trace[a]

    def dot(self, u, v) -> int:
        """F_q inner product of two equal-length code vectors."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape:
            raise FieldMismatch(f"dot of shapes {u.shape} and {v.shape}")
        if u.size == 0:
            return 0
        return int(np.bitwise_xor.reduce(self.mul_arr(u, v)))

    def matvec(self, M, v) -> np.ndarray:
        M = np.asarray(M, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if M.shape[0] == 0 or M.shape[1] == 0:
            return np.zeros(M.shape[0], dtype=np.int64)
        return np.bitwise_xor.reduce(self.mul_arr(M, v[None, :]), axis=1)

    def matmul(self, A, B) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(A.shape[1]):
            out ^= self.mul_arr(A[:, k : k + 1], B[k : k + 1, :])
        return out


@dataclass(frozen=True)
class FieldElement:
    """A value-typed element of a specific GF instance.

    Arithmetic between elements of different field constructions raises
    FieldMismatch rather than coercing silently.
    """

    field: GF
    code: int

    def __post_init__(self) -> None:
        self.field.check_code(self.code)

    def _same(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        self.field.check_same(other.field)
        return other

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.code ^ self._same(other).code)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.code, self._same(other).code))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.code, self._same(other).code))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.code))

    def trace(self) -> int:
        return self.field.trace(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"FieldElement(q={self.field.q}, code={self.code})"


@lru_cache(maxsize=None)
def _field_for_modulus(modulus: int) -> GF:
    return GF(modulus)


def make_field(s: int | None = None, modulus: int | None = None) -> GF:
    """Construct (and cache) F_{2^s}.

    Either give the extension degree s, which selects the canonical modulus,
    or an explicit irreducible modulus polynomial (packed integer).
    """
    if modulus is None:
        if s is None:
            raise ValueError("need s or modulus")
        modulus = canonical_modulus(s)
    elif s is not None and poly_degree(modulus) != s:
        raise ValueError(f"modulus 0b{modulus:b} has degree {poly_degree(modulus)}, not {s}")
    return _field_for_modulus(modulus)
