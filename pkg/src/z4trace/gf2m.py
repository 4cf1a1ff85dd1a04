"""Arithmetic in GF(2^m), 1 <= m <= 12.

Elements are plain integers whose bits are coefficients in the polynomial
basis {1, x, ..., x^(m-1)} (bit j <-> x^j).  Multiplication goes through
log/antilog tables built from a primitive polynomial.
"""

from __future__ import annotations

from functools import cached_property
from importlib import resources

import numpy as np

from .errors import NotPrimitive

MAX_M = 12


def _load_poly_table() -> dict[int, int]:
    table = {}
    text = resources.files(__package__).joinpath("data/primitive_polys.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m, bits = line.split()
        table[int(m)] = int(bits, 2)
    return table


DEFAULT_POLYS: dict[int, int] = _load_poly_table()


def poly_to_str(poly: int, var: str = "x") -> str:
    """Render a GF(2) polynomial stored as a bit mask, highest degree first."""
    terms = []
    for e in range(poly.bit_length() - 1, -1, -1):
        if poly >> e & 1:
            terms.append("1" if e == 0 else var if e == 1 else f"{var}^{e}")
    return " + ".join(terms) or "0"


class BinaryField:
    """The finite field GF(2^m).

    Parameters
    ----------
    m : int
        Extension degree, 1..12.
    poly : int, optional
        Degree-m primitive polynomial as a bit mask (bit m set).  Defaults
        to the shipped table entry.

    Raises
    ------
    NotPrimitive
        If ``poly`` is reducible or x has order < 2^m - 1 modulo ``poly``.
    """

    def __init__(self, m: int, poly: int | None = None) -> None:
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m must be in 1..{MAX_M}, got {m}")
        if poly is None:
            poly = DEFAULT_POLYS[m]
        if poly.bit_length() - 1 != m:
            raise ValueError(f"polynomial {poly:#b} does not have degree {m}")
        self.m = m
        self.poly = poly
        self.order = 1 << m
        self.group_order = self.order - 1

        antilog = np.zeros(2 * self.group_order, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        val = 1
        for k in range(self.group_order):
            if log[val] != -1:
                raise NotPrimitive(
                    f"{poly_to_str(poly)}: root has order {k} < {self.group_order}"
                )
            antilog[k] = val
            log[val] = k
            val = self._times_x(val)
        if val != 1:
            # only reachable when poly has no constant term (x | poly)
            raise NotPrimitive(f"{poly_to_str(poly)} is reducible")
        antilog[self.group_order:] = antilog[: self.group_order]
        antilog.flags.writeable = False
        log.flags.writeable = False
        self.antilog = antilog
        self.log = log

    def __repr__(self) -> str:
        return f"BinaryField(m={self.m}, poly={poly_to_str(self.poly)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryField) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    def _times_x(self, a: int) -> int:
        a <<= 1
        if a >> self.m & 1:
            a ^= self.poly
        return a

    @property
    def primitive_element(self) -> int:
        return int(self.antilog[1]) if self.m > 1 else 1

    def elements(self) -> range:
        return range(self.order)

    # -- scalar arithmetic -------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        return int(self.antilog[(self.group_order - self.log[a]) % self.group_order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse in GF(2^m)")
            return 1 if e == 0 else 0
        return int(self.antilog[(int(self.log[a]) * e) % self.group_order])

    def exp(self, k: int) -> int:
        """alpha^k for the primitive element alpha = x."""
        return int(self.antilog[k % self.group_order])

    def frobenius(self, a: int, times: int = 1) -> int:
        for _ in range(times % self.m):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)), returned as 0 or 1."""
        s, t = 0, a
        for _ in range(self.m):
            s ^= t
            t = self.mul(t, t)
        if s not in (0, 1):
            raise ArithmeticError(f"trace of {a} left the prime field: {s}")
        return s

    # -- vectorised helpers ------------------------------------------------

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of integer arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.antilog[np.where(la < 0, 0, la) + np.where(lb < 0, 0, lb)]
        return np.where((la < 0) | (lb < 0), 0, out)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """tr(x) for every element x, as a uint8 array."""
        acc = np.arange(self.order, dtype=np.int64)
        t = acc.copy()
        for _ in range(self.m - 1):
            t = self.mul_vec(t, t)
            acc ^= t
        if np.any(acc > 1):
            raise ArithmeticError("trace table left the prime field")
        out = acc.astype(np.uint8)
        out.flags.writeable = False
        return out

    @cached_property
    def trace_matrix(self) -> np.ndarray:
        """Gram matrix G[j, k] = tr(x^(j+k)) of the trace form in the polynomial basis.

        tr(w*x) equals bits(w) @ G @ bits(x) mod 2.
        """
        g = np.zeros((self.m, self.m), dtype=np.uint8)
        for j in range(self.m):
            for k in range(self.m):
                g[j, k] = self.trace_table[self.mul(1 << j, 1 << k)]
        return g

    def bits(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of ``a``, low degree first."""
        return tuple(a >> j & 1 for j in range(self.m))
