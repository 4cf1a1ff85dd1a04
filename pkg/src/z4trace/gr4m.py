"""Arithmetic in the Galois ring GR(4, m) = Z4[xi] / (h(xi)).

A ring element is stored as an integer *code* whose base-4 digits are the
coefficients c_0, c_1, ..., c_{m-1} in the basis 1, xi, ..., xi^(m-1)
(low degree in the low digit).  The basic primitive polynomial h is the
Graeffe lift of the residue field's primitive polynomial, so reduction
mod 2 maps xi onto the field generator and digit parities give the field
element directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal, Sequence

import numpy as np

from .errors import NotPrimitive
from .gf2m import BinaryField

Subset = Literal["all", "units", "ideal"]


def graeffe_lift(f: int) -> list[int]:
    """Lift a primitive binary polynomial to a basic primitive polynomial over Z4.

    ``f`` is a bit mask (bit j = coefficient of x^j).  Returns the monic
    Z4 coefficients, low degree first, of the h with h(x^2) = +-f(x)f(-x).
    """
    m = f.bit_length() - 1
    if m < 1:
        raise NotPrimitive("constant polynomial")
    coeffs = [f >> j & 1 for j in range(m + 1)]
    even = coeffs[0::2]
    odd = coeffs[1::2]

    def square(p):
        out = [0] * (2 * len(p) - 1) if p else []
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(p):
                    out[i + j] += a * b
        return out

    e2 = square(even)
    o2 = [0] + square(odd)  # y * o(y)^2
    h = [0] * (m + 1)
    for k, v in enumerate(e2):
        h[k] += v
    for k, v in enumerate(o2):
        h[k] -= v
    if h[m] % 4 == 3:
        h = [-c for c in h]
    h = [c % 4 for c in h]
    if h[m] != 1 or any((c - b) % 2 for c, b in zip(h, coeffs)):
        raise ArithmeticError(f"Graeffe lift failed for {f:#b}")
    return h


def z4_poly_to_str(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e] % 4
        if not c:
            continue
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        if e == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


@dataclass(frozen=True)
class TwoAdic:
    """Unique decomposition c = a + 2b with a, b Teichmuller elements (ring codes)."""

    a: int
    b: int


class GaloisRing:
    """GR(4, m) with a fixed basic primitive polynomial.

    Parameters
    ----------
    m : int
        Degree of the extension (1..12).
    poly : int, optional
        Primitive binary polynomial for the residue field; forwarded to
        :class:`BinaryField`.
    """

    def __init__(self, m: int, poly: int | None = None) -> None:
        self.field = BinaryField(m, poly)
        self.m = m
        self.size = 4**m
        self.basic_poly = tuple(graeffe_lift(self.field.poly))

        # xi^k reduced modulo h for k < 2m - 1, as digit vectors
        red = np.zeros((max(2 * m - 1, m + 1), m), dtype=np.int64)
        for k in range(m):
            red[k, k] = 1
        tail = np.array([(-c) % 4 for c in self.basic_poly[:m]], dtype=np.int64)
        for k in range(m, red.shape[0]):
            prev = red[k - 1]
            shifted = np.concatenate(([0], prev[:-1]))
            red[k] = (shifted + prev[-1] * tail) % 4
        self._xi_pow = red

        self._digit_weights = 4 ** np.arange(m, dtype=np.int64)
        self._teich_list = self._build_teichmuller()
        teich = np.asarray(self._teich_list, dtype=np.int64)
        # field element -> Teichmuller code
        lift = np.zeros(self.field.order, dtype=np.int64)
        lift[self.reduce_array(teich)] = teich
        self._lift = lift
        self._lift.flags.writeable = False

        frob = np.zeros((m, m), dtype=np.int64)
        for j in range(m):
            frob[j] = self.digits(self.xi_pow(2 * j))
        self._frob = frob  # row j = digits of phi(xi^j)
        self.trace_coeffs = np.array(
            [self._frobenius_trace(self.xi_pow(j)) for j in range(m)], dtype=np.int64
        )

    def __repr__(self) -> str:
        return f"GaloisRing(m={self.m}, h={z4_poly_to_str(self.basic_poly)})"

    # -- encoding ------------------------------------------------------------

    def digits(self, c: int) -> tuple[int, ...]:
        return tuple(c >> (2 * j) & 3 for j in range(self.m))

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(ds)}")
        return sum((d % 4) << (2 * j) for j, d in enumerate(ds))

    def digits_array(self, codes) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] >> (2 * np.arange(self.m))) & 3

    def codes_from_digits(self, digits) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % 4) @ self._digit_weights

    def format(self, c: int) -> str:
        """Serialise as comma-separated Z4 digits, low degree first."""
        return ",".join(str(d) for d in self.digits(c))

    def parse(self, text: str) -> int:
        return self.from_digits([int(t) for t in text.split(",")])

    def constant(self, k: int) -> int:
        return k % 4

    def xi_pow(self, k: int) -> int:
        """Code of xi^k for any k >= 0."""
        if k < self._xi_pow.shape[0]:
            return int(self.codes_from_digits(self._xi_pow[k]))
        return self.pow(int(self.codes_from_digits(self._xi_pow[1])), k)

    # -- arithmetic ------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return self.from_digits([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        return self.from_digits([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def scale(self, k: int, x: int) -> int:
        return self.from_digits([k * a for a in self.digits(x)])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_array(np.int64(x), np.int64(y)))

    def mul_array(self, x, y) -> np.ndarray:
        """Elementwise ring product of code arrays (broadcasting)."""
        dx = self.digits_array(x)
        dy = self.digits_array(y)
        m = self.m
        shape = np.broadcast_shapes(dx.shape[:-1], dy.shape[:-1])
        conv = np.zeros(shape + (2 * m - 1,), dtype=np.int64)
        for i in range(m):
            conv[..., i : i + m] += dx[..., i : i + 1] * dy
        out = conv[..., :m] % 4
        if m > 1:
            out = (out + conv[..., m:] @ self._xi_pow[m : 2 * m - 1]) % 4
        return self.codes_from_digits(out)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- structure --------------------------------------------------------------

    def reduce(self, c: int) -> int:
        """Residue field element c mod 2."""
        return sum((d & 1) << j for j, d in enumerate(self.digits(c)))

    def reduce_array(self, codes) -> np.ndarray:
        return (self.digits_array(codes) & 1) @ (1 << np.arange(self.m, dtype=np.int64))

    def lift(self, x: int) -> int:
        """Teichmuller representative of the field element ``x``."""
        return int(self._lift[x])

    def lift_array(self, xs) -> np.ndarray:
        return self._lift[np.asarray(xs, dtype=np.int64)]

    def is_unit(self, c: int) -> bool:
        return self.reduce(c) != 0

    def _build_teichmuller(self) -> list[int]:
        n = self.field.group_order
        xi = self.xi_pow(1)
        out = [0]
        t = 1
        for k in range(n):
            if k > 0 and t == 1:
                raise NotPrimitive(f"xi has order {k} < {n}")
            out.append(t)
            t = self.mul(t, xi)
        if t != 1:
            raise NotPrimitive(f"xi^{n} != 1 in {self!r}")
        return out

    @property
    def teichmuller(self) -> list[int]:
        """[0, 1, xi, ..., xi^(2^m - 2)] ordered by exponent."""
        return list(self._teich_list)

    @cached_property
    def teich_exponent(self) -> dict[int, int]:
        """Map Teichmuller code -> position in :attr:`teichmuller` (0 for zero, k+1 for xi^k)."""
        return {t: i for i, t in enumerate(self._teich_list)}

    def two_adic_decompose(self, c: int) -> TwoAdic:
        a = self.lift(self.reduce(c))
        rest = self.digits(self.sub(c, a))
        if any(d & 1 for d in rest):
            raise ArithmeticError("c - a not divisible by 2")
        b_bar = sum((d >> 1) << j for j, d in enumerate(rest))
        return TwoAdic(a, self.lift(b_bar))

    def two_adic_array(self, codes) -> tuple[np.ndarray, np.ndarray]:
        """Vectorised decomposition; returns residues (a_bar, b_bar) as field ints."""
        d = self.digits_array(codes)
        a_bar = (d & 1) @ (1 << np.arange(self.m, dtype=np.int64))
        a = self.digits_array(self._lift[a_bar])
        rest = (d - a) % 4
        b_bar = (rest >> 1) @ (1 << np.arange(self.m, dtype=np.int64))
        return a_bar, b_bar

    def recompose(self, two_adic: TwoAdic) -> int:
        return self.add(two_adic.a, self.scale(2, two_adic.b))

    def frobenius(self, c: int, times: int = 1) -> int:
        """Ring automorphism fixing Z4 with xi -> xi^2."""
        d = np.array(self.digits(c), dtype=np.int64)
        for _ in range(times % self.m):
            d = (d @ self._frob) % 4
        return self.from_digits([int(v) for v in d])

    def _frobenius_trace(self, c: int) -> int:
        s, t = 0, c
        for _ in range(self.m):
            s = self.add(s, t)
            t = self.frobenius(t)
        if s > 3:
            raise ArithmeticError(f"trace of {self.format(c)} is not in Z4")
        return s

    def gen_trace(self, c: int) -> int:
        """Generalised trace, the sum of the m Frobenius conjugates of c (a Z4 value)."""
        return int(np.dot(self.digits(c), self.trace_coeffs) % 4)

    def trace_array(self, codes) -> np.ndarray:
        return (self.digits_array(codes) @ self.trace_coeffs) % 4

    def literal_trace(self, c: int) -> int:
        """tr(a) + 2 tr(b) for c = a + 2b.

        Diagnostic only: disagrees with :meth:`gen_trace` in general
        (e.g. m = 2, c = xi gives 1 versus 3).
        """
        t = self.two_adic_decompose(c)
        tr = self.field.trace
        return (tr(self.reduce(t.a)) + 2 * tr(self.reduce(t.b))) % 4

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Tr(c) for every code c; m <= 10 keeps this table under ~1M entries."""
        if self.m > 10:
            raise MemoryError("trace table only materialised for m <= 10")
        out = self.trace_array(np.arange(self.size)).astype(np.uint8)
        out.flags.writeable = False
        return out

    def enumerate(self, subset: Subset = "all") -> Iterator[int]:
        if subset == "all":
            yield from range(self.size)
        elif subset == "units":
            for c in range(self.size):
                if self.reduce(c):
                    yield c
        elif subset == "ideal":
            for b in range(self.field.order):
                yield self.scale(2, self.lift(b))
        else:
            raise ValueError(f"unknown subset {subset!r}")

    def elements_array(self, subset: Subset = "all") -> np.ndarray:
        codes = np.arange(self.size, dtype=np.int64)
        if subset == "all":
            return codes
        red = self.reduce_array(codes)
        if subset == "units":
            return codes[red != 0]
        if subset == "ideal":
            return codes[red == 0]
        raise ValueError(f"unknown subset {subset!r}")

    def teichmuller_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "basic_poly": list(self.basic_poly),
                "teichmuller": [self.format(t) for t in self._teich_list],
            }
        )
