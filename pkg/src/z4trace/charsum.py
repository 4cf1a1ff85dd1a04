"""Exact additive character sums over GR(4, m).

chi(c) = i^Tr(c).  Every sum here is a Gaussian integer built from the
counts of trace values 0..3, so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .boolfun import BooleanFunction
from .errors import VerificationFailed
from .gr4m import GaloisRing


@dataclass(frozen=True)
class GaussInt:
    re: int
    im: int

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        return GaussInt(
            self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __pow__(self, e: int) -> GaussInt:
        out = GaussInt(1, 0)
        for _ in range(e):
            out = out * self
        return out

    def exact_div(self, k: int) -> GaussInt:
        if self.re % k or self.im % k:
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return GaussInt(self.re // k, self.im // k)

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"

    @classmethod
    def i_power(cls, k: int) -> GaussInt:
        return _I_POWERS[k % 4]


_I_POWERS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def _from_counts(counts) -> GaussInt:
    c0, c1, c2, c3 = (int(v) for v in counts)
    return GaussInt(c0 - c2, c1 - c3)


def counts_to_gauss(counts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised: rows of trace-value counts -> (re, im) arrays."""
    counts = np.asarray(counts, dtype=np.int64)
    return counts[..., 0] - counts[..., 2], counts[..., 1] - counts[..., 3]


def trace_value_counts(traces: np.ndarray) -> np.ndarray:
    """Per-row counts of the Z4 values 0..3 along the last axis."""
    traces = np.asarray(traces)
    return np.stack([(traces == k).sum(axis=-1) for k in range(4)], axis=-1)


def chi(ring: GaloisRing, c: int) -> GaussInt:
    return GaussInt.i_power(ring.gen_trace(c))


def chi_sum(ring: GaloisRing, elements: Iterable[int]) -> GaussInt:
    codes = np.fromiter(elements, dtype=np.int64)
    if codes.size == 0:
        return GaussInt(0, 0)
    traces = ring.trace_array(codes)
    return _from_counts(np.bincount(traces, minlength=4))


def scaled_chi_sum(ring: GaloisRing, b: int, elements) -> GaussInt:
    """chi(bS) = sum over x in S of chi(b x), products taken in the ring."""
    codes = np.asarray(list(elements), dtype=np.int64)
    if codes.size == 0:
        return GaussInt(0, 0)
    return chi_sum(ring, ring.mul_array(np.int64(b), codes))


# -- Gamma sums over the Teichmuller set -------------------------------------------


def _teich_trace_matrix(ring: GaloisRing) -> np.ndarray:
    """M[j, x] = Tr(xi^j * t_x) over the Teichmuller set, so Tr(w t) = digits(w) @ M."""
    teich = np.asarray(ring.teichmuller, dtype=np.int64)
    rows = [ring.trace_array(ring.mul_array(np.int64(ring.xi_pow(j)), teich)) for j in range(ring.m)]
    return np.stack(rows)


def gamma(ring: GaloisRing, w: int) -> GaussInt:
    teich = np.asarray(ring.teichmuller, dtype=np.int64)
    traces = ring.trace_array(ring.mul_array(np.int64(w), teich))
    return _from_counts(np.bincount(traces, minlength=4))


def gamma_all(ring: GaloisRing, chunk: int = 4096) -> tuple[np.ndarray, np.ndarray]:
    """(re, im) of Gamma(w) for every ring code w."""
    mat = _teich_trace_matrix(ring)
    re = np.empty(ring.size, dtype=np.int64)
    im = np.empty(ring.size, dtype=np.int64)
    for start in range(0, ring.size, chunk):
        codes = np.arange(start, min(start + chunk, ring.size), dtype=np.int64)
        traces = (ring.digits_array(codes) @ mat) % 4
        r, i = counts_to_gauss(trace_value_counts(traces))
        re[start : start + len(codes)] = r
        im[start : start + len(codes)] = i
    return re, im


def gamma_one_reference(m: int) -> GaussInt:
    """(1+i)^m for odd m, -(1+i)^m for even m."""
    base = GaussInt(1, 1) ** m
    return base if m % 2 else -base


def verify_gamma_closed_form(ring: GaloisRing, raise_on_failure: bool = False) -> dict:
    """Check Gamma(w) = i^(-Tr(s/r)) Gamma(1) for every unit w = r + 2s.

    Also checks that the computed Gamma(1) equals +-(1+i)^m.  Returns a
    report ``{m, checked, failures}``; failures list ring-formatted witnesses.
    """
    field = ring.field
    re, im = gamma_all(ring)
    g1 = GaussInt(int(re[1]), int(im[1]))
    ref = gamma_one_reference(ring.m)
    failures = []
    if g1 != ref:
        failures.append({"w": ring.format(1), "computed": str(g1), "expected": str(ref)})

    units = ring.elements_array("units")
    r_bar, s_bar = ring.two_adic_array(units)
    r_inv = field.antilog[(field.group_order - field.log[r_bar]) % field.group_order]
    quotient = field.mul_vec(s_bar, r_inv)
    exps = (-ring.trace_array(ring.lift_array(quotient))) % 4
    # i^k * Gamma(1) for k = 0..3
    table = [GaussInt.i_power(k) * g1 for k in range(4)]
    exp_re = np.array([t.re for t in table])[exps]
    exp_im = np.array([t.im for t in table])[exps]
    bad = np.flatnonzero((exp_re != re[units]) | (exp_im != im[units]))
    for idx in bad[:20]:
        w = int(units[idx])
        failures.append(
            {
                "w": ring.format(w),
                "computed": str(GaussInt(int(re[w]), int(im[w]))),
                "expected": str(GaussInt(int(exp_re[idx]), int(exp_im[idx]))),
            }
        )
    report = {
        "m": ring.m,
        "checked": int(units.size) + 1,
        "gamma_one": str(g1),
        "failures": failures,
    }
    if failures and raise_on_failure:
        raise VerificationFailed(f"Gamma closed form fails for m={ring.m}", failures[0]["w"])
    return report


# -- the Z4-valued transform f_hat ---------------------------------------------------


def f_hat(f: BooleanFunction, ring: GaloisRing, w: int) -> GaussInt:
    """2^-m sum_{x in R} i^(2 f(x mod 2) + Tr(w x)); the division is exact."""
    xs = np.arange(ring.size, dtype=np.int64)
    tau = np.array(
        [ring.gen_trace(ring.mul(ring.xi_pow(j), w)) for j in range(ring.m)], dtype=np.int64
    )
    tr_wx = (ring.digits_array(xs) @ tau) % 4
    exps = (2 * f.table[ring.reduce_array(xs)].astype(np.int64) + tr_wx) % 4
    total = _from_counts(np.bincount(exps, minlength=4))
    return total.exact_div(1 << ring.m)
