"""Trace codes C_D = {(Tr(a d))_{d in D} : a in GR(4, m)} and their Lee weights.

Three defining sets are provided: Teichmuller lifts of a Boolean support,
support + 2T, and skew sets of units.  Every code has two independent
routes to its Lee weight distribution: exhaustive enumeration of all 4^m
codewords and the closed forms in ``analytic_*``.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal

import numpy as np

from .boolfun import BooleanFunction, q_table, walsh_spectrum
from .charsum import gamma_all, scaled_chi_sum
from .errors import BudgetExceeded, EmptySupport
from .gr4m import GaloisRing

Kind = Literal["support", "support_plus", "skew", "custom"]

# Exhaustive enumeration limits: maximum m per construction and a cap on 4^m * n.
MAX_M = {"support": 8, "support_plus": 8, "skew": 6, "custom": 8}
DEFAULT_BUDGET = 1 << 32
BUDGET_ENV = "Z4TRACE_BUDGET"

LEE = np.array([0, 1, 2, 1], dtype=np.int64)


def work_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value, 0) if value else DEFAULT_BUDGET


@dataclass(frozen=True, eq=False)
class DefiningSet:
    elements: tuple[int, ...]
    kind: Kind
    source: BooleanFunction | None = None

    def __post_init__(self):
        # 0 is allowed: a support containing x = 0 lifts to a zero coordinate
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("defining set has duplicates")

    def __len__(self) -> int:
        return len(self.elements)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)


def defining_set_support(ring: GaloisRing, f: BooleanFunction) -> DefiningSet:
    """Teichmuller lifts of the support of f, ordered by Teichmuller exponent."""
    supp = f.support()
    if not supp:
        raise EmptySupport("the zero function has empty support")
    lifts = [ring.lift(x) for x in supp]
    order = ring.teich_exponent
    lifts.sort(key=order.__getitem__)
    return DefiningSet(tuple(lifts), "support", f)


def defining_set_support_plus(ring: GaloisRing, f: BooleanFunction) -> DefiningSet:
    """{x + 2y : x in lifted support, y in T}, lexicographic in (x, y)."""
    xs = defining_set_support(ring, f).elements
    teich = ring.teichmuller
    elems = [ring.add(x, ring.scale(2, y)) for x in xs for y in teich]
    return DefiningSet(tuple(elems), "support_plus", f)


def skew_set(ring: GaloisRing, seed: int | None = None) -> DefiningSet:
    """A set D of units with D, -D and the ideal 2R partitioning R.

    Without a seed, each pair {u, -u} contributes the member whose digit
    vector (low degree first) is lexicographically smaller.  With a seed
    the member is drawn at random.  D is ordered by the Teichmuller
    exponents of its 2-adic components.
    """
    rng = np.random.default_rng(seed) if seed is not None else None
    chosen = []
    seen = set()
    for u in ring.enumerate("units"):
        if u in seen:
            continue
        v = ring.neg(u)
        seen.update((u, v))
        if rng is None:
            pick = u if ring.digits(u) < ring.digits(v) else v
        else:
            pick = u if rng.integers(2) == 0 else v
        chosen.append(pick)
    order = ring.teich_exponent

    def key(c):
        t = ring.two_adic_decompose(c)
        return order[t.a], order[t.b]

    chosen.sort(key=key)
    return DefiningSet(tuple(chosen), "skew")


@dataclass(frozen=True, eq=False)
class TraceCode:
    ring: GaloisRing
    defining_set: DefiningSet

    @property
    def n(self) -> int:
        return len(self.defining_set)

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def kind(self) -> Kind:
        return self.defining_set.kind

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """Row j is the codeword of xi^j, so c_a = digits(a) @ G mod 4."""
        d = self.defining_set.as_array()
        rows = [
            self.ring.trace_array(self.ring.mul_array(np.int64(self.ring.xi_pow(j)), d))
            for j in range(self.m)
        ]
        g = np.stack(rows).astype(np.uint8)
        g.flags.writeable = False
        return g

    def check_budget(self) -> None:
        cap = MAX_M[self.kind]
        if self.m > cap:
            raise BudgetExceeded(f"{self.kind} enumeration is limited to m <= {cap}")
        budget = work_budget()
        if self.ring.size * self.n > budget:
            raise BudgetExceeded(
                f"4^{self.m} * {self.n} symbols exceeds budget {budget} (set {BUDGET_ENV})"
            )

    def codewords(self, chunk: int | None = None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Yield (a_codes, words) blocks covering every a in R in increasing code order."""
        self.check_budget()
        if chunk is None:
            chunk = max(1, min(self.ring.size, (1 << 22) // max(self.n, 1)))
        gen = self.generator_matrix.astype(np.float32)
        for start in range(0, self.ring.size, chunk):
            a = np.arange(start, min(start + chunk, self.ring.size), dtype=np.int64)
            digits = self.ring.digits_array(a).astype(np.float32)
            words = (digits @ gen).astype(np.int64) % 4
            yield a, words.astype(np.uint8)

    def codebook(self) -> np.ndarray:
        """All 4^m codewords, row a = c_a (repeats kept)."""
        return np.concatenate([w for _, w in self.codewords()], axis=0)


def codeword(a: int, code: TraceCode) -> np.ndarray:
    """(Tr(a d_1), ..., Tr(a d_n)) computed with ring products."""
    ring = code.ring
    prods = ring.mul_array(np.int64(a), code.defining_set.as_array())
    return ring.trace_array(prods).astype(np.uint8)


def symbol_counts(v) -> tuple[int, int, int, int]:
    counts = np.bincount(np.asarray(v, dtype=np.int64), minlength=4)
    return tuple(int(c) for c in counts[:4])


def lee_weight(v) -> int:
    return int(LEE[np.asarray(v, dtype=np.int64)].sum())


def weight_via_charsum(a: int, code: TraceCode) -> int:
    """n - Re(chi(aD))."""
    s = scaled_chi_sum(code.ring, a, code.defining_set.elements)
    return code.n - s.re


def charsum_weights_all(code: TraceCode, chunk: int = 64) -> np.ndarray:
    """n - Re(chi(aD)) for every a, with aD formed by ring multiplication."""
    code.check_budget()
    ring = code.ring
    d = code.defining_set.as_array()
    out = np.empty(ring.size, dtype=np.int64)
    for start in range(0, ring.size, chunk):
        a = np.arange(start, min(start + chunk, ring.size), dtype=np.int64)
        traces = ring.trace_array(ring.mul_array(a[:, None], d[None, :]))
        # Re(sum i^t) = #(t=0) - #(t=2)
        re = (traces == 0).sum(axis=1) - (traces == 2).sum(axis=1)
        out[start : start + len(a)] = code.n - re
    return out


def lee_weights_all(code: TraceCode) -> np.ndarray:
    """Lee weight of c_a for every a, from the codeword symbols."""
    out = np.empty(code.ring.size, dtype=np.int64)
    for a, words in code.codewords():
        out[a] = LEE[words].sum(axis=1)
    return out


@dataclass(frozen=True)
class LeeWeightEnumerator:
    counts: dict[int, int]

    @classmethod
    def from_weights(cls, weights) -> LeeWeightEnumerator:
        c = Counter(int(w) for w in np.asarray(weights).ravel())
        return cls(dict(sorted(c.items())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w != 0]

    @property
    def min_nonzero(self) -> int | None:
        nz = self.nonzero_weights
        return min(nz) if nz else None

    def as_list(self) -> list[list[int]]:
        return [[w, f] for w, f in sorted(self.counts.items())]


def enumerate_weights(code: TraceCode) -> LeeWeightEnumerator:
    return LeeWeightEnumerator.from_weights(lee_weights_all(code))


# -- closed forms -----------------------------------------------------------------------


def _two_adic_codes(ring: GaloisRing, r_bar, s_bar) -> np.ndarray:
    """Codes of lift(r) + 2 lift(s) for field arrays r_bar, s_bar."""
    r = ring.digits_array(ring.lift_array(r_bar))
    s = ring.digits_array(ring.lift_array(s_bar))
    return ring.codes_from_digits(r + 2 * s)


def analytic_support(ring: GaloisRing, f: BooleanFunction) -> LeeWeightEnumerator:
    """Lee weights of C_D for D the lifted support of f, from Walsh and Gamma sums.

    w = 0 gives 0; w = 2s (s != 0) gives (2 n_f + W_f(s)) / 2; a unit
    w = r + 2s gives (4 n_f - 2 Re Gamma(w) + W_{f_r}(s) + W_{f_r}(r + s)) / 4
    with f_r(x) = f(x) + Q(r x).
    """
    if f.weight == 0:
        raise EmptySupport("the zero function has empty support")
    field = ring.field
    nf = f.weight
    order = field.order
    xs = np.arange(order, dtype=np.int64)
    weights = Counter({0: 1})

    spec = walsh_spectrum(f).values
    for s in range(1, order):
        num = 2 * nf + int(spec[s])
        if num % 2:
            raise ArithmeticError("non-integral weight in the ideal branch")
        weights[num // 2] += 1

    gamma_re, _ = gamma_all(ring)
    qtab = q_table(field)
    for r in range(1, order):
        fr = BooleanFunction(field, f.table ^ qtab[field.mul_vec(r, xs)])
        wr = walsh_spectrum(fr).values
        codes = _two_adic_codes(ring, np.full(order, r), xs)
        num = 4 * nf - 2 * gamma_re[codes] + wr[xs] + wr[xs ^ r]
        if np.any(num % 4):
            raise ArithmeticError("non-integral weight in the unit branch")
        weights.update((num // 4).tolist())
    return LeeWeightEnumerator(dict(sorted(weights.items())))


def analytic_support_plus(ring: GaloisRing, f: BooleanFunction) -> LeeWeightEnumerator:
    """0 once, 2^m n_f for every unit, and 2^m n_f + 2^(m-1) W_f(s) for w = 2s, s != 0."""
    if f.weight == 0:
        raise EmptySupport("the zero function has empty support")
    m = ring.m
    n = (1 << m) * f.weight
    weights = Counter({0: 1, n: ((1 << m) - 1) << m})
    spec = walsh_spectrum(f).values
    for s in range(1, 1 << m):
        weights[n + (1 << (m - 1)) * int(spec[s])] += 1
    return LeeWeightEnumerator(dict(sorted(weights.items())))


def analytic_skew(ring: GaloisRing) -> LeeWeightEnumerator:
    """Two nonzero weights: 2^(2m-1) on the nonzero ideal, (2^m - 1) 2^(m-1) on units."""
    m = ring.m
    q = 1 << m
    heavy = 1 << (2 * m - 1)
    light = (q - 1) << (m - 1)
    weights = Counter({0: 1})
    weights[heavy] += q - 1
    weights[light] += q * q - q
    return LeeWeightEnumerator(dict(sorted(weights.items())))


def printed_skew_frequencies(m: int) -> dict[int, int]:
    """Frequency assignment for the skew family as it circulates in print.

    Kept only for comparison: it gives 2^(4m) - 1 to weight 2^(2m-1) and
    2^m - 1 to (2^m - 1) 2^(m-1), which cannot sum to 4^m.
    """
    return {0: 1, 1 << (2 * m - 1): (1 << (4 * m)) - 1, ((1 << m) - 1) << (m - 1): (1 << m) - 1}


def build_code(ring: GaloisRing, kind: Kind, f: BooleanFunction | None = None,
               seed: int | None = None) -> TraceCode:
    if kind == "support":
        return TraceCode(ring, defining_set_support(ring, f))
    if kind == "support_plus":
        return TraceCode(ring, defining_set_support_plus(ring, f))
    if kind == "skew":
        return TraceCode(ring, skew_set(ring, seed))
    raise ValueError(f"unknown construction {kind!r}")


def analytic_enumerator(code: TraceCode) -> LeeWeightEnumerator:
    ds = code.defining_set
    if ds.kind == "support":
        return analytic_support(code.ring, ds.source)
    if ds.kind == "support_plus":
        return analytic_support_plus(code.ring, ds.source)
    if ds.kind == "skew":
        return analytic_skew(code.ring)
    raise ValueError("no closed form for custom defining sets")
