"""Boolean functions on GF(2^m): supports, Walsh spectra and quadratic forms.

A function is its truth table indexed by field element (the integer whose
bits are the polynomial-basis coordinates).  The Walsh transform

    W_f(w) = sum_x (-1)^(f(x) + tr(w x))

is evaluated with a fast butterfly after rewriting tr(w x) as a dot product
of coordinate vectors through the trace Gram matrix; the O(4^m) direct sum
is kept as :func:`walsh_naive`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotQuadratic
from .gf2m import BinaryField


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    field: BinaryField
    table: np.ndarray
    label: str = ""

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.uint8)
        if table.shape != (self.field.order,):
            raise ValueError(f"truth table must have {self.field.order} entries")
        if np.any(table > 1):
            raise ValueError("truth table entries must be 0 or 1")
        table = table.copy()
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BooleanFunction)
            and self.field == other.field
            and bool(np.array_equal(self.table, other.table))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.table.tobytes()))

    def __add__(self, other: BooleanFunction) -> BooleanFunction:
        return BooleanFunction(self.field, self.table ^ other.table)

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def weight(self) -> int:
        """n_f, the size of the support."""
        return int(self.table.sum())

    def support(self) -> list[int]:
        """Field elements where f = 1, in increasing index order."""
        return [int(x) for x in np.flatnonzero(self.table)]

    def complement(self) -> BooleanFunction:
        return BooleanFunction(self.field, self.table ^ 1, self.label + "+1" if self.label else "")

    def to_hex(self) -> str:
        """Truth table as hex; bit x of the integer is f(x)."""
        value = 0
        for x in np.flatnonzero(self.table):
            value |= 1 << int(x)
        width = max(1, (self.field.order + 3) // 4)
        return f"{value:0{width}x}"

    @classmethod
    def from_hex(cls, field: BinaryField, text: str) -> BooleanFunction:
        value = int(text, 16)
        if value >> field.order:
            raise ValueError(f"hex truth table has more than {field.order} bits")
        table = [(value >> x) & 1 for x in range(field.order)]
        return cls(field, np.array(table, dtype=np.uint8), label=f"hex:{text}")


# -- constructors ---------------------------------------------------------------


def zero_function(field: BinaryField) -> BooleanFunction:
    return BooleanFunction(field, np.zeros(field.order, dtype=np.uint8), "0")


def from_trace_poly(
    field: BinaryField, terms: Iterable[tuple[int, int]], constant: int = 0
) -> BooleanFunction:
    """f(x) = tr(sum_e a_e x^e) + constant for (a_e, e) in ``terms``."""
    xs = np.arange(field.order, dtype=np.int64)
    logs = field.log[xs]
    acc = np.zeros(field.order, dtype=np.int64)
    for coeff, e in terms:
        if not 1 <= e <= field.order - 1:
            raise ValueError(f"exponent {e} outside [1, {field.order - 1}]")
        powers = np.where(logs < 0, 0, field.antilog[(np.where(logs < 0, 0, logs) * e) % field.group_order])
        acc ^= field.mul_vec(coeff, powers)
    table = field.trace_table[acc] ^ (constant & 1)
    return BooleanFunction(field, table)


def affine(field: BinaryField, a: int, b: int = 0) -> BooleanFunction:
    """tr(a x) + b."""
    f = from_trace_poly(field, [(a, 1)] if a else [], b)
    return BooleanFunction(field, f.table, f"affine:a={a},b={b}")


def gold(field: BinaryField, alpha: int, i: int) -> BooleanFunction:
    """tr(alpha x^(2^i + 1))."""
    e = (1 << i) + 1
    if e > field.order - 1:
        e = e % field.group_order or field.group_order
    f = from_trace_poly(field, [(alpha, e)])
    return BooleanFunction(field, f.table, f"gold:alpha={alpha},i={i}")


def maiorana_mcfarland(field: BinaryField, perm: Sequence[int] | None = None) -> BooleanFunction:
    """f(u, v) = <u, perm(v)> with x = u + 2^(m/2) v split into coordinate halves."""
    m = field.m
    if m % 2:
        raise ValueError("Maiorana-McFarland functions need even m")
    k = m // 2
    if perm is None:
        perm = list(range(1 << k))
    perm = list(perm)
    if sorted(perm) != list(range(1 << k)):
        raise ValueError(f"perm must be a permutation of 0..{(1 << k) - 1}")
    xs = np.arange(field.order, dtype=np.int64)
    u = xs & ((1 << k) - 1)
    v = xs >> k
    pv = np.asarray(perm, dtype=np.int64)[v]
    table = (np.bitwise_count(u & pv) & 1).astype(np.uint8)
    return BooleanFunction(field, table, "mm:" + ",".join(map(str, perm)))


# -- Walsh transform ---------------------------------------------------------------


def fwht(values: np.ndarray) -> np.ndarray:
    """In-order fast Walsh-Hadamard transform: out[u] = sum_x values[x] (-1)^(u.x)."""
    a = np.array(values, dtype=np.int64)
    n = a.shape[0]
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1)
        h *= 2
    return a.reshape(n)


def _dual_index(field: BinaryField) -> np.ndarray:
    """perm[w] = coordinate vector u with tr(w x) = u . x for all x."""
    g = field.trace_matrix.astype(np.int64)
    ws = np.arange(field.order, dtype=np.int64)
    bits = (ws[:, None] >> np.arange(field.m)) & 1
    u_bits = (bits @ g) % 2
    return u_bits @ (1 << np.arange(field.m, dtype=np.int64))


def walsh_naive(f: BooleanFunction, w: int) -> int:
    field = f.field
    xs = np.arange(field.order, dtype=np.int64)
    exps = f.table ^ field.trace_table[field.mul_vec(w, xs)]
    return int(field.order - 2 * int(exps.sum()))


def walsh(f: BooleanFunction, w: int) -> int:
    return int(walsh_spectrum(f).values[w])


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    values: np.ndarray

    def multiset(self) -> dict[int, int]:
        return dict(sorted(Counter(int(v) for v in self.values).items()))

    def distinct(self) -> set[int]:
        return {int(v) for v in np.unique(self.values)}

    def to_csv(self) -> str:
        lines = ["w_index,value"]
        lines.extend(f"{w},{int(v)}" for w, v in enumerate(self.values))
        return "\n".join(lines) + "\n"


def walsh_spectrum(f: BooleanFunction) -> WalshSpectrum:
    signs = 1 - 2 * f.table.astype(np.int64)
    values = fwht(signs)[_dual_index(f.field)]
    values.flags.writeable = False
    return WalshSpectrum(values)


def classify(f: BooleanFunction) -> str:
    """One of 'affine', 'bent', 'semibent', 'quadratic(<rank>)', 'other'."""
    m = f.m
    spec = walsh_spectrum(f)
    vals = spec.distinct()
    nonzero = np.count_nonzero(spec.values)
    if nonzero == 1 and vals <= {0, 1 << m, -(1 << m)}:
        return "affine"
    if m % 2 == 0 and vals <= {1 << (m // 2), -(1 << (m // 2))}:
        return "bent"
    if m % 2 == 1 and vals <= {0, 1 << ((m + 1) // 2), -(1 << ((m + 1) // 2))}:
        return "semibent"
    try:
        rank = quadratic_rank(f).rank
    except NotQuadratic:
        return "other"
    return f"quadratic({rank})"


# -- the quadratic form Q(x) = sum_{i<j} x^(2^i + 2^j) ---------------------------


def _conjugates(field: BinaryField, xs: np.ndarray) -> list[np.ndarray]:
    out = [np.asarray(xs, dtype=np.int64)]
    for _ in range(field.m - 1):
        out.append(field.mul_vec(out[-1], out[-1]))
    return out


def q_table(field: BinaryField) -> np.ndarray:
    """Q(x) for every field element, via the elementary symmetric sum of the conjugates."""
    conj = _conjugates(field, np.arange(field.order))
    prefix = np.zeros(field.order, dtype=np.int64)
    acc = np.zeros(field.order, dtype=np.int64)
    for c in conj:
        acc ^= field.mul_vec(c, prefix)
        prefix ^= c
    if np.any(acc > 1):
        raise ArithmeticError("Q left the prime field")
    return acc.astype(np.uint8)


def q_form(field: BinaryField, x: int) -> int:
    conj = [x]
    for _ in range(field.m - 1):
        conj.append(field.mul(conj[-1], conj[-1]))
    s = 0
    for j in range(field.m):
        for i in range(j):
            s ^= field.mul(conj[i], conj[j])
    if s not in (0, 1):
        raise ArithmeticError(f"Q({x}) = {s} is not in GF(2)")
    return s


def q_function(field: BinaryField) -> BooleanFunction:
    return BooleanFunction(field, q_table(field), "Q")


def bilinear_form(field: BinaryField, x: int, y: int) -> int:
    """Polar form Q(x + y) + Q(x) + Q(y)."""
    return q_form(field, x ^ y) ^ q_form(field, x) ^ q_form(field, y)


def bilinear_form_expanded(field: BinaryField, x: int, y: int) -> int:
    """sum_{i<j} x^(2^i) y^(2^j) + y^(2^i) x^(2^j), evaluated in the field."""
    cx, cy = [x], [y]
    for _ in range(field.m - 1):
        cx.append(field.mul(cx[-1], cx[-1]))
        cy.append(field.mul(cy[-1], cy[-1]))
    s = 0
    for j in range(field.m):
        for i in range(j):
            s ^= field.mul(cx[i], cy[j]) ^ field.mul(cy[i], cx[j])
    return s


# -- rank of a quadratic function ------------------------------------------------


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of integer bit-mask rows."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


@dataclass(frozen=True)
class QuadraticFormRank:
    rank: int
    radical_dim: int

    @property
    def h(self) -> int:
        return self.rank // 2


def polar_matrix(g: BooleanFunction) -> list[int]:
    """Rows of B(e_i, e_j) = g(e_i + e_j) + g(e_i) + g(e_j) + g(0), as bit masks."""
    t = g.table
    m = g.m
    rows = []
    for i in range(m):
        row = 0
        for j in range(m):
            ei, ej = 1 << i, 1 << j
            if t[ei ^ ej] ^ t[ei] ^ t[ej] ^ t[0]:
                row |= 1 << j
        rows.append(row)
    return rows


def quadratic_rank(g: BooleanFunction, chunk: int = 256) -> QuadraticFormRank:
    """Rank of the polar form of a quadratic (plus affine) Boolean function.

    Raises NotQuadratic when g(x+z) + g(x) + g(z) + g(0) is not bilinear.
    """
    field = g.field
    m = field.m
    rows = polar_matrix(g)
    # image[x] = mask with B(x, z) = parity(image[x] & z)
    xs = np.arange(field.order, dtype=np.int64)
    image = np.zeros(field.order, dtype=np.int64)
    for i, row in enumerate(rows):
        image ^= np.where((xs >> i) & 1, row, 0)
    t = g.table.astype(np.int64)
    zs = xs
    for start in range(0, field.order, chunk):
        x = xs[start : start + chunk, None]
        polar = t[x ^ zs] ^ t[x] ^ t[zs] ^ t[0]
        predicted = np.bitwise_count(image[x] & zs) & 1
        if not np.array_equal(polar, predicted):
            bad = np.argwhere(polar != predicted)[0]
            raise NotQuadratic(
                f"polar form not bilinear at x={int(x[bad[0], 0])}, z={int(zs[bad[1]])}"
            )
    rank = gf2_rank(rows)
    if rank % 2:
        raise ArithmeticError(f"alternating form of odd rank {rank}")
    return QuadraticFormRank(rank, m - rank)


def radical(g: BooleanFunction) -> list[int]:
    """Elements x with B(x, z) = 0 for every z (requires g quadratic)."""
    quadratic_rank(g)
    rows = polar_matrix(g)
    out = []
    for x in range(g.field.order):
        acc = 0
        for i in range(g.m):
            if x >> i & 1:
                acc ^= rows[i]
        if acc == 0:
            out.append(x)
    return out


# -- named families and the text grammar used by the CLI ---------------------------


def search_quadratic(field: BinaryField, target: str, nf: int | None = None) -> BooleanFunction:
    """First tr(alpha x^(2^i+1) + beta x) + b whose spectrum classifies as ``target``.

    Candidates run over i = 1..m//2, then alpha, beta, b in increasing order;
    ``nf`` additionally fixes the support size.
    """
    m = field.m
    for i in range(1, max(1, m // 2) + 1):
        e = (1 << i) + 1
        if e > field.order - 1:
            continue
        for alpha in range(1, field.order):
            for beta in range(field.order):
                terms = [(alpha, e)] + ([(beta, 1)] if beta else [])
                base = from_trace_poly(field, terms)
                for b in (0, 1):
                    f = base.complement() if b else base
                    if nf is not None and f.weight != nf:
                        continue
                    if classify(f) == target:
                        label = f"{target}:alpha={alpha},i={i},beta={beta},b={b}"
                        return BooleanFunction(field, f.table, label)
    raise LookupError(f"no {target} function of this shape for m={m}" + (f", n_f={nf}" if nf else ""))


def _kv(text: str) -> dict[str, str]:
    out = {}
    for part in filter(None, text.split(",")):
        key, _, value = part.partition("=")
        out[key.strip()] = value.strip()
    return out


def parse_function_spec(field: BinaryField, spec: str) -> BooleanFunction:
    """Build a function from ``family:params``.

    affine:a=<elt>,b=<bit>     tr(a x) + b
    gold:alpha=<elt>,i=<int>   tr(alpha x^(2^i+1))
    mm:<perm>                  Maiorana-McFarland, perm = 'id' or comma list
    hex:<digits>               truth table, bit x = f(x)
    bent:auto[,nf=<int>]       searched, verified by spectrum
    semibent:auto[,nf=<int>]
    Elements are integers (decimal or 0x-prefixed) in the polynomial basis.
    """
    family, _, rest = spec.partition(":")
    family = family.strip().lower()
    if family == "affine":
        kv = _kv(rest)
        return affine(field, int(kv.get("a", "1"), 0), int(kv.get("b", "0"), 0))
    if family == "gold":
        kv = _kv(rest)
        return gold(field, int(kv.get("alpha", "1"), 0), int(kv.get("i", "1"), 0))
    if family == "mm":
        rest = rest.strip()
        perm = None if rest in ("", "id") else [int(t, 0) for t in rest.split(",")]
        return maiorana_mcfarland(field, perm)
    if family == "hex":
        return BooleanFunction.from_hex(field, rest.strip())
    if family in ("bent", "semibent"):
        parts = rest.split(",", 1)
        if parts[0].strip() != "auto":
            raise ValueError(f"{family} only supports 'auto'")
        kv = _kv(parts[1]) if len(parts) > 1 else {}
        nf = int(kv["nf"]) if "nf" in kv else None
        return search_quadratic(field, family, nf)
    raise ValueError(f"unknown function family {family!r}")
