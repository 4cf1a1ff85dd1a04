"""Binary codes attached to a Z4 trace code: Gray image, residue and torsion codes.

Also the Griesmer bound and the two linearity tests for Gray images.
Binary codes are kept as explicit, deduplicated word sets so that
nonlinear Gray images are handled on the same footing as linear codes.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BudgetExceeded, EmptyCode
from .trace_codes import TraceCode

Linearity = Literal["yes", "no", "unknown"]

# Pairwise scans and XOR-closure checks are limited to this many words.
MAX_WORDS = 1 << 12


def gray_map(v) -> np.ndarray:
    """phi(x) = (q, r + q) for x = r + 2q, the two halves concatenated.

    Works on a single vector or row-wise on a 2-D array.
    """
    v = np.asarray(v, dtype=np.uint8)
    r = v & 1
    q = v >> 1
    return np.concatenate((q, r ^ q), axis=-1)


def hamming_weight(v) -> int:
    return int(np.count_nonzero(v))


@dataclass(frozen=True, eq=False)
class BinaryCode:
    """Explicit binary code; ``words`` is a sorted, duplicate-free (M, n) uint8 array."""

    words: np.ndarray
    is_linear: Linearity = "unknown"

    @classmethod
    def from_words(cls, words, is_linear: Linearity = "unknown") -> BinaryCode:
        words = np.asarray(words, dtype=np.uint8)
        if words.ndim != 2:
            raise ValueError("words must be a 2-D array")
        words = np.unique(words, axis=0)
        words.flags.writeable = False
        return cls(words, is_linear)

    @property
    def length(self) -> int:
        return int(self.words.shape[1])

    @property
    def size(self) -> int:
        return int(self.words.shape[0])

    @property
    def dimension(self) -> int | None:
        if self.is_linear != "yes":
            return None
        k = int(round(math.log2(self.size)))
        if 1 << k != self.size:
            raise ArithmeticError("linear code whose size is not a power of 2")
        return k

    def weight_distribution(self) -> dict[int, int]:
        return dict(sorted(Counter(self.words.sum(axis=1).tolist()).items()))

    def to_hex_lines(self) -> str:
        """One word per line as hex; bit i of the integer is coordinate i."""
        width = max(1, (self.length + 3) // 4)
        weights = [1 << i for i in range(self.length)]
        lines = []
        for w in self.words:
            value = sum(b for b, bit in zip(weights, w) if bit)
            lines.append(f"{value:0{width}x}")
        return "\n".join(sorted(lines)) + "\n"

    def summary(self) -> dict:
        out = {
            "n": self.length,
            "M": self.size,
            "d": min_distance(self) if self.size > 1 else None,
            "linear": self.is_linear,
        }
        if self.is_linear == "yes":
            out["k"] = self.dimension
        return out

    def summary_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True)


def _pack(words: np.ndarray) -> list[bytes]:
    return [row.tobytes() for row in np.packbits(words, axis=1)]


def is_linear_direct(code: BinaryCode) -> bool:
    """Closure under XOR (and containing 0), by exhaustive pairing."""
    if code.size > MAX_WORDS:
        raise BudgetExceeded(f"XOR closure limited to {MAX_WORDS} words")
    words = code.words
    members = set(_pack(words))
    if _pack(np.zeros((1, code.length), dtype=np.uint8))[0] not in members:
        return False
    for i in range(code.size):
        sums = words[i] ^ words[i + 1 :]
        if not members.issuperset(_pack(sums)):
            return False
    return True


def is_linear_z4_criterion(code: TraceCode) -> bool:
    """The Gray image of a linear Z4 code is linear iff 2(a * b) lies in C for all a, b in C.

    ``*`` is the componentwise product; the check runs over distinct codewords.
    """
    book = np.unique(code.codebook(), axis=0)
    if book.shape[0] > MAX_WORDS:
        raise BudgetExceeded(f"criterion limited to {MAX_WORDS} codewords")
    members = {row.tobytes() for row in book}
    parity = book & 1
    for i in range(book.shape[0]):
        prods = (2 * (parity[i] & parity[i:])).astype(np.uint8)
        if not members.issuperset(row.tobytes() for row in prods):
            return False
    return True


def min_distance(code: BinaryCode) -> int:
    """Minimum Hamming distance; minimum nonzero weight when the code is linear."""
    if code.size < 2:
        raise EmptyCode("minimum distance needs at least two codewords")
    if code.is_linear == "yes":
        weights = code.words.sum(axis=1)
        return int(weights[weights > 0].min())
    if code.size > MAX_WORDS:
        raise BudgetExceeded(f"pairwise scan limited to {MAX_WORDS} words")
    words = code.words
    best = code.length
    for i in range(code.size - 1):
        d = int(np.count_nonzero(words[i] ^ words[i + 1 :], axis=1).min())
        if d < best:
            best = d
            if best == 1:
                break
    return best


def gray_image(code: TraceCode, check_linearity: bool = True) -> BinaryCode:
    """phi(C_D) as an explicit code; linearity settled by XOR closure when small enough."""
    words = gray_map(code.codebook())
    image = BinaryCode.from_words(words)
    if check_linearity and image.size <= MAX_WORDS:
        image = BinaryCode(image.words, "yes" if is_linear_direct(image) else "no")
    return image


def residue_code(code: TraceCode) -> BinaryCode:
    """{c mod 2 : c in C}."""
    return BinaryCode.from_words(code.codebook() & 1, "yes")


def torsion_code(code: TraceCode) -> BinaryCode:
    """{x : 2x in C}, read off the codewords with only even symbols."""
    book = code.codebook()
    even = book[np.all(book % 2 == 0, axis=1)]
    return BinaryCode.from_words(even >> 1, "yes")


def torsion_from_residue_field(code: TraceCode) -> BinaryCode:
    """{(tr(b d_i mod 2))_i : b in GF(2^m)}, the expected torsion code of a trace code."""
    ring = code.ring
    field = ring.field
    d_bar = ring.reduce_array(code.defining_set.as_array())
    rows = [field.trace_table[field.mul_vec(b, d_bar)] for b in range(field.order)]
    return BinaryCode.from_words(np.stack(rows), "yes")


def griesmer_bound(k: int, d: int, q: int = 2) -> int:
    """sum_{i<k} ceil(d / q^i)."""
    if k < 1 or d < 1 or q < 2:
        raise ValueError("need k >= 1, d >= 1, q >= 2")
    return sum(-(-d // q**i) for i in range(k))


def meets_griesmer(n: int, k: int, d: int, q: int = 2) -> bool:
    return n == griesmer_bound(k, d, q)


def simplex_replication_check(tor: BinaryCode, m: int) -> bool:
    """Linear of dimension m with every nonzero word of weight 2^(2m-2)."""
    if tor.is_linear != "yes" or tor.dimension != m:
        return False
    weights = tor.words.sum(axis=1)
    return bool(np.all(weights[weights > 0] == 1 << (2 * m - 2))) and int(
        np.count_nonzero(weights == 0)
    ) == 1
