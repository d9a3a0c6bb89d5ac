"""Bit-packed GF(2) matrices and column-subset combinatorics.

Rows are stored as Python ints with column j at bit j, so every row of a
matrix with up to 64 columns fits in one machine word.  All values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputDomainError, SpecParseError

MAX_COLS = 64
ENUM_MAX_K = 28  # codeword enumeration budget: 2**k words


@dataclass(frozen=True)
class Gf2Matrix:
    """A rows x cols binary matrix; data[i] holds row i, column j at bit j."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.cols <= MAX_COLS:
            raise InputDomainError(f"cols must be in [0, {MAX_COLS}], got {self.cols}")
        if self.rows != len(self.data):
            raise InputDomainError("row count does not match data length")
        mask = (1 << self.cols) - 1
        for i, w in enumerate(self.data):
            if w & ~mask:
                raise InputDomainError(f"row {i} has bits beyond column {self.cols - 1}")

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "Gf2Matrix":
        """Build from a list of 0/1 row lists."""
        rows = len(bits)
        cols = len(bits[0]) if rows else 0
        words = []
        for r in bits:
            if len(r) != cols:
                raise InputDomainError("ragged row lengths")
            w = 0
            for j, b in enumerate(r):
                if b not in (0, 1):
                    raise InputDomainError(f"matrix entries must be 0/1, got {b!r}")
                w |= b << j
            words.append(w)
        return cls(rows, cols, tuple(words))

    def to_bits(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.data]

    def column(self, j: int) -> int:
        """Column j as a bitmask over row indices (row i at bit i)."""
        if not 0 <= j < self.cols:
            raise InputDomainError(f"column {j} out of range")
        c = 0
        for i, w in enumerate(self.data):
            c |= ((w >> j) & 1) << i
        return c

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def row_strings(self) -> list[str]:
        return ["".join("1" if (w >> j) & 1 else "0" for j in range(self.cols)) for w in self.data]


@dataclass(frozen=True)
class ColumnSubset:
    """A subset of column indices of a width-`cols` matrix, stored as a bitmask."""

    mask: int
    cols: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.cols:
            raise InputDomainError("subset mask has bits outside [0, cols)")

    @classmethod
    def from_indices(cls, indices: Iterable[int], cols: int) -> "ColumnSubset":
        m = 0
        for j in indices:
            if not 0 <= j < cols:
                raise InputDomainError(f"column index {j} out of range [0, {cols})")
            m |= 1 << j
        return cls(m, cols)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.cols) if (self.mask >> j) & 1)

    def complement(self) -> "ColumnSubset":
        return ColumnSubset(~self.mask & ((1 << self.cols) - 1), self.cols)


def rank_words(words: Iterable[int]) -> int:
    """Rank of a list of bit-packed row words over GF(2)."""
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
    return len(basis)


def rank(m: Gf2Matrix) -> int:
    """Dimension of the row space of m."""
    return rank_words(m.data)


def select_columns(m: Gf2Matrix, s: ColumnSubset) -> Gf2Matrix:
    """Submatrix of the columns in s, kept in ascending column order."""
    if s.cols != m.cols:
        raise InputDomainError("subset universe does not match matrix width")
    idx = s.indices()
    out = []
    for w in m.data:
        v = 0
        for pos, j in enumerate(idx):
            v |= ((w >> j) & 1) << pos
        out.append(v)
    return Gf2Matrix(m.rows, len(idx), tuple(out))


def _as_word(c, cols: int) -> int:
    """Accept a codeword as an int bitmask or a 0/1 sequence of length cols."""
    if isinstance(c, int):
        if c < 0 or c >> cols:
            raise InputDomainError("codeword mask wider than the column universe")
        return c
    seq = list(c)
    if len(seq) != cols:
        raise InputDomainError(f"codeword length {len(seq)} != {cols} columns")
    w = 0
    for j, b in enumerate(seq):
        if b not in (0, 1):
            raise InputDomainError("codeword entries must be 0/1")
        w |= b << j
    return w


def covers(removed: ColumnSubset, c) -> bool:
    """True iff every '1' of the non-null codeword c lies inside `removed`.

    `removed` is the set of columns taken OUT of the matrix; a codeword is
    covered when none of its '1' positions survives among the kept columns.
    The all-zero word is never covered by convention.
    """
    w = _as_word(c, removed.cols)
    if w == 0:
        return False
    return w & ~removed.mask == 0


def is_independent_set(g: Gf2Matrix, cols: ColumnSubset) -> bool:
    """True iff removing `cols` from g lowers its rank."""
    kept = select_columns(g, cols.complement())
    return rank(kept) < rank(g)


def enumerate_codewords(g: Gf2Matrix) -> Iterator[tuple[int, int]]:
    """Yield all 2**k pairs (information word, codeword) exactly once.

    Gray-code order starting from the all-zero pair; each step XORs a single
    generator row into the running codeword.
    """
    k = g.rows
    if k > ENUM_MAX_K:
        raise CapacityError(f"codeword enumeration supports k <= {ENUM_MAX_K}, got k={k}")
    yield (0, 0)
    u = 0
    cw = 0
    for i in range(1, 1 << k):
        bit = (i & -i).bit_length() - 1
        u ^= 1 << bit
        cw ^= g.data[bit]
        yield (u, cw)


def null_space(g: Gf2Matrix) -> Gf2Matrix:
    """A basis of {x : g @ x^T = 0}, as an (n - rank) x n matrix.

    For a full-rank generator matrix this is a parity-check matrix, i.e. a
    generator of the dual code.
    """
    n = g.cols
    # Column-reduce: work on columns as bitmasks over rows.
    cols = g.columns()
    pivot_of_row: dict[int, int] = {}
    reduced = []
    combos = []  # combos[j]: which original columns were xored into column j
    for j in range(n):
        v = cols[j]
        comb = 1 << j
        while v:
            lead = v.bit_length() - 1
            if lead in pivot_of_row:
                pj = pivot_of_row[lead]
                v ^= reduced[pj]
                comb ^= combos[pj]
            else:
                pivot_of_row[lead] = j
                break
        reduced.append(v)
        combos.append(comb)
    out = [combos[j] for j in range(n) if reduced[j] == 0]
    return Gf2Matrix(len(out), n, tuple(out))


def parse_gmat(text: str) -> Gf2Matrix:
    """Parse the .gmat generator format: "n k" then k rows of n chars in {0,1}."""
    lines = text.splitlines()
    if not lines:
        raise SpecParseError("line 1: expected 'n k' header, found empty file")
    head = lines[0].split()
    if len(head) != 2:
        raise SpecParseError("line 1: expected two decimals 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise SpecParseError("line 1: expected two decimals 'n k'") from None
    if not (0 < n <= MAX_COLS and 0 < k <= n):
        raise SpecParseError(f"line 1: need 0 < k <= n <= {MAX_COLS}, got n={n} k={k}")
    if len(lines) < k + 1:
        raise SpecParseError(f"expected {k} rows after the header, found {len(lines) - 1}")
    words = []
    for i in range(k):
        row = lines[1 + i].rstrip()
        if len(row) != n:
            raise SpecParseError(f"line {i + 2}: expected {n} characters, found {len(row)}")
        w = 0
        for j, ch in enumerate(row):
            if ch == "1":
                w |= 1 << j
            elif ch != "0":
                raise SpecParseError(f"line {i + 2}: invalid character {ch!r}")
        words.append(w)
    for extra in range(k + 1, len(lines)):
        if lines[extra].strip():
            raise SpecParseError(f"line {extra + 1}: unexpected trailing content")
    return Gf2Matrix(k, n, tuple(words))


def load_gmat(path) -> Gf2Matrix:
    with open(path, "r", encoding="ascii") as fh:
        return parse_gmat(fh.read())
