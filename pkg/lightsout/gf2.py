"""Dense linear algebra over GF(2) on word-packed rows.

Rows are stored as little-endian runs of 64-bit words: coordinate ``i``
lives in word ``i // 64`` at bit ``i % 64``. Padding bits past the logical
length are always zero, so equality, hashing and parity can work on whole
words.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ContractViolation, GraphFormatError
from .logging_config import get_logger

logger = get_logger("gf2")

WORD_BITS = 64

_ONE = np.uint64(1)
_EMPTY_WORDS = np.zeros(0, dtype=np.uint64)


def _word_count(width: int) -> int:
    return (width + WORD_BITS - 1) // WORD_BITS


def _mask(col: int) -> tuple[int, np.uint64]:
    word, bit = divmod(col, WORD_BITS)
    return word, _ONE << np.uint64(bit)


def _pack(dense: np.ndarray, width: int) -> np.ndarray:
    """Pack a (rows, width) 0/1 array into a (rows, words) uint64 array."""
    dense = np.asarray(dense, dtype=np.uint8) & 1
    rows = dense.shape[0]
    words = _word_count(width)
    if rows == 0 or words == 0:
        return np.zeros((rows, words), dtype=np.uint64)
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :width] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def _unpack(data: np.ndarray, width: int) -> np.ndarray:
    """Inverse of _pack: a (rows, words) uint64 array to (rows, width) uint8."""
    rows = data.shape[0]
    if rows == 0 or width == 0:
        return np.zeros((rows, width), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(data.astype("<u8")).view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :width]


def _parity(data: np.ndarray) -> np.ndarray:
    """Parity of the set bits along the last axis (one 0/1 value per row)."""
    if data.shape[-1] == 0:
        return np.zeros(data.shape[:-1], dtype=np.uint8)
    folded = np.bitwise_xor.reduce(data, axis=-1)
    for shift in (32, 16, 8, 4, 2, 1):
        folded = folded ^ (folded >> np.uint64(shift))
    return (folded & _ONE).astype(np.uint8)


def _frozen(words: np.ndarray) -> np.ndarray:
    words = np.array(words, dtype=np.uint64, order="C", copy=True)
    words.flags.writeable = False
    return words


class BitVec:
    """Immutable length-n vector over GF(2).

    Doubles as a configuration (which lights are on) and as a pattern
    (which vertices are pushed). Addition is XOR.
    """

    __slots__ = ("_n", "_words")

    def __init__(self, n: int, words: np.ndarray):
        if n < 0:
            raise ContractViolation(f"negative length {n}")
        words = np.asarray(words, dtype=np.uint64).reshape(-1)
        if words.size != _word_count(n):
            raise ContractViolation(
                f"length {n} needs {_word_count(n)} words, got {words.size}"
            )
        tail = n % WORD_BITS
        if tail and int(words[-1]) >> tail:
            raise ContractViolation("bits set beyond the vector length")
        self._n = n
        self._words = _frozen(words)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n, np.zeros(_word_count(n), dtype=np.uint64))

    @classmethod
    def ones(cls, n: int) -> "BitVec":
        return cls.from_array(np.ones(n, dtype=np.uint8))

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVec":
        """Characteristic vector of the single coordinate i."""
        return cls.zeros(n).with_bit(i, 1)

    @classmethod
    def from_array(cls, bits: np.ndarray) -> "BitVec":
        bits = np.asarray(bits, dtype=np.uint8).reshape(-1)
        n = bits.size
        if n == 0:
            return cls(0, _EMPTY_WORDS)
        return cls(n, _pack(bits.reshape(1, n), n)[0])

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        return cls.from_array(np.fromiter((int(b) & 1 for b in bits), dtype=np.uint8))

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        """Parse a bitstring whose first character is coordinate 0."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise GraphFormatError(f"not a bitstring: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVec":
        """Decode an integer whose least significant bit is coordinate 0."""
        if value < 0 or value >> n:
            raise ContractViolation(f"{value} does not fit in {n} bits")
        mask = (1 << WORD_BITS) - 1
        words = [(value >> (WORD_BITS * k)) & mask for k in range(_word_count(n))]
        return cls(n, np.array(words, dtype=np.uint64))

    # -- accessors ------------------------------------------------------

    @property
    def words(self) -> np.ndarray:
        return self._words

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(f"coordinate {i} out of range for length {self._n}")
        word, mask = _mask(i)
        return int(self._words[word] & mask != 0)

    def __iter__(self):
        return iter(int(b) for b in self.to_array())

    def to_array(self) -> np.ndarray:
        if self._n == 0:
            return np.zeros(0, dtype=np.uint8)
        return _unpack(self._words.reshape(1, -1), self._n)[0]

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_array())

    def to_int(self) -> int:
        return sum(int(w) << (WORD_BITS * k) for k, w in enumerate(self._words))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.to_array())]

    def weight(self) -> int:
        return int(self.to_array().sum())

    def any(self) -> bool:
        return bool(self._words.any())

    def with_bit(self, i: int, value: int) -> "BitVec":
        if not 0 <= i < self._n:
            raise ContractViolation(f"coordinate {i} out of range for length {self._n}")
        word, mask = _mask(i)
        words = self._words.copy()
        if value & 1:
            words[word] |= mask
        else:
            words[word] &= ~mask
        return BitVec(self._n, words)

    # -- arithmetic -----------------------------------------------------

    def _check_same_length(self, other: "BitVec") -> None:
        if not isinstance(other, BitVec):
            raise TypeError(f"expected BitVec, got {type(other).__name__}")
        if other._n != self._n:
            raise ContractViolation(f"length mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "BitVec") -> "BitVec":
        self._check_same_length(other)
        return BitVec(self._n, self._words ^ other._words)

    __xor__ = __add__

    def dot(self, other: "BitVec") -> int:
        """Parity of the coordinatewise AND."""
        self._check_same_length(other)
        return int(_parity((self._words & other._words).reshape(1, -1))[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self._n, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVec('{self.to_string()}')"


class BitMatrix:
    """Immutable rows x cols matrix over GF(2), one packed row per matrix row."""

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        data = np.asarray(data, dtype=np.uint64).reshape(rows, _word_count(cols))
        self._rows = rows
        self._cols = cols
        self._data = _frozen(data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, np.zeros((rows, _word_count(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        dense = np.asarray(dense)
        if dense.ndim != 2:
            raise ContractViolation(f"expected a 2-D array, got {dense.ndim}-D")
        rows, cols = dense.shape
        return cls(rows, cols, _pack(dense, cols))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVec], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not rows:
                raise ContractViolation("column count required for an empty row list")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ContractViolation(f"every row must have length {cols}")
        if not rows:
            return cls.zeros(0, cols)
        return cls(len(rows), cols, np.stack([r.words for r in rows]))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def data(self) -> np.ndarray:
        return self._data

    def row(self, i: int) -> BitVec:
        return BitVec(self._cols, self._data[i])

    def column(self, j: int) -> BitVec:
        if not 0 <= j < self._cols:
            raise ContractViolation(f"column {j} out of range")
        word, mask = _mask(j)
        return BitVec.from_array((self._data[:, word] & mask) != 0)

    def get(self, i: int, j: int) -> int:
        return self.row(i)[j]

    def to_dense(self) -> np.ndarray:
        return _unpack(self._data, self._cols)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def is_symmetric(self) -> bool:
        return self._rows == self._cols and self == self.transpose()

    def matvec(self, v: BitVec) -> BitVec:
        """Return M v."""
        if len(v) != self._cols:
            raise ContractViolation(
                f"vector length {len(v)} does not match {self._cols} columns"
            )
        if self._rows == 0:
            return BitVec.zeros(0)
        return BitVec.from_array(_parity(self._data & v.words[np.newaxis, :]))

    def append_column(self, v: BitVec) -> "BitMatrix":
        """Return the augmented matrix [M | v]."""
        if len(v) != self._rows:
            raise ContractViolation(
                f"column length {len(v)} does not match {self._rows} rows"
            )
        cols = self._cols + 1
        data = np.zeros((self._rows, _word_count(cols)), dtype=np.uint64)
        data[:, : self._data.shape[1]] = self._data
        word, mask = _mask(self._cols)
        data[v.to_array() != 0, word] |= mask
        return BitMatrix(self._rows, cols, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._data.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(self.row(i).to_string() for i in range(self._rows))
        return f"BitMatrix({self._rows}x{self._cols}: [{body}])"


class RowReduction(NamedTuple):
    """Reduced row echelon form with its pivot columns."""

    matrix: BitMatrix
    pivot_cols: tuple[int, ...]
    rank: int


def _eliminate(data: np.ndarray, limit: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on a copy of packed rows, pivoting on columns < limit."""
    data = np.array(data, dtype=np.uint64, copy=True)
    nrows = data.shape[0]
    pivots: list[int] = []
    row = 0
    for col in range(limit):
        if row == nrows:
            break
        word, mask = _mask(col)
        hits = (data[:, word] & mask) != 0
        candidates = np.flatnonzero(hits[row:])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            data[[row, pivot]] = data[[pivot, row]]
            hits[[row, pivot]] = hits[[pivot, row]]
        hits[row] = False
        data[hits] ^= data[row]
        pivots.append(col)
        row += 1
    return data, pivots


def rref(M: BitMatrix) -> RowReduction:
    """Reduced row echelon form of M over GF(2)."""
    data, pivots = _eliminate(M.data, M.cols)
    logger.debug("rref %dx%d: rank %d", M.rows, M.cols, len(pivots))
    return RowReduction(BitMatrix(M.rows, M.cols, data), tuple(pivots), len(pivots))


def rank(M: BitMatrix) -> int:
    return rref(M).rank


def _kernel_from_reduced(data: np.ndarray, pivots: Sequence[int], cols: int) -> list[BitVec]:
    """Canonical kernel basis read off reduced rows (one vector per free column)."""
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return []
    reduced = _unpack(data[: len(pivots)], cols)
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, list(pivots)] = reduced[:, free].T
    return [BitVec.from_array(v) for v in basis]


def nullspace_basis(M: BitMatrix) -> list[BitVec]:
    """Basis of Ker(M), one vector per free column in ascending order.

    The vector for free column f has f set, every other free variable clear,
    and pivot variables chosen so that M v = 0.
    """
    data, pivots = _eliminate(M.data, M.cols)
    return _kernel_from_reduced(data, pivots, M.cols)


def solve_with_kernel(M: BitMatrix, b: BitVec) -> tuple[BitVec | None, list[BitVec]]:
    """Solve M x = b and return the kernel basis from the same elimination.

    Returns:
        (x, basis) where x is the canonical particular solution (free
        variables set to 0) or None when b is not in the column space
    """
    if len(b) != M.rows:
        raise ContractViolation(f"right-hand side has length {len(b)}, expected {M.rows}")
    augmented = M.append_column(b)
    data, pivots = _eliminate(augmented.data, M.cols)
    basis = _kernel_from_reduced(data, pivots, M.cols)

    word, mask = _mask(M.cols)
    rhs = (data[:, word] & mask) != 0
    if rhs[len(pivots):].any():
        return None, basis

    x = np.zeros(M.cols, dtype=np.uint8)
    if pivots:
        x[list(pivots)] = rhs[: len(pivots)]
    return BitVec.from_array(x), basis


def solve(M: BitMatrix, b: BitVec) -> BitVec | None:
    """Canonical solution of M x = b, or None when the system is inconsistent."""
    return solve_with_kernel(M, b)[0]
