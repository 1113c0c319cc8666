"""Exact linear algebra over the two-element field.

Matrices are dense bit matrices packed row-major into 64-bit words, so a
row operation is a handful of word XORs and elimination runs at memory
speed through numpy.  Everything here is deterministic: pivots are chosen
as the first nonzero row at the lowest row index, and quotient coordinates
always reduce against the lowest set bit first, so identical inputs give
identical output bits on every run.

Vectors carry their own packed words.  Matrix values are treated as
immutable by the rest of the package; rank and reduction work on private
copies.
"""

import numpy as np

from .errors import MembershipError, SizeError, ValidationError

if not np.little_endian:  # pragma: no cover
    raise ImportError("bit packing relies on little-endian word layout")

_U64_1 = np.uint64(1)

# Hard ceiling on a single allocation (bytes of packed words).  Protects
# against accidentally materializing matrices for oversized complexes.
MAX_MATRIX_BYTES = 2 << 30


def _nwords(cols: int) -> int:
    return (cols + 63) >> 6


class GF2Vector:
    """A length-n bit vector packed into 64-bit words."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: np.ndarray):
        self.n = n
        self.words = words

    @classmethod
    def zeros(cls, n: int) -> "GF2Vector":
        return cls(n, np.zeros(_nwords(n), dtype=np.uint64))

    @classmethod
    def from_bits(cls, bits) -> "GF2Vector":
        bits = list(bits)
        v = cls.zeros(len(bits))
        for i, b in enumerate(bits):
            if b & 1:
                v.set(i, 1)
        return v

    def copy(self) -> "GF2Vector":
        return GF2Vector(self.n, self.words.copy())

    def get(self, i: int) -> int:
        w, b = divmod(i, 64)
        return int(self.words[w] >> np.uint64(b)) & 1

    def set(self, i: int, value: int) -> None:
        w, b = divmod(i, 64)
        bit = _U64_1 << np.uint64(b)
        if value & 1:
            self.words[w] |= bit
        else:
            self.words[w] &= ~bit

    def ixor(self, other: "GF2Vector") -> None:
        self.words ^= other.words

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        return GF2Vector(self.n, self.words ^ other.words)

    def is_zero(self) -> bool:
        return not self.words.any()

    def lowest_set_bit(self) -> int | None:
        for w, word in enumerate(self.words):
            word = int(word)
            if word:
                return (w << 6) + ((word & -word).bit_length() - 1)
        return None

    def support(self) -> list[int]:
        """Indices of the set bits, ascending."""
        out = []
        for w, word in enumerate(self.words):
            word = int(word)
            base = w << 6
            while word:
                low = word & -word
                out.append(base + low.bit_length() - 1)
                word ^= low
        return out

    def to_bits(self) -> list[int]:
        return [self.get(i) for i in range(self.n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Vector):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.words, other.words))

    def __repr__(self) -> str:
        return f"GF2Vector({''.join(map(str, self.to_bits()))})"


class GF2Matrix:
    """A rows-by-cols bit matrix over GF(2), word-packed per row.

    Bits past `cols` in the last word of each row are kept zero so whole
    rows can be combined with word operations.
    """

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValidationError("matrix dimensions must be nonnegative")
        nw = _nwords(cols)
        if words is None:
            if rows * nw * 8 > MAX_MATRIX_BYTES:
                raise SizeError(
                    f"{rows}x{cols} matrix needs {rows * nw * 8} packed bytes, "
                    f"over the {MAX_MATRIX_BYTES} byte ceiling"
                )
            words = np.zeros((rows, nw), dtype=np.uint64)
        self.rows = rows
        self.cols = cols
        self.words = words

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        m = cls(n, n)
        for i in range(n):
            m._set(i, i)
        return m

    @classmethod
    def from_rows(cls, rows) -> "GF2Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValidationError("rows have differing lengths")
        m = cls(len(rows), ncols)
        for i, r in enumerate(rows):
            for j, bit in enumerate(r):
                if bit & 1:
                    m._set(i, j)
        return m

    @classmethod
    def from_triplets(cls, rows: int, cols: int, coords) -> "GF2Matrix":
        """Build from (row, col) positions; repeated positions cancel mod 2."""
        m = cls(rows, cols)
        arr = np.asarray(list(coords) if not isinstance(coords, np.ndarray) else coords, dtype=np.int64)
        if arr.size == 0:
            return m
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValidationError("coords must be pairs (row, col)")
        r = arr[:, 0]
        c = arr[:, 1]
        if r.min() < 0 or r.max() >= rows or c.min() < 0 or c.max() >= cols:
            raise ValidationError("triplet coordinate out of range")
        np.bitwise_xor.at(
            m.words,
            (r, c >> 6),
            _U64_1 << (c & 63).astype(np.uint64),
        )
        return m

    # -- element access ------------------------------------------------

    def _set(self, i: int, j: int) -> None:
        w, b = divmod(j, 64)
        self.words[i, w] |= _U64_1 << np.uint64(b)

    def get(self, i: int, j: int) -> int:
        w, b = divmod(j, 64)
        return int(self.words[i, w] >> np.uint64(b)) & 1

    def copy(self) -> "GF2Matrix":
        return GF2Matrix(self.rows, self.cols, self.words.copy())

    def row(self, i: int) -> GF2Vector:
        return GF2Vector(self.cols, self.words[i].copy())

    def column(self, j: int) -> GF2Vector:
        w, b = divmod(j, 64)
        bits = (self.words[:, w] >> np.uint64(b)) & _U64_1
        v = GF2Vector.zeros(self.rows)
        idx = np.nonzero(bits)[0]
        for i in idx:
            v.set(int(i), 1)
        return v

    def columns(self) -> list[GF2Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not self.words.any()

    def to_rows(self) -> list[list[int]]:
        return [self.row(i).to_bits() for i in range(self.rows)]

    def to_bool_array(self) -> np.ndarray:
        """Unpacked bits; meant for small matrices (tests, tensor assembly)."""
        if self.rows * self.cols > (1 << 28):
            raise SizeError(f"refusing to unpack a {self.rows}x{self.cols} matrix")
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=bool)
        bits = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.cols].astype(bool)

    @classmethod
    def from_bool_array(cls, arr: np.ndarray) -> "GF2Matrix":
        arr = np.asarray(arr, dtype=bool)
        rows, cols = arr.shape
        m = cls(rows, cols)
        if rows and cols:
            packed = np.packbits(arr, axis=1, bitorder="little")
            m.words.view(np.uint8)[:, : packed.shape[1]] = packed
        return m

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "GF2Matrix":
        """Copy of the half-open row and column range."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise ValidationError("submatrix range out of bounds")
        if (r1 - r0) * self.cols > (1 << 28):
            raise SizeError(f"refusing to unpack {r1 - r0} rows of {self.cols} columns")
        if r1 == r0 or c1 == c0:
            return GF2Matrix(r1 - r0, c1 - c0)
        bits = np.unpackbits(self.words[r0:r1].view(np.uint8), axis=1, bitorder="little")
        return GF2Matrix.from_bool_array(bits[:, c0:c1].astype(bool))

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix.from_bool_array(self.to_bool_array().T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __repr__(self) -> str:
        return f"GF2Matrix({self.rows}x{self.cols})"

    # -- arithmetic ----------------------------------------------------

    def _row_support(self, i: int) -> np.ndarray:
        row = self.words[i]
        if not row.any():
            return np.empty(0, dtype=np.int64)
        bits = np.unpackbits(row.view(np.uint8), bitorder="little")[: self.cols]
        return np.nonzero(bits)[0]

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise ValidationError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = GF2Matrix(self.rows, other.cols)
        for i in range(self.rows):
            idx = self._row_support(i)
            if idx.size:
                out.words[i] = np.bitwise_xor.reduce(other.words[idx], axis=0)
        return out

    def compose_is_zero(self, other: "GF2Matrix") -> bool:
        """True iff self @ other is the zero matrix, without storing it."""
        if self.cols != other.rows:
            raise ValidationError("shape mismatch in composition")
        for i in range(self.rows):
            idx = self._row_support(i)
            if idx.size and np.bitwise_xor.reduce(other.words[idx], axis=0).any():
                return False
        return True

    def mul_vector(self, v: GF2Vector) -> GF2Vector:
        if v.n != self.cols:
            raise ValidationError("vector length does not match matrix columns")
        if self.rows == 0:
            return GF2Vector.zeros(0)
        if self.cols == 0:
            return GF2Vector.zeros(self.rows)
        parities = np.bitwise_count(self.words & v.words).sum(axis=1) & 1
        out = GF2Vector.zeros(self.rows)
        for i in np.nonzero(parities)[0]:
            out.set(int(i), 1)
        return out

    # -- elimination ----------------------------------------------------

    def rank(self) -> int:
        work = self.words.copy()
        return len(_eliminate(work, self.rows, self.cols, full=False))

    def rref(self) -> tuple["GF2Matrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        work = self.words.copy()
        pivots = _eliminate(work, self.rows, self.cols, full=True)
        return GF2Matrix(self.rows, self.cols, work), pivots

    def nullspace_basis(self) -> list[GF2Vector]:
        """Basis of the right kernel, one vector per free column, ascending."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = GF2Vector.zeros(self.cols)
            v.set(f, 1)
            for r, pc in enumerate(pivots):
                if reduced.get(r, f):
                    v.set(pc, 1)
            basis.append(v)
        return basis


def _eliminate(words: np.ndarray, nrows: int, cols: int, full: bool) -> list[int]:
    """In-place Gaussian elimination; returns the pivot columns.

    full=False leaves row echelon form (enough for rank), full=True clears
    above the pivots too.  Pivot rows are chosen as the first nonzero row
    from the top, which fixes the output bit for bit.
    """
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= nrows:
            break
        w, b = divmod(c, 64)
        bit = _U64_1 << np.uint64(b)
        candidates = np.nonzero(words[r:, w] & bit)[0]
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        if full:
            hits = np.nonzero(words[:, w] & bit)[0]
            hits = hits[hits != r]
        else:
            hits = np.nonzero(words[r + 1 :, w] & bit)[0] + (r + 1)
        if hits.size:
            words[hits] ^= words[r]
        pivots.append(c)
        r += 1
    return pivots


class QuotientSpace:
    """Coordinates on span(cycles) / span(boundaries), pivot-based.

    Boundaries are inserted first, then the cycles in their given order;
    each cycle that contributes a new pivot becomes a quotient basis
    vector.  Reduction always targets the lowest set bit, so coordinates
    are deterministic given the input order.
    """

    def __init__(self, cycles, boundaries):
        cycles = list(cycles)
        boundaries = list(boundaries)
        self.n = cycles[0].n if cycles else (boundaries[0].n if boundaries else 0)

        # The boundaries must lie inside the cycle space: reduce each one
        # against an echelon table built from the cycles alone.
        cycle_table: dict[int, GF2Vector] = {}
        for v in cycles:
            _insert(cycle_table, v.copy())
        for i, v in enumerate(boundaries):
            if not _reduces_to_zero(cycle_table, v):
                raise MembershipError(f"boundary {i} is not in the span of the cycles")

        self._table: dict[int, tuple[GF2Vector, int | None]] = {}
        self._reps: list[GF2Vector] = []
        for v in boundaries:
            red = self._reduce(v.copy())
            if red is not None:
                self._table[red.lowest_set_bit()] = (red, None)
        for v in cycles:
            red = self._reduce(v.copy())
            if red is not None:
                q = len(self._reps)
                self._reps.append(red.copy())
                self._table[red.lowest_set_bit()] = (red, q)

    def _reduce(self, v: GF2Vector) -> GF2Vector | None:
        while True:
            p = v.lowest_set_bit()
            if p is None:
                return None
            hit = self._table.get(p)
            if hit is None:
                return v
            v.ixor(hit[0])

    @property
    def dim(self) -> int:
        return len(self._reps)

    def representative(self, q: int) -> GF2Vector:
        """A cycle representative of the q-th quotient basis class."""
        return self._reps[q].copy()

    def coordinates(self, v: GF2Vector) -> GF2Vector:
        """Quotient coordinates of the class of v.

        Raises MembershipError when v is not in the cycle span, which
        upstream means a broken chain map.
        """
        v = v.copy()
        coeffs = GF2Vector.zeros(self.dim)
        while True:
            p = v.lowest_set_bit()
            if p is None:
                return coeffs
            hit = self._table.get(p)
            if hit is None:
                raise MembershipError(f"vector has unreducible bit {p}; not in the cycle span")
            v.ixor(hit[0])
            if hit[1] is not None:
                coeffs.set(hit[1], coeffs.get(hit[1]) ^ 1)


def _insert(table: dict[int, GF2Vector], v: GF2Vector) -> None:
    while True:
        p = v.lowest_set_bit()
        if p is None:
            return
        if p not in table:
            table[p] = v
            return
        v.ixor(table[p])


def _reduces_to_zero(table: dict[int, GF2Vector], v: GF2Vector) -> bool:
    v = v.copy()
    while True:
        p = v.lowest_set_bit()
        if p is None:
            return True
        if p not in table:
            return False
        v.ixor(table[p])


def coset_coordinates(cycles, boundaries, v: GF2Vector) -> GF2Vector:
    """Coordinates of v's class in span(cycles)/span(boundaries)."""
    return QuotientSpace(cycles, boundaries).coordinates(v)
