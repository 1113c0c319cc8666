"""Exact integer determinants and Bruhat-shaped complexes for them.

det_exact runs fraction-free elimination in arbitrary precision, so the
result is the exact signed determinant for any size; the permutation
expansion is kept as an independent slow route for cross-checking.

build_matrix_complex replaces each permutation by a tensor product of one
algebra factor per row, the factor for row i having dimension m[i][pi(i)].
A cover edge applies the identity on unchanged factors and the rank-one
map unit-after-counit on the two changed ones.  The unit/counit pair here
is normalized so that counit(unit(1)) = 1, which the squaring-to-zero of
the differential requires: the unit picks out the first basis vector and
the counit sends every basis vector to 1.  (The Frobenius-algebra counit
and unit from the tqft module pair to dim mod 2 instead, which breaks
commutativity of mixed-parity diamonds.)
"""

import json
from dataclasses import dataclass
from itertools import permutations
from math import prod
from time import perf_counter

from .bruhat import DEFAULT_N_CAP, Perm, build_bruhat, inversions
from .cochain import (
    DEFAULT_DIM_BUDGET,
    BlockLayout,
    CochainComplex,
    HomologyReport,
    _cover_pairs,
    _identity_options,
    build_levels,
    euler_characteristic,
    homology,
    make_layout,
)
from .errors import FormatError, PreconditionError, SizeError, ValidationError
from .gf2 import GF2Matrix


@dataclass(frozen=True)
class PosIntMatrix:
    """A square matrix with positive integer entries."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValidationError("matrix must be square and nonempty")
        if any(v < 1 for row in rows for v in row):
            raise ValidationError("matrix entries must be positive integers")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)


def _int_rows(m) -> list[list[int]]:
    """Accept a PosIntMatrix or any square grid of integers."""
    rows = m.entries if isinstance(m, PosIntMatrix) else m
    a = [[int(v) for v in row] for row in rows]
    if not a or any(len(row) != len(a) for row in a):
        raise ValidationError("determinant needs a nonempty square matrix")
    return a


def det_exact(m) -> int:
    """Signed determinant by Bareiss fraction-free elimination.

    Accepts a PosIntMatrix or raw integer rows; the positivity constraint
    only matters for complex building, not for the determinant itself.
    """
    a = _int_rows(m)
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_permutation_expansion(m, cap: int = 12) -> int:
    """Signed sum over all permutations; exponential, for cross-checks."""
    a = _int_rows(m)
    n = len(a)
    if n > cap:
        raise SizeError(f"permutation expansion over {n}! terms exceeds the cap {cap}")
    total = 0
    for p in permutations(range(n)):
        term = prod(a[i][p[i]] for i in range(n))
        total += term if inversions(tuple(v + 1 for v in p)) % 2 == 0 else -term
    return total


def vandermonde_matrix(x, s) -> PosIntMatrix:
    """The matrix with entry (i, j) equal to x_i to the power s_j."""
    xs = tuple(int(v) for v in x)
    ss = tuple(int(v) for v in s)
    if len(xs) != len(ss):
        raise PreconditionError("x and s must have the same length")
    return PosIntMatrix(tuple(tuple(xi**sj for sj in ss) for xi in xs))


def parse_matrix(text: str) -> PosIntMatrix:
    """Read the matrix file format: an object with a "matrix" row list."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"matrix file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "matrix" not in data:
        raise FormatError('matrix file must be an object with a "matrix" field')
    rows = data["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError('"matrix" must be a list of integer rows')
    return PosIntMatrix(tuple(tuple(rows_i) for rows_i in rows))


def _unit_counit_options(src: BlockLayout, tgt: BlockLayout, p: int):
    """Changed-factor contributions: any input digit, output digit 0."""
    radix = src.position_radix(p)
    wi = src.constant_weight(p)
    return [(a * wi, 0) for a in range(radix)]


def build_matrix_complex(
    m: PosIntMatrix,
    *,
    budget: int = DEFAULT_DIM_BUDGET,
    n_cap: int = DEFAULT_N_CAP,
) -> CochainComplex:
    """Bruhat-shaped complex whose Euler characteristic is det(m)."""
    n = m.n
    poset = build_bruhat(n, cap=n_cap)

    def layout_for(p: Perm) -> BlockLayout:
        radices = [m.entries[i][p[i] - 1] for i in range(n)]
        return make_layout(radices, [1] * n)

    layouts, offsets, dims = build_levels(poset, layout_for)
    total = sum(dims)
    if total > budget:
        raise SizeError(f"total dimension {total} exceeds the budget {budget}")

    differentials = []
    for k in range(poset.max_rank):
        coords = []
        for src, tgt in poset.edges_from_level(k):
            changed = {p for p in range(n) if src[p] != tgt[p]}
            options = [
                _unit_counit_options(layouts[src], layouts[tgt], p)
                if p in changed
                else _identity_options(layouts[src], layouts[tgt], p)
                for p in range(n)
            ]
            c0 = offsets[src]
            r0 = offsets[tgt]
            coords.extend((r0 + o, c0 + i) for i, o in _cover_pairs(n, options))
        differentials.append(GF2Matrix.from_triplets(dims[k + 1], dims[k], coords))

    return CochainComplex(
        n=n,
        level_perms=poset.levels,
        level_dims=dims,
        layouts=layouts,
        block_offsets=offsets,
        differentials=tuple(differentials),
    )


def matrix_dims(m: PosIntMatrix, *, n_cap: int = DEFAULT_N_CAP) -> list[int]:
    """Level dimensions of the matrix complex from the counting formula."""
    poset = build_bruhat(m.n, cap=n_cap)
    return [
        sum(prod(m.entries[i][p[i] - 1] for i in range(m.n)) for p in level)
        for level in poset.levels
    ]


def matrix_report(
    m: PosIntMatrix,
    *,
    skip_homology: bool = False,
    budget: int = DEFAULT_DIM_BUDGET,
    threads: int = 1,
    n_cap: int = DEFAULT_N_CAP,
) -> HomologyReport:
    """Build the matrix complex and compare its Euler characteristic to det."""
    t0 = perf_counter()
    if skip_homology:
        dims = matrix_dims(m, n_cap=n_cap)
        report = HomologyReport(
            n=m.n,
            x=None,
            s=None,
            cochain_dims=dims,
            homology_dims=None,
            euler_characteristic=euler_characteristic(dims),
        )
    else:
        report = homology(build_matrix_complex(m, budget=budget, n_cap=n_cap), threads=threads)
    report.determinant = det_exact(m)
    report.agree = report.euler_characteristic == report.determinant
    report.elapsed_ms = (perf_counter() - t0) * 1000.0
    return report


def random_matrix(n: int, max_entry: int, rng) -> PosIntMatrix:
    """Uniform random entries in 1..max_entry."""
    return PosIntMatrix(
        tuple(tuple(rng.randint(1, max_entry) for _ in range(n)) for _ in range(n))
    )
