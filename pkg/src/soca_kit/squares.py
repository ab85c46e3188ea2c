"""Cayley tables of no-boundary CA, Latin-property and orthogonality checks.

A rule of diameter d over GF(q) maps pairs of (d-1)-cell blocks to one block;
encoding blocks as the symbols 1..N with N = q^(d-1) turns that map into an
N-by-N grid.  For bipermutive rules the grid is a Latin square.

Blocks are encoded little-endian: the first cell is the least significant
radix-q digit, so phi(0,0) = 1, phi(1,0) = 2, phi(0,1) = 3 over GF(2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fields import Field
from .rules import LocalRule

MAX_GRID_CELLS = 1 << 26
_CHUNK_CELLS = 1 << 20


@dataclass(frozen=True)
class EncodingMap:
    """Bijection between GF(q)^m blocks and the symbols 1..q^m.

    ``reversed_digits`` flips the digit significance; the alternative map is
    only used to show that self-orthogonality does not depend on the choice.
    """

    field: Field
    m: int
    reversed_digits: bool = False

    @property
    def order(self) -> int:
        return self.field.q**self.m

    def _weights(self) -> tuple[int, ...]:
        w = tuple(self.field.q**i for i in range(self.m))
        return w[::-1] if self.reversed_digits else w

    def phi(self, block) -> int:
        """Symbol in 1..N for a block of m cells."""
        block = tuple(self.field.check(x) for x in block)
        if len(block) != self.m:
            raise ValueError(f"block must have {self.m} cells")
        return 1 + sum(x * w for x, w in zip(block, self._weights()))

    def psi(self, symbol: int) -> tuple[int, ...]:
        """Block of m cells for a symbol in 1..N."""
        if not 1 <= symbol <= self.order:
            raise ValueError(f"symbol {symbol} outside 1..{self.order}")
        n = symbol - 1
        digits = []
        for _ in range(self.m):
            n, r = divmod(n, self.field.q)
            digits.append(r)
        if self.reversed_digits:
            digits.reverse()
        return tuple(digits)

    def blocks(self) -> np.ndarray:
        """All blocks by symbol: row s-1 is psi(s)."""
        return _blocks_array(self.field, self.m, self.reversed_digits)


@lru_cache(maxsize=None)
def _blocks_array(field: Field, m: int, reversed_digits: bool) -> np.ndarray:
    q = field.q
    idx = np.arange(q**m, dtype=np.int64)
    cols = [(idx // q**i) % q for i in range(m)]
    if reversed_digits:
        cols.reverse()
    arr = np.stack(cols, axis=1)
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=32)
def _cayley_plan(field: Field, d: int, reversed_digits: bool):
    """Per-(field, d) evaluation plan: neighborhood indices of every cell.

    ``windows[c, t]`` is the lookup-table index of the t-th output cell when
    the CA input is the concatenated blocks of grid cell c (row-major).
    Cached only at small sizes; larger grids are built in chunks.
    """
    q, m = field.q, d - 1
    n_cells = q ** (2 * m)
    blocks = _blocks_array(field, m, reversed_digits)
    out_weights = np.array(EncodingMap(field, m, reversed_digits)._weights(), dtype=np.int64)
    windows = None
    if n_cells * m <= 1 << 22:
        left = np.repeat(blocks, blocks.shape[0], axis=0)
        right = np.tile(blocks, (blocks.shape[0], 1))
        windows = _window_indices(np.hstack([left, right]), q, d)
    return blocks, out_weights, windows


def _window_indices(inputs: np.ndarray, q: int, d: int) -> np.ndarray:
    """Radix-q neighborhood index per output cell, x_1 most significant."""
    m = inputs.shape[1] - d + 1
    msd = np.array([q ** (d - 1 - s) for s in range(d)], dtype=np.int64)
    cols = [inputs[:, t : t + d] @ msd for t in range(m)]
    return np.stack(cols, axis=1)


class LatinSquare:
    """An N-by-N grid of symbols 1..N; Latinness is checked, not enforced."""

    __slots__ = ("grid",)

    def __init__(self, grid):
        arr = np.array(grid, dtype=np.int32, order="C")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("grid must be square")
        n = arr.shape[0]
        if n == 0 or arr.min() < 1 or arr.max() > n:
            raise ValueError(f"entries must lie in 1..{n}")
        arr.flags.writeable = False
        self.grid = arr

    @property
    def order(self) -> int:
        return self.grid.shape[0]

    def transpose(self) -> "LatinSquare":
        return LatinSquare(self.grid.T)

    def __eq__(self, other):
        return isinstance(other, LatinSquare) and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash(self.grid.tobytes())

    def __repr__(self):
        return f"LatinSquare(order={self.order})"

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.grid.tolist()) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.grid.tolist())


def cayley_table(rule: LocalRule, encoding: EncodingMap | None = None) -> LatinSquare:
    """Grid of the rule's no-boundary map on split inputs.

    Entry (i, j) encodes the output block of the CA run on psi(i) || psi(j);
    input length 2(d-1), output length d-1.
    """
    d = rule.diameter
    if d < 2:
        raise ValueError("Cayley tables need diameter >= 2")
    field = rule.field
    if encoding is None:
        encoding = EncodingMap(field, d - 1)
    elif encoding.field != field or encoding.m != d - 1:
        raise ValueError("encoding does not match the rule")
    q, m = field.q, d - 1
    n = q**m
    if n * n > MAX_GRID_CELLS:
        raise ValueError(f"grid of {q}^{2 * m} cells exceeds the size cap")
    blocks, out_weights, windows = _cayley_plan(field, d, encoding.reversed_digits)
    table = rule.table.astype(np.int64, copy=False)
    if windows is not None:
        entries = 1 + table[windows] @ out_weights
        return LatinSquare(entries.reshape(n, n))
    grid = np.empty((n, n), dtype=np.int32)
    rows_per_chunk = max(_CHUNK_CELLS // n, 1)
    for lo in range(0, n, rows_per_chunk):
        hi = min(lo + rows_per_chunk, n)
        left = np.repeat(blocks[lo:hi], n, axis=0)
        right = np.tile(blocks, (hi - lo, 1))
        win = _window_indices(np.hstack([left, right]), q, d)
        grid[lo:hi] = (1 + table[win] @ out_weights).reshape(hi - lo, n)
    return LatinSquare(grid)


def is_latin(square: LatinSquare) -> bool:
    """True iff every row and every column is a permutation of 1..N."""
    g = square.grid
    n = g.shape[0]
    expected = np.arange(1, n + 1, dtype=g.dtype)
    return bool(
        np.all(np.sort(g, axis=1) == expected[None, :])
        and np.all(np.sort(g, axis=0) == expected[:, None])
    )


def check_orthogonal(a: LatinSquare, b: LatinSquare):
    """(True, None) if superposition hits every ordered pair exactly once,
    else (False, ((r, c), (r', c'))) naming two cells with the same pair."""
    if a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    codes = (a.grid.astype(np.int64) - 1) * n + (b.grid.astype(np.int64) - 1)
    counts = np.bincount(codes.ravel(), minlength=n * n)
    if counts.max() <= 1:
        return True, None
    dup = int(np.flatnonzero(counts > 1)[0])
    (r1, c1), (r2, c2) = np.argwhere(codes == dup)[:2]
    return False, ((int(r1) + 1, int(c1) + 1), (int(r2) + 1, int(c2) + 1))


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    return check_orthogonal(a, b)[0]


def is_self_orthogonal(square: LatinSquare) -> bool:
    """Orthogonal to its own transpose."""
    return are_orthogonal(square, square.transpose())


def superposition_text(a: LatinSquare, b: LatinSquare) -> str:
    """Grid of "x,y" cells showing the superposition of two squares."""
    if a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    rows = []
    for ra, rb in zip(a.grid.tolist(), b.grid.tolist()):
        rows.append(" ".join(f"{x},{y}" for x, y in zip(ra, rb)))
    return "\n".join(rows) + "\n"
