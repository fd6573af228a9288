"""Triangular tables of Stirling numbers of the second kind and Eulerian numbers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "StirlingTable",
    "EulerianTable",
    "build_stirling",
    "build_eulerian",
    "stirling2",
    "eulerian",
    "stirling_table_for",
    "eulerian_table_for",
]


@dataclass(frozen=True)
class StirlingTable:
    """``rows[r - 1][k - 1] == S(r, k)`` for ``1 <= k <= r <= max_row``."""

    max_row: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, r: int) -> tuple[int, ...]:
        _check_row(r, self.max_row)
        return self.rows[r - 1]

    def __getitem__(self, rk: tuple[int, int]) -> int:
        return stirling2(self, *rk)


@dataclass(frozen=True)
class EulerianTable:
    """``rows[r - 1][j] == <r, j>`` (permutations of r with j descents), ``0 <= j <= r - 1``."""

    max_row: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, r: int) -> tuple[int, ...]:
        _check_row(r, self.max_row)
        return self.rows[r - 1]

    def __getitem__(self, rj: tuple[int, int]) -> int:
        return eulerian(self, *rj)


def _check_row(r: int, max_row: int) -> None:
    if not 1 <= r <= max_row:
        raise IndexError(f"row {r} outside built range 1..{max_row}")


def build_stirling(max_row: int) -> StirlingTable:
    """Build S(r, k) through ``max_row`` from S(r,k) = k S(r-1,k) + S(r-1,k-1)."""
    if max_row < 1:
        raise ValueError(f"max_row must be >= 1, got {max_row}")
    rows = [(1,)]
    for r in range(2, max_row + 1):
        prev = rows[-1]
        # prev has r-1 entries for k = 1..r-1
        row = [1]
        for k in range(2, r):
            row.append(k * prev[k - 1] + prev[k - 2])
        row.append(1)
        rows.append(tuple(row))
    return StirlingTable(max_row, tuple(rows))


def build_eulerian(max_row: int) -> EulerianTable:
    """Build <r, j> through ``max_row`` from <r,j> = (j+1)<r-1,j> + (r-j)<r-1,j-1>."""
    if max_row < 1:
        raise ValueError(f"max_row must be >= 1, got {max_row}")
    rows = [(1,)]
    for r in range(2, max_row + 1):
        prev = rows[-1]
        row = []
        for j in range(r):
            a = (j + 1) * prev[j] if j < r - 1 else 0
            b = (r - j) * prev[j - 1] if j >= 1 else 0
            row.append(a + b)
        rows.append(tuple(row))
    return EulerianTable(max_row, tuple(rows))


def stirling2(table: StirlingTable, r: int, k: int) -> int:
    row = table.row(r)
    if k < 1 or k > r:
        return 0
    return row[k - 1]


def eulerian(table: EulerianTable, r: int, j: int) -> int:
    row = table.row(r)
    if j < 0 or j > r - 1:
        return 0
    return row[j]


@lru_cache(maxsize=None)
def _stirling_cached(size: int) -> StirlingTable:
    return build_stirling(size)


@lru_cache(maxsize=None)
def _eulerian_cached(size: int) -> EulerianTable:
    return build_eulerian(size)


def _bucket(r: int) -> int:
    return max(8, 1 << (r - 1).bit_length())


def stirling_table_for(r: int, table: StirlingTable | None = None) -> StirlingTable:
    """Return ``table`` if it reaches row ``r``, or a shared cached table when ``table`` is None."""
    if table is None:
        return _stirling_cached(_bucket(r))
    if table.max_row < r:
        raise ValueError(f"Stirling table built to row {table.max_row}, need {r}")
    return table


def eulerian_table_for(r: int, table: EulerianTable | None = None) -> EulerianTable:
    if table is None:
        return _eulerian_cached(_bucket(r))
    if table.max_row < r:
        raise ValueError(f"Eulerian table built to row {table.max_row}, need {r}")
    return table
