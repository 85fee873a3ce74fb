"""Count tables of the four families filled by their coupled recurrences."""

import math

from .paths import FamilyTag

# Typing
Count = int
Entry = tuple[int, int, Count]


def _at(row, k: int) -> Count:
    """Row lookup that reads 0 outside the stored range."""
    return row[k] if 0 <= k < len(row) else 0


class CountTable:
    """
    Triangular table of exact counts ``entries[n][k]`` for ``0 <= k <= n <= n_max``.

    Heights never exceed lengths, so the triangle is exact; lookups outside
    it read 0.
    """

    def __init__(self, family: FamilyTag, n_max: int, rows):
        """
        Construct a count table.

        :param family: Counting family.
        :param n_max: Largest length.
        :param rows: ``rows[n]`` holds the counts for heights ``0..n``.
        """
        rows = tuple(tuple(row) for row in rows)
        assert len(rows) == n_max + 1
        assert all(len(row) == n + 1 for n, row in enumerate(rows))
        assert all(isinstance(c, int) and c >= 0 for row in rows for c in row)
        self.family = family
        self.n_max = n_max
        self.rows = rows

    def get(self, n: int, k: int) -> Count:
        """
        Count for length ``n`` and final height ``k``.

        :raise ValueError: If ``n`` is outside ``0..n_max``.
        """
        if not 0 <= n <= self.n_max:
            raise ValueError(f'Length {n} outside table 0..{self.n_max}')
        return _at(self.rows[n], k)

    __call__ = get

    def nonzero_entries(self) -> list[Entry]:
        """List of ``(n, k, count)`` with nonzero count, ordered by ``(n, k)``."""
        return [(n, k, c) for n, row in enumerate(self.rows) for k, c in enumerate(row) if c]

    def restrict(self, n_max: int) -> 'CountTable':
        """The table cut to lengths ``0..n_max``."""
        if n_max > self.n_max:
            raise ValueError(f'Cannot extend table {self.n_max} to {n_max}')
        return CountTable(self.family, n_max, self.rows[:n_max + 1])

    def with_entry(self, n: int, k: int, value: Count) -> 'CountTable':
        """Copy of the table with one entry replaced."""
        rows = [list(row) for row in self.rows]
        rows[n][k] = value
        return CountTable(self.family, self.n_max, rows)

    def first_mismatch(self, other: 'CountTable') -> tuple[int, int] | None:
        """
        Compare entry by entry.

        :param other: Table of the same size.
        :return: ``(n, k)`` of the first differing entry or None.
        """
        assert self.n_max == other.n_max
        for n, (row, other_row) in enumerate(zip(self.rows, other.rows)):
            for k, (c, d) in enumerate(zip(row, other_row)):
                if c != d:
                    return n, k
        return None

    def __eq__(self, other):
        """Compare by value."""
        if not isinstance(other, CountTable):
            return NotImplemented
        return (self.family, self.n_max, self.rows) == (other.family, other.n_max, other.rows)

    def __hash__(self):
        """Return hash consistent with equality."""
        return hash((self.family, self.n_max, self.rows))

    def __str__(self) -> str:
        """Return user-friendly string representation."""
        lines = [f'{self.family.value}_(n,k), n <= {self.n_max}']
        lines += [f'    {n:3d}: {" ".join(map(str, row))}' for n, row in enumerate(self.rows)]
        return '\n'.join(lines)

    def __repr__(self) -> str:
        """Return technical string representation."""
        return f'CountTable({self.family.name}, n_max={self.n_max})'


def ab_tables(n_max: int) -> tuple[CountTable, CountTable]:
    """
    Fill the forward families.

    a(n, k) = b(n-1, k-1) + a(n-1, k+1) and b(n, k) = a(n-1, k) + b(n-1, k+1),
    starting from a(0, 0) = 1, b(0, 0) = 0.

    :param n_max: Largest length.
    """
    if n_max < 0:
        raise ValueError(f'Negative length: {n_max}')
    a, b = [[1]], [[0]]
    for n in range(1, n_max + 1):
        pa, pb = a[-1], b[-1]
        a.append([_at(pb, k - 1) + _at(pa, k + 1) for k in range(n + 1)])
        b.append([_at(pa, k) + _at(pb, k + 1) for k in range(n + 1)])
    return CountTable(FamilyTag.A, n_max, a), CountTable(FamilyTag.B, n_max, b)


def cd_tables(n_max: int) -> tuple[CountTable, CountTable]:
    """
    Fill the reverse families.

    c(n, k) = c(n-1, k-1) + d(n-1, k) and d(n, k) = d(n-1, k-1) + c(n-1, k+1),
    starting from c(0, 0) = 1, d(0, 0) = 0.

    :param n_max: Largest length.
    """
    if n_max < 0:
        raise ValueError(f'Negative length: {n_max}')
    c, d = [[1]], [[0]]
    for n in range(1, n_max + 1):
        pc, pd = c[-1], d[-1]
        c.append([_at(pc, k - 1) + _at(pd, k) for k in range(n + 1)])
        d.append([_at(pd, k - 1) + _at(pc, k + 1) for k in range(n + 1)])
    return CountTable(FamilyTag.C, n_max, c), CountTable(FamilyTag.D, n_max, d)


def family_tables(n_max: int) -> dict[FamilyTag, CountTable]:
    """All four tables keyed by family."""
    a, b = ab_tables(n_max)
    c, d = cd_tables(n_max)
    return {FamilyTag.A: a, FamilyTag.B: b, FamilyTag.C: c, FamilyTag.D: d}


def smotzkin_count(m: int) -> Count:
    """
    Number of S-Motzkin paths of length ``3m``: C(3m, m) / (2m + 1).

    :param m: Number of up steps.
    """
    if m < 0:
        raise ValueError(f'Negative size: {m}')
    count, rem = divmod(math.comb(3 * m, m), 2 * m + 1)
    assert rem == 0
    return count


def residue_violations(table: CountTable) -> list[Entry]:
    """
    Nonzero entries outside the residue class of the family.

    A needs n = 2k, B needs n = 2k + 1, C needs n = k and D needs n = k - 1,
    all mod 3.
    """
    shift = {FamilyTag.A: lambda n, k: n - 2 * k,
             FamilyTag.B: lambda n, k: n - 2 * k - 1,
             FamilyTag.C: lambda n, k: n - k,
             FamilyTag.D: lambda n, k: n - k + 1}[table.family]
    return [(n, k, c) for n, k, c in table.nonzero_entries() if shift(n, k) % 3]
