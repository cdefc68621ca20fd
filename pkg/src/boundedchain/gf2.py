"""Exact GF(2) linear algebra on integer-bitmask columns."""

from __future__ import annotations

from typing import Iterable, Sequence


def mask_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Gf2System:
    """Column-space elimination of a GF(2) matrix given as column bitmasks.

    Columns are processed in index order and each pivot takes the lowest
    available row, so results are deterministic. Dependent columns yield
    kernel vectors, expressed as masks over the original column indices;
    each kernel vector's highest set column is unique to it (reduced form).
    """

    def __init__(self, columns: Sequence[int]):
        self.n = len(columns)
        pivot_rows: list[int] = []
        reduced: list[int] = []
        combos: list[int] = []
        kernel: list[int] = []
        for j, col in enumerate(columns):
            cur = col
            combo = 1 << j
            for r, pc, pcb in zip(pivot_rows, reduced, combos):
                if (cur >> r) & 1:
                    cur ^= pc
                    combo ^= pcb
            if cur == 0:
                kernel.append(combo)
            else:
                low = cur & -cur
                pivot_rows.append(low.bit_length() - 1)
                reduced.append(cur)
                combos.append(combo)
        self._pivot_rows = pivot_rows
        self._reduced = reduced
        self._combos = combos
        self.kernel = tuple(kernel)
        self.rank = len(pivot_rows)

    def solve(self, target: int) -> int | None:
        """One solution x (as a column mask) of A x = target, or None.

        Any other solution differs from the returned one by a sum of
        kernel vectors.
        """
        cur = target
        combo = 0
        for r, pc, pcb in zip(self._pivot_rows, self._reduced, self._combos):
            if (cur >> r) & 1:
                cur ^= pc
                combo ^= pcb
        return combo if cur == 0 else None
