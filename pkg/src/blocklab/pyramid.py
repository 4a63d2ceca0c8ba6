"""Triangular 0/1 array attached to a p-core by its runner positions.

Entry (i, j), for 0 <= i <= j <= p-1, is 1 exactly when rho_j - rho_i < p
where rho are the sorted lowest-bead positions of the core's abacus.
Row k collects the entries with j - i = k; row 0 sits at the bottom of
drawings and the apex (0, p-1) on top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, check_odd_prime, is_p_core, is_self_conjugate
from . import abacus as ab


@dataclass(frozen=True)
class Pyramid:
    p: int
    core: Partition
    rows: tuple[tuple[int, ...], ...]  # rows[k][i] = entry (i, i+k)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i <= j <= self.p - 1):
            raise ValueError(f"entry ({i},{j}) out of range for p={self.p}")
        return self.rows[j - i][i]

    @property
    def apex(self) -> int:
        return self.rows[self.p - 1][0]


def build_pyramid(core: Partition, p: int) -> Pyramid:
    check_odd_prime(p)
    if not is_p_core(core, p):
        raise ValueError(f"{core} is not a {p}-core")
    rho = ab.runner_labels(ab.from_partition(core, p)).rho
    for i in range(p):
        for j in range(i + 1, p):
            # distinct runners of a core are incongruent mod p
            assert rho[j] - rho[i] != p, (core, p, i, j)
    rows = []
    for k in range(p):
        rows.append(tuple(1 if rho[i + k] - rho[i] < p else 0 for i in range(p - k)))
    return Pyramid(p, core, tuple(rows))


def entry_extended(py: Pyramid, i: int, j: int) -> int:
    """Pyramid entry with the outside convention: 1 below, 0 up-left/up-right."""
    if i > j:
        return 1
    if i < 0 or j >= py.p:
        return 0
    return py.entry(i, j)


def middle_column(py: Pyramid) -> tuple[int, ...]:
    """Entries g_1..g_{(p-1)/2} up the middle column, above row 0."""
    h = (py.p - 1) // 2
    return tuple(py.entry(h - k, h + k) for k in range(1, h + 1))


def delta(py: Pyramid) -> int:
    """Height of the last 1 up the middle column of a self-conjugate core.

    The middle-column sequence is 1...10...0; delta is the count of
    leading ones.
    """
    if not is_self_conjugate(py.core):
        raise ValueError("delta needs a self-conjugate core")
    g = middle_column(py)
    best = 0
    for k, bit in enumerate(g, start=1):
        if bit == 1:
            best = k
    return best


def render_pyramid(py: Pyramid) -> str:
    """Triangle with row 0 at the bottom, entries aligned in a diamond grid."""
    width = 2 * py.p - 1
    lines = []
    for k in range(py.p - 1, -1, -1):
        cells = [" "] * width
        for i in range(py.p - k):
            cells[2 * i + k] = str(py.rows[k][i])
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


def pyramid_json(py: Pyramid) -> dict:
    return {
        "p": py.p,
        "core": list(py.core),
        "rows": [list(row) for row in py.rows],
    }
