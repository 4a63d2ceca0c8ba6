"""The p-runner abacus: beta-numbers, runner labelling, bead moves, quotients.

An abacus is stored as the prime p plus the represented partition; the
conceptual bead set is the full beta-number set {lam_i - i : i >= 1},
which is cofinite downwards.  Positions sit on runner ``pos % p`` and in
row ``pos // p``; positions grow downwards in drawings.  This zero-shift
representation is automatically normalized: counting beads from any full
row downwards always gives a multiple of p.

Runner labels follow the fewer-beads-first order, ties broken left to
right, which for a core is the same as sorting the lowest-bead positions
increasingly.  Quotient components are listed in label order; that is
the convention under which a self-conjugate partition of even weight in
a block with empty middle component is exactly a BG-partition, and the
test suite pins it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .partitions import (
    Partition,
    check_odd_prime,
    conjugate,
    partition,
)


@dataclass(frozen=True)
class Abacus:
    p: int
    parts: Partition

    def __post_init__(self):
        check_odd_prime(self.p)

    @cached_property
    def part_betas(self) -> frozenset[int]:
        return frozenset(self.parts[i] - (i + 1) for i in range(len(self.parts)))

    @property
    def tail_top(self) -> int:
        """Largest position of the full tail: every position <= this is a bead."""
        return -(len(self.parts) + 1)

    def is_bead(self, pos: int) -> bool:
        return pos <= self.tail_top or pos in self.part_betas

    def beads_from(self, floor: int) -> list[int]:
        """All bead positions >= floor, descending."""
        out = [b for b in self.part_betas if b >= floor]
        if floor <= self.tail_top:
            out.extend(range(self.tail_top, floor - 1, -1))
        return sorted(out, reverse=True)

    def beads_between(self, lo: int, hi: int) -> int:
        """Number of beads strictly between positions lo and hi."""
        if lo > hi:
            lo, hi = hi, lo
        count = 0
        for pos in range(lo + 1, hi):
            if self.is_bead(pos):
                count += 1
        return count

    @cached_property
    def lowest_bead_per_column(self) -> tuple[int, ...]:
        """For each physical column c, the largest bead position on runner c."""
        out = []
        for c in range(self.p):
            best = self.tail_top - ((self.tail_top - c) % self.p)
            for b in self.part_betas:
                if b % self.p == c and b > best:
                    best = b
            out.append(best)
        return tuple(out)

    @property
    def display_shift(self) -> int:
        """Shift putting the action at non-negative positions under a full row 0."""
        l = len(self.parts)
        return self.p * ((l + self.p + self.p - 1) // self.p)


def from_partition(lam: Partition, p: int) -> Abacus:
    return Abacus(p, partition(lam))


def to_partition(a: Abacus) -> Partition:
    return a.parts


def _partition_from_betas(p: int, betas: set[int], floor: int) -> Abacus:
    """Rebuild an abacus from an explicit bead set over a cofinite tail.

    betas holds every bead >= floor; every position < floor is a bead.
    """
    desc = sorted(betas, reverse=True)
    parts = []
    for idx, b in enumerate(desc, start=1):
        part = b + idx
        if part < 0:
            raise ValueError("invalid bead set: negative part")
        parts.append(part)
    # beads below the floor contribute parts floor-1+len+1... which must be 0
    tail_first = floor - 1 + len(desc) + 1
    if tail_first != 0:
        raise ValueError("invalid bead set: tail misaligned")
    return Abacus(p, partition(parts))


def _mutate_beads(a: Abacus, remove: list[int], add: list[int]) -> Abacus:
    floor = min([a.tail_top] + remove + add) - 1
    betas = set(a.beads_from(floor))
    for pos in remove:
        if pos not in betas:
            raise ValueError(f"no bead at position {pos}")
        betas.remove(pos)
    for pos in add:
        if pos in betas:
            raise ValueError(f"position {pos} already occupied")
        betas.add(pos)
    return _partition_from_betas(a.p, betas, floor)


def slide_bead(a: Abacus, position: int, direction: str) -> Abacus:
    """Slide one bead a single space down or up (add/remove a p-rim-hook)."""
    if direction == "down":
        return _mutate_beads(a, [position], [position + a.p])
    if direction == "up":
        return _mutate_beads(a, [position], [position - a.p])
    raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")


def slide_leg_length(a: Abacus, position: int, direction: str) -> int:
    """Leg length of the rim hook added/removed by slide_bead.

    Equals the number of beads strictly between the old and new
    positions of the moved bead.
    """
    if direction == "down":
        return a.beads_between(position, position + a.p)
    if direction == "up":
        return a.beads_between(position - a.p, position)
    raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")


def conjugate_abacus(a: Abacus) -> Abacus:
    """Abacus of the conjugate partition.

    Swapping opposite runners and reversing them all amounts to taking
    positions -1-x over the complement of the bead set.
    """
    return Abacus(a.p, conjugate(a.parts))


def p_core_abacus(a: Abacus) -> tuple[Abacus, int]:
    """Raise every bead fully; returns (core abacus, number of down-moves undone)."""
    moves = 0
    cur = a
    while True:
        movable = [b for b in sorted(cur.part_betas, reverse=True)
                   if not cur.is_bead(b - cur.p)]
        if not movable:
            return cur, moves
        cur = slide_bead(cur, movable[0], "up")
        moves += 1


@dataclass(frozen=True)
class RunnerLabels:
    """Lowest-bead positions sorted increasingly, plus the label of each column."""

    rho: tuple[int, ...]
    label_of_column: tuple[int, ...]

    def column_of_label(self, label: int) -> int:
        return self.label_of_column.index(label)


def runner_labels(a: Abacus, shifted: bool = True) -> RunnerLabels:
    """Label runners by the fewer-beads order; computed on the core's abacus.

    With shifted=True the rho values are reported in the display window
    (non-negative, row 0 full), matching the drawings.
    """
    core, _ = p_core_abacus(a)
    shift = core.display_shift if shifted else 0
    lowest = core.lowest_bead_per_column
    shifted_lowest = [(pos + shift) for pos in lowest]
    order = sorted(range(a.p), key=lambda c: shifted_lowest[c])
    label_of_column = [0] * a.p
    for lab, c in enumerate(order):
        label_of_column[c] = lab
    rho = tuple(sorted(shifted_lowest))
    return RunnerLabels(rho, tuple(label_of_column))


def p_quotient(a: Abacus) -> tuple[Partition, ...]:
    """Runner-wise partitions, components listed in runner-label order."""
    labels = runner_labels(a)
    out: list[Partition] = [()] * a.p
    for c in range(a.p):
        rows_desc = []
        floor_row = (a.tail_top - c) // a.p  # rows <= this are beads on every runner
        hi_row = (max(a.part_betas, default=0) - c) // a.p + 1
        for r in range(hi_row, floor_row, -1):
            if a.is_bead(r * a.p + c):
                rows_desc.append(r)
        m = len(rows_desc)
        parts = []
        for idx, r in enumerate(rows_desc, start=1):
            # empty rows above this bead, within (floor_row, r)
            parts.append((r - floor_row - 1) - (m - idx))
        out[labels.label_of_column[c]] = partition(parts)
    return tuple(out)


def render_abacus(a: Abacus) -> str:
    """ASCII drawing: header of runner labels, 'o' beads, '.' gaps."""
    labels = runner_labels(a)
    shift = p_core_abacus(a)[0].display_shift
    top = 0
    bottom = max((b + shift for b in a.part_betas), default=shift - 1) // a.p + 1
    lines = [" ".join(str(lab) for lab in labels.label_of_column)]
    for row in range(top, bottom + 1):
        cells = []
        for c in range(a.p):
            pos = row * a.p + c - shift
            cells.append("o" if a.is_bead(pos) else ".")
        lines.append(" ".join(cells))
    return "\n".join(lines)


def _charges_rank(p: int, charges: tuple[int, ...]) -> int:
    return sum(i * c + p * c * (c - 1) // 2 for i, c in enumerate(charges))


def charges_to_core(p: int, charges: tuple[int, ...]) -> Partition:
    """Core whose runner i holds beads down to row charges[i]-1 (baseline 0)."""
    if sum(charges) != 0:
        raise ValueError("charges must sum to zero")
    floor_row = min(min(charges) - 1, -1)
    floor = p * floor_row
    betas = {
        i + p * r
        for i in range(p)
        for r in range(floor_row, charges[i])
    }
    return _partition_from_betas(p, betas, floor).parts


def p_cores_up_to(p: int, max_rank: int) -> list[Partition]:
    """All p-cores of rank <= max_rank, enumerated through runner charges."""
    check_odd_prime(p)
    out = []
    for charges in _charge_vectors(p, max_rank):
        out.append(charges_to_core(p, charges))
    out.sort(key=lambda lam: (sum(lam), lam))
    return out


def _charge_vectors(p: int, max_rank: int):
    # c_i in a window wide enough that p*c*(c-1)/2 alone stays feasible
    lo = -1
    while p * lo * (lo - 1) // 2 + (p - 1) * lo <= max_rank:
        lo -= 1
    hi = 1
    while p * hi * (hi - 1) // 2 <= max_rank:
        hi += 1

    def rec(i: int, acc: list[int], total: int, rank: int):
        if i == p - 1:
            c = -total
            if lo < c < hi:
                r = rank + i * c + p * c * (c - 1) // 2
                if r <= max_rank:
                    yield tuple(acc + [c])
            return
        # every coordinate contributes a non-negative amount, so a partial
        # rank above the target can be cut immediately
        for c in range(lo + 1, hi):
            r = rank + i * c + p * c * (c - 1) // 2
            if r <= max_rank:
                yield from rec(i + 1, acc + [c], total + c, r)

    yield from rec(0, [], 0, 0)


def self_conjugate_p_cores_up_to(p: int, max_rank: int) -> list[Partition]:
    """Self-conjugate p-cores of rank <= max_rank, by symmetric charges."""
    check_odd_prime(p)
    h = (p - 1) // 2
    bound = 1
    while p * bound * bound - (p - 1) * bound <= max_rank:
        bound += 1
    out = []

    def rec(i: int, acc: list[int], rank: int):
        if i == h:
            charges = tuple(acc + [0] + [-c for c in reversed(acc)])
            out.append(charges_to_core(p, charges))
            return
        for c in range(-bound, bound + 1):
            r = rank + (2 * i - p + 1) * c + p * c * c
            if r <= max_rank:
                rec(i + 1, acc + [c], r)

    rec(0, [], 0)
    kept = [lam for lam in out if sum(lam) <= max_rank]
    kept.sort(key=lambda lam: (sum(lam), lam))
    return kept


def abacus_json(a: Abacus) -> dict:
    shift = p_core_abacus(a)[0].display_shift
    beads = sorted(b + shift for b in a.beads_from(-shift))
    return {
        "p": a.p,
        "beads": beads,
        "labels": list(runner_labels(a).label_of_column),
    }
