"""Closed-form decomposition numbers for blocks of weight at most 2.

At weight 2 the number d(lam, mu) is 1 exactly when lam equals mu, or
lam equals the conjugate Mullineux image of mu, or lam lies in the
dominance window between the two and its leg-difference value differs
from mu's by one; every other entry is 0.  Weight-1 blocks are chains
with the two-entry column pattern, and weight-0 blocks are 1x1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .block import BlockCatalog, BlockError, enumerate_block
from .partitions import (
    Partition,
    check_odd_prime,
    dominates_or_equal,
    enumerate_partitions,
    format_partition,
    is_p_regular,
    p_core_weight,
    partition,
)


@dataclass(frozen=True)
class DecompMatrix:
    row_labels: tuple[Partition, ...]
    col_labels: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, lam: Partition, mu: Partition) -> int:
        return self.entries[self.row_labels.index(lam)][self.col_labels.index(mu)]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.entries[self.row_labels.index(lam)]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)


def decomp_number(cat: BlockCatalog, lam: Partition, mu: Partition) -> int:
    """Entry of the weight-2 block matrix at (lam, mu)."""
    rec_mu = cat.record(mu)
    cat.record(lam)
    if not rec_mu.regular:
        raise BlockError(f"column label {mu} is {cat.p}-singular")
    if lam == mu:
        return 1
    mconj = cat.mullineux_conjugate(mu)
    if lam == mconj:
        return 1
    rec_lam = cat.record(lam)
    if abs(rec_lam.partial - rec_mu.partial) == 1 and \
            dominates_or_equal(mconj, lam) and dominates_or_equal(lam, mu):
        return 1
    return 0


def decomp_matrix(cat: BlockCatalog) -> DecompMatrix:
    """Full block matrix; rows and columns in descending lexicographic order."""
    rows = cat.members
    cols = cat.regulars
    # column support lives in the two neighbouring leg-difference classes,
    # inside the dominance window between the Mullineux partner and mu
    col_support = {}
    for mu in cols:
        rec_mu = cat.record(mu)
        mconj = cat.mullineux_conjugate(mu)
        support = {mu, mconj}
        for l in (rec_mu.partial - 1, rec_mu.partial + 1):
            if l < 0:
                continue
            for lam in cat.members_with_partial(l):
                if cat.dominance_leq(mconj, lam) and cat.dominance_leq(lam, mu):
                    support.add(lam)
        col_support[mu] = support
    entries = tuple(
        tuple(1 if lam in col_support[mu] else 0 for mu in cols) for lam in rows
    )
    return DecompMatrix(rows, cols, entries)


def submatrix(m: DecompMatrix, rows, cols) -> DecompMatrix:
    rows = tuple(partition(r) for r in rows)
    cols = tuple(partition(c) for c in cols)
    ri = [m.row_labels.index(r) for r in rows]
    ci = [m.col_labels.index(c) for c in cols]
    entries = tuple(tuple(m.entries[a][b] for b in ci) for a in ri)
    return DecompMatrix(rows, cols, entries)


def d43_reference() -> DecompMatrix:
    """Hard-coded golden value of the full decomposition matrix at n=4, p=3."""
    rows = ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    cols = ((4,), (3, 1), (2, 2), (2, 1, 1))
    entries = (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (1, 0, 1, 0),
        (0, 0, 0, 1),
        (0, 0, 1, 0),
    )
    return DecompMatrix(rows, cols, entries)


def weight1_matrix(members: list[Partition], p: int) -> DecompMatrix:
    """Matrix of a weight-1 block: column for chain member j has ones in
    rows j and j-1.  Rows/columns in descending lexicographic order."""
    chain = sorted(members)  # ascending; refines the dominance chain
    rows = tuple(sorted(members, reverse=True))
    cols = tuple(lam for lam in rows if is_p_regular(lam, p))
    ones = set()
    for j in range(1, len(chain)):
        ones.add((chain[j], chain[j]))
        ones.add((chain[j - 1], chain[j]))
    entries = tuple(
        tuple(1 if (lam, mu) in ones else 0 for mu in cols) for lam in rows
    )
    return DecompMatrix(rows, cols, entries)


def block_matrix(core: Partition, p: int, weight: int) -> DecompMatrix:
    """Decomposition matrix of the block with the given core and weight <= 2."""
    check_odd_prime(p)
    if weight == 0:
        lam = partition(core)
        return DecompMatrix((lam,), (lam,), ((1,),))
    if weight == 1:
        members = weight1_members(core, p)
        return weight1_matrix(members, p)
    if weight == 2:
        return decomp_matrix(enumerate_block(partition(core), p))
    raise BlockError(f"blocks of weight {weight} are out of scope")


def weight1_members(core: Partition, p: int) -> list[Partition]:
    """The p partitions of the weight-1 block over the core."""
    from . import abacus as ab

    core_ab = ab.from_partition(partition(core), p)
    out = []
    for pos in core_ab.lowest_bead_per_column:
        out.append(ab.to_partition(ab.slide_bead(core_ab, pos, "down")))
    return out


def full_matrix(n: int, p: int, bound: int = 120) -> DecompMatrix:
    """Decomposition matrix of all partitions of n at p, assembled blockwise.

    Refuses when some block has weight 3 or more.
    """
    check_odd_prime(p)
    rows = tuple(enumerate_partitions(n, bound))
    cols = tuple(lam for lam in rows if is_p_regular(lam, p))
    blocks: dict[Partition, list[Partition]] = {}
    weights: dict[Partition, int] = {}
    for lam in rows:
        core, w = p_core_weight(lam, p)
        blocks.setdefault(core, []).append(lam)
        prev = weights.setdefault(core, w)
        if prev != w:
            raise BlockError("inconsistent weights within a block")
    entry: dict[tuple[Partition, Partition], int] = {}
    for core, members in blocks.items():
        bm = block_matrix(core, p, weights[core])
        if sorted(bm.row_labels) != sorted(members):
            raise BlockError(f"block of {core} does not match enumeration")
        for lam in bm.row_labels:
            for mu in bm.col_labels:
                val = bm.entry(lam, mu)
                if val:
                    entry[(lam, mu)] = val
    entries = tuple(
        tuple(entry.get((lam, mu), 0) for mu in cols) for lam in rows
    )
    return DecompMatrix(rows, cols, entries)


def is_lower_unitriangular(m: DecompMatrix, pairing: dict[Partition, Partition]) -> bool:
    """Rows in their given order; column of row r is pairing[r].  Checks a
    1 on each diagonal position and 0 everywhere above it."""
    col_pos = {mu: k for k, mu in enumerate(m.col_labels)}
    for r, lam in enumerate(m.row_labels):
        c = col_pos[pairing[lam]]
        if m.entries[r][c] != 1:
            return False
        for r2 in range(r):
            if m.entries[r2][c] != 0:
                return False
    return True


def render_matrix(m: DecompMatrix) -> str:
    """Pretty text: rows labelled, dots for zeros."""
    labels = [format_partition(lam) for lam in m.row_labels]
    width = max((len(s) for s in labels), default=0)
    lines = []
    for lab, row in zip(labels, m.entries):
        cells = " ".join("1" if x else "." for x in row)
        lines.append(f"{lab.rjust(width)} | {cells}")
    return "\n".join(lines)


def matrix_csv(m: DecompMatrix) -> str:
    """CSV with '4+2+2+1'-style labels; header row of column labels."""

    def key(lam: Partition) -> str:
        return "+".join(str(x) for x in lam) if lam else "0"

    lines = ["," + ",".join(key(mu) for mu in m.col_labels)]
    for lam, row in zip(m.row_labels, m.entries):
        lines.append(key(lam) + "," + ",".join(str(x) for x in row))
    return "\n".join(lines)


def matrix_json(m: DecompMatrix) -> dict:
    return {
        "rows": [list(lam) for lam in m.row_labels],
        "cols": [list(mu) for mu in m.col_labels],
        "entries": [list(row) for row in m.entries],
    }
