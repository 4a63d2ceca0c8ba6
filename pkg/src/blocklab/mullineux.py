"""Block-agnostic Mullineux map on p-regular partitions.

The map is computed through rim symbols: repeatedly strip the p-rim,
recording at each step the number of stripped nodes a_i and the number
of rows r_i; the image is the partition whose symbol has the same top
row and second row a_i - r_i + eps_i, with eps_i = 0 when p divides a_i
and 1 otherwise.  Reconstruction from a symbol proceeds bottom-up, one
p-segment at a time.

This implementation is validated through its consequences (involution,
rank preservation, core conjugation, weight-1 and weight-2 behaviour)
by the test suite rather than trusted blindly.
"""

from __future__ import annotations

from .partitions import (
    Partition,
    check_odd_prime,
    conjugate,
    is_p_regular,
    p_core_weight,
    partition,
)


def p_rim(lam: Partition, p: int) -> list[tuple[int, int]]:
    """The p-rim: rim nodes taken in segments of p, top-right to bottom-left.

    After a full segment ending in row r, the next segment restarts at
    the rightmost rim node of row r+1; the final segment may be short.
    """
    if not lam:
        raise ValueError("p-rim of the empty partition is undefined")
    nodes: list[tuple[int, int]] = []
    rows = len(lam)
    row = 1
    budget = p
    while row <= rows:
        right = lam[row - 1]
        left = lam[row] if row < rows else 1
        avail = right - left + 1
        take = min(avail, budget)
        for c in range(right, right - take, -1):
            nodes.append((row, c))
        if avail < budget:
            budget -= avail  # segment continues around the corner
            row += 1
        else:
            budget = p  # segment complete; restart in the next row
            row += 1
    return nodes


def strip_p_rim(lam: Partition, p: int) -> Partition:
    removed: dict[int, int] = {}
    for i, _ in p_rim(lam, p):
        removed[i] = removed.get(i, 0) + 1
    return partition(lam[i] - removed.get(i + 1, 0) for i in range(len(lam)))


def mullineux_symbol(lam: Partition, p: int) -> list[tuple[int, int]]:
    """Columns (a_i, r_i) of the rim symbol; a_i sum to the rank."""
    check_odd_prime(p)
    cols = []
    cur = lam
    while cur:
        rim = p_rim(cur, p)
        cols.append((len(rim), len(cur)))
        cur = strip_p_rim(cur, p)
    return cols


def _add_p_rim(mu: Partition, p: int, size: int, rows: int) -> Partition:
    """Inverse of one stripping step: the unique nu with `rows` rows whose
    p-rim has `size` nodes and strips down to mu.

    Segments are placed bottom-up; within a segment every row below the
    first satisfies t_{r+1} = mu_r - mu_{r+1} + 1, so only the segment
    boundaries need to be located.  A boundary row r must respect the
    terminal constraint t_r <= mu_{r-1} - mu_r + 1 of the segment above.
    """
    if rows < 1 or size < 1:
        raise ValueError("invalid Mullineux symbol column")
    mu_pad = list(mu) + [0] * (rows - len(mu))
    if len(mu) > rows:
        raise ValueError("invalid Mullineux symbol: too few rows")
    t = [0] * rows
    nsegs = (size + p - 1) // p
    bottom = rows  # 1-based row below which nothing remains
    for seg in range(nsegs, 0, -1):
        seg_size = size - (nsegs - 1) * p if seg == nsegs else p
        if bottom < 1:
            raise ValueError("invalid Mullineux symbol: rows exhausted")
        # climb upward from `bottom` until the start-row removal fits
        consumed = 0
        start = bottom
        while True:
            t_start = seg_size - consumed
            bound = mu_pad[start - 2] - mu_pad[start - 1] + 1 if start > 1 else None
            if t_start < 1:
                raise ValueError("invalid Mullineux symbol: segment underflow")
            if bound is None or t_start <= bound:
                break
            t[start - 1] = bound
            consumed += bound
            start -= 1
            if start < 1:
                raise ValueError("invalid Mullineux symbol: segment overflow")
        t[start - 1] = seg_size - consumed
        bottom = start - 1
    if bottom != 0:
        raise ValueError("invalid Mullineux symbol: rows not covered")
    nu = [mu_pad[r] + t[r] for r in range(rows)]
    return partition(nu)


def partition_from_symbol(cols: list[tuple[int, int]], p: int) -> Partition:
    lam: Partition = ()
    for size, rows in reversed(cols):
        lam = _add_p_rim(lam, p, size, rows)
    return lam


def mullineux(lam: Partition, p: int) -> Partition:
    """Image of a p-regular partition under the Mullineux involution."""
    check_odd_prime(p)
    lam = partition(lam)
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is {p}-singular")
    if not lam:
        return ()
    cols = mullineux_symbol(lam, p)
    image_cols = []
    for a, r in cols:
        eps = 0 if a % p == 0 else 1
        image_cols.append((a, a - r + eps))
    return partition_from_symbol(image_cols, p)


def self_mullineux_partitions(n: int, p: int, universe) -> list[Partition]:
    """Fixpoints of the map among the given p-regular partitions of n."""
    return [lam for lam in universe if mullineux(lam, p) == lam]


def mullineux_conjugate(lam: Partition, p: int) -> Partition:
    """Conjugate of the Mullineux image; the row partner in decomposition work."""
    return conjugate(mullineux(lam, p))


def core_conjugation_holds(lam: Partition, p: int) -> bool:
    """Check that the image's p-core is the conjugate of the input's p-core."""
    core, w = p_core_weight(lam, p)
    icore, iw = p_core_weight(mullineux(lam, p), p)
    return icore == conjugate(core) and iw == w
