"""Exact partition arithmetic: conjugation, orders, hooks, cores, regularity.

A partition is represented throughout as a tuple of weakly decreasing
positive integers; the empty partition is ``()``.  Nodes of the Young
diagram are 1-based pairs ``(i, j)`` with ``i`` counting rows downwards.
All functions are pure and all values immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

Partition = tuple[int, ...]

#: Default guard for enumerate_partitions, to catch runaway sweeps.
DEFAULT_ENUMERATION_BOUND = 120


def partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple.

    Trailing zeros are stripped; anything not weakly decreasing or not a
    positive integer raises ValueError.
    """
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(x <= 0 for x in t):
        raise ValueError(f"parts must be positive integers: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {t}")
    return t


def rank(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_odd_prime(p: int) -> int:
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


def conjugate(lam: Partition) -> Partition:
    """The transpose partition: column lengths of the Young diagram."""
    if not lam:
        return ()
    out = []
    for j in range(1, lam[0] + 1):
        out.append(sum(1 for part in lam if part >= j))
    return tuple(out)


def is_self_conjugate(lam: Partition) -> bool:
    return lam == conjugate(lam)


class Dominance(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def dominance_cmp(lam: Partition, mu: Partition) -> Dominance:
    """Compare two partitions of equal rank in the dominance order.

    Returns LESS when lam is strictly dominated by mu, GREATER for the
    reverse, EQUAL for identical partitions, INCOMPARABLE otherwise.
    Both prefix-sum sweeps happen in one pass.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal ranks: {lam} vs {mu}")
    le = ge = True
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a > b:
            le = False
        if a < b:
            ge = False
        if not le and not ge:
            return Dominance.INCOMPARABLE
    if le and ge:
        return Dominance.EQUAL
    return Dominance.LESS if le else Dominance.GREATER


def dominates_or_equal(lam: Partition, mu: Partition) -> bool:
    """True iff mu dominates lam (lam trianglelefteq mu)."""
    return dominance_cmp(lam, mu) in (Dominance.LESS, Dominance.EQUAL)


def lex_cmp(lam: Partition, mu: Partition) -> int:
    """Total lexicographic order; -1/0/1 as lam is less/equal/greater.

    Since parts are positive, plain tuple comparison agrees with the
    first-nonvanishing-difference definition.
    """
    if lam == mu:
        return 0
    return -1 if lam < mu else 1


@dataclass(frozen=True)
class Hook:
    """Data of the (i, j)-th hook: 1-based node, length, arm and leg."""

    row: int
    col: int
    length: int
    arm: int
    leg: int


def hooks(lam: Partition) -> list[Hook]:
    """One Hook per node of the diagram, in row-major order."""
    conj = conjugate(lam)
    out = []
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            arm = part - j
            leg = conj[j - 1] - i
            out.append(Hook(i, j, arm + leg + 1, arm, leg))
    return out


def hook_length(lam: Partition, i: int, j: int) -> int:
    conj = conjugate(lam)
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"node ({i},{j}) outside diagram of {lam}")
    return lam[i - 1] - j + conj[j - 1] - i + 1


def diagonal_hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        lam[i] + conj[i] - 2 * i - 1
        for i in range(len(lam))
        if lam[i] >= i + 1
    ]


def is_p_regular(lam: Partition, p: int) -> bool:
    """True iff no part repeats p or more times."""
    check_odd_prime(p)
    run = 1
    for k in range(1, len(lam)):
        run = run + 1 if lam[k] == lam[k - 1] else 1
        if run >= p:
            return False
    return True


def remove_rim_hook(lam: Partition, i: int, j: int) -> Partition:
    """Remove the rim hook attached to node (i, j) by diagram surgery.

    The rim hook spans rows i..conj[j]; row r of the result keeps
    lam[r+1]-1 boxes inside that span and j-1 boxes in the last row of
    the span.
    """
    conj = conjugate(lam)
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"node ({i},{j}) outside diagram of {lam}")
    last = conj[j - 1]  # lowest row met by column j
    out = list(lam)
    for r in range(i, last):
        out[r - 1] = lam[r] - 1
    out[last - 1] = j - 1
    return partition(out)


def p_core_weight(lam: Partition, p: int) -> tuple[Partition, int]:
    """The p-core and p-weight via greedy rim-hook removal on diagrams.

    At each step the p-rim-hook whose hand node sits in the lowest-index
    row is removed; the result does not depend on this choice.
    """
    check_odd_prime(p)
    cur = lam
    w = 0
    while True:
        node = None
        for h in hooks(cur):
            if h.length == p:
                node = (h.row, h.col)
                break
        if node is None:
            return cur, w
        cur = remove_rim_hook(cur, *node)
        w += 1


def is_p_core(lam: Partition, p: int) -> bool:
    check_odd_prime(p)
    return all(h.length % p != 0 for h in hooks(lam))


def p_weight_by_hooks(lam: Partition, p: int) -> int:
    """Number of hooks of length divisible by p; equals the p-weight."""
    return sum(1 for h in hooks(lam) if h.length % p == 0)


def is_bg_partition(lam: Partition, p: int) -> bool:
    """Self-conjugate with no diagonal hook length divisible by p."""
    check_odd_prime(p)
    if lam != conjugate(lam):
        return False
    return all(h % p != 0 for h in diagonal_hook_lengths(lam))


def enumerate_partitions(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise ValueError(f"n={n} exceeds enumeration bound {bound}")
    return list(_partitions_rec(n, n))


@lru_cache(maxsize=None)
def _partitions_rec(n: int, cap: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_rec(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def count_partitions(n: int) -> int:
    """Independent p(n) oracle via the Euler recurrence with pentagonal numbers."""
    table = [1] + [0] * n
    for m in range(1, n + 1):
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                table[m] += sign * table[m - g1]
            if g2 <= m:
                table[m] += sign * table[m - g2]
            k += 1
    return table[n]


def self_conjugate_partitions(n: int) -> list[Partition]:
    """All self-conjugate partitions of n, built from distinct odd diagonal hooks."""
    out = []
    for dhooks in _distinct_odd_parts(n, n if n % 2 == 1 else n - 1):
        out.append(_from_diagonal_hooks(dhooks))
    return out


def _distinct_odd_parts(n: int, cap: int):
    if n == 0:
        yield ()
        return
    first = min(cap, n)
    if first % 2 == 0:
        first -= 1
    for a in range(first, 0, -2):
        for rest in _distinct_odd_parts(n - a, a - 2):
            yield (a,) + rest


def _from_diagonal_hooks(dhooks: tuple[int, ...]) -> Partition:
    """Self-conjugate partition with the given strictly decreasing odd diagonal hooks."""
    parts: list[int] = []
    for d, h in enumerate(dhooks):
        arm = (h - 1) // 2
        parts.append(d + 1 + arm)
    for d in range(len(dhooks), max(parts, default=0)):
        col = sum(1 for d2, h in enumerate(dhooks) if d2 + 1 + (h - 1) // 2 >= d + 1)
        if col == 0:
            break
        parts.append(col)
    return partition(parts)


def format_partition(lam: Partition) -> str:
    """Compact text form with exponents, e.g. (7,2,1^5); () for empty."""
    if not lam:
        return "()"
    pieces = []
    k = 0
    while k < len(lam):
        run = 1
        while k + run < len(lam) and lam[k + run] == lam[k]:
            run += 1
        pieces.append(str(lam[k]) if run == 1 else f"{lam[k]}^{run}")
        k += run
    return "(" + ",".join(pieces) + ")"


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated list of parts, e.g. '4,2,2,1'. No exponent syntax."""
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition string {text!r}: {exc}") from None


def render_young(lam: Partition) -> str:
    """Young diagram as left-justified rows of '#'."""
    return "\n".join("#" * part for part in lam)
