"""Catalog of a weight-2 block: labellings, the leg-difference map, chains.

Every partition of the block arises from the core's abacus by two
single-space bead moves and is named accordingly: pair(i,j) moves the
lowest bead of runners i and j (labels, not physical columns), double(i)
moves the lowest bead of runner i down twice, squared(i) moves the two
lowest beads of runner i down once each.

The leg-difference value of a member is the absolute difference of the
leg lengths of the two length-p rim hooks removed on the way to the
core; the canonical removal takes the hook whose hand node sits in the
lowest-index row first, and the value is removal-order independent.
Members with value 0 split into signed halves by a parity rule on the
removed hooks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import abacus as ab
from .mullineux import mullineux_conjugate as oracle_mullineux_conjugate
from .partitions import (
    Dominance,
    Partition,
    check_odd_prime,
    conjugate,
    dominance_cmp,
    format_partition,
    hooks,
    is_p_core,
    is_p_regular,
    is_self_conjugate,
    remove_rim_hook,
)
from .pyramid import Pyramid, build_pyramid, delta as pyramid_delta, entry_extended


@dataclass(frozen=True)
class AngleLabel:
    """Bead-move pattern naming a block member: pair / double / squared."""

    kind: str  # "pair" | "double" | "squared"
    i: int
    j: int = -1  # second runner for pair labels only

    def __str__(self) -> str:
        if self.kind == "pair":
            return f"<{self.i},{self.j}>"
        if self.kind == "double":
            return f"<{self.i}>"
        return f"<{self.i}^2>"


@dataclass(frozen=True)
class CeilLabel:
    """Label of a p-regular member, in bijection with pyramid entries."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"

    @property
    def column(self) -> int:
        return self.i + self.j


@dataclass
class BlockRecord:
    partition: Partition
    angle: AngleLabel
    partial: int
    regular: bool
    sign: str | None = None  # '+' or '-' when partial == 0
    ceil: CeilLabel | None = None
    self_conjugate: bool = False
    self_mullineux: bool = False


class BlockError(ValueError):
    pass


def angle_to_partition(core_abacus: ab.Abacus, labels: ab.RunnerLabels,
                       angle: AngleLabel) -> Partition:
    """Apply the bead moves named by an angle label to the core's abacus."""
    lowest = core_abacus.lowest_bead_per_column

    def lowest_of_label(lab: int) -> int:
        return lowest[labels.column_of_label(lab)]

    a = core_abacus
    if angle.kind == "pair":
        a = ab.slide_bead(a, lowest_of_label(angle.i), "down")
        a = ab.slide_bead(a, lowest_of_label(angle.j), "down")
    elif angle.kind == "double":
        pos = lowest_of_label(angle.i)
        a = ab.slide_bead(a, pos, "down")
        a = ab.slide_bead(a, pos + a.p, "down")
    elif angle.kind == "squared":
        pos = lowest_of_label(angle.i)
        a = ab.slide_bead(a, pos, "down")
        a = ab.slide_bead(a, pos - a.p, "down")
    else:
        raise BlockError(f"unknown angle kind {angle.kind!r}")
    return ab.to_partition(a)


def all_angle_labels(p: int) -> list[AngleLabel]:
    out = [AngleLabel("pair", i, j) for i in range(p) for j in range(i + 1, p)]
    out += [AngleLabel("double", i) for i in range(p)]
    out += [AngleLabel("squared", i) for i in range(p)]
    return out


def partial_value(lam: Partition, p: int) -> int:
    """Leg-length difference of the two length-p rim hooks, by diagram surgery."""
    legs = []
    cur = lam
    for _ in range(2):
        node = None
        for h in hooks(cur):
            if h.length == p:
                node = h
                break
        if node is None:
            raise BlockError(f"{lam} does not have weight 2 at p={p}")
        legs.append(node.leg)
        cur = remove_rim_hook(cur, node.row, node.col)
    if not is_p_core(cur, p):
        raise BlockError(f"{lam} does not have weight 2 at p={p}")
    return abs(legs[0] - legs[1])


def sign_partial0(lam: Partition, p: int) -> str:
    """Sign of a member with leg-difference 0.

    Two length-p hooks: '+' when the larger (even) leg is even.  One
    length-p and one length-2p hook: '+' when the 2p rim hook's leg is
    0 or 3 mod 4.
    """
    if partial_value(lam, p) != 0:
        raise BlockError(f"{lam} has nonzero leg difference")
    divisible = [h for h in hooks(lam) if h.length % p == 0]
    lengths = sorted(h.length for h in divisible)
    if lengths == [p, p]:
        legs = sorted(h.leg for h in divisible)
        if legs[1] != legs[0] + 1:
            raise BlockError(f"p-hook legs of {lam} are not consecutive")
        return "+" if legs[1] % 2 == 0 else "-"
    if lengths == [p, 2 * p]:
        (big,) = [h for h in divisible if h.length == 2 * p]
        return "+" if big.leg % 4 in (0, 3) else "-"
    raise BlockError(f"{lam} is not a weight-2 partition with value 0")


def _ceil_case(py: Pyramid, i: int, j: int) -> AngleLabel:
    """The six-case table sending a ceil label to an angle label."""
    if i == j:
        if entry_extended(py, i + 1, i + 2) == 0:
            return AngleLabel("double", i + 1)
        return AngleLabel("pair", i + 1, i + 2)
    if entry_extended(py, i + 1, j) == 0:
        return AngleLabel("pair", i + 1, j)
    if entry_extended(py, i, j) == 0:
        return AngleLabel("squared", j)
    if entry_extended(py, i, j + 1) == 0:
        return AngleLabel("double", i)
    return AngleLabel("pair", i, j + 1)


@dataclass(frozen=True)
class BlockCatalog:
    p: int
    core: Partition
    pyramid: Pyramid
    labels: ab.RunnerLabels
    records: tuple[BlockRecord, ...]  # descending lexicographic

    @property
    def n(self) -> int:
        return sum(self.core) + 2 * self.p

    @property
    def self_conjugate_core(self) -> bool:
        return is_self_conjugate(self.core)

    @cached_property
    def by_partition(self) -> dict[Partition, BlockRecord]:
        return {r.partition: r for r in self.records}

    @cached_property
    def members(self) -> tuple[Partition, ...]:
        return tuple(r.partition for r in self.records)

    @cached_property
    def regulars(self) -> tuple[Partition, ...]:
        return tuple(r.partition for r in self.records if r.regular)

    def record(self, lam: Partition) -> BlockRecord:
        try:
            return self.by_partition[lam]
        except KeyError:
            raise BlockError(f"{lam} is not in the block of {self.core}") from None

    @cached_property
    def chains(self) -> dict[object, tuple[Partition, ...]]:
        """Dominance-sorted classes, keyed by l for l>=1 and '0+', '0-'."""
        groups: dict[object, list[Partition]] = {}
        for r in self.records:
            key: object = r.partial if r.partial > 0 else "0" + (r.sign or "?")
            groups.setdefault(key, []).append(r.partition)
        return {k: _sort_chain(v) for k, v in groups.items()}

    def members_with_partial(self, l: int) -> tuple[Partition, ...]:
        if l == 0:
            return self.chains.get("0+", ()) + self.chains.get("0-", ())
        return self.chains.get(l, ())

    @cached_property
    def _prefix_sums(self) -> dict[Partition, tuple[int, ...]]:
        depth = max((len(r.partition) for r in self.records), default=0)
        out = {}
        for r in self.records:
            lam = r.partition
            acc, pre = 0, []
            for k in range(depth):
                acc += lam[k] if k < len(lam) else 0
                pre.append(acc)
            out[lam] = tuple(pre)
        return out

    def dominance_leq(self, lam: Partition, mu: Partition) -> bool:
        """lam trianglelefteq mu, through cached prefix sums of members."""
        pa, pb = self._prefix_sums[lam], self._prefix_sums[mu]
        return all(x <= y for x, y in zip(pa, pb))

    @cached_property
    def mullineux_images(self) -> dict[Partition, Partition]:
        """Image of every regular member under the in-block Mullineux map.

        Within each chain (signed halves included) the image of the
        member at position i >= 1 is the conjugate of its predecessor.
        """
        if not self.self_conjugate_core:
            raise BlockError("mullineux_block needs a self-conjugate core")
        out = {}
        for chain in self.chains.values():
            for i in range(1, len(chain)):
                out[chain[i]] = conjugate(chain[i - 1])
        return out

    @cached_property
    def delta(self) -> int:
        if not self.self_conjugate_core:
            raise BlockError("delta needs a self-conjugate core")
        return pyramid_delta(self.pyramid)

    @cached_property
    def nu(self) -> tuple[Partition, ...]:
        """Self-conjugate members nu_1..nu_{(p-1)/2}."""
        if not self.self_conjugate_core:
            raise BlockError("nu/mu need a self-conjugate core")
        h = (self.p - 1) // 2
        out = []
        for k in range(1, h + 1):
            out.append(self.angle_partition(AngleLabel("pair", h - k, h + k)))
        return tuple(out)

    @cached_property
    def mu(self) -> tuple[Partition, ...]:
        """Self-Mullineux members mu_1..mu_{(p-1)/2} (middle pyramid column)."""
        if not self.self_conjugate_core:
            raise BlockError("nu/mu need a self-conjugate core")
        h = (self.p - 1) // 2
        return tuple(self.ceil_partition(h - k, h + k) for k in range(1, h + 1))

    @cached_property
    def _angle_map(self) -> dict[str, Partition]:
        return {str(r.angle): r.partition for r in self.records}

    @cached_property
    def _ceil_map(self) -> dict[tuple[int, int], Partition]:
        out = {}
        for r in self.records:
            if r.ceil is not None:
                out[(r.ceil.i, r.ceil.j)] = r.partition
        return out

    def angle_partition(self, angle: AngleLabel) -> Partition:
        return self._angle_map[str(angle)]

    def ceil_partition(self, i: int, j: int) -> Partition:
        try:
            return self._ceil_map[(i, j)]
        except KeyError:
            raise BlockError(f"no ceil label ({i},{j}) for p={self.p}") from None

    def partial_via_pyramid(self, i: int, j: int) -> int:
        if not (0 <= i <= j < self.p and i < self.p - 1):
            raise BlockError(f"ceil label ({i},{j}) out of range")
        return j - i - 1 + self.pyramid.entry(i, j)

    def mullineux_block(self, mu_part: Partition) -> Partition:
        """Mullineux image inside the chains of a self-conjugate block.

        For a regular member at position i >= 2 of its chain, the image
        is the conjugate of the member at position i-1; signed classes
        pair the plus chain with the minus chain through conjugation.
        """
        rec = self.record(mu_part)
        if not rec.regular:
            raise BlockError(f"{mu_part} is {self.p}-singular")
        try:
            return self.mullineux_images[mu_part]
        except KeyError:
            raise BlockError(f"chain position of {mu_part} is singular") from None

    def mullineux_conjugate(self, mu_part: Partition) -> Partition:
        """Conjugate of the Mullineux image; block-local when self-conjugate,
        through the block-agnostic oracle otherwise."""
        if self.self_conjugate_core:
            return conjugate(self.mullineux_block(mu_part))
        return oracle_mullineux_conjugate(mu_part, self.p)


def _sort_chain(parts: list[Partition]) -> tuple[Partition, ...]:
    ordered = sorted(parts)  # ascending lexicographic refines dominance
    for a in range(len(ordered)):
        for b in range(a + 1, len(ordered)):
            if dominance_cmp(ordered[a], ordered[b]) == Dominance.INCOMPARABLE:
                raise BlockError(
                    f"incomparable pair in a chain: {ordered[a]} vs {ordered[b]}"
                )
    return tuple(ordered)


def enumerate_block(core: Partition, p: int) -> BlockCatalog:
    """Build the full catalog of the weight-2 block over the given core."""
    check_odd_prime(p)
    if not is_p_core(core, p):
        raise BlockError(f"{core} is not a {p}-core")
    core_ab = ab.from_partition(core, p)
    labels = ab.runner_labels(core_ab)
    py = build_pyramid(core, p)

    records: dict[Partition, BlockRecord] = {}
    for angle in all_angle_labels(p):
        lam = angle_to_partition(core_ab, labels, angle)
        dr = partial_value(lam, p)
        rec = BlockRecord(
            partition=lam,
            angle=angle,
            partial=dr,
            regular=is_p_regular(lam, p),
            sign=sign_partial0(lam, p) if dr == 0 else None,
            self_conjugate=is_self_conjugate(lam),
        )
        if lam in records:
            raise BlockError(f"duplicate member {lam} from {angle}")
        records[lam] = rec

    for i in range(p):
        for j in range(i, p):
            if i == p - 1:
                continue
            angle = _ceil_case(py, i, j)
            lam = angle_to_partition(core_ab, labels, angle)
            rec = records[lam]
            if rec.ceil is not None:
                raise BlockError(f"two ceil labels hit {lam}")
            rec.ceil = CeilLabel(i, j)

    ordered = tuple(sorted(records.values(), key=lambda r: r.partition, reverse=True))
    cat = BlockCatalog(p, core, py, labels, ordered)

    if cat.self_conjugate_core:
        for mu_part in cat.mu:
            cat.record(mu_part).self_mullineux = True
    return cat


def left_right_check(cat: BlockCatalog, lam: Partition, tau: Partition) -> None:
    """Raise unless the pyramid-order claim holds for the given regulars.

    When lam sits strictly left of tau (smaller label column) and off
    the bottom row, tau must not be strictly dominated by lam.  Bottom-
    row labels are genuine exceptions: already in the p=5 block over
    core (2,2), the label (3,3) names (12,2), sits left of (3,4) naming
    (11,3), and (11,3) is strictly dominated by (12,2).
    """
    rl, rt = cat.record(lam), cat.record(tau)
    if rl.ceil is None or rt.ceil is None:
        raise BlockError("left_right_check needs p-regular members")
    if rl.ceil.i == rl.ceil.j:
        return
    if rl.ceil.column < rt.ceil.column:
        if dominance_cmp(tau, lam) == Dominance.LESS:
            raise BlockError(
                f"pyramid order violated: {tau} (right) strictly below {lam} (left)"
            )


def regular_partial_classes(cat: BlockCatalog) -> dict[int, set[Partition]]:
    out: dict[int, set[Partition]] = {}
    for r in cat.records:
        if r.regular:
            out.setdefault(r.partial, set()).add(r.partition)
    return out


def render_block_table(cat: BlockCatalog) -> str:
    """One line per leg-difference class, ascending; '!' marks singular members."""
    lines = [
        f"block of core {format_partition(cat.core)}  p={cat.p}  n={cat.n}"
        + (f"  delta={cat.delta}" if cat.self_conjugate_core else "")
    ]
    for l in range(cat.p):
        if l == 0:
            chain = list(cat.chains.get("0-", ())) + list(cat.chains.get("0+", ()))
            chain.sort()
        else:
            chain = list(cat.chains.get(l, ()))
        cells = []
        for lam in chain:
            rec = cat.record(lam)
            mark = "" if rec.regular else "!"
            cells.append(format_partition(lam) + mark)
        lines.append(f"d{l}: " + "  ".join(cells))
    return "\n".join(lines)


def block_json(cat: BlockCatalog) -> dict:
    recs = []
    for r in cat.records:
        entry = {
            "partition": list(r.partition),
            "angle": str(r.angle),
            "partial": r.partial,
            "regular": r.regular,
            "self_conjugate": r.self_conjugate,
            "self_mullineux": r.self_mullineux,
        }
        if r.ceil is not None:
            entry["ceil"] = [r.ceil.i, r.ceil.j]
        if r.sign is not None:
            entry["sign"] = r.sign
        recs.append(entry)
    chains = {
        str(key): [list(lam) for lam in chain] for key, chain in sorted(
            cat.chains.items(), key=lambda kv: str(kv[0])
        )
    }
    out = {
        "p": cat.p,
        "core": list(cat.core),
        "n": cat.n,
        "records": recs,
        "chains": chains,
    }
    if cat.self_conjugate_core:
        out["delta"] = cat.delta
        out["nu"] = [list(x) for x in cat.nu]
        out["mu"] = [list(x) for x in cat.mu]
    return out
