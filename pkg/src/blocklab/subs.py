"""Stable unitriangular basic sets for blocks of weight at most 2.

For a self-conjugate weight-2 block the basic set V consists of the
regular members whose Mullineux image is lexicographically smaller,
their conjugates, and the self-conjugate members; the total order lists
those three groups in sequence, with the self-conjugate tail permuted
around the pyramid cutoff.  Blocks of odd weight, and pairs of mutually
conjugate blocks, instead restrict the global Mullineux-split basic set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import abacus as ab
from .block import BlockCatalog, BlockError, enumerate_block
from .mullineux import mullineux as mullineux_map
from .decomp import DecompMatrix, block_matrix, decomp_matrix, weight1_members
from .partitions import (
    Dominance,
    Partition,
    check_odd_prime,
    conjugate,
    count_partitions,
    dominance_cmp,
    format_partition,
    is_bg_partition,
    is_p_core,
    is_p_regular,
    is_self_conjugate,
    partition,
)


@dataclass(frozen=True)
class Ubs:
    """A candidate unitriangular basic set over an ordered universe.

    universe lists the whole block (or block pair) in descending order;
    members is the subset in the same order; psi maps members onto the
    p-regular labels of the block's simple modules.
    """

    universe: tuple[Partition, ...]
    members: tuple[Partition, ...]
    psi: dict[Partition, Partition]


@dataclass(frozen=True)
class Report:
    passed: bool
    violations: tuple[str, ...]
    context: dict = field(default_factory=dict)

    def merged_with(self, other: "Report") -> "Report":
        return Report(
            self.passed and other.passed,
            self.violations + other.violations,
            {**self.context, **other.context},
        )


def verify_ubs(u: Ubs, m: DecompMatrix) -> Report:
    """Check the two unitriangularity conditions against a matrix.

    (1) every member hits its own simple with multiplicity one;
    (2) a nonzero entry forces the row at or below the column's member.
    Violations are reported, not raised.
    """
    violations = []
    pos = {lam: k for k, lam in enumerate(u.universe)}
    images = [u.psi[mu] for mu in u.members]
    if len(set(images)) != len(images) or set(images) != set(m.col_labels):
        violations.append("psi is not a bijection onto the block's regulars")
    for mu in u.members:
        if m.entry(mu, u.psi[mu]) != 1:
            violations.append(f"condition 1: d[{format_partition(mu)}, "
                              f"{format_partition(u.psi[mu])}] != 1")
    inv = {u.psi[mu]: mu for mu in u.members}
    for ci, col in enumerate(m.col_labels):
        target = inv.get(col)
        if target is None:
            continue
        tpos = pos[target]
        for ri, lam in enumerate(m.row_labels):
            if m.entries[ri][ci] and pos[lam] < tpos:
                violations.append(
                    f"condition 2: d[{format_partition(lam)}, "
                    f"{format_partition(col)}] != 0 above "
                    f"{format_partition(target)}"
                )
    return Report(not violations, tuple(violations))


def verify_stability(u: Ubs, p: int) -> Report:
    """Conjugation closure plus the diagonal-hook condition on fixpoints."""
    violations = []
    member_set = set(u.members)
    for mu in u.members:
        if conjugate(mu) not in member_set:
            violations.append(f"condition A: {format_partition(mu)} in, "
                              "conjugate out")
        elif mu == conjugate(mu) and not is_bg_partition(mu, p):
            violations.append(f"condition B: {format_partition(mu)} has a "
                              f"diagonal hook divisible by {p}")
    return Report(not violations, tuple(violations))


@dataclass(frozen=True)
class SubsW2:
    """The weight-2 triplet: grouped members, total order, bijection."""

    p: int
    core: Partition
    v1: tuple[Partition, ...]  # regulars with smaller Mullineux image, lex desc
    v2: tuple[Partition, ...]  # their conjugates, matching order
    v3: tuple[Partition, ...]  # self-conjugate members in the tail order
    psi: dict[Partition, Partition]

    @property
    def members(self) -> tuple[Partition, ...]:
        return self.v1 + self.v2 + self.v3


def build_subs_w2(cat: BlockCatalog) -> SubsW2:
    if not cat.self_conjugate_core:
        raise BlockError("the weight-2 construction needs a self-conjugate core")
    v1 = sorted(
        (lam for lam in cat.regulars if cat.mullineux_block(lam) < lam),
        reverse=True,
    )
    v2 = [conjugate(lam) for lam in v1]
    h = (cat.p - 1) // 2
    d = cat.delta
    nu = cat.nu
    v3 = list(nu[:d]) + [nu[k] for k in range(h - 1, d - 1, -1)]
    psi: dict[Partition, Partition] = {}
    for lam in v1:
        psi[lam] = lam
    for lam in v1:
        psi[conjugate(lam)] = cat.mullineux_block(lam)
    for k in range(h):
        psi[nu[k]] = cat.mu[k]
    return SubsW2(cat.p, cat.core, tuple(v1), tuple(v2), tuple(v3), psi)


def subs_to_ubs(subs: SubsW2, cat: BlockCatalog) -> Ubs:
    members = subs.members
    rest = sorted(set(cat.members) - set(members), reverse=True)
    return Ubs(members + tuple(rest), members, dict(subs.psi))


def subs_matrix(subs: SubsW2, m: DecompMatrix) -> DecompMatrix:
    """Rows of the block matrix restricted to the basic set, in its order;
    columns are the psi images in the same order."""
    rows = subs.members
    cols = tuple(subs.psi[r] for r in rows)
    ri = [m.row_labels.index(r) for r in rows]
    ci = [m.col_labels.index(c) for c in cols]
    entries = tuple(tuple(m.entries[a][b] for b in ci) for a in ri)
    return DecompMatrix(rows, cols, entries)


def check_w2_pattern(subs: SubsW2, dm: DecompMatrix) -> Report:
    """Lower unitriangularity plus the characteristic zero blocks.

    With t = |v1| and h = (p-1)/2 the square matrix splits as
    [[D1, D2, .], [D3, D4, .], [*, *, D6]]; D2, D3 and the whole upper
    2t x h strip must vanish and D4 must repeat D1.
    """
    violations = []
    t = len(subs.v1)
    h = len(subs.v3)
    e = dm.entries
    size = 2 * t + h
    for r in range(size):
        if e[r][r] != 1:
            violations.append(f"diagonal 0 at row {r}")
        for c in range(r + 1, size):
            if e[r][c] != 0:
                violations.append(f"entry above diagonal at ({r},{c})")
    for r in range(t):
        for c in range(t):
            if e[r][t + c] != 0:
                violations.append(f"D2 not zero at ({r},{c})")
            if e[t + r][c] != 0:
                violations.append(f"D3 not zero at ({r},{c})")
            if e[t + r][t + c] != e[r][c]:
                violations.append(f"D4 differs from D1 at ({r},{c})")
    for r in range(2 * t):
        for c in range(2 * t, size):
            if e[r][c] != 0:
                violations.append(f"D5 not zero at ({r},{c})")
    return Report(not violations, tuple(violations))


def build_subs_odd_or_split(core: Partition, p: int, n: int) -> Ubs:
    """Basic set for a weight-1 block, a conjugate pair, or both.

    Restricts the global Mullineux-split set: regulars whose image is
    lexicographically smaller, then their conjugates; the self-Mullineux
    part of the restriction must be empty here.
    """
    check_odd_prime(p)
    core = partition(core)
    if not is_p_core(core, p):
        raise BlockError(f"{core} is not a {p}-core")
    w, rem = divmod(n - sum(core), p)
    if rem or w < 1:
        raise BlockError(f"no weight makes {core} a core of a block of {n}")
    if w not in (1, 2):
        raise BlockError(f"weight {w} is out of scope (need 1 or 2)")
    if w % 2 == 0 and is_self_conjugate(core):
        raise BlockError("even self-conjugate blocks need the weight-2 build")

    members = _pair_members(core, p, w)
    regs = [lam for lam in members if is_p_regular(lam, p)]
    images = {lam: mullineux_map(lam, p) for lam in regs}
    fixed = [lam for lam in regs if images[lam] == lam]
    if fixed:
        raise BlockError(f"unexpected self-Mullineux members: {fixed}")
    u1 = sorted((lam for lam in regs if images[lam] < lam), reverse=True)
    u2 = [conjugate(lam) for lam in u1]
    overlap = set(u1) & set(u2)
    if overlap:
        raise BlockError(f"split sets overlap: {sorted(overlap)}")
    psi: dict[Partition, Partition] = {}
    for lam in u1:
        psi[lam] = lam
    for lam in u1:
        psi[conjugate(lam)] = images[lam]
    members_ordered = tuple(u1) + tuple(u2)
    rest = sorted(set(members) - set(members_ordered), reverse=True)
    return Ubs(members_ordered + tuple(rest), members_ordered, psi)


def _pair_members(core: Partition, p: int, w: int) -> list[Partition]:
    cores = [core]
    if conjugate(core) != core:
        cores.append(conjugate(core))
    out: list[Partition] = []
    for c in cores:
        if w == 1:
            out.extend(weight1_members(c, p))
        else:
            out.extend(enumerate_block(c, p).members)
    return out


def pair_matrix(core: Partition, p: int, n: int) -> DecompMatrix:
    """Direct sum of the block matrices of a core and its conjugate."""
    core = partition(core)
    w = (n - sum(core)) // p
    cores = [core]
    if conjugate(core) != core:
        cores.append(conjugate(core))
    mats = [block_matrix(c, p, w) for c in cores]
    rows = tuple(lam for m in mats for lam in m.row_labels)
    cols = tuple(mu for m in mats for mu in m.col_labels)
    entry = {}
    for m in mats:
        for a, lam in enumerate(m.row_labels):
            for b, mu in enumerate(m.col_labels):
                if m.entries[a][b]:
                    entry[(lam, mu)] = 1
    entries = tuple(tuple(entry.get((lam, mu), 0) for mu in cols) for lam in rows)
    return DecompMatrix(rows, cols, entries)


@dataclass(frozen=True)
class Weight1Block:
    """Chain of a weight-1 block with its bead-move bookkeeping."""

    p: int
    core: Partition
    chain: tuple[Partition, ...]  # index i = slide on runner labelled i
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def singular(self) -> Partition:
        return self.chain[0]


def weight1_block(core: Partition, p: int) -> Weight1Block:
    """The p members of a weight-1 block, indexed by the runner labelling."""
    check_odd_prime(p)
    core = partition(core)
    if not is_p_core(core, p):
        raise BlockError(f"{core} is not a {p}-core")
    core_ab = ab.from_partition(core, p)
    labels = ab.runner_labels(core_ab)
    chain: list[Partition] = [()] * p
    arms = [0] * p
    legs = [0] * p
    for lab in range(p):
        pos = core_ab.lowest_bead_per_column[labels.column_of_label(lab)]
        leg = ab.slide_leg_length(core_ab, pos, "down")
        chain[lab] = ab.to_partition(ab.slide_bead(core_ab, pos, "down"))
        arms[lab] = p - 1 - leg
        legs[lab] = leg
    for i in range(p - 1):
        if dominance_cmp(chain[i], chain[i + 1]) not in (Dominance.LESS,
                                                         Dominance.EQUAL):
            raise BlockError("weight-1 chain is not dominance-increasing")
    return Weight1Block(p, core, tuple(chain), tuple(arms), tuple(legs))


def weight1_mullineux(block: Weight1Block) -> dict[Partition, Partition]:
    """Mullineux on the regular chain members: arm i goes to arm p-i over
    the conjugate core."""
    image_block = weight1_block(conjugate(block.core), block.p)
    return {
        block.chain[i]: image_block.chain[block.p - i]
        for i in range(1, block.p)
    }


def self_mullineux_census(core: Partition, p: int, w: int) -> int:
    """Number of self-Mullineux members of the block of weight w over a
    self-conjugate core: multipartition count at even weight, 0 at odd."""
    check_odd_prime(p)
    core = partition(core)
    if not is_self_conjugate(core):
        raise BlockError("the census needs a self-conjugate core")
    if w % 2 == 1:
        return 0
    return count_multipartitions((p - 1) // 2, w // 2)


def count_multipartitions(k: int, m: int) -> int:
    counts = [count_partitions(j) for j in range(m + 1)]
    ways = [1] + [0] * m
    for _ in range(k):
        ways = [
            sum(ways[s - j] * counts[j] for j in range(s + 1))
            for s in range(m + 1)
        ]
    return ways[m]


def block_reports(cat: BlockCatalog, with_oracle: bool = True) -> dict[str, Report]:
    """Per-category reports for one self-conjugate weight-2 block.

    Keys: ubs (conditions 1 and 2), stability (A and B), pattern (the
    zero blocks and unitriangularity of the ordered matrix), counts
    (all counting identities and the chain parity rule), routes (both
    ways to the leg-difference value), order (pyramid order claims),
    oracle (block map against the block-agnostic map).
    """
    m = decomp_matrix(cat)
    subs = build_subs_w2(cat)
    u = subs_to_ubs(subs, cat)
    out = {
        "ubs": verify_ubs(u, m),
        "stability": verify_stability(u, cat.p),
        "pattern": check_w2_pattern(subs, subs_matrix(subs, m)),
        "counts": _check_counts(cat),
        "routes": _check_partial_routes(cat),
        "order": _check_pyramid_order(cat),
    }
    if with_oracle:
        out["oracle"] = _check_oracle(cat)
    return out


def check_self_conjugate_block(core: Partition, p: int,
                               with_oracle: bool = True) -> Report:
    """Every per-block property of the main construction, in one report.

    Covers the triplet conditions, stability, the zero-block pattern,
    the counting identities, the chain parity rule, both routes to the
    leg-difference value, the pyramid order claims, and (optionally)
    agreement of the in-block Mullineux map with the oracle.
    """
    core = partition(core)
    cat = enumerate_block(core, p)
    report = Report(True, ())
    for part in block_reports(cat, with_oracle).values():
        report = report.merged_with(part)
    ctx = {
        "p": p,
        "core": list(core),
        "n": cat.n,
        "delta": cat.delta,
        "members": len(cat.members),
        "regulars": len(cat.regulars),
    }
    return Report(report.passed, report.violations, ctx)


def _check_counts(cat: BlockCatalog) -> Report:
    violations = []
    p = cat.p
    if len(cat.members) != p * (p + 3) // 2:
        violations.append("block size is not p(p+3)/2")
    singular = [r.partition for r in cat.records if not r.regular]
    if len(singular) != p + 1:
        violations.append(f"{len(singular)} singular members, expected {p + 1}")
    zero_class = [r for r in cat.records if r.partial == 0]
    if len(zero_class) % 2 != 0:
        violations.append("class 0 has odd size")
    selfc = [r.partition for r in cat.records if r.self_conjugate]
    selfm = [r.partition for r in cat.records if r.self_mullineux]
    if not (len(selfc) == len(selfm) == (p - 1) // 2):
        violations.append("fixpoint counts differ from (p-1)/2")
    if self_mullineux_census(cat.core, p, 2) != len(selfm):
        violations.append("census does not match the fixpoint count")
    for l in range(1, p):
        chain = cat.chains.get(l, ())
        sc = sum(1 for lam in chain if cat.record(lam).self_conjugate)
        sm = sum(1 for lam in chain if cat.record(lam).self_mullineux)
        even = len(chain) % 2 == 0
        if (sc, sm) != ((0, 1) if even else (1, 0)):
            violations.append(f"parity rule fails in class {l}")
    for key in ("0+", "0-"):
        chain = cat.chains.get(key, ())
        if any(cat.record(lam).self_conjugate or cat.record(lam).self_mullineux
               for lam in chain):
            violations.append(f"fixpoint inside class {key}")
    for key, chain in cat.chains.items():
        if not chain:
            continue
        if cat.record(chain[0]).regular:
            violations.append(f"chain {key} minimum is regular")
        if any(not cat.record(lam).regular for lam in chain[1:]):
            violations.append(f"chain {key} has a singular non-minimum")
    return Report(not violations, tuple(violations))


def _check_partial_routes(cat: BlockCatalog) -> Report:
    violations = []
    for r in cat.records:
        if r.ceil is None:
            continue
        via = cat.partial_via_pyramid(r.ceil.i, r.ceil.j)
        if via != r.partial:
            violations.append(
                f"routes to the value disagree at {format_partition(r.partition)}"
            )
    return Report(not violations, tuple(violations))


def _check_pyramid_order(cat: BlockCatalog) -> Report:
    violations = []
    # bottom-row labels are excluded on the left: they can strictly
    # dominate labels further right (see block.left_right_check)
    regs = [r for r in cat.records if r.ceil is not None]
    for a in regs:
        if a.ceil.i == a.ceil.j:
            continue
        for b in regs:
            if a.ceil.column < b.ceil.column:
                if b.partition != a.partition and \
                        cat.dominance_leq(b.partition, a.partition):
                    violations.append(
                        f"pyramid order fails: {format_partition(b.partition)}"
                        f" below {format_partition(a.partition)}"
                    )
    by_label = {(r.ceil.i, r.ceil.j): r.partition for r in regs}
    p = cat.p
    for i in range(1, p):
        for j in range(i, p):
            if i >= p - 1:
                continue
            base = by_label.get((i - 1, j))
            if base is None:
                continue
            for other in (by_label.get((i - 1, j + 1)), by_label.get((i, j))):
                if other is None:
                    continue
                if dominance_cmp(base, other) not in (Dominance.LESS,
                                                      Dominance.EQUAL):
                    violations.append(
                        f"adjacent-column relation fails at ({i},{j})"
                    )
    return Report(not violations, tuple(violations))


def _check_oracle(cat: BlockCatalog) -> Report:
    violations = []
    for lam in cat.regulars:
        if cat.mullineux_block(lam) != mullineux_map(lam, cat.p):
            violations.append(
                f"oracle disagrees with the block map at {format_partition(lam)}"
            )
    return Report(not violations, tuple(violations))


def sweep_self_conjugate(primes, max_core_rank: int,
                         with_oracle: bool = True) -> list[Report]:
    """Reports for every self-conjugate core of every prime, deterministic order."""
    reports = []
    for p in sorted(primes):
        for core in ab.self_conjugate_p_cores_up_to(p, max_core_rank):
            reports.append(check_self_conjugate_block(core, p, with_oracle))
    return reports
