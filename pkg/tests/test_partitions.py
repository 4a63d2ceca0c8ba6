from collections import Counter

import pytest
from hypothesis import given, strategies as st

from blocklab.partitions import (
    Dominance,
    conjugate,
    count_partitions,
    diagonal_hook_lengths,
    dominance_cmp,
    enumerate_partitions,
    format_partition,
    hooks,
    is_bg_partition,
    is_p_core,
    is_p_regular,
    lex_cmp,
    p_core_weight,
    p_weight_by_hooks,
    parse_partition,
    partition,
    remove_rim_hook,
    render_young,
    self_conjugate_partitions,
)


@st.composite
def partitions_strategy(draw, max_n=30):
    n = draw(st.integers(min_value=0, max_value=max_n))
    counts = Counter(draw(st.lists(st.integers(min_value=1, max_value=max(n, 1)),
                                   min_size=0, max_size=n)))
    parts = sorted(counts.elements(), reverse=True)
    while sum(parts) > n and parts:
        parts.pop()
    return tuple(parts)


def all_partitions_up_to(n):
    for m in range(n + 1):
        yield from enumerate_partitions(m)


def test_partition_validation():
    assert partition([4, 2, 2, 1, 0, 0]) == (4, 2, 2, 1)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([2, 3])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_conjugate_known_values():
    assert conjugate((4, 2, 2, 1)) == (4, 3, 1, 1)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate(()) == ()


def test_conjugate_involution_exhaustive():
    for lam in all_partitions_up_to(12):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)


@given(partitions_strategy())
def test_conjugate_involution_random(lam):
    assert conjugate(conjugate(lam)) == lam


def test_dominance_known_values():
    assert dominance_cmp((1,) * 6, (6,)) == Dominance.LESS
    assert dominance_cmp((3, 3), (4, 1, 1)) == Dominance.INCOMPARABLE
    assert dominance_cmp((2, 2), (2, 2)) == Dominance.EQUAL
    assert dominance_cmp((4, 1, 1), (3, 3)) == Dominance.INCOMPARABLE
    assert dominance_cmp((6,), (1,) * 6) == Dominance.GREATER


def test_dominance_rank_mismatch():
    with pytest.raises(ValueError):
        dominance_cmp((2, 1), (2, 2))


def test_dominance_conjugation_reverses():
    flip = {
        Dominance.LESS: Dominance.GREATER,
        Dominance.GREATER: Dominance.LESS,
        Dominance.EQUAL: Dominance.EQUAL,
        Dominance.INCOMPARABLE: Dominance.INCOMPARABLE,
    }
    for n in range(13):
        pars = enumerate_partitions(n)
        for lam in pars:
            for mu in pars:
                assert dominance_cmp(conjugate(lam), conjugate(mu)) == \
                    flip[dominance_cmp(lam, mu)]


def test_lex_known_values():
    assert lex_cmp((3, 1), (2, 2)) == 1
    assert lex_cmp((4,), (4,)) == 0
    assert lex_cmp((2, 2), (3, 1)) == -1


def test_lex_refines_dominance():
    for n in range(13):
        pars = enumerate_partitions(n)
        for lam in pars:
            for mu in pars:
                if dominance_cmp(lam, mu) == Dominance.LESS:
                    assert lex_cmp(lam, mu) == -1


def test_hooks_known_values():
    by_node = {(h.row, h.col): h for h in hooks((5, 4, 3, 1))}
    h = by_node[(1, 2)]
    assert (h.length, h.arm, h.leg) == (6, 3, 2)
    assert [h.length for h in hooks((1,))] == [1]
    assert sorted(h.length for h in hooks((2, 2))) == [1, 2, 2, 3]


def test_hooks_arm_leg_sum():
    for lam in all_partitions_up_to(10):
        for h in hooks(lam):
            assert h.length == h.arm + h.leg + 1


def test_is_p_regular():
    assert is_p_regular((4, 2, 2, 1), 3)
    assert not is_p_regular((1, 1, 1), 3)
    assert is_p_regular((), 5)
    with pytest.raises(ValueError):
        is_p_regular((4, 2, 2, 1), 2)


def test_remove_rim_hook_known():
    # hand value: beta numbers (4,2,0,-3) lose 6 from the first entry
    assert remove_rim_hook((5, 4, 3, 1), 1, 2) == (3, 2, 1, 1)
    assert remove_rim_hook((1,), 1, 1) == ()
    with pytest.raises(ValueError):
        remove_rim_hook((2, 1), 1, 3)


def test_remove_rim_hook_rank_drop_exhaustive():
    for lam in enumerate_partitions(9):
        for h in hooks(lam):
            out = remove_rim_hook(lam, h.row, h.col)
            assert sum(out) == sum(lam) - h.length


def test_p_core_weight_known():
    # all three of the stated hook lengths 10, 5, 5 are multiples of 5
    assert p_core_weight((4, 3, 3, 3, 2, 1, 1), 5) == ((1, 1), 3)
    assert p_core_weight((2, 2), 5) == ((2, 2), 0)
    assert p_core_weight((3, 1, 1, 1, 1, 1), 5) == ((3,), 1)


def test_p_core_weight_properties():
    for p in (3, 5, 7):
        for lam in all_partitions_up_to(12):
            core, w = p_core_weight(lam, p)
            assert w == p_weight_by_hooks(lam, p)
            assert sum(core) == sum(lam) - w * p
            assert is_p_core(core, p)


def test_bg_partition():
    assert is_bg_partition((6, 3, 2, 1, 1, 1), 5)
    assert not is_bg_partition((2, 1), 3)  # diagonal hook of length 3
    assert not is_bg_partition((3, 1), 5)  # not self-conjugate
    assert is_bg_partition((), 3)


def test_enumerate_partitions():
    assert enumerate_partitions(0) == [()]
    four = enumerate_partitions(4)
    assert len(four) == 5
    assert four[0] == (4,) and four[-1] == (1, 1, 1, 1)
    assert four == sorted(four, reverse=True)
    assert len(enumerate_partitions(10)) == 42
    with pytest.raises(ValueError):
        enumerate_partitions(50, bound=40)


def test_count_partitions_oracle():
    for n in range(15):
        assert count_partitions(n) == len(enumerate_partitions(n))


def test_self_conjugate_partitions():
    for n in range(14):
        expected = [lam for lam in enumerate_partitions(n) if conjugate(lam) == lam]
        got = self_conjugate_partitions(n)
        assert sorted(got) == sorted(expected)
        for lam in got:
            dh = diagonal_hook_lengths(lam)
            assert sum(dh) == n
            assert all(x % 2 == 1 for x in dh)


def test_text_roundtrip():
    assert format_partition((7, 2, 1, 1, 1, 1, 1)) == "(7,2,1^5)"
    assert format_partition(()) == "()"
    assert parse_partition("4,2,2,1") == (4, 2, 2, 1)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        parse_partition("2,3")
    assert render_young((3, 1)) == "###\n#"
