import random

import pytest

from blocklab.block import enumerate_block
from blocklab.decomp import (
    block_matrix,
    d43_reference,
    decomp_matrix,
    decomp_number,
    full_matrix,
    is_lower_unitriangular,
    matrix_csv,
    matrix_json,
    render_matrix,
    submatrix,
    weight1_members,
)
from blocklab.mullineux import mullineux
from blocklab.partitions import (
    Dominance,
    conjugate,
    dominance_cmp,
    dominates_or_equal,
    is_p_regular,
)


@pytest.fixture(scope="module")
def b22():
    return enumerate_block((2, 2), 5)


@pytest.fixture(scope="module")
def m22(b22):
    return decomp_matrix(b22)


def test_d43_reference_golden():
    m = d43_reference()
    assert m.row_labels == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(m.col_labels) == 4
    assert m.row((2, 2)) == (1, 0, 1, 0)
    assert m.row((1, 1, 1, 1)) == (0, 0, 1, 0)


def test_full_matrix_reproduces_d43():
    got = full_matrix(4, 3)
    ref = d43_reference()
    assert got.row_labels == ref.row_labels
    assert got.col_labels == ref.col_labels
    assert got.entries == ref.entries


def test_block_matrix_weights():
    one = block_matrix((3, 1), 3, 0)
    assert one.entries == ((1,),)
    w1 = block_matrix((1,), 3, 1)
    assert w1.shape == (3, 2)
    with pytest.raises(ValueError):
        block_matrix((1,), 3, 3)


def test_weight1_members_block_of_8():
    members = weight1_members((3,), 5)
    assert sorted(members, reverse=True) == [
        (8,), (4, 4), (3, 3, 1, 1), (3, 2, 1, 1, 1), (3, 1, 1, 1, 1, 1)]


def test_weight1_column_pattern():
    m = block_matrix((1,), 3, 1)
    chain = sorted(m.row_labels)  # ascending dominance here
    for j in range(1, len(chain)):
        col = chain[j]
        support = [lam for lam in m.row_labels if m.entry(lam, col) == 1]
        assert sorted(support) == sorted([chain[j], chain[j - 1]])


def test_matrix_shape_b22(m22):
    assert m22.shape == (20, 14)


def test_diagonal_and_dominance(m22):
    for mu in m22.col_labels:
        assert m22.entry(mu, mu) == 1
    for lam in m22.row_labels:
        for mu in m22.col_labels:
            if m22.entry(lam, mu):
                assert dominates_or_equal(lam, mu)


def test_nu_mu_entries(b22, m22):
    for nu, mu in zip(b22.nu, b22.mu):
        assert m22.entry(nu, mu) == 1


def test_lastm_submatrix_golden():
    cat = enumerate_block((7, 2, 1, 1, 1, 1, 1), 11)
    m = decomp_matrix(cat)
    sub = submatrix(m, cat.nu, cat.mu)
    assert sub.entries == (
        (1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0),
        (0, 1, 1, 0, 0),
        (0, 0, 0, 1, 1),
        (0, 0, 0, 0, 1),
    )


def test_mullineux_symmetry(b22, m22):
    for lam in m22.row_labels:
        for mu in m22.col_labels:
            assert m22.entry(lam, mu) == \
                m22.entry(conjugate(lam), b22.mullineux_block(mu))


def test_mullineux_symmetry_non_self_conjugate():
    cat = enumerate_block((1, 1, 1), 5)
    conj_cat = enumerate_block((3,), 5)
    m = decomp_matrix(cat)
    cm = decomp_matrix(conj_cat)
    for lam in m.row_labels:
        for mu in m.col_labels:
            assert m.entry(lam, mu) == cm.entry(conjugate(lam), mullineux(mu, 5))


def test_unitriangular_under_two_refinements(m22):
    regs = list(m22.col_labels)

    def check(order):
        pairing = {lam: lam for lam in order}
        sub = submatrix(m22, order, m22.col_labels)
        assert is_lower_unitriangular(sub, pairing)

    check(sorted(regs, reverse=True))  # lexicographic
    # a random linear extension of dominance: repeatedly pick a maximal member
    rng = random.Random(20240811)
    remaining = set(regs)
    order = []
    while remaining:
        maximal = sorted(
            x for x in remaining
            if not any(dominance_cmp(x, y) == Dominance.LESS for y in remaining)
        )
        order.append(rng.choice(maximal))
        remaining.remove(order[-1])
    check(order)


def test_column_support_structure(b22, m22):
    for mu in m22.col_labels:
        rec_mu = b22.record(mu)
        mconj = conjugate(b22.mullineux_block(mu))
        support = [lam for lam in m22.row_labels if m22.entry(lam, mu)]
        assert mu in support and mconj in support
        assert 1 <= len(support) <= len(m22.row_labels)
        for lam in support:
            if lam in (mu, mconj):
                continue
            assert abs(b22.record(lam).partial - rec_mu.partial) == 1
            assert dominates_or_equal(mconj, lam) and dominates_or_equal(lam, mu)
        # within one class the support is a contiguous run of the chain
        for chain in b22.chains.values():
            hits = [k for k, lam in enumerate(chain) if lam in support]
            if hits:
                assert hits == list(range(min(hits), max(hits) + 1))


def test_decomp_number_requires_regular_column(b22):
    with pytest.raises(ValueError):
        decomp_number(b22, (12, 2), (2, 2) + (1,) * 10)


def test_submatrix_edges(m22):
    square = submatrix(m22, m22.col_labels, m22.col_labels)
    assert square.shape == (14, 14)
    empty = submatrix(m22, [], m22.col_labels)
    assert empty.shape == (0, 14)
    with pytest.raises(ValueError):
        submatrix(m22, [(9, 9)], m22.col_labels)


def test_full_matrix_unitriangular_rows():
    for n, p in ((6, 3), (8, 5), (7, 7)):
        m = full_matrix(n, p)
        regs = [lam for lam in m.row_labels if is_p_regular(lam, p)]
        assert list(m.col_labels) == regs
        sub = submatrix(m, regs, m.col_labels)
        assert is_lower_unitriangular(sub, {lam: lam for lam in regs})


def test_render_and_csv(m22):
    text = render_matrix(m22)
    assert text.splitlines()[0].lstrip().startswith("(12,2)")
    csv = matrix_csv(m22)
    assert csv.splitlines()[0].startswith(",12+2,")
    payload = matrix_json(m22)
    assert payload["rows"][0] == [12, 2]
    assert payload["entries"][0][0] in (0, 1)
