"""Order kernel: closure, antisymmetry, meets/joins against brute force."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multlat import (
    CycleError,
    NotALattice,
    build_order,
    lattice_from_pairs,
    validate_lattice,
)
from multlat.corpus import KITE_COVERS
from multlat.order import iter_bits, mask_of


def brute_leq(size, pairs):
    """Reference reflexive-transitive closure as a set of pairs."""
    rel = {(i, i) for i in range(size)} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def brute_glb(rel, size, x, y):
    lower = [z for z in range(size) if (z, x) in rel and (z, y) in rel]
    for m in lower:
        if all((z, m) in rel for z in lower):
            return m
    return None


def brute_lub(rel, size, x, y):
    upper = [z for z in range(size) if (x, z) in rel and (y, z) in rel]
    for m in upper:
        if all((m, z) in rel for z in upper):
            return m
    return None


def test_singleton_order():
    po = build_order(1, [])
    assert po.size == 1 and po.leq(0, 0)
    L = validate_lattice(po)
    assert L.bottom == L.top == 0


def test_kite_order_matches_brute_closure():
    po = build_order(6, KITE_COVERS)
    rel = brute_leq(6, KITE_COVERS)
    for i in range(6):
        for j in range(6):
            assert po.leq(i, j) == ((i, j) in rel)


def test_two_cycle_raises():
    with pytest.raises(CycleError):
        build_order(2, [(0, 1), (1, 0)])


def test_longer_cycle_raises():
    with pytest.raises(CycleError):
        build_order(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def test_out_of_range_pair():
    with pytest.raises(IndexError):
        build_order(3, [(0, 3)])


def test_chain_is_a_lattice():
    L = lattice_from_pairs(3, [(0, 1), (1, 2)])
    assert L.bottom == 0 and L.top == 2
    assert L.meet(0, 2) == 0 and L.join(0, 2) == 2


def test_kite_is_a_lattice(kite):
    L = kite.lattice
    assert L.label(L.bottom) if hasattr(L, "label") else True
    assert L.labels[L.bottom] == "0" and L.labels[L.top] == "1"
    b, c, d = L.index_of("b"), L.index_of("c"), L.index_of("d")
    assert L.meet(b, c) == L.index_of("0")
    assert L.join(b, c) == d


def test_two_maximal_no_top_is_not_a_lattice():
    # x, y below both u and v; u, v have no upper bound.
    with pytest.raises(NotALattice) as err:
        lattice_from_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    x, y = err.value.witness
    rel = brute_leq(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert brute_glb(rel, 4, x, y) is None or brute_lub(rel, 4, x, y) is None


def test_meet_join_tables_match_brute_force(kite, z12):
    for M in (kite, z12):
        L = M.lattice
        pairs = [
            (i, j) for i in range(L.size) for j in range(L.size) if L.leq(i, j)
        ]
        rel = brute_leq(L.size, pairs)
        for x in range(L.size):
            for y in range(L.size):
                assert L.meet(x, y) == brute_glb(rel, L.size, x, y)
                assert L.join(x, y) == brute_lub(rel, L.size, x, y)


def test_z12_join_meet_examples(z12):
    L = z12.lattice
    i4, i6, i2, i0 = (L.index_of(s) for s in ("(4)", "(6)", "(2)", "(0)"))
    assert L.join(i4, i6) == i2   # gcd(4, 6) = 2
    assert L.meet(i4, i6) == i0   # lcm(4, 6) = 12, the zero ideal


def test_big_ops_empty_conventions(kite):
    L = kite.lattice
    assert L.big_meet([]) == L.top
    assert L.big_join([]) == L.bottom


def test_down_sets(kite):
    L = kite.lattice
    assert L.down_set(L.bottom) == {L.bottom}
    d = L.index_of("d")
    assert {L.labels[i] for i in L.down_set(d)} == {"0", "a", "b", "c", "d"}
    assert L.down_set(L.top) == set(range(L.size))


def test_join_with_bottom_is_identity(kite, z12):
    for M in (kite, z12):
        L = M.lattice
        for x in range(L.size):
            assert L.join(x, L.bottom) == x
            assert L.meet(x, L.top) == x


def test_order_reconstruction(kite, z12):
    for M in (kite, z12):
        L = M.lattice
        for x in range(L.size):
            for y in range(L.size):
                leq = L.leq(x, y)
                assert leq == (L.meet(x, y) == x)
                assert leq == (L.join(x, y) == y)


def test_big_join_of_down_set_is_identity(kite, z12):
    for M in (kite, z12):
        L = M.lattice
        for a in range(L.size):
            assert L.big_join(L.down_set(a)) == a


def test_meet_join_bound_properties(kite):
    L = kite.lattice
    for x in range(L.size):
        for y in range(L.size):
            m, j = L.meet(x, y), L.join(x, y)
            assert L.leq(m, x) and L.leq(m, y)
            assert L.leq(x, j) and L.leq(y, j)
            for z in range(L.size):
                if L.leq(z, x) and L.leq(z, y):
                    assert L.leq(z, m)
                if L.leq(x, z) and L.leq(y, z):
                    assert L.leq(j, z)


def test_covers_transitive_reduction(z12):
    L = z12.lattice
    covers = set(L.covers())
    assert (L.index_of("(0)"), L.index_of("(4)")) in covers
    assert (L.index_of("(0)"), L.index_of("(2)")) not in covers  # via (4) or (6)
    for x, y in covers:
        assert L.lt(x, y)
        assert not any(L.lt(x, z) and L.lt(z, y) for z in range(L.size))


def test_labels_validation():
    with pytest.raises(ValueError):
        lattice_from_pairs(2, [(0, 1)], ["a"])
    with pytest.raises(ValueError):
        lattice_from_pairs(2, [(0, 1)], ["a", "a"])


def test_mask_helpers():
    assert mask_of([0, 2, 5]) == 0b100101
    assert list(iter_bits(0b100101)) == [0, 2, 5]


@given(
    size=st.integers(1, 7),
    pairs=st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=18),
)
@settings(max_examples=200)
def test_build_order_closure_or_cycle(size, pairs):
    pairs = [(a % size, b % size) for a, b in pairs]
    try:
        po = build_order(size, pairs)
    except CycleError:
        rel = brute_leq(size, pairs)
        assert any((a, b) in rel and (b, a) in rel and a != b
                   for a in range(size) for b in range(size))
        return
    rel = brute_leq(size, pairs)
    for i in range(size):
        for j in range(size):
            assert po.leq(i, j) == ((i, j) in rel)
    # Idempotence: rebuilding from the closure gives the same order.
    again = build_order(size, [(i, j) for (i, j) in rel])
    assert again.up == po.up
