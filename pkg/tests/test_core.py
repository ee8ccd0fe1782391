import itertools

import pytest

from trivote.core import (
    Assembly,
    Coalition,
    opposite,
    permute_order,
    permute_profile,
    pred,
    prefers,
    profile_of_order,
    profile_order,
    succ,
)

TABLE = {
    1: ("a", "b", "c"),
    2: ("a", "c", "b"),
    3: ("c", "a", "b"),
    4: ("c", "b", "a"),
    5: ("b", "c", "a"),
    6: ("b", "a", "c"),
}


def test_profile_order_matches_fixed_table():
    for p, order in TABLE.items():
        assert profile_order(p) == order


def test_profile_order_rejects_bad_labels():
    for bad in (0, 7, -1, "1"):
        with pytest.raises(ValueError):
            profile_order(bad)


def test_profile_of_order_roundtrip():
    for p in range(1, 7):
        assert profile_of_order(profile_order(p)) == p
    with pytest.raises(ValueError):
        profile_of_order(("a", "b", "b"))


def test_prefers_examples():
    assert prefers(3, "a", "b") is True
    assert prefers(5, "a", "c") is False
    assert prefers(1, "a", "c") and prefers(1, "b", "c")


def test_prefers_rejects_reflexive_comparison():
    with pytest.raises(ValueError, match="reflexive"):
        prefers(2, "b", "b")


def test_prefers_total_and_antisymmetric():
    for p in range(1, 7):
        for x, y in itertools.permutations("abc", 2):
            assert prefers(p, x, y) != prefers(p, y, x)


def test_succ_and_pred_wrap():
    assert succ(6) == 1
    assert pred(1) == 6
    for p in range(1, 7):
        assert pred(succ(p)) == p


def test_opposite_examples():
    assert opposite(1) == 4
    assert opposite(6) == 3
    assert profile_order(4) == tuple(reversed(profile_order(1)))
    assert profile_order(3) == tuple(reversed(profile_order(6)))


def test_opposite_is_involution():
    for p in range(1, 7):
        assert opposite(opposite(p)) == p


def test_opposite_reverses_every_order():
    for p in range(1, 7):
        assert profile_order(opposite(p)) == tuple(reversed(profile_order(p)))


def test_adjacent_labels_swap_top_two_or_bottom_two():
    for p in range(1, 7):
        cur, nxt = profile_order(p), profile_order(succ(p))
        top_swap = nxt == (cur[1], cur[0], cur[2])
        bottom_swap = nxt == (cur[0], cur[2], cur[1])
        assert top_swap != bottom_swap, (p, cur, nxt)


def test_adjacent_labels_share_first_or_last():
    for p in range(1, 7):
        cur, nxt = profile_order(p), profile_order(succ(p))
        assert cur[0] == nxt[0] or cur[2] == nxt[2]


def test_same_middle_candidate_iff_labels_opposite():
    for p, q in itertools.combinations(range(1, 7), 2):
        same_middle = profile_order(p)[1] == profile_order(q)[1]
        assert same_middle == (q == opposite(p)), (p, q)


def test_permute_order_and_profile():
    swap_ab = {"a": "b", "b": "a", "c": "c"}
    assert permute_order(("a", "b", "c"), swap_ab) == ("b", "a", "c")
    assert permute_profile(1, swap_ab) == 6
    with pytest.raises(ValueError):
        permute_order(("a", "b", "c"), {"a": "a", "b": "a", "c": "c"})


def test_permute_profile_is_bijective_for_every_renaming():
    for perm in itertools.permutations("abc"):
        mapping = dict(zip("abc", perm))
        image = {permute_profile(p, mapping) for p in range(1, 7)}
        assert image == set(range(1, 7))


def test_assembly_bounds():
    assert Assembly(1).n == 1
    assert Assembly(64).full_mask == (1 << 64) - 1
    for bad in (0, -3, 65):
        with pytest.raises(ValueError):
            Assembly(bad)


def test_coalition_membership_and_size():
    k = Coalition.from_members(5, [0, 2, 4])
    assert list(k) == [0, 2, 4]
    assert len(k) == 3
    assert 2 in k and 1 not in k and 7 not in k


def test_coalition_rejects_out_of_range_members():
    with pytest.raises(ValueError):
        Coalition.from_members(3, [3])
    with pytest.raises(ValueError):
        Coalition(0b1000, 3)


def test_complement_examples():
    assembly = Assembly(3)
    assert assembly.full_coalition().complement() == assembly.empty_coalition()
    assert Coalition.from_members(3, [0, 2]).complement() == Coalition.from_members(
        3, [1]
    )


def test_complement_is_involution_and_partitions():
    for n in (1, 3, 6):
        for mask in range(1 << n):
            k = Coalition(mask, n)
            assert k.complement().complement() == k
            assert (k & k.complement()).mask == 0
            assert (k | k.complement()).mask == (1 << n) - 1


def test_coalition_set_operations_check_assembly():
    with pytest.raises(ValueError, match="mismatch"):
        Coalition(0b1, 2).union(Coalition(0b1, 3))
