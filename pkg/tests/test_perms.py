from itertools import permutations

import pytest

from vincular.perms import (
    DashedPattern,
    avoids,
    label,
    ltr_minima,
    occurrences,
    order_isomorphic,
    parse_dashed_pattern,
    parse_permutation,
    rtl_maxima,
    standard_reduction,
)


def test_parse_permutation_accepts_commas_and_whitespace():
    assert parse_permutation("3,1,2") == (3, 1, 2)
    assert parse_permutation("3 1 2") == (3, 1, 2)
    assert parse_permutation(" 3, 1 ,2 ") == (3, 1, 2)
    assert parse_permutation("") == ()


def test_parse_permutation_rejects_garbage():
    with pytest.raises(ValueError):
        parse_permutation("1,2,2")
    with pytest.raises(ValueError):
        parse_permutation("1,3")
    with pytest.raises(ValueError):
        parse_permutation("0,1")
    with pytest.raises(ValueError):
        parse_permutation("a b")


def test_parse_dashed_pattern_blocks():
    p = parse_dashed_pattern("1-32-4")
    assert p.underlying == (1, 3, 2, 4)
    assert p.adjacency == (False, True, False)
    assert parse_dashed_pattern("31-4-2").adjacency == (True, False, False)
    assert parse_dashed_pattern("1-23-4").underlying == (1, 2, 3, 4)
    # fully classical and fully consecutive extremes
    assert parse_dashed_pattern("1-2-3").adjacency == (False, False)
    assert parse_dashed_pattern("123").adjacency == (True, True)


def test_parse_dashed_pattern_round_trip():
    for text in ("1-32-4", "31-4-2", "123", "1-2-3", "21"):
        assert str(parse_dashed_pattern(text)) == text


def test_parse_dashed_pattern_rejects_garbage():
    with pytest.raises(ValueError):
        parse_dashed_pattern("1--2")
    with pytest.raises(ValueError):
        parse_dashed_pattern("-12")
    with pytest.raises(ValueError):
        parse_dashed_pattern("1-32-5")
    with pytest.raises(ValueError):
        parse_dashed_pattern("10-2")  # 0 is not a single-digit value
    with pytest.raises(ValueError):
        parse_dashed_pattern("")
    with pytest.raises(ValueError):
        DashedPattern((1, 2), (True, True))


def test_order_isomorphic():
    assert order_isomorphic((), ())
    assert order_isomorphic((2, 7, 1), (3, 9, 2))
    assert not order_isomorphic((1, 2, 3), (1, 3, 2))
    assert not order_isomorphic((1, 2), (1, 2, 3))


def test_occurrences_against_definition():
    # every vincular occurrence is a classical one that satisfies the
    # adjacency constraints, checked exhaustively at small sizes
    vinc = parse_dashed_pattern("1-32-4")
    classical = DashedPattern((1, 3, 2, 4), (False, False, False))
    for n in range(7):
        for w in permutations(range(1, n + 1)):
            cls = occurrences(classical, w)
            vin = occurrences(vinc, w)
            assert vin == [t for t in cls if t[2] == t[1] + 1]
            assert vin == sorted(vin)


def test_avoids_matches_occurrences():
    patterns = [parse_dashed_pattern(t) for t in ("1-32-4", "31-4-2", "1-23-4", "132")]
    for n in range(6):
        for w in permutations(range(1, n + 1)):
            for p in patterns:
                assert avoids(p, w) == (not occurrences(p, w))


def test_standard_reduction():
    assert standard_reduction(()) == ()
    assert standard_reduction((8, 4, 6, 2)) == (4, 2, 3, 1)
    assert standard_reduction((5, 9, 14, 10, 12, 0, 2, 7, 13, 6, 11, 1, 3, 8, 4)) == (
        6, 10, 15, 11, 13, 1, 3, 8, 14, 7, 12, 2, 4, 9, 5,
    )
    with pytest.raises(ValueError):
        standard_reduction((1, 1))


def test_extrema_positions():
    w = (8, 4, 6, 1, 7, 5, 2, 3)
    assert rtl_maxima(w) == [1, 5, 6, 8]
    assert [w[p - 1] for p in rtl_maxima(w)] == [8, 7, 5, 3]
    assert ltr_minima(w) == [1, 2, 4]
    assert [w[p - 1] for p in ltr_minima(w)] == [8, 4, 1]
    assert rtl_maxima(()) == []
    assert ltr_minima((1,)) == [1]


def test_label_examples():
    assert label((8, 4, 6, 1, 7, 5, 2, 3)) == 3
    assert label((1,)) == 0
    assert label((2, 1)) == 0
    assert label((1, 2)) == 1
    assert label((1, 3, 2)) == 2
    with pytest.raises(ValueError):
        label(())


def test_label_counts_rtl_maxima_right_of_one():
    for n in range(1, 7):
        for w in permutations(range(1, n + 1)):
            pos1 = w.index(1) + 1
            assert label(w) == sum(1 for p in rtl_maxima(w) if p > pos1)
