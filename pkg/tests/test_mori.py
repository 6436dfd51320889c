from fractions import Fraction as Q
from math import gcd

import pytest

from antiflip import (
    SMOOTH,
    DomainError,
    ExtremalNbhd,
    Kind,
    PResolution,
    classify,
    divisorial_target,
    family_initial,
    flip,
    hj_evaluate,
    initial_neighborhoods,
    iter_mori,
    mori_sequence,
    presolution_target,
    recognize_wahl,
    reduce,
    reverse,
    usual_flip_step,
    wahl_chain,
)
from antiflip.mori import sequence_display
from oracles import initial_flipping_scan

FOUR_THREE = PResolution.one_sided((2, 1), 3)
FIVE_TWO_TWO = PResolution.one_sided((3, 2), 2)
BARE_FOUR = PResolution(SMOOTH, SMOOTH, 4)

GOLDEN = {
    ((1, 1), (5, 3)): [((1, 1), (5, 3)), ((5, 2), (14, 9)), ((14, 5), (37, 24))],
    ((2, 1), (7, 5)): [((2, 1), (7, 5)), ((7, 2), (19, 14)), ((19, 5), (50, 37))],
    ((2, 1), (4, 3)): [((2, 1), (4, 3)), ((4, 1), (6, 5)), ((6, 1), (8, 7))],
}


def nbhd(w1, w2):
    return ExtremalNbhd(w1, w2)


@pytest.mark.parametrize(
    "pairs, kind, d",
    [
        (((1, 1), (5, 3)), Kind.FLIPPING, 3),
        (((2, 1), (4, 3)), Kind.DIVISORIAL, 2),
        (((1, 1), (4, 1)), Kind.FLIPPING, 1),
    ],
)
def test_classify_examples(pairs, kind, d):
    e = nbhd(*pairs)
    assert classify(e) is kind
    assert e.delta == d


def test_classify_non_initial_member():
    e = ExtremalNbhd((5, 2), (14, 9))
    assert e.delta == 3
    assert classify(e) is Kind.NON_INITIAL
    with pytest.raises(DomainError):
        mori_sequence(e, 2)


@pytest.mark.parametrize(
    "pairs",
    [((1, 1), (1, 1)), ((5, 3), (1, 1)), ((5, 2), (3, 1)), ((2, 1), (3, 1))],
)
def test_rejects_invalid_neighborhoods(pairs):
    # both smooth; smooth w2; m2 < m1; delta = 3*1 + 2*1 - 6 <= 0
    with pytest.raises(DomainError):
        nbhd(*pairs)


@pytest.mark.parametrize("start", list(GOLDEN))
def test_golden_sequences(start):
    steps = mori_sequence(nbhd(*start), 3)
    assert [s.pairs for s in steps] == GOLDEN[start]
    assert [s.index for s in steps] == [1, 2, 3]


def test_delta_one_sequence_terminates():
    steps = mori_sequence(nbhd((1, 1), (4, 1)), 10)
    assert [s.pairs for s in steps] == [((1, 1), (4, 1)), ((4, 3), (3, 1))]
    # the second member matches the closed form for delta = 1
    first = steps[0]
    m3 = first.d_next - first.d
    assert steps[1].pairs[1] == (m3, m3 + first.c - first.c_next)


def test_mori_sequence_count():
    e = nbhd((1, 1), (5, 3))
    assert mori_sequence(e, 0) == []
    assert len(mori_sequence(e, 57)) == 57
    with pytest.raises(DomainError):
        mori_sequence(e, -1)


def test_printed_sequence_strings():
    assert sequence_display(mori_sequence(nbhd((1, 1), (5, 3)), 3)) == (
        "[3,7,5,2,2,2,2,3,2]−[3,7,2,2,3,2]−[3,5,2]−∅"
    )
    assert sequence_display(mori_sequence(nbhd((2, 1), (7, 5)), 3)) == (
        "[4,7,5,2,2,2,2,3,2,2]−[4,7,2,2,3,2,2]−[4,5,2,2]−[4]"
    )
    assert sequence_display(mori_sequence(nbhd((1, 1), (4, 1)), 5)) == "[2,5]−[2,2,6]−∅"
    assert sequence_display(mori_sequence(nbhd((2, 1), (4, 3)), 3)) == (
        "[10,2,2,2,2,2,2]−[8,2,2,2,2]−[6,2,2]−[4]"
    )


@pytest.mark.parametrize(
    "pairs, text",
    [
        (((5, 2), (14, 9)), "[3,7,2,2,3,2]−[3,5,2]"),
        (((7, 2), (19, 14)), "[4,7,2,2,3,2,2]−[4,5,2,2]"),
        (((1, 1), (4, 1)), "[2,2,6]−∅"),
    ],
)
def test_display_examples(pairs, text):
    assert ExtremalNbhd(*pairs, member=True).display() == text


def test_recursion_sanity_on_golden_sequences():
    for start in GOLDEN:
        e = nbhd(*start)
        g = gcd(e.w1.m, e.w2.m)
        steps = mori_sequence(e, 40)
        assert len(steps) == 40
        for s in steps:
            assert s.nbhd.delta == e.delta
            assert gcd(s.d, s.d_next) == g
            assert s.d_next > s.d
            if s.index >= 2:
                assert 0 < s.c < s.d


def test_kc_is_negative_and_small():
    for start in [*GOLDEN, ((1, 1), (4, 1))]:
        for s in mori_sequence(nbhd(*start), 6):
            e = s.nbhd
            assert e.canonical_degree == Q(-e.delta, e.w1.m * e.w2.m)
            assert e.canonical_degree < 0
            assert (abs(e.canonical_degree) < 1) == (e.delta < e.w1.m * e.w2.m)


def test_to_dict_schema():
    assert nbhd((1, 1), (5, 3)).to_dict() == {
        "pairs": [[1, 1], [5, 3]],
        "delta": 3,
        "kind": "flipping",
        "display": "[3,5,2]−∅",
    }


@pytest.mark.parametrize("start", [((1, 1), (5, 3)), ((2, 1), (7, 5))])
def test_golden_flip(start):
    p = flip(nbhd(*start))
    assert p == FOUR_THREE
    assert {p.w1p, p.w2p} == {(2, 1), SMOOTH}
    assert (p.c, p.delta) == (3, 3)
    assert p.display() == "[4]−3−∅"
    assert p.short() == "[4]−3"


def test_flip_of_two_smooth_sides():
    assert flip(nbhd((1, 1), (3, 2))) == BARE_FOUR


def test_flip_rejects_divisorial():
    with pytest.raises(DomainError):
        flip(nbhd((2, 1), (4, 3)))


def test_flip_of_later_members():
    for s in mori_sequence(nbhd((1, 1), (5, 3)), 12):
        assert flip(s.nbhd) == FOUR_THREE
        start, index = family_initial(s.nbhd)
        assert (start, index) == (nbhd((1, 1), (5, 3)), s.index)


def test_initial_neighborhoods_examples():
    assert set(initial_neighborhoods(FOUR_THREE)) == {nbhd((1, 1), (5, 3)), nbhd((2, 1), (7, 5))}
    found = initial_neighborhoods(FIVE_TWO_TWO)
    assert set(found) == {nbhd((1, 1), (4, 1)), nbhd((3, 1), (4, 3))}
    # the second family is the second member of the first
    second = mori_sequence(nbhd((1, 1), (4, 1)), 2)[1].nbhd
    assert {second.w1, second.w2} == {(3, 1), (4, 3)}
    assert initial_neighborhoods(BARE_FOUR) == [nbhd((1, 1), (3, 2))]


def test_bare_minus_two_curve_is_not_extremal():
    with pytest.raises(DomainError, match="delta = 0"):
        PResolution(SMOOTH, SMOOTH, 2)


@pytest.mark.parametrize(
    "p, target",
    [(FOUR_THREE, (11, 3)), (FIVE_TWO_TWO, (13, 3)), (BARE_FOUR, (4, 1))],
)
def test_presolution_target_examples(p, target):
    assert presolution_target(p) == target


def test_presolution_display():
    assert FIVE_TWO_TWO.display() == "[5,2]−2−∅"
    assert BARE_FOUR.display() == "∅−4−∅"
    assert FOUR_THREE.to_dict()["target"] == [11, 3]


def test_divisorial_examples():
    for w1, w2 in [((2, 1), (4, 3)), ((3, 1), (9, 7)), ((3, 2), (9, 4))]:
        e = nbhd(w1, w2)
        assert classify(e) is Kind.DIVISORIAL
        assert divisorial_target(e) == w1
    for s in mori_sequence(nbhd((2, 1), (4, 3)), 6):
        assert divisorial_target(s.nbhd) == (2, 1)
    with pytest.raises(DomainError):
        divisorial_target(nbhd((1, 1), (5, 3)))


def test_divisorial_shape_always_holds():
    # delta*m1 = m2 forces m1 = delta for coprime pairs, so classify never trips its shape check
    from oracles import coprime_pairs

    pairs = [(1, 1), *coprime_pairs(40)]
    divisorial = 0
    for w1 in pairs:
        for w2 in pairs[1:]:
            if w2[0] <= w1[0]:
                continue
            d = w2[0] * w1[1] + w1[0] * w2[1] - w1[0] * w2[0]
            if d >= 1 and d * w1[0] == w2[0]:
                assert classify(nbhd(w1, w2)) is Kind.DIVISORIAL
                divisorial += 1
    assert divisorial == sum(1 for m in range(2, 7) for a in range(1, m) if gcd(m, a) == 1)


@pytest.mark.parametrize(
    "w, step",
    [((5, 3), (3, (2, 1))), ((2, 1), (3, SMOOTH)), ((5, 4), (6, SMOOTH)), ((3, 2), (4, SMOOTH))],
)
def test_usual_flip_step_examples(w, step):
    assert usual_flip_step(w) == step


def test_usual_flip_step_rejects_smooth():
    with pytest.raises(DomainError):
        usual_flip_step(SMOOTH)


def test_inversion_and_geometric_check():
    # flip against an independent computation: the contracted chain
    # reverse(w2) + [1] + w1 is the singularity Y of the flip
    for (m1, a1), (m2, a2), d in initial_flipping_scan(60):
        e = nbhd((m1, a1), (m2, a2))
        assert e.delta == d and classify(e) is Kind.FLIPPING
        p = flip(e)
        assert p.delta == d
        assert e in initial_neighborhoods(p)
        left = () if (m1, a1) == (1, 1) else wahl_chain((m1, a1))
        n, a = hj_evaluate(reduce((*reverse(wahl_chain((m2, a2))), 1, *left)))
        target = presolution_target(p)
        assert target.num == n and target.den in (a, pow(a, -1, n))


def test_inversion_exhaustive_200():
    count = 0
    for w1, w2, _ in initial_flipping_scan(200):
        e = nbhd(w1, w2)
        assert e in initial_neighborhoods(flip(e))
        count += 1
    assert count == 45303


def test_flip_closure_delta_up_to_six():
    families = 0
    for w1, w2, d in initial_flipping_scan(500, max_delta=6):
        e = nbhd(w1, w2)
        p = flip(e)
        families += 1
        for s in iter_mori(e):
            if s.nbhd.w2.m > 500:
                break
            assert flip(s.nbhd) == p
    assert families == 137974


def test_delta_one_structure():
    seen = 0
    for m in range(2, 31):
        for a in range(1, m):
            if gcd(m, a) != 1:
                continue
            for c in range(1, 6):
                try:
                    p = PResolution.one_sided((m, a), c)
                except DomainError:
                    continue
                if p.delta != 1:
                    continue
                seen += 1
                assert (c, a) == (2, m - 1)
                assert p.short() == "[" + ",".join(map(str, [m + 2] + [2] * (m - 2))) + "]−2"
                inits = initial_neighborhoods(p)
                for e in inits:
                    assert len(list(iter_mori(e))) == 2
                smooth_start = next(e for e in inits if e.w1 == SMOOTH)
                twos = lambda k: [2] * k
                expected = "−".join(
                    [
                        "[" + ",".join(map(str, twos(m - 2) + [m + 2])) + "]",
                        "[" + ",".join(map(str, twos(m - 1) + [m + 3])) + "]",
                        "∅",
                    ]
                )
                assert sequence_display(mori_sequence(smooth_start, 2)) == expected
    assert seen == 29


def test_recognized_members_of_divisorial_family():
    chains = [(4,), (6, 2, 2), (8, 2, 2, 2, 2), (10, 2, 2, 2, 2, 2, 2)]
    assert [recognize_wahl(c) for c in chains] == [(2, 1), (4, 1), (6, 1), (8, 1)]


def test_long_sequence_matches_plain_recursion():
    # independent iteration of d(i+1) = 3 d(i) - d(i-1) from d(1) = 1, d(2) = 5
    ds = [1, 5]
    while len(ds) < 201:
        ds.append(3 * ds[-1] - ds[-2])
    steps = mori_sequence(nbhd((1, 1), (5, 3)), 200)
    assert [s.d for s in steps] == ds[:200]
    assert steps[-1].d_next == ds[200]
    assert len(str(ds[199])) == 84
