import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freeknot import (CROSSED, NESTED, AdjointTriple, ChordDiagram,
                      GapOutOfRange, Move, NotAnR1Site, NotAnR2Site,
                      NotAnR3Site, adjoint_triple, apply_move,
                      enumerate_moves, inverse_move, move_from_json,
                      move_to_json, move_to_text, parse_gauss_code, r1_add,
                      r1_remove, r1_sites, r2_add, r2_remove, r2_sites,
                      r3_apply, r3_sites, rotate_basepoint, serialize)
from support import diagrams

TRIPLE = parse_gauss_code("1 2 1 3 2 3")


class TestR1:
    def test_sites(self):
        assert r1_sites(parse_gauss_code("1 1")) == [(1, 2)]
        assert r1_sites(TRIPLE) == []
        assert r1_sites(parse_gauss_code("1 1 2 2")) == [(1, 2), (3, 4)]

    def test_remove(self):
        assert r1_remove(parse_gauss_code("1 1"), (1, 2)) == ChordDiagram()
        assert serialize(r1_remove(parse_gauss_code("1 2 2 1"), (2, 3))) \
            == "1 1"

    def test_remove_rejects_spanning_chord(self):
        with pytest.raises(NotAnR1Site):
            r1_remove(parse_gauss_code("1 2 1 2"), (1, 3))
        with pytest.raises(NotAnR1Site):
            r1_remove(parse_gauss_code("1 1"), (3, 4))

    def test_add(self):
        assert serialize(r1_add(ChordDiagram(), 0)) == "1 1"
        assert serialize(r1_add(parse_gauss_code("1 1"), 2)) == "1 1 2 2"
        assert serialize(r1_add(parse_gauss_code("1 1"), 1)) == "1 2 2 1"

    def test_add_gap_bounds(self):
        with pytest.raises(GapOutOfRange):
            r1_add(ChordDiagram(), 1)
        with pytest.raises(GapOutOfRange):
            r1_add(parse_gauss_code("1 1"), -1)


class TestR2:
    def test_sites(self):
        assert r2_sites(parse_gauss_code("1 2 1 2")) == [((1, 3), (2, 4))]
        assert r2_sites(parse_gauss_code("1 2 2 1")) == [((1, 4), (2, 3))]
        assert r2_sites(TRIPLE) == []

    def test_remove(self):
        assert r2_remove(parse_gauss_code("1 2 1 2"),
                         ((1, 3), (2, 4))) == ChordDiagram()
        # order of the pair is immaterial
        assert r2_remove(parse_gauss_code("1 2 2 1"),
                         ((2, 3), (1, 4))) == ChordDiagram()

    def test_remove_rejects_distant_pair(self):
        d = parse_gauss_code("1 2 3 1 2 3")
        with pytest.raises(NotAnR2Site):
            r2_remove(d, ((1, 4), (3, 6)))

    def test_add(self):
        assert serialize(r2_add(ChordDiagram(), 0, 0, CROSSED)) == "1 2 1 2"
        assert serialize(r2_add(ChordDiagram(), 0, 0, NESTED)) == "1 2 2 1"
        assert serialize(r2_add(parse_gauss_code("1 1"), 0, 2, NESTED)) \
            == "1 2 3 3 2 1"

    def test_add_validation(self):
        with pytest.raises(GapOutOfRange):
            r2_add(ChordDiagram(), 0, 1, CROSSED)
        with pytest.raises(GapOutOfRange):
            r2_add(parse_gauss_code("1 1"), 2, 1, CROSSED)
        with pytest.raises(ValueError):
            r2_add(ChordDiagram(), 0, 0, "braided")


class TestR3:
    def test_sites(self):
        assert r3_sites(TRIPLE) == [
            AdjointTriple(((1, 3), (2, 5), (4, 6)), (1, 3, 5))]
        assert r3_sites(parse_gauss_code("1 2 3 1 2 3")) == [
            AdjointTriple(((1, 4), (2, 5), (3, 6)), (1, 3, 5))]
        assert r3_sites(parse_gauss_code("1 1")) == []

    def test_apply(self):
        triple = r3_sites(TRIPLE)[0]
        assert serialize(r3_apply(TRIPLE, triple)) == "1 2 3 2 3 1"

    def test_apply_is_an_involution(self):
        before = TRIPLE
        triple = r3_sites(before)[0]
        after = r3_apply(before, triple)
        assert r3_apply(after, r3_sites(after)[0]) == before

    def test_lookup_by_anchors(self):
        assert adjoint_triple(TRIPLE, (1, 3, 5)) == r3_sites(TRIPLE)[0]
        assert adjoint_triple(TRIPLE, (5, 1, 3)) == r3_sites(TRIPLE)[0]
        with pytest.raises(NotAnR3Site):
            adjoint_triple(TRIPLE, (1, 2, 3))
        with pytest.raises(NotAnR3Site):
            adjoint_triple(TRIPLE, (1, 3, 99))


class TestRotate:
    def test_examples(self):
        assert serialize(rotate_basepoint(TRIPLE, 1)) == "1 2 3 1 3 2"
        assert serialize(rotate_basepoint(TRIPLE, -1)) == "1 2 3 2 1 3"
        assert rotate_basepoint(ChordDiagram(), 5) == ChordDiagram()

    @given(diagrams(min_n=1), st.integers(-12, 12))
    def test_full_turn_and_inverse_steps(self, d, steps):
        assert rotate_basepoint(d, d.size) == d
        assert rotate_basepoint(rotate_basepoint(d, steps), -steps) == d
        assert rotate_basepoint(d, steps) \
            == rotate_basepoint(d, steps % d.size)


class TestEnumerate:
    def test_empty_diagram(self):
        assert enumerate_moves(ChordDiagram(), 1) \
            == [Move("r1_add", (0,))]
        assert enumerate_moves(ChordDiagram(), 0) == []

    def test_one_chord(self):
        assert enumerate_moves(parse_gauss_code("1 1"), 2) == [
            Move("r1_remove", ((1, 2),)),
            Move("r1_add", (0,)), Move("r1_add", (1,)), Move("r1_add", (2,)),
            Move("rotate", (1,)), Move("rotate", (-1,)),
        ]

    @given(diagrams(max_n=5), st.integers(0, 7))
    def test_budget_respected(self, d, cap):
        for move in enumerate_moves(d, cap):
            assert apply_move(d, move).n <= max(cap, d.n)


class TestApplyAndInvert:
    @given(diagrams(max_n=5))
    def test_every_move_round_trips(self, d):
        for move in enumerate_moves(d, d.n + 2):
            after = apply_move(d, move)
            back = inverse_move(d, move)
            assert apply_move(after, back) == d

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            apply_move(ChordDiagram(), Move("slide", ()))
        with pytest.raises(ValueError):
            inverse_move(ChordDiagram(), Move("slide", ()))


class TestSerialization:
    def test_round_trip_every_kind(self):
        rng = random.Random(9)
        seen = set()
        d = parse_gauss_code("1 2 1 3 2 3")
        for move in enumerate_moves(d, d.n + 2):
            seen.add(move.kind)
            obj = move_to_json(move)
            assert move_from_json(obj) == move
            assert isinstance(move_to_text(move), str)
        assert {"r3", "r1_add", "r2_add", "rotate"} <= seen
        small = parse_gauss_code("1 2 1 2")
        for move in enumerate_moves(small, 2):
            assert move_from_json(move_to_json(move)) == move
        del rng

    def test_text_forms(self):
        assert move_to_text(Move("r1_add", (3,))) == "r1_add gap=3"
        assert move_to_json(Move("r1_add", (3,))) \
            == {"kind": "r1_add", "gap": 3}

    def test_bad_json(self):
        with pytest.raises(ValueError):
            move_from_json({"kind": "slide"})
