"""Reidemeister moves on based chord diagrams, plus base-point rotation.

All position arithmetic is literal on 1..2n: adjacency never wraps
across the base point, so rotation is the only move that crosses it.
Removals and insertions renumber the remaining positions in order; the
triple move rewires three chords in place and touches no position.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .diagram import Chord, ChordDiagram


class GapOutOfRange(ValueError):
    """An insertion gap lies outside 0..2n."""


class NotAnR1Site(ValueError):
    """The chord is absent or its ends are not consecutive."""


class NotAnR2Site(ValueError):
    """The chord pair is absent or not adjacent."""


class NotAnR3Site(ValueError):
    """The triple is absent or not completely adjoint."""


CROSSED = "crossed"
NESTED = "nested"


@dataclass(frozen=True, order=True)
class Move:
    """One applicable move: a kind tag plus kind-specific parameters."""

    kind: str  # r1_add | r1_remove | r2_add | r2_remove | r3 | rotate
    params: tuple


def _norm_chord(c) -> Chord:
    p, q = c
    return (p, q) if p <= q else (q, p)


def _renumber(chords) -> ChordDiagram:
    rank = {e: i for i, e in
            enumerate(sorted(e for c in chords for e in c), start=1)}
    return ChordDiagram((rank[p], rank[q]) for p, q in chords)


def r1_sites(d: ChordDiagram) -> list[Chord]:
    """Chords whose two ends are consecutive positions, in position order."""
    return [c for c in d.chords if c[1] - c[0] == 1]


def r1_remove(d: ChordDiagram, chord) -> ChordDiagram:
    chord = _norm_chord(chord)
    if chord not in set(d.chords) or chord[1] - chord[0] != 1:
        raise NotAnR1Site(f"{chord} is not a removable small chord")
    return _renumber([c for c in d.chords if c != chord])


def r1_add(d: ChordDiagram, gap: int) -> ChordDiagram:
    """Insert a chord with consecutive ends after position `gap` (0..2n)."""
    if not 0 <= gap <= d.size:
        raise GapOutOfRange(f"gap {gap} outside 0..{d.size}")
    shifted = [tuple(e + 2 if e > gap else e for e in c) for c in d.chords]
    shifted.append((gap + 1, gap + 2))
    return ChordDiagram(shifted)


def _adjacent(c1: Chord, c2: Chord) -> bool:
    return abs(c1[0] - c2[0]) == 1 and abs(c1[1] - c2[1]) == 1


def r2_sites(d: ChordDiagram) -> list[tuple[Chord, Chord]]:
    """Unordered pairs of adjacent chords, crossed and nested alike."""
    return [(c1, c2) for c1, c2 in combinations(d.chords, 2)
            if _adjacent(c1, c2)]


def r2_remove(d: ChordDiagram, pair) -> ChordDiagram:
    c1, c2 = sorted(_norm_chord(c) for c in pair)
    present = set(d.chords)
    if c1 not in present or c2 not in present or not _adjacent(c1, c2):
        raise NotAnR2Site(f"{(c1, c2)} is not an adjacent chord pair")
    return _renumber([c for c in d.chords if c not in (c1, c2)])


def r2_add(d: ChordDiagram, gap1: int, gap2: int, pattern: str) -> ChordDiagram:
    """Insert an adjacent pair: a block of two ends after `gap1` and
    another after `gap2` (gap1 <= gap2), joined crossed or nested."""
    if pattern not in (CROSSED, NESTED):
        raise ValueError(f"unknown pattern {pattern!r}")
    if not 0 <= gap1 <= gap2 <= d.size:
        raise GapOutOfRange(f"gaps ({gap1}, {gap2}) outside 0..{d.size}")
    shifted = [tuple(e + 2 * ((e > gap1) + (e > gap2)) for e in c)
               for c in d.chords]
    a1, a2 = gap1 + 1, gap1 + 2
    b1, b2 = gap2 + 3, gap2 + 4
    if pattern == CROSSED:
        shifted += [(a1, b1), (a2, b2)]
    else:
        shifted += [(a1, b2), (a2, b1)]
    return ChordDiagram(shifted)


class AdjointTriple(NamedTuple):
    """Three chords whose six ends pair into adjacent positions
    (r, r+1), (s, s+1), (t, t+1), each pair spanning two chords."""

    chords: tuple[Chord, Chord, Chord]
    anchors: tuple[int, int, int]


def _adjoint_anchors(chords3) -> tuple[int, int, int] | None:
    ends = sorted(e for c in chords3 for e in c)
    if len(set(ends)) != 6:
        return None
    owner = {e: c for c in chords3 for e in c}
    anchors = []
    for i in (0, 2, 4):
        lo, hi = ends[i], ends[i + 1]
        if hi != lo + 1 or owner[lo] == owner[hi]:
            return None
        anchors.append(lo)
    return tuple(anchors)


def r3_sites(d: ChordDiagram) -> list[AdjointTriple]:
    """Every completely adjoint triple, ordered by anchors."""
    sites = []
    for chords3 in combinations(d.chords, 3):
        anchors = _adjoint_anchors(chords3)
        if anchors is not None:
            sites.append(AdjointTriple(chords3, anchors))
    sites.sort(key=lambda t: t.anchors)
    return sites


def adjoint_triple(d: ChordDiagram, anchors) -> AdjointTriple:
    """The diagram's adjoint triple anchored at (r, s, t), if any."""
    anchors = tuple(sorted(anchors))
    owner = d.end_map()
    try:
        chords3 = tuple(sorted(
            {owner[a] for a in anchors} | {owner[a + 1] for a in anchors}))
    except KeyError:
        raise NotAnR3Site(f"no chord ends at anchors {anchors}") from None
    if len(chords3) != 3 or _adjoint_anchors(chords3) != anchors:
        raise NotAnR3Site(f"no completely adjoint triple at {anchors}")
    return AdjointTriple(chords3, anchors)


def r3_apply(d: ChordDiagram, triple: AdjointTriple) -> ChordDiagram:
    """Rewire the triple by swapping each anchor with its neighbour.

    An involution: positions stay put, only the three chords change.
    """
    present = set(d.chords)
    if not all(c in present for c in triple.chords):
        raise NotAnR3Site(f"triple {triple.chords} not in diagram")
    if _adjoint_anchors(triple.chords) != tuple(triple.anchors):
        raise NotAnR3Site(f"{triple.chords} is not completely adjoint")
    swap = {}
    for a in triple.anchors:
        swap[a] = a + 1
        swap[a + 1] = a
    replaced = set(triple.chords)
    new_chords = [c for c in d.chords if c not in replaced]
    new_chords += [(swap[p], swap[q]) for p, q in triple.chords]
    return ChordDiagram(new_chords)


def rotate_basepoint(d: ChordDiagram, steps: int) -> ChordDiagram:
    """Move the base point past `steps` ends (negative steps go back).

    Position p maps to ((p - 1 - steps) mod 2n) + 1; linking between
    chords is unchanged, and the word shifts cyclically.
    """
    size = d.size
    if size == 0:
        return d
    return ChordDiagram(
        (((p - 1 - steps) % size) + 1, ((q - 1 - steps) % size) + 1)
        for p, q in d.chords)


def enumerate_moves(d: ChordDiagram, max_chords: int) -> list[Move]:
    """Every applicable move, in a fixed order: removals and triple
    rewirings first, then the insertions the chord budget allows, then
    one-step rotations (absent on the empty diagram)."""
    moves = [Move("r1_remove", (c,)) for c in r1_sites(d)]
    moves += [Move("r2_remove", pair) for pair in r2_sites(d)]
    moves += [Move("r3", (t.anchors,)) for t in r3_sites(d)]
    if d.n + 1 <= max_chords:
        moves += [Move("r1_add", (gap,)) for gap in range(d.size + 1)]
    if d.n + 2 <= max_chords:
        moves += [Move("r2_add", (g1, g2, pattern))
                  for g1 in range(d.size + 1)
                  for g2 in range(g1, d.size + 1)
                  for pattern in (CROSSED, NESTED)]
    if d.n:
        moves += [Move("rotate", (1,)), Move("rotate", (-1,))]
    return moves


def apply_move(d: ChordDiagram, move: Move) -> ChordDiagram:
    kind, params = move.kind, move.params
    if kind == "r1_add":
        return r1_add(d, params[0])
    if kind == "r1_remove":
        return r1_remove(d, params[0])
    if kind == "r2_add":
        return r2_add(d, *params)
    if kind == "r2_remove":
        return r2_remove(d, params)
    if kind == "r3":
        return r3_apply(d, adjoint_triple(d, params[0]))
    if kind == "rotate":
        return rotate_basepoint(d, params[0])
    raise ValueError(f"unknown move kind {move.kind!r}")


def inverse_move(d: ChordDiagram, move: Move) -> Move:
    """The move undoing `move`, to be applied to apply_move(d, move)."""
    kind, params = move.kind, move.params
    if kind == "r1_add":
        gap = params[0]
        return Move("r1_remove", ((gap + 1, gap + 2),))
    if kind == "r1_remove":
        chord = _norm_chord(params[0])
        return Move("r1_add", (chord[0] - 1,))
    if kind == "r2_add":
        g1, g2, pattern = params
        a1, a2, b1, b2 = g1 + 1, g1 + 2, g2 + 3, g2 + 4
        pair = ((a1, b1), (a2, b2)) if pattern == CROSSED \
            else ((a1, b2), (a2, b1))
        return Move("r2_remove", tuple(sorted(pair)))
    if kind == "r2_remove":
        c1, c2 = sorted(_norm_chord(c) for c in params)
        block1 = min(c1[0], c2[0])
        block2 = min(c1[1], c2[1])
        low = c1 if c1[0] == block1 else c2
        pattern = CROSSED if low[1] == block2 else NESTED
        return Move("r2_add", (block1 - 1, block2 - 3, pattern))
    if kind == "r3":
        return move
    if kind == "rotate":
        return Move("rotate", (-params[0],))
    raise ValueError(f"unknown move kind {move.kind!r}")


def move_to_json(move: Move) -> dict:
    kind, params = move.kind, move.params
    if kind == "r1_add":
        return {"kind": kind, "gap": params[0]}
    if kind == "r1_remove":
        return {"kind": kind, "chord": list(params[0])}
    if kind == "r2_add":
        return {"kind": kind, "gap1": params[0], "gap2": params[1],
                "pattern": params[2]}
    if kind == "r2_remove":
        return {"kind": kind, "chords": [list(c) for c in params]}
    if kind == "r3":
        return {"kind": kind, "anchors": list(params[0])}
    if kind == "rotate":
        return {"kind": kind, "steps": params[0]}
    raise ValueError(f"unknown move kind {move.kind!r}")


def move_from_json(obj: dict) -> Move:
    kind = obj["kind"]
    if kind == "r1_add":
        return Move(kind, (obj["gap"],))
    if kind == "r1_remove":
        return Move(kind, (tuple(obj["chord"]),))
    if kind == "r2_add":
        return Move(kind, (obj["gap1"], obj["gap2"], obj["pattern"]))
    if kind == "r2_remove":
        return Move(kind, tuple(tuple(c) for c in obj["chords"]))
    if kind == "r3":
        return Move(kind, (tuple(obj["anchors"]),))
    if kind == "rotate":
        return Move(kind, (obj["steps"],))
    raise ValueError(f"unknown move kind {kind!r}")


def move_to_text(move: Move) -> str:
    kind, params = move.kind, move.params
    if kind == "r1_add":
        return f"r1_add gap={params[0]}"
    if kind == "r1_remove":
        p, q = params[0]
        return f"r1_remove chord=({p},{q})"
    if kind == "r2_add":
        return f"r2_add gap1={params[0]} gap2={params[1]} pattern={params[2]}"
    if kind == "r2_remove":
        (p1, q1), (p2, q2) = params
        return f"r2_remove chords=({p1},{q1}),({p2},{q2})"
    if kind == "r3":
        r, s, t = params[0]
        return f"r3 anchors=({r},{s},{t})"
    if kind == "rotate":
        return f"rotate steps={params[0]}"
    raise ValueError(f"unknown move kind {move.kind!r}")
