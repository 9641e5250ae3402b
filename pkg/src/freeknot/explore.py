"""Randomised and exhaustive exploration of the move graph.

Scrambling drives the invariance checks; reduction asks whether a
diagram reaches the empty one within explicit caps; the exhaustive
search hunts for diagrams whose word evaluates away from the identity,
which certifies them as nontrivial free knots.
"""

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .diagram import ChordDiagram, parse_gauss_code, serialize
from .group import NO, YES, conjugate, conjugate_equal, evaluate, identity
from .moves import (Move, apply_move, enumerate_moves, move_to_json,
                    rotate_basepoint)
from .parity import word_of

SAME_INVARIANT = "same_invariant"
CERTIFIED_DISTINCT = "certified_distinct"
UNDETERMINED = "undetermined"

LONG = "long"
FREE = "free"

REDUCED_TO_EMPTY = "reduced_to_empty"
MINIMAL_FOUND = "minimal_found"
EXHAUSTED = "exhausted"


def random_diagram(n: int, rng: random.Random) -> ChordDiagram:
    """A uniformly random diagram on n chords: repeatedly pair the
    lowest free position with a uniformly chosen other free position."""
    free = list(range(1, 2 * n + 1))
    chords = []
    while free:
        p = free.pop(0)
        q = free.pop(rng.randrange(len(free)))
        chords.append((p, q))
    return ChordDiagram(chords)


def scramble(d: ChordDiagram, move_count: int, seed: int,
             size_cap: int) -> ChordDiagram:
    """Apply `move_count` uniformly chosen applicable moves, insertions
    capped at size_cap chords.  Deterministic for a given seed, and the
    result stays equivalent to d as a free knot."""
    if size_cap < d.n:
        raise ValueError(
            f"size_cap {size_cap} below current chord count {d.n}")
    rng = random.Random(seed)
    for _ in range(move_count):
        options = enumerate_moves(d, size_cap)
        if not options:
            break
        d = apply_move(d, options[rng.randrange(len(options))])
    return d


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a bounded breadth-first reduction.

    path replays from the start diagram to `diagram` when the outcome
    carries one; visited counts distinct canonical codes seen.
    """

    outcome: str  # reduced_to_empty | minimal_found | exhausted
    path: tuple[Move, ...] | None
    diagram: ChordDiagram | None
    visited: int
    max_states: int
    max_chords: int

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "path": None if self.path is None else
                    [move_to_json(mv) for mv in self.path],
            "diagram": None if self.diagram is None else
                       self.diagram.to_json(),
            "gauss": None if self.diagram is None else
                     serialize(self.diagram),
            "visited": self.visited,
            "max_states": self.max_states,
            "max_chords": self.max_chords,
        }


def reduce(d: ChordDiagram, max_states: int, max_chords: int) -> SearchReport:
    """Breadth-first search over canonical Gauss codes under all moves.

    Returns REDUCED_TO_EMPTY with a shortest path when the empty
    diagram is reachable within the caps, MINIMAL_FOUND with a
    least-chord-count diagram when the bounded space is exhausted, and
    EXHAUSTED when the state cap is hit first.
    """
    visited = {serialize(d)}
    queue = deque([(d, ())])
    best_d, best_path = d, ()
    while queue:
        current, path = queue.popleft()
        if current.n == 0:
            return SearchReport(REDUCED_TO_EMPTY, path, current,
                                len(visited), max_states, max_chords)
        for move in enumerate_moves(current, max_chords):
            nxt = apply_move(current, move)
            code = serialize(nxt)
            if code in visited:
                continue
            if len(visited) >= max_states:
                return SearchReport(EXHAUSTED, None, None,
                                    len(visited), max_states, max_chords)
            visited.add(code)
            nxt_path = path + (move,)
            if nxt.n == 0:
                return SearchReport(REDUCED_TO_EMPTY, nxt_path, nxt,
                                    len(visited), max_states, max_chords)
            if nxt.n < best_d.n:
                best_d, best_path = nxt, nxt_path
            queue.append((nxt, nxt_path))
    return SearchReport(MINIMAL_FOUND, best_path, best_d,
                        len(visited), max_states, max_chords)


def distinguish(d1: ChordDiagram, d2: ChordDiagram, m_list: Sequence[int],
                state_cap: int, mode: str = LONG) -> str:
    """Compare two diagrams through their invariants.

    Long mode compares values exactly; free mode compares conjugacy
    classes through bounded closures.  CERTIFIED_DISTINCT when some
    depth separates the diagrams, SAME_INVARIANT when every depth
    agrees, UNDETERMINED only in free mode after a truncated closure.
    Agreement never claims the knots themselves are equivalent.
    """
    if mode not in (LONG, FREE):
        raise ValueError(f"unknown mode {mode!r}")
    undecided = False
    for m in m_list:
        a = evaluate(word_of(d1, m))
        b = evaluate(word_of(d2, m))
        if mode == LONG:
            if a != b:
                return CERTIFIED_DISTINCT
        else:
            answer = conjugate_equal(a, b, state_cap)
            if answer.verdict == NO:
                return CERTIFIED_DISTINCT
            if answer.verdict != YES:
                undecided = True
    return UNDETERMINED if undecided else SAME_INVARIANT


def rotation_canonical_code(d: ChordDiagram) -> str:
    """Lexicographically least Gauss code over all base-point rotations.

    A key for rotation classes (token-wise on the label numbers), used
    to enumerate diagrams once per class.
    """
    if d.n == 0:
        return ""
    owner = d.end_map()
    base = [owner[p] for p in range(1, d.size + 1)]
    best = None
    for s in range(d.size):
        rotated = base[s:] + base[:s]
        labels: dict = {}
        key = []
        for c in rotated:
            if c not in labels:
                labels[c] = len(labels) + 1
            key.append(labels[c])
        if best is None or key < best:
            best = key
    return " ".join(str(t) for t in best)


def all_matchings(positions) -> Iterator[tuple]:
    """Every perfect matching of the given positions, as chord tuples."""
    positions = list(positions)
    if not positions:
        yield ()
        return
    first = positions[0]
    rest = positions[1:]
    for i, q in enumerate(rest):
        for tail in all_matchings(rest[:i] + rest[i + 1:]):
            yield ((first, q),) + tail


def search_nontrivial(max_chords: int, m: int,
                      state_cap: int) -> list[ChordDiagram]:
    """Exhaustively scan diagrams with up to max_chords chords, one per
    rotation class, and return (as canonical representatives) those
    whose word evaluates away from the identity.

    Every hit is a certified nontrivial free knot: the identity's
    conjugacy class is itself alone, so no sequence of moves and
    rotations can bring a hit back to the empty diagram.  Enumeration
    stops quietly once state_cap rotation classes were examined.
    """
    e = identity(m)
    found = []
    examined = 0
    seen: set[str] = set()
    for n in range(1, max_chords + 1):
        for chords in all_matchings(range(1, 2 * n + 1)):
            key = rotation_canonical_code(ChordDiagram(chords))
            if key in seen:
                continue
            seen.add(key)
            examined += 1
            if examined > state_cap:
                return found
            representative = parse_gauss_code(key)
            if evaluate(word_of(representative, m)) != e:
                found.append(representative)
    return found


def move_invariance_trial(rng: random.Random, m_values: Sequence[int],
                          max_n: int = 8, size_cap: int = 10) -> bool:
    """One random trial: does a uniformly chosen applicable move
    (rotations excluded) preserve the value at every given depth?"""
    d = random_diagram(rng.randint(1, max_n), rng)
    options = [mv for mv in enumerate_moves(d, size_cap)
               if mv.kind != "rotate"]
    moved = apply_move(d, options[rng.randrange(len(options))])
    return all(
        evaluate(word_of(d, m)) == evaluate(word_of(moved, m))
        for m in m_values)


def rotation_conjugacy_trial(rng: random.Random, m_values: Sequence[int],
                             max_n: int = 8, state_cap: int = 2048) -> bool:
    """One random trial: after a one-step rotation the value must be
    the conjugate by the word's first letter, and the bounded conjugacy
    test must certify the two values conjugate with a valid witness."""
    d = random_diagram(rng.randint(1, max_n), rng)
    rotated = rotate_basepoint(d, 1)
    for m in m_values:
        w = word_of(d, m)
        a = evaluate(w)
        b = evaluate(word_of(rotated, m))
        if b != conjugate(a, (w.letters[0],)):
            return False
        answer = conjugate_equal(a, b, state_cap)
        if answer.verdict != YES or conjugate(a, answer.witness) != b:
            return False
    return True
