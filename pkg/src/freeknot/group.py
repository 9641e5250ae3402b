"""The letter group at depth m and its action on integer points.

Every letter is an involution.  Letters at distinct levels swap past
each other while trading the lower level's P for D or back, and the
final letter makes the same trade with every level letter.  The group
acts on points (x_1, ..., x_m; eps) with integer x_s and eps in
{0, 1}: a level-k letter moves x_{k+1} by one step whose direction is
set by the parity of x_{k+1} + ... + x_m + eps, and the final letter
toggles eps.  Every point is reachable from the origin, and distinct
points are treated as distinct group elements; the round-trip and
relation tests in this package exercise exactly that identification.

The parity sum deliberately includes eps.  Dropping it breaks the swap
rule between level letters and the final letter already at the origin,
which relation_check exposes (see corrupted_apply_letter).
"""

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from .parity import FINAL, Word, alphabet, double_prime, prime


class LevelOutOfRange(ValueError):
    """A letter's level does not exist at the working depth."""


class MixedM(ValueError):
    """Operands were built for different depths."""


EQUAL = "equal"
UNDETERMINED = "undetermined"

YES = "yes"
NO = "no"


class NormalForm(NamedTuple):
    """A group element, written as the point its words move the origin to."""

    x: tuple[int, ...]
    eps: int

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def is_identity(self) -> bool:
        return self.eps == 0 and not any(self.x)

    def to_json(self) -> dict:
        return {"m": self.m, "x": list(self.x), "eps": self.eps}

    @classmethod
    def from_json(cls, obj: dict) -> "NormalForm":
        nf = cls(tuple(obj["x"]), obj["eps"])
        if obj.get("m", nf.m) != nf.m:
            raise ValueError(
                f"inconsistent depth: m={obj['m']} with {nf.m} coordinates")
        if nf.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {nf.eps}")
        return nf


def identity(m: int) -> NormalForm:
    return NormalForm((0,) * m, 0)


def _parse_level(letter: str, m: int) -> tuple[str, int]:
    kind = letter[:1]
    if kind in ("P", "D"):
        try:
            k = int(letter[1:])
        except ValueError:
            raise LevelOutOfRange(f"malformed letter {letter!r}") from None
        if 0 <= k < m:
            return kind, k
    raise LevelOutOfRange(f"letter {letter!r} has no level at depth {m}")


def _apply(point: NormalForm, letter: str, flip_in_parity: bool) -> NormalForm:
    if letter == FINAL:
        return NormalForm(point.x, 1 - point.eps)
    kind, k = _parse_level(letter, point.m)
    s = sum(point.x[k:])
    if flip_in_parity:
        s += point.eps
    step = 1 if s % 2 == 0 else -1
    if kind == "D":
        step = -step
    x = point.x
    return NormalForm(x[:k] + (x[k] + step,) + x[k + 1:], point.eps)


def apply_letter(point: NormalForm, letter: str) -> NormalForm:
    """Right-multiply a point by one letter.

    Pk steps coordinate k+1 up when the parity sum from that coordinate
    onward (eps included) is even and down when it is odd; Dk does the
    opposite; F toggles eps.  Applying any letter twice returns the
    starting point.

    >>> apply_letter(identity(1), "P0")
    NormalForm(x=(1,), eps=0)
    """
    return _apply(point, letter, True)


def corrupted_apply_letter(point: NormalForm, letter: str) -> NormalForm:
    """A deliberately wrong action that drops eps from the parity sum.

    Negative control: under it the swap rule between level letters and
    the final letter fails at the origin, so relation_check must come
    back False.
    """
    return _apply(point, letter, False)


Action = Callable[[NormalForm, str], NormalForm]


def _fold(point: NormalForm, letters: Iterable[str],
          action: Action = apply_letter) -> NormalForm:
    for z in letters:
        point = action(point, z)
    return point


def evaluate(word: Word) -> NormalForm:
    """Evaluate a word left to right starting from the identity.

    >>> evaluate(Word(("P0", "F"), 1))
    NormalForm(x=(1,), eps=1)
    """
    return _fold(identity(word.m), word.letters)


def normal_form_to_word(nf: NormalForm) -> Word:
    """A fixed word evaluating to nf.

    The final letter comes first when eps is set; then each coordinate
    is walked to its target one unit at a time from the top level down,
    picking whichever letter moves toward the target under the live
    parity.  evaluate(normal_form_to_word(nf)) == nf for every point.
    """
    point = identity(nf.m)
    letters = []
    if nf.eps:
        letters.append(FINAL)
        point = apply_letter(point, FINAL)
    for k in range(nf.m - 1, -1, -1):
        while point.x[k] != nf.x[k]:
            up = nf.x[k] > point.x[k]
            even = (sum(point.x[k:]) + point.eps) % 2 == 0
            z = prime(k) if up == even else double_prime(k)
            letters.append(z)
            point = apply_letter(point, z)
    return Word(tuple(letters), nf.m)


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    """Group product: apply b's word starting from the point a."""
    if a.m != b.m:
        raise MixedM(f"depths differ: {a.m} != {b.m}")
    return _fold(a, normal_form_to_word(b).letters)


def inverse(a: NormalForm) -> NormalForm:
    """Every letter is an involution, so the reversed word inverts."""
    w = normal_form_to_word(a)
    return _fold(identity(a.m), reversed(w.letters))


def conjugate(a: NormalForm, by: Word | Sequence[str]) -> NormalForm:
    """The conjugate w^-1 a w for a conjugating word w."""
    if isinstance(by, Word):
        if by.m != a.m:
            raise MixedM(f"depths differ: {a.m} != {by.m}")
        letters = by.letters
    else:
        letters = tuple(by)
    point = _fold(identity(a.m), reversed(letters))
    point = _fold(point, normal_form_to_word(a).letters)
    return _fold(point, letters)


def relations(m: int) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """All defining pair relations at depth m as (left, right) words.

    Involutions z z = e for every letter; for levels i < j the swaps
    Di Pj = Pj Pi and Di Dj = Dj Pi together with their companions
    Pi Pj = Pj Di and Pi Dj = Dj Di obtained by conjugating with the
    involutions; and against the final letter Pi F = F Di with its
    companion Di F = F Pi.
    """
    rels: list[tuple[tuple[str, ...], tuple[str, ...]]] = [
        ((z, z), ()) for z in alphabet(m)]
    for i in range(m):
        pi, di = prime(i), double_prime(i)
        for j in range(i + 1, m):
            pj, dj = prime(j), double_prime(j)
            rels.extend([
                ((di, pj), (pj, pi)),
                ((di, dj), (dj, pi)),
                ((pi, pj), (pj, di)),
                ((pi, dj), (dj, di)),
            ])
        rels.extend([
            ((pi, FINAL), (FINAL, di)),
            ((di, FINAL), (FINAL, pi)),
        ])
    return rels


def relation_check(m: int, sample_points: Iterable[NormalForm],
                   action: Action = apply_letter) -> bool:
    """Do both sides of every relation act identically on every sample?"""
    rels = relations(m)
    for point in sample_points:
        if point.m != m:
            raise MixedM(f"sample point has depth {point.m}, expected {m}")
        for lhs, rhs in rels:
            if _fold(point, lhs, action) != _fold(point, rhs, action):
                return False
    return True


def _pair_rules(m: int) -> dict[tuple[str, str], tuple[str, str]]:
    rules = {}
    for lhs, rhs in relations(m):
        if len(lhs) == 2 and len(rhs) == 2:
            rules[lhs] = rhs
            rules[rhs] = lhs
    return rules


def _word_neighbours(letters, rules, pool, max_len):
    for i in range(len(letters) - 1):
        pair = letters[i:i + 2]
        if pair[0] == pair[1]:
            yield letters[:i] + letters[i + 2:]
        swap = rules.get(pair)
        if swap is not None:
            yield letters[:i] + swap + letters[i + 2:]
    if len(letters) + 2 <= max_len:
        for i in range(len(letters) + 1):
            for z in pool:
                yield letters[:i] + (z, z) + letters[i:]


def rewrite_oracle(w1: Word, w2: Word, depth: int) -> str:
    """Decide word equality by rewriting alone, never via the action.

    Bidirectional breadth-first search from both words under involution
    insertion/deletion and the pair swaps of relations(); EQUAL when
    the searches meet within `depth` levels on each side, UNDETERMINED
    otherwise.  Word length is capped two letters above the longer
    input, so EQUAL is always sound while UNDETERMINED is inconclusive.
    """
    if w1.m != w2.m:
        raise MixedM(f"depths differ: {w1.m} != {w2.m}")
    rules = _pair_rules(w1.m)
    pool = alphabet(w1.m)
    max_len = max(len(w1.letters), len(w2.letters)) + 2
    seen = ({w1.letters}, {w2.letters})
    frontier = [{w1.letters}, {w2.letters}]
    if seen[0] & seen[1]:
        return EQUAL
    for _ in range(max(depth, 0)):
        for side in (0, 1):
            grown = set()
            for w in frontier[side]:
                for nb in _word_neighbours(w, rules, pool, max_len):
                    if nb not in seen[side]:
                        grown.add(nb)
            seen[side].update(grown)
            frontier[side] = grown
            if seen[0] & seen[1]:
                return EQUAL
    return UNDETERMINED


@dataclass(frozen=True)
class Closure:
    """Conjugacy-closure result; complete=True certifies a whole class."""

    complete: bool
    elements: frozenset


def _conjugate_by_letter(point: NormalForm, z: str) -> NormalForm:
    out = apply_letter(identity(point.m), z)
    out = _fold(out, normal_form_to_word(point).letters)
    return apply_letter(out, z)


def class_closure(a: NormalForm, state_cap: int) -> Closure:
    """Breadth-first closure of {a} under conjugation by single letters.

    Stops with an incomplete set as soon as it would grow past
    state_cap; a complete closure is the entire conjugacy class.  Note
    classes can be infinite (already at depth 1 for points with an odd
    coordinate sum), in which case every finite cap truncates.
    """
    letters = alphabet(a.m)
    seen = {a}
    queue = deque([a])
    while queue:
        point = queue.popleft()
        for z in letters:
            conj = _conjugate_by_letter(point, z)
            if conj in seen:
                continue
            if len(seen) >= state_cap:
                return Closure(False, frozenset(seen))
            seen.add(conj)
            queue.append(conj)
    return Closure(True, frozenset(seen))


@dataclass(frozen=True)
class ConjugacyAnswer:
    """Outcome of a bounded conjugacy test.

    When the verdict is YES, conjugate(a, witness) == b.
    """

    verdict: str  # YES | NO | UNDETERMINED
    witness: tuple[str, ...] | None


def _closure_with_witnesses(a: NormalForm, state_cap: int):
    letters = alphabet(a.m)
    witnesses: dict[NormalForm, tuple[str, ...]] = {a: ()}
    queue = deque([a])
    while queue:
        point = queue.popleft()
        for z in letters:
            conj = _conjugate_by_letter(point, z)
            if conj in witnesses:
                continue
            if len(witnesses) >= state_cap:
                return False, witnesses
            witnesses[conj] = witnesses[point] + (z,)
            queue.append(conj)
    return True, witnesses


def conjugate_equal(a: NormalForm, b: NormalForm,
                    state_cap: int) -> ConjugacyAnswer:
    """Certified conjugacy test by bounded closure search.

    YES comes with letters conjugating a to b; NO only when one side's
    whole class was enumerated without meeting the other element;
    UNDETERMINED when both closures were truncated without touching.
    """
    if a.m != b.m:
        raise MixedM(f"depths differ: {a.m} != {b.m}")
    complete_a, wit_a = _closure_with_witnesses(a, state_cap)
    if b in wit_a:
        return ConjugacyAnswer(YES, wit_a[b])
    if complete_a:
        return ConjugacyAnswer(NO, None)
    complete_b, wit_b = _closure_with_witnesses(b, state_cap)
    if a in wit_b:
        return ConjugacyAnswer(YES, tuple(reversed(wit_b[a])))
    if complete_b:
        return ConjugacyAnswer(NO, None)
    common = set(wit_a) & set(wit_b)
    if common:
        x = min(common)
        return ConjugacyAnswer(YES, wit_a[x] + tuple(reversed(wit_b[x])))
    return ConjugacyAnswer(UNDETERMINED, None)
