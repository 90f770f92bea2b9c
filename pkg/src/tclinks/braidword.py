"""
Braid words on n strands and the combinatorics of their closures.

A letter g > 0 stands for the Artin generator sigma_g (a positive crossing of
the strands at positions g and g+1), and g < 0 for its inverse. Strands are
identified by their *starting* position, numbered 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Base class for malformed braid input."""


class BraidParseError(BraidError):
    pass


class BraidRangeError(BraidError):
    pass


class StrandMismatchError(BraidError):
    pass


class LinkingParityError(ArithmeticError):
    """An odd crossing sum between two supposedly closed sets of circles."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidRangeError(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise BraidRangeError(
                    f"letter {g} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, e: int) -> BraidWord:
        return power(self, e)

    def __invert__(self) -> BraidWord:
        return inverse(self)

    def __str__(self):
        return " ".join(str(g) for g in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 1 -2 3"``."""
    letters = []
    for tok in text.split():
        try:
            g = int(tok)
        except ValueError:
            raise BraidParseError(f"not an integer: {tok!r}") from None
        if g == 0:
            raise BraidParseError("letter 0 does not name a generator")
        letters.append(g)
    return BraidWord(strands, tuple(letters))


def _check_same(u: BraidWord, v: BraidWord):
    if u.strands != v.strands:
        raise StrandMismatchError(f"{u.strands} strands vs {v.strands} strands")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-g for g in reversed(u.letters)))


def power(u: BraidWord, e: int) -> BraidWord:
    if e < 0:
        u, e = inverse(u), -e
    return BraidWord(u.strands, u.letters * e)


def free_reduce(u: BraidWord) -> BraidWord:
    out: list[int] = []
    for g in u.letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return BraidWord(u.strands, tuple(out))


@dataclass(frozen=True)
class StrandPermutation:
    """``image[s-1]`` is the end position of the strand starting at s."""
    image: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, s: int) -> int:
        return self.image[s - 1]

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Follow self, then other (the permutation of a concatenation)."""
        return StrandPermutation(tuple(other.image[x - 1] for x in self.image))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for s in range(1, self.size + 1):
            if s in seen:
                continue
            cyc = []
            x = s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out


def permutation(w: BraidWord) -> StrandPermutation:
    # pos[p] = starting strand currently at position p
    pos = list(range(w.strands + 1))
    for g in w.letters:
        i = abs(g)
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    image = [0] * w.strands
    for p in range(1, w.strands + 1):
        image[pos[p] - 1] = p
    return StrandPermutation(tuple(image))


@dataclass(frozen=True)
class ClosurePartition:
    """Circles of a closed braid, each given as the cycle of starting positions it visits."""
    cycles: tuple[tuple[int, ...], ...]

    def cycle_of(self, s: int) -> tuple[int, ...]:
        for c in self.cycles:
            if s in c:
                return c
        raise KeyError(s)

    def __len__(self):
        return len(self.cycles)


def closure_components(w: BraidWord) -> ClosurePartition:
    return ClosurePartition(tuple(permutation(w).cycles()))


def crossing_matrix(w: BraidWord) -> list[list[int]]:
    """
    Signed crossing counts between strands, indexed by starting position.

    Returned as an (n+1) x (n+1) nested list so that ``m[s][t]`` uses the
    1-based strand labels directly; row and column 0 are unused.
    """
    n = w.strands
    m = [[0] * (n + 1) for _ in range(n + 1)]
    pos = list(range(n + 1))
    for g in w.letters:
        i = g if g > 0 else -g
        s, t = pos[i], pos[i + 1]
        e = 1 if g > 0 else -1
        m[s][t] += e
        m[t][s] += e
        pos[i], pos[i + 1] = t, s
    return m


def _strands_of(cycles: Iterable[Sequence[int]]) -> set[int]:
    out: set[int] = set()
    for c in cycles:
        out.update(c)
    return out


def linking_from_matrix(m: list[list[int]], cycles_a, cycles_b) -> int:
    sa = _strands_of(cycles_a)
    sb = _strands_of(cycles_b)
    if sa & sb:
        raise ValueError(f"cycle sets share strands {sorted(sa & sb)}")
    total = sum(m[s][t] for s in sa for t in sb)
    if total % 2:
        raise LinkingParityError(
            f"odd crossing sum {total} between {sorted(sa)} and {sorted(sb)}")
    return total // 2


def linking_closed(w: BraidWord, cycles_a, cycles_b) -> int:
    """
    Linking number of two disjoint unions of circles in the closure of w.

    Each argument is a collection of closure cycles (tuples of starting
    positions). The crossing sum between the two groups is even whenever
    both are unions of whole circles; an odd sum raises LinkingParityError.
    """
    return linking_from_matrix(crossing_matrix(w), cycles_a, cycles_b)
