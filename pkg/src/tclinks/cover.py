"""
Cabling of braids into degree-m covers, and degree-2 chart decorations.

Base strand j of an n-braid becomes the bundle of positions
(j-1)m+1 .. jm in the cabled mn-braid. A generator sigma_i is sent to the
block crossing of bundles i and i+1, preceded by a negative half twist on
each of the two bundles. This extends to a homomorphism B_n -> B_mn.

Degree-2 chart loops are recorded as signed twist counts per base strand:
``a_twists[s]`` copies of the letter sigma_{2s-1} are appended to the cabled
meridian braid, and likewise ``b_twists`` for the longitude braid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .braidword import BraidWord, StrandMismatchError, permutation

if TYPE_CHECKING:
    from .tclink import TorusCoveringLink


@dataclass(frozen=True)
class CableLayout:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"bad layout n={self.n}, m={self.m}")

    @property
    def strands(self) -> int:
        return self.n * self.m

    def bundle(self, j: int) -> range:
        if not 1 <= j <= self.n:
            raise IndexError(f"bundle {j} out of range 1..{self.n}")
        return range((j - 1) * self.m + 1, j * self.m + 1)

    def bundle_of(self, position: int) -> int:
        return (position - 1) // self.m + 1


def _half_twist_letters(m: int, offset: int) -> list[int]:
    letters = []
    for top in range(1, m):
        letters.extend(g + offset for g in range(top, 0, -1))
    return letters


def bundle_half_twist(layout: CableLayout, j: int, sign: int) -> BraidWord:
    """Delta^{+-1} of B_m placed on bundle j."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    offset = layout.bundle(j)[0] - 1
    letters = _half_twist_letters(layout.m, offset)
    if sign < 0:
        letters = [-g for g in reversed(letters)]
    return BraidWord(layout.strands, tuple(letters))


def cable_crossing(layout: CableLayout, i: int, sign: int) -> BraidWord:
    """
    Positive block transposition of bundles i and i+1 (m*m crossings, the
    internal order of each bundle preserved); sign -1 gives its inverse.
    """
    if not 1 <= i <= layout.n - 1:
        raise IndexError(f"crossing index {i} out of range 1..{layout.n - 1}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = layout.m
    base = (i - 1) * m
    # strand r of bundle i+1 slides left under bundle i to position base+1+r
    letters = []
    for r in range(m):
        letters.extend(range(base + m + r, base + r, -1))
    if sign < 0:
        letters = [-g for g in reversed(letters)]
    return BraidWord(layout.strands, tuple(letters))


def tilde_generator(layout: CableLayout, i: int) -> tuple[int, ...]:
    return (bundle_half_twist(layout, i, -1).letters
            + bundle_half_twist(layout, i + 1, -1).letters
            + cable_crossing(layout, i, 1).letters)


def tilde(w: BraidWord, m: int) -> BraidWord:
    if m < 1:
        raise ValueError("degree must be positive")
    layout = CableLayout(w.strands, m)
    images = {}
    letters: list[int] = []
    for g in w.letters:
        if g not in images:
            pos = tilde_generator(layout, abs(g))
            images[g] = pos if g > 0 else tuple(-h for h in reversed(pos))
        letters.extend(images[g])
    return BraidWord(layout.strands, tuple(letters))


@dataclass(frozen=True)
class CoverDecoration:
    """Signed twist insertions per base strand (index 0 is base strand 1)."""
    layout: CableLayout
    a_twists: tuple[int, ...] = field(default=())
    b_twists: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.layout.m != 2:
            raise ValueError("decorations are defined for degree 2 only")
        n = self.layout.n
        a = tuple(self.a_twists) or (0,) * n
        b = tuple(self.b_twists) or (0,) * n
        if len(a) != n or len(b) != n:
            raise ValueError(f"need {n} twist entries per word")
        object.__setattr__(self, "a_twists", a)
        object.__setattr__(self, "b_twists", b)

    @classmethod
    def empty(cls, n: int) -> CoverDecoration:
        return cls(CableLayout(n, 2))

    def is_empty(self) -> bool:
        return not any(self.a_twists) and not any(self.b_twists)


def _twist_block(twists: Sequence[int]) -> list[int]:
    out = []
    for s, t in enumerate(twists, 1):
        g = 2 * s - 1
        out.extend([g] * t if t >= 0 else [-g] * (-t))
    return out


def decorate(a_cover: BraidWord, b_cover: BraidWord,
             d: CoverDecoration) -> tuple[BraidWord, BraidWord]:
    n2 = d.layout.strands
    if a_cover.strands != n2 or b_cover.strands != n2:
        raise StrandMismatchError(
            f"decoration expects {n2} strands, got {a_cover.strands}/{b_cover.strands}")
    return (BraidWord(n2, a_cover.letters + tuple(_twist_block(d.a_twists))),
            BraidWord(n2, b_cover.letters + tuple(_twist_block(d.b_twists))))


def parse_decoration(text: str, n: int) -> CoverDecoration:
    """
    Read ``s a_twist b_twist`` records, one per line; blank lines and
    ``#`` comments are skipped and missing strands default to zero.
    """
    a = [0] * n
    b = [0] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 's a_twist b_twist'")
        s, ta, tb = (int(x) for x in parts)
        if not 1 <= s <= n:
            raise ValueError(f"line {lineno}: strand {s} out of range 1..{n}")
        a[s - 1] += ta
        b[s - 1] += tb
    return CoverDecoration(CableLayout(n, 2), tuple(a), tuple(b))


def intersection_numbers(L: TorusCoveringLink,
                         d: CoverDecoration) -> list[tuple[int, int]]:
    """
    Signed chart counts (I_mu, I_lambda) for each component of the base link.

    I_mu sums a_twists over one meridian circle of the component (the cycle of
    perm(a) through its smallest strand); I_lambda does the same with b.
    """
    if d.layout.n != L.strands:
        raise ValueError(f"decoration is for {d.layout.n} strands, link has {L.strands}")
    pa = permutation(L.a).cycles()
    pb = permutation(L.b).cycles()
    out = []
    for comp in L.components:
        first = min(comp)
        ca = next(c for c in pa if first in c)
        cb = next(c for c in pb if first in c)
        out.append((sum(d.a_twists[s - 1] for s in ca),
                    sum(d.b_twists[s - 1] for s in cb)))
    return out
