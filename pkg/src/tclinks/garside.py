"""
Left-greedy Garside normal form for the braid groups B_n.

Simple elements (positive braids in which any two strands cross at most
once) are stored as permutations: a tuple ``p`` with ``p[x]`` the end
position of the strand starting at x, 0-based. In a simple element the
strands starting at x < y cross exactly when ``p[x] > p[y]``.

A braid is normalised as ``Delta**inf * A_1 * ... * A_r`` with every A_i a
proper simple element (neither 1 nor Delta) and each pair (A_i, A_{i+1})
left-weighted: nothing can be moved from the front of A_{i+1} onto the end
of A_i while keeping it simple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braidword import BraidWord, StrandMismatchError, compose, inverse

Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _inv(p: Perm) -> list[int]:
    q = [0] * len(p)
    for x, y in enumerate(p):
        q[y] = x
    return q


def _tau(p: Perm) -> Perm:
    # conjugation by Delta
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def starting_set(p: Perm) -> set[int]:
    """Generators i (1-based) with sigma_i a left divisor of p."""
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def finishing_set(p: Perm) -> set[int]:
    """Generators i (1-based) with sigma_i a right divisor of p."""
    q = _inv(p)
    return {i + 1 for i in range(len(p) - 1) if q[i] > q[i + 1]}


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    a = list(a)
    b = list(b)
    n = len(a)
    while True:
        # a_inv[pos] = strand of a ending at pos
        a_inv = _inv(a)
        for i in range(n - 1):
            if b[i] > b[i + 1] and a_inv[i] < a_inv[i + 1]:
                # a <- a*sigma_i, b <- sigma_i^-1 * b
                for x in range(n):
                    if a[x] == i:
                        a[x] = i + 1
                    elif a[x] == i + 1:
                        a[x] = i
                b[i], b[i + 1] = b[i + 1], b[i]
                break
        else:
            return tuple(a), tuple(b)


def simple_to_letters(p: Perm) -> list[int]:
    """A positive word for the simple element p."""
    p = list(p)
    out = []
    moved = True
    while moved:
        moved = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                out.append(i + 1)
                p[i], p[i + 1] = p[i + 1], p[i]
                moved = True
                break
    return out


def half_twist(n: int) -> BraidWord:
    """Delta = (s1)(s2 s1)...(s_{n-1} ... s1)."""
    if n < 1:
        raise ValueError("need at least one strand")
    letters = []
    for top in range(1, n):
        letters.extend(range(top, 0, -1))
    return BraidWord(n, tuple(letters))


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    @property
    def exponent_sum(self) -> int:
        n = self.strands
        total = self.infimum * n * (n - 1) // 2
        for p in self.factors:
            total += sum(1 for x in range(n) for y in range(x + 1, n) if p[x] > p[y])
        return total

    def to_word(self) -> BraidWord:
        n = self.strands
        d = half_twist(n).letters
        if self.infimum >= 0:
            letters = list(d) * self.infimum
        else:
            letters = [-g for g in reversed(d)] * (-self.infimum)
        for p in self.factors:
            letters.extend(simple_to_letters(p))
        return BraidWord(n, tuple(letters))

    def factor_words(self) -> list[list[int]]:
        return [simple_to_letters(p) for p in self.factors]


class _Normalizer:
    """Right-multiplies a normal form by Artin letters one at a time."""

    def __init__(self, n: int):
        self.n = n
        self.inf = 0
        self.factors: list[Perm] = []
        # stored factor F means tau**flip(F); flip toggles on every Delta^-1 pushed left
        self.flip = False
        self._id = _identity(n)
        self._delta = _delta(n)

    def _append(self, x: Perm):
        if self.flip:
            x = _tau(x)
        fs = self.factors
        fs.append(x)
        j = len(fs) - 1
        while j > 0:
            a, b = fs[j - 1], fs[j]
            a2, b2 = _left_weight(a, b)
            if a2 == a:
                break
            fs[j - 1], fs[j] = a2, b2
            j -= 1
        k = 0
        while k < len(fs) and fs[k] == self._delta:
            k += 1
        if k:
            self.inf += k
            del fs[:k]
        while fs and fs[-1] == self._id:
            fs.pop()

    def push(self, g: int):
        i = abs(g) - 1
        if g > 0:
            s = list(self._id)
            s[i], s[i + 1] = i + 1, i
            self._append(tuple(s))
        else:
            # x * s_i^-1 = Delta^-1 * tau(x) * (Delta s_i^-1)
            self.flip = not self.flip
            self.inf -= 1
            d = self._delta
            self._append(tuple(i + 1 if y == i else i if y == i + 1 else y for y in d))

    def result(self) -> GarsideNormalForm:
        fs = [_tau(p) for p in self.factors] if self.flip else list(self.factors)
        return GarsideNormalForm(self.n, self.inf, tuple(fs))


def normal_form(w: BraidWord) -> GarsideNormalForm:
    nz = _Normalizer(w.strands)
    for g in w.letters:
        nz.push(g)
    return nz.result()


def is_left_weighted(nf: GarsideNormalForm) -> bool:
    n = nf.strands
    for p in nf.factors:
        if p == _identity(n) or p == _delta(n):
            return False
    for a, b in zip(nf.factors, nf.factors[1:]):
        if not starting_set(b) <= finishing_set(a):
            return False
    return True


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise StrandMismatchError(f"{u.strands} strands vs {v.strands} strands")
    return normal_form(u) == normal_form(v)


def commutes(u: BraidWord, v: BraidWord) -> bool:
    return braids_equal(compose(u, v), compose(v, u))


def commutator_normal_form(u: BraidWord, v: BraidWord) -> GarsideNormalForm:
    """Normal form of u v u^-1 v^-1; the identity exactly when u and v commute."""
    return normal_form(compose(compose(u, v), compose(inverse(u), inverse(v))))
