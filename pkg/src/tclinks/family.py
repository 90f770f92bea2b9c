"""
The family S_k = S_{k+1}(X_k, Delta^2) with X_k = s1^2 s2 ... sk, its
decorated degree-2 covers, and the integer-matrix obstructions that tell
S_k and S_l apart.

Matrices are row-major ``((alpha, beta), (gamma, delta))`` with determinant
exactly +1.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd

from .braidword import BraidWord, power
from .cover import CableLayout, CoverDecoration, decorate, tilde
from .garside import half_twist
from .tclink import TorusCoveringLink, build_link


def make_X(k: int) -> BraidWord:
    if k < 1:
        raise ValueError("k must be positive")
    return BraidWord(k + 1, (1, 1) + tuple(range(2, k + 1)))


def make_full_twist(n: int) -> BraidWord:
    return power(half_twist(n), 2)


@dataclass(frozen=True)
class FamilyInstance:
    k: int
    link: TorusCoveringLink

    @property
    def X(self) -> BraidWord:
        return self.link.a

    @property
    def full_twist(self) -> BraidWord:
        return self.link.b


def make_S(k: int, check: bool = True) -> FamilyInstance:
    link = build_link(make_X(k), make_full_twist(k + 1), check=check)
    if link.num_components != 2:
        raise AssertionError(f"S_{k} should have 2 components, got {link.components}")
    return FamilyInstance(k, link)


def family_decoration(k: int, p1: int, q1: int, p2: int, q2: int) -> CoverDecoration:
    """
    Chart data with I(mu_i) = 2 p_i and I(lambda_i) = 2 q_i on S_k.

    Component 2's meridian circle is the single k-cycle of X_k, so one twist
    block of 2 p2 on strand 2 suffices; its k longitude circles are the pure
    strands of Delta^2, so each of them carries 2 q2.
    """
    n = k + 1
    a = [0] * n
    b = [0] * n
    a[0], b[0] = 2 * p1, 2 * q1
    a[1] = 2 * p2
    for s in range(1, n):
        b[s] = 2 * q2
    return CoverDecoration(CableLayout(n, 2), tuple(a), tuple(b))


def cover_words(k: int, p1: int = 0, q1: int = 0, p2: int = 0,
                q2: int = 0) -> tuple[BraidWord, BraidWord]:
    d = family_decoration(k, p1, q1, p2, q2)
    return decorate(tilde(make_X(k), 2), tilde(make_full_twist(k + 1), 2), d)


def decorated_cover(k: int, p1: int = 0, q1: int = 0, p2: int = 0, q2: int = 0,
                    check: bool = True) -> TorusCoveringLink:
    a, b = cover_words(k, p1, q1, p2, q2)
    link = build_link(a, b, check=check)
    if link.num_components != 4:
        raise AssertionError(
            f"cover of S_{k} should have 4 components, got {link.num_components}")
    return link


def lemma_closed_form(k: int, p1: int, q1: int, p2: int, q2: int) -> tuple[int, int]:
    """Predicted (Tlk_{1,2,3}, Tlk_{2,3,4}) of the decorated cover."""
    return -k * p1 + q1, -p2 + q2


# ---------------------------------------------------------------------------
# integer matrices

Matrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class UnimodularMatrix:
    rows: Matrix

    def __post_init__(self):
        (a, b), (c, d) = self.rows
        if a * d - b * c != 1:
            raise ValueError(f"determinant {a * d - b * c} != 1 for {self.rows}")

    @property
    def T(self) -> UnimodularMatrix:
        (a, b), (c, d) = self.rows
        return UnimodularMatrix(((a, c), (b, d)))

    def __matmul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return UnimodularMatrix(((a * e + b * g, a * f + b * h),
                                 (c * e + d * g, c * f + d * h)))

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        (a, b), (c, d) = self.rows
        return a * v[0] + b * v[1], c * v[0] + d * v[1]

    def row_apply(self, u: tuple[int, int]) -> tuple[int, int]:
        """u^T M as a pair."""
        (a, b), (c, d) = self.rows
        return u[0] * a + u[1] * c, u[0] * b + u[1] * d

    def entry_sum(self) -> int:
        return sum(self.rows[0]) + sum(self.rows[1])

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def completion(x: int, y: int) -> UnimodularMatrix:
    """A determinant-one matrix with first row (x, y); needs gcd(x, y) = 1."""
    g, s, t = _egcd(x, y)
    if g != 1:
        raise ValueError(f"({x}, {y}) is not primitive")
    return UnimodularMatrix(((x, y), (-t, s)))


def solve_row_equation(u: tuple[int, int], v: tuple[int, int]) -> UnimodularMatrix | None:
    """
    A matrix C of determinant one with u^T C = v^T, or None. Determinant-one
    matrices move a vector exactly within its gcd class, so a solution exists
    iff gcd(u) == gcd(v) (and both vanish together).
    """
    gu, gv = gcd(*u), gcd(*v)
    if gu != gv:
        return None
    if gu == 0:
        return UnimodularMatrix(((1, 0), (0, 1)))
    U = completion(u[0] // gu, u[1] // gu)
    V = completion(v[0] // gv, v[1] // gv)
    (a, b), (c, d) = U.rows
    U_inv = UnimodularMatrix(((d, -b), (-c, a)))
    C = U_inv @ V
    assert C.row_apply(u) == v
    return C


@dataclass(frozen=True)
class CaseSolution:
    solvable: bool
    witness: UnimodularMatrix | None
    reason: str


def solve_case(u: tuple[int, int], i: int, j: int, rhs1: int, rhs2: int) -> CaseSolution:
    """Find C with i * (u^T C)_1 = rhs1 and j * (u^T C)_2 = rhs2."""
    if i < 1 or j < 1:
        raise ValueError("case multipliers must be positive")
    if rhs1 % i:
        return CaseSolution(False, None, f"{i} does not divide {rhs1}")
    if rhs2 % j:
        return CaseSolution(False, None, f"{j} does not divide {rhs2}")
    x, y = rhs1 // i, rhs2 // j
    C = solve_row_equation(u, (x, y))
    if C is None:
        return CaseSolution(
            False, None, f"gcd({x}, {y}) = {gcd(x, y)} but gcd{tuple(u)} = {gcd(*u)}")
    return CaseSolution(True, C, "witness found")


PRESERVING_ROW = (1, -1)


def case_equation_solvable(i: int, j: int, rhs1: int, rhs2: int) -> CaseSolution:
    """C = ((a', b'), (c', d')) with i (a' - c') = rhs1 and j (b' - d') = rhs2."""
    return solve_case(PRESERVING_ROW, i, j, rhs1, rhs2)


def a_equation_witness(k: int, l: int, swapped: bool = False) -> UnimodularMatrix:
    """
    A with (k, -1)^T = A^T (l, -1)^T, or (k, -1)^T = A^T (-1, 1)^T when the
    components are swapped. Such A always exists, so these equations alone
    never obstruct.
    """
    u = (-1, 1) if swapped else (l, -1)
    A = solve_row_equation(u, (k, -1))
    if A is None:
        raise AssertionError(f"no A for k={k}, l={l}")
    return A


# ---------------------------------------------------------------------------
# homological distinguisher


@dataclass(frozen=True)
class HomologyClass:
    """m_coef * mu + l_coef * lambda in H_2 of the complement of F_1."""
    m_coef: int
    l_coef: int


def second_component_class(k: int) -> HomologyClass:
    return HomologyClass(1, k)


def montesinos_search(k: int, l: int, window: int = 12) -> UnimodularMatrix | None:
    """
    Search |gamma|, |delta| <= window for A with (1, l) A = (1, k) and even
    entry sum. The first row is then forced by the equation.
    """
    src, dst = second_component_class(l), second_component_class(k)
    for c in range(-window, window + 1):
        for d in range(-window, window + 1):
            a = dst.m_coef - src.l_coef * c
            b = dst.l_coef - src.l_coef * d
            if a * d - b * c != 1 or (a + b + c + d) % 2:
                continue
            return UnimodularMatrix(((a, b), (c, d)))
    return None


def homology_distinguishable(k: int, l: int, window: int = 4) -> bool:
    if k < 1 or l < 1:
        raise ValueError("k, l must be positive")
    found = montesinos_search(k, l, window) is not None
    closed = (k - l) % 2 != 0
    if found == closed:
        raise AssertionError(f"search and parity disagree for ({k}, {l})")
    return closed


# ---------------------------------------------------------------------------
# matrix obstruction


@dataclass(frozen=True)
class CaseResult:
    case: int
    i: int
    j: int
    equations: str
    solvable: bool
    witness: list[list[int]] | None
    reason: str


@dataclass(frozen=True)
class DirectionResult:
    pairing: str          # "preserving" or "swapping"
    source: int
    target: int
    cases: tuple[CaseResult, ...]

    @property
    def obstructed(self) -> bool:
        return not any(c.solvable for c in self.cases)


@dataclass(frozen=True)
class ObstructionReport:
    k: int
    l: int
    directions: tuple[DirectionResult, ...] = field(default=())

    def obstructed(self, pairing: str) -> bool:
        return any(d.obstructed for d in self.directions if d.pairing == pairing)

    @property
    def verdict(self) -> str:
        return "obstructed" if self.distinguishable else "not obstructed"

    @property
    def distinguishable(self) -> bool:
        return self.obstructed("preserving") and self.obstructed("swapping")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "directions": [
                {**{key: val for key, val in asdict(d).items() if key != "cases"},
                 "obstructed": d.obstructed,
                 "cases": [asdict(c) for c in d.cases]}
                for d in self.directions
            ],
            "preserving_obstructed": self.obstructed("preserving"),
            "swapping_obstructed": self.obstructed("swapping"),
            "distinguishable": self.distinguishable,
            "verdict": self.verdict,
        }


def _cases(K: int) -> list[tuple[int, int, int]]:
    return [(1, K, 1), (2, K, K), (3, 1, K)]


def direction_analysis(pairing: str, K: int, L: int) -> DirectionResult:
    """
    Assume S_K is carried to S_L. For each case B = diag(i, j), the
    preserving pairing needs i (a' - c') = L, j (b' - d') = -1; the swapping
    pairing needs i (-L a' + c') = -1, j (-L b' + d') = 1.
    """
    if pairing == "preserving":
        u, rhs = PRESERVING_ROW, (L, -1)
        eq = "{i}(a'-c')={r1}, {j}(b'-d')={r2}"
    elif pairing == "swapping":
        u, rhs = (-L, 1), (-1, 1)
        eq = "{i}(-{L}a'+c')={r1}, {j}(-{L}b'+d')={r2}"
    else:
        raise ValueError(pairing)
    out = []
    for case, i, j in _cases(K):
        sol = solve_case(u, i, j, *rhs)
        out.append(CaseResult(
            case, i, j, eq.format(i=i, j=j, L=L, r1=rhs[0], r2=rhs[1]),
            sol.solvable, sol.witness.as_lists() if sol.witness else None, sol.reason))
    return DirectionResult(pairing, K, L, tuple(out))


def theorem1_report(k: int, l: int) -> ObstructionReport:
    if k < 1 or l < 1:
        raise ValueError("k, l must be positive")
    dirs = tuple(direction_analysis(p, K, L)
                 for p in ("preserving", "swapping")
                 for K, L in ((k, l), (l, k)))
    return ObstructionReport(k, l, dirs)


def theorem1_distinguishable(k: int, l: int) -> bool:
    return theorem1_report(k, l).distinguishable
