"""
Acceptance criteria, one test each. Every test prints a single PASS/FAIL
line (also collected into the terminal summary).
"""

import itertools
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from tclinks.braidword import BraidWord
from tclinks.cover import tilde
from tclinks.family import (
    decorated_cover,
    homology_distinguishable,
    lemma_closed_form,
    make_full_twist,
    make_S,
    make_X,
    theorem1_distinguishable,
)
from tclinks.garside import braids_equal, commutes
from tclinks.tclink import all_triple_linkings, lk_table

SEED = 20240601
SWEEP_K = range(1, 6)
SWEEP_R = range(-3, 4)


def verdict(number: int, name: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {name}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture(scope="module")
def sweep():
    """Every decorated cover of the grid, with its linking table and Tlk table."""
    t0 = time.perf_counter()
    cells = []
    for k in SWEEP_K:
        for p1, q1, p2, q2 in itertools.product(SWEEP_R, repeat=4):
            L = decorated_cover(k, p1, q1, p2, q2, check=False)
            table = lk_table(L)
            cells.append(((k, p1, q1, p2, q2), L, table, all_triple_linkings(L, table)))
    return cells, time.perf_counter() - t0


def test_base_family_linking():
    t0 = time.perf_counter()
    bad = []
    for k in range(1, 9):
        t = lk_table(make_S(k).link)
        got = (t.get("a", 1, 2), t.get("b", 1, 2), t.get("b", 2, 1))
        if got != (1, k, 1):
            bad.append((k, got))
    dt = time.perf_counter() - t0
    verdict(1, "base-family linking data k=1..8", not bad and dt < 1.0,
            f"{len(bad)} mismatches, {dt:.3f}s (limit 1s)")


def test_closed_form_sweep(sweep):
    cells, dt = sweep
    m123 = [c for c, _, _, tlk in cells if tlk[(1, 2, 3)] != lemma_closed_form(*c)[0]]
    m234 = [c for c, _, _, tlk in cells if tlk[(2, 3, 4)] != lemma_closed_form(*c)[1]]
    flipped = sum(tlk[(2, 3, 4)] == -lemma_closed_form(*c)[1] for c, _, _, tlk in cells)
    ok = not m123 and not m234 and len(cells) == 5 * 7 ** 4 and dt < 60
    verdict(2, "closed-form sweep Tlk_{1,2,3} = -k p1 + q1 and Tlk_{2,3,4} = -p2 + q2", ok,
            f"{len(cells)} cells, Tlk_123 mismatches {len(m123)}, Tlk_234 mismatches "
            f"{len(m234)} (first {m234[:3]}; Tlk_234 = p2 - q2 on {flipped} cells), "
            f"{dt:.1f}s (limit 60s)")


def test_cover_symmetries(sweep):
    cells, _ = sweep
    bad = [c for c, _, _, tlk in cells
           if any(tlk[(i, j, 3)] != tlk[(i, j, 4)] for i, j in ((1, 2), (2, 1)))
           or any(tlk[(i, j, 1)] != tlk[(i, j, 2)] for i, j in ((3, 4), (4, 3)))]
    verdict(3, "Tlk_{i,j,3} = Tlk_{i,j,4} and Tlk_{i,j,1} = Tlk_{i,j,2} on every cell", not bad,
            f"{len(cells)} cells, {len(bad)} failures")


def test_undecorated_covers_trivial():
    bad = []
    for k in range(1, 6):
        tlk = all_triple_linkings(decorated_cover(k))
        if len(tlk.values) != 24 or not tlk.is_trivial:
            bad.append(k)
    verdict(4, "undecorated covers of S_k (k<=5) have all 24 Tlk = 0", not bad,
            f"failing k: {bad}")


def test_distinguishability_grid():
    t0 = time.perf_counter()
    bad_t1, bad_hom = [], []
    for k, l in itertools.product(range(1, 11), repeat=2):
        if theorem1_distinguishable(k, l) != (k != l):
            bad_t1.append((k, l))
        if homology_distinguishable(k, l) != ((k - l) % 2 != 0):
            bad_hom.append((k, l))
    dt = time.perf_counter() - t0
    verdict(5, "distinguishability grid 10x10", not bad_t1 and not bad_hom and dt < 1.0,
            f"matrix obstruction failures {len(bad_t1)}, homology failures {len(bad_hom)}, "
            f"{dt:.3f}s (limit 1s)")


def test_tilde_homomorphism():
    bad = []
    for n in range(2, 6):
        def t(*letters):
            return tilde(BraidWord(n, letters), 2)
        for i in range(1, n):
            if not braids_equal(t(i, -i), t()):
                bad.append(("inverse", n, i))
            if i + 1 < n and not braids_equal(t(i, i + 1, i), t(i + 1, i, i + 1)):
                bad.append(("braid", n, i))
            for j in range(i + 2, n):
                if not braids_equal(t(i, j), t(j, i)):
                    bad.append(("far", n, i, j))
    rng = random.Random(SEED)
    exp_bad = 0
    for _ in range(500):
        n = rng.randint(2, 6)
        w = random_word(rng, n, rng.randint(0, 20))
        m = rng.randint(1, 3)
        exp_bad += tilde(w, m).exponent_sum != m * w.exponent_sum
    comm_bad = [k for k in range(1, 6)
                if not commutes(tilde(make_X(k), 2), tilde(make_full_twist(k + 1), 2))]
    verdict(6, "tilde homomorphism", not bad and not exp_bad and not comm_bad,
            f"relation failures {len(bad)}, exponent-sum failures {exp_bad}/500, "
            f"non-commuting k {comm_bad}")


def test_garside_soundness():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 1)
    bad = 0
    for _ in range(1000):
        n = rng.randint(2, 8)
        w = random_word(rng, n, rng.randint(0, 40))
        v = random_word(rng, n, rng.randint(0, 40))
        bad += not braids_equal(w * v * ~v, w)
    braid_rel = braids_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    central = all(commutes(make_full_twist(n), BraidWord(n, (g,)))
                  for n in range(2, 9) for g in range(1, n))
    dt = time.perf_counter() - t0
    verdict(7, "Garside soundness", not bad and braid_rel and central and dt < 30,
            f"{bad}/1000 cancellation failures, braid relation {braid_rel}, "
            f"full twist central {central}, {dt:.1f}s (limit 30s)")


def _property_failures(L, table, tlk):
    c = L.num_components
    out = 0
    for which, cyc in (("a", table.cycles_a), ("b", table.cycles_b)):
        for i, j in itertools.permutations(range(1, c + 1), 2):
            out += cyc[i - 1] * table.get(which, i, j) != cyc[j - 1] * table.get(which, j, i)
    out += sum(v != -tlk[(k, j, i)] for (i, j, k), v in tlk.values.items())
    return out


def test_property_suites(sweep):
    cells, _ = sweep
    links = [(L, t, tlk) for _, L, t, tlk in cells]
    for k in range(1, 9):
        L = make_S(k).link
        t = lk_table(L)  # choice independence is checked inside lk_table
        links.append((L, t, all_triple_linkings(L, t)))
    bad = sum(_property_failures(*x) for x in links)
    # the sweep skipped the commutation test; confirm it on a seeded sample
    rng = random.Random(SEED + 2)
    sample = rng.sample([c for c, *_ in cells], 100)
    non_comm = [c for c in sample if not commutes(*_words(c))]
    verdict(8, "antisymmetry, reciprocity and choice independence on constructed links",
            not bad and not non_comm,
            f"{len(links)} links, {bad} property failures, "
            f"{len(non_comm)}/{len(sample)} sampled covers failing commutation")


def _words(cell):
    L = decorated_cover(*cell, check=False)
    return L.a, L.b
