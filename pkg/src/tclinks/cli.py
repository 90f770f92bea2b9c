"""
Command line interface.

    tclinks invariants --n 3 --a "1 1 2" --b D2
    tclinks cover --k 2 --p1 1 --q1 0
    tclinks distinguish --k 1 --l 3
    tclinks sweep --kmax 5 --range 3 --lmax 10
    tclinks normal-form --n 3 --w "1 2 1 -2"
    tclinks tilde --n 2 --m 2 --w 1

Exit status: 0 success, 2 bad input, 3 a verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from .braidword import BraidError, BraidWord, parse_braid
from .cover import decorate, intersection_numbers, parse_decoration, tilde
from .family import (
    decorated_cover,
    family_decoration,
    homology_distinguishable,
    lemma_closed_form,
    make_full_twist,
    make_S,
    make_X,
    theorem1_report,
)
from .garside import half_twist, normal_form, simple_to_letters
from .tclink import NonCommutingError, all_triple_linkings, build_link, link_report, lk_table

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3


class InputError(Exception):
    pass


def expand_word(text: str, n: int) -> BraidWord:
    """Braid word text with the macros D (half twist) and D2 (full twist)."""
    letters: list[int] = []
    for tok in text.split():
        if tok == "D":
            letters.extend(half_twist(n).letters)
        elif tok == "D2":
            letters.extend(half_twist(n).letters * 2)
        else:
            letters.extend(parse_braid(tok, n).letters)
    return BraidWord(n, tuple(letters))


def _flatten(obj: Any, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        out = []
        for key, val in obj.items():
            out.extend(_flatten(val, f"{prefix}.{key}" if prefix else str(key)))
        return out
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        out = []
        for i, val in enumerate(obj):
            out.extend(_flatten(val, f"{prefix}[{i}]"))
        return out or [f"{prefix} = []"]
    return [f"{prefix} = {json.dumps(obj)}"]


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, sort_keys=False)
    return "\n".join(_flatten(report))


def _report(command: str, inputs: dict, outputs: dict, status: str = "ok") -> dict:
    return {"command": command, "inputs": inputs, "outputs": outputs, "status": status}


# ---------------------------------------------------------------------------


def cmd_invariants(args) -> tuple[dict, int]:
    a = expand_word(args.a, args.n)
    b = expand_word(args.b, args.n)
    inputs = {"n": args.n, "a": list(a.letters), "b": list(b.letters),
              "unchecked": args.unchecked}
    try:
        L = build_link(a, b, check=not args.unchecked)
    except NonCommutingError as e:
        w = e.witness
        out = {"error": str(e),
               "commutator_normal_form": {"infimum": w.infimum,
                                          "factors": [simple_to_letters(p) for p in w.factors]}}
        return _report("invariants", inputs, out, "non-commuting"), EXIT_INPUT
    return _report("invariants", inputs, link_report(L)), EXIT_OK


def _cover_checks(k: int, tlk, pq: tuple[int, int, int, int]) -> list[dict]:
    expected = lemma_closed_form(k, *pq)
    checks = []
    for ijk, want in zip(((1, 2, 3), (2, 3, 4)), expected):
        got = tlk[ijk]
        checks.append({"name": "Tlk_{%d,%d,%d}" % ijk, "computed": got,
                       "closed_form": want, "status": "MATCH" if got == want else "MISMATCH"})
    for (i, j), (x, y) in (((1, 2), (3, 4)), ((2, 1), (3, 4)),
                           ((3, 4), (1, 2)), ((4, 3), (1, 2))):
        u, v = tlk[(i, j, x)], tlk[(i, j, y)]
        checks.append({"name": f"Tlk_{{{i},{j},{x}}} = Tlk_{{{i},{j},{y}}}",
                       "computed": u, "closed_form": v,
                       "status": "MATCH" if u == v else "MISMATCH"})
    return checks


def cmd_cover(args) -> tuple[dict, int]:
    k = args.k
    if k < 1:
        raise InputError("--k must be positive")
    base = make_S(k).link
    if args.decoration:
        with open(args.decoration) as fh:
            d = parse_decoration(fh.read(), k + 1)
    else:
        d = family_decoration(k, args.p1, args.q1, args.p2, args.q2)
    inter = intersection_numbers(base, d)
    inputs = {"k": k, "a_twists": list(d.a_twists), "b_twists": list(d.b_twists),
              "unchecked": args.unchecked}
    if any(x % 2 for pair in inter for x in pair):
        return _report("cover", inputs, {"intersection_numbers": [list(p) for p in inter],
                                         "error": "odd intersection number: cover is not 4 components"}
                       , "invalid-decoration"), EXIT_INPUT
    a, b = decorate(tilde(make_X(k), 2), tilde(make_full_twist(k + 1), 2), d)
    try:
        L = build_link(a, b, check=not args.unchecked)
    except NonCommutingError as e:
        return _report("cover", inputs, {"error": str(e)}, "non-commuting"), EXIT_INPUT
    t = lk_table(L)
    out = link_report(L, t)
    out["intersection_numbers"] = [list(p) for p in inter]
    pq = (inter[0][0] // 2, inter[0][1] // 2, inter[1][0] // 2, inter[1][1] // 2)
    out["checks"] = _cover_checks(k, all_triple_linkings(L, t), pq)
    bad = any(c["status"] != "MATCH" for c in out["checks"])
    return (_report("cover", inputs, out, "mismatch" if bad else "ok"),
            EXIT_MISMATCH if bad else EXIT_OK)


def cmd_distinguish(args) -> tuple[dict, int]:
    if args.k < 1 or args.l < 1:
        raise InputError("--k and --l must be positive")
    rep = theorem1_report(args.k, args.l)
    out = {"homology_distinguishable": homology_distinguishable(args.k, args.l),
           "theorem1": rep.to_dict()}
    return _report("distinguish", {"k": args.k, "l": args.l}, out), EXIT_OK


def sweep_cell(cell: tuple[int, int, int, int, int]) -> dict:
    k, p1, q1, p2, q2 = cell
    L = decorated_cover(k, p1, q1, p2, q2, check=False)
    tlk = all_triple_linkings(L)
    e123, e234 = lemma_closed_form(k, p1, q1, p2, q2)
    sym = all(tlk[(i, j, 3)] == tlk[(i, j, 4)] for i, j in ((1, 2), (2, 1))) and \
        all(tlk[(i, j, 1)] == tlk[(i, j, 2)] for i, j in ((3, 4), (4, 3)))
    anti = all(v == -tlk[(kk, j, i)] for (i, j, kk), v in tlk.values.items())
    return {"cell": list(cell), "tlk123": tlk[(1, 2, 3)], "tlk234": tlk[(2, 3, 4)],
            "tlk432": tlk[(4, 3, 2)], "expected": [e123, e234],
            "symmetry": sym, "antisymmetry": anti}


def cmd_sweep(args) -> tuple[dict, int]:
    r = args.range
    cells = [(k, p1, q1, p2, q2)
             for k in range(1, args.kmax + 1)
             for p1 in range(-r, r + 1) for q1 in range(-r, r + 1)
             for p2 in range(-r, r + 1) for q2 in range(-r, r + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(sweep_cell, cells, chunksize=256))
    else:
        results = [sweep_cell(c) for c in cells]
    m123 = [x["cell"] for x in results if x["tlk123"] != x["expected"][0]]
    m234 = [x["cell"] for x in results if x["tlk234"] != x["expected"][1]]
    m432 = [x["cell"] for x in results if x["tlk432"] != x["expected"][1]]
    sym = [x["cell"] for x in results if not x["symmetry"]]
    anti = [x["cell"] for x in results if not x["antisymmetry"]]

    grid_bad = []
    for k in range(1, args.lmax + 1):
        for l in range(1, args.lmax + 1):
            t1 = theorem1_report(k, l).distinguishable
            hom = homology_distinguishable(k, l)
            if t1 != (k != l) or hom != ((k - l) % 2 != 0) or (hom and not t1):
                grid_bad.append([k, l])

    out = {
        "cells": len(cells),
        "tlk123_mismatches": len(m123),
        "tlk234_mismatches": len(m234),
        "tlk432_mismatches": len(m432),
        "symmetry_failures": len(sym),
        "antisymmetry_failures": len(anti),
        "grid_size": args.lmax * args.lmax,
        "grid_failures": grid_bad,
        "first_mismatches": {"tlk123": m123[:5], "tlk234": m234[:5]},
    }
    bad = m123 or m234 or sym or anti or grid_bad
    return (_report("sweep", {"kmax": args.kmax, "range": r, "lmax": args.lmax}, out,
                    "mismatch" if bad else "ok"),
            EXIT_MISMATCH if bad else EXIT_OK)


def cmd_normal_form(args) -> tuple[dict, int]:
    w = expand_word(args.w, args.n)
    nf = normal_form(w)
    out = {"infimum": nf.infimum,
           "factors": [[x + 1 for x in p] for p in nf.factors],
           "factor_words": nf.factor_words(),
           "word": list(nf.to_word().letters),
           "exponent_sum": w.exponent_sum}
    return _report("normal-form", {"n": args.n, "w": list(w.letters)}, out), EXIT_OK


def cmd_tilde(args) -> tuple[dict, int]:
    w = expand_word(args.w, args.n)
    if args.m < 1:
        raise InputError("--m must be positive")
    t = tilde(w, args.m)
    out = {"strands": t.strands, "word": list(t.letters), "exponent_sum": t.exponent_sum}
    return _report("tilde", {"n": args.n, "m": args.m, "w": list(w.letters)}, out), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tclinks", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--timing", action="store_true",
                        help="add wall-clock seconds to the report (breaks determinism)")

    sp = sub.add_parser("invariants", help="linking tables and triple linking of S_n(a, b)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--unchecked", action="store_true", help="skip the commutation check")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("cover", help="decorated degree-2 cover of S_k")
    sp.add_argument("--k", type=int, required=True)
    for name in ("p1", "q1", "p2", "q2"):
        sp.add_argument(f"--{name}", type=int, default=0)
    sp.add_argument("--decoration", help="file of 's a_twist b_twist' records")
    sp.add_argument("--unchecked", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("distinguish", help="homological and matrix obstructions for S_k vs S_l")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_distinguish)

    sp = sub.add_parser("sweep", help="closed-form sweep over decorated covers and the (k, l) grid")
    sp.add_argument("--kmax", type=int, default=5)
    sp.add_argument("--range", type=int, default=3)
    sp.add_argument("--lmax", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("normal-form", help="Garside left normal form")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--w", required=True)
    common(sp)
    sp.set_defaults(func=cmd_normal_form)

    sp = sub.add_parser("tilde", help="cable a braid into its degree-m cover")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--w", required=True)
    common(sp)
    sp.set_defaults(func=cmd_tilde)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except (BraidError, InputError, ValueError, OSError) as e:
        report = _report(args.command, {}, {"error": str(e)}, "input-error")
        code = EXIT_INPUT
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    print(render(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
