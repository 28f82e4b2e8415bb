"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from generators import random_arrangement, random_local_system, random_low_k_arrangement  # noqa: E402
from lineadmit import corpus  # noqa: E402
from lineadmit.admissibility import (  # noqa: E402
    ConditionFailed,
    Method,
    bounded_shift_search,
    certify_c3_concurrent,
    decide,
    extremal,
    prop_shift,
    verify,
)
from lineadmit.aomoto import aomoto_dims, betti, differentials  # noqa: E402
from lineadmit.arrangement import ArrangementError, ProjLine, ProjPoint, build, multiple_points  # noqa: E402
from lineadmit.classify import classify  # noqa: E402
from lineadmit.exact import QComplex  # noqa: E402
from lineadmit.local_system import LocalSystem, ResidueVector, point_residue, standard_lift  # noqa: E402

RESULTS: list[str] = []
N_THEOREM = 500
N_EX33 = 250


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)


def _theorem_corpus():
    rng = random.Random(20241)
    return [
        (arr, cls, random_local_system(rng, arr.n_lines))
        for arr, cls in (random_low_k_arrangement(rng, 4, 10) for _ in range(N_THEOREM))
    ]


_CACHE: dict = {}


def theorem_corpus():
    if "c" not in _CACHE:
        _CACHE["c"] = _theorem_corpus()
    return _CACHE["c"]


# --- 1 -------------------------------------------------------------------------------

def test_criterion_1_suciu_reproduction():
    t = time.perf_counter()
    entry = corpus.get("suciu_deleted_b3")
    arr = entry.arrangement()
    computed = {mp.incident: (mp.point, mp.multiplicity) for mp in multiple_points(arr)}
    cls = classify(arr)
    elapsed = time.perf_counter() - t
    expected = {
        (0, 1, 2): ProjPoint(0, 0, 1),      # O
        (1, 3, 4): ProjPoint(1, 1, 1),      # p1
        (1, 5, 6, 7): ProjPoint(1, 1, 0),   # p1'
        (2, 3, 6): ProjPoint(1, 0, 1),      # p2
        (2, 4, 7): ProjPoint(1, 0, 0),      # p2'
        (0, 4, 5): ProjPoint(0, 1, 1),      # q1, computed from L_0, L_4, L_5
        (0, 3, 7): ProjPoint(0, 1, 0),      # q2
    }
    ok = (
        {inc: p for inc, (p, _) in computed.items()} == expected
        and computed[(1, 5, 6, 7)][1] == 4
        and cls.k == 3
        and (0, 1, 2) in cls.minimal_covers
        and cls.concurrent_flag
        and elapsed < 1.0
    )
    report(1, ok, f"7 multiple points, k = {cls.k}, concurrent cover (0,1,2): {(0, 1, 2) in cls.minimal_covers}; {elapsed:.3f} s (< 1 s)")
    assert ok


# --- 2 -------------------------------------------------------------------------------

def test_criterion_2_rho_trace():
    entry = corpus.get("suciu_deleted_b3")
    arr = entry.arrangement()
    rho = entry.local_systems["rho"]
    alpha = standard_lift(rho, 0)
    e1 = extremal(arr, alpha, 1, exclude_line=0)
    e2 = extremal(arr, alpha, 2, exclude_line=0)
    p = {lbl: entry.point(lbl).coords for lbl in ("p1", "p1'", "p2", "p2'", "q2")}
    res = certify_c3_concurrent(arr, rho, (0, 1, 2))
    ok = (
        alpha.entries[0] == -2
        and (e1.m, e2.m) == (1, 1)
        and {x.point for x in e1.points} == {p["p1"], p["p1'"]}
        and {x.point for x in e2.points} == {p["p2"], p["p2'"]}
        and isinstance(res, ConditionFailed)
        and res.point.point == p["q2"]
        and res.failures[0][0].point == p["q2"]
        and res.failures[0][1] == "both P_1\\Y_q and P_2\\Y_q are empty"
    )
    where = res.point.point if isinstance(res, ConditionFailed) else None
    report(2, ok, f"a_0 = {alpha.entries[0]}, m = ({e1.m}, {e2.m}), condition (iii) first fails at {where}")
    assert ok


# --- 3 -------------------------------------------------------------------------------

def test_criterion_3_theorem_suite():
    t = time.perf_counter()
    data = theorem_corpus()
    bad = []
    methods: dict = {}
    for n, (arr, cls, L) in enumerate(data):
        v = decide(arr, L)
        if not (v.admissible and verify(arr, v.certificate.alpha, L)):
            bad.append(n)
            continue
        methods[v.certificate.method.value] = methods.get(v.certificate.method.value, 0) + 1
    elapsed = time.perf_counter() - t
    sizes = {arr.n_lines for arr, _, _ in data}
    ks = {cls.k for _, cls, _ in data}
    ok = not bad and len(data) >= 500 and min(sizes) >= 4 and max(sizes) <= 10 and ks <= {0, 1, 2} and elapsed < 60
    report(3, ok, f"{len(data) - len(bad)}/{len(data)} ADMISSIBLE and verified (k in {sorted(ks)}, "
                  f"{min(sizes)}-{max(sizes)} lines, methods {dict(sorted(methods.items()))}); {elapsed:.1f} s (< 60 s)")
    assert ok, f"failing instances: {bad[:10]}"


# --- 4 -------------------------------------------------------------------------------

def test_criterion_4_c3_all_admissible():
    entry = corpus.get("c3_all_admissible")
    arr = entry.arrangement()
    rng = random.Random(33)
    bad, methods = 0, {}
    for _ in range(N_EX33):
        L = random_local_system(rng, arr.n_lines, real_bias=1.0)
        v = decide(arr, L)
        if not (v.admissible and verify(arr, v.certificate.alpha, L)):
            bad += 1
        else:
            methods[v.certificate.method.value] = methods.get(v.certificate.method.value, 0) + 1
    p1, p2 = entry.point("p1").coords, entry.point("p2").coords
    structural = p1 == ProjPoint.affine(-3, 0) and p2 == ProjPoint.affine(3, 0)
    for label in ("q1", "q2"):
        q = entry.point(label).coords
        for i in arr.lines_through(q):
            structural &= not arr.lines[i].contains(p1) and not arr.lines[i].contains(p2)
    ok = bad == 0 and structural
    report(4, ok, f"{N_EX33 - bad}/{N_EX33} ADMISSIBLE (methods {dict(sorted(methods.items()))}); "
                  f"no line through q1, q2 meets p1 or p2: {structural}")
    assert ok


# --- 5 -------------------------------------------------------------------------------

def test_criterion_5_oracle_agreement():
    data = theorem_corpus()
    unknown = 0
    for arr, _, L in data:
        v = bounded_shift_search(arr, L, 3)
        if not (v.admissible and verify(arr, v.certificate.alpha, L)):
            unknown += 1
    # every certificate from every method, across the corpus examples as well
    seen, unverified = set(), 0
    rng = random.Random(55)
    pool = [(arr, L) for arr, _, L in data[:100]]
    for name in corpus.names():
        entry = corpus.get(name)
        a = entry.arrangement()
        pool += [(a, L) for L in entry.local_systems.values()]
        pool += [(a, random_local_system(rng, a.n_lines)) for _ in range(20)]
    for arr, L in pool:
        for v in (decide(arr, L), bounded_shift_search(arr, L, 2)):
            if v.admissible:
                seen.add(v.certificate.method)
                unverified += not verify(arr, v.certificate.alpha, L)
    ok = unknown == 0 and unverified == 0 and seen == set(Method)
    report(5, ok, f"search (bound 3) ADMISSIBLE on {len(data) - unknown}/{len(data)}; "
                  f"{unverified} unverified certificates across methods {sorted(m.value for m in seen)}")
    assert ok


# --- 6 -------------------------------------------------------------------------------

PARTIAL_SYSTEM = {
    1: QComplex(F(1, 2), F(1, 3)), 3: QComplex(F(1, 4), F(-1, 3)), 6: QComplex(F(1, 4)),
    2: QComplex(F(2, 3)), 4: QComplex(F(2, 3), F(1, 5)), 5: QComplex(F(2, 3), F(-1, 5)),
    7: QComplex(F(1, 5), F(1, 7)),
}


def test_criterion_6_partial_residue_formulas():
    entry = corpus.get("c3_partial")
    arr = entry.arrangement()
    a = PARTIAL_SYSTEM
    L = LocalSystem([-sum(a.values(), QComplex())] + [a[j] for j in range(1, 8)])
    alpha, e1, e2, _ = prop_shift(arr, L, (0, 1, 2))
    s = alpha.entries
    im16 = sum((a[k].im for k in range(1, 7)), F(0))
    r1 = a[5] + a[6] - a[7] - QComplex(0, im16)
    r2 = a[3] + a[4] - a[7] - QComplex(0, im16)
    res_q1 = point_residue(alpha, entry.point("q1").incident)
    res_q2 = point_residue(alpha, entry.point("q2").incident)
    ok = (
        bool(e1.points) and bool(e2.points)
        and res_q1 == s[0] + s[5] + s[6] == r1
        and res_q2 == s[0] + s[3] + s[4] == r2
    )
    report(6, ok, f"P_1, P_2 nonempty (m = {e1.m}, {e2.m}); a(q1) = {res_q1} = r_1, a(q2) = {res_q2} = r_2")
    assert ok


# --- 7 -------------------------------------------------------------------------------

def _pencil(m):
    return build([ProjLine(1, k, 0) for k in range(m - 1)] + [ProjLine(0, 1, 0)])


def _random_pairs(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        try:
            arr = random_arrangement(rng, rng.choice([0, 1, 2, 3]), 3, 9)
        except ArrangementError:
            continue
        L = random_local_system(rng, arr.n_lines)
        shift = [rng.randint(-2, 2) for _ in range(arr.n_lines - 1)]
        out.append((arr, standard_lift(L, 0).shifted(shift + [-sum(shift)])))
    return out


def test_criterion_7_aomoto_sanity():
    t = time.perf_counter()
    arrs = [corpus.get(n).arrangement() for n in corpus.names()] + [a for a, _ in _random_pairs(70, 10)]
    part_a = all(
        (r.h0, r.h1, r.h2) == betti(arr)
        for arr in arrs
        for r in [aomoto_dims(arr, ResidueVector([0] * arr.n_lines))]
    )
    part_b = True
    for m in (3, 4, 5):
        entries = [QComplex(F(2 * k + 1, 11), F(k, 13)) for k in range(m - 1)]
        entries.append(-sum(entries, QComplex()))
        part_b &= aomoto_dims(_pencil(m), ResidueVector(entries), 0).h1 == m - 2
    part_c = all((d1 @ d0).is_zero() for arr, al in _random_pairs(71, 100) for d0, d1 in [differentials(arr, al, 0)])
    part_d = all(
        len({(r.h0, r.h1, r.h2) for r in (aomoto_dims(arr, al, b) for b in range(arr.n_lines))}) == 1
        for arr, al in _random_pairs(72, 20)
    )
    elapsed = time.perf_counter() - t
    ok = part_a and part_b and part_c and part_d and elapsed < 10
    report(7, ok, f"(a) {part_a} (b) {part_b} (c) {part_c} (d) {part_d}; {elapsed:.2f} s (< 10 s)")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
