"""Admissibility of rank-one local systems: a verifier and certificate builders.

A lift ``alpha`` of a local system ``L`` certifies admissibility when no
residue ``a_j`` and no point residue ``a(p)`` (over points of multiplicity at
least 3) is a positive integer.  The builders follow the constructive
arguments for the classes C_0, C_1, C_2 and for concurrent C_3 covers; a
bounded search over integer shifts is the fallback.  Nothing here ever claims
non-admissibility: the negative answer is always UNKNOWN.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional, Sequence

from .arrangement import (
    Arrangement,
    ArrangementError,
    IntersectionPoint,
    MultiplePoint,
    ProjPoint,
    multiple_points,
)
from .classify import classify, common_point, covers
from .exact import QComplex, fraction_str
from .local_system import (
    LocalSystem,
    LocalSystemError,
    PointResidue,
    ResidueVector,
    point_residue,
    point_residues,
    standard_lift,
)

DEFAULT_SEARCH_BOUND = 3


class InvariantViolation(RuntimeError):
    """A constructive step produced something that fails verification.

    For C_0/C_1/C_2 inputs this is a defect, never an answer.
    """


class Method(str, Enum):
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    C3_PROP = "C3_PROP"
    SEARCH = "SEARCH"


@dataclass(frozen=True)
class Violation:
    kind: str  # "exp", "line" or "point"
    where: str
    value: QComplex | None = None

    def __str__(self):
        if self.value is None:
            return f"{self.kind} {self.where}"
        return f"{self.kind} {self.where}: {self.value}"


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self):
        return self.ok


def verify(arr: Arrangement, alpha: ResidueVector, L: LocalSystem) -> VerifyResult:
    """Check the admissibility conditions literally on ``alpha``."""
    if len(alpha) != arr.n_lines or len(L) != arr.n_lines:
        raise LocalSystemError(
            f"size mismatch: {arr.n_lines} lines, {len(alpha)} residues, {len(L)} classes"
        )
    total = sum(alpha.entries, QComplex())
    if total != 0:
        raise LocalSystemError(f"residues sum to {total}, not 0")
    bad: list[Violation] = []
    for j, (a, c) in enumerate(zip(alpha.entries, L.classes)):
        if not (a - c).is_integer():
            bad.append(Violation("exp", f"L_{j}", a - c))
    for j, a in enumerate(alpha.entries):
        if a.is_positive_integer():
            bad.append(Violation("line", f"L_{j}", a))
    for pr in point_residues(arr, alpha):
        if pr.a_p.is_positive_integer():
            bad.append(Violation("point", f"{pr.point.point} on {_lines(pr.point.incident)}", pr.a_p))
    return VerifyResult(not bad, tuple(bad))


def _lines(idx) -> str:
    return "{" + ",".join(f"L_{j}" for j in idx) + "}"


# --- extremal points ---------------------------------------------------------

@dataclass(frozen=True)
class ExtremalData:
    """Largest positive-integer point residue on one line and where it is attained.

    ``m == 0`` and empty ``points`` when no candidate point qualifies.
    """

    line: int
    m: int
    points: tuple[MultiplePoint, ...]

    def to_json(self) -> dict:
        return {
            "line": self.line,
            "m": self.m,
            "points": [[fraction_str(c) for c in p.point.coords] for p in self.points],
        }


def extremal(
    arr: Arrangement,
    alpha: ResidueVector,
    line: int,
    exclude_point: Optional[ProjPoint] = None,
    exclude_line: Optional[int] = None,
) -> ExtremalData:
    if not 0 <= line < arr.n_lines:
        raise ArrangementError(f"line index {line} out of range")
    if exclude_line is not None and not 0 <= exclude_line < arr.n_lines:
        raise ArrangementError(f"line index {exclude_line} out of range")
    candidates = [
        mp for mp in multiple_points(arr)
        if line in mp.incident
        and mp.point != exclude_point
        and (exclude_line is None or exclude_line not in mp.incident)
    ]
    for mp in candidates:
        for j in mp.incident:
            re = alpha.entries[j].re
            if not 0 <= re < 1:
                raise ValueError(
                    f"extremal() needs real parts in [0,1) on the lines through candidate points; "
                    f"L_{j} has {fraction_str(re)}"
                )
    best, where = 0, []
    for mp in candidates:
        a = point_residue(alpha, mp.incident)
        if not a.is_positive_integer():
            continue
        b = int(a.re)
        if b > best:
            best, where = b, [mp]
        elif b == best:
            where.append(mp)
    return ExtremalData(line, best, tuple(where))


# --- certificates --------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    alpha: ResidueVector
    point_residues: tuple[PointResidue, ...]
    method: Method
    cover_used: tuple[int, ...]
    extremal: tuple[ExtremalData, ...] = ()

    def to_json(self) -> dict:
        return {
            "method": self.method.value,
            "cover_used": list(self.cover_used),
            "residues": self.alpha.to_json(),
            "point_residues": [pr.to_json() for pr in self.point_residues],
            "extremal": [e.to_json() for e in self.extremal],
        }


def _certificate(arr, L, alpha, method, cover, extremal_data=()) -> Certificate:
    check = verify(arr, alpha, L)
    if not check:
        raise InvariantViolation(
            f"{method.value} construction with cover {tuple(cover)} failed verification: "
            + "; ".join(str(v) for v in check.violations)
        )
    return Certificate(alpha, tuple(point_residues(arr, alpha)), method, tuple(cover), tuple(extremal_data))


def _check_cover(arr: Arrangement, cover: Sequence[int]) -> None:
    if len(set(cover)) != len(cover):
        raise ValueError(f"cover {tuple(cover)} repeats a line")
    if not covers(arr, cover):
        raise ValueError(f"lines {tuple(cover)} do not contain every point of multiplicity >= 3")


def certify_c0_c1(arr: Arrangement, L: LocalSystem, cover: Sequence[int] = ()) -> Certificate:
    """Standard lift based at the covering line (any line when there is none)."""
    cover = tuple(cover)
    if len(cover) > 1:
        raise ValueError("certify_c0_c1 takes a cover of at most one line")
    _check_cover(arr, cover)
    base = cover[0] if cover else 0
    method = Method.C1 if multiple_points(arr) else Method.C0
    return _certificate(arr, L, standard_lift(L, base), method, cover)


def c2_shift(arr: Arrangement, L: LocalSystem, cover: Sequence[int]) -> tuple[ResidueVector, ExtremalData]:
    """Lift based at ``cover[0]``, then move the extremal value ``m`` from ``cover[1]`` to ``cover[0]``."""
    l0, l1 = cover
    alpha = standard_lift(L, l0)
    ext = extremal(arr, alpha, l1, exclude_line=l0)
    if ext.m == 0:
        return alpha, ext
    shift = [0] * arr.n_lines
    shift[l0], shift[l1] = ext.m, -ext.m
    return alpha.shifted(shift), ext


def certify_c2(arr: Arrangement, L: LocalSystem, cover: Sequence[int]) -> Certificate:
    cover = tuple(cover)
    if len(cover) != 2:
        raise ValueError("certify_c2 takes an ordered pair of lines")
    _check_cover(arr, cover)
    alpha, ext = c2_shift(arr, L, cover)
    return _certificate(arr, L, alpha, Method.C2, cover, (ext,))


@dataclass(frozen=True)
class ConditionFailed:
    """The concurrent-triple criterion does not apply.

    ``point`` is the first offending multiple point on the first cover line
    (canonical point order); ``failures`` lists every offending point with the
    reason.  ``candidate`` is the doubly shifted lift, which may still be
    inspected (its residues at the offending points are the quantities that
    would have to avoid the positive integers).
    """

    cover: tuple[int, int, int]
    point: MultiplePoint
    failures: tuple[tuple[MultiplePoint, str], ...]
    candidate: ResidueVector
    extremal: tuple[ExtremalData, ExtremalData]

    def describe(self) -> str:
        parts = [f"{q.point} ({reason})" for q, reason in self.failures]
        return f"cover {self.cover}: condition (iii) fails at " + ", ".join(parts)


def prop_shift(
    arr: Arrangement, L: LocalSystem, cover: Sequence[int]
) -> tuple[ResidueVector, ExtremalData, ExtremalData, IntersectionPoint]:
    """Shift for a concurrent triple ``(l0, l1, l2)`` through a point O.

    ``a_1 -= m_1``, ``a_2 -= m_2`` and ``a_0 += m_1 + m_2``, starting from the
    lift based at ``l0``; extremal values exclude O.
    """
    l0, l1, l2 = cover
    center = common_point(arr, cover)
    if center is None:
        raise ValueError(f"lines {tuple(cover)} are not concurrent")
    alpha = standard_lift(L, l0)
    e1 = extremal(arr, alpha, l1, exclude_point=center.point)
    e2 = extremal(arr, alpha, l2, exclude_point=center.point)
    shift = [0] * arr.n_lines
    shift[l0] = e1.m + e2.m
    shift[l1] -= e1.m
    shift[l2] -= e2.m
    return alpha.shifted(shift), e1, e2, center



def _condition_iii(q: MultiplePoint, p1s, p2s) -> str | None:
    """None when q is fine, else a reason string."""
    yq = set(q.incident)
    d1 = [p for p in p1s if not yq.intersection(p.incident)]
    d2 = [p for p in p2s if not yq.intersection(p.incident)]
    if d1 and d2:
        return None
    if not d1 and not d2:
        return "both P_1\\Y_q and P_2\\Y_q are empty"
    # (b): a witness off Y_q and a partner joined to it by a line outside the arrangement
    witnesses, partners = (d1, p2s) if d1 else (d2, p1s)
    for p in witnesses:
        for r in partners:
            if not set(p.incident).intersection(r.incident):
                return None
    side = "P_1\\Y_q" if d1 else "P_2\\Y_q"
    return f"only {side} is nonempty and every line joining its points to the other extremal set is in the arrangement"


def certify_c3_concurrent(
    arr: Arrangement, L: LocalSystem, cover: Sequence[int]
) -> Certificate | ConditionFailed:
    cover = tuple(cover)
    if len(cover) != 3:
        raise ValueError("certify_c3_concurrent takes an ordered triple of lines")
    _check_cover(arr, cover)
    l0, l1, l2 = cover
    alpha, e1, e2, center = prop_shift(arr, L, cover)
    if e1.m and e2.m:
        failures = []
        for q in multiple_points(arr):
            if l0 not in q.incident or q.point == center.point:
                continue
            reason = _condition_iii(q, e1.points, e2.points)
            if reason is not None:
                failures.append((q, reason))
        if failures:
            return ConditionFailed(cover, failures[0][0], tuple(failures), alpha, (e1, e2))
    return _certificate(arr, L, alpha, Method.C3_PROP, cover, (e1, e2))


# --- bounded search ------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    status: str  # "ADMISSIBLE" or "UNKNOWN"
    certificate: Certificate | None = None
    diagnostics: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return self.status == "ADMISSIBLE"

    def to_json(self) -> dict:
        cert = self.certificate.to_json() if self.certificate is not None else None
        out = {"verdict": self.status, "certificate": cert, "diagnostics": list(self.diagnostics)}
        return out


def _feasible_rest(k: int, bound: int, s: int, a: int) -> bool:
    """Can ``k`` entries in [-bound, bound] have sum ``s`` and absolute sum ``a``?"""
    if a < abs(s) or (a - s) % 2:
        return False
    if k == 0:
        return a == 0
    if bound == 0:
        return a == 0
    pos, neg = (a + s) // 2, (a - s) // 2
    return -(-pos // bound) - (-neg // bound) <= k


class _ShiftProblem:
    """Admissibility of ``lift + n`` for integer ``n``, reduced to integer inequalities.

    Shifting by integers never changes whether a residue is an integer, so
    only the integral entries and integral point residues can ever be
    positive integers; each gives a constraint ``value + (sum of shifts) <= 0``.
    """

    def __init__(self, arr: Arrangement, lift: ResidueVector, bound: int):
        self.n = arr.n_lines
        self.bound = bound
        self.lo = [-bound] * self.n
        self.hi = [bound] * self.n
        for j, a in enumerate(lift.entries):
            if a.is_integer():
                self.hi[j] = min(bound, -int(a.re))
        self.checks: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(self.n)]
        for mp in multiple_points(arr):
            a = point_residue(lift, mp.incident)
            if a.is_integer():
                self.checks[max(mp.incident)].append((mp.incident, int(a.re)))

    def first(self, total: int) -> list[int] | None:
        """Lexicographically first admissible shift with the given absolute sum."""
        if any(h < l for l, h in zip(self.lo, self.hi)):
            return None
        vec = [0] * self.n
        return self._dfs(0, 0, 0, total, vec)

    def _dfs(self, i, s, a, total, vec):
        if i == self.n:
            return list(vec) if s == 0 and a == total else None
        rest = self.n - i - 1
        for x in range(self.lo[i], self.hi[i] + 1):
            s2, a2 = s + x, a + abs(x)
            if a2 > total or not _feasible_rest(rest, self.bound, -s2, total - a2):
                continue
            vec[i] = x
            if any(w + sum(vec[j] for j in idx) > 0 for idx, w in self.checks[i]):
                continue
            found = self._dfs(i + 1, s2, a2, total, vec)
            if found is not None:
                return found
        vec[i] = 0
        return None


def bounded_shift_search(
    arr: Arrangement, L: LocalSystem, bound: int = DEFAULT_SEARCH_BOUND, base: int | None = None
) -> Verdict:
    """Search integer shifts ``n`` (``|n_j| <= bound``, ``sum(n) == 0``) of standard lifts.

    Order: absolute sum of ``n`` ascending, then base line ascending (only
    ``base`` when given), then ``n`` lexicographically.  The first hit is
    re-checked with :func:`verify`.
    """
    if bound < 0:
        raise ValueError("search bound must be >= 0")
    if len(L) != arr.n_lines:
        raise LocalSystemError(f"local system has {len(L)} classes, arrangement {arr.n_lines} lines")
    bases = range(arr.n_lines) if base is None else [base]
    problems = [(b, standard_lift(L, b)) for b in bases]
    problems = [(b, lift, _ShiftProblem(arr, lift, bound)) for b, lift in problems]
    max_total = arr.n_lines * bound
    for total in range(0, max_total + 1, 2):
        for b, lift, prob in problems:
            n = prob.first(total)
            if n is None:
                continue
            cert = _certificate(arr, L, lift.shifted(n), Method.SEARCH, (b,))
            return Verdict("ADMISSIBLE", cert, (f"search: base L_{b}, shift {n}",))
    where = "every base line" if base is None else f"base L_{base}"
    return Verdict("UNKNOWN", None, (f"search: no admissible shift with |n_j| <= {bound} from {where}",))


# --- dispatch ---------------------------------------------------------------------

def decide(arr: Arrangement, L: LocalSystem, search_bound: int = DEFAULT_SEARCH_BOUND) -> Verdict:
    if len(L) != arr.n_lines:
        raise LocalSystemError(f"local system has {len(L)} classes, arrangement {arr.n_lines} lines")
    cls = classify(arr)
    diagnostics: list[str] = [f"class {cls.label}"]
    if cls.k <= 1:
        cert = certify_c0_c1(arr, L, cls.minimal_covers[0])
        return Verdict("ADMISSIBLE", cert, tuple(diagnostics))
    if cls.k == 2:
        errors = []
        for cov in cls.minimal_covers:
            for ordered in permutations(cov):
                try:
                    return Verdict("ADMISSIBLE", certify_c2(arr, L, ordered), tuple(diagnostics))
                except InvariantViolation as exc:
                    errors.append(str(exc))
        raise InvariantViolation("no C2 construction succeeded: " + " | ".join(errors))
    if cls.k == 3:
        concurrent = [c for c in cls.minimal_covers if common_point(arr, c) is not None]
        if not concurrent:
            diagnostics.append("no concurrent minimal cover; concurrent-triple criterion not applicable")
        for cov in concurrent:
            for ordered in permutations(cov):
                res = certify_c3_concurrent(arr, L, ordered)
                if isinstance(res, Certificate):
                    return Verdict("ADMISSIBLE", res, tuple(diagnostics))
                diagnostics.append(res.describe())
    else:
        diagnostics.append("k > 3: no constructive criterion")
    found = bounded_shift_search(arr, L, search_bound)
    return Verdict(found.status, found.certificate, tuple(diagnostics) + found.diagnostics)
