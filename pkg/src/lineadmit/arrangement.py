"""Projective line arrangements over Q: incidences, multiple points, deconing."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact import ZERO, fraction_str, to_fraction


class ArrangementError(ValueError):
    """Bad arrangement input (degenerate lines, duplicates, malformed JSON)."""


def _normalize(triple: Sequence, what: str) -> tuple[Fraction, Fraction, Fraction]:
    if len(triple) != 3:
        raise ArrangementError(f"{what} needs exactly 3 homogeneous coordinates, got {len(triple)}")
    vals = tuple(to_fraction(v) for v in triple)
    lead = next((v for v in vals if v != 0), None)
    if lead is None:
        raise ArrangementError(f"{what} with all coordinates zero")
    return tuple(v / lead for v in vals)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True, order=True)
class ProjLine:
    """The line ``a*x + b*y + c*z = 0``, first nonzero coefficient scaled to 1."""

    coeffs: tuple[Fraction, Fraction, Fraction]

    def __init__(self, a, b=None, c=None):
        triple = a if b is None and c is None else (a, b, c)
        object.__setattr__(self, "coeffs", _normalize(triple, "line"))

    @classmethod
    def affine(cls, slope, intercept) -> "ProjLine":
        """``y = slope*x + intercept`` in the chart ``z = 1``."""
        return cls(to_fraction(slope), -1, to_fraction(intercept))

    @classmethod
    def vertical(cls, c) -> "ProjLine":
        """``x = c`` in the chart ``z = 1``."""
        return cls(1, 0, -to_fraction(c))

    @classmethod
    def infinity(cls) -> "ProjLine":
        return cls(0, 0, 1)

    @property
    def is_infinity(self) -> bool:
        return self.coeffs == (ZERO, ZERO, Fraction(1))

    def contains(self, p: "ProjPoint") -> bool:
        return _dot(self.coeffs, p.coords) == 0

    def __str__(self):
        a, b, c = self.coeffs
        terms = []
        for coef, var in ((a, "x"), (b, "y"), (c, "z")):
            if coef == 0:
                continue
            mag = abs(coef)
            s = var if mag == 1 else f"{fraction_str(mag)}{var}"
            terms.append(("-" if coef < 0 else "+", s))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, s in terms[1:]:
            text += f" {sign} {s}"
        return f"{text} = 0"


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple[Fraction, Fraction, Fraction]

    def __init__(self, x, y=None, z=None):
        triple = x if y is None and z is None else (x, y, z)
        object.__setattr__(self, "coords", _normalize(triple, "point"))

    @classmethod
    def affine(cls, x, y) -> "ProjPoint":
        return cls(to_fraction(x), to_fraction(y), 1)

    @property
    def at_infinity(self) -> bool:
        return self.coords[2] == 0

    def affine_coords(self) -> tuple[Fraction, Fraction] | None:
        x, y, z = self.coords
        if z == 0:
            return None
        return x / z, y / z

    def __str__(self):
        return "(" + ":".join(fraction_str(c) for c in self.coords) + ")"


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise ArrangementError(f"degenerate pair: {l1} and {l2} are the same line")
    return ProjPoint(_cross(l1.coeffs, l2.coeffs))


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise ArrangementError(f"degenerate pair: the point {p} twice")
    return ProjLine(_cross(p.coords, q.coords))


@dataclass(frozen=True)
class IntersectionPoint:
    point: ProjPoint
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class MultiplePoint(IntersectionPoint):
    """Intersection point through at least three lines."""

    def __post_init__(self):
        if len(self.incident) < 3:
            raise ValueError("a multiple point needs at least 3 incident lines")


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of distinct projective lines and their intersection data.

    ``points`` holds every intersection point (double points included), sorted
    by normalized coordinates, each with its sorted tuple of incident indices.
    """

    lines: tuple[ProjLine, ...]
    points: tuple[IntersectionPoint, ...] = field(repr=False)
    infinity: int | None = None

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def lines_through(self, p: ProjPoint) -> tuple[int, ...]:
        return tuple(i for i, l in enumerate(self.lines) if l.contains(p))

    def point_of(self, i: int, j: int) -> IntersectionPoint:
        p = intersect(self.lines[i], self.lines[j])
        for ip in self.points:
            if ip.point == p:
                return ip
        raise AssertionError("intersection missing from arrangement data")

    def index_of(self, line: ProjLine) -> int | None:
        try:
            return self.lines.index(line)
        except ValueError:
            return None

    def relabel(self, perm: Sequence[int]) -> "Arrangement":
        """New arrangement whose line ``k`` is the old line ``perm[k]``."""
        if sorted(perm) != list(range(self.n_lines)):
            raise ArrangementError("relabeling must be a permutation of the line indices")
        inf = None if self.infinity is None else list(perm).index(self.infinity)
        return build([self.lines[i] for i in perm], infinity=inf)

    def to_json(self) -> dict:
        out = []
        for i, l in enumerate(self.lines):
            if i == self.infinity:
                out.append("infinity")
            else:
                out.append({"homog": [fraction_str(c) for c in l.coeffs]})
        return {"lines": out}


def build(lines: Iterable[ProjLine], infinity: int | None = None) -> Arrangement:
    """Compute every pairwise intersection and group them by point."""
    lines = tuple(lines)
    if len(lines) < 2:
        raise ArrangementError("an arrangement needs at least 2 lines")
    seen: dict[ProjLine, int] = {}
    for i, l in enumerate(lines):
        if l in seen:
            raise ArrangementError(f"duplicate line: L_{seen[l]} and L_{i} are both {l}")
        seen[l] = i
    if infinity is None:
        infinity = next((i for i, l in enumerate(lines) if l.is_infinity), None)
    else:
        if not 0 <= infinity < len(lines):
            raise ArrangementError(f"line at infinity index {infinity} out of range")
        if not lines[infinity].is_infinity:
            raise ArrangementError(f"L_{infinity} is marked as the line at infinity but is {lines[infinity]}")

    groups: dict[ProjPoint, set[int]] = defaultdict(set)
    for i, j in combinations(range(len(lines)), 2):
        p = intersect(lines[i], lines[j])
        groups[p].update((i, j))
    points = tuple(
        IntersectionPoint(p, tuple(sorted(groups[p]))) for p in sorted(groups)
    )
    return Arrangement(lines, points, infinity)


def multiple_points(arr: Arrangement, min_mult: int = 3) -> list[MultiplePoint]:
    return [
        MultiplePoint(ip.point, ip.incident)
        for ip in arr.points
        if ip.multiplicity >= min_mult
    ]


@dataclass(frozen=True)
class AffineArrangement:
    """View of an arrangement with one line sent to infinity."""

    source: Arrangement
    removed_line: int
    affine_points: tuple[IntersectionPoint, ...]
    parallel_classes: tuple[tuple[int, ...], ...]

    @property
    def affine_lines(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.source.n_lines) if i != self.removed_line)


def decone(arr: Arrangement, i: int) -> AffineArrangement:
    if not 0 <= i < arr.n_lines:
        raise ArrangementError(f"line index {i} out of range for {arr.n_lines} lines")
    affine, classes = [], []
    for ip in arr.points:
        if i in ip.incident:
            rest = tuple(j for j in ip.incident if j != i)
            classes.append(rest)
        else:
            affine.append(ip)
    classes.sort()
    return AffineArrangement(arr, i, tuple(affine), tuple(classes))


def recone(aff: AffineArrangement) -> Arrangement:
    """Rebuild the projective arrangement from a deconed view."""
    return build(aff.source.lines, infinity=aff.source.infinity)


# --- JSON ------------------------------------------------------------------

def parse_line(item, where: str = "line") -> tuple[ProjLine, bool]:
    """Parse one JSON line entry; the flag reports the line at infinity."""
    try:
        if item == "infinity":
            return ProjLine.infinity(), True
        if not isinstance(item, dict) or len(item) != 1:
            raise ArrangementError(
                f"{where}: expected \"infinity\" or an object with one of homog/affine/vertical"
            )
        (kind, value), = item.items()
        if kind == "homog":
            if not isinstance(value, list):
                raise ArrangementError(f"{where}.homog: expected a list of 3 rationals")
            return ProjLine(value), False
        if kind == "affine":
            if not isinstance(value, dict) or set(value) != {"slope", "intercept"}:
                raise ArrangementError(f"{where}.affine: expected keys slope and intercept")
            return ProjLine.affine(value["slope"], value["intercept"]), False
        if kind == "vertical":
            return ProjLine.vertical(value), False
        raise ArrangementError(f"{where}: unknown line kind {kind!r}")
    except (TypeError, ValueError) as exc:
        msg = str(exc)
        raise ArrangementError(msg if msg.startswith(where) else f"{where}: {msg}") from None


def from_json(data) -> Arrangement:
    if not isinstance(data, dict) or "lines" not in data:
        raise ArrangementError("arrangement JSON must be an object with a \"lines\" list")
    if not isinstance(data["lines"], list):
        raise ArrangementError("\"lines\" must be a list")
    lines, infinity = [], None
    for idx, item in enumerate(data["lines"]):
        line, is_inf = parse_line(item, where=f"lines[{idx}]")
        if is_inf:
            if infinity is not None:
                raise ArrangementError(f"duplicate line: L_{infinity} and L_{idx} are both the line at infinity")
            infinity = idx
        lines.append(line)
    return build(lines, infinity=infinity)
