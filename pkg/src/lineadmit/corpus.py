"""Built-in arrangements with their documented multiple points.

Where the printed coordinates disagree with the intersections of the printed
equations, the computed value is used and the disagreement is kept in
``notes`` as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F

from .arrangement import Arrangement, ProjLine, ProjPoint, build, multiple_points
from .local_system import LocalSystem


@dataclass(frozen=True)
class DocumentedPoint:
    label: str
    incident: tuple[int, ...]
    coords: ProjPoint | None  # None when the source gives no coordinates


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    lines: tuple[ProjLine, ...]
    documented_points: tuple[DocumentedPoint, ...]
    documented_k: int
    notes: tuple[dict, ...] = ()
    local_systems: dict = field(default_factory=dict)

    def arrangement(self) -> Arrangement:
        return build(self.lines)

    def point(self, label: str) -> DocumentedPoint:
        for dp in self.documented_points:
            if dp.label == label:
                return dp
        raise KeyError(label)

    def computed_point(self, label: str) -> ProjPoint:
        """Intersection of the documented incident lines, from the equations."""
        inc = self.point(label).incident
        arr = self.arrangement()
        return arr.point_of(inc[0], inc[1]).point

    def check(self) -> list[str]:
        """Differences between documented and computed incidences, minus recorded notes."""
        arr = self.arrangement()
        computed = {mp.incident: mp.point for mp in multiple_points(arr)}
        noted = {n["label"] for n in self.notes if "label" in n}
        extra = {tuple(inc) for n in self.notes for inc in n.get("incidents", ())}
        problems = []
        for inc in extra:
            if computed.pop(tuple(inc), None) is None:
                problems.append(f"noted extra point on {inc} is not a multiple point")
        if len(computed) != len(self.documented_points):
            problems.append(f"{len(computed)} multiple points computed, {len(self.documented_points)} documented")
        for dp in self.documented_points:
            if dp.incident not in computed:
                problems.append(f"{dp.label}: no multiple point with incident lines {dp.incident}")
            elif dp.coords is not None and dp.coords != computed[dp.incident] and dp.label not in noted:
                problems.append(f"{dp.label}: documented {dp.coords}, computed {computed[dp.incident]}")
        return problems


def _aff(slope, intercept):
    return ProjLine.affine(F(slope), F(intercept))


def _pt(x, y):
    return ProjPoint.affine(F(x), F(y))


_half = F(1, 2)

# Deleted B_3 arrangement; L_7 is the line at infinity.
SUCIU = CorpusEntry(
    name="suciu_deleted_b3",
    description="deleted B3 arrangement with a translated component; class C_3 with concurrent cover {L_0,L_1,L_2}",
    lines=(
        ProjLine(1, 0, 0),    # x = 0
        ProjLine(1, -1, 0),   # x = y
        ProjLine(0, 1, 0),    # y = 0
        ProjLine(1, 0, -1),   # x = z
        ProjLine(0, 1, -1),   # y = z
        ProjLine(1, -1, 1),   # x - y + z = 0
        ProjLine(1, -1, -1),  # x - y - z = 0
        ProjLine(0, 0, 1),    # z = 0
    ),
    documented_points=(
        DocumentedPoint("O", (0, 1, 2), ProjPoint(0, 0, 1)),
        DocumentedPoint("p1", (1, 3, 4), ProjPoint(1, 1, 1)),
        DocumentedPoint("p1'", (1, 5, 6, 7), ProjPoint(1, 1, 0)),
        DocumentedPoint("p2", (2, 3, 6), ProjPoint(1, 0, 1)),
        DocumentedPoint("p2'", (2, 4, 7), ProjPoint(1, 0, 0)),
        DocumentedPoint("q1", (0, 4, 5), None),
        DocumentedPoint("q2", (0, 3, 7), ProjPoint(0, 1, 0)),
    ),
    documented_k=3,
    notes=(
        {"label": "q1", "kind": "missing", "computed": "(0:1:1)",
         "note": "coordinates of q1 are not printed; computed from L_0, L_4, L_5"},
    ),
    local_systems={
        # rho = (1,-1,-1,-1,1,1,1,-1)
        "rho": LocalSystem([0, _half, _half, _half, 0, 0, 0, _half]),
        # rho times t = exp(2 pi i/3) along (t,1,t^-1,t^-1,t,t^-2,t^2,1)
        "rho_t_1_3": LocalSystem([F(1, 3), _half, F(1, 6), F(1, 6), F(1, 3), F(1, 3), F(2, 3), _half]),
    },
)

C3_ALL = CorpusEntry(
    name="c3_all_admissible",
    description="C_3 arrangement with concurrent cover on which every local system is admissible",
    lines=(
        ProjLine.vertical(0),          # L_0: x = 0
        _aff(F(1, 2), F(3, 2)),        # L_1: y = (x+3)/2
        _aff(F(-1, 2), F(3, 2)),       # L_2: y = -(x-3)/2
        _aff(1, 1),                    # L_3: y = x+1
        _aff(-1, 1),                   # L_4: y = -(x-1)
        _aff(2, 2),                    # L_5: y = 2(x+1)
        _aff(-2, 2),                   # L_6: y = -2(x-1)
        _aff(F(3, 2), F(9, 2)),        # L_7: y = 3/2(x+3)
        _aff(F(-3, 2), F(-9, 2)),      # L_8: y = -3/2(x+3)
        _aff(F(5, 2), F(-15, 2)),      # L_9: y = 5/2(x-3)
        _aff(F(-5, 2), F(15, 2)),      # L_10: y = -5/2(x-3)
    ),
    documented_points=(
        DocumentedPoint("O", (0, 1, 2), _pt(0, F(3, 2))),
        DocumentedPoint("q1", (0, 3, 4), _pt(0, 1)),
        DocumentedPoint("q2", (0, 5, 6), _pt(0, 2)),
        DocumentedPoint("p1", (1, 7, 8), _pt(-3, 0)),
        DocumentedPoint("p2", (2, 9, 10), _pt(3, 0)),
    ),
    documented_k=3,
    notes=(
        {"kind": "count", "documented": "10 lines", "computed": "11 lines",
         "note": "the text announces 10 lines but lists L_0..L_10; all 11 listed equations are stored"},
        {"kind": "extra_points", "documented": "5 triple points", "computed": "7 triple points",
         "incidents": [[1, 4, 5], [2, 3, 6]],
         "note": "the listed equations also meet in triples at (-1/3,4/3) on L_1,L_4,L_5 "
                 "and (1/3,4/3) on L_2,L_3,L_6; {L_0,L_1,L_2} is still the only minimal cover"},
    ),
)

C3_PARTIAL = CorpusEntry(
    name="c3_partial",
    description="C_3 arrangement with concurrent cover where the concurrent-triple criterion does not apply",
    lines=(
        ProjLine.vertical(0),          # L_0: x = 0
        _aff(-2, 2),                   # L_1: y = -2(x-1)
        _aff(2, 2),                    # L_2: y = 2(x+1)
        _aff(-1, 1),                   # L_3: y = -(x-1)
        _aff(1, 1),                    # L_4: y = x+1
        _aff(F(-1, 3), F(-1, 3)),      # L_5: y = -(x+1)/3
        _aff(F(1, 3), F(-1, 3)),       # L_6: y = (x-1)/3
        ProjLine.infinity(),           # L_7
    ),
    documented_points=(
        DocumentedPoint("O", (0, 1, 2), _pt(0, 2)),
        DocumentedPoint("p1", (1, 3, 6), _pt(0, 1)),
        DocumentedPoint("p2", (2, 4, 5), _pt(-1, 0)),
        DocumentedPoint("q1", (0, 5, 6), _pt(0, F(-1, 3))),
        DocumentedPoint("q2", (0, 3, 4), _pt(0, 1)),
    ),
    documented_k=3,
    notes=(
        {"label": "p1", "kind": "coordinates", "documented": "(0,1)", "computed": "(1,0)",
         "note": "L_1, L_3, L_6 meet at (1,0); (0,1) is q2"},
        {"kind": "labels", "documented": "m_1 = Re(a_2+a_4+a_5), m_2 = Re(a_1+a_3+a_6)",
         "note": "the printed m_1 sums over the lines through p2 on L_2, and m_2 over p1 on L_1; "
                 "with cover order (L_0, L_1, L_2) the extremal value on L_1 is Re(a_1+a_3+a_6)"},
    ),
)

_ENTRIES = {e.name: e for e in (SUCIU, C3_ALL, C3_PARTIAL)}


def names() -> list[str]:
    return list(_ENTRIES)


def get(name: str) -> CorpusEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; available: {', '.join(_ENTRIES)}") from None
