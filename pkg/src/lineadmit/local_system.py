"""Rank-one local systems as residue classes mod Z, their lifts, and point residues.

A local system assigns to each line ``L_j`` the monodromy ``exp(2*pi*i*a_j)``;
only ``a_j`` modulo the integers matters, so it is stored as a class whose real
part is reduced into ``[0, 1)``.  A lift is an exact residue vector summing to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangement import Arrangement, MultiplePoint, multiple_points
from .exact import QComplex, fraction_str, fractional_part, qsum


class LocalSystemError(ValueError):
    pass


@dataclass(frozen=True)
class LocalSystem:
    classes: tuple[QComplex, ...]

    def __init__(self, classes: Iterable):
        cls_ = tuple(QComplex.parse(c) if not isinstance(c, QComplex) else c for c in classes)
        cls_ = tuple(QComplex(fractional_part(c.re), c.im) for c in cls_)
        total = qsum(cls_)
        if total.im != 0:
            raise LocalSystemError(
                f"imaginary parts of the classes sum to {fraction_str(total.im)}, not 0 "
                "(monodromy product would not be 1)"
            )
        if total.re.denominator != 1:
            raise LocalSystemError(
                f"real parts of the classes sum to {fraction_str(total.re)}, not an integer "
                "(monodromy product would not be 1)"
            )
        object.__setattr__(self, "classes", cls_)

    def __len__(self):
        return len(self.classes)

    @classmethod
    def trivial(cls, n: int) -> "LocalSystem":
        return cls([QComplex()] * n)

    @classmethod
    def from_json(cls, data) -> "LocalSystem":
        if not isinstance(data, dict) or not isinstance(data.get("classes"), list):
            raise LocalSystemError("local system JSON must be an object with a \"classes\" list")
        out = []
        for i, c in enumerate(data["classes"]):
            try:
                out.append(QComplex.parse(c))
            except (TypeError, ValueError) as exc:
                raise LocalSystemError(f"classes[{i}]: {exc}") from None
        return cls(out)

    def to_json(self) -> dict:
        return {"classes": [c.to_json() for c in self.classes]}


@dataclass(frozen=True)
class ResidueVector:
    """Exact residues ``a_j``, one per line, with ``sum(a_j) == 0``."""

    entries: tuple[QComplex, ...]

    def __init__(self, entries: Iterable):
        ent = tuple(QComplex.coerce(e) if not isinstance(e, dict) else QComplex.parse(e) for e in entries)
        if qsum(ent) != 0:
            raise LocalSystemError(f"residues sum to {qsum(ent)}, not 0")
        object.__setattr__(self, "entries", ent)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def shifted(self, shift: Sequence[int]) -> "ResidueVector":
        if len(shift) != len(self.entries):
            raise LocalSystemError("shift length does not match residue vector")
        return ResidueVector(a + n for a, n in zip(self.entries, shift))

    def to_json(self) -> list:
        return [a.to_json() for a in self.entries]


@dataclass(frozen=True)
class PointResidue:
    point: MultiplePoint
    a_p: QComplex

    @property
    def b_p(self) -> Fraction:
        return self.a_p.re

    def to_json(self) -> dict:
        return {
            "point": [fraction_str(c) for c in self.point.point.coords],
            "incident": list(self.point.incident),
            "a": self.a_p.to_json(),
        }


def standard_lift(L: LocalSystem, base: int) -> ResidueVector:
    """Lift with every non-base real part in ``[0, 1)`` and the base absorbing the sum.

    The base entry then has real part ``-sum(others) <= 0``.
    """
    if not 0 <= base < len(L):
        raise LocalSystemError(f"base index {base} out of range")
    rest = qsum(c for j, c in enumerate(L.classes) if j != base)
    return ResidueVector(-rest if j == base else c for j, c in enumerate(L.classes))


def exp_compatible(alpha: ResidueVector, L: LocalSystem) -> bool:
    if len(alpha) != len(L):
        raise LocalSystemError(f"residue vector has {len(alpha)} entries, local system {len(L)}")
    return all((a - c).is_integer() for a, c in zip(alpha.entries, L.classes))


def point_residue(alpha: ResidueVector, incident: Iterable[int]) -> QComplex:
    return qsum(alpha.entries[j] for j in incident)


def point_residues(arr: Arrangement, alpha: ResidueVector) -> list[PointResidue]:
    if len(alpha) != arr.n_lines:
        raise LocalSystemError(f"residue vector has {len(alpha)} entries, arrangement {arr.n_lines} lines")
    return [PointResidue(mp, point_residue(alpha, mp.incident)) for mp in multiple_points(arr)]
