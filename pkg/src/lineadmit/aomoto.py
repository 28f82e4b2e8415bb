"""Aomoto complex ``(A, alpha ∧)`` of the Orlik-Solomon algebra in degrees <= 2.

The arrangement is deconed at a base line.  Degree 1 has one generator
``e_i`` per remaining line; degree 2 has a basis element ``(p, i)`` for every
affine intersection point ``p`` and every incident line ``i`` other than the
smallest one through ``p`` (standing for ``e_min * e_i``).  Products of
parallel lines vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import AffineArrangement, Arrangement, ArrangementError, decone
from .exact import ExactMatrix, QComplex, rank
from .local_system import LocalSystemError, ResidueVector


def default_base(arr: Arrangement) -> int:
    return arr.infinity if arr.infinity is not None else 0


@dataclass(frozen=True)
class OSDegree2Basis:
    affine: AffineArrangement
    elements: tuple[tuple[int, int], ...]  # (affine point index, line)
    index: dict

    @classmethod
    def from_affine(cls, aff: AffineArrangement) -> "OSDegree2Basis":
        elements = []
        for k, ip in enumerate(aff.affine_points):
            for line in ip.incident[1:]:
                elements.append((k, line))
        return cls(aff, tuple(elements), {e: n for n, e in enumerate(elements)})

    def __len__(self):
        return len(self.elements)

    def meeting_point(self, i: int, j: int) -> int | None:
        for k, ip in enumerate(self.affine.affine_points):
            if i in ip.incident and j in ip.incident:
                return k
        return None


def reduce_product(basis: OSDegree2Basis, i: int, j: int) -> dict[int, int]:
    """Express ``e_i * e_j`` in the degree-2 basis as ``{basis index: coefficient}``."""
    base = basis.affine.removed_line
    if i == j:
        raise ValueError("e_i * e_i is zero; pass distinct lines")
    if base in (i, j):
        raise ValueError(f"L_{base} is the deconed line and has no generator")
    if i > j:
        return {k: -c for k, c in reduce_product(basis, j, i).items()}
    k = basis.meeting_point(i, j)
    if k is None:
        return {}
    first = basis.affine.affine_points[k].incident[0]
    if i == first:
        return {basis.index[(k, j)]: 1}
    # e_i e_j = e_first e_j - e_first e_i, from the relation on {first, i, j}
    return {basis.index[(k, j)]: 1, basis.index[(k, i)]: -1}


def betti(arr: Arrangement, base: int | None = None) -> tuple[int, int, int]:
    base = default_base(arr) if base is None else base
    aff = decone(arr, base)
    return 1, arr.n_lines - 1, sum(ip.multiplicity - 1 for ip in aff.affine_points)


@dataclass(frozen=True)
class AomotoResult:
    h0: int
    h1: int
    h2: int
    rank_d0: int
    rank_d1: int
    betti: tuple[int, int, int]
    base: int

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    def to_json(self) -> dict:
        return {
            "h": [self.h0, self.h1, self.h2],
            "rank_d0": self.rank_d0,
            "rank_d1": self.rank_d1,
            "betti": list(self.betti),
            "base": self.base,
        }


def differentials(arr: Arrangement, alpha: ResidueVector, base: int) -> tuple[ExactMatrix, ExactMatrix]:
    """Matrices of ``d0: A^0 -> A^1`` and ``d1: A^1 -> A^2`` (columns are sources)."""
    if len(alpha) != arr.n_lines:
        raise LocalSystemError(f"residue vector has {len(alpha)} entries, arrangement {arr.n_lines} lines")
    if not 0 <= base < arr.n_lines:
        raise ArrangementError(f"base index {base} out of range for {arr.n_lines} lines")
    if sum(alpha.entries, QComplex()) != 0:
        raise LocalSystemError("residues must sum to 0")
    aff = decone(arr, base)
    basis = OSDegree2Basis.from_affine(aff)
    gens = aff.affine_lines
    d0 = ExactMatrix([[alpha.entries[i]] for i in gens], cols=1)
    cols = []
    for i in gens:
        col = [QComplex()] * len(basis)
        for j in gens:
            if j == i or not alpha.entries[j]:
                continue
            for k, c in reduce_product(basis, j, i).items():
                col[k] = col[k] + alpha.entries[j] * c
        cols.append(col)
    d1 = ExactMatrix([[cols[c][r] for c in range(len(gens))] for r in range(len(basis))], cols=len(gens))
    return d0, d1


def aomoto_dims(arr: Arrangement, alpha: ResidueVector, base: int | None = None) -> AomotoResult:
    base = default_base(arr) if base is None else base
    d0, d1 = differentials(arr, alpha, base)
    b = betti(arr, base)
    r0 = rank(d0)
    r1 = rank(d1)
    return AomotoResult(1 - r0, b[1] - r1 - r0, b[2] - r1, r0, r1, b, base)
