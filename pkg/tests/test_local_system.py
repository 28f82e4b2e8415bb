import random
from fractions import Fraction

import pytest

from generators import random_local_system
from lineadmit.arrangement import ProjLine, build
from lineadmit.exact import QComplex
from lineadmit.local_system import (
    LocalSystem,
    LocalSystemError,
    ResidueVector,
    exp_compatible,
    point_residues,
    standard_lift,
)

h = Fraction(1, 2)


def test_constructor_reduces_and_validates():
    L = LocalSystem([Fraction(5, 2), Fraction(-1, 2), 0])
    assert L.classes == (QComplex(h), QComplex(h), QComplex(0))
    with pytest.raises(LocalSystemError, match="not an integer"):
        LocalSystem([Fraction(1, 3), 0, 0])
    with pytest.raises(LocalSystemError, match="imaginary"):
        LocalSystem([QComplex(0, 1), 0, 0])


def test_json_roundtrip():
    L = LocalSystem([QComplex(Fraction(1, 3), 1), QComplex(Fraction(2, 3), -1)])
    assert LocalSystem.from_json(L.to_json()) == L
    with pytest.raises(LocalSystemError, match=r"classes\[1\]"):
        LocalSystem.from_json({"classes": [{"re": "0"}, {"re": "bad"}]})


def test_standard_lift_suciu_rho(rho):
    alpha = standard_lift(rho, 0)
    assert alpha.entries == tuple(QComplex(x) for x in (-2, h, h, h, 0, 0, 0, h))


def test_standard_lift_trivial_and_triangle():
    assert all(a == 0 for a in standard_lift(LocalSystem.trivial(5), 2).entries)
    L = LocalSystem([0, Fraction(1, 3), Fraction(2, 3)])
    assert standard_lift(L, 0).entries == (QComplex(-1), QComplex(Fraction(1, 3)), QComplex(Fraction(2, 3)))


def test_exp_compatible(rho):
    alpha = standard_lift(rho, 3)
    assert exp_compatible(alpha, rho)
    assert exp_compatible(alpha.shifted([1, -1, 0, 0, 0, 0, 0, 0]), rho)
    off = list(alpha.entries)
    off[0] += h
    off[1] -= h
    assert not exp_compatible(ResidueVector(off), rho)
    with pytest.raises(LocalSystemError):
        exp_compatible(alpha, LocalSystem.trivial(3))


def test_residue_vector_sum_zero():
    with pytest.raises(LocalSystemError):
        ResidueVector([1, 0, 0])


def test_point_residues_suciu(suciu_arr, rho):
    prs = {pr.point.incident: pr for pr in point_residues(suciu_arr, standard_lift(rho, 0))}
    assert prs[(1, 3, 4)].a_p == 1 and prs[(1, 3, 4)].b_p == 1
    assert prs[(0, 3, 7)].a_p == -1
    triv = point_residues(suciu_arr, standard_lift(LocalSystem.trivial(8), 0))
    assert all(pr.a_p == 0 for pr in triv)


@pytest.mark.parametrize("seed", range(30))
def test_lift_properties(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    L = random_local_system(rng, n)
    base = rng.randrange(n)
    alpha = standard_lift(L, base)
    assert sum(alpha.entries, QComplex()) == 0
    assert exp_compatible(alpha, L)
    assert alpha.entries[base].re <= 0
    for j, a in enumerate(alpha.entries):
        if j != base:
            assert 0 <= a.re < 1
    shift = [rng.randint(-3, 3) for _ in range(n - 1)]
    shift.append(-sum(shift))
    moved = alpha.shifted(shift)
    assert exp_compatible(moved, L)
    assert sum(moved.entries, QComplex()) == 0


def test_point_residues_commute_with_relabel(suciu_arr, rho):
    perm = [7, 3, 0, 5, 1, 6, 2, 4]
    new = suciu_arr.relabel(perm)
    alpha = standard_lift(rho, 0)
    new_alpha = ResidueVector([alpha.entries[i] for i in perm])
    old = {pr.point.point: pr.a_p for pr in point_residues(suciu_arr, alpha)}
    assert {pr.point.point: pr.a_p for pr in point_residues(new, new_alpha)} == old
    with pytest.raises(LocalSystemError):
        point_residues(build([ProjLine(1, 0, 0), ProjLine(0, 1, 0)]), alpha)
