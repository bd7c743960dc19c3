import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from siegelcount.census.table import CensusTable
from siegelcount.symplectic import (LocalSystem, SymplecticError, power_sums, sp_character, trace_local_system,
                                    weyl_character, weyl_dimension, zeta_coeffs)

T = 144  # s = 12; eigenvalues x and 144/x stay integral for divisors x
DIVISORS = [1, 2, 3, 4, 8, 9, 16, 18, 36, 48, 72, 144]


@st.composite
def partitions(draw, g):
    parts = sorted((draw(st.integers(0, 10)) for _ in range(g)), reverse=True)
    assume(sum(parts) <= 20)
    return tuple(parts)


@st.composite
def points(draw, g):
    xs = draw(st.lists(st.sampled_from(DIVISORS), min_size=g, max_size=g, unique=True))
    ys = [Fraction(x, 12) for x in xs]
    assume(all(y not in (1, -1) for y in ys))
    assume(all(a != 1 / b for a, b in itertools.combinations(ys, 2)))
    return xs


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_character_matches_weyl(data):
    g = data.draw(st.integers(1, 3))
    lam = data.draw(partitions(g))
    xs = data.draw(points(g))
    cell = tuple(int(v) for v in power_sums(xs, T, 3))
    assert sp_character(lam, cell, T, g) == weyl_character(lam, xs, T)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 0), (4, 2), (11, 7), (6, 6)])
def test_genus2_dimension(a, b):
    assert weyl_dimension((a, b)) == (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) // 6


@pytest.mark.parametrize("lam,dim", [((1, 0, 0), 6), ((1, 1, 0), 14), ((1, 1, 1), 14), ((2, 0, 0), 21)])
def test_genus3_small_dimensions(lam, dim):
    assert weyl_dimension(lam) == dim


def test_zeta_coeffs_functional_equation():
    # E x E' over F_5 with traces 2 and -3
    xs_tr = (2, -3)
    cell = (sum(xs_tr), sum(t * t - 10 for t in xs_tr), sum(t ** 3 - 15 * t for t in xs_tr))
    e = zeta_coeffs(cell, 2, 5)
    assert e == (-1, 4, -5, 25)


def test_local_system_parse():
    V = LocalSystem.parse("11,5,2")
    assert V.g == 3 and V.weight == 18
    with pytest.raises(SymplecticError):
        LocalSystem.parse("2,5")


def test_trace_on_one_cell_table():
    t = CensusTable("A1", 3, 1)
    t.add((1, 1 - 6, 1 - 9), Fraction(1, 2))
    assert trace_local_system(t, (2,)) == Fraction(1, 2) * sp_character((2,), (1, -5, -8), 3)


def test_trace_rejects_genus_mismatch():
    t = CensusTable("A1", 3, 1)
    with pytest.raises(SymplecticError):
        trace_local_system(t, (2, 2))
