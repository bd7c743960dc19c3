import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from siegelcount.census.elliptic import enumerate_elliptic
from siegelcount.census.hyperelliptic import (count_points_hyperelliptic, enumerate_hyperelliptic, gl2_order,
                                              hyperelliptic_model_filter)
from siegelcount.census.quartic import count_points_quartic, enumerate_quartics, is_smooth_quartic, pgl3_order
from siegelcount.census.table import CensusError, CensusTable, FrobeniusCell, load_census, save_census
from siegelcount.ff import field_of_size


def _key(q, counts):
    return tuple(q ** i + 1 - n for i, n in enumerate(counts, start=1))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17])
def test_elliptic_mass(q):
    assert enumerate_elliptic(q).total_mass() == q


@pytest.mark.parametrize("q,strategies", [
    (4, ("long", "normal")), (8, ("long", "normal")), (16, ("long", "normal")), (32, ("long", "normal")),
    (5, ("long", "short")), (9, ("long", "short")), (25, ("long", "short")), (27, ("long", "short")),
    pytest.param(64, ("long", "normal"), marks=pytest.mark.slow),
])
def test_elliptic_strategies_agree(q, strategies):
    tables = [enumerate_elliptic(q, s) for s in strategies]
    assert len({t.checksum() for t in tables}) == 1


@pytest.mark.parametrize("q", [5, 7, 11])
def test_elliptic_against_short_weierstrass_brute_force(q):
    F = field_of_size(q)
    hist = Counter()
    for a, b in itertools.product(range(q), repeat=2):
        if (4 * a ** 3 + 27 * b ** 2) % q == 0:
            continue
        n = 1 + sum(1 for x in range(q) for y in range(q) if (y * y - x ** 3 - a * x - b) % q == 0)
        hist[q + 1 - n] += Fraction(1, q - 1)
    t = enumerate_elliptic(q)
    got = Counter()
    for (a1, a2, a3), m in t.cells.items():
        assert a2 == a1 * a1 - 2 * q and a3 == a1 ** 3 - 3 * q * a1
        got[a1] += m
    assert got == hist


@pytest.mark.parametrize("g,q", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 7), (2, 8), (3, 2), (3, 3), (3, 4)])
def test_hyperelliptic_mass(g, q):
    assert enumerate_hyperelliptic(g, q).total_mass() == q ** (2 * g - 1)


@pytest.mark.parametrize("q", [3, pytest.param(5, marks=pytest.mark.slow)])
def test_genus2_against_all_sextic_forms(q):
    F = field_of_size(q)
    hist = Counter()
    for f in itertools.product(range(q), repeat=7):
        f = list(f)
        if hyperelliptic_model_filter(F, 2, f):
            key = _key(q, [count_points_hyperelliptic(F, 2, f, i) for i in (1, 2, 3)])
            hist[key] += Fraction(1, gl2_order(q))
    assert dict(hist) == enumerate_hyperelliptic(2, q).cells


def test_genus2_char2_against_all_models():
    q = 2
    F = field_of_size(q)
    hist = Counter()
    # y^2 + h y = f with deg h <= 3, deg f <= 6; the group has order |GL2| * q^4
    for h in itertools.product(range(q), repeat=4):
        for f in itertools.product(range(q), repeat=7):
            model = (list(h), list(f))
            if hyperelliptic_model_filter(F, 2, model):
                key = _key(q, [count_points_hyperelliptic(F, 2, model, i) for i in (1, 2, 3)])
                hist[key] += Fraction(1, gl2_order(q) * q ** 4)
    assert dict(hist) == enumerate_hyperelliptic(2, q).cells


def test_quartic_mass_q2():
    assert enumerate_quartics(2).total_mass() == 65


def test_quartic_sampled_forms_land_in_census():
    q = 2
    F = field_of_size(q)
    cells = enumerate_quartics(q).cells
    rng = random.Random(5)
    hits = 0
    while hits < 40:
        v = [rng.randrange(q) for _ in range(15)]
        if any(v) and is_smooth_quartic(F, v):
            hits += 1
            assert _key(q, [count_points_quartic(F, v, i) for i in (1, 2, 3)]) in cells


@pytest.mark.longrun
def test_quartic_against_all_forms_q2():
    q = 2
    F = field_of_size(q)
    hist = Counter()
    for v in itertools.product(range(q), repeat=15):
        v = list(v)
        if any(v) and is_smooth_quartic(F, v):
            hist[_key(q, [count_points_quartic(F, v, i) for i in (1, 2, 3)])] += Fraction(1, pgl3_order(q))
    assert dict(hist) == enumerate_quartics(q).cells


def test_weil_bound_enforced():
    with pytest.raises(CensusError):
        FrobeniusCell(5, 0, 0, 1, 2)


def test_round_trip(tmp_path):
    t = enumerate_hyperelliptic(2, 3)
    path = save_census(t, tmp_path / "h.census")
    back = load_census(path)
    assert back.cells == t.cells and back.checksum() == t.checksum()


def test_corrupt_file_rejected(tmp_path):
    t = enumerate_elliptic(5)
    path = save_census(t, tmp_path / "e.census")
    lines = path.read_text().splitlines()
    body = [i for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    lines[body[-1]] = lines[body[-1]].replace("1/", "3/", 1) if "1/" in lines[body[-1]] else lines[body[-1]] + "1"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CensusError):
        load_census(path)


def test_unknown_family():
    with pytest.raises(CensusError):
        CensusTable("sextic", 2, 2)


@pytest.mark.parametrize("q", [16, 27])
def test_fresh_tables_hold_python_integers(q):
    t = enumerate_elliptic(q)
    assert all(type(m.numerator) is int and type(m.denominator) is int for m in t.cells.values())
