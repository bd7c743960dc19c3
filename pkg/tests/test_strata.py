import pytest

from siegelcount.census.table import CensusError
from siegelcount.strata import assemble, induced_cell, stack_mass
from siegelcount.symplectic import weyl_dimension


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_A2_mass(store, q):
    assert store.stack("A2", q).total_mass() == stack_mass("A2", q) == q ** 3 + q ** 2


@pytest.mark.parametrize("q", [2, 3])
def test_A3_mass(store, q):
    assert store.stack("A3", q).total_mass() == q ** 6 + q ** 5 + q ** 4 + q ** 3 + 1


@pytest.mark.parametrize("space,q", [("A1", 2), ("A2", 3), ("A3", 2)])
def test_cells_obey_weil_bounds(store, space, q):
    t = store.stack(space, q)
    g = t.g
    for key in t.cells:
        for i, a in enumerate(key, start=1):
            assert a * a <= 4 * g * g * q ** i


def test_A1_is_the_elliptic_census(store):
    assert store.stack("A1", 5).cells == store.get("elliptic", 5).cells


def test_induced_cells():
    assert induced_cell((3, 0, 0), 2) == (0, 6, 0)
    assert induced_cell((3, 0, 0), 3) == (0, 0, 9)
    with pytest.raises(ValueError):
        induced_cell((3, 0, 0), 4)


def test_missing_inputs(store):
    with pytest.raises(CensusError):
        assemble("A2", 2, {"elliptic1": store.get("elliptic", 2)})


def test_wrong_field_rejected(store):
    with pytest.raises(CensusError):
        assemble("A2", 2, {"hyper2": store.get("hyper2", 3), "elliptic1": store.get("elliptic", 2),
                           "elliptic2": store.get("elliptic", 4)})


# with no genus-2 cusp forms in these weights, e_c(A_2, V_{a,b}) is purely extraneous
@pytest.mark.parametrize("a,b", [(a, b) for a in range(0, 11) for b in range(0, a + 1) if (a + b) % 2 == 0
                                 and a + b <= 12])
@pytest.mark.parametrize("q", [2, 3])
def test_genus2_vanishing_range(tracer, a, b, q):
    assert tracer.trace_S2(a - b, b + 3, q) == 0 or (a, b) == (0, 0)


def test_point_count_is_trivial_local_system(tracer):
    assert tracer.e_c("A2", (0, 0), 3) == 27 + 9
    assert weyl_dimension((0, 0)) == 1
