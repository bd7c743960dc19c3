import pytest
from hypothesis import given, settings, strategies as st

from siegelcount.motives import (EC2, L, MotiveError, S, const, delta_tau, dim_S1, parse_expr, parse_space, rank,
                                 s, space_dim)

TAU = {2: -24, 3: 252, 5: 4830, 7: -16744, 11: 534612, 13: -577738, 17: -6905934}


@pytest.mark.parametrize("k,d", [(2, -1), (4, 0), (10, 0), (12, 1), (14, 0), (16, 1), (24, 2), (26, 1), (38, 2),
                                 (50, 3)])
def test_dim_S1(k, d):
    assert dim_S1(k) == d


def test_dim_S1_rejects_odd():
    with pytest.raises(MotiveError):
        dim_S1(13)
    assert s(13) == 0 and s(0) == 0


@pytest.mark.parametrize("p", sorted(TAU))
def test_delta_tau(p):
    assert delta_tau(p) == TAU[p]
    assert (delta_tau(p) - 1 - p ** 11) % 691 == 0


@pytest.mark.parametrize("p", sorted(TAU))
def test_trace_S12_is_tau(tracer, p):
    assert tracer.trace_S1(12, p) == TAU[p]


@pytest.mark.parametrize("k", [4, 6, 8, 10, 14])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_trace_of_empty_weights_vanishes(tracer, k, p):
    assert tracer.trace_S1(k, p) == 0


def test_symbol_rules():
    assert S(2) == -L() - 1
    assert S(0, 3) == -L(3) - L(2) - L() - 1
    assert S(0, 0, 4) == L(6) + L(5) + L(4) + 2 * L(3) + L(2) + L() + 1
    assert S(10) == const(0) and S(13) == const(0) and S(1, 5) == const(0) and S(1, 0, 4) == const(0)
    assert EC2(3, 2) == const(0)


def test_rank():
    assert rank(S(12) * L(2) + L(3)) == 3
    assert rank(S(24)) == 4
    assert rank(EC2(2, 2), {("EC2", 2, 2): 5}) == 5


@pytest.mark.parametrize("text", [
    "-S[12]L^3+L^7-L^3+1+S[6,3,6]",
    "S[12](S[20]+L^10+L^9)",
    "S[12]L^2+1+e_c(A2,V_{2,2})-3S[4,10]",
    "2L^3*S[16] - L",
])
def test_parse_round_trip(text):
    e = parse_expr(text)
    assert parse_expr(str(e)) == e


def test_parse_distributes():
    assert parse_expr("S[12](S[20]+L^10+L^9)") == S(12) * S(20) + S(12) * L(10) + S(12) * L(9)


@pytest.mark.parametrize("bad", ["", "S[12", "L^2+(S[12]", "S[12]+*", "x"])
def test_parse_errors(bad):
    with pytest.raises(MotiveError):
        parse_expr(bad)


_atoms = st.sampled_from([L(1), L(2), S(12), S(16), S(4, 10), S(6, 3, 6), const(1), const(-2)])
_exprs = st.lists(st.tuples(st.integers(-3, 3), _atoms, _atoms), max_size=4).map(
    lambda ts: sum((c * a * b for c, a, b in ts), const(0)))


@settings(max_examples=80, deadline=None)
@given(_exprs, _exprs, st.sampled_from([L(1), L(3), const(5)]))
def test_expression_ring_laws(x, y, z):
    assert x + y == y + x
    assert x * z == z * x and (x + y) * z == x * z + y * z
    assert (x + y) - y == x
    assert parse_expr(str(x)) == x if str(x) else True


def test_three_factor_terms_rejected():
    with pytest.raises(MotiveError):
        S(12) * S(16) * S(20)


def test_space_labels():
    assert parse_space("S_12") == (12,)
    assert parse_space("S_{4,10}") == (4, 10)
    assert parse_space("S_{6,3,6}") == (6, 3, 6)
    assert space_dim("S_24") == 2 and space_dim("S_{4,10}") is None
