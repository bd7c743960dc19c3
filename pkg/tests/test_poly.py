from hypothesis import given, settings, strategies as st

from siegelcount import poly as P
from siegelcount.ff import field_of_size

FIELDS = [2, 3, 4, 5, 9]


def _poly(F, draw, max_len=6):
    return P.trim(draw(st.lists(st.integers(0, F.q - 1), max_size=max_len)))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_division_identity(q, data):
    F = field_of_size(q)
    a, b = _poly(F, data.draw), _poly(F, data.draw)
    if not b:
        return
    quo, r = P.divmod_(F, a, b)
    assert P.add(F, P.mul(F, quo, b), r) == a
    assert P.deg(r) < P.deg(b)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_gcd_divides_and_is_monic(q, data):
    F = field_of_size(q)
    a, b, c = (_poly(F, data.draw, 4) for _ in range(3))
    if not c:
        return
    g = P.gcd(F, P.mul(F, a, c), P.mul(F, b, c))
    if a or b:
        assert g[-1] == F.from_int(1)
        assert not P.rem(F, P.mul(F, a, c), g) and not P.rem(F, P.mul(F, b, c), g)
        assert not P.rem(F, g, P.monic(F, c))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_squares_are_not_squarefree(q, data):
    F = field_of_size(q)
    a = _poly(F, data.draw, 4)
    if P.deg(a) >= 1:
        assert not P.is_squarefree(F, P.mul(F, a, a))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_resultant_with_linear_factor_is_substitution(q, data):
    """Res_y(y - a(x), B) equals B(x, a(x)) up to sign."""
    F = field_of_size(q)
    a = _poly(F, data.draw, 3)
    B = [_poly(F, data.draw, 3) for _ in range(data.draw(st.integers(1, 3)))]
    if not P.trim_y(B):
        return
    res = P.resultant_y(F, [P.neg(F, a), [F.from_int(1)]], B)
    subst, power = [], [F.from_int(1)]
    for coeff in B:
        subst = P.add(F, subst, P.mul(F, coeff, power))
        power = P.mul(F, power, a)
    assert res in (subst, P.neg(F, subst))


def test_evaluate_and_derivative():
    F = field_of_size(5)
    f = [1, 0, 2, 1]  # 1 + 2x^2 + x^3
    assert P.evaluate(F, f, 2) == (1 + 8 + 8) % 5
    assert P.derivative(F, f) == [0, 4, 3]
