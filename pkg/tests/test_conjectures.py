import random
from fractions import Fraction

import pytest

from siegelcount import conjectures as C
from siegelcount.motives import EC2, L, S, const, parse_expr


# --- dimensions --------------------------------------------------------------------

@pytest.mark.parametrize("a,b,ec,dim", [(50, 0, -37, 1), (11, 11, -4, 1)])
def test_dim_genus2(a, b, ec, dim):
    assert C.dim_genus2(a, b, ec) == dim


def test_dim_genus2_rejects_inconsistent_input():
    with pytest.raises(C.ConjectureError):
        C.dim_genus2(50, 0, -36)
    with pytest.raises(C.ConjectureError):
        C.dim_genus2(5, 0, 0)


def _synthetic_ec(lam, dim):
    """E_c rows for which dim_genus3 must return `dim`: E_c(A_3) = E_3,extr + 8 dim."""
    rng = random.Random(hash(lam) & 0xFFFF)
    ec = {}
    for sym in C.e3_extr_expr(*lam).symbols():
        if sym[0] == "EC2":
            ec[("A2", tuple(sym[1:]))] = rng.randrange(-50, 50)
    ec[("A3", lam)] = C.E3_extr(*lam, ec) + 8 * dim
    return ec


@pytest.mark.parametrize("lam,dim", [((8, 4, 4), 1), ((11, 5, 2), 1), ((9, 6, 3), 1), ((10, 2, 2), 0),
                                     ((16, 16, 16), 3)])
def test_dim_genus3_on_synthetic_rows(lam, dim):
    assert C.dim_genus3(*lam, _synthetic_ec(lam, dim)) == dim


def test_dim_genus3_flags_bad_data():
    ec = _synthetic_ec((8, 4, 4), 1)
    ec[("A3", (8, 4, 4))] += 3
    with pytest.raises(C.ConjectureError):
        C.dim_genus3(8, 4, 4, ec)
    del ec[("A3", (8, 4, 4))]
    with pytest.raises(C.ConjectureError):
        C.dim_genus3(8, 4, 4, ec)


def test_load_ec_data(tmp_path):
    p = tmp_path / "ec.txt"
    p.write_text("# values\nA2 50 0 -37\nA3 8 4 4 12\n")
    assert C.load_ec_data(p) == {("A2", (50, 0)): -37, ("A3", (8, 4, 4)): 12}
    p.write_text("A2 50 0\n")
    with pytest.raises(C.ConjectureError):
        C.load_ec_data(p)


# --- expressions -------------------------------------------------------------------

def test_e3_ne_examples():
    assert C.e3_ne_expr(8, 8, 8) == parse_expr("S[12](S[20]+L^10+L^9)")
    assert C.e3_ne_expr(13, 13, 0) == parse_expr("S[16](S[18]+LS[16])")
    assert C.e3_ne_expr(18, 9, 9) == parse_expr("S[12](S[32]+2L^10S[12])")
    assert C.e3_ne_expr(11, 5, 2) == const(0)


@pytest.mark.parametrize("lam", sorted(C.TABLE2))
def test_table2_rows_equal_e3_ne(lam):
    assert C.e3_ne_expr(*lam) == C.table2_expr(lam)


def test_eis_endo_identity_on_random_regular_lambdas():
    rng = random.Random(7)
    done = 0
    while done < 100:
        c = rng.randrange(1, 15)
        b = c + rng.randrange(1, 15)
        a = b + rng.randrange(1, 15)
        if (a + b + c) % 2:
            continue
        endo, eis = C.eis_endo_split(a, b, c)
        assert endo + eis - C.lift_term_i(a, b, c) == C.e3_extr_expr(a, b, c)
        done += 1


def test_eis_endo_rejects_irregular():
    with pytest.raises(C.ConjectureError):
        C.eis_endo_split(8, 4, 4)


def test_e3_extr_guards():
    with pytest.raises(C.ConjectureError):
        C.e3_extr_expr(3, 1, 1)
    with pytest.raises(C.ConjectureError):
        C.e3_extr_expr(0, 0, 0)
    with pytest.raises(C.ConjectureError):
        C.e3_extr_expr(1, 2, 1)


def test_e3_extr_shape():
    e = C.e3_extr_expr(4, 2, 0)
    assert EC2(5, 3) in [EC2(*s[1:]) for s in e.symbols() if s[0] == "EC2"]
    assert all(s[0] in ("EC2", "S") for s in e.symbols())


# --- traces (census based) ----------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("lam", sorted(C.THEOREM_TABLE))
def test_theorem_table(tracer, lam, q):
    exp, act = C.check_theorem(lam, q, tracer)
    assert exp == act


def test_theorem_example_value(tracer):
    assert tracer.e_c("A3", (6, 0, 0), 3) == -63


@pytest.mark.parametrize("q", [2, 3])
def test_e3_extr_trace_15_3_0(tracer, q):
    # no genus-3 cusp forms here, so the whole Euler characteristic is extraneous
    assert tracer.e_c("A3", (15, 3, 0), q) == tracer.trace(C.e3_extr_expr(15, 3, 0), q)


@pytest.mark.parametrize("q", [2, 3])
def test_eis_example_16_13_3(tracer, q):
    endo, eis = C.eis_endo_split(16, 13, 3)
    lhs = tracer.trace(endo + eis, q)
    assert lhs == tracer.trace(C.e3_extr_expr(16, 13, 3) + C.lift_term_i(16, 13, 3), q)
    assert isinstance(tracer.trace(eis, q), int)


def test_N_q_g3_vanishes_on_lift_rows(tracer):
    for lam in [(8, 4, 4), (8, 8, 8), (12, 4, 4)]:
        for q in (2, 3):
            assert C.N_q_g3(*lam, q, tracer) == 0


def test_predict_is_integer_and_obeys_bound(tracer):
    for lam, q in [((11, 5, 2), 3), ((9, 6, 3), 2), ((15, 13, 12), 2)]:
        v = C.predict_hecke_trace_g3(lam, q, tracer)
        assert isinstance(v, int)
        assert abs(v) <= 8 * q ** (sum(lam) / 2 + 3)


def test_appendix_table_loads():
    rows = C.load_ec_a3_small()
    assert len(rows) == 148 and (12, 4, 2) in rows


def test_partitions3():
    ps = list(C.partitions3(4))
    assert ps == [(0, 0, 0), (2, 0, 0), (1, 1, 0), (4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1)]


# --- characteristic polynomials -----------------------------------------------------

def test_charpoly_round_trip():
    rng = random.Random(3)
    for _ in range(30):
        w = rng.choice([10, 18, 24])
        head = [1] + [rng.randrange(-10 ** 5, 10 ** 5) for _ in range(4)]
        P = C.from_factor(2, w, head)
        Q = C.charpoly_from_traces(P.power_sums(4), w, 2)
        assert Q.coeffs == P.coeffs and isinstance(Q, C.CharPoly8)


def test_functional_equation_enforced():
    with pytest.raises(C.ConjectureError):
        C.CharPoly(2, 4, (1, 3, 5))


def test_product_of_factors():
    f = C.from_factor(2, 10, [1, 24])
    g = C.from_factor(2, 10, [1, -8])
    assert (f * g).coeffs == (1, 16, 2 * 1024 - 192, 16 * 1024, 1024 ** 2)


def _spin7_candidate():
    # reciprocal roots 1, 1 and three conjugate pairs on the circle, normalised weight 0
    return C.CharPoly8(2, 0, (1, -4, 9, -13, 16, -13, 9, -4, 1))


def test_ramanujan_check():
    assert C.ramanujan_check(C.from_factor(2, 10, [1, 24]))
    assert not C.ramanujan_check(C.from_factor(2, 10, [1, 100]))
    with pytest.raises(C.InconclusiveError):
        C.ramanujan_check(C.CharPoly(1, 0, (1, Fraction(-2) - Fraction(1, 10 ** 7), 1)), tight=1e-12)


def test_spin7_and_g2_on_controls():
    P = _spin7_candidate()
    A, B, Cc, D = P.ABCD
    assert (A, B, Cc, D) == (4, 9, 13, 16)
    bad = C.CharPoly8(2, 0, (1, -4, 9, -12, 16, -12, 9, -4, 1))
    assert not (C.spin7_check(bad) and C.g2_check(bad))


# --- congruences ---------------------------------------------------------------------

def test_congruence_recipes_on_integers():
    assert C.congruence_rhs("harder", (11, 7), 2, [10]) == 10 + 2 ** 13 + 2 ** 8
    assert C.congruence_rhs("eis_g3_sym2fg", (12, 6, 2), 2, [5, 7]) == 5 * (7 + 2 ** 8 + 2 ** 3)
    assert C.congruence_rhs("eis_g3_genus2lift", (12, 6, 2), 3, [4]) == 4 * (1 + 27)
    with pytest.raises(C.ConjectureError):
        C.congruence_rhs("nope", (1, 1, 1), 2, [1])


def test_matrix_recipe_matches_integers():
    rhs_int = C.congruence_rhs("eis_g3_sym2fg", (12, 6, 2), 2, [5, 7])
    ev = [C._Mat([[5]]), C._Mat([[7]])]
    rhs_mat = C.congruence_rhs("eis_g3_sym2fg", (12, 6, 2), 2, ev, C._Mat([[1]]))
    assert rhs_mat.a[0][0] == rhs_int


def test_bareiss_det():
    assert C._bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 2 * (3 - 2) + 1 * (1 - 3)
    assert C._bareiss_det([[0, 1], [1, 0]]) == -1


def test_hecke_polynomial_S24(tracer):
    # the two weight-24 eigenvalues at 2 are 540 +- 12 sqrt(144169)
    assert C.hecke_polynomial(24, 2, tracer) == [1, -1080, 540 ** 2 - 144 * 144169]


def test_case_loading_and_validation():
    cases = C.load_congruence_cases()
    labels = {c.label for c in cases}
    assert "eis_g3_sym2fg(12,6,2) mod 101^1" in labels
    assert "eis_g3_sym2fg(14,7,1) mod 17^2" in labels
    with pytest.raises(C.ConjectureError):
        C.CongruenceCase("harder", (3, 5), 41)
    with pytest.raises(C.ConjectureError):
        C.CongruenceCase("harder", (11, 7), 1)


def test_harder_diagonal_is_skipped(tracer):
    assert C.congruence_values(C.CongruenceCase("harder", (10, 10), 41), 2, tracer) is None


@pytest.mark.parametrize("case", [c for c in C.load_congruence_cases() if c.mode == "eigenvalue"],
                         ids=lambda c: c.label)
@pytest.mark.parametrize("q", [2, 3])
def test_eigenvalue_mode_congruences(tracer, case, q):
    assert C.check_congruence(case, q, tracer)


_NORM = [c for c in C.load_congruence_cases() if c.mode == "norm"]


@pytest.mark.slow
@pytest.mark.parametrize("case", [pytest.param(c, marks=pytest.mark.xfail(
    strict=True, reason="no reading of the recipe reproduces this modulus; see notes"))
    if c.lam == (21, 3) else c for c in _NORM], ids=lambda c: c.label)
@pytest.mark.parametrize("q", [2, 3])
def test_norm_mode_congruences(tracer, case, q):
    assert C.check_congruence(case, q, tracer)


# --- report ----------------------------------------------------------------------------

def test_report_csv_schema(tracer):
    rep = C.report((2,), ["theorem"], tracer)
    lines = rep.csv().splitlines()
    assert lines[0] == "check,lambda,q,expected,actual,pass"
    assert len(lines) == 15 and not rep.failures
    assert rep.summary().endswith("total: 14/14 pass")
