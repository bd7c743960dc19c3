"""Genus-2 characteristic polynomials at p=2 and the Spin(7)/G2 tests on a genus-3 example."""
import argparse

from siegelcount import conjectures as C
from siegelcount.motives import Tracer


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    # a,b:n uses traces over F_2 .. F_{2^n}; n is twice the dimension of the space
    ap.add_argument("--lambda", dest="lams", nargs="+", default=["22,4:4", "11,7:2", "13,5:2"])
    args = ap.parse_args()
    tracer = Tracer()
    for text in args.lams:
        lam, n = text.split(":")
        a, b = map(int, lam.split(","))
        P = C.genus2_charpoly(a, b, 2, int(n), tracer)
        try:
            ram = C.ramanujan_check(P)
        except C.InconclusiveError as e:
            ram = f"inconclusive ({e})"
        print(f"({a},{b}) p=2: {list(P.coeffs)}\n  ramanujan: {ram}")
    sq = C.from_factor(2, 24, [1, -2 ** 13])
    sextic = C.from_factor(2, 24, [1, 7112, 34431488, 176085008384])
    P = C.CharPoly8(2, 24, (sq * sextic).coeffs)
    print(f"(9,6,3) p=2: spin7 {C.spin7_check(P)}, g2 {C.g2_check(P)}, "
          f"(X-1)^2 {C.has_double_unit_root(P)}, ABCD {P.ABCD}")


if __name__ == "__main__":
    main()
