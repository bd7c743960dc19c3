"""Check every tabulated congruence, eigenvalue and norm mode, at the given q."""
import argparse

from siegelcount import conjectures as C
from siegelcount.motives import Tracer


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    tracer = Tracer()
    for case in C.load_congruence_cases():
        for q in args.q:
            vals = C.congruence_values(case, q, tracer)
            if vals is None:
                print(f"skip {case.label} q={q}: no congruence expected")
                continue
            n, rhs = vals
            ok = (n - rhs) % case.modulus == 0
            print(f"{'PASS' if ok else 'FAIL'} {case.label} [{case.mode}] q={q}: "
                  f"N-rhs = {(n - rhs) % case.modulus} mod {case.modulus}")


if __name__ == "__main__":
    main()
