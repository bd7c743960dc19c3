"""Hecke eigenvalues of one-dimensional genus-2 and genus-3 spaces from point counts."""
import argparse
from dataclasses import dataclass

from siegelcount import conjectures as C
from siegelcount.motives import Tracer


@dataclass
class EigenConfig:
    genus2: tuple = ((11, 7), (32, 32), (50, 0), (11, 5), (13, 5))
    genus3: tuple = ((11, 5, 2), (9, 6, 3), (8, 4, 4), (15, 13, 12), (8, 8, 8))
    qs: tuple = (2, 3)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=None)
    args = ap.parse_args()
    cfg = EigenConfig() if args.q is None else EigenConfig(qs=tuple(args.q))
    tracer = Tracer()
    print("lambda\tspace\t" + "\t".join(f"q={q}" for q in cfg.qs))
    for a, b in cfg.genus2:
        vals = [C.N_q_g2(a, b, q, tracer) for q in cfg.qs]
        print(f"({a},{b})\tS_{{{a - b},{b + 3}}}\t" + "\t".join(map(str, vals)))
    for a, b, c in cfg.genus3:
        vals = [C.predict_hecke_trace_g3((a, b, c), q, tracer) for q in cfg.qs]
        print(f"({a},{b},{c})\tS_{{{a - b},{b - c},{c + 4}}}\t" + "\t".join(map(str, vals)))


if __name__ == "__main__":
    main()
