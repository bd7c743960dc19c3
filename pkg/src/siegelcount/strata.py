"""Assembly of A1, A2, A3 censuses from curve censuses.

A1 is the elliptic census.  A2 is the Jacobian locus (genus-2 curves) plus
unordered pairs of elliptic curves, A3 is the image of plane quartics (with
their quadratic twists), of hyperelliptic genus-3 curves, of products of a
genus-2 Jacobian with an elliptic curve, and of unordered triples of
elliptic curves.  Unordered pairs and triples are counted with the usual
cycle-index weights, where a j-cycle contributes the Weil restriction of a
curve over F_{q^j}.
"""
from __future__ import annotations

from fractions import Fraction

from .census.table import CensusError, CensusTable, check_weil

SPACE_GENUS = {"A1": 1, "A2": 2, "A3": 3}


def stack_mass(space: str, q: int) -> int:
    return {
        "A1": q,
        "A2": q ** 3 + q ** 2,
        "A3": q ** 6 + q ** 5 + q ** 4 + q ** 3 + 1,
    }[space]


def _require(t: CensusTable, family: str, q: int | None = None):
    if t.family != family:
        raise CensusError(f"expected a {family} census, got {t.family}")
    if q is not None and t.q != q:
        raise CensusError(f"expected a census over F_{q}, got F_{t.q}")


def _scaled(t: CensusTable, c) -> dict:
    return {k: m * c for k, m in t.cells.items()}


def convolve(x: CensusTable, y: CensusTable, family: str) -> CensusTable:
    """Cells of a product: traces add, masses multiply."""
    if x.q != y.q:
        raise CensusError("convolution needs tables over the same field")
    out = CensusTable(family, x.q, x.g + y.g)
    for u, mu in x.cells.items():
        for v, mv in y.cells.items():
            out.add((u[0] + v[0], u[1] + v[1], u[2] + v[2]), mu * mv)
    return out


def induced_cell(cell, j: int):
    """Traces over F_q, F_q^2, F_q^3 of the Weil restriction of a curve over F_{q^j}."""
    if j not in (2, 3):
        raise ValueError("j must be 2 or 3")
    t = cell[0]
    return (0, 2 * t, 0) if j == 2 else (0, 0, 3 * t)


def induce(t: CensusTable, j: int, q: int, family: str) -> CensusTable:
    """Image of an elliptic census over F_{q^j} under Weil restriction to F_q."""
    _require(t, "elliptic", q ** j)
    out = CensusTable(family, q, j)
    for k, m in t.cells.items():
        out.add(induced_cell(k, j), m)
    return out


def stratum_quartic_torelli(quartic: CensusTable) -> CensusTable:
    _require(quartic, "quartic")
    out = CensusTable("A3", quartic.q, 3)
    for (a1, a2, a3), m in quartic.cells.items():
        out.add((a1, a2, a3), m / 2)
        out.add((-a1, a2, -a3), m / 2)
    return out


def stratum_hyperelliptic3(hyper3: CensusTable) -> CensusTable:
    _require(hyper3, "hyper3")
    out = CensusTable("A3", hyper3.q, 3)
    out.cells = dict(hyper3.cells)
    return out


def stratum_product_m2_a1(hyper2: CensusTable, elliptic: CensusTable) -> CensusTable:
    _require(hyper2, "hyper2")
    _require(elliptic, "elliptic", hyper2.q)
    return convolve(hyper2, elliptic, "A3")


def stratum_a11(e1: CensusTable, e2: CensusTable) -> CensusTable:
    _require(e1, "elliptic")
    q = e1.q
    out = convolve(e1, e1, "A2")
    out.cells = _scaled(out, Fraction(1, 2))
    for k, m in induce(e2, 2, q, "A2").cells.items():
        out.add(k, m / 2)
    return out


def stratum_a111(e1: CensusTable, e2: CensusTable, e3: CensusTable) -> CensusTable:
    _require(e1, "elliptic")
    q = e1.q
    pair = convolve(e1, e1, "A2")
    triple = convolve(pair, e1, "A3")
    out = CensusTable("A3", q, 3)
    for k, m in triple.cells.items():
        out.add(k, m / 6)
    for k, m in convolve(e1, induce(e2, 2, q, "A2"), "A3").cells.items():
        out.add(k, m / 2)
    for k, m in induce(e3, 3, q, "A3").cells.items():
        out.add(k, m / 3)
    return out


def assemble(space: str, q: int, inputs: dict) -> CensusTable:
    """Cell-wise sum of the strata of `space` over F_q.

    `inputs` maps labels to censuses: "elliptic1", "elliptic2", "elliptic3"
    (over F_q, F_q^2, F_q^3), "hyper2", "hyper3", "quartic".
    """
    need = {
        "A1": ["elliptic1"],
        "A2": ["hyper2", "elliptic1", "elliptic2"],
        "A3": ["quartic", "hyper3", "hyper2", "elliptic1", "elliptic2", "elliptic3"],
    }[space]
    missing = [k for k in need if k not in inputs]
    if missing:
        raise CensusError(f"{space} over F_{q}: missing strata inputs {missing}")
    g = SPACE_GENUS[space]
    out = CensusTable(space, q, g)
    if space == "A1":
        _require(inputs["elliptic1"], "elliptic", q)
        parts = [inputs["elliptic1"]]
    elif space == "A2":
        _require(inputs["hyper2"], "hyper2", q)
        parts = [inputs["hyper2"], stratum_a11(inputs["elliptic1"], inputs["elliptic2"])]
    else:
        _require(inputs["quartic"], "quartic", q)
        _require(inputs["hyper3"], "hyper3", q)
        parts = [
            stratum_quartic_torelli(inputs["quartic"]),
            stratum_hyperelliptic3(inputs["hyper3"]),
            stratum_product_m2_a1(inputs["hyper2"], inputs["elliptic1"]),
            stratum_a111(inputs["elliptic1"], inputs["elliptic2"], inputs["elliptic3"]),
        ]
    for part in parts:
        for k, m in part.cells.items():
            out.add(k, m)
    for k in out.cells:
        check_weil(k, g, q)
    out.meta["inputs"] = ",".join(f"{lbl}:{inputs[lbl].checksum()[:16]}" for lbl in need)
    return out
