"""Separating symmetric twists in the hyperelliptic mapping class group.

Under the quotient by the hyperelliptic involution, the twist along a
separating symmetric curve delta_h of genus h becomes the full twist
(sigma_1 ... sigma_{2h})^{4h+2} on 2g+2 punctures, which acts diagonally on
B_T through the label a_{2h}.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .certify import INFINITE, halftwist_trivial, infinite_order_certificate
from .coloring import label_counts
from .cyclo import CycloElem, RootChoice, primitive_roots, x_pow
from .rep import assemble_M, full_twist_scalar

FINITE = "finite"
INFINITE_CELL = "infinite"
UNKNOWN = "unknown"
COMPUTED = "computed-certificate"
LITERATURE = "literature"


@dataclass
class TwistScalarSet:
    g: int
    h: int
    m: int
    root: RootChoice
    scalars: dict  # a -> CycloElem

    @property
    def trivial(self) -> bool:
        """Projectively the identity: one scalar on the whole basis."""
        return len(set(self.scalars.values())) <= 1

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "h": self.h,
            "m": self.m,
            "r": self.root.r,
            "t": self.root.t,
            "trivial": self.trivial,
            "scalars": {str(a): v.to_json(self.root) for a, v in sorted(self.scalars.items())},
        }


def separating_scalar(h: int, m: int, a: int, root: RootChoice) -> CycloElem:
    """q^{3mh} q^{-m(a-1)(a+3)/2}, the action of T_{delta_h}^m when a_{2h} = a."""
    # a is odd, so (a-1)(a+3)/2 is an integer
    e = 3 * m * h - m * ((a - 1) * (a + 3) // 2)
    return x_pow(root, 4 * e)


def delta_scalar_set(g: int, h: int, m: int, root: RootChoice) -> TwistScalarSet:
    if g < 2 or not 1 <= h <= g - 1:
        raise ValueError(f"need g >= 2 and 1 <= h <= g-1, got g={g}, h={h}")
    n = g + 1
    values = sorted(label_counts(n, root.r, 2 * h))
    scalars = {}
    for a in values:
        s = separating_scalar(h, m, a, root)
        assert s == full_twist_scalar(2 * h + 1, a, root) ** (2 * m)
        scalars[a] = s
    return TwistScalarSet(g, h, m, root, scalars)


def closed_form_a_values(g: int, r: int) -> list[int]:
    """{1, 3, ..., min(r-2 or r-3, 2g-1)}: the stated range of a_{2h}."""
    top = min(r - 2 if r % 2 else r - 3, 2 * g - 1)
    return list(range(1, top + 1, 2))


def twist_condition(r: int, g: int, h: int, m: int):
    """(case, claimed identity) from the four stated cases, or (None, None) if none applies."""
    root = RootChoice(r)
    hp = min(h, g - h)
    q6 = x_pow(root, 24 * m) == 1
    q2 = x_pow(root, 8 * m) == 1
    if r == 4:
        return 1, True
    if r in (5, 6):
        return 2, q6
    if r >= 7 and g in (2, 3) and hp == 1:
        return 3, q6
    if r >= 7 and g >= 4:
        return 4, q2
    return None, None


def verify_twist_conditions(r_range, g_range, m_range) -> dict:
    """Compare the stated conditions against the direct equal-scalar test."""
    rows = []
    for r in r_range:
        root = RootChoice(r)
        for g in g_range:
            for h in range(1, g):
                for m in m_range:
                    case, claim = twist_condition(r, g, h, m)
                    direct = delta_scalar_set(g, h, m, root).trivial
                    mirror = delta_scalar_set(g, g - h, m, root).trivial
                    assert direct == mirror, f"h <-> g-h asymmetry at r={r}, g={g}, h={h}, m={m}"
                    if case is None or claim == direct:
                        status = "agree" if case is not None else "no case"
                    elif claim and not direct:
                        status = "contradiction"
                    else:
                        status = "stated condition sufficient but not necessary"
                    rows.append(
                        dict(r=r, g=g, h=h, m=m, case=case, stated=claim, direct=direct, status=status)
                    )
    mismatches = [row for row in rows if row["status"] not in ("agree", "no case")]
    return {
        "checked": len(rows),
        "agree": sum(row["status"] == "agree" for row in rows),
        "mismatches": mismatches,
        "contradictions": [row for row in mismatches if row["status"] == "contradiction"],
    }


# -- N^iota_(k,l) ----------------------------------------------------------------


def separating_trivial_all(g: int, l: int, root: RootChoice) -> bool:
    return all(delta_scalar_set(g, h, l, root).trivial for h in range(1, g))


def certify_Nkl(g: int, k: int, l: int, r_max: int, first_only: bool = False) -> list[dict]:
    """Roots where T_c^k and every T_{delta_h}^l act trivially while M has infinite order."""
    if g < 2:
        raise ValueError("need g >= 2")
    n = g + 1
    out = []
    for r in range(5, r_max + 1):
        probe = RootChoice(r)
        # both conditions are exact identities in q, independent of t
        if not halftwist_trivial(probe, k) or not separating_trivial_all(g, l, probe):
            continue
        for root in primitive_roots(r):
            cert = infinite_order_certificate(assemble_M(n, root), root, "CommutatorM", n)
            if cert.kind != INFINITE:
                continue
            out.append(
                {
                    "g": g,
                    "k": k,
                    "l": l,
                    "r": r,
                    "t": root.t,
                    "halftwist_trivial": True,
                    "separating": [
                        delta_scalar_set(g, h, l, root).to_json() for h in range(1, g // 2 + 1)
                    ],
                    "certificate": cert.to_json(),
                }
            )
            if first_only:
                return out
    return out


# -- the table ------------------------------------------------------------------

NEWMAN = "Newman: N_m has finite index in SL(2,Z) for m <= 5, infinite index for m >= 6"
HUMPHRIES_FIN = "Humphries: N_2 finite index for g >= 1, N_3 for g = 2, 3 (Birman-Hilden for g = 2)"
HUMPHRIES_INF = "Humphries: for g = 2, all m-th powers of twists generate an infinite-index subgroup if m >= 4"
GENERATED = "symmetric Dehn twists generate Delta(g,0), so m = 1 gives the whole group"


def literature_fact(g: int, m: int):
    """(status, citation) for cells settled by earlier results, else None."""
    if g == 1:
        return (FINITE, NEWMAN) if m <= 5 else (INFINITE_CELL, NEWMAN)
    if m == 1:
        return FINITE, GENERATED
    if g == 2 and m in (2, 3):
        return FINITE, HUMPHRIES_FIN
    if g == 2 and m in (4, 6):
        return INFINITE_CELL, HUMPHRIES_INF
    return None


@dataclass
class TableCell:
    g: int
    m: int
    status: str
    provenance: str | None = None
    citation: str = ""
    evidence: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "m": self.m,
            "status": self.status,
            "provenance": self.provenance,
            "citation": self.citation,
            "evidence": self.evidence,
        }


def computable(g: int, m: int) -> bool:
    return g >= 2 and m >= 5 and m != 6


def _cell(args) -> TableCell:
    g, m = args
    if computable(g, m):
        found = certify_Nkl(g, m, m, 2 * m, first_only=True)
        if found:
            return TableCell(g, m, INFINITE_CELL, COMPUTED, "infinite-order certificate with trivial twist powers", found)
        return TableCell(g, m, UNKNOWN, None, "no certificate found up to r = 2m")
    fact = literature_fact(g, m)
    if fact:
        return TableCell(g, m, fact[0], LITERATURE, fact[1])
    return TableCell(g, m, UNKNOWN)


def build_table(g_max: int = 22, m_max: int = 10, jobs: int = 1) -> dict:
    items = [(g, m) for g in range(1, g_max + 1) for m in range(1, m_max + 1)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            cells = list(ex.map(_cell, items, chunksize=8))
    else:
        cells = [_cell(x) for x in items]
    return {(c.g, c.m): c for c in cells}


SYMBOL = {FINITE: "█", INFINITE_CELL: "▓", UNKNOWN: "·"}


def render_table(table: dict) -> str:
    gs = sorted({g for g, _ in table})
    ms = sorted({m for _, m in table})
    lines = []
    for m in reversed(ms):
        lines.append(f"{m:>3} " + " ".join(f"{SYMBOL[table[(g, m)].status]:>2}" for g in gs))
    lines.append("  m " + " ".join(f"{g:>2}" for g in gs) + "  <- g")
    lines.append(f"legend: {SYMBOL[FINITE]} finite index, {SYMBOL[INFINITE_CELL]} infinite index, {SYMBOL[UNKNOWN]} unknown")
    return "\n".join(lines)


def table_to_json(table: dict) -> list[dict]:
    return [table[k].to_json() for k in sorted(table)]
