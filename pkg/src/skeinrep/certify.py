"""Projective order certificates.

Infinite order: if M has an identity block and M^N = c I, then c = 1, so
every other block B satisfies B^N = I; its eigenvalues are roots of unity
and |tr B| <= dim B.  A real trace with tr B - dim B > 0 rules this out.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .blocks import ScalarBlockMatrix
from .coloring import Cell
from .cyclo import CycloElem, RootChoice, primitive_roots, sign_real, x_pow
from .rep import Commutator2, CommutatorM, element_name, represent, trace_f

SCHEMA_VERSION = 1
INFINITE = "InfiniteOrder"
FINITE = "FiniteOrder"
INCONCLUSIVE = "Inconclusive"


@dataclass
class OrderCertificate:
    kind: str
    r: int
    t: int
    element: str = ""
    n: int | None = None
    rationale: str = ""
    # infinite order evidence
    witness_groups: list = field(default_factory=list)
    witness_a: int | None = None
    block: list | None = None  # per-copy grid of the witness block
    size: int = 0
    trace: CycloElem | None = None
    dim: int = 0
    det: CycloElem | None = None
    excess: CycloElem | None = None
    sign: int = 0
    identity_block: tuple | None = None
    # finite order evidence
    order: int | None = None
    scalar: CycloElem | None = None
    matrix: ScalarBlockMatrix | None = None

    @property
    def root(self) -> RootChoice:
        return RootChoice(self.r, self.t)

    @property
    def excess_per_copy(self) -> CycloElem | None:
        if self.excess is None:
            return None
        return self.excess / self.size

    def to_json(self) -> dict:
        root = self.root
        out = {
            "schema_version": SCHEMA_VERSION,
            "element": self.element,
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "kind": self.kind,
            "rationale": self.rationale,
        }
        if self.kind == INFINITE:
            ex = self.excess_per_copy.to_complex(root).real
            out.update(
                witness_a=self.witness_a,
                witness_groups=list(self.witness_groups),
                block=[[v.to_json() for v in row] for row in self.block],
                size=self.size,
                trace=self.trace.to_json(),
                dim=self.dim,
                det=self.det.to_json(),
                excess=self.excess.to_json(),
                sign=self.sign,
                identity_block={"name": self.identity_block[0], "size": self.identity_block[1]},
                float_rendering={
                    "trace": self.trace.to_complex(root).real,
                    "excess": self.excess.to_complex(root).real,
                    "excess_per_copy": ex,
                    "precision_bits": 53,
                },
            )
        elif self.kind == FINITE:
            out.update(
                order=self.order,
                scalar=self.scalar.to_json(root),
                matrix=self.matrix.to_json() if self.matrix is not None else None,
            )
        return out

    @classmethod
    def from_json(cls, d: dict) -> "OrderCertificate":
        c = cls(d["kind"], d["r"], d["t"], d.get("element", ""), d.get("n"), d.get("rationale", ""))
        if c.kind == INFINITE:
            c.witness_a = d["witness_a"]
            c.witness_groups = d["witness_groups"]
            c.block = [[CycloElem.from_json(v) for v in row] for row in d["block"]]
            c.size = d["size"]
            c.trace = CycloElem.from_json(d["trace"])
            c.dim = d["dim"]
            c.det = CycloElem.from_json(d["det"])
            c.excess = CycloElem.from_json(d["excess"])
            c.sign = d["sign"]
            ib = d["identity_block"]
            c.identity_block = (ib["name"], ib["size"])
        elif c.kind == FINITE:
            c.order = d["order"]
            c.scalar = CycloElem.from_json(d["scalar"])
            if d.get("matrix"):
                c.matrix = ScalarBlockMatrix.from_json(d["matrix"])
        return c


def _witness_a(name: str):
    try:
        return Cell.parse(name).a
    except (ValueError, IndexError):
        return None


def infinite_order_certificate(
    M: ScalarBlockMatrix, root: RootChoice, element: str = "", n: int | None = None
) -> OrderCertificate:
    """First block with real trace exceeding its dimension, given an identity block."""
    if M.N != root.N:
        raise ValueError("matrix and root choice live in different fields")
    base = dict(r=root.r, t=root.t, element=element, n=n)
    comps = M.components()
    ident = None
    for comp in comps:
        sub = M.restrict(comp)
        if sub.is_identity():
            ident = (sub.groups[0][0], sub.dim)
            break
    if ident is None:
        return OrderCertificate(INCONCLUSIVE, rationale="no identity block", **base)
    for comp in comps:
        sub = M.restrict(comp)
        if sub.is_scalar():
            continue
        tr = sub.trace()
        det = sub.det()
        if det != 1 or not tr.is_real():
            continue
        excess = tr - sub.dim
        if sign_real(excess, root) != 1:
            continue
        names = [g for g, _ in sub.groups]
        return OrderCertificate(
            INFINITE,
            rationale=(
                f"identity block {ident[0]} of size {ident[1]} forces any projective power "
                f"M^N = cI to have c = 1; block {names} then has root-of-unity eigenvalues, "
                f"contradicting real trace > dimension {sub.dim}"
            ),
            witness_groups=names,
            witness_a=_witness_a(names[0]),
            block=sub.grid(),
            size=sub.groups[0][1],
            trace=tr,
            dim=sub.dim,
            det=det,
            excess=excess,
            sign=1,
            identity_block=ident,
            **base,
        )
    return OrderCertificate(INCONCLUSIVE, rationale="no block has real trace above its dimension", **base)


def finite_order_check(
    M: ScalarBlockMatrix, root: RootChoice | None = None, maxN: int = 64, element: str = ""
) -> OrderCertificate:
    """Smallest N <= maxN with M^N scalar."""
    if maxN > 64:
        raise ValueError("maxN is capped at 64")
    r, t = (root.r, root.t) if root else (M.N // 4, 1)
    P = M
    for N in range(1, maxN + 1):
        c = P.scalar_value()
        if c is not None:
            return OrderCertificate(
                FINITE, r, t, element, rationale=f"M^{N} = c I and no smaller power is scalar",
                order=N, scalar=c, matrix=M,
            )
        P = P @ M
    return OrderCertificate(INCONCLUSIVE, r, t, element, rationale=f"no scalar power up to {maxN}")


def verify_certificate(cert) -> bool:
    """Re-check a certificate from its embedded exact data only."""
    if isinstance(cert, dict):
        cert = OrderCertificate.from_json(cert)
    root = cert.root
    if cert.kind == INFINITE:
        g = cert.block
        k = len(g)
        N = root.N
        sub = ScalarBlockMatrix.from_grid(N, [(str(i), 1) for i in range(k)], g)
        checks = [
            cert.identity_block is not None and cert.identity_block[1] > 0,
            cert.size > 0 and cert.dim == k * cert.size,
            sub.det() ** cert.size == cert.det == 1,
            sub.trace() * cert.size == cert.trace,
            cert.trace.is_real(),
            cert.excess == cert.trace - cert.dim,
            sign_real(cert.excess, root) == 1,
        ]
        return all(checks)
    if cert.kind == FINITE:
        if cert.matrix is None:
            return False
        P = cert.matrix
        for _ in range(1, cert.order):
            if P.is_scalar():
                return False
            P = P @ cert.matrix
        return P.scalar_value() == cert.scalar
    return False


def halftwist_trivial(root: RootChoice, m: int) -> bool:
    """q^m = (-1)^m, which makes rho(sigma_i^m) the identity projectively."""
    if m < 1:
        raise ValueError("m must be positive")
    return x_pow(root, 4 * m) == (-1) ** m


def _scan_r(args):
    n, m, r, elements = args
    out = []
    probe = RootChoice(r, 1)
    if not halftwist_trivial(probe, m):
        return out
    for root in primitive_roots(r):
        for e in elements:
            M = represent(e, n, root)
            cert = infinite_order_certificate(M, root, element_name(e), n)
            if cert.kind == INFINITE:
                out.append(cert.to_json())
    return out


def _map(fn, items, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def certify_power_subgroup(two_n: int, m: int, r_max: int, jobs: int = 1) -> list[OrderCertificate]:
    """Certificates that the normal closure of m-th powers of half twists has infinite index."""
    if two_n % 2 or two_n < 6:
        raise ValueError(f"need an even number of punctures >= 6, got {two_n}")
    n = two_n // 2
    elements = (CommutatorM(), Commutator2(2))
    items = [(n, m, r, elements) for r in range(5, r_max + 1)]
    found = []
    for batch in _map(_scan_r, items, jobs):
        found.extend(OrderCertificate.from_json(c) for c in batch)
    return found


def scan_f2(r_range) -> dict[int, dict]:
    """For each r, which primitive roots give f_2(q) > 2."""
    report = {}
    for r in r_range:
        roots = primitive_roots(r)
        excess = trace_f(2, roots[0]) - 2
        signs = {root.t: sign_real(excess, root) for root in roots}
        good = [t for t, s in signs.items() if s == 1]
        report[r] = {"positive": bool(good), "witness_t": good[0] if good else None, "signs": signs}
    return report


def headline_excess(r: int, t: int, a: int = 1) -> float:
    """-4 sin((a+1) theta / 2) sin((a+3) theta / 2) for q = exp(i theta)."""
    theta = 2 * math.pi * ((4 * t) % (4 * r)) / (4 * r)
    return -4 * math.sin((a + 1) * theta / 2) * math.sin((a + 3) * theta / 2)
