"""Desk-scale invariant suite (n <= 6, r <= 12) behind the `selfcheck` command."""

from __future__ import annotations

import time

from .certify import (
    FINITE,
    INFINITE,
    finite_order_check,
    halftwist_trivial,
    infinite_order_certificate,
    scan_f2,
    verify_certificate,
)
from .coloring import brute_counts, count_profile, enumerate_basis, is_q_admissible
from .cyclo import RootChoice, conj_q, primitive_roots, qint
from .recoupling import fusion_BT_to_BY, matrix_A, matrix_X
from .rep import (
    assemble_M,
    m_block_labels,
    m_block_trace,
    rho_commutator2,
    rho_halftwist_T,
    trace_f,
)
from .hyperelliptic import verify_twist_conditions


def check_counts():
    for n in range(3, 7):
        for r in range(4, 13):
            prof = count_profile(n, r)
            for basis in ("T", "Y"):
                dp = {str(c): v for c, v in prof.cell_sizes(basis).items()}
                if dp != brute_counts(basis, n, r):
                    return False, f"cell sizes differ for {basis} at n={n}, r={r}"
            types = {k: v for k, v in prof.type_sizes.items() if v}
            if types != brute_counts("T'", n, r):
                return False, f"type sizes differ at n={n}, r={r}"
            if prof.type_sizes["TypeI"] != prof.type_sizes["TypeII"]:
                return False, f"|Type I| != |Type II| at n={n}, r={r}"
            if r == 4 and prof.k_prime:
                return False, "k' != 0 at r=4"
    return True, "DP = brute force for n <= 6, r <= 12"


def check_qint():
    for r in range(3, 13):
        root = RootChoice(r)
        for n in range(0, 21):
            if qint(root, n + 1) != qint(root, 2) * qint(root, n) - qint(root, n - 1):
                return False, f"[n] recurrence fails at n={n}, r={r}"
            if conj_q(qint(root, n)) != qint(root, n):
                return False, f"[n] not real at n={n}, r={r}"
    return True, "quantum integer recurrence and reality"


def check_recoupling():
    for r in range(4, 21):
        A = matrix_A(3, RootChoice(r))
        if not (A @ A).is_identity():
            return False, f"A^2 != I at r={r}"
    for r in range(5, 13):
        root = RootChoice(r)
        for a in range(0, r - 2):
            X, Xi = matrix_X(a, root)
            if not ((X @ Xi).is_identity() and (Xi @ X).is_identity()):
                return False, f"X({a}) X({a})^-1 != I at r={r}"
    for n in range(3, 7):
        for r in range(4, 13):
            root = RootChoice(r)
            for c, _ in enumerate_basis("T", n, r).entries:
                for tgt, _ in fusion_BT_to_BY(c.labels, n, root):
                    L = (1, *tgt, 1)
                    if not is_q_admissible((L[n - 2], L[n - 1], L[n]), r):
                        return False, f"fusion target {tgt} not q-admissible"
    return True, "A^2 = I, X X^-1 = I, fusion targets q-admissible"


def check_commutator2():
    for r in range(4, 13):
        root = RootChoice(r)
        for n in range(3, 6):
            prof = count_profile(n, r)
            for s in range(0, 5):
                C = rho_commutator2(s, n, root)
                if C.det() != 1 or C.trace() != trace_f(s, root) * prof.k + prof.k_prime:
                    return False, f"det/trace fails at s={s}, n={n}, r={r}"
    return True, "closed form = D A D A, det = 1, trace = f_s k + k'"


def check_M():
    for n in range(3, 7):
        for r in range(4, 13):
            root = RootChoice(r)
            M = assemble_M(n, root)
            for a, comp in m_block_labels(M):
                B = M.restrict(comp)
                size = B.groups[0][1]
                if B.det() != 1 or B.trace() != m_block_trace(a, root) * size:
                    return False, f"M({a}) det/trace fails at n={n}, r={r}"
    return True, "M(a) closed = product, det = 1, trace line"


def check_headline():
    root = RootChoice(10, 3)
    if not halftwist_trivial(root, 5):
        return False, "q^5 != -1"
    cert = infinite_order_certificate(assemble_M(3, root), root, "CommutatorM", 3)
    if cert.kind != INFINITE or cert.witness_a != 1 or not verify_certificate(cert.to_json()):
        return False, f"headline certificate: {cert.kind}"
    return True, f"r=10, t=3: excess {cert.to_json()['float_rendering']['excess_per_copy']:.10f}"


def check_finite_orders():
    for n, r, want in ((3, 6, {1: 3}), (4, 6, {0: 2, 2: 2}), (4, 4, {0: 2})):
        root = RootChoice(r)
        M = assemble_M(n, root)
        got = {a: finite_order_check(M.restrict(c), root).order for a, c in m_block_labels(M)}
        if got != want:
            return False, f"orders at n={n}, r={r}: {got}"
    for root in primitive_roots(6):
        if infinite_order_certificate(assemble_M(3, root), root).kind == INFINITE:
            return False, "r=6 produced an infinite-order certificate"
    return True, "r=6: M(1) order 3, M(0), M(2) order 2; r=4: M(0) order 2"


def check_f2_scan():
    rep = scan_f2(range(5, 51))
    bad = [r for r, v in rep.items() if v["positive"] != (r not in (6, 10))]
    return not bad, f"f_2 > 2 exactly off {{6, 10}}" if not bad else f"unexpected r: {bad}"


def check_twist_conditions():
    rep = verify_twist_conditions(range(4, 13), range(2, 9), range(1, 13))
    ok = not rep["contradictions"]
    return ok, f"{rep['checked']} cases, {len(rep['mismatches'])} sufficient-only, {len(rep['contradictions'])} contradictions"


def check_halftwist_scalar():
    for r in range(4, 25):
        for root in primitive_roots(r):
            for m in range(1, 13):
                scalar = rho_halftwist_T(m, 3, root).is_scalar()
                if scalar != halftwist_trivial(root, m):
                    return False, f"scalar test disagrees at r={r}, t={root.t}, m={m}"
    return True, "q^m = (-1)^m <=> rho_T(sigma_1^m) scalar"


CHECKS = [
    ("counts", check_counts),
    ("qint", check_qint),
    ("recoupling", check_recoupling),
    ("commutator2", check_commutator2),
    ("M", check_M),
    ("headline", check_headline),
    ("finite-orders", check_finite_orders),
    ("f2-scan", check_f2_scan),
    ("separating-twists", check_twist_conditions),
    ("halftwist-scalar", check_halftwist_scalar),
]


def run_all():
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:  # report, don't crash the suite
            ok, detail = False, f"{type(e).__name__}: {e}"
        results.append({"name": name, "ok": bool(ok), "detail": detail, "seconds": round(time.perf_counter() - t0, 3)})
    return results
