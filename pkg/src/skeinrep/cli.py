"""Command-line front end.

Exit status: 0 on success, 2 on invalid arguments, 1 on an internal
inconsistency (closed form vs product mismatch, failed self-check or
failed certificate re-verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .certify import (
    SCHEMA_VERSION,
    OrderCertificate,
    certify_power_subgroup,
    finite_order_check,
    infinite_order_certificate,
    scan_f2,
    verify_certificate,
)
from .coloring import count_profile
from .cyclo import RootChoice, primitive_roots
from .hyperelliptic import (
    build_table,
    certify_Nkl,
    delta_scalar_set,
    verify_twist_conditions,
    render_table,
    table_to_json,
)
from .rep import FormulaMismatch, element_name, parse_element, represent


class UsageError(ValueError):
    pass


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "json":
        if isinstance(obj, dict):
            obj = {"schema_version": SCHEMA_VERSION, **obj}
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(text if text is not None else obj)


def _root(r: int, t: int | None) -> RootChoice:
    return RootChoice(r, 1 if t is None else t)


def _roots(r: int, t: int | None) -> list[RootChoice]:
    return [RootChoice(r, t)] if t is not None else primitive_roots(r)


def _n_from(args) -> int:
    if args.n is not None and args.punctures is not None and 2 * args.n != args.punctures:
        raise UsageError("--n and --punctures disagree (punctures = 2n)")
    if args.n is not None:
        return args.n
    if args.punctures is None:
        raise UsageError("give --n or --punctures")
    if args.punctures % 2:
        raise UsageError("--punctures must be even")
    return args.punctures // 2


def cmd_counts(args):
    prof = count_profile(args.n, args.r)
    data = prof.to_json()
    lines = [f"n={prof.n} r={prof.r} dim={prof.total} k={prof.k} k'={prof.k_prime}"]
    for basis in ("T", "Y"):
        cells = " ".join(f"{c}:{v}" for c, v in prof.cell_sizes(basis).items())
        lines.append(f"{basis}: {cells}")
    _emit(data, args.format, "\n".join(lines))
    return 0


def cmd_matrix(args):
    elem = parse_element(args.element)
    root = _root(args.r, args.t)
    M = represent(elem, args.n, root)
    data = {"element": element_name(elem), "n": args.n, "r": root.r, "t": root.t, "matrix": M.to_json(root)}
    _emit(data, args.format, f"{element_name(elem)} at n={args.n}, {root}\n{M.render(root)}")
    return 0


def cmd_certify(args):
    n = _n_from(args)
    if args.power is not None:
        if args.rmax is None:
            raise UsageError("--power needs --rmax")
        certs = certify_power_subgroup(2 * n, args.power, args.rmax, jobs=args.jobs)
        data = {"punctures": 2 * n, "power": args.power, "rmax": args.rmax,
                "certificates": [c.to_json() for c in certs]}
        text = "\n".join(
            f"r={c.r:<3} t={c.t:<3} {c.element:<18} witness={c.witness_groups}" for c in certs
        ) or "no certificate found"
        _emit(data, args.format, text)
        return 0
    if args.r is None:
        raise UsageError("give --power with --rmax, or --r (and optionally --t)")
    elem = parse_element(args.element)
    out = []
    for root in _roots(args.r, args.t):
        M = represent(elem, n, root)
        cert = infinite_order_certificate(M, root, element_name(elem), n)
        if cert.kind != "InfiniteOrder":
            fin = finite_order_check(M, root, args.max_power, element_name(elem))
            if fin.kind == "FiniteOrder":
                fin.n = n
                cert = fin
        out.append(cert.to_json())
    text = "\n".join(f"r={c['r']} t={c['t']} {c['kind']}" for c in out)
    _emit({"certificates": out}, args.format, text)
    return 0


def cmd_scan_f2(args):
    rep = scan_f2(range(args.rmin, args.rmax + 1))
    data = {
        "results": [
            {"r": r, "positive": v["positive"], "witness_t": v["witness_t"]} for r, v in rep.items()
        ]
    }
    text = "\n".join(f"r={r:<3} {'f_2 > 2 at t=' + str(v['witness_t']) if v['positive'] else 'none'}" for r, v in rep.items())
    _emit(data, args.format, text)
    return 0


def cmd_hyper(args):
    if args.conditions:
        rep = verify_twist_conditions(range(4, args.rmax + 1), range(2, args.gmax + 1), range(1, args.mmax + 1))
        text = (
            f"checked {rep['checked']}, agree {rep['agree']}, "
            f"mismatches {len(rep['mismatches'])}, contradictions {len(rep['contradictions'])}"
        )
        for row in rep["mismatches"]:
            text += (
                f"\n  r={row['r']} g={row['g']} h={row['h']} m={row['m']} case ({row['case']}): "
                f"stated {row['stated']}, direct {row['direct']} -> {row['status']}"
            )
        _emit(rep, args.format, text)
        return 0 if not rep["contradictions"] else 1
    if args.k is not None or args.l is not None:
        if None in (args.g, args.k, args.l, args.rmax):
            raise UsageError("--k/--l need --g, --k, --l and --rmax")
        found = certify_Nkl(args.g, args.k, args.l, args.rmax)
        text = "\n".join(f"r={f['r']} t={f['t']}" for f in found) or "no certificate found"
        _emit({"g": args.g, "k": args.k, "l": args.l, "results": found}, args.format, text)
        return 0
    if None in (args.g, args.h, args.m, args.r):
        raise UsageError("give --g --h --m --r, or --conditions, or --g --k --l --rmax")
    out = [delta_scalar_set(args.g, args.h, args.m, root).to_json() for root in _roots(args.r, args.t)]
    text = "\n".join(
        f"r={s['r']} t={s['t']} trivial={s['trivial']} a-values={list(s['scalars'])}" for s in out
    )
    _emit({"scalar_sets": out}, args.format, text)
    return 0


def cmd_table(args):
    table = build_table(args.gmax, args.mmax, jobs=args.jobs)
    _emit({"cells": table_to_json(table)}, args.format, render_table(table))
    return 0


def cmd_selfcheck(args):
    from .selfcheck import run_all

    results = run_all()
    ok = all(r["ok"] for r in results)
    text = "\n".join(f"{'PASS' if r['ok'] else 'FAIL'} {r['name']:<18} {r['detail']} ({r['seconds']}s)" for r in results)
    _emit({"ok": ok, "checks": results}, args.format, text)
    return 0 if ok else 1


def cmd_verify(args):
    with open(args.file) as fh:
        data = json.load(fh)
    certs = data.get("certificates", [data]) if isinstance(data, dict) else data
    results = []
    for c in certs:
        c = c.get("certificate", c)
        results.append({"r": c["r"], "t": c["t"], "kind": c["kind"], "verified": verify_certificate(c)})
    ok = bool(results) and all(r["verified"] for r in results)
    text = "\n".join(f"r={r['r']} t={r['t']} {r['kind']}: {'ok' if r['verified'] else 'FAILED'}" for r in results)
    _emit({"ok": ok, "results": results}, args.format, text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skeinrep", description="Skein representations of M(0,2n) at roots of unity.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="ascii"):
        sp.add_argument("--format", choices=("json", "ascii"), default=fmt)
        return sp

    sp = common(sub.add_parser("counts", help="basis counts"), "json")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=cmd_counts)

    sp = common(sub.add_parser("matrix", help="representation matrix of an element"), "json")
    sp.add_argument("--element", required=True, help="e.g. CommutatorM, Commutator2(2), SigmaN(1)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--t", type=int)
    sp.set_defaults(func=cmd_matrix)

    sp = common(sub.add_parser("certify", help="order certificates"), "json")
    sp.add_argument("--punctures", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--power", type=int)
    sp.add_argument("--rmax", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--element", default="CommutatorM")
    sp.add_argument("--max-power", type=int, default=64)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_certify)

    sp = common(sub.add_parser("scan-f2", help="roots with f_2(q) > 2"))
    sp.add_argument("--rmin", type=int, default=5)
    sp.add_argument("--rmax", type=int, default=50)
    sp.set_defaults(func=cmd_scan_f2)

    sp = common(sub.add_parser("hyper", help="separating twist scalars"))
    for name in ("g", "h", "m", "r", "t", "k", "l"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--conditions", action="store_true", help="compare the stated conditions with direct tests")
    sp.add_argument("--rmax", type=int, default=12)
    sp.add_argument("--gmax", type=int, default=8)
    sp.add_argument("--mmax", type=int, default=12)
    sp.set_defaults(func=cmd_hyper)

    sp = common(sub.add_parser("table", help="finite/infinite index table"))
    sp.add_argument("--gmax", type=int, default=22)
    sp.add_argument("--mmax", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_table)

    sp = common(sub.add_parser("selfcheck", help="run the invariant suite"))
    sp.set_defaults(func=cmd_selfcheck)

    sp = common(sub.add_parser("verify", help="re-verify certificates from a JSON file"))
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except FormulaMismatch as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return 1
    except (ValueError, NotImplementedError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
