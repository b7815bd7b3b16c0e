"""Command-line interface: ``bolpq construct|classify|conjecture3p|oracle``.

Exit codes: 0 ok, 1 invalid input, 2 q does not divide p^2-1,
3 bad gamma, 4 audit failure or mismatch, 5 enumeration limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import formats
from .errors import BadGamma, EnumerationLimit, InvalidPrimes, NoRootOfUnity, NotRealSolution
from .ff import make_context
from .loopcore import build_bol_loop
from .spectrum import all_ones_seq, build_gamma_sets, gamma_from_label, gamma_label, theta_from_gamma

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_DIVIDE = 2
EXIT_BAD_GAMMA = 3
EXIT_AUDIT = 4
EXIT_LIMIT = 5


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    ctx = make_context(args.p, args.q)
    if args.cyclic:
        seq = all_ones_seq(ctx)
    else:
        ctx.require_root()
        if args.gamma_index is not None:
            canon = build_gamma_sets(ctx).gamma_canonical
            if not 0 <= args.gamma_index < len(canon):
                raise BadGamma(f"gamma index {args.gamma_index} outside 0..{len(canon) - 1}")
            gamma = canon[args.gamma_index]
        elif args.gamma_m is not None:
            gamma = gamma_from_label(ctx, args.gamma_m, m_form=True)
        else:
            gamma = gamma_from_label(ctx, args.gamma, m_form=False)
        seq = theta_from_gamma(ctx, gamma)
    table = build_bol_loop(ctx, seq)
    meta = {
        "case": ctx.case.value,
        "t": ctx.t,
        "omega": None if ctx.omega is None else ctx.omega.to_json(),
        "gamma_label": None if seq.gamma is None else gamma_label(ctx, seq.gamma),
        "sequence": seq.to_json(),
    }
    if args.format == "json":
        _emit(formats.to_json(table, **meta), args.out)
    else:
        _emit(formats.WRITERS[args.format](table), args.out)
        meta_doc = json.dumps({"schema": formats.SCHEMA, "n": table.n, "p": ctx.p, "q": ctx.q, **meta}) + "\n"
        if args.out:
            Path(str(args.out) + ".meta.json").write_text(meta_doc, encoding="utf-8", newline="\n")
        else:
            sys.stderr.write(meta_doc)
    if args.figure:
        from .plotting import cayley_heatmap

        cayley_heatmap(table, args.figure, title=f"p={ctx.p}, q={ctx.q}")
    return EXIT_OK


def cmd_classify(args) -> int:
    from .report import classify

    report = classify(args.p, args.q, isotopy=args.isotopy, audit=args.audit)
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_json(), indent=1) + "\n")
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["gamma_label", "gamma_u", "gamma_v", "theta", "bruck", "group", "rmlt_order"])
        for e in report.loops:
            g = e.seq.gamma
            w.writerow([
                "" if e.label is None else e.label,
                "" if g is None else g.u,
                "" if g is None else g.v,
                " ".join(map(str, e.seq.theta)),
                int(e.bruck),
                int(e.group),
                "" if e.rmlt_order is None else e.rmlt_order,
            ])
        sys.stdout.write(f"# iso_count={report.iso_count}")
        if report.isotopy_count is not None:
            sys.stdout.write(f" isotopy_count={report.isotopy_count}")
        sys.stdout.write("\n")
    if args.figures:
        from .plotting import cayley_heatmap, class_summary

        d = Path(args.figures)
        for k, e in enumerate(report.loops):
            name = "cyclic" if e.seq.gamma is None else f"gamma{e.label}"
            cayley_heatmap(e.table, d / f"loop_{args.p}_{args.q}_{k:02d}_{name}.png", title=name)
        if args.audit:
            class_summary(report, d / f"rmlt_{args.p}_{args.q}.png")
    if args.audit and not report.audits_passed:
        failed = ", ".join(k for k, v in report.audits.items() if not v)
        print(f"audit failed: {failed}", file=sys.stderr)
        return EXIT_AUDIT
    return EXIT_OK


def cmd_conjecture3p(args) -> int:
    from .report import conjecture3p

    if args.pmax < 5:
        raise InvalidPrimes("pmax must be at least 5")
    rows = conjecture3p(args.pmax)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["p", "isotopy_count", "predicted", "match"])
    for r in rows:
        w.writerow([r.p, r.isotopy_count, r.predicted, int(r.match)])
    bad = [r for r in rows if not r.match]
    for r in bad:
        print(f"MISMATCH p={r.p}: {r.isotopy_count} classes, predicted {r.predicted}", file=sys.stderr)
    print(f"# {len(rows)} primes, {len(bad)} mismatches", file=sys.stderr)
    if args.figures:
        from .plotting import conjecture_sweep

        conjecture_sweep(rows, Path(args.figures) / f"conjecture3p_{args.pmax}.png")
    return EXIT_AUDIT if bad else EXIT_OK


def cmd_oracle(args) -> int:
    from .report import compare_with_oracle

    cmp = compare_with_oracle(args.p, args.q)
    sys.stdout.write(json.dumps(cmp.to_json()) + "\n")
    print(
        f"oracle {len(cmp.oracle_classes)} = constructed {len(cmp.constructed)}: "
        f"{'matched' if cmp.agree else 'MISMATCH'}",
        file=sys.stderr,
    )
    return EXIT_OK if cmp.agree else EXIT_AUDIT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bolpq", description="Right Bol loops of order pq.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pq(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("construct", help="build one loop and export its Cayley table")
    pq(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--gamma", type=int, help="base-field gamma (q | p-1)")
    g.add_argument("--gamma-m", type=int, help="m in gamma = 1/2 + m sqrt(t) (q | p+1)")
    g.add_argument("--gamma-index", type=int, help="0-based index into the canonical gamma list")
    g.add_argument("--cyclic", action="store_true", help="the all-ones sequence (cyclic group)")
    sp.add_argument("--format", choices=sorted(formats.WRITERS), default="json")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.add_argument("--figure", help="also write a Cayley table heatmap here")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("classify", help="all loops of order pq up to isomorphism")
    pq(sp)
    sp.add_argument("--isotopy", action="store_true", help="also count isotopy classes")
    sp.add_argument("--audit", action="store_true", help="run the structural audits")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--figures", help="directory for Cayley heatmaps and the RMlt chart")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("conjecture3p", help="isotopy counts for order 3p against floor((p+5)/6)+1")
    sp.add_argument("--pmax", type=int, default=1000)
    sp.add_argument("--figures", help="directory for the sweep plot")
    sp.set_defaults(func=cmd_conjecture3p)

    sp = sub.add_parser("oracle", help="brute-force classification compared with the construction")
    pq(sp)
    sp.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidPrimes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NoRootOfUnity:
        print(f"error: {args.q} does not divide {args.p}^2 - 1: only the cyclic group exists", file=sys.stderr)
        return EXIT_NO_DIVIDE
    except (BadGamma, NotRealSolution) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GAMMA
    except EnumerationLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
