"""Classification reports, structural audits and the q = 3 isotopy sweep."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import loopcore as lc
from .ff import Case, FieldCtx, make_context, primes_between
from .oracle import brute_isomorphic, run_bruteforce, classify_up_to_iso
from .permgrp import j_extension_audit, rinn, rmlt, sylow_p_audit
from .spectrum import (
    SolutionSeq,
    count_isotopy_classes,
    enumerate_periodic_solutions,
    gamma_label,
    is_bruck_seq,
    partition,
    representatives,
    seq_isomorphic,
)

SCHEMA = 1


@dataclass
class LoopEntry:
    seq: SolutionSeq
    table: lc.LoopTable
    label: Optional[int]
    bruck: bool
    group: bool
    rmlt_order: Optional[int] = None
    nuclei_sizes: Optional[tuple[int, int, int]] = None

    def to_json(self) -> dict:
        return {
            "gamma": None if self.seq.gamma is None else self.seq.gamma.to_json(),
            "gamma_label": self.label,
            "sequence": self.seq.to_json(),
            "bruck": self.bruck,
            "group": self.group,
            "rmlt_order": self.rmlt_order,
            "nuclei_sizes": None if self.nuclei_sizes is None else list(self.nuclei_sizes),
        }


@dataclass
class ClassificationReport:
    ctx: FieldCtx
    loops: list[LoopEntry]
    iso_count: int
    isotopy_count: Optional[int] = None
    audits: dict[str, bool] = field(default_factory=dict)

    @property
    def predicted_iso_count(self) -> int:
        p, q = self.ctx.p, self.ctx.q
        return (p - q + 4) // 2 if self.ctx.divides else 1

    @property
    def audits_passed(self) -> bool:
        return all(self.audits.values())

    def to_json(self) -> dict:
        c = self.ctx
        return {
            "schema": SCHEMA,
            "p": c.p,
            "q": c.q,
            "case": c.case.value,
            "t": c.t,
            "omega": None if c.omega is None else c.omega.to_json(),
            "gamma_list": [e.to_json() for e in self.loops],
            "iso_count": self.iso_count,
            "predicted_iso_count": self.predicted_iso_count,
            "isotopy_count": self.isotopy_count,
            "audits": self.audits,
            "audits_passed": self.audits_passed,
        }


def _entry(ctx: FieldCtx, seq: SolutionSeq) -> LoopEntry:
    table = lc.build_bol_loop(ctx, seq)
    label = None if seq.gamma is None else gamma_label(ctx, seq.gamma)
    return LoopEntry(seq, table, label, is_bruck_seq(seq), lc.is_associative(table))


def classify(p: int, q: int, *, isotopy: bool = False, audit: bool = False) -> ClassificationReport:
    ctx = make_context(p, q)
    reps = representatives(ctx)
    entries = [_entry(ctx, s) for s in reps]
    iso_count = len(partition(reps, lambda a, b: seq_isomorphic(a, b) is not None))
    report = ClassificationReport(ctx, entries, iso_count)
    if isotopy:
        report.isotopy_count = count_isotopy_classes(reps)
    if audit:
        run_audits(report)
    return report


def run_audits(report: ClassificationReport) -> None:
    ctx, entries = report.ctx, report.loops
    p, q, n = ctx.p, ctx.q, ctx.p * ctx.q
    a = dict()
    a["iso_count_formula"] = report.iso_count == report.predicted_iso_count

    # every periodic solution of the recurrence is ~ to exactly one representative
    sols = enumerate_periodic_solutions(p, q)
    reps = [e.seq for e in entries]
    a["representatives_transversal"] = all(
        sum(seq_isomorphic(s, r) is not None for r in reps) == 1 for s in sols
    )

    nonassoc = [e for e in entries if not e.group]
    bruck = [e for e in nonassoc if e.bruck]
    a["single_nonassociative_bruck"] = len(bruck) == (1 if ctx.divides else 0)
    if ctx.divides:
        a["bruck_is_gamma_half"] = bool(bruck) and bruck[0].seq.gamma == ctx.elem(ctx.half)
    if ctx.case is Case.Q_DIVIDES_P_MINUS_1:
        a["gamma_one_is_group"] = any(e.group and e.label == 1 for e in entries)
    groups = [e for e in entries if e.group]
    a["group_count"] = len(groups) == (2 if ctx.case is Case.Q_DIVIDES_P_MINUS_1 else 1)

    checks = {
        "loop": [],
        "right_bol": [],
        "left_division": [],
        "factorizations": [],
        "theta_roundtrip": [],
        "bruck_flag_matches_aip": [],
        "t_power_law": [],
    }
    structure = {k: [] for k in ("left_nucleus", "trivial_right_middle", "order_p_subloop", "rmlt_order", "rinn_index", "sylow_p_normal")}
    bruck_checks = {k: [] for k in ("bruck_rmlt_p2q", "bruck_sylow_elementary", "j_fixed_rinn", "j_antifixed_section")}

    for e in entries:
        t = e.table
        checks["loop"].append(lc.is_loop(t))
        checks["right_bol"].append(lc.is_right_bol(t))
        checks["left_division"].append(lc.check_left_division_identity(t))
        checks["factorizations"].append(lc.factorizations_distinct(t, p, 1))
        extracted = lc.extract_theta(t)
        checks["theta_roundtrip"].append(
            [lc.linear_scalar(f, p) for f in extracted] == list(e.seq.theta)
        )
        checks["bruck_flag_matches_aip"].append(lc.has_aip(t) == e.bruck)
        checks["t_power_law"].append(
            all(lc.t_power_law_holds(t, u, v, k) for u in (p, p + 1) for v in (1, p) for k in range(6))
        )

        G = rmlt(t)
        e.rmlt_order = G.order()
        nl, nm, nr = lc.nuclei(t)
        e.nuclei_sizes = (len(nl), len(nm), len(nr))
        structure["rinn_index"].append(rinn(t, G).order() * n == e.rmlt_order)
        if e.group:
            continue
        subs = lc.subloops_of_order(t, p)
        structure["left_nucleus"].append(len(nl) == p)
        structure["trivial_right_middle"].append(len(nm) == 1 and len(nr) == 1)
        structure["order_p_subloop"].append(
            len(subs) == 1 and subs[0] == nl and lc.is_normal_subloop(t, subs[0])
        )
        structure["rmlt_order"].append(e.rmlt_order in (p * p * q, p**3 * q))
        syl = sylow_p_audit(G, p)
        structure["sylow_p_normal"].append(syl.normal)
        if e.bruck:
            bruck_checks["bruck_rmlt_p2q"].append(e.rmlt_order == p * p * q)
            bruck_checks["bruck_sylow_elementary"].append(syl.normal and syl.elementary_abelian and syl.order == p * p)
            j = j_extension_audit(t, G)
            bruck_checks["j_fixed_rinn"].append(j.fixed_eq_rinn)
            bruck_checks["j_antifixed_section"].append(j.antifixed_eq_section)

    for group in (checks, structure, bruck_checks):
        for name, results in group.items():
            if results:
                a[name] = all(results)
    report.audits = a


@dataclass(frozen=True)
class SweepRow:
    p: int
    isotopy_count: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.isotopy_count == self.predicted


def conjecture3p(pmax: int) -> list[SweepRow]:
    """Isotopy-class counts for order 3p, each prime 3 < p < pmax."""
    rows = []
    for p in primes_between(3, pmax):
        ctx = make_context(p, 3)
        count = count_isotopy_classes(representatives(ctx))
        rows.append(SweepRow(p, count, (p + 5) // 6 + 1))
    return rows


@dataclass
class OracleComparison:
    p: int
    q: int
    oracle_classes: list
    constructed: list
    matching: list  # oracle class index -> constructed indices it is isomorphic to
    linear_only: bool
    n_complete_mappings: int
    n_nonlinear_mappings: int
    n_raw_tables: int

    @property
    def agree(self) -> bool:
        hits = sorted(m[0] for m in self.matching if len(m) == 1)
        return (
            len(self.oracle_classes) == len(self.constructed)
            and all(len(m) == 1 for m in self.matching)
            and hits == list(range(len(self.constructed)))
            and self.linear_only
        )

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "p": self.p,
            "q": self.q,
            "raw_tables": self.n_raw_tables,
            "classes": len(self.oracle_classes),
            "constructed_classes": len(self.constructed),
            "matching": self.matching,
            "linear_only": self.linear_only,
            "counts": {
                "complete_mappings_fixing_zero": self.n_complete_mappings,
                "nonlinear_complete_mappings": self.n_nonlinear_mappings,
            },
            "agree": self.agree,
        }


def compare_with_oracle(p: int, q: int) -> OracleComparison:
    run = run_bruteforce(p, q)
    oracle_reps = classify_up_to_iso(run.tables)
    ctx = make_context(p, q)
    constructed = [lc.build_bol_loop(ctx, s) for s in representatives(ctx)]
    matching = [
        [j for j, c in enumerate(constructed) if brute_isomorphic(o, c)] for o in oracle_reps
    ]
    return OracleComparison(
        p, q, oracle_reps, constructed, matching, run.linear_only,
        len(run.complete_mappings), run.n_nonlinear_mappings, len(run.tables),
    )
