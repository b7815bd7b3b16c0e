"""Acceptance criteria, one test each; every test records a PASS/FAIL line
that is printed in the terminal summary."""

import time
from functools import lru_cache

import numpy as np

from bolpq import loopcore as lc
from bolpq.ff import Case, make_context, primes_between
from bolpq.oracle import brute_isomorphic
from bolpq.permgrp import j_extension_audit, rmlt, sylow_p_audit
from bolpq.report import classify, compare_with_oracle, conjecture3p
from bolpq.spectrum import build_gamma_sets, circulant_eigencheck, eigenvalue, theta_from_gamma

PAIRS = [(5, 3), (7, 3), (11, 3), (13, 3), (11, 5), (19, 3), (13, 7), (29, 7)]
EXPECTED = [3, 4, 6, 7, 5, 10, 5, 13]


@lru_cache(maxsize=None)
def report(p, q):
    return classify(p, q)


def nonassociative(p, q):
    return [e for e in report(p, q).loops if not e.group]


def test_class_counts(criterion):
    start = time.perf_counter()
    counts = [classify(p, q).iso_count for p, q in PAIRS]
    elapsed = time.perf_counter() - start
    formula = [(p - q + 4) // 2 for p, q in PAIRS]
    ok = counts == EXPECTED == formula and elapsed < 10
    criterion(1, ok, f"iso counts {counts}, expected {EXPECTED}, {elapsed:.2f}s (< 10s)")


def test_no_divide_case(criterion):
    details, ok = [], True
    for p, q in [(11, 7), (17, 11)]:
        ctx = make_context(p, q)
        loops = classify(p, q).loops
        t = loops[0].table
        cyclic = len(loops) == 1 and lc.is_associative(t) and p * q in set(lc.element_orders(t).tolist())
        ok &= ctx.case is Case.NO_DIVIDE and cyclic
        details.append(f"({p},{q}) {ctx.case.value}, {len(loops)} loop, cyclic={cyclic}")
    criterion(2, ok, "; ".join(details))


def test_bruck_uniqueness(criterion):
    ok, pairs_checked = True, 0
    for p, q in PAIRS:
        ctx = make_context(p, q)
        aip = [e for e in nonassociative(p, q) if lc.has_aip(e.table)]
        ok &= len(aip) == 1 and aip[0].seq.gamma == ctx.elem(ctx.half)
        if p * q <= 63:
            tables = [e.table for e in report(p, q).loops]
            for i, a in enumerate(tables):
                for b in tables[i + 1 :]:
                    pairs_checked += 1
                    ok &= not brute_isomorphic(a, b)
    criterion(3, ok, f"one AIP class at gamma=1/2 in all {len(PAIRS)} cases; {pairs_checked} pairs non-isomorphic")


def test_oracle_equivalence(criterion):
    start = time.perf_counter()
    results = {pq: compare_with_oracle(*pq) for pq in [(5, 3), (7, 3)]}
    elapsed = time.perf_counter() - start
    ok = all(r.agree for r in results.values()) and elapsed < 60
    detail = ", ".join(
        f"{pq}: {len(r.oracle_classes)}={len(r.constructed)} linear_only={r.linear_only}"
        for pq, r in results.items()
    )
    criterion(4, ok, f"{detail}, {elapsed:.2f}s (< 60s)")


def test_structure_audit(criterion):
    ok, seen = True, 0
    for p, q in PAIRS:
        for e in nonassociative(p, q):
            t = e.table
            seen += 1
            left, middle, right = lc.nuclei(t)
            subs = lc.subloops_of_order(t, p)
            order = rmlt(t).order()
            ok &= (
                len(left) == p
                and subs == [left]
                and lc.is_normal_subloop(t, left)
                and middle == right == frozenset({0})
                and order in (p * p * q, p**3 * q)
            )
    criterion(5, ok, f"{seen} nonassociative loops: left nucleus = unique normal order-p subloop, RMlt in {{p^2q, p^3q}}")


def test_bruck_rmlt(criterion):
    ok, details = True, []
    for p, q in [(5, 3), (7, 3), (11, 3), (11, 5), (13, 7)]:
        ctx = make_context(p, q)
        t = lc.build_bol_loop(ctx, theta_from_gamma(ctx, ctx.elem(ctx.half)))
        G = rmlt(t)
        syl = sylow_p_audit(G, p)
        ok &= G.order() == p * p * q <= 10**6 and syl.normal and syl.elementary_abelian and syl.order == p * p
        details.append(f"{G.order()}")
    criterion(6, ok, f"|RMlt(B)| = {', '.join(details)}; Sylow p normal elementary abelian")


def test_conjecture_sweep(criterion):
    start = time.perf_counter()
    rows = conjecture3p(1000)
    elapsed = time.perf_counter() - start
    bad = [r.p for r in rows if not r.match]
    ok = not bad and len(rows) == len(primes_between(3, 1000)) and elapsed < 300
    criterion(7, ok, f"{len(rows)} primes 3 < p < 1000, mismatches {bad}, {elapsed:.1f}s (< 300s)")


def test_identity_suites(criterion):
    rng = np.random.default_rng(0)
    ok, n_tables, n_bruck = True, 0, 0
    for p, q in PAIRS:
        for e in report(p, q).loops:
            t = e.table
            n_tables += 1
            ok &= lc.is_right_bol(t) and lc.check_left_division_identity(t)
            ok &= lc.factorizations_distinct(t, p, 1)
            for u, v in rng.integers(0, t.n, size=(12, 2)):
                ok &= all(lc.t_power_law_holds(t, int(u), int(v), k) for k in range(6))
            if e.bruck and not e.group:
                n_bruck += 1
                j = j_extension_audit(t)
                ok &= j.fixed_eq_rinn and j.antifixed_eq_section
    criterion(8, ok, f"{n_tables} tables: Bol, left division, T power law, factorizations; J audits on {n_bruck} Bruck loops")


def test_eigen_checks(criterion):
    ok, n = True, 0
    for p, q in PAIRS:
        ctx = make_context(p, q)
        for g in build_gamma_sets(ctx).gamma_canonical:
            s = theta_from_gamma(ctx, g)
            n += 1
            ok &= circulant_eigencheck(ctx, s) and s.lam == eigenvalue(ctx, 1).u
        ok &= all(eigenvalue(ctx, i).is_base() for i in range(q))
    criterion(9, ok, f"A u = lambda_1 u for {n} gamma values; all lambda_i in the base field")


def test_associated_bruck_closure(criterion):
    ok, n = True, 0
    for p, q in PAIRS:
        if p * q > 39:
            continue
        ctx = make_context(p, q)
        bruck = lc.build_bol_loop(ctx, theta_from_gamma(ctx, ctx.elem(ctx.half)))
        for e in nonassociative(p, q):
            if e.bruck:
                continue
            n += 1
            c = lc.associated_bruck(e.table)
            ok &= lc.is_right_bol(c) and lc.has_aip(c) and not lc.is_associative(c)
            ok &= brute_isomorphic(c, bruck)
    criterion(10, ok and n > 0, f"{n} non-Bruck loops of order <= 39 map onto B_(p,q)")
