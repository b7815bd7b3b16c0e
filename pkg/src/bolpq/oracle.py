"""Brute-force ground truth at tiny orders.

Enumerates every ensemble of complete mappings of Z_p that could define a
loop of order pq, keeps those whose loop is right Bol, and sorts the
survivors into isomorphism classes by exhaustive generator-image search.
Nothing here uses roots of unity, the recurrence, or the closed-form
multiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import EnumerationLimit, IncompatibleOrders
from .loopcore import LoopTable, element_orders, is_right_bol, linear_scalar

MAX_COMPLETE_P = 13
MAX_ORACLE_P = 7
MAX_ISO_ORDER = 63


def complete_mappings_fixing_zero(p: int) -> list[tuple[int, ...]]:
    """All permutations f of Z_p with f(0) = 0 and x -> x + f(x) bijective.

    Exhaustive depth-first search over images of 1..p-1, in lexicographic order.
    """
    if p > MAX_COMPLETE_P:
        raise EnumerationLimit(f"p={p} exceeds {MAX_COMPLETE_P}")
    found = []
    images = [0] * p
    used = [False] * p
    sums = [False] * p
    used[0] = sums[0] = True

    def extend(x: int) -> None:
        if x == p:
            found.append(tuple(images))
            return
        for y in range(1, p):
            s = (x + y) % p
            if not used[y] and not sums[s]:
                used[y] = sums[s] = True
                images[x] = y
                extend(x + 1)
                used[y] = sums[s] = False

    extend(1)
    return found


def _is_complete(f: Sequence[int], p: int) -> bool:
    return len({(x + f[x]) % p for x in range(p)}) == p


def _table_from_ensemble(p: int, q: int, thetas: Sequence[Sequence[int]]) -> np.ndarray:
    """(i,j)(k,l) = (i+k, m + theta_{i+k}(theta_i^-1(j+m))) with m + theta_k(m) = l."""
    inv = []
    for f in thetas:
        g = [0] * p
        for x, y in enumerate(f):
            g[y] = x
        inv.append(g)
    solve_m = []
    for f in thetas:
        row = [0] * p
        for m in range(p):
            row[(m + f[m]) % p] = m
        solve_m.append(row)
    n = p * q
    out = np.empty((n, n), dtype=np.intp)
    for i, j, k, l in itertools.product(range(q), range(p), range(q), range(p)):
        m = solve_m[k][l]
        ik = (i + k) % q
        out[i * p + j, k * p + l] = ik * p + (m + thetas[ik][inv[i][(j + m) % p]]) % p
    return out


@dataclass
class OracleRun:
    p: int
    q: int
    complete_mappings: list
    candidates: int
    ensembles: list = field(default_factory=list)
    tables: list = field(default_factory=list)

    @property
    def linear_only(self) -> bool:
        return all(linear_scalar(f, self.p) is not None for th in self.ensembles for f in th)

    @property
    def n_nonlinear_mappings(self) -> int:
        return sum(linear_scalar(f, self.p) is None for f in self.complete_mappings)


def run_bruteforce(p: int, q: int) -> OracleRun:
    if q != 3 or p > MAX_ORACLE_P or p <= q:
        raise EnumerationLimit(f"oracle covers q = 3 < p <= {MAX_ORACLE_P}; got ({p}, {q})")
    maps = complete_mappings_fixing_zero(p)
    ident = tuple(range(p))
    run = OracleRun(p, q, maps, candidates=0)
    seen = set()
    for rest in itertools.product(maps, repeat=q - 1):
        thetas = (ident, *rest)
        inv = [[0] * p for _ in thetas]
        for g, f in zip(inv, thetas):
            for x, y in enumerate(f):
                g[y] = x
        if not all(
            _is_complete([thetas[j][inv[i][x]] for x in range(p)], p)
            for i in range(q)
            for j in range(q)
        ):
            continue
        run.candidates += 1
        t = LoopTable(_table_from_ensemble(p, q, thetas), p=p, q=q)
        if not is_right_bol(t):
            continue
        run.ensembles.append(thetas)
        key = t.table.tobytes()
        if key not in seen:
            seen.add(key)
            run.tables.append(t)
    run.tables.sort(key=LoopTable.sort_key)
    return run


def enumerate_bol_bruteforce(p: int, q: int) -> list[LoopTable]:
    return run_bruteforce(p, q).tables


def _generators(t: LoopTable) -> list[int]:
    """A small generating set: greedily add the least element of largest order outside."""
    orders = element_orders(t)
    T = t.table
    gens: list[int] = []
    reached = {0}
    while len(reached) < t.n:
        x = max((e for e in range(t.n) if e not in reached), key=lambda e: (orders[e], -e))
        gens.append(x)
        reached = _closure(T, reached | {x})
    return gens


def _closure(T: np.ndarray, S: set) -> set:
    S = set(S)
    while True:
        idx = np.fromiter(S, dtype=np.intp)
        new = set(T[np.ix_(idx, idx)].ravel().tolist()) - S
        if not new:
            return S
        S |= new


def _derivation(T: np.ndarray, gens: list[int]) -> list[tuple[int, int, int]]:
    """Steps (z, x, y) with z = x*y, reaching every element from 1 and gens."""
    known = [0, *gens]
    have = set(known)
    steps = []
    k = 0
    while k < len(known):
        x = known[k]
        for y in list(known[: k + 1]):
            for z, a, b in ((int(T[x, y]), x, y), (int(T[y, x]), y, x)):
                if z not in have:
                    have.add(z)
                    known.append(z)
                    steps.append((z, a, b))
        k += 1
    return steps


def find_isomorphism(t1: LoopTable, t2: LoopTable) -> Optional[np.ndarray]:
    """An isomorphism t1 -> t2 as an image array, or None."""
    if t1.n != t2.n:
        raise IncompatibleOrders(f"orders {t1.n} and {t2.n} differ")
    if t1.n > MAX_ISO_ORDER:
        raise EnumerationLimit(f"order {t1.n} exceeds {MAX_ISO_ORDER}")
    T1, T2 = t1.table, t2.table
    o1, o2 = element_orders(t1), element_orders(t2)
    if sorted(o1.tolist()) != sorted(o2.tolist()):
        return None
    gens = _generators(t1)
    steps = _derivation(T1, gens)
    pools = [np.flatnonzero(o2 == o1[g]).tolist() for g in gens]
    f = np.zeros(t1.n, dtype=np.intp)
    for images in itertools.product(*pools):
        if len(set(images)) < len(images):
            continue
        f[:] = -1
        f[0] = 0
        f[gens] = images
        for z, a, b in steps:
            f[z] = T2[f[a], f[b]]
        if len(np.unique(f)) != t1.n:
            continue
        if np.array_equal(f[T1], T2[f[:, None], f[None, :]]):
            return f.copy()
    return None


def brute_isomorphic(t1: LoopTable, t2: LoopTable) -> bool:
    return find_isomorphism(t1, t2) is not None


def classify_up_to_iso(tables: Sequence[LoopTable]) -> list[LoopTable]:
    """Greedy partition; each class is represented by its lexicographically least table."""
    classes: list[list[LoopTable]] = []
    for t in tables:
        for cls in classes:
            if brute_isomorphic(cls[0], t):
                cls.append(t)
                break
        else:
            classes.append([t])
    return sorted((min(cls, key=LoopTable.sort_key) for cls in classes), key=LoopTable.sort_key)
