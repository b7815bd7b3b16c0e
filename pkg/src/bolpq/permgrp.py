"""Permutation groups via a deterministic incremental Schreier-Sims chain.

Permutations are tuples of images; ``mul(a, b)`` applies a first, then b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EnumerationLimit, RequiresBruck
from .loopcore import LoopTable, has_aip, is_right_bol

Permutation = tuple

ENUMERATION_LIMIT = 10**6


def identity(n: int) -> Permutation:
    return tuple(range(n))


def mul(a: Permutation, b: Permutation) -> Permutation:
    return tuple(b[x] for x in a)


def inverse(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def is_identity(a: Permutation) -> bool:
    return all(x == i for i, x in enumerate(a))


def perm_power(a: Permutation, k: int) -> Permutation:
    acc, base = identity(len(a)), a
    if k < 0:
        base, k = inverse(a), -k
    while k:
        if k & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        k >>= 1
    return acc


class _Level:
    __slots__ = ("base", "gens", "transversal", "orbit", "done")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}
        self.orbit: list[int] = []
        self.done: set[tuple[int, int]] = set()


class PermGroup:
    """Group generated by ``generators``; the chain is built on first use.

    Base points are chosen in natural order (first point moved by the
    element being added), so everything is reproducible.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: Optional[int] = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        self.degree = degree
        self.generators = [g for g in gens if not is_identity(g)]
        self._levels: Optional[list[_Level]] = None

    # --- chain construction ---------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = []
            for g in self.generators:
                if all(g[lv.base] == lv.base for lv in self._levels):
                    self._new_level(g)
            for g in self.generators:
                self._add_strong(g, self._fixed_depth(g))
            i = len(self._levels) - 1
            while i >= 0:
                j = self._check_level(i)
                i = i - 1 if j is None else j
        return self._levels

    def _fixed_depth(self, g: Permutation) -> int:
        """Number of leading base points fixed by g."""
        for i, lv in enumerate(self._levels):
            if g[lv.base] != lv.base:
                return i
        return len(self._levels)

    def _new_level(self, g: Permutation) -> None:
        base = next(x for x, y in enumerate(g) if x != y)
        lv = _Level(base)
        lv.transversal[base] = identity(self.degree)
        lv.orbit.append(base)
        self._levels.append(lv)

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        levels = self._levels
        for i in range(start, len(levels)):
            lv = levels[i]
            u = lv.transversal.get(g[lv.base])
            if u is None:
                return g, i
            g = mul(g, inverse(u))
        return g, len(levels)

    def _add_strong(self, h: Permutation, depth: int) -> None:
        """h fixes the first ``depth`` base points, so it joins S_0 .. S_depth."""
        if depth == len(self._levels):
            self._new_level(h)
        for lv in self._levels[: depth + 1]:
            lv.gens.append(h)
            # extend the orbit; existing transversal entries never change
            k = 0
            while k < len(lv.orbit):
                beta = lv.orbit[k]
                for s in lv.gens:
                    gamma = s[beta]
                    if gamma not in lv.transversal:
                        lv.transversal[gamma] = mul(lv.transversal[beta], s)
                        lv.orbit.append(gamma)
                k += 1

    def _check_level(self, i: int) -> Optional[int]:
        """Sift the unchecked Schreier generators of level i; on the first
        failure add the residue as a strong generator and return its depth."""
        lv = self._levels[i]
        for beta in list(lv.orbit):
            for si, s in enumerate(list(lv.gens)):
                if (beta, si) in lv.done:
                    continue
                lv.done.add((beta, si))
                schreier = mul(mul(lv.transversal[beta], s), inverse(lv.transversal[s[beta]]))
                if is_identity(schreier):
                    continue
                residue, depth = self._sift(schreier, i + 1)
                if not is_identity(residue):
                    self._add_strong(residue, depth)
                    return depth
        return None

    # --- queries ----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self._chain()]

    def order(self) -> int:
        out = 1
        for lv in self._chain():
            out *= len(lv.orbit)
        return out

    def contains(self, x: Sequence[int]) -> bool:
        self._chain()
        residue, _ = self._sift(tuple(int(v) for v in x))
        return is_identity(residue)

    def stabilizer_generators(self, point: int) -> list[Permutation]:
        """Strong generators fixing ``point``; requires it as first base point."""
        levels = self._chain()
        if not levels:
            return []
        if levels[0].base != point:
            # point fixed by every generator: stabilizer is everything
            if all(g[point] == point for g in self.generators):
                return list(self.generators)
            raise ValueError(f"{point} is not the first base point")
        return list(levels[1].gens) if len(levels) > 1 else []

    def elements_array(self, limit: int = ENUMERATION_LIMIT) -> np.ndarray:
        """All elements as rows of an array, products of transversal elements."""
        size = self.order()
        if size > limit:
            raise EnumerationLimit(f"group of order {size} exceeds the limit {limit}")
        return self._enumerate(np.int32)

    def _enumerate(self, dtype) -> np.ndarray:
        levels = self._chain()
        acc = np.arange(self.degree, dtype=dtype)[None, :]
        for lv in reversed(levels):
            reps = np.array([lv.transversal[b] for b in lv.orbit], dtype=dtype)
            # new element = h * u for h in deeper stabilizer, u a coset rep
            acc = reps[:, acc].transpose(1, 0, 2).reshape(-1, self.degree)
        return acc

    def enumerate_bfs(self, limit: int = ENUMERATION_LIMIT) -> set[Permutation]:
        """Closure of the generators by breadth-first products (independent of the chain)."""
        start = identity(self.degree)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > limit:
                            raise EnumerationLimit(f"more than {limit} elements")
                        nxt.append(y)
            frontier = nxt
        return seen


# --- loop groups -----------------------------------------------------------


def right_section(t: LoopTable) -> list[Permutation]:
    return [tuple(t.table[:, u].tolist()) for u in range(t.n)]


def rmlt(t: LoopTable, *, check_two_generated: bool = True) -> PermGroup:
    """Right multiplication group.

    Starts from R_a, R_b for tables tagged (p, q) and adds a right
    translation only when it is not yet a member.  For right Bol tables the
    seed must already suffice.
    """
    sec = right_section(t)
    seed = [sec[t.p], sec[1]] if t.p and t.q and t.n == t.p * t.q else []
    gens = list(seed)
    G = PermGroup(gens, degree=t.n)
    for s in sec:
        if not G.contains(s):
            gens.append(s)
            G = PermGroup(gens, degree=t.n)
    if seed and check_two_generated and len(gens) > len(seed) and is_right_bol(t):
        raise RuntimeError("R_a and R_b do not generate RMlt")
    return G


def rinn(t: LoopTable, G: Optional[PermGroup] = None) -> PermGroup:
    G = rmlt(t) if G is None else G
    return PermGroup(G.stabilizer_generators(0), degree=t.n)


def _compose_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise composition: apply a then b."""
    return np.take_along_axis(b, a, axis=1)


def _powers(E: np.ndarray, k: int) -> np.ndarray:
    acc = np.broadcast_to(np.arange(E.shape[1], dtype=E.dtype), E.shape).copy()
    base = E
    while k:
        if k & 1:
            acc = _compose_rows(acc, base)
        base = _compose_rows(base, base)
        k >>= 1
    return acc


def _prime_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


@dataclass(frozen=True)
class SylowAudit:
    order: int
    normal: bool
    elementary_abelian: bool

    def to_json(self) -> dict:
        return {"order": self.order, "normal": self.normal, "elementary_abelian": self.elementary_abelian}


def sylow_p_audit(g: PermGroup, p: int) -> SylowAudit:
    """Collect all p-elements; normal iff they form a subgroup."""
    E = g.elements_array()
    pk = _prime_part(g.order(), p)
    ident = np.arange(g.degree, dtype=E.dtype)
    is_p_elt = (_powers(E, pk) == ident).all(axis=1)
    P = E[is_p_elt]
    span = PermGroup([], degree=g.degree)
    span_gens: list[Permutation] = []
    for row in P:
        x = tuple(row.tolist())
        if not span.contains(x):
            span_gens.append(x)
            span = PermGroup(span_gens, degree=g.degree)
    normal = span.order() == len(P)
    exponent_p = bool((_powers(P, p) == ident).all())
    commuting = all(
        mul(x, y) == mul(y, x) for i, x in enumerate(span_gens) for y in span_gens[i + 1 :]
    )
    return SylowAudit(
        order=pk,
        normal=normal,
        elementary_abelian=normal and exponent_p and commuting,
    )


def is_abelian(g: PermGroup) -> bool:
    gens = g.generators
    return all(mul(x, y) == mul(y, x) for i, x in enumerate(gens) for y in gens[i + 1 :])


@dataclass(frozen=True)
class JAudit:
    fixed_eq_rinn: bool
    antifixed_eq_section: bool


def j_extension_audit(t: LoopTable, G: Optional[PermGroup] = None) -> JAudit:
    """Fixed points of conjugation by inversion J on RMlt are RInn;
    anti-fixed points are exactly the right translations."""
    if t.n % 2 == 0 or not (is_right_bol(t) and has_aip(t)):
        raise RequiresBruck("J-extension audit needs a right Bruck loop of odd order")
    G = rmlt(t) if G is None else G
    E = G.elements_array()
    J = t.inverses.astype(E.dtype)
    # phi^J = J^-1 phi J, J an involution: x -> J[phi[J[x]]]
    conj = J[E[:, J]]
    inv = np.empty_like(E)
    np.put_along_axis(inv, E, np.broadcast_to(np.arange(t.n, dtype=E.dtype), E.shape), axis=1)
    fixed = {tuple(r) for r in E[(conj == E).all(axis=1)].tolist()}
    anti = {tuple(r) for r in E[(conj == inv).all(axis=1)].tolist()}
    H = rinn(t, G)
    rinn_elems = {tuple(r) for r in H.elements_array().tolist()}
    section = set(right_section(t))
    return JAudit(fixed == rinn_elems, anti == section)
