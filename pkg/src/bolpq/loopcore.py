"""Loops as Cayley tables, and the identity/structure checks run on them.

Elements of a loop of order n are 0..n-1 and ``table[x, y]`` is the product
x*y.  Loops built on Z_q x Z_p use the encoding (i, j) -> i*p + j, so the
identity is 0, a = (1, 0) is element p and b = (0, 1) is element 1.

Maps act on the right, as in ``v R_u = v*u``.  A permutation is an integer
array ``perm`` with ``perm[x]`` the image of x.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidTheta,
    NotBolStructure,
    NotCompleteMapping,
    NotUniquelyTwoDivisible,
)
from .ff import FieldCtx, inv_mod
from .spectrum import SolutionSeq


class LoopTable:
    """An immutable n x n Cayley table, optionally tagged with (p, q)."""

    def __init__(self, table, p: Optional[int] = None, q: Optional[int] = None):
        arr = np.array(table, dtype=np.intp)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("Cayley table must be square")
        arr.setflags(write=False)
        self.table = arr
        self.n = arr.shape[0]
        self.p = p
        self.q = q

    def __eq__(self, other):
        return isinstance(other, LoopTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        tag = f", p={self.p}, q={self.q}" if self.p else ""
        return f"LoopTable(n={self.n}{tag})"

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def sort_key(self) -> tuple:
        return tuple(self.table.ravel().tolist())

    def encode(self, i: int, j: int) -> int:
        return (i % self.q) * self.p + (j % self.p)

    def decode(self, e: int) -> tuple[int, int]:
        return divmod(int(e), self.p)

    # --- derived tables, cached -----------------------------------------

    @property
    def ldiv(self) -> np.ndarray:
        """ldiv[u, w] = u \\ w, the x with u*x = w."""
        if not hasattr(self, "_ldiv"):
            out = np.empty_like(self.table)
            rows = np.arange(self.n)
            out[rows[:, None], self.table] = rows[None, :]
            out.setflags(write=False)
            self._ldiv = out
        return self._ldiv

    @property
    def rdiv(self) -> np.ndarray:
        """rdiv[w, v] = w / v, the x with x*v = w."""
        if not hasattr(self, "_rdiv"):
            out = np.empty_like(self.table)
            cols = np.arange(self.n)
            out[self.table, cols[None, :]] = cols[:, None]
            out.setflags(write=False)
            self._rdiv = out
        return self._rdiv

    @property
    def inverses(self) -> np.ndarray:
        """Two-sided inverses; raises if some element lacks one."""
        if not hasattr(self, "_inv"):
            right = self.ldiv[:, 0]
            left = self.rdiv[0, :]
            if not np.array_equal(right, left):
                raise ValueError("loop lacks two-sided inverses")
            right = right.copy()
            right.setflags(write=False)
            self._inv = right
        return self._inv


def divisions(t: LoopTable) -> tuple[np.ndarray, np.ndarray]:
    return t.ldiv, t.rdiv


def right_translation(t: LoopTable, u: int) -> np.ndarray:
    return t.table[:, u]


def left_translation(t: LoopTable, u: int) -> np.ndarray:
    return t.table[u, :]


# --- construction ---------------------------------------------------------


def build_bol_loop(ctx: FieldCtx, seq: SolutionSeq) -> LoopTable:
    """The loop on Z_q x Z_p with (i,j)(k,l) = (i+k, m + (j+m) th_{i+k}/th_i),
    where m = l/(1+th_k) and th = seq.theta."""
    p, q = ctx.p, ctx.q
    if seq.q != q or seq.p != p:
        raise InvalidTheta("sequence does not match the field context")
    if not seq.is_valid():
        raise InvalidTheta(f"sequence {seq.u} has a zero entry or a -1 ratio")
    theta = np.array(seq.theta, dtype=np.int64)
    inv_theta = np.array([inv_mod(int(x), p) for x in theta], dtype=np.int64)
    inv_one_plus = np.array([inv_mod(1 + int(x), p) for x in theta], dtype=np.int64)

    i, j, k, l = np.meshgrid(
        np.arange(q), np.arange(p), np.arange(q), np.arange(p), indexing="ij"
    )
    ik = (i + k) % q
    m = l * inv_one_plus[k] % p
    jj = (m + (j + m) * inv_theta[i] % p * theta[ik]) % p
    prod = (ik * p + jj).reshape(p * q, p * q)
    return LoopTable(prod, p=p, q=q)


def _is_perm(images: Sequence[int], p: int) -> bool:
    return sorted(images) == list(range(p))


def _complete(images: Sequence[int], p: int) -> bool:
    return _is_perm(images, p) and _is_perm([(x + images[x]) % p for x in range(p)], p)


def build_from_complete_mappings(p: int, q: int, thetas: Sequence[Sequence[int]]) -> LoopTable:
    """The loop (i,j)(k,l) = (i+k, m + (j+m) th_i^-1 th_{i+k}) with m + m th_k = l.

    ``thetas[i][x]`` is the image of x under the i-th complete mapping.
    """
    if len(thetas) != q:
        raise NotCompleteMapping(f"expected {q} mappings, got {len(thetas)}")
    th = [list(map(int, x)) for x in thetas]
    if th[0] != list(range(p)):
        raise NotCompleteMapping("theta_0 must be the identity", (0, 0))
    for i, f in enumerate(th):
        if len(f) != p or f[0] != 0:
            raise NotCompleteMapping(f"theta_{i} must fix 0", (0, i))
        if not _complete(f, p):
            raise NotCompleteMapping(f"theta_{i} is not a complete mapping", (0, i))
    inv = []
    for f in th:
        g = [0] * p
        for x, y in enumerate(f):
            g[y] = x
        inv.append(g)
    for i in range(q):
        for j in range(q):
            composite = [th[j][inv[i][x]] for x in range(p)]
            if not _complete(composite, p):
                raise NotCompleteMapping(
                    f"theta_{i}^-1 theta_{j} is not a complete mapping", (i, j)
                )
    # m_of[k][l] solves m + m theta_k = l
    m_of = []
    for f in th:
        row = [0] * p
        for m in range(p):
            row[(m + f[m]) % p] = m
        m_of.append(row)

    n = p * q
    out = np.empty((n, n), dtype=np.intp)
    for i in range(q):
        for k in range(q):
            ik = (i + k) % q
            f, g = inv[i], th[ik]
            for j in range(p):
                for l in range(p):
                    m = m_of[k][l]
                    out[i * p + j, k * p + l] = ik * p + (m + g[f[(j + m) % p]]) % p
    return LoopTable(out, p=p, q=q)


def cyclic_group(n: int) -> LoopTable:
    r = np.arange(n)
    return LoopTable((r[:, None] + r[None, :]) % n)


# --- identity checks -------------------------------------------------------


def is_latin(t: LoopTable) -> bool:
    full = np.arange(t.n)
    srt_rows = np.sort(t.table, axis=1)
    srt_cols = np.sort(t.table, axis=0)
    return bool((srt_rows == full).all() and (srt_cols == full[:, None]).all())


def is_loop(t: LoopTable) -> bool:
    if not is_latin(t):
        return False
    full = np.arange(t.n)
    return bool(np.array_equal(t.table[0], full) and np.array_equal(t.table[:, 0], full))


def is_right_bol(t: LoopTable) -> bool:
    """((w u) v) u == w ((u v) u) over all triples, one u at a time."""
    T = t.table
    for u in range(t.n):
        col_u = T[:, u]
        lhs = col_u[T[col_u, :]]  # [w, v] -> ((w u) v) u
        rhs = T[:, col_u[T[u, :]]]  # [w, v] -> w ((u v) u)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_associative(t: LoopTable) -> bool:
    T = t.table
    for x in range(t.n):
        # (x y) z vs x (y z)
        if not np.array_equal(T[T[x, :], :], T[x, :][T]):
            return False
    return True


def has_aip(t: LoopTable) -> bool:
    """(u v)^-1 == u^-1 v^-1 for all pairs."""
    inv = t.inverses
    return bool(np.array_equal(inv[t.table], t.table[inv[:, None], inv[None, :]]))


def is_commutative(t: LoopTable) -> bool:
    return bool(np.array_equal(t.table, t.table.T))


# --- powers ----------------------------------------------------------------


def power(t: LoopTable, x: int, k: int) -> int:
    """x^k via repeated right multiplication; negative k uses the inverse."""
    if k < 0:
        x, k = int(t.inverses[x]), -k
    y = 0
    for _ in range(k):
        y = int(t.table[y, x])
    return y


def element_order(t: LoopTable, x: int) -> int:
    y, k = int(x), 1
    while y != 0:
        y = int(t.table[y, x])
        k += 1
        if k > t.n:
            raise ValueError(f"element {x} has no finite right-power order")
    return k


def element_orders(t: LoopTable) -> np.ndarray:
    return np.array([element_order(t, x) for x in range(t.n)])


def sqrt_element(t: LoopTable, x: int) -> int:
    if t.n % 2 == 0:
        raise NotUniquelyTwoDivisible("square roots need a loop of odd order")
    k = element_order(t, x)
    return power(t, x, (k + 1) // 2)


def sqrt_table(t: LoopTable) -> np.ndarray:
    return np.array([sqrt_element(t, x) for x in range(t.n)], dtype=np.intp)


# --- division identity and T maps -----------------------------------------


def check_left_division_identity(t: LoopTable) -> bool:
    """u \\ v == (u^-1 * (v u)) u^-1 at every pair."""
    T, inv = t.table, t.inverses
    rhs = T[T[inv[:, None], T.T], inv[:, None]]  # [u, v]
    return bool(np.array_equal(t.ldiv, rhs))


def t_map(t: LoopTable, u: int) -> np.ndarray:
    """v -> (u^-1 * v u^2) u^-1."""
    T, inv = t.table, t.inverses
    u2 = T[u, u]
    ui = inv[u]
    return T[T[ui, T[:, u2]], ui]


def t_map_composite(t: LoopTable, u: int) -> np.ndarray:
    """R_u L_u^-1, i.e. v -> u \\ (v u)."""
    return t.ldiv[u, t.table[:, u]]


def t_power_law_holds(t: LoopTable, u: int, v: int, k: int) -> bool:
    """(v T_u)^k == (u^-1 * (u^2) L_v^k) u^-1."""
    T, inv = t.table, t.inverses
    lhs = power(t, int(t_map(t, u)[v]), k)
    y = int(T[u, u])
    for _ in range(k):
        y = int(T[v, y])
    rhs = int(T[T[inv[u], y], inv[u]])
    return lhs == rhs


def extract_theta(t: LoopTable, a: Optional[int] = None, b: Optional[int] = None) -> list[tuple[int, ...]]:
    """theta_i(j) = j' where a^i \\ (b^j a^i) = b^j'."""
    p, q = t.p, t.q
    if p is None or q is None:
        raise NotBolStructure("table carries no (p, q) tags")
    a = p if a is None else a
    b = 1 if b is None else b
    bpow = [power(t, b, j) for j in range(p)]
    index_of = {e: j for j, e in enumerate(bpow)}
    if len(index_of) != p:
        raise NotBolStructure(f"element {b} does not have order {p}")
    thetas = []
    for i in range(q):
        ai = power(t, a, i)
        row = []
        for j in range(p):
            x = int(t.ldiv[ai, t.table[bpow[j], ai]])
            if x not in index_of:
                raise NotBolStructure(f"T_(a^{i}) moves b^{j} outside <b>")
            row.append(index_of[x])
        thetas.append(tuple(row))
    return thetas


def linear_scalar(images: Sequence[int], p: int) -> Optional[int]:
    """lam if images[x] == lam*x for all x, else None."""
    lam = images[1] % p
    return lam if all(images[x] == lam * x % p for x in range(p)) else None


# --- nuclei, subloops, normality ------------------------------------------


def nuclei(t: LoopTable) -> tuple[frozenset, frozenset, frozenset]:
    T, n = t.table, t.n
    left, middle, right = [], [], []
    for x in range(n):
        # left: x(vw) == (xv)w
        if np.array_equal(T[x, :][T], T[T[x, :], :]):
            left.append(x)
        # middle: u(xw) == (ux)w
        if np.array_equal(T[:, T[x, :]], T[T[:, x], :]):
            middle.append(x)
        # right: u(vx) == (uv)x
        if np.array_equal(T[:, T[:, x]], T[:, x][T]):
            right.append(x)
    return frozenset(left), frozenset(middle), frozenset(right)


def subloop_generated(t: LoopTable, gens: Iterable[int], *, bol: Optional[bool] = None) -> frozenset:
    """Smallest subloop containing gens.

    In right Bol loops closure under products and inverses suffices;
    otherwise both divisions are closed over too.
    """
    T = t.table
    if bol is None:
        bol = is_right_bol(t)
    S = {0, *map(int, gens)}
    while True:
        idx = np.fromiter(S, dtype=np.intp)
        new = set(T[np.ix_(idx, idx)].ravel().tolist())
        if bol:
            new |= set(t.inverses[idx].tolist())
        else:
            new |= set(t.ldiv[np.ix_(idx, idx)].ravel().tolist())
            new |= set(t.rdiv[np.ix_(idx, idx)].ravel().tolist())
        if new <= S:
            return frozenset(S)
        S |= new


def inner_mapping_invariant(t: LoopTable, S: Iterable[int]) -> bool:
    """S is mapped into itself by every R(x,y), L(x,y) and T_x."""
    T, ldiv, rdiv = t.table, t.ldiv, t.rdiv
    s = np.fromiter(sorted(set(S)), dtype=np.intp)
    member = np.zeros(t.n, dtype=bool)
    member[s] = True
    # T_x: s -> x \ (s x)
    if not member[ldiv[np.arange(t.n)[None, :], T[s, :]]].all():
        return False
    for x in range(t.n):
        # R(x,y) = R_x R_y R_(xy)^-1: s -> ((s x) y) / (x y)
        img = rdiv[T[T[s, x], :], T[x, :][None, :]]
        if not member[img].all():
            return False
        # L(x,y) = L_x L_y L_(yx)^-1: s -> (y x) \ (y (x s))
        img = ldiv[T[:, x][None, :], T[np.arange(t.n)[None, :], T[x, s][:, None]]]
        if not member[img].all():
            return False
    return True


def coset_blocks_congruence(t: LoopTable, S: Iterable[int]) -> bool:
    """The left cosets xS partition the loop and multiply block-to-block."""
    T = t.table
    s = np.fromiter(sorted(set(S)), dtype=np.intp)
    block_of = np.full(t.n, -1)
    blocks = []
    for x in range(t.n):
        coset = T[x, s]
        if block_of[x] == -1:
            if (block_of[coset] != -1).any():
                return False
            block_of[coset] = len(blocks)
            blocks.append(coset)
        elif not (block_of[coset] == block_of[x]).all():
            return False
    if (block_of == -1).any():
        return False
    for b1 in blocks:
        for b2 in blocks:
            hit = block_of[T[np.ix_(b1, b2)]]
            if not (hit == hit.flat[0]).all():
                return False
    return True


def is_normal_subloop(t: LoopTable, S: Iterable[int]) -> bool:
    """Normality by inner-mapping invariance, cross-checked by the coset test."""
    S = frozenset(S)
    by_inner = inner_mapping_invariant(t, S)
    by_blocks = coset_blocks_congruence(t, S)
    if by_inner != by_blocks:
        raise RuntimeError(
            f"normality tests disagree for {sorted(S)}: inner={by_inner}, blocks={by_blocks}"
        )
    return by_inner


def subloops_of_order(t: LoopTable, k: int) -> list[frozenset]:
    """Distinct cyclic subloops <x> with k elements."""
    bol = is_right_bol(t)
    found = []
    for x in range(1, t.n):
        S = subloop_generated(t, [x], bol=bol)
        if len(S) == k and S not in found:
            found.append(S)
    return found


# --- associated Bruck loop and related identities -------------------------


def associated_bruck(t: LoopTable) -> LoopTable:
    """u o v = ((v u^2) v)^(1/2)."""
    if t.n % 2 == 0:
        raise NotUniquelyTwoDivisible("the associated Bruck loop needs odd order")
    T = t.table
    sq = np.diag(T)
    root = sqrt_table(t)
    vu2v = T[T[np.arange(t.n)[None, :], sq[:, None]], np.arange(t.n)[None, :]]  # [u, v]
    return LoopTable(root[vu2v], p=t.p, q=t.q)


def conjugation_bridge_holds(t: LoopTable, bruck: LoopTable) -> bool:
    """sigma^-1 R°_v sigma == L_v R_v for every v, sigma the squaring map."""
    T = t.table
    sq = np.diag(T)
    lhs = sq[bruck.table]  # [u, v] -> (u o v)^2
    rhs = T[T[np.arange(t.n)[None, :], sq[:, None]], np.arange(t.n)[None, :]]
    return bool(np.array_equal(lhs, rhs))


def right_section_twisted(t: LoopTable) -> bool:
    """R_u R_v R_u == R_((uv)u) as permutations, for all u, v."""
    T = t.table
    for u in range(t.n):
        cu = T[:, u]
        for v in range(t.n):
            if not np.array_equal(cu[T[cu, v]], T[:, T[T[u, v], u]]):
                return False
    return True


def factorizations_distinct(t: LoopTable, a: int, b: int) -> bool:
    """a^i b^j, b^j a^i and (b^j a^i) b^j each list every element once."""
    p, q = element_order(t, b), element_order(t, a)
    T = t.table
    apow = [power(t, a, i) for i in range(q)]
    bpow = [power(t, b, j) for j in range(p)]
    forms = [
        {int(T[ai, bj]) for ai in apow for bj in bpow},
        {int(T[bj, ai]) for ai in apow for bj in bpow},
        {int(T[T[bj, ai], bj]) for ai in apow for bj in bpow},
    ]
    return all(len(f) == p * q == t.n for f in forms)


def right_power_alternative(t: LoopTable) -> bool:
    """R_x^i == R_(x^i) for every x and 1 <= i <= n."""
    T = t.table
    for x in range(t.n):
        perm = T[:, x]
        acc = perm.copy()
        y = x
        for _ in range(t.n):
            if not np.array_equal(acc, T[:, y]):
                return False
            acc = perm[acc]
            y = int(T[y, x])
    return True


def perm_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = np.lcm(order, length)
    return int(order)


def unique_solution_law(t: LoopTable, v: int, m: int, n: int) -> bool:
    """(u v^n) u == v^m has exactly the solution u = v^((m-n)/2)."""
    T = t.table
    k = element_order(t, v)
    vn, vm = power(t, v, n % k), power(t, v, m % k)
    sols = np.flatnonzero(T[T[:, vn], np.arange(t.n)] == vm)
    half = (m - n) * pow(2, -1, k) % k if k > 1 else 0
    return len(sols) == 1 and int(sols[0]) == power(t, v, half)
