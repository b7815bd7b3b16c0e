"""Period-q solutions of u_{n+2} = lambda*u_{n+1} - u_n and their classification.

The solutions with u_0 = 1 are eigenvectors of the q x q circulant matrix
with first row (0, 1, 0, ..., 0, 1).  For the eigenvalue omega + omega^-1
they are the sequences ``u(gamma)_i = gamma*omega^i + (1-gamma)*omega^-i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BadGamma, NotRealSolution
from .ff import Case, FieldCtx, Fp2, in_omega_subgroup, inv_mod


@dataclass(frozen=True)
class SolutionSeq:
    """A valid period-q solution with u_0 = 1.

    ``theta`` holds the inverses u_i^-1, the scalars used by the loop
    multiplication.
    """

    u: tuple[int, ...]
    lam: int
    p: int
    gamma: Optional[Fp2] = None

    @property
    def q(self) -> int:
        return len(self.u)

    @property
    def theta(self) -> tuple[int, ...]:
        return tuple(inv_mod(x, self.p) for x in self.u)

    def satisfies_recurrence(self) -> bool:
        q, p, u = self.q, self.p, self.u
        return all(
            u[(n + 2) % q] == (self.lam * u[(n + 1) % q] - u[n]) % p for n in range(q)
        )

    def is_valid(self) -> bool:
        """u_0 = 1, no zero entries and no ratio u_i^-1 u_j equal to -1."""
        p = self.p
        if self.u[0] != 1 or any(x == 0 for x in self.u):
            return False
        values = set(self.u)
        return not any((p - x) % p in values for x in values)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "gamma": None if self.gamma is None else self.gamma.to_json(),
            "u": list(self.u),
            "theta": list(self.theta),
        }


@dataclass(frozen=True)
class GammaSets:
    gamma_all: list[Fp2]
    gamma_good: list[Fp2]
    gamma_canonical: list[Fp2]


def gamma_label(ctx: FieldCtx, gamma: Fp2) -> int:
    """The user-facing integer for gamma: itself (q|p-1) or m in 1/2 + m*sqrt(t)."""
    if ctx.case is Case.Q_DIVIDES_P_PLUS_1:
        return gamma.v
    return gamma.u


def gamma_from_label(ctx: FieldCtx, value: int, *, m_form: bool) -> Fp2:
    if m_form:
        return ctx.elem(ctx.half, value)
    return ctx.elem(value)


def in_gamma_domain(ctx: FieldCtx, gamma: Fp2) -> bool:
    """gamma lies in the domain whose u(gamma) has base-field entries."""
    if ctx.case is Case.Q_DIVIDES_P_MINUS_1:
        return gamma.v == 0
    return gamma.u == ctx.half


def is_bad_gamma(ctx: FieldCtx, gamma: Fp2) -> bool:
    # gamma = 0 gives u_i = omega^-i, never 0 or -1 since omega has odd order
    if not gamma:
        return False
    return in_omega_subgroup(ctx, 1 - gamma.inverse())


def build_gamma_sets(ctx: FieldCtx) -> GammaSets:
    ctx.require_root()
    p = ctx.p
    if ctx.case is Case.Q_DIVIDES_P_MINUS_1:
        gamma_all = [ctx.elem(g) for g in range(p)]
    else:
        gamma_all = [ctx.elem(ctx.half, m) for m in range(p)]
    good = [g for g in gamma_all if not is_bad_gamma(ctx, g)]
    if ctx.case is Case.Q_DIVIDES_P_MINUS_1:
        canonical = [g for g in good if 1 <= g.u <= (p + 1) // 2]
    else:
        canonical = [g for g in good if g.v <= (p - 1) // 2]
    return GammaSets(gamma_all, good, canonical)


def eigenvalue(ctx: FieldCtx, i: int) -> Fp2:
    w = ctx.require_root()
    return w**i + w ** (-i)


def eigenvector(ctx: FieldCtx, i: int) -> list[Fp2]:
    w = ctx.require_root() ** i
    return [w**k for k in range(ctx.q)]


def theta_from_gamma(ctx: FieldCtx, gamma: Fp2, index: int = 1) -> SolutionSeq:
    """The solution gamma*v_index + (1-gamma)*v_-index for eigenvalue lambda_index."""
    w = ctx.require_root()
    if isinstance(gamma, int):
        gamma = ctx.elem(gamma)
    if not in_gamma_domain(ctx, gamma):
        raise NotRealSolution(f"gamma={gamma.to_json()} gives entries outside F_{ctx.p}")
    if is_bad_gamma(ctx, gamma):
        raise BadGamma(f"gamma={gamma.to_json()}: 1 - 1/gamma lies in <omega>")
    wj = w**index
    wj_inv = wj.inverse()
    entries = []
    a, b = ctx.one, ctx.one
    for _ in range(ctx.q):
        x = gamma * a + (1 - gamma) * b
        if not x.is_base():
            raise NotRealSolution(f"gamma={gamma.to_json()} gives entries outside F_{ctx.p}")
        entries.append(x.u)
        a, b = a * wj, b * wj_inv
    lam = eigenvalue(ctx, index)
    return SolutionSeq(tuple(entries), lam.u, ctx.p, gamma)


def all_ones_seq(ctx: FieldCtx) -> SolutionSeq:
    return SolutionSeq((1,) * ctx.q, 2 % ctx.p, ctx.p, None)


def circulant_matrix(ctx: FieldCtx) -> list[list[Fp2]]:
    q = ctx.q
    return [
        [ctx.one if (j - i) % q in (1, q - 1) else ctx.zero for j in range(q)]
        for i in range(q)
    ]


def is_eigenpair(ctx: FieldCtx, vec: Sequence[Fp2], lam: Fp2) -> bool:
    a = circulant_matrix(ctx)
    for row, x in zip(a, vec):
        acc = ctx.zero
        for coeff, y in zip(row, vec):
            acc = acc + coeff * y
        if acc != lam * x:
            return False
    return True


def circulant_eigencheck(ctx: FieldCtx, seq: SolutionSeq) -> bool:
    """A u = lambda u over F_{p^2}, with A materialized."""
    return is_eigenpair(ctx, [ctx.elem(x) for x in seq.u], ctx.elem(seq.lam))


def _dilate(u: Sequence[int], s: int) -> tuple[int, ...]:
    q = len(u)
    return tuple(u[s * i % q] for i in range(q))


def seq_isomorphic(a: SolutionSeq, b: SolutionSeq) -> Optional[int]:
    """Some s != 0 with a_i = b_{s i}, else None."""
    if a.q != b.q or a.p != b.p:
        return None
    for s in range(1, a.q):
        if a.u == _dilate(b.u, s):
            return s
    return None


def _isotope(u: Sequence[int], s: int, r: int, p: int) -> tuple[int, ...]:
    q = len(u)
    c = inv_mod(u[r], p)
    return tuple(c * u[(s * i + r) % q] % p for i in range(q))


def seq_isotopic(a: SolutionSeq, b: SolutionSeq) -> Optional[tuple[int, int]]:
    """Some (s, r) with a_i = b_r^-1 b_{s i + r}, else None."""
    if a.q != b.q or a.p != b.p:
        return None
    for s in range(1, a.q):
        for r in range(a.q):
            if a.u == _isotope(b.u, s, r, b.p):
                return s, r
    return None


def is_bruck_seq(a: SolutionSeq) -> bool:
    q = a.q
    return all(a.u[i] == a.u[(q - i) % q] for i in range(q))


def iso_key(seq: SolutionSeq) -> tuple[int, ...]:
    """Least element of the dilation orbit; equal keys iff seq_isomorphic."""
    return min(_dilate(seq.u, s) for s in range(1, seq.q))


def isotopy_key(seq: SolutionSeq) -> tuple[int, ...]:
    """Least element of the affine orbit i -> s i + r (normalized at 0)."""
    return min(
        _isotope(seq.u, s, r, seq.p) for s in range(1, seq.q) for r in range(seq.q)
    )


def representatives(ctx: FieldCtx) -> list[SolutionSeq]:
    """All-ones first, then u(gamma) for gamma in the canonical transversal."""
    reps = [all_ones_seq(ctx)]
    if ctx.divides:
        reps += [theta_from_gamma(ctx, g) for g in build_gamma_sets(ctx).gamma_canonical]
    return reps


def enumerate_periodic_solutions(p: int, q: int) -> list[SolutionSeq]:
    """Every valid period-q solution, by direct iteration of the recurrence.

    Scans lambda in F_p^* and u_1 in F_p; no eigenvectors or roots of unity
    are involved.
    """
    found = []
    for lam in range(1, p):
        for u1 in range(p):
            u = [1, u1]
            for _ in range(q):
                u.append((lam * u[-1] - u[-2]) % p)
            if u[q] != 1 or u[q + 1] != u1:
                continue
            seq = SolutionSeq(tuple(u[:q]), lam, p)
            if seq.is_valid():
                found.append(seq)
    return found


def partition(items: Iterable, related) -> list[list]:
    """Greedy partition of items under an equivalence predicate."""
    classes: list[list] = []
    for x in items:
        for cls in classes:
            if related(cls[0], x):
                cls.append(x)
                break
        else:
            classes.append([x])
    return classes


def count_isotopy_classes(seqs: Iterable[SolutionSeq]) -> int:
    return len({isotopy_key(s) for s in seqs})
