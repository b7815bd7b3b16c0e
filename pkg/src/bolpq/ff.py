"""Exact arithmetic in F_p and its quadratic extension F_p[sqrt(t)].

Base-field elements are plain Python ints reduced into ``range(p)``.
Extension elements are :class:`Fp2` values ``u + v*sqrt(t)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import DivisionByZero, InvalidPrimes, NoRootOfUnity

P_MAX = 2**31 - 1

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo < p < hi."""
    return [n for n in range(max(lo + 1, 2), hi) if is_prime(n)]


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def is_quadratic_residue(a: int, p: int) -> bool:
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def smallest_nonresidue(p: int) -> int:
    for t in range(2, p):
        if pow(t, (p - 1) // 2, p) == p - 1:
            return t
    raise InvalidPrimes(f"no non-residue mod {p}")


@dataclass(frozen=True)
class Fp2:
    """The element ``u + v*sqrt(t)`` of F_{p^2}."""

    u: int
    v: int
    p: int = field(repr=False)
    t: int = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % self.p)
        object.__setattr__(self, "v", self.v % self.p)

    def _coerce(self, other) -> "Fp2":
        if isinstance(other, Fp2):
            if (other.p, other.t) != (self.p, self.t):
                raise ValueError("elements from different fields")
            return other
        if isinstance(other, int):
            return Fp2(other, 0, self.p, self.t)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp2(self.u + other.u, self.v + other.v, self.p, self.t)

    __radd__ = __add__

    def __neg__(self):
        return Fp2(-self.u, -self.v, self.p, self.t)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp2(self.u - other.u, self.v - other.v, self.p, self.t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, t = self.p, self.t
        return Fp2(
            (self.u * other.u + self.v * other.v * t) % p,
            (self.u * other.v + self.v * other.u) % p,
            p,
            t,
        )

    __rmul__ = __mul__

    def conj(self) -> "Fp2":
        return Fp2(self.u, -self.v, self.p, self.t)

    def norm(self) -> int:
        return (self.u * self.u - self.v * self.v * self.t) % self.p

    def trace(self) -> int:
        return 2 * self.u % self.p

    def inverse(self) -> "Fp2":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("division by zero in F_{p^2}")
        return self.conj() * inv_mod(n, self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Fp2":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = Fp2(1, 0, self.p, self.t)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == 0 and self.u == other % self.p
        if isinstance(other, Fp2):
            return (self.u, self.v, self.p, self.t) == (other.u, other.v, other.p, other.t)
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v, self.p, self.t))

    def __bool__(self):
        return bool(self.u or self.v)

    def is_base(self) -> bool:
        return self.v == 0

    def to_json(self) -> list[int]:
        return [self.u, self.v]


def fp2_arith(a: Fp2, b: Fp2, op: str) -> Fp2:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def norm_trace_conj(a: Fp2) -> tuple[int, int, Fp2]:
    return a.norm(), a.trace(), a.conj()


class Case(enum.Enum):
    Q_DIVIDES_P_MINUS_1 = "q|p-1"
    Q_DIVIDES_P_PLUS_1 = "q|p+1"
    NO_DIVIDE = "none"


@dataclass(frozen=True)
class FieldCtx:
    p: int
    q: int
    t: int
    case: Case
    omega: Optional[Fp2]

    def elem(self, u: int, v: int = 0) -> Fp2:
        return Fp2(u, v, self.p, self.t)

    @property
    def one(self) -> Fp2:
        return self.elem(1)

    @property
    def zero(self) -> Fp2:
        return self.elem(0)

    @property
    def half(self) -> int:
        return (self.p + 1) // 2

    @property
    def divides(self) -> bool:
        return self.case is not Case.NO_DIVIDE

    def require_root(self) -> Fp2:
        if self.omega is None:
            raise NoRootOfUnity(
                f"{self.q} does not divide {self.p}^2 - 1: only the cyclic group exists"
            )
        return self.omega


def _check_primes(p: int, q: int) -> None:
    for name, n in (("p", p), ("q", q)):
        if not isinstance(n, int) or n % 2 == 0 or not is_prime(n):
            raise InvalidPrimes(f"{name}={n} is not an odd prime")
    if p <= q:
        raise InvalidPrimes(f"need p > q, got p={p}, q={q}")
    if p > P_MAX:
        raise InvalidPrimes(f"p={p} exceeds {P_MAX}")


def _norm_one_root(p: int, q: int, t: int) -> Fp2:
    # Every q-th root of unity has norm 1 here (q is coprime to p-1), so for
    # each u only the v solving u^2 - t v^2 = 1 can qualify.  Scanning u and
    # then v in increasing order reproduces the lexicographic scan of F_{p^2}.
    sqrt_of: dict[int, list[int]] = {}
    for v in range(p):
        sqrt_of.setdefault(v * v % p, []).append(v)
    t_inv = inv_mod(t, p)
    for u in range(p):
        for v in sqrt_of.get((u * u - 1) * t_inv % p, ()):
            alpha = Fp2(u, v, p, t)
            if alpha != 1 and alpha**q == 1:
                return alpha
    raise NoRootOfUnity(f"no primitive {q}-th root of unity in F_{p}^2")


def make_context(p: int, q: int) -> FieldCtx:
    """Build the deterministic field context for the pair (p, q)."""
    _check_primes(p, q)
    t = smallest_nonresidue(p)
    if (p - 1) % q == 0:
        g = next(g for g in range(2, p) if pow(g, q, p) == 1)
        return FieldCtx(p, q, t, Case.Q_DIVIDES_P_MINUS_1, Fp2(g, 0, p, t))
    if (p + 1) % q == 0:
        return FieldCtx(p, q, t, Case.Q_DIVIDES_P_PLUS_1, _norm_one_root(p, q, t))
    return FieldCtx(p, q, t, Case.NO_DIVIDE, None)


def in_omega_subgroup(ctx: FieldCtx, x: Fp2) -> bool:
    """Membership in <omega>, i.e. x is a q-th root of unity."""
    ctx.require_root()
    if isinstance(x, int):
        x = ctx.elem(x)
    return bool(x) and x**ctx.q == 1
