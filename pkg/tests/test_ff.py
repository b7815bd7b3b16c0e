import pytest
from hypothesis import given, strategies as st

from bolpq.errors import InvalidPrimes, NoRootOfUnity
from bolpq.ff import (
    Case,
    Fp2,
    fp2_arith,
    in_omega_subgroup,
    is_prime,
    is_quadratic_residue,
    make_context,
    norm_trace_conj,
    primes_between,
    smallest_nonresidue,
)


def test_is_prime_matches_trial_division():
    naive = [n for n in range(2, 2000) if all(n % d for d in range(2, int(n**0.5) + 1))]
    assert [n for n in range(2000) if is_prime(n)] == naive
    assert is_prime(2**31 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_context_examples():
    c = make_context(7, 3)
    assert (c.case, c.t, c.omega) == (Case.Q_DIVIDES_P_MINUS_1, 3, Fp2(2, 0, 7, 3))
    c = make_context(5, 3)
    assert (c.case, c.t, c.omega) == (Case.Q_DIVIDES_P_PLUS_1, 2, Fp2(2, 2, 5, 2))
    c = make_context(11, 7)
    assert c.case is Case.NO_DIVIDE and c.omega is None
    with pytest.raises(NoRootOfUnity, match="only the cyclic group exists"):
        c.require_root()


def test_omega_lex_first_by_exhaustive_scan():
    for p, q in [(5, 3), (11, 3), (13, 7), (19, 5), (29, 5), (7, 3), (13, 3)]:
        c = make_context(p, q)
        roots = [
            (u, v)
            for u in range(p)
            for v in range(p)
            if (u, v) != (1, 0) and Fp2(u, v, p, c.t) ** q == 1
        ]
        assert (c.omega.u, c.omega.v) == min(roots)


@pytest.mark.parametrize("p,q", [(4, 3), (7, 7), (3, 5), (7, 2), (1, 3), (9, 5)])
def test_invalid_primes(p, q):
    with pytest.raises(InvalidPrimes):
        make_context(p, q)


def test_arithmetic_examples():
    w = Fp2(2, 2, 5, 2)
    assert w * w == Fp2(2, 3, 5, 2)
    assert w * Fp2(2, 3, 5, 2) == 1
    assert w * 1 == w
    assert norm_trace_conj(w) == (1, 4, Fp2(2, 3, 5, 2))
    assert norm_trace_conj(Fp2(2, 0, 7, 3)) == (4, 4, Fp2(2, 0, 7, 3))
    assert norm_trace_conj(Fp2(0, 0, 7, 3)) == (0, 0, Fp2(0, 0, 7, 3))
    assert fp2_arith(w, w, "mul") == w * w


def test_omega_membership():
    c = make_context(7, 3)
    assert in_omega_subgroup(c, c.one)
    assert in_omega_subgroup(c, c.elem(4))
    assert not in_omega_subgroup(c, c.elem(3))


def test_nonresidue_is_smallest():
    for p in primes_between(2, 300):
        t = smallest_nonresidue(p)
        assert not is_quadratic_residue(t, p)
        assert all(is_quadratic_residue(x, p) for x in range(1, t))


FIELDS = [(5, 2), (7, 3), (11, 2), (13, 2)]


@st.composite
def elements(draw, nonzero=False):
    p, t = draw(st.sampled_from(FIELDS))
    u = draw(st.integers(0, p - 1))
    v = draw(st.integers(0, p - 1))
    if nonzero and u == v == 0:
        u = 1
    return Fp2(u, v, p, t)


@st.composite
def pairs(draw):
    a = draw(elements())
    b = Fp2(draw(st.integers(0, a.p - 1)), draw(st.integers(0, a.p - 1)), a.p, a.t)
    return a, b


@given(elements(nonzero=True))
def test_inverse_and_conj(a):
    assert a * a.inverse() == 1
    assert a.conj().conj() == a
    assert a / a == 1


@given(pairs())
def test_norm_multiplicative_trace_additive(ab):
    a, b = ab
    assert (a * b).norm() == a.norm() * b.norm() % a.p
    assert (a + b).trace() == (a.trace() + b.trace()) % a.p
    assert (a - b) + b == a


@given(elements(nonzero=True), st.integers(-20, 20), st.integers(-20, 20))
def test_power_laws(a, m, n):
    assert a**m * a**n == a ** (m + n)


PAIRS = [(p, q) for p in primes_between(3, 60) for q in primes_between(2, 20) if 2 < q < p]


@given(st.sampled_from(PAIRS))
def test_root_sums_in_base_field(pq):
    c = make_context(*pq)
    if not c.divides:
        return
    assert make_context(*pq) == c
    w = c.omega
    lams = [w**i + w ** (-i) for i in range(c.q)]
    assert all(x.is_base() for x in lams)
    for i in range(c.q):
        for j in range(i + 1, c.q):
            assert (lams[i] == lams[j]) == ((i + j) % c.q == 0)
