import pytest
from hypothesis import given, settings, strategies as st

from bolpq.errors import BadGamma, NoRootOfUnity, NotRealSolution
from bolpq.ff import make_context, primes_between
from bolpq.spectrum import (
    SolutionSeq,
    all_ones_seq,
    build_gamma_sets,
    circulant_eigencheck,
    count_isotopy_classes,
    eigenvalue,
    eigenvector,
    enumerate_periodic_solutions,
    is_bruck_seq,
    is_eigenpair,
    iso_key,
    isotopy_key,
    partition,
    representatives,
    seq_isomorphic,
    seq_isotopic,
    theta_from_gamma,
)

DIVIDING = [
    (p, q)
    for p in primes_between(3, 80)
    for q in primes_between(2, 20)
    if 2 < q < p and (p * p - 1) % q == 0
]


def test_gamma_sets_examples(ctx73, ctx53):
    g = build_gamma_sets(ctx73)
    assert [x.u for x in g.gamma_good] == [0, 1, 3, 4, 5]
    assert [x.u for x in g.gamma_canonical] == [1, 3, 4]
    g = build_gamma_sets(ctx53)
    assert [(x.u, x.v) for x in g.gamma_canonical] == [(3, 0), (3, 2)]


def test_theta_examples(ctx73, ctx53):
    s = theta_from_gamma(ctx73, 4)
    assert (s.u, s.theta, s.lam) == ((1, 3, 3), (1, 5, 5), 6)
    s = theta_from_gamma(ctx73, 1)
    assert (s.u, s.theta, s.lam) == ((1, 2, 4), (1, 4, 2), 6)
    s = theta_from_gamma(ctx53, ctx53.elem(3, 0))
    assert (s.u, s.theta, s.lam) == ((1, 2, 2), (1, 3, 3), 4)


def test_theta_errors(ctx73, ctx53):
    with pytest.raises(BadGamma):
        theta_from_gamma(ctx73, 2)
    with pytest.raises(BadGamma):
        theta_from_gamma(ctx53, ctx53.elem(3, 1))
    with pytest.raises(NotRealSolution):
        theta_from_gamma(ctx53, ctx53.elem(1, 0))
    with pytest.raises(NoRootOfUnity):
        theta_from_gamma(make_context(11, 7), 1)


def test_all_ones(ctx73):
    s = all_ones_seq(ctx73)
    assert s.u == (1, 1, 1) and s.lam == 2 and s.satisfies_recurrence()


def test_eigencheck_examples(ctx73):
    vec = [ctx73.elem(x) for x in (1, 3, 3)]
    assert is_eigenpair(ctx73, vec, ctx73.elem(6))
    assert not is_eigenpair(ctx73, vec, ctx73.elem(2))
    assert circulant_eigencheck(ctx73, all_ones_seq(ctx73))


def test_equivalence_examples(ctx73):
    u = {g: theta_from_gamma(ctx73, g) for g in (1, 3, 4, 5)}
    assert u[3].u == (1, 5, 1) and u[5].u == (1, 1, 5)
    assert seq_isomorphic(u[3], u[3]) == 1
    assert seq_isomorphic(u[3], u[5]) == 2
    assert seq_isomorphic(u[1], u[4]) is None
    assert seq_isotopic(u[3], u[3]) == (1, 0)
    assert seq_isotopic(u[1], all_ones_seq(ctx73)) is None
    assert is_bruck_seq(all_ones_seq(ctx73))
    assert is_bruck_seq(u[4]) and not is_bruck_seq(u[1])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(DIVIDING))
def test_gamma_invariants(pq):
    ctx = make_context(*pq)
    p, q = pq
    sets = build_gamma_sets(ctx)
    assert len(sets.gamma_canonical) == (p - q + 2) // 2
    good = set(sets.gamma_good)
    seqs = {}
    for g in sets.gamma_good:
        s = theta_from_gamma(ctx, g)
        seqs[g] = s
        assert circulant_eigencheck(ctx, s) and s.satisfies_recurrence() and s.is_valid()
        assert s.lam == eigenvalue(ctx, 1).u
        # -1 exclusion
        assert all((a + b) % p for a in s.u for b in s.u)
        mirror = 1 - g
        if mirror in good:
            assert seq_isomorphic(s, theta_from_gamma(ctx, mirror)) in (1, q - 1)
    canon = sets.gamma_canonical
    for i, g in enumerate(canon):
        for h in canon[i + 1 :]:
            assert seq_isomorphic(seqs[g], seqs[h]) is None
    bruck = [g for g in canon if is_bruck_seq(seqs[g])]
    assert bruck == [ctx.elem(ctx.half)]


@pytest.mark.parametrize("pq", DIVIDING[:12])
def test_eigenvectors_independent(pq):
    ctx = make_context(*pq)
    for i in range(1, (ctx.q - 1) // 2 + 1):
        v, w = eigenvector(ctx, i), eigenvector(ctx, ctx.q - i)
        assert is_eigenpair(ctx, v, eigenvalue(ctx, i))
        assert v[0] * w[1] - v[1] * w[0] != 0


@pytest.mark.parametrize("pq", [(7, 3), (11, 5), (13, 7), (29, 7), (19, 5)])
def test_other_eigenvalues_dilate(pq):
    ctx = make_context(*pq)
    for g in build_gamma_sets(ctx).gamma_canonical:
        base = theta_from_gamma(ctx, g, 1)
        for j in range(2, ctx.q):
            other = theta_from_gamma(ctx, g, j)
            assert other.lam == eigenvalue(ctx, j).u
            assert other.u == tuple(base.u[j * i % ctx.q] for i in range(ctx.q))
            assert seq_isomorphic(other, base) is not None


@pytest.mark.parametrize("pq", [(5, 3), (7, 3), (11, 3), (13, 3), (11, 5), (13, 7), (29, 7)])
def test_representatives_are_a_transversal(pq):
    reps = representatives(make_context(*pq))
    sols = enumerate_periodic_solutions(*pq)
    assert len(partition(reps, lambda a, b: seq_isomorphic(a, b) is not None)) == len(reps)
    for s in sols:
        assert sum(seq_isomorphic(s, r) is not None for r in reps) == 1


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
def test_canonical_keys_agree_with_pairwise_scan(p):
    reps = representatives(make_context(p, 3)) + representatives(make_context(p, 3))[1:]
    by_scan = partition(reps, lambda a, b: seq_isotopic(a, b) is not None)
    assert count_isotopy_classes(reps) == len(by_scan)
    for cls in by_scan:
        assert len({isotopy_key(s) for s in cls}) == 1
    for a in reps:
        for b in reps:
            assert (iso_key(a) == iso_key(b)) == (seq_isomorphic(a, b) is not None)


def test_isotopy_relation_is_affine():
    ctx = make_context(13, 7)
    reps = representatives(ctx)
    for a in reps:
        for b in reps:
            hit = seq_isotopic(a, b)
            if hit:
                s, r = hit
                c = pow(b.u[r], -1, 13)
                assert a.u == tuple(c * b.u[(s * i + r) % 7] % 13 for i in range(7))


def test_invalid_sequence_flags():
    assert not SolutionSeq((1, 0, 0), 1, 7).is_valid()
    assert not SolutionSeq((1, 6, 1), 0, 7).is_valid()
