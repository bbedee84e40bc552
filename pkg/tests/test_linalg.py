"""Exact linear algebra kernel: composition, kron, permutations, rank/kernel, coequalizers."""

from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duplicial.linalg import (
    GF,
    QQ,
    ComplexViolationError,
    DimensionError,
    LinMap,
    SingularMapError,
    Space,
    chain_homology,
    coequalizer,
    compose,
    inverse,
    kron,
    permute_factors,
    rank,
    rank_kernel,
    random_linmap,
)


def sp(n, field=QQ):
    return Space(field, n)


def mat(rows, field=QQ):
    rows = [list(r) for r in rows]
    return LinMap.from_rows(sp(len(rows[0]), field), sp(len(rows), field), rows)


SWAP22 = permute_factors(sp(2).tensor(sp(2)), (1, 0))


class TestCompose:
    def test_identity_composes_to_identity(self):
        i2 = LinMap.identity(sp(2))
        assert compose(i2, i2) == i2

    def test_zero_annihilates(self):
        f = mat([[1, 2], [3, 4]])
        z = LinMap.zero(sp(2), sp(2))
        assert compose(f, z).is_zero()

    def test_swap_squares_to_identity(self):
        # two 4x4 permutation matrices multiplied by hand give id_4
        assert compose(SWAP22, SWAP22) == LinMap.identity(sp(4))

    def test_shape_mismatch_names_spaces(self):
        f = mat([[1, 2]])
        g = mat([[1], [2], [3]])
        with pytest.raises(DimensionError, match="expects"):
            compose(f, g)

    def test_rational_entries_stay_exact(self):
        f = mat([[Fraction(1, 3)]])
        assert compose(f, f).entry(0, 0) == Fraction(1, 9)


class TestKron:
    def test_kron_of_identities(self):
        assert kron(LinMap.identity(sp(2)), LinMap.identity(sp(3))) == LinMap.identity(sp(6))

    def test_basis_action(self):
        f = mat([[0, 1], [1, 0]])
        g = mat([[2, 0], [0, 3]])
        k = kron(f, g)
        # e_0 (x) e_1 = index 1 must map to f(e_0) (x) g(e_1) = e_1 (x) 3 e_1 = 3 e_3
        assert k.column(1) == (0, 0, 0, 3)

    def test_swap_kron_identity_block_structure(self):
        f = mat([[0, 1], [1, 0]])
        k = kron(f, LinMap.identity(sp(2)))
        expect = mat([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        assert k == expect


class TestPermuteFactors:
    def test_identity_permutation(self):
        space = sp(2).tensor(sp(3))
        assert permute_factors(space, (0, 1)) == LinMap.identity(sp(6))

    def test_swap_on_2x3(self):
        space = sp(2).tensor(sp(3))
        p = permute_factors(space, (1, 0))
        # e_1 (x) e_2 at index 1*3+2 = 5 goes to e_2 (x) e_1 at index 2*2+1 = 5 in the 3(x)2 order
        assert p.column(5)[5] == 1
        # e_0 (x) e_1 at index 1 goes to e_1 (x) e_0 at index 2
        assert p.column(1)[2] == 1

    def test_three_cycle_cubed_is_identity(self):
        space = sp(2).tensor(sp(2)).tensor(sp(2))
        c = permute_factors(space, (1, 2, 0))
        assert compose(compose(c, c), c) == LinMap.identity(sp(8))

    def test_group_homomorphism_on_s3(self):
        space = sp(2).tensor(sp(2)).tensor(sp(2))
        for s in permutations(range(3)):
            for t in permutations(range(3)):
                st_ = tuple(s[t[i]] for i in range(3))
                lhs = compose(permute_factors(space, s), permute_factors(space, t))
                assert lhs == permute_factors(space, st_)

    def test_missing_factor_shape_is_usage_error(self):
        with pytest.raises(DimensionError):
            permute_factors(sp(6), (1, 0))


class TestRankKernel:
    def test_identity(self):
        r, basis = rank_kernel(LinMap.identity(sp(3)))
        assert (r, basis) == (3, [])

    def test_zero_map(self):
        r, basis = rank_kernel(LinMap.zero(sp(4), sp(2)))
        assert r == 0
        assert len(basis) == 4

    def test_rank_one_kernel_span(self):
        f = mat([[1, 2], [2, 4]])
        r, basis = rank_kernel(f)
        assert r == 1
        assert len(basis) == 1
        v = basis[0]
        # spanned by (2, -1); canonical form has leading 1
        assert v[0] * Fraction(-1, 2) == v[1]
        assert v[0] == 1
        assert f.apply(v) == (0, 0)

    def test_deterministic_echelon_form(self):
        f = mat([[1, 1, 1]])
        _, basis = rank_kernel(f)
        assert basis == [(1, 0, -1), (0, 1, -1)]

    def test_rank_agrees_mod_p(self):
        # p = 10007 does not divide any pivot for small random integer matrices
        rng = np.random.default_rng(7)
        for _ in range(20):
            m, n = rng.integers(1, 6, 2)
            rows = rng.integers(-5, 6, (m, n)).tolist()
            fq = mat(rows)
            fp = mat(rows, GF(10007))
            assert rank(fq) == rank(fp)

    def test_fp_kernel(self):
        f = mat([[1, 2], [2, 4]], GF(5))
        r, basis = rank_kernel(f)
        assert r == 1
        assert basis == [(1, 2)]  # -1/2 = 2 mod 5
        assert f.apply(basis[0]) == (0, 0)


class TestInverse:
    def test_inverse_roundtrip(self):
        f = mat([[1, 1], [0, 1]])
        assert compose(f, inverse(f)) == LinMap.identity(sp(2))

    def test_singular_raises(self):
        with pytest.raises(SingularMapError):
            inverse(mat([[1, 2], [2, 4]]))


class TestCoequalizer:
    def test_equal_maps_give_invertible_quotient(self):
        f = mat([[1, 0], [0, 2]])
        q = coequalizer(f, f)
        assert q.codomain.dim == 2
        assert rank(q) == 2

    def test_identity_vs_zero_collapses_everything(self):
        n = 3
        q = coequalizer(LinMap.identity(sp(n)), LinMap.zero(sp(n), sp(n)))
        assert q.codomain.dim == 0

    def test_balancing_maps_give_rank(self):
        # q o f = q o g and q surjective
        rng = np.random.default_rng(3)
        f = random_linmap(rng, sp(4), sp(3))
        g = random_linmap(rng, sp(4), sp(3))
        q = coequalizer(f, g)
        assert compose(q, f) == compose(q, g)
        assert rank(q) == q.codomain.dim
        assert q.codomain.dim == 3 - rank(f - g)


class TestChainHomology:
    def test_zero_differentials(self):
        d1 = LinMap.zero(sp(3), sp(2))
        d2 = LinMap.zero(sp(2), sp(3))
        assert chain_homology([d1, d2]) == [2, 3, 2]

    def test_exact_two_term(self):
        assert chain_homology([LinMap.identity(sp(1))]) == [0, 0]

    def test_koszul_style(self):
        d1 = mat([[1, 1]])  # k^2 -> k
        d2 = LinMap.zero(sp(1), sp(2))  # k -> k^2 is zero here
        assert chain_homology([d1, d2]) == [0, 1, 1]

    def test_non_complex_rejected(self):
        d1 = mat([[1, 0]])
        d2 = mat([[1], [0]])
        with pytest.raises(ComplexViolationError):
            chain_homology([d1, d2])


@st.composite
def small_linmap_chain(draw):
    dims = draw(st.lists(st.integers(1, 4), min_size=4, max_size=4))
    seed = draw(st.integers(0, 2**31))
    rng = np.random.default_rng(seed)
    spaces = [sp(d) for d in dims]
    f = random_linmap(rng, spaces[1], spaces[0])
    g = random_linmap(rng, spaces[2], spaces[1])
    h = random_linmap(rng, spaces[3], spaces[2])
    return f, g, h


@settings(max_examples=40, deadline=None)
@given(small_linmap_chain())
def test_compose_associative(chain):
    f, g, h = chain
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_kron_functorial(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (int(d) for d in rng.integers(1, 4, 3))
    f = random_linmap(rng, sp(a), sp(b))
    fprime = random_linmap(rng, sp(c), sp(a))
    g = random_linmap(rng, sp(b), sp(a))
    gprime = random_linmap(rng, sp(a), sp(b))
    lhs = kron(compose(f, fprime), compose(g, gprime))
    rhs = compose(kron(f, g), kron(fprime, gprime))
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_kernel_vectors_annihilated(seed):
    rng = np.random.default_rng(seed)
    m, n = (int(d) for d in rng.integers(1, 6, 2))
    f = random_linmap(rng, sp(n), sp(m))
    r, basis = rank_kernel(f)
    assert r + len(basis) == n
    for v in basis:
        assert f.apply(v) == tuple([0] * m)
