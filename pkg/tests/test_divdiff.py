import random

import pytest

from macdet.divdiff import (
    AlphabetSpec,
    block_word,
    chi_block,
    chi_omega,
    chi_op,
    chi_slot,
    complete_of,
    dd_scalar_product,
    divided_difference_word,
    e_product_dual_basis,
    elementary_poly,
    lagrange_sum,
    longest_word,
    raw_creation_op,
    raw_macdonald_op,
    resultant,
    slot_word,
    sylvester_sum,
    t_factorial,
    t_slot_image,
    theta_subst,
    xbar_monomial,
)
from macdet.multipoly import MultiPoly
from macdet.partitions import partitions_of
from macdet.qt import QT_ONE, QtPoly, QtRat, T
from macdet.symfunc import SymExpansion, monomial_poly, realize_in_variables

from conftest import rand_rat


def _x(m, i):
    return MultiPoly.variable(m, i)


def _rand_poly_vars(rng, m, max_deg=2, terms=3):
    out = MultiPoly.zero(m)
    for _ in range(terms):
        exps = tuple(rng.randrange(max_deg + 1) for _ in range(m))
        out = out + MultiPoly.monomial(m, exps, rng.choice([-2, -1, 1, 2, 3]))
    return out


def _block_symmetric_sample(rng, k, n, m):
    """Random polynomial symmetric in x_1..x_k and in x_{k+1}..x_n."""
    out = MultiPoly.zero(m)
    for _ in range(rng.randrange(1, 3)):
        term = MultiPoly.const(m, rng.choice([-2, -1, 1, 2]))
        for _ in range(rng.randrange(0, 3)):
            e = rng.randrange(1, k + 1)
            term = term * elementary_poly(e, range(1, k + 1), m)
        for _ in range(rng.randrange(0, 3)):
            if n - k == 0:
                break
            e = rng.randrange(1, n - k + 1)
            term = term * elementary_poly(e, range(k + 1, n + 1), m)
        out = out + term
    return out


def test_words():
    assert slot_word(1, 3) == [1, 2]
    assert slot_word(3, 3) == []
    assert block_word(2, 4) == [2, 3, 1, 2]
    assert longest_word(3) == [1, 2, 1]
    assert longest_word(1) == []


def test_resultant_basic():
    m = 3
    r = resultant(AlphabetSpec.of((1,)), AlphabetSpec.of((2,)), m)
    assert r == _x(m, 1) - _x(m, 2)
    scaled = resultant(AlphabetSpec.of((1,), QtRat(T)), AlphabetSpec.of((2, 3)), m)
    assert scaled == (_x(m, 1) * QtRat(T) - _x(m, 2)) * (_x(m, 1) * QtRat(T) - _x(m, 3))
    with pytest.raises(ValueError):
        resultant(AlphabetSpec.of((1, 2)), AlphabetSpec.of((2, 3)), m)


def test_coxeter_relations():
    rng = random.Random(7)
    for _ in range(40):
        f = _rand_poly_vars(rng, 3, max_deg=3)
        a = divided_difference_word(f, [1, 2, 1])
        b = divided_difference_word(f, [2, 1, 2])
        assert a == b
        assert divided_difference_word(f, [1, 1]).is_zero()
    for _ in range(20):
        f = _rand_poly_vars(rng, 4, max_deg=2)
        assert divided_difference_word(f, [1, 3]) == divided_difference_word(f, [3, 1])


def test_chi_images_of_one():
    one6 = MultiPoly.const(6, 1)
    assert chi_omega(MultiPoly.const(2, 1), 2) == MultiPoly.const(2, 1) * (QT_ONE + QtRat(QT_ONE, T))
    for n in (2, 3, 4):
        one = MultiPoly.const(n, 1)
        for k in range(1, n + 1):
            img = chi_slot(one, k, n)
            assert img == MultiPoly.const(n, 1) * t_slot_image(k, n)
    assert chi_slot(MultiPoly.const(3, 1), 3, 3) == MultiPoly.const(3, 1)
    assert chi_op(one6, "chi_k_slot", 2, 3) == chi_slot(one6, 2, 3)
    assert chi_op(one6, "chi_block", 2, 3) == chi_block(one6, 2, 3)
    assert chi_op(one6, "chi_omega", 2, 6) == chi_omega(one6, 2)
    with pytest.raises(ValueError):
        chi_op(one6, "nope", 1, 2)


def test_chi_omega_image_is_t_factorial():
    for k in (1, 2, 3):
        one = MultiPoly.const(k, 1)
        assert chi_omega(one, k) == one * t_factorial(k)


def test_theta_subst():
    m = 2
    f = _x(m, 1) ** 2 * _x(m, 2)
    from macdet.qt import Q

    assert theta_subst(f, 1, "q-shift") == f * QtRat(Q ** 2)
    assert theta_subst(f, 2, "t-shift-formal") == f * QtRat(T)
    with pytest.raises(ValueError):
        theta_subst(f, 3)
    with pytest.raises(ValueError):
        theta_subst(f, 1, "sideways")


def test_scalar_product_duality_small():
    for m in (2, 3):
        rho = tuple(range(m))
        vectors = [()]
        for j in range(m):
            vectors = [v + (i,) for v in vectors for i in range(j + 1)]
        for I in vectors:
            for J in vectors:
                if sum(I) < sum(J):
                    sp = dd_scalar_product(
                        xbar_monomial(I, m),
                        e_product_dual_basis(tuple(r - j for r, j in zip(rho, J)), m),
                        m,
                    )
                    assert sp.polynomial.is_zero()
                elif sum(I) == sum(J):
                    sp = dd_scalar_product(
                        xbar_monomial(I, m),
                        e_product_dual_basis(tuple(r - j for r, j in zip(rho, J)), m),
                        m,
                    )
                    assert sp.constant
                    assert sp.value == (1 if I == J else 0)


def test_scalar_product_pinned_value():
    f4 = realize_in_variables(SymExpansion.single("m", (2, 1, 1)), 4)
    sp6 = dd_scalar_product(xbar_monomial((0, 1, 2, 3, 0, 5), 6), f4, 6)
    assert sp6.constant and sp6.value == -3
    sp8 = dd_scalar_product(xbar_monomial((0, 1, 2, 3, 0, 5, 6, 7), 8), f4, 8)
    assert sp8.constant and sp8.value == -3


def test_scalar_product_degree_mismatch_flag():
    m = 3
    f = _x(m, 1) ** 4 * _x(m, 2) ** 2
    sp = dd_scalar_product(f, MultiPoly.const(m, 1), m)
    assert not sp.constant and sp.value is None


def test_sylvester_subset_sum_matches_word():
    rng = random.Random(19)
    for n in (2, 3, 4):
        for k in range(1, min(2, n) + 1):
            for _ in range(8):
                f = _block_symmetric_sample(rng, k, n, n)
                lhs = divided_difference_word(f, block_word(k, n))
                assert lhs == sylvester_sum(f, k, n)


def test_lagrange_subset_sum_matches_word():
    rng = random.Random(23)
    for n in (2, 3):
        for _ in range(10):
            tail = _block_symmetric_sample(rng, 1, n, n) if n > 1 else MultiPoly.const(n, 1)
            f = _x(n, 1) ** rng.randrange(3) * tail
            lhs = divided_difference_word(f, slot_word(1, n))
            assert lhs == lagrange_sum(f, n)


def test_macdonald_operator_on_constant():
    one = MultiPoly.const(2, 1)
    expect = MultiPoly.const(2, 1) * QtRat(T + QT_ONE)
    assert raw_macdonald_op(one, 1, 2, route="subset") == expect
    assert raw_macdonald_op(one, 1, 2, route="dd") == expect


def test_macdonald_routes_agree():
    for n in (2, 3):
        samples = [MultiPoly.const(n, 1)]
        for w in (1, 2):
            for lam in partitions_of(w):
                if len(lam) <= n:
                    samples.append(monomial_poly(n, lam))
        for f in samples:
            for k in range(1, n + 1):
                a = raw_macdonald_op(f, k, n, route="subset")
                b = raw_macdonald_op(f, k, n, route="dd")
                assert a == b, (n, k, str(f))


def test_macdonald_rejects_asymmetric():
    f = _x(2, 1)
    with pytest.raises(ValueError):
        raw_macdonald_op(f, 1, 2)


def test_creation_on_empty():
    one = MultiPoly.const(1, 1)
    expect = _x(1, 1) * QtRat(QT_ONE - T)
    assert raw_creation_op(one, 1, 1, route="subset") == expect
    assert raw_creation_op(one, 1, 1, route="chi") == expect


def test_creation_routes_agree():
    for n in (2, 3):
        samples = [MultiPoly.const(n, 1)]
        for lam in [(1,), (2,), (1, 1)]:
            if len(lam) <= n:
                samples.append(monomial_poly(n, lam))
        for f in samples:
            for k in range(1, n + 1):
                a = raw_creation_op(f, k, n, route="subset")
                b = raw_creation_op(f, k, n, route="chi")
                assert a == b, (n, k, str(f))


def test_complete_of_basics():
    m = 3
    letters = (1, 2, 3)
    one = QtRat(1)
    for j in range(4):
        assert complete_of(j, [(1, one, letters)], m) == realize_in_variables(
            SymExpansion.single("h", (j,) if j else ()), m
        )
    assert complete_of(2, [(-1, one, letters)], m) == elementary_poly(2, letters, m)
    assert complete_of(3, [(-1, one, letters)], m) == -elementary_poly(3, letters, m)
    t = QtRat(T)
    single = (1,)
    for j in range(1, 5):
        got = complete_of(j, [(1, t, single), (-1, one, single)], 1)
        want = MultiPoly.monomial(1, (j,), 1) * QtRat(T ** (j - 1) * (T - QT_ONE), QT_ONE)
        assert got == want
    rng = random.Random(3)
    for _ in range(10):
        j = rng.randrange(4)
        split = complete_of(
            j, [(1, one, (1,)), (1, one, (2, 3))], m
        )
        assert split == complete_of(j, [(1, one, letters)], m)


def test_t_factorial_values():
    assert t_factorial(0) == QtRat(1)
    assert t_factorial(1) == QtRat(1)
    assert t_factorial(2) == QtRat(T + QT_ONE, T)
    assert t_slot_image(2, 4) == QtRat(T ** 2 + T + QT_ONE, T ** 2)
