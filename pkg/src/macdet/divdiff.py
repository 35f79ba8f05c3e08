"""Divided-difference operator calculus on concrete polynomials.

Words of divided differences, resultants of scaled alphabets, the chi
symmetrizing operators, q-shift substitutions, the scalar product
<f, g> = (longest divided-difference word applied to f*g), and the raw
subset-sum forms of the Macdonald and creation operators.

Alphabets here are tuples of concrete letters x_i with optional scalar
multipliers; formal extra alphabets in identities are realized as extra
trailing variables.  The lambda-ring complete function of a signed sum
of scaled alphabets (complete_of) is the workhorse for the identity
test harness in the verify module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .multipoly import MultiPoly, divide_exact_binomial
from .qt import QT_ONE, QT_RAT_ONE, Q, QtPoly, QtRat, T

Letter = tuple[int, QtRat]


@dataclass(frozen=True)
class AlphabetSpec:
    """A finite list of scaled concrete letters (index, scale)."""

    letters: tuple[Letter, ...]

    @classmethod
    def of(cls, indices: Iterable[int], scale: "QtRat | QtPoly | int" = 1) -> "AlphabetSpec":
        c = QtRat._coerce(scale)
        if c is None or c.is_zero():
            raise ValueError("alphabet scale must be a nonzero scalar")
        return cls(tuple((i, c) for i in indices))

    @classmethod
    def prefix(cls, k: int, scale: "QtRat | QtPoly | int" = 1) -> "AlphabetSpec":
        return cls.of(range(1, k + 1), scale)

    @classmethod
    def span(cls, lo: int, hi: int, scale: "QtRat | QtPoly | int" = 1) -> "AlphabetSpec":
        return cls.of(range(lo, hi + 1), scale)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.letters)

    def scaled(self, scale: "QtRat | QtPoly | int") -> "AlphabetSpec":
        c = QtRat._coerce(scale)
        if c is None or c.is_zero():
            raise ValueError("alphabet scale must be a nonzero scalar")
        return AlphabetSpec(tuple((i, s * c) for i, s in self.letters))


def resultant(a: AlphabetSpec, b: AlphabetSpec, m: int) -> MultiPoly:
    """Product of (alpha - beta) over letters alpha of a, beta of b."""
    if set(a.indices()) & set(b.indices()):
        raise ValueError("resultant needs disjoint alphabets")
    out = MultiPoly.const(m, 1)
    for i, ci in a.letters:
        xi = MultiPoly.variable(m, i) * ci
        for j, cj in b.letters:
            out = out * (xi - MultiPoly.variable(m, j) * cj)
    return out


# ---------------------------------------------------------------------------
# divided differences and words

def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    return f.divided_difference(i)


def divided_difference_word(f: MultiPoly, word: Sequence[int]) -> MultiPoly:
    for i in word:
        f = f.divided_difference(i)
    return f


def longest_word(size: int) -> list[int]:
    """A reduced word for the longest element of the symmetric group."""
    return [i for width in range(1, size) for i in range(width, 0, -1)]


def slot_word(k: int, n: int) -> list[int]:
    """Word moving the single letter x_k across x_{k+1}..x_n."""
    return list(range(k, n))


def block_word(k: int, n: int) -> list[int]:
    """Word moving the block x_1..x_k across x_{k+1}..x_n."""
    out: list[int] = []
    for r in range(k):
        out.extend(range(k - r, n - r))
    return out


# ---------------------------------------------------------------------------
# chi operators (resultant multiplication followed by a word)

def _check_chi_params(f: MultiPoly, k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if f.m < n:
        raise ValueError(f"polynomial has {f.m} variables, needs at least {n}")


def chi_slot(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Symmetrize the slot at position k against x_{k+1}..x_n."""
    _check_chi_params(f, k, n)
    inv_t = QtRat(QT_ONE, T)
    res = resultant(AlphabetSpec.of((k,)),
                    AlphabetSpec.span(k + 1, n, inv_t), f.m)
    return divided_difference_word(f * res, slot_word(k, n))


def chi_block(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Symmetrize the block x_1..x_k against x_{k+1}..x_n."""
    _check_chi_params(f, k, n)
    inv_t = QtRat(QT_ONE, T)
    res = resultant(AlphabetSpec.prefix(k),
                    AlphabetSpec.span(k + 1, n, inv_t), f.m)
    return divided_difference_word(f * res, block_word(k, n))


def chi_omega(f: MultiPoly, k: int) -> MultiPoly:
    """Antisymmetrize-and-normalize within x_1..x_k (full symmetrizer)."""
    if k < 1 or f.m < k:
        raise ValueError(f"bad chi_omega parameters k={k}, m={f.m}")
    inv_t = QtRat(QT_ONE, T)
    res = MultiPoly.const(f.m, 1)
    for i in range(1, k + 1):
        xi = MultiPoly.variable(f.m, i)
        for j in range(i + 1, k + 1):
            res = res * (xi - MultiPoly.variable(f.m, j) * inv_t)
    return divided_difference_word(f * res, longest_word(k))


def chi_op(f: MultiPoly, which: str, k: int, n: int) -> MultiPoly:
    if which == "chi_k_slot":
        return chi_slot(f, k, n)
    if which == "chi_block":
        return chi_block(f, k, n)
    if which == "chi_omega":
        return chi_omega(f, k)
    raise ValueError(f"unknown chi operator {which!r}")


def t_factorial(k: int) -> QtRat:
    """The t-factorial k_t! = product of (1 + 1/t + ... + 1/t^{i-1})."""
    num = QT_ONE
    for i in range(1, k + 1):
        num = num * sum((T ** j for j in range(i)), QtPoly())
    return QtRat(num, T ** (k * (k - 1) // 2))


def t_slot_image(k: int, n: int) -> QtRat:
    """1 + t^{-1} + ... + t^{k-n}: the slot operator's image of 1."""
    num = sum((T ** j for j in range(n - k + 1)), QtPoly())
    return QtRat(num, T ** (n - k))


# ---------------------------------------------------------------------------
# substitutions

def theta_subst(f: MultiPoly, ell: int, mode: str = "q-shift") -> MultiPoly:
    if not 1 <= ell <= f.m:
        raise ValueError(f"variable index {ell} out of range")
    if mode == "q-shift":
        return f.scale_var(ell, Q)
    if mode == "t-shift-formal":
        return f.scale_var(ell, T)
    raise ValueError(f"unknown substitution mode {mode!r}")


def _theta_subset(f: MultiPoly, subset: Iterable[int]) -> MultiPoly:
    for i in subset:
        f = f.scale_var(i, Q)
    return f


# ---------------------------------------------------------------------------
# scalar product and adjoint bases

class ScalarProduct(NamedTuple):
    value: QtRat | None
    polynomial: MultiPoly
    constant: bool


def dd_scalar_product(f: MultiPoly, g: MultiPoly, m: int) -> ScalarProduct:
    """Longest-word divided difference of f*g over x_1..x_m.

    The value field holds the constant result; when the degrees do not
    balance the full polynomial is reported with constant=False.
    """
    prod = f.extend(m) * g.extend(m)
    out = divided_difference_word(prod, longest_word(m))
    if out.is_constant():
        return ScalarProduct(out.constant_value(), out, True)
    return ScalarProduct(None, out, False)


def xbar_monomial(exps: Sequence[int], m: int) -> MultiPoly:
    """The product of (-x_i)^{e_i}: the monomial dual to the e-products."""
    exps = tuple(exps)
    if len(exps) > m:
        raise ValueError("exponent vector longer than variable count")
    exps = exps + (0,) * (m - len(exps))
    sign = -1 if sum(exps) % 2 else 1
    return MultiPoly.monomial(m, exps, sign)


def elementary_poly(e: int, letters: Sequence[int], m: int) -> MultiPoly:
    """Elementary symmetric polynomial of degree e in the given letters."""
    if e < 0:
        return MultiPoly.zero(m)
    if e == 0:
        return MultiPoly.const(m, 1)
    if e > len(letters):
        return MultiPoly.zero(m)
    out = MultiPoly.zero(m)
    for combo in combinations(letters, e):
        term = MultiPoly.const(m, 1)
        for i in combo:
            term = term * MultiPoly.variable(m, i)
        out = out + term
    return out


def e_product_dual_basis(exps: Sequence[int], m: int) -> MultiPoly:
    """Product over j of e_{exps_j}(x_1..x_{j-1}): the basis adjoint to
    the xbar monomials under the longest-word scalar product."""
    exps = tuple(exps)
    if len(exps) > m:
        raise ValueError("index vector longer than variable count")
    out = MultiPoly.const(m, 1)
    for j, e in enumerate(exps, start=1):
        out = out * elementary_poly(e, range(1, j), m)
        if out.is_zero():
            break
    return out


# ---------------------------------------------------------------------------
# lambda-ring complete functions of signed scaled alphabets

Component = tuple[int, QtRat, tuple[int, ...]]  # (sign, scale, letters)


@lru_cache(maxsize=None)
def _h_letters(e: int, letters: tuple[int, ...], m: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.const(m, 1)
    if not letters:
        return MultiPoly.zero(m)
    head, tail = letters[-1], letters[:-1]
    x = MultiPoly.variable(m, head)
    out = MultiPoly.zero(m)
    power = MultiPoly.const(m, 1)
    for d in range(e + 1):
        out = out + power * _h_letters(e - d, tail, m)
        power = power * x
    return out


@lru_cache(maxsize=None)
def _e_letters(e: int, letters: tuple[int, ...], m: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.const(m, 1)
    if e < 0 or e > len(letters):
        return MultiPoly.zero(m)
    head, tail = letters[-1], letters[:-1]
    return _e_letters(e, tail, m) + MultiPoly.variable(m, head) * _e_letters(e - 1, tail, m)


def _component_complete(e: int, comp: Component, m: int) -> MultiPoly:
    sign, scale, letters = comp
    if e == 0:
        return MultiPoly.const(m, 1)
    if sign > 0:
        base = _h_letters(e, letters, m)
        factor = scale ** e
    else:
        base = _e_letters(e, letters, m)
        factor = (-scale) ** e
    if base.is_zero():
        return base
    return base * factor


def complete_of(j: int, components: Sequence[Component], m: int) -> MultiPoly:
    """Complete function of degree j of a signed sum of scaled alphabets.

    Each component (sign, scale, letters) contributes the alphabet
    scale*(x_letters) with multiplicity sign (+1 or -1); degrees are
    convolved across components.
    """
    if j < 0:
        return MultiPoly.zero(m)
    acc: list[MultiPoly] = [MultiPoly.const(m, 1)] + [MultiPoly.zero(m)] * j
    for comp in components:
        nxt = [MultiPoly.zero(m) for _ in range(j + 1)]
        for d in range(j + 1):
            if acc[d].is_zero():
                continue
            for e in range(j + 1 - d):
                piece = _component_complete(e, comp, m)
                if not piece.is_zero():
                    nxt[d + e] = nxt[d + e] + acc[d] * piece
        acc = nxt
    return acc[j]


# ---------------------------------------------------------------------------
# Vandermonde bookkeeping for subset-sum operators

@lru_cache(maxsize=None)
def _vandermonde(indices: tuple[int, ...], m: int) -> MultiPoly:
    out = MultiPoly.const(m, 1)
    for a, b in combinations(indices, 2):
        out = out * (MultiPoly.variable(m, a) - MultiPoly.variable(m, b))
    return out


def _divide_vandermonde(f: MultiPoly, indices: tuple[int, ...]) -> MultiPoly:
    for a, b in combinations(indices, 2):
        f = divide_exact_binomial(f, a, b)
    return f


def _subset_factors(universe: tuple[int, ...], subset: tuple[int, ...],
                    m: int) -> tuple[int, MultiPoly]:
    """Sign and cofactor D with R(X_subset, X_rest) * D = sign * Vandermonde."""
    rest = tuple(i for i in universe if i not in subset)
    inversions = 0
    sub_set = set(subset)
    for pos, a in enumerate(universe):
        if a in sub_set:
            inversions += sum(1 for b in universe[:pos] if b not in sub_set)
    cofactor = _vandermonde(subset, m) * _vandermonde(rest, m)
    return (-1 if inversions % 2 else 1, cofactor)


def _rename_by_position(f: MultiPoly, target: Sequence[int]) -> MultiPoly:
    """Relabel variable at position p (1-based) to target[p-1]."""
    out: dict[tuple[int, ...], QtRat] = {}
    for exps, coef in f.terms.items():
        lst = [0] * f.m
        for p, e in enumerate(exps):
            if e:
                lst[target[p] - 1] += e
        out[tuple(lst)] = coef
    return MultiPoly(f.m, out)


def lagrange_sum(f: MultiPoly, n: int) -> MultiPoly:
    """Summation form of the k=1 symmetrizer, for f symmetric in x_2..x_n."""
    return sylvester_sum(f, 1, n)


def sylvester_sum(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Subset-summation form of the block symmetrizer.

    Valid for f symmetric separately in x_1..x_k and x_{k+1}..x_n; the
    sum of C_I f / R(X_I, X_rest) is computed exactly over the common
    Vandermonde denominator.
    """
    if not 1 <= k <= n or f.m < n:
        raise ValueError(f"bad sylvester parameters k={k}, n={n}, m={f.m}")
    universe = tuple(range(1, n + 1))
    total = MultiPoly.zero(f.m)
    for subset in combinations(universe, k):
        rest = tuple(i for i in universe if i not in subset)
        sign, cofactor = _subset_factors(universe, subset, f.m)
        moved = _rename_by_position(f, subset + rest + tuple(range(n + 1, f.m + 1)))
        total = total + moved * cofactor * sign
    return _divide_vandermonde(total, universe)


# ---------------------------------------------------------------------------
# raw Macdonald and creation operators

def _require_symmetric(f: MultiPoly, n: int, who: str) -> None:
    if not f.is_symmetric(n):
        raise ValueError(f"{who} needs input symmetric in x_1..x_{n}")


def _macdonald_on_letters(f: MultiPoly, k: int, letters: tuple[int, ...]) -> MultiPoly:
    """Subset-sum Macdonald operator over an arbitrary letter set."""
    m = f.m
    total = MultiPoly.zero(m)
    for subset in combinations(letters, k):
        rest = tuple(i for i in letters if i not in subset)
        sign, cofactor = _subset_factors(letters, subset, m)
        res = MultiPoly.const(m, 1)
        for a in subset:
            xa = MultiPoly.variable(m, a) * QtRat(T)
            for b in rest:
                res = res * (xa - MultiPoly.variable(m, b))
        total = total + res * _theta_subset(f, subset) * cofactor * sign
    out = _divide_vandermonde(total, letters)
    return out * QtRat(T ** (k * (k - 1) // 2))


def raw_macdonald_op(f: MultiPoly, k: int, n: int, route: str = "subset") -> MultiPoly:
    """The k-th Macdonald operator on a symmetric polynomial in x_1..x_n.

    route "subset" is the defining subset sum with resultant ratios;
    route "dd" is the equivalent block-symmetrizer composition.
    """
    if not 1 <= k <= n or f.m < n:
        raise ValueError(f"bad operator parameters k={k}, n={n}, m={f.m}")
    _require_symmetric(f, n, "raw_macdonald_op")
    if route == "subset":
        return _macdonald_on_letters(f, k, tuple(range(1, n + 1)))
    if route == "dd":
        g = _theta_subset(f, range(1, k + 1))
        res = resultant(AlphabetSpec.prefix(k, QtRat(T)),
                        AlphabetSpec.span(k + 1, n), f.m)
        out = divided_difference_word(g * res, block_word(k, n))
        return out * QtRat(T ** (k * (k - 1) // 2))
    raise ValueError(f"unknown route {route!r}")


def _omega_rotate(f: MultiPoly, k: int) -> MultiPoly:
    """Apply the leftward cycle sending the x_k slot content to x_1."""
    out = theta_subst(f, k, "q-shift")
    for j in range(k - 1, 0, -1):
        out = out.swap_vars(j, j + 1)
    return out


def raw_creation_op(f: MultiPoly, k: int, n: int, route: str = "subset") -> MultiPoly:
    """The k-th creation operator on a symmetric polynomial in x_1..x_n.

    route "subset": sum over k-subsets of x^I times a resultant ratio
    times the alternating t-sum of sub-alphabet Macdonald operators.
    route "chi": the factored form through the chi operators.
    """
    if not 1 <= k <= n or f.m < n:
        raise ValueError(f"bad operator parameters k={k}, n={n}, m={f.m}")
    _require_symmetric(f, n, "raw_creation_op")
    m = f.m
    if route == "subset":
        universe = tuple(range(1, n + 1))
        total = MultiPoly.zero(m)
        for subset in combinations(universe, k):
            rest = tuple(i for i in universe if i not in subset)
            sign, cofactor = _subset_factors(universe, subset, m)
            g = MultiPoly.zero(m)
            t_pow = QT_RAT_ONE
            for ell in range(k + 1):
                piece = _macdonald_on_letters(f, ell, subset) if ell else f
                g = g + piece * t_pow
                t_pow = t_pow * QtRat(-T)
            xprod = MultiPoly.const(m, 1)
            inv_t = QtRat(QT_ONE, T)
            for a in subset:
                xa = MultiPoly.variable(m, a)
                xprod = xprod * xa
                for b in rest:
                    g_res = xa - MultiPoly.variable(m, b) * inv_t
                    xprod = xprod * g_res
            total = total + xprod * g * cofactor * sign
        return _divide_vandermonde(total, universe)
    if route == "chi":
        g = f
        for i in range(1, k + 1):
            g = g - _omega_rotate(g, k) * QtRat(T ** i)
        for i in range(1, k + 1):
            g = g * MultiPoly.variable(m, i)
        g = chi_omega(g, k)
        g = chi_block(g, k, n)
        return g * t_factorial(k).inverse()
    raise ValueError(f"unknown route {route!r}")
