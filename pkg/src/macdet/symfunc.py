"""Symmetric functions as exact basis expansions.

A SymExpansion is a homogeneous symmetric function written in one basis:
monomial (m), complete (h), Schur (s), power sum (p), or the modified
pair s-mod / h-mod, whose members are Schur and complete functions of
the substituted alphabet X(t-1)/(q-1).  Coefficients are QtRat.

The module owns the signed h-expansion of a Schur function (the ordered
expansion, generated by the bar moves that send adjacent components
(a, b) to (b-1, a+1) with a sign flip), composition straightening,
conversions among the bases, skew Schur functions, and plethystic
realization on a concrete alphabet x_1..x_n.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, NamedTuple

from .multipoly import MultiPoly
from .partitions import (
    Composition,
    Partition,
    distinct_permutations,
    dominated_by,
    extension_key,
    pad,
    partition,
    partitions_of,
)
from .qt import QT_ONE, QT_RAT_ONE, QT_RAT_ZERO, Q, QtPoly, QtRat, T

BASIS_TAGS = ("m", "h", "s", "p", "s-mod", "h-mod")
_PLAIN = ("m", "h", "s", "p")
_MODIFIED = ("s-mod", "h-mod")


class SignedComposition(NamedTuple):
    alpha: Composition
    sign: int


class SymExpansion:
    """Homogeneous symmetric function in a single declared basis."""

    __slots__ = ("basis", "weight", "terms")

    def __init__(self, basis: str, weight: int,
                 terms: dict[Partition, QtRat] | None = None):
        if basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis tag {basis!r}")
        if weight < 0:
            raise ValueError("negative weight")
        clean: dict[Partition, QtRat] = {}
        if terms:
            for lam, coef in terms.items():
                if sum(lam) != weight:
                    raise ValueError(
                        f"partition {lam} has weight {sum(lam)}, expected {weight}")
                if coef:
                    clean[lam] = coef
        self.basis = basis
        self.weight = weight
        self.terms = clean

    @classmethod
    def zero(cls, basis: str, weight: int) -> "SymExpansion":
        return cls(basis, weight)

    @classmethod
    def unit(cls, basis: str) -> "SymExpansion":
        return cls(basis, 0, {(): QT_RAT_ONE})

    @classmethod
    def single(cls, basis: str, lam: Partition,
               coeff: "QtRat | QtPoly | int" = 1) -> "SymExpansion":
        lam = partition(lam)
        c = QtRat._coerce(coeff)
        if c is None:
            raise TypeError(f"bad coefficient {coeff!r}")
        return cls(basis, sum(lam), {lam: c})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Partition) -> QtRat:
        return self.terms.get(partition(lam), QT_RAT_ZERO)

    def support(self) -> tuple[Partition, ...]:
        return tuple(sorted(self.terms, key=extension_key))

    def sorted_terms(self) -> list[tuple[Partition, QtRat]]:
        return [(lam, self.terms[lam]) for lam in self.support()]

    def _check_compatible(self, other: "SymExpansion") -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.weight != other.weight:
            raise ValueError(f"weight mismatch: {self.weight} vs {other.weight}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return (self.basis == other.basis and self.weight == other.weight
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.basis, self.weight, frozenset(self.terms.items())))

    def __add__(self, other: "SymExpansion") -> "SymExpansion":
        if not isinstance(other, SymExpansion):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for lam, coef in other.terms.items():
            cur = out.get(lam)
            val = coef if cur is None else cur + coef
            if val:
                out[lam] = val
            else:
                out.pop(lam, None)
        return SymExpansion(self.basis, self.weight, out)

    def __sub__(self, other: "SymExpansion") -> "SymExpansion":
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SymExpansion":
        return SymExpansion(self.basis, self.weight,
                            {lam: -c for lam, c in self.terms.items()})

    def __mul__(self, scalar: "QtRat | QtPoly | int") -> "SymExpansion":
        c = QtRat._coerce(scalar)
        if c is None:
            return NotImplemented
        if c.is_zero():
            return SymExpansion(self.basis, self.weight)
        return SymExpansion(self.basis, self.weight,
                            {lam: coef * c for lam, coef in self.terms.items()})

    __rmul__ = __mul__

    def map_coeffs(self, fn: Callable[[QtRat], QtRat]) -> "SymExpansion":
        return SymExpansion(self.basis, self.weight,
                            {lam: fn(c) for lam, c in self.terms.items()})

    def swap_qt(self) -> "SymExpansion":
        return self.map_coeffs(lambda c: c.swap_qt())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        tag = self.basis
        chunks = []
        for lam, coef in self.sorted_terms():
            label = f"{tag}[{','.join(map(str, lam)) or '0'}]"
            if coef.is_one():
                chunks.append(label)
            else:
                chunks.append(f"({coef})*{label}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"SymExpansion({self})"


# ---------------------------------------------------------------------------
# ordered expansion and straightening

def ordered_expansion(mu: Partition, n: int) -> dict[Composition, int]:
    """Signed h-indexing compositions of the Schur determinant for mu.

    The support is generated from mu (padded to length n) by the signed
    moves (a, b) -> (b-1, a+1) on adjacent components, discarding vectors
    with a negative component; each surviving composition carries the
    parity of moves needed to reach it.
    """
    return dict(_ordered_expansion_cached(partition(mu), n))


@lru_cache(maxsize=None)
def _ordered_expansion_cached(mu: Partition, n: int) -> tuple[tuple[Composition, int], ...]:
    if len(mu) > n:
        raise ValueError(f"partition {mu} longer than n={n}")
    start = pad(mu, n)
    seen: dict[Composition, int] = {start: 1}
    frontier = [start]
    while frontier:
        fresh = []
        for alpha in frontier:
            sign = seen[alpha]
            for i in range(n - 1):
                lo = alpha[i + 1] - 1
                if lo < 0:
                    continue
                beta = alpha[:i] + (lo, alpha[i] + 1) + alpha[i + 2:]
                if beta not in seen:
                    seen[beta] = -sign
                    fresh.append(beta)
        frontier = fresh
    return tuple(sorted(seen.items()))


def straighten(alpha: Composition) -> tuple[int, Partition] | None:
    """Sort a composition to the partition its determinant row set yields.

    Returns (sign, partition), or None when the shifted vector has a
    repeat (the determinant has two equal rows and vanishes).
    """
    n = len(alpha)
    if any(a < 0 for a in alpha):
        return None
    shifted = [alpha[i] + (n - 1 - i) for i in range(n)]
    if len(set(shifted)) < n:
        return None
    inversions = sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    lam = tuple(ordered[i] - (n - 1 - i) for i in range(n))
    return (-1 if inversions % 2 else 1, partition(lam))


# ---------------------------------------------------------------------------
# transition maps among m, h, s, p (integer or rational coefficients)

IntExpansion = dict[Partition, int]


def _concat(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _horizontal_strips(nu: Partition, k: int) -> tuple[Partition, ...]:
    """All lam containing nu with lam/nu a horizontal k-strip."""
    rows = len(nu)
    out: list[Partition] = []

    def build(i: int, prev_new: int, remaining: int, acc: tuple[int, ...]) -> None:
        if i == rows:
            # one new row below everything, at most nu_{rows} wide
            cap = nu[rows - 1] if rows else 0
            if remaining == 0:
                out.append(partition(acc))
            elif remaining <= cap:
                out.append(partition(acc + (remaining,)))
            return
        base = nu[i]
        upper = base + remaining
        if i > 0:
            upper = min(upper, prev_new)
        lo_cap = nu[i - 1] if i > 0 else None
        for new in range(base, upper + 1):
            if lo_cap is not None and new > lo_cap:
                break
            build(i + 1, new, remaining - (new - base), acc + (new,))

    def build_first(remaining: int) -> None:
        if rows == 0:
            if remaining == 0:
                out.append(())
            else:
                out.append((remaining,))
            return
        build(0, 0, remaining, ())

    build_first(k)
    return tuple(out)


def _pieri(expansion: IntExpansion, k: int) -> IntExpansion:
    """Multiply an s-indexed integer expansion by h_k."""
    out: IntExpansion = {}
    for nu, coef in expansion.items():
        for lam in _horizontal_strips(nu, k):
            out[lam] = out.get(lam, 0) + coef
    return {lam: c for lam, c in out.items() if c}


@lru_cache(maxsize=None)
def _h_to_s(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not mu:
        return (((), 1),)
    prefix = dict(_h_to_s(mu[:-1]))
    return tuple(sorted(_pieri(prefix, mu[-1]).items()))


def kostka(lam: Partition, mu: Partition) -> int:
    """Multiplicity of m_mu in s_lam (equals coeff of s_lam in h_mu)."""
    return dict(_h_to_s(partition(mu))).get(partition(lam), 0)


@lru_cache(maxsize=None)
def _s_to_h(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    out: IntExpansion = {}
    for alpha, sign in _ordered_expansion_cached(mu, len(mu)):
        key = partition(sorted(alpha, reverse=True))
        out[key] = out.get(key, 0) + sign
    return tuple(sorted((k, v) for k, v in out.items() if v))


@lru_cache(maxsize=None)
def _s_to_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    w = sum(lam)
    row = []
    for mu in partitions_of(w):
        if dominated_by(mu, lam):
            k = kostka(lam, mu)
            if k:
                row.append((mu, k))
    return tuple(sorted(row))


@lru_cache(maxsize=None)
def _m_to_s(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    out: IntExpansion = {mu: 1}
    for nu, k in _s_to_m(mu):
        if nu == mu:
            continue
        for rho, c in _m_to_s(nu):
            out[rho] = out.get(rho, 0) - k * c
    return tuple(sorted((k, v) for k, v in out.items() if v))


RatExpansion = dict[Partition, QtRat]


@lru_cache(maxsize=None)
def _h_to_p(k: int) -> tuple[tuple[Partition, QtRat], ...]:
    """Power-sum expansion of the single complete function h_k."""
    if k == 0:
        return (((), QT_RAT_ONE),)
    acc: RatExpansion = {}
    for i in range(1, k + 1):
        for rho, c in _h_to_p(k - i):
            key = _concat(rho, (i,))
            val = c / k
            cur = acc.get(key)
            val = val if cur is None else cur + val
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _p_to_h(k: int) -> tuple[tuple[Partition, QtRat], ...]:
    """Complete-function expansion of the single power sum p_k."""
    if k == 0:
        return (((), QT_RAT_ONE),)
    acc: RatExpansion = {(k,): QtRat.from_int(k)}
    for i in range(1, k):
        for rho, c in _p_to_h(k - i):
            key = _concat(rho, (i,))
            val = -c
            cur = acc.get(key)
            val = val if cur is None else cur + val
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)
    return tuple(sorted(acc.items()))


def _mul_concat_rat(a: RatExpansion, b: RatExpansion) -> RatExpansion:
    out: RatExpansion = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = _concat(la, lb)
            val = ca * cb
            cur = out.get(key)
            val = val if cur is None else cur + val
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _expand_parts(mu: Partition, table: Callable[[int], Iterable[tuple[Partition, QtRat]]]) -> RatExpansion:
    """Expand a multiplicative basis element indexed by mu part by part."""
    acc: RatExpansion = {(): QT_RAT_ONE}
    for part in mu:
        acc = _mul_concat_rat(acc, dict(table(part)))
    return acc


# ---------------------------------------------------------------------------
# public conversion

def _convert_step(f: SymExpansion, source: str, target: str) -> SymExpansion:
    """One edge of the conversion graph on plain tags m, h, s, p."""
    tables = {
        ("s", "h"): _s_to_h,
        ("h", "s"): _h_to_s,
        ("s", "m"): _s_to_m,
        ("m", "s"): _m_to_s,
        ("h", "p"): lambda lam: _expand_parts(lam, _h_to_p).items(),
        ("p", "h"): lambda lam: _expand_parts(lam, _p_to_h).items(),
    }
    table = tables[(source, target)]
    out: RatExpansion = {}
    for lam, c in f.terms.items():
        for rho, k in table(lam):
            val = c * k
            cur = out.get(rho)
            val = val if cur is None else cur + val
            if val:
                out[rho] = val
            else:
                out.pop(rho, None)
    return SymExpansion(target, f.weight, out)


_ROUTES: dict[tuple[str, str], tuple[str, ...]] = {
    ("s", "h"): ("h",), ("h", "s"): ("s",),
    ("s", "m"): ("m",), ("m", "s"): ("s",),
    ("h", "p"): ("p",), ("p", "h"): ("h",),
    ("h", "m"): ("s", "m"), ("m", "h"): ("s", "h"),
    ("s", "p"): ("h", "p"), ("p", "s"): ("h", "s"),
    ("m", "p"): ("s", "h", "p"), ("p", "m"): ("h", "s", "m"),
}


def convert_basis(f: SymExpansion, target: str) -> SymExpansion:
    """Re-express f exactly in another basis.

    Conversions stay within {m, h, s, p} or within {s-mod, h-mod}; the
    modified/unmodified boundary is crossed only by realization.
    """
    if target not in BASIS_TAGS:
        raise ValueError(f"unknown basis tag {target!r}")
    if f.basis == target:
        return SymExpansion(f.basis, f.weight, dict(f.terms))
    if (f.basis in _MODIFIED) != (target in _MODIFIED):
        raise ValueError(f"no conversion path {f.basis} -> {target}")
    if f.basis in _MODIFIED:
        plain = SymExpansion(f.basis[0], f.weight, dict(f.terms))
        done = convert_basis(plain, target[0])
        return SymExpansion(target, f.weight, dict(done.terms))
    cur = f
    source = f.basis
    for step in _ROUTES[(source, target)]:
        cur = _convert_step(cur, source, step)
        source = step
    return cur


# ---------------------------------------------------------------------------
# skew Schur functions

def skew_schur(lam: Partition, mu: Partition) -> SymExpansion:
    """h-basis expansion of the skew Schur function for mu inside lam.

    Expands the determinant with (i,j) entry h_{lam_i - mu_j - i + j}
    over permutations; returns the zero expansion when mu is not
    contained in lam.
    """
    lam = partition(lam)
    mu = partition(mu)
    w = sum(lam) - sum(mu)
    if len(mu) > len(lam) or any(
            mu[i] > lam[i] for i in range(len(mu))) or w < 0:
        return SymExpansion.zero("h", max(w, 0))
    n = len(lam)
    muv = pad(mu, n)
    out: RatExpansion = {}
    from itertools import permutations as _perms
    for sigma in _perms(range(n)):
        entries = []
        ok = True
        for i in range(n):
            j = sigma[i]
            e = lam[i] - muv[j] - i + j
            if e < 0:
                ok = False
                break
            if e > 0:
                entries.append(e)
        if not ok:
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if sigma[i] > sigma[j])
        key = partition(sorted(entries, reverse=True))
        val = QtRat.from_int(-1 if inv % 2 else 1)
        cur = out.get(key)
        val = val if cur is None else cur + val
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return SymExpansion("h", w, out)


# ---------------------------------------------------------------------------
# realization on a concrete alphabet

@lru_cache(maxsize=None)
def powersum_poly(n: int, k: int) -> MultiPoly:
    """x_1^k + ... + x_n^k as a MultiPoly in n variables."""
    if k == 0:
        return MultiPoly.const(n, n)
    terms = {}
    for i in range(n):
        exps = [0] * n
        exps[i] = k
        terms[tuple(exps)] = QT_RAT_ONE
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def monomial_poly(n: int, lam: Partition) -> MultiPoly:
    """The monomial symmetric polynomial m_lam(x_1..x_n)."""
    if len(lam) > n:
        return MultiPoly.zero(n)
    terms = {}
    for alpha in distinct_permutations(lam, n):
        terms[alpha] = QT_RAT_ONE
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def _powersum_product(n: int, mu: Partition) -> MultiPoly:
    prod = MultiPoly.const(n, 1)
    for part in mu:
        prod = prod * powersum_poly(n, part)
    return prod


def _realize_p_expansion(p_terms: RatExpansion, n: int,
                         part_scale: Callable[[int], QtRat] | None) -> MultiPoly:
    total = MultiPoly.zero(n)
    for mu, coef in p_terms.items():
        if part_scale is not None:
            for part in mu:
                coef = coef * part_scale(part)
        if not coef:
            continue
        total = total + _powersum_product(n, mu) * coef
    return total


@lru_cache(maxsize=None)
def realize_in_variables(f: SymExpansion, n: int) -> MultiPoly:
    """Evaluate f on the alphabet x_1 + ... + x_n via the power-sum route."""
    if f.basis in _MODIFIED:
        raise ValueError("use realize_modified for s-mod/h-mod expansions")
    p_form = convert_basis(f, "p")
    return _realize_p_expansion(p_form.terms, n, None)


@lru_cache(maxsize=None)
def _modified_part_scale(k: int) -> QtRat:
    # p_k of the alphabet X(t-1)/(q-1) picks up (t^k - 1)/(q^k - 1)
    return QtRat(T ** k - QT_ONE, Q ** k - QT_ONE)


@lru_cache(maxsize=None)
def realize_modified(f: SymExpansion, n: int) -> MultiPoly:
    """Evaluate an s-mod/h-mod expansion on x_1..x_n, with the plethystic
    substitution sending each power sum p_k to p_k(x) * (t^k-1)/(q^k-1)."""
    if f.basis not in _MODIFIED:
        raise ValueError("realize_modified needs an s-mod or h-mod expansion")
    plain = SymExpansion(f.basis[0], f.weight, dict(f.terms))
    p_form = convert_basis(plain, "p")
    return _realize_p_expansion(p_form.terms, n, _modified_part_scale)


# ---------------------------------------------------------------------------
# JSON form

def sym_to_json(f: SymExpansion) -> dict:
    return {
        "basis": f.basis,
        "weight": f.weight,
        "terms": [
            {
                "partition": list(lam),
                "coeff_num": str(coef.num),
                "coeff_den": str(coef.den),
            }
            for lam, coef in f.sorted_terms()
        ],
    }


def sym_from_json(data: dict) -> SymExpansion:
    terms: RatExpansion = {}
    for item in data["terms"]:
        lam = partition(item["partition"])
        coef = QtRat(QtPoly.parse(item["coeff_num"]),
                     QtPoly.parse(item["coeff_den"]))
        terms[lam] = coef
    return SymExpansion(data["basis"], data["weight"], terms)
