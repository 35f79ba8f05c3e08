"""Exact arithmetic in Z[q,t] and its fraction field.

QtPoly is a sparse integer polynomial in the two formal parameters q and t.
QtRat is a reduced fraction of two QtPolys; Laurent monomials in q, t appear
as fractions with a monomial denominator.  Both types are immutable and
hashable, render to a canonical text form, and parse back from it.

Monomial order everywhere is graded lex with q before t: compare total
degree first, then q-degree.  Canonical text lists terms in ascending
order (constant first), and sign canonicalization makes the coefficient
of the first rendered term of a denominator or GCD positive, so equality
of fractions is plain structural equality and 1-q*t stays written that
way rather than as q*t-1.

GCDs are computed by a primitive polynomial remainder sequence over Z[t]
viewed as coefficients of powers of q, with integer-coefficient primitive
remainder sequences one level down.  No floating point anywhere.
"""

from __future__ import annotations

import heapq
from math import gcd as _igcd

Monomial = tuple[int, int]  # (q-degree, t-degree), both >= 0


def _grlex(key: Monomial) -> tuple[int, int]:
    return (key[0] + key[1], key[0])


class QtPoly:
    """Sparse polynomial in q and t with integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for key, coef in terms.items():
                if coef:
                    if key[0] < 0 or key[1] < 0:
                        raise ValueError(f"negative exponent in monomial {key}")
                    clean[key] = coef
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def const(cls, value: int) -> "QtPoly":
        return cls({(0, 0): value}) if value else cls()

    @classmethod
    def monomial(cls, coef: int, dq: int, dt: int) -> "QtPoly":
        return cls({(dq, dt): coef}) if coef else cls()

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> int:
        if not self.terms:
            return 0
        if set(self.terms) == {(0, 0)}:
            return self.terms[(0, 0)]
        raise ValueError(f"not a constant: {self}")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> tuple[Monomial, int]:
        """Leading (monomial, coefficient) in graded lex order, q before t."""
        key = max(self.terms, key=_grlex)
        return key, self.terms[key]

    def degrees(self) -> tuple[int, int]:
        """Componentwise maximum (q-degree, t-degree); (-1, -1) for zero."""
        if not self.terms:
            return (-1, -1)
        return (max(k[0] for k in self.terms), max(k[1] for k in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QtPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "QtPoly":
        return QtPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "QtPoly | int") -> "QtPoly":
        if isinstance(other, int):
            other = QtPoly.const(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        out = dict(big)
        for key, coef in small.items():
            val = out.get(key, 0) + coef
            if val:
                out[key] = val
            else:
                out.pop(key, None)
        return QtPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "QtPoly | int") -> "QtPoly":
        if isinstance(other, int):
            other = QtPoly.const(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "QtPoly | int") -> "QtPoly":
        if isinstance(other, int):
            return QtPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other: "QtPoly | int") -> "QtPoly":
        if isinstance(other, int):
            if not other:
                return QtPoly()
            return QtPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, QtPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        for (aq, at), ac in a.items():
            for (bq, bt), bc in b.items():
                key = (aq + bq, at + bt)
                val = out.get(key, 0) + ac * bc
                if val:
                    out[key] = val
                else:
                    del out[key]
        return QtPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "QtPoly":
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        result = QT_ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def shift(self, dq: int, dt: int) -> "QtPoly":
        """Multiply by the monomial q^dq * t^dt."""
        return QtPoly({(k[0] + dq, k[1] + dt): c for k, c in self.terms.items()})

    def swap_qt(self) -> "QtPoly":
        """Exchange the roles of q and t."""
        return QtPoly({(k[1], k[0]): c for k, c in self.terms.items()})

    def subs_t_eq_q(self) -> "QtPoly":
        """Substitute t = q, collapsing to a polynomial in q alone."""
        out: dict[Monomial, int] = {}
        for (dq, dt), coef in self.terms.items():
            key = (dq + dt, 0)
            val = out.get(key, 0) + coef
            if val:
                out[key] = val
            else:
                del out[key]
        return QtPoly(out)

    def content_sign(self) -> int:
        """Sign of the first term in canonical order; 0 for zero."""
        if not self.terms:
            return 0
        key = min(self.terms, key=_grlex)
        return 1 if self.terms[key] > 0 else -1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for key in sorted(self.terms, key=_grlex):
            coef = self.terms[key]
            body = _monomial_str(key, abs(coef))
            if not chunks:
                chunks.append(body if coef > 0 else "-" + body)
            else:
                chunks.append((" + " if coef > 0 else " - ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"QtPoly({self})"

    @staticmethod
    def parse(text: str) -> "QtPoly":
        return _parse_poly(text)


def _monomial_str(key: Monomial, coef: int) -> str:
    dq, dt = key
    parts: list[str] = []
    if coef != 1 or (dq == 0 and dt == 0):
        parts.append(str(coef))
    if dq:
        parts.append("q" if dq == 1 else f"q^{dq}")
    if dt:
        parts.append("t" if dt == 1 else f"t^{dt}")
    return "*".join(parts)


QT_ZERO = QtPoly()
QT_ONE = QtPoly.const(1)
Q = QtPoly.monomial(1, 1, 0)
T = QtPoly.monomial(1, 0, 1)


# ---------------------------------------------------------------------------
# parsing of the canonical text form

def _parse_term(chunk: str) -> tuple[Monomial, int]:
    coef = 1
    dq = dt = 0
    seen_int = seen_q = seen_t = False
    for part in chunk.split("*"):
        part = part.strip()
        if not part:
            raise ValueError(f"empty factor in term {chunk!r}")
        if part[0] in "qt":
            var = part[0]
            if len(part) == 1:
                exp = 1
            elif part[1] == "^":
                exp = int(part[2:])
            else:
                raise ValueError(f"bad factor {part!r}")
            if var == "q":
                if seen_q:
                    raise ValueError(f"repeated q in term {chunk!r}")
                seen_q, dq = True, exp
            else:
                if seen_t:
                    raise ValueError(f"repeated t in term {chunk!r}")
                seen_t, dt = True, exp
        else:
            if seen_int or seen_q or seen_t:
                raise ValueError(f"misplaced integer in term {chunk!r}")
            coef = int(part)
            seen_int = True
    return (dq, dt), coef


def _parse_poly(text: str) -> QtPoly:
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial text")
    terms: dict[Monomial, int] = {}
    sign = 1
    pos = 0
    if src[0] in "+-":
        sign = -1 if src[0] == "-" else 1
        pos = 1
    while pos < len(src):
        nxt = pos
        while nxt < len(src) and src[nxt] not in "+-":
            nxt += 1
        chunk = src[pos:nxt].strip()
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        key, coef = _parse_term(chunk)
        val = terms.get(key, 0) + sign * coef
        if val:
            terms[key] = val
        else:
            terms.pop(key, None)
        if nxt < len(src):
            sign = -1 if src[nxt] == "-" else 1
        pos = nxt + 1
    return QtPoly(terms)


# ---------------------------------------------------------------------------
# exact division and GCD

def exact_div(num: QtPoly, den: QtPoly) -> QtPoly | None:
    """Quotient num/den when den divides num exactly, else None."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return QT_ZERO
    if den.is_one():
        return num
    (bq, bt), bc = den.leading()
    rem = dict(num.terms)
    quo: dict[Monomial, int] = {}
    # lazy max-heap over grlex order; stale keys are skipped on pop
    heap = [(-kq - kt, -kq, kq, kt) for (kq, kt) in rem]
    heapq.heapify(heap)
    while heap:
        _, _, aq, at = heapq.heappop(heap)
        ac = rem.get((aq, at))
        if not ac:
            continue
        dq, dt = aq - bq, at - bt
        if dq < 0 or dt < 0 or ac % bc:
            return None
        coef = ac // bc
        quo[(dq, dt)] = coef
        for (kq, kt), kc in den.terms.items():
            key = (kq + dq, kt + dt)
            old = rem.get(key, 0)
            val = old - coef * kc
            if val:
                rem[key] = val
                if not old:
                    heapq.heappush(heap, (-key[0] - key[1], -key[0],
                                          key[0], key[1]))
            else:
                rem.pop(key, None)
    return QtPoly(quo) if not rem else None


# t-polynomials: little-endian integer tuples with no trailing zeros

def _t_trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _t_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _t_trim(out)


def _t_int_content(a: tuple[int, ...]) -> int:
    g = 0
    for c in a:
        g = _igcd(g, c)
    return g


def _t_scale_down(a: tuple[int, ...], c: int) -> tuple[int, ...]:
    return tuple(v // c for v in a)


def _t_prem(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    lg = g[-1]
    work = list(f)
    while len(work) >= len(g):
        lf = work[-1]
        if lf:
            off = len(work) - len(g)
            work = [c * lg for c in work[:-1]]
            for i in range(len(g) - 1):
                work[off + i] -= lf * g[i]
        else:
            work = work[:-1]
        while work and not work[-1]:
            work.pop()
    return tuple(work)


def _t_eval(a: tuple[int, ...], xi: int) -> int:
    value = 0
    for c in reversed(a):
        value = value * xi + c
    return value


def _balanced_digits(value: int, xi: int) -> list[int]:
    """Little-endian base-xi digits drawn from (-xi/2, xi/2]."""
    digits = []
    half = xi // 2
    while value:
        r = value % xi
        if r > half:
            r -= xi
        digits.append(r)
        value = (value - r) // xi
    return digits


def _t_gcd_heu(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...] | None:
    """Heuristic gcd of primitive t-polynomials, certified by division.

    Evaluates both at a large integer, lifts the integer gcd back to a
    candidate via balanced digits, and accepts only when the candidate
    divides both inputs.  Returns None when the attempts run out.
    """
    bound = 2 * min(max(abs(c) for c in f), max(abs(c) for c in g)) + 29
    xi = bound
    for _ in range(6):
        ef, eg = _t_eval(f, xi), _t_eval(g, xi)
        if ef and eg:
            cand = _t_trim(_balanced_digits(_igcd(ef, eg), xi))
            if cand:
                content = abs(_t_int_content(cand))
                if content > 1:
                    cand = _t_scale_down(cand, content)
                cand = _t_abs(cand)
                try:
                    _t_divexact(f, cand)
                    _t_divexact(g, cand)
                    return cand
                except ArithmeticError:
                    pass
        xi = xi * 73794 // 27011 + 17
    return None


def _t_gcd_prs(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _t_prem(f, g)
        if r:
            r = _t_scale_down(r, abs(_t_int_content(r)))
        f, g = g, r
    return f


def _t_gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return _t_abs(b)
    if not b:
        return _t_abs(a)
    ca, cb = abs(_t_int_content(a)), abs(_t_int_content(b))
    if len(a) == 1 or len(b) == 1:
        return (_igcd(ca, cb),)
    f = _t_scale_down(a, ca)
    g = _t_scale_down(b, cb)
    if f == g or f == tuple(-c for c in g):
        base = f
    else:
        base = _t_gcd_heu(f, g) or _t_gcd_prs(f, g)
    return _t_abs(_t_mul(base, (_igcd(ca, cb),)))


def _t_abs(a: tuple[int, ...]) -> tuple[int, ...]:
    if a and a[-1] < 0:
        return tuple(-c for c in a)
    return a


def _t_divexact(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Exact division in Z[t]; raises ArithmeticError when not divisible."""
    if not g:
        raise ZeroDivisionError("t-polynomial division by zero")
    if not f:
        return ()
    work = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        raise ArithmeticError("inexact t-polynomial division")
    out = [0] * (dq + 1)
    lg = g[-1]
    for pos in range(dq, -1, -1):
        top = work[pos + len(g) - 1]
        if top % lg:
            raise ArithmeticError("inexact t-polynomial division")
        c = top // lg
        out[pos] = c
        if c:
            for i, gi in enumerate(g):
                work[pos + i] -= c * gi
    if any(work):
        raise ArithmeticError("inexact t-polynomial division")
    return _t_trim(out)


# bivariate level: list indexed by q-degree, entries are t-polynomials

def _b_from_poly(p: QtPoly) -> list[tuple[int, ...]]:
    dq = max(k[0] for k in p.terms)
    rows: list[list[int]] = [[] for _ in range(dq + 1)]
    for (kq, kt), coef in p.terms.items():
        row = rows[kq]
        if len(row) <= kt:
            row.extend([0] * (kt + 1 - len(row)))
        row[kt] = coef
    return [_t_trim(row) for row in rows]


def _b_to_poly(f: list[tuple[int, ...]]) -> QtPoly:
    terms: dict[Monomial, int] = {}
    for kq, row in enumerate(f):
        for kt, coef in enumerate(row):
            if coef:
                terms[(kq, kt)] = coef
    return QtPoly(terms)


def _b_trim(f: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    n = len(f)
    while n and not f[n - 1]:
        n -= 1
    return f[:n]


def _b_content(f: list[tuple[int, ...]]) -> tuple[int, ...]:
    g: tuple[int, ...] = ()
    for row in f:
        g = _t_gcd(g, row)
        if g == (1,):
            break
    return g


def _b_primitive(f: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    cont = _b_content(f)
    if cont == (1,):
        return f
    return [_t_divexact(row, cont) if row else () for row in f]


def _b_prem(f: list[tuple[int, ...]], g: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    lg = g[-1]
    work = list(f)
    while len(work) >= len(g):
        lf = work[-1]
        if lf:
            off = len(work) - len(g)
            work = [_t_mul(c, lg) for c in work[:-1]]
            for i in range(len(g) - 1):
                prod = _t_mul(lf, g[i])
                merged = list(work[off + i]) + [0] * max(0, len(prod) - len(work[off + i]))
                for j, v in enumerate(prod):
                    merged[j] -= v
                work[off + i] = _t_trim(merged)
        else:
            work = work[:-1]
        work = _b_trim(work)
    return work


def _b_gcd_heu(f: list[tuple[int, ...]], g: list[tuple[int, ...]],
               pf: QtPoly, pg: QtPoly) -> list[tuple[int, ...]] | None:
    """Heuristic gcd of primitive b-form polynomials, certified by division.

    Evaluates t at a large integer, takes the gcd of the two resulting
    q-polynomials, lifts each big coefficient back into a t-polynomial
    via balanced digits, and verifies the candidate divides both inputs.
    """
    maxf = max(max(abs(c) for c in row) for row in f if row)
    maxg = max(max(abs(c) for c in row) for row in g if row)
    xi = 2 * min(maxf, maxg) + 29
    for _ in range(6):
        ef = _t_trim([_t_eval(row, xi) for row in f])
        eg = _t_trim([_t_eval(row, xi) for row in g])
        if ef and eg:
            hq = _t_gcd(ef, eg)
            cand = _b_trim([_t_trim(_balanced_digits(c, xi)) for c in hq])
            if cand:
                cand = _b_primitive(cand)
                cpoly = _b_to_poly(cand)
                if cpoly.is_one() or (exact_div(pf, cpoly) is not None
                                      and exact_div(pg, cpoly) is not None):
                    return cand
        xi = xi * 73794 // 27011 + 17
    return None


def _b_gcd_prs(f: list[tuple[int, ...]],
               g_: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    if len(f) < len(g_):
        f, g_ = g_, f
    while g_:
        r = _b_prem(f, g_)
        if r:
            r = _b_primitive(r)
        f, g_ = g_, r
    return f


def _monomial_gcd(mono: QtPoly, other: QtPoly) -> QtPoly:
    (mq, mt), mc = mono.leading()
    oq = min(k[0] for k in other.terms)
    ot = min(k[1] for k in other.terms)
    c = 0
    for coef in other.terms.values():
        c = _igcd(c, coef)
    return QtPoly.monomial(_igcd(mc, c), min(mq, oq), min(mt, ot))


def qt_gcd(a: QtPoly, b: QtPoly) -> QtPoly:
    """GCD in Z[q,t], sign-normalized; raises on two zero inputs."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    elif a.is_monomial():
        g = _monomial_gcd(a, b)
    elif b.is_monomial():
        g = _monomial_gcd(b, a)
    elif a == b:
        g = a
    else:
        fa, fb = _b_from_poly(a), _b_from_poly(b)
        ca, cb = _b_content(fa), _b_content(fb)
        cont = _t_gcd(ca, cb)
        f = _b_primitive(fa)
        g_ = _b_primitive(fb)
        if len(f) == 1 or len(g_) == 1:
            short, long_ = (f, g_) if len(f) == 1 else (g_, f)
            base = [_t_gcd(short[0], _b_content(long_))]
        elif f == g_:
            base = f
        else:
            base = _b_gcd_heu(f, g_, _b_to_poly(f), _b_to_poly(g_))
            if base is None:
                base = _b_gcd_prs(f, g_)
        g = _b_to_poly([_t_mul(row, cont) for row in base])
    if g.content_sign() < 0:
        g = -g
    return g


# ---------------------------------------------------------------------------
# the fraction field

class QtRat:
    """Reduced fraction of two QtPolys.

    Invariants: gcd(num, den) = 1 and the leading coefficient of den is
    positive, so equal values are structurally equal.  Construct via
    QtRat(num, den) from QtPoly or int operands.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: QtPoly | int, den: QtPoly | int = QT_ONE,
                 _reduced: bool = False):
        if isinstance(num, int):
            num = QtPoly.const(num)
        if isinstance(den, int):
            den = QtPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = QT_ZERO, QT_ONE
        elif not _reduced:
            if not den.is_one():
                g = qt_gcd(num, den)
                if not g.is_one():
                    num_q = exact_div(num, g)
                    den_q = exact_div(den, g)
                    assert num_q is not None and den_q is not None
                    num, den = num_q, den_q
            if den.content_sign() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._hash: int | None = None

    @classmethod
    def from_int(cls, value: int) -> "QtRat":
        return cls(QtPoly.const(value), QT_ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> QtPoly:
        if not self.den.is_one():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def is_integer(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QtRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (QtPoly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "QtRat":
        return QtRat(-self.num, self.den, _reduced=True)

    @staticmethod
    def _coerce(value: "QtRat | QtPoly | int") -> "QtRat | None":
        if isinstance(value, QtRat):
            return value
        if isinstance(value, QtPoly):
            return QtRat(value, QT_ONE, _reduced=True)
        if isinstance(value, int):
            return QtRat.from_int(value)
        return None

    def __add__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return QtRat(self.num + rhs.num, self.den)
        if self.den.is_one():
            return QtRat(self.num * rhs.den + rhs.num, rhs.den, _reduced=True)
        if rhs.den.is_one():
            return QtRat(self.num + rhs.num * self.den, self.den, _reduced=True)
        g = qt_gcd(self.den, rhs.den)
        if g.is_one():
            return QtRat(self.num * rhs.den + rhs.num * self.den,
                         self.den * rhs.den, _reduced=True)
        db = exact_div(rhs.den, g)
        da = exact_div(self.den, g)
        assert db is not None and da is not None
        num = self.num * db + rhs.num * da
        return QtRat(num, da * g * db)

    __radd__ = __add__

    def __sub__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.num.is_zero() or rhs.num.is_zero():
            return QT_RAT_ZERO
        if self.den.is_one() and rhs.den.is_one():
            return QtRat(self.num * rhs.num, QT_ONE, _reduced=True)
        # cross-reduce before multiplying to keep intermediates small
        ga = qt_gcd(self.num, rhs.den)
        gb = qt_gcd(rhs.num, self.den)
        na = self.num if ga.is_one() else exact_div(self.num, ga)
        db = rhs.den if ga.is_one() else exact_div(rhs.den, ga)
        nb = rhs.num if gb.is_one() else exact_div(rhs.num, gb)
        da = self.den if gb.is_one() else exact_div(self.den, gb)
        assert na is not None and nb is not None and da is not None and db is not None
        return QtRat(na * nb, da * db, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QtRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.content_sign() < 0:
            num, den = -num, -den
        return QtRat(num, den, _reduced=True)

    def __truediv__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: "QtRat | QtPoly | int") -> "QtRat":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def __pow__(self, exp: int) -> "QtRat":
        if exp < 0:
            return self.inverse() ** (-exp)
        return QtRat(self.num ** exp, self.den ** exp, _reduced=True)

    def swap_qt(self) -> "QtRat":
        num, den = self.num.swap_qt(), self.den.swap_qt()
        if den.content_sign() < 0:
            num, den = -num, -den
        return QtRat(num, den, _reduced=True)

    def subs_t_eq_q(self) -> "QtRat":
        return QtRat(self.num.subs_t_eq_q(), self.den.subs_t_eq_q())

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"QtRat({self})"

    @staticmethod
    def parse(text: str) -> "QtRat":
        src = text.strip()
        if src.startswith("(") and ")/(" in src and src.endswith(")"):
            split = src.index(")/(")
            return QtRat(_parse_poly(src[1:split]), _parse_poly(src[split + 3:-1]))
        return QtRat(_parse_poly(src), QT_ONE)


QT_RAT_ZERO = QtRat.from_int(0)
QT_RAT_ONE = QtRat.from_int(1)
