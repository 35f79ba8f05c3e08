"""Construction of the Macdonald J polynomials by determinants and
creation operators.

The central objects are the eigenvalue brackets [|alpha|], the signed
entry sums [lam]_{mu,nu} obtained from ordered expansions, and the
bordered determinants whose first-row cofactors give the expansion of
J_lam in the modified Schur, Schur, and monomial bases.  A fourth
route iterates column-adding creation operators on the modified Schur
basis.  All coefficient arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .partitions import (
    Partition,
    arm_leg_cells,
    conjugate,
    dominance_downset,
    dominance_upset,
    distinct_permutations,
    partition,
    weight,
)
from .qt import QT_ONE, QT_RAT_ONE, Q, QtPoly, QtRat, T, exact_div
from .symfunc import SymExpansion, convert_basis, ordered_expansion

Vector = tuple[int, ...]
SignedCell = tuple[tuple[int, Vector], ...]


# ---------------------------------------------------------------------------
# brackets and scalars

def bracket(alpha: Vector, n: int, order: str = "qt") -> QtPoly:
    """The eigenvalue bracket [|alpha|]: sum of q^{alpha_i} t^{n-i}."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        if any(alpha[n:]):
            raise ValueError(f"vector {alpha} does not fit in {n} variables")
        alpha = alpha[:n]
    alpha = alpha + (0,) * (n - len(alpha))
    terms: dict[tuple[int, int], int] = {}
    for i, a in enumerate(alpha):
        key = (a, n - 1 - i) if order == "qt" else (n - 1 - i, a)
        terms[key] = terms.get(key, 0) + 1
    if order not in ("qt", "tq"):
        raise ValueError(f"unknown bracket order {order!r}")
    return QtPoly(terms)


def bracket_spectrum(lam: Partition, n: int, order: str = "qt") -> tuple[QtPoly, ...]:
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} does not fit in {n} variables")
    padded = lam + (0,) * (n - len(lam))
    out = []
    for i, a in enumerate(padded):
        dq, dt = (a, n - 1 - i) if order == "qt" else (n - 1 - i, a)
        out.append(QtPoly.monomial(1, dq, dt))
    return tuple(out)


def eigenvalue(lam: Partition, k: int, n: int, order: str = "qt") -> QtPoly:
    """Elementary symmetric function e_k of the bracket spectrum."""
    spectrum = bracket_spectrum(lam, n, order)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}, got {k}")
    total = QtPoly()
    for combo in combinations(spectrum, k):
        prod = QtPoly.const(1)
        for factor in combo:
            prod = prod * factor
        total = total + prod
    return total


def c_lambda(lam: Partition, order: str = "qt") -> QtPoly:
    """Product over cells of (1 - q^arm t^{leg+1}), or with q,t swapped."""
    lam = partition(lam)
    out = QtPoly.const(1)
    for cell in arm_leg_cells(lam):
        if order == "qt":
            factor = QtPoly.const(1) - QtPoly.monomial(1, cell.arm, cell.leg + 1)
        elif order == "tq":
            factor = QtPoly.const(1) - QtPoly.monomial(1, cell.leg + 1, cell.arm)
        else:
            raise ValueError(f"unknown order {order!r}")
        out = out * factor
    return out


def v_lambda(lam: Partition, n: int | None = None, order: str = "qt") -> QtPoly:
    """Product of ([|lam|] - [|mu|]) over mu strictly above lam."""
    lam = partition(lam)
    if n is None:
        n = max(len(lam), 1)
    lam_bracket = bracket(lam, n, order)
    out = QtPoly.const(1)
    for mu in dominance_upset(lam)[1:]:
        out = out * (lam_bracket - bracket(mu, n, order))
    return out


def u_lambda(lam: Partition, order: str = "tq") -> QtPoly:
    """Product of ([|lam'|] - [|mu'|]) over mu strictly below lam,
    with brackets in the conjugate variable count."""
    lam = partition(lam)
    if not lam:
        return QtPoly.const(1)
    width = lam[0]
    lam_bracket = bracket(conjugate(lam), width, order)
    out = QtPoly.const(1)
    for mu in dominance_downset(lam)[1:]:
        out = out * (lam_bracket - bracket(conjugate(mu), width, order))
    return out


# ---------------------------------------------------------------------------
# entry matrices for the modified Schur determinant

@lru_cache(maxsize=None)
def _expansion_by_shape(mu: Partition, n: int) -> dict[Partition, SignedCell]:
    grouped: dict[Partition, list[tuple[int, Vector]]] = {}
    for alpha, sign in ordered_expansion(mu, n).items():
        shape = tuple(sorted(alpha, reverse=True))
        while shape and shape[-1] == 0:
            shape = shape[:-1]
        grouped.setdefault(shape, []).append((sign, alpha))
    return {shape: tuple(sorted(pairs, key=lambda p: p[1], reverse=True))
            for shape, pairs in grouped.items()}


def entry(lam: Partition, mu: Partition, nu: Partition, n: int,
          order: str = "qt") -> QtPoly:
    """The signed sum of ([|lam|] - [|alpha|]) over permutations alpha
    of nu appearing in the ordered expansion of mu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if not weight(lam) == weight(mu) == weight(nu):
        raise ValueError("entry needs three partitions of equal weight")
    pairs = _expansion_by_shape(mu, n).get(nu, ())
    lam_bracket = bracket(lam, n, order)
    out = QtPoly()
    for sign, alpha in pairs:
        diff = lam_bracket - bracket(alpha, n, order)
        out = out + (diff if sign > 0 else -diff)
    return out


@dataclass(frozen=True)
class EntryMatrix:
    """The numeric block of the modified Schur determinant for lam.

    Columns run over the dominance upset of lam (lam first), rows over
    the strictly greater partitions.  cells[r][c] lists the signed
    vectors (sign, alpha); poly() assembles the bracket differences.
    """

    lam: Partition
    n: int
    columns: tuple[Partition, ...]
    rows: tuple[Partition, ...]
    cells: tuple[tuple[SignedCell, ...], ...]

    @classmethod
    def build(cls, lam: Partition, n: int | None = None) -> "EntryMatrix":
        lam = partition(lam)
        if n is None:
            n = max(len(lam), 1)
        elif n < len(lam):
            raise ValueError(f"partition {lam} does not fit in {n} variables")
        columns = tuple(dominance_upset(lam))
        rows = columns[1:]
        cells = tuple(
            tuple(_expansion_by_shape(mu, n).get(nu, ()) for mu in columns)
            for nu in rows
        )
        return cls(lam, n, columns, rows, cells)

    def poly(self, r: int, c: int, order: str = "qt") -> QtPoly:
        lam_bracket = bracket(self.lam, self.n, order)
        out = QtPoly()
        for sign, alpha in self.cells[r][c]:
            diff = lam_bracket - bracket(alpha, self.n, order)
            out = out + (diff if sign > 0 else -diff)
        return out


# ---------------------------------------------------------------------------
# fraction-free determinants

def _find_block_split(rows: list[list[QtPoly]]) -> int | None:
    size = len(rows)
    reach = 0
    for i in range(size - 1):
        row_max = -1
        for j in range(size - 1, -1, -1):
            if not rows[i][j].is_zero():
                row_max = j
                break
        reach = max(reach, row_max)
        if reach <= i:
            return i + 1
    return None


def bareiss_det(rows: list[list[QtPoly]]) -> QtPoly:
    """Exact determinant by fraction-free elimination.

    Matrices whose leading rows are supported on the leading columns
    are split into diagonal blocks first, so the nearly triangular
    minors arising from dominance order cost little.
    """
    size = len(rows)
    if size == 0:
        return QtPoly.const(1)
    if any(len(row) != size for row in rows):
        raise ValueError("determinant needs a square matrix")
    if size == 1:
        return rows[0][0]
    split = _find_block_split(rows)
    if split is not None:
        top = [row[:split] for row in rows[:split]]
        bottom = [row[split:] for row in rows[split:]]
        return bareiss_det(top) * bareiss_det(bottom)
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    m = [list(row) for row in rows]
    sign = 1
    prev = QtPoly.const(1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
            if pivot is None:
                return QtPoly()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                quot = exact_div(num, prev)
                if quot is None:
                    raise ArithmeticError("inexact division in elimination")
                m[i][j] = quot
            m[i][k] = QtPoly()
        prev = m[k][k]
    result = m[size - 1][size - 1]
    return result if sign > 0 else -result


def _first_row_cofactors(matrix: list[list[QtPoly]], count: int) -> list[QtPoly]:
    """Signed minors deleting each column in turn from a matrix with
    one row fewer than columns.

    The signed minors span the kernel of the rectangular block, so one
    fraction-free elimination plus an exact back-substitution recovers
    all of them at once; the last pivot fixes the normalization.
    """
    rows = len(matrix)
    if rows + 1 != count:
        raise ValueError("cofactor matrix needs one row fewer than columns")
    if rows == 0:
        return [QtPoly.const(1)]
    m = [list(row) for row in matrix]
    pivots: list[int] = []
    used = [False] * count
    sign = 1
    prev = QtPoly.const(1)
    for k in range(rows):
        pcol = prow = None
        for j in range(count):
            if used[j]:
                continue
            r = next((i for i in range(k, rows) if not m[i][j].is_zero()), None)
            if r is not None:
                pcol, prow = j, r
                break
        if pcol is None:
            return [QtPoly() for _ in range(count)]
        if prow != k:
            m[k], m[prow] = m[prow], m[k]
            sign = -sign
        used[pcol] = True
        pivots.append(pcol)
        for i in range(k + 1, rows):
            for j in range(count):
                if used[j]:
                    continue
                num = m[k][pcol] * m[i][j] - m[i][pcol] * m[k][j]
                quot = exact_div(num, prev)
                if quot is None:
                    raise ArithmeticError("inexact division in elimination")
                m[i][j] = quot
            m[i][pcol] = QtPoly()
        prev = m[k][pcol]
    free = next(j for j in range(count) if not used[j])
    inversions = sum(1 for a in range(rows) for b in range(a + 1, rows)
                     if pivots[a] > pivots[b])
    solution: list[QtPoly | None] = [None] * count
    solution[free] = prev
    for i in range(rows - 1, -1, -1):
        p = pivots[i]
        acc = QtPoly()
        for j in range(count):
            known = solution[j]
            if j == p or known is None or m[i][j].is_zero() or known.is_zero():
                continue
            acc = acc + m[i][j] * known
        quot = exact_div(-acc, m[i][p])
        if quot is None:
            raise ArithmeticError("inexact division in kernel solve")
        solution[p] = quot
    factor = sign * (-1 if inversions % 2 else 1) * (-1 if free % 2 else 1)
    return [value if factor > 0 else -value for value in solution]


def _scaled_coefficient(minor: QtPoly, scale_num: QtPoly, scale_den: QtPoly) -> QtRat:
    if minor.is_zero():
        return QtRat(0)
    num = minor * scale_num
    quot = exact_div(num, scale_den)
    if quot is not None:
        return QtRat(quot)
    return QtRat(num, scale_den)


# ---------------------------------------------------------------------------
# J polynomial: modified Schur basis (bordered determinant)

@lru_cache(maxsize=None)
def jpoly_modified_schur(lam: Partition, n: int | None = None) -> SymExpansion:
    """Expansion of J_lam in the S_mu[X^{tq}] basis."""
    lam = partition(lam)
    if not lam:
        return SymExpansion.unit("s-mod")
    if n is None:
        n = len(lam)
    elif n < len(lam):
        raise ValueError(f"partition {lam} does not fit in {n} variables")
    em = EntryMatrix.build(lam, n)
    numeric = [[em.poly(r, c) for c in range(len(em.columns))]
               for r in range(len(em.rows))]
    cofactors = _first_row_cofactors(numeric, len(em.columns))
    scale_num = c_lambda(conjugate(lam), "tq")
    scale_den = v_lambda(lam, n)
    terms = {}
    for mu, minor in zip(em.columns, cofactors):
        coef = _scaled_coefficient(minor, scale_num, scale_den)
        if not coef.is_zero():
            terms[mu] = coef
    return SymExpansion("s-mod", weight(lam), terms)


# ---------------------------------------------------------------------------
# J polynomial: Schur basis (dual determinant, and duality transport)

def dual_transport(source: SymExpansion, lam: Partition, to: str = "s") -> SymExpansion:
    """Carry an expansion of the conjugate shape across q/t duality.

    Conjugates every key, swaps q with t in every coefficient, and
    rescales so the leading term carries the right normalization:
    c_lam(q,t) when landing in the Schur basis, c_{lam'}(t,q) when
    landing in the modified Schur basis.
    """
    lam = partition(lam)
    if to == "s":
        expected = QtRat(c_lambda(lam, "qt"))
    elif to == "s-mod":
        expected = QtRat(c_lambda(conjugate(lam), "tq"))
    else:
        raise ValueError(f"unsupported transport target {to!r}")
    if not lam:
        return SymExpansion.unit(to)
    terms = {conjugate(mu): coef.swap_qt() for mu, coef in source.terms.items()}
    lead = terms.get(lam)
    if lead is None:
        raise ArithmeticError("duality transport lost the leading term")
    if lead != expected:
        factor = expected / lead
        terms = {mu: coef * factor for mu, coef in terms.items()}
    return SymExpansion(to, weight(lam), terms)


def _dual_numeric_matrix(lam: Partition) -> tuple[tuple[Partition, ...], list[list[QtPoly]]]:
    columns = tuple(dominance_downset(lam))
    rows = columns[1:]
    width = lam[0]
    lam_c = conjugate(lam)
    numeric = [[entry(lam_c, conjugate(mu), conjugate(nu), width, order="tq")
                for mu in columns]
               for nu in rows]
    return columns, numeric


@lru_cache(maxsize=None)
def jpoly_schur(lam: Partition, route: str = "duality") -> SymExpansion:
    """Expansion of J_lam in the Schur basis.

    route "duality" transports the modified Schur expansion of the
    conjugate shape; route "direct" evaluates the dual bordered
    determinant with (t,q)-ordered brackets.
    """
    lam = partition(lam)
    if not lam:
        return SymExpansion.unit("s")
    if route == "duality":
        return dual_transport(jpoly_modified_schur(conjugate(lam)), lam, "s")
    if route == "direct":
        columns, numeric = _dual_numeric_matrix(lam)
        cofactors = _first_row_cofactors(numeric, len(columns))
        scale_num = c_lambda(lam, "qt")
        scale_den = u_lambda(lam, "tq")
        terms = {}
        for mu, minor in zip(columns, cofactors):
            coef = _scaled_coefficient(minor, scale_num, scale_den)
            if not coef.is_zero():
                terms[mu] = coef
        return SymExpansion("s", weight(lam), terms)
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# J polynomial: monomial basis

@lru_cache(maxsize=None)
def _schur_coefficients_of_monomial(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    expansion = convert_basis(SymExpansion.single("m", mu), "s")
    out = []
    for kappa, coef in expansion.terms.items():
        poly = coef.as_poly()
        out.append((kappa, poly.constant_value()))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_cell(mu: Partition, nu_c: Partition, width: int) -> tuple[tuple[int, Vector], ...]:
    """Signed vectors (coef, alpha) with alpha running over permutations
    of the conjugate row shape nu_c; coef is the scalar product of the
    dual monomial against m_mu, evaluated through the Schur expansion."""
    pieces = []
    schur = _schur_coefficients_of_monomial(mu)
    eps_maps = [(d, dict(ordered_expansion(conjugate(kappa), width)))
                for kappa, d in schur]
    for alpha in distinct_permutations(nu_c, width):
        coef = sum(d * eps.get(alpha, 0) for d, eps in eps_maps)
        if coef:
            pieces.append((coef, alpha))
    return tuple(pieces)


def monomial_entry(lam: Partition, mu: Partition, nu: Partition) -> QtPoly:
    """Numeric entry of the monomial determinant: column mu, row nu,
    with (t,q)-ordered brackets in lam_1 variables."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    width = lam[0]
    lam_bracket = bracket(conjugate(lam), width, order="tq")
    out = QtPoly()
    for coef, alpha in monomial_cell(mu, conjugate(nu), width):
        out = out + (lam_bracket - bracket(alpha, width, order="tq")) * coef
    return out


@lru_cache(maxsize=None)
def jpoly_monomial(lam: Partition) -> SymExpansion:
    """Expansion of J_lam in the monomial basis."""
    lam = partition(lam)
    if not lam:
        return SymExpansion.unit("m")
    columns = tuple(dominance_downset(lam))
    rows = columns[1:]
    numeric = [[monomial_entry(lam, mu, nu) for mu in columns] for nu in rows]
    cofactors = _first_row_cofactors(numeric, len(columns))
    scale_num = c_lambda(lam, "qt")
    scale_den = u_lambda(lam, "tq")
    terms = {}
    for mu, minor in zip(columns, cofactors):
        coef = _scaled_coefficient(minor, scale_num, scale_den)
        if not coef.is_zero():
            terms[mu] = coef
    return SymExpansion("m", weight(lam), terms)


# ---------------------------------------------------------------------------
# operator action on the modified Schur basis

@lru_cache(maxsize=None)
def macdonald_op_action(lam: Partition, k: int, n: int) -> SymExpansion:
    """Action of the k-th Macdonald operator on S_lam[X^{tq}], expanded
    in products of complete functions of the modified alphabet."""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} does not fit in {n} variables")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    padded = lam + (0,) * (n - len(lam))
    w = weight(lam)
    total = SymExpansion("h-mod", w, {})
    for subset in combinations(range(1, n + 1), k):
        t_power = sum(n - i for i in subset)
        marked = set(subset)
        acc: dict[Partition, QtRat] = {}
        for sigma in permutations(range(1, n + 1)):
            degrees = []
            q_power = 0
            valid = True
            for i, j in enumerate(sigma, start=1):
                d = padded[i - 1] - i + j
                if d < 0:
                    valid = False
                    break
                if j in marked:
                    q_power += d
                degrees.append(d)
            if not valid:
                continue
            inversions = sum(1 for a in range(n) for b in range(a + 1, n)
                             if sigma[a] > sigma[b])
            sign = -1 if inversions % 2 else 1
            shape = tuple(sorted((d for d in degrees if d), reverse=True))
            coef = QtRat(QtPoly.monomial(sign, q_power, t_power))
            acc[shape] = acc.get(shape, QtRat(0)) + coef
        piece = SymExpansion("h-mod", w, {s: c for s, c in acc.items() if not c.is_zero()})
        total = total + piece
    return total


# ---------------------------------------------------------------------------
# creation operators on the modified Schur basis

def creation_step(f: SymExpansion, k: int) -> SymExpansion:
    """Apply the column-adding creation operator to a modified Schur
    expansion; every supported shape must have at most k parts."""
    if f.basis != "s-mod":
        raise ValueError("creation_step expects an s-mod expansion")
    out_weight = f.weight + k
    acc: dict[Partition, QtRat] = {}
    for lam, coef in f.terms.items():
        if len(lam) > k:
            raise ValueError(f"shape {lam} has more than {k} parts")
        padded = lam + (0,) * (k - len(lam))
        for sigma in permutations(range(1, k + 1)):
            degrees = []
            factor = QtPoly.const(1)
            valid = True
            for i, j in enumerate(sigma, start=1):
                d = padded[i - 1] + j - i + 1
                if d < 0:
                    valid = False
                    break
                factor = factor * (QtPoly.const(1) - QtPoly.monomial(1, d, k - j))
                degrees.append(d)
            if not valid or factor.is_zero():
                continue
            inversions = sum(1 for a in range(k) for b in range(a + 1, k)
                             if sigma[a] > sigma[b])
            if inversions % 2:
                factor = -factor
            shape = tuple(sorted((d for d in degrees if d), reverse=True))
            contribution = coef * QtRat(factor)
            acc[shape] = acc.get(shape, QtRat(0)) + contribution
    h_mod = SymExpansion("h-mod", out_weight,
                         {s: c for s, c in acc.items() if not c.is_zero()})
    return convert_basis(h_mod, "s-mod")


@lru_cache(maxsize=None)
def jpoly_via_creation(lam: Partition) -> SymExpansion:
    """Build J_lam by applying one creation operator per column."""
    lam = partition(lam)
    out = SymExpansion.unit("s-mod")
    lam_c = conjugate(lam)
    for j in range(len(lam_c), 0, -1):
        out = creation_step(out, lam_c[j - 1])
    return out


# ---------------------------------------------------------------------------
# display helpers

def _vector_cell_latex(pairs: tuple[tuple[int, Vector], ...]) -> str:
    if not pairs:
        return "0"
    chunks = []
    for coef, alpha in pairs:
        body = "[" + ",".join(str(a) for a in alpha) + "]"
        if coef == 1:
            piece = body
        elif coef == -1:
            piece = "-" + body
        else:
            piece = f"{coef}{body}"
        if chunks and not piece.startswith("-"):
            chunks.append("+" + piece)
        else:
            chunks.append(piece)
    return "".join(chunks)


def _partition_subscript(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"


def latex_modified_matrix(em: EntryMatrix) -> str:
    """Render the bordered modified Schur matrix as a LaTeX array."""
    header = [f"S_{{{_partition_subscript(mu)}}}[X^{{tq}}]" for mu in em.columns]
    lines = [" & ".join(header) + r" \\"]
    for r in range(len(em.rows)):
        cells = [_vector_cell_latex(em.cells[r][c]) for c in range(len(em.columns))]
        lines.append(" & ".join(cells) + r" \\")
    body = "\n".join(lines)
    cols = "c" * len(em.columns)
    return (r"\left|\begin{array}{" + cols + "}\n" + body
            + "\n" + r"\end{array}\right|")


def latex_monomial_matrix(lam: Partition) -> str:
    """Render the bordered monomial matrix as a LaTeX array."""
    lam = partition(lam)
    columns = tuple(dominance_downset(lam))
    rows = columns[1:]
    width = lam[0] if lam else 0
    n = weight(lam)
    header = [f"m_{{{_partition_subscript(mu)}}}[X_{{{n}}}]" for mu in columns]
    lines = [" & ".join(header) + r" \\"]
    for nu in rows:
        cells = [_vector_cell_latex(monomial_cell(mu, conjugate(nu), width))
                 for mu in columns]
        lines.append(" & ".join(cells) + r" \\")
    body = "\n".join(lines)
    cols = "c" * len(columns)
    return (r"\left|\begin{array}{" + cols + "}\n" + body
            + "\n" + r"\end{array}\right|")
