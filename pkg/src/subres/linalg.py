"""Dense exact matrices, determinants, and the structured matrix builders.

Entries are either all rationals or all polynomials in x.  Arithmetic
between the two kinds works because :class:`Poly` accepts rational
operands, so products of a polynomial matrix with a rational matrix need
no special casing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from subres.algebra import (
    ONE,
    X,
    Poly,
    Scalar,
    check_admissible,
    format_rational,
    parse_rational,
    poly_eval,
)

Entry = Union[Fraction, Poly]

LAPLACE_MAX_DIM = 8


class DMatrix:
    """Immutable dense matrix.

    ``entries`` is a tuple of row tuples.  A matrix may have zero rows
    (``build_mtx`` with d = 0 produces one), in which case ``cols`` must
    be given explicitly.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Entry | int]], cols: int | None = None):
        rows = tuple(tuple(_norm(e) for e in row) for row in entries)
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {cols}")
        self.entries: tuple[tuple[Entry, ...], ...] = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> DMatrix:
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> DMatrix:
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_poly(self) -> bool:
        return any(isinstance(e, Poly) for row in self.entries for e in row)

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DMatrix):
            return NotImplemented
        # Poly == Fraction compares as constants, so mixed domains still match
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(map(_entry_str, row)) for row in self.entries)
        return f"DMatrix({self.rows}x{self.cols} [{body}])"

    def __matmul__(self, other: DMatrix) -> DMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols_b = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            out_row = []
            for col in cols_b:
                acc: Entry = Fraction(0)
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return DMatrix(out, cols=other.cols)

    def __neg__(self) -> DMatrix:
        return DMatrix([[-e for e in row] for row in self.entries], cols=self.cols)

    def transpose(self) -> DMatrix:
        return DMatrix(zip(*self.entries), cols=self.rows) if self.rows else DMatrix.zeros(self.cols, 0)

    def swap_rows(self, i: int, j: int) -> DMatrix:
        rows = list(self.entries)
        rows[i], rows[j] = rows[j], rows[i]
        return DMatrix(rows, cols=self.cols)

    def to_json(self) -> dict:
        poly = self.is_poly
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [Poly.coerce(e).to_json() if poly else format_rational(e) for e in row]
                for row in self.entries
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> DMatrix:
        rows = []
        for row in obj["entries"]:
            rows.append(
                [Poly.from_json(e) if isinstance(e, list) else parse_rational(e) for e in row]
            )
        m = cls(rows, cols=obj["cols"])
        if m.rows != obj["rows"]:
            raise ValueError("row count does not match entries")
        return m


def _norm(e: Entry | int) -> Entry:
    if isinstance(e, (Poly, Fraction)):
        return e
    if isinstance(e, int):
        return Fraction(e)
    raise TypeError(f"unsupported matrix entry {e!r}")


def _entry_str(e: Entry) -> str:
    return f"({e})" if isinstance(e, Poly) and e.degree > 0 else str(e)


def vstack(*blocks: DMatrix) -> DMatrix:
    cols = {b.cols for b in blocks}
    if len(cols) != 1:
        raise ValueError(f"vstack needs equal column counts, got {sorted(cols)}")
    return DMatrix([row for b in blocks for row in b.entries], cols=cols.pop())


def hstack(*blocks: DMatrix) -> DMatrix:
    rows = {b.rows for b in blocks}
    if len(rows) != 1:
        raise ValueError(f"hstack needs equal row counts, got {sorted(rows)}")
    n = rows.pop()
    return DMatrix(
        [[e for b in blocks for e in b.entries[i]] for i in range(n)],
        cols=sum(b.cols for b in blocks),
    )


# -- determinants ------------------------------------------------------------


def det_bareiss(m: DMatrix) -> Entry:
    """Determinant by fraction-free (Bareiss) elimination.

    Every division in the recurrence is exact in any integral domain; for
    polynomial entries it is carried out with :meth:`Poly.exact_div`.  A
    zero pivot is replaced by the first nonzero entry below it (the row
    swap flips the sign); no such entry means the determinant is zero.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    poly = m.is_poly
    one: Entry = ONE if poly else Fraction(1)
    if n == 0:
        return one
    a = [[Poly.coerce(e) if poly else e for e in row] for row in m.entries]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return Poly() if poly else Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                num = ri[j] * akk - aik * rk[j] if aik else ri[j] * akk
                ri[j] = num.exact_div(prev) if poly else num / prev
            ri[k] = Poly() if poly else Fraction(0)
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def det_laplace(m: DMatrix) -> Entry:
    """Determinant by cofactor expansion along the first row (dimension <= 8)."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows > LAPLACE_MAX_DIM:
        raise ValueError(f"det_laplace limited to dimension {LAPLACE_MAX_DIM}, got {m.rows}")
    poly = m.is_poly
    result = _laplace([list(r) for r in m.entries])
    return Poly.coerce(result) if poly else Fraction(result)


def _laplace(rows: list[list[Entry]]) -> Entry:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total: Entry = Fraction(0)
    for j, e in enumerate(rows[0]):
        if not e:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = e * _laplace(minor)
        total = total - term if j % 2 else total + term
    return total


# -- structured matrices -------------------------------------------------------


class _Linear:
    """Template ``sign * (x - t)``; only the two shapes x - t and t - x exist."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def at(self, gamma: Fraction) -> Poly:
        p = Poly((-gamma, 1))
        return p if self.sign > 0 else -p

    def __repr__(self) -> str:
        return "x - t" if self.sign > 0 else "t - x"


X_MINUS_T = _Linear(1)
T_MINUS_X = _Linear(-1)


def bracket(p: Poly | Scalar | _Linear, gamma: Sequence[Scalar], exps: Iterable[int]) -> DMatrix:
    """The |exps| x |gamma| matrix with entry (i, j) = gamma_j**exps_i * p(gamma_j).

    ``p`` is a polynomial in the evaluation variable t (rational entries),
    or one of :data:`X_MINUS_T` / :data:`T_MINUS_X` (entries linear in x).
    """
    exps = tuple(exps)
    if any(not isinstance(e, int) or e < 0 for e in exps):
        raise ValueError(f"exponents must be non-negative integers, got {exps}")
    gamma = tuple(Fraction(g) for g in gamma)
    if isinstance(p, _Linear):
        vals: list[Entry] = [p.at(g) for g in gamma]
    elif isinstance(p, (Poly, int, Fraction)) and not isinstance(p, bool):
        vals = [poly_eval(Poly.coerce(p), g) for g in gamma]
    else:
        raise TypeError(f"unsupported bracket template {p!r}")
    return DMatrix([[v * g**e for g, v in zip(gamma, vals)] for e in exps], cols=len(gamma))


def vandermonde_det(gamma: Sequence[Scalar]) -> Fraction:
    """prod_{i<j} (gamma_j - gamma_i); 1 for lists of length < 2."""
    gamma = tuple(gamma)
    acc = Fraction(1)
    for j in range(len(gamma)):
        for i in range(j):
            acc *= gamma[j] - gamma[i]
    return acc


def _band(coeffs: Sequence[Fraction], nrows: int, ncols: int) -> DMatrix:
    rows = []
    for i in range(nrows):
        row = [Fraction(0)] * ncols
        for k, c in enumerate(coeffs):
            row[i + k] = c
        rows.append(row)
    return DMatrix(rows, cols=ncols)


def _degrees(f: Poly, g: Poly) -> tuple[int, int]:
    if not f or not g:
        raise ValueError("f and g must be nonzero")
    return int(f.degree), int(g.degree)


def build_mf(f: Poly, n: int, d: int) -> DMatrix:
    """(n-d) x (m+n-d) band of ascending coefficients a_0..a_m of f."""
    if not f:
        raise ValueError("f must be nonzero")
    m = int(f.degree)
    check_admissible(m, n, d)
    return _band(f.coeffs, n - d, m + n - d)


def build_mg(g: Poly, m: int, d: int) -> DMatrix:
    """(m-d) x (m+n-d) band of ascending coefficients b_0..b_n of g."""
    if not g:
        raise ValueError("g must be nonzero")
    n = int(g.degree)
    check_admissible(m, n, d)
    return _band(g.coeffs, m - d, m + n - d)


def build_mtx(m: int, n: int, d: int) -> DMatrix:
    """d x (m+n-d) matrix with -x on the diagonal and 1 just right of it."""
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    cols = m + n - d
    minus_x = -X
    rows = []
    for i in range(d):
        row: list[Entry] = [Poly()] * cols
        row[i] = minus_x
        if i + 1 < cols:
            row[i + 1] = ONE
        rows.append(row)
    return DMatrix(rows, cols=cols)


def build_sd(f: Poly, g: Poly, d: int) -> DMatrix:
    """Square block matrix [M_{t-x}; M_f; M_g] of size m+n-d."""
    m, n = _degrees(f, g)
    check_admissible(m, n, d)
    return vstack(build_mtx(m, n, d), build_mf(f, n, d), build_mg(g, m, d))


def build_sylvester_block(f: Poly, g: Poly, d: int) -> DMatrix:
    """The (m+n-2d)-square matrix whose determinant defines Sres_d(f, g).

    Rows hold x^j f (j = n-d-1 .. 0) then x^j g (j = m-d-1 .. 0); the
    leading m+n-2d-1 columns are their coefficients of x^(m+n-d-1) down
    to x^(d+1), and the last column is the polynomial itself.
    """
    m, n = _degrees(f, g)
    check_admissible(m, n, d)
    size = m + n - 2 * d
    top = m + n - d - 1
    rows = []
    for p, count in ((f, n - d), (g, m - d)):
        for j in range(count - 1, -1, -1):
            shifted = p.shift(j)
            row: list[Entry] = [Poly.const(shifted[top - k]) for k in range(size - 1)]
            row.append(shifted)
            rows.append(row)
    return DMatrix(rows, cols=size)
