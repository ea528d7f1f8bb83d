"""Exact rational linear algebra: minors, Pluecker vectors, Grassmannian
sign classification, orthogonal complements, column matroids, and an
exact sign-orthant feasibility kernel.

Everything runs over ``fractions.Fraction``.  Elimination uses Bareiss
pivoting (division-exact), and strict feasibility questions are decided
either by an exact phase-1 simplex or by enumerating the sign patterns
realized on a row space (its covectors).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .signvar import Sign, sign, var, varbar

Q = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rational matrix; ``entries`` is a tuple of row tuples."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        ent = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not ent or not ent[0]:
            raise ValueError("matrix must have at least one row and one column")
        if len({len(r) for r in ent}) != 1:
            raise ValueError("ragged rows")
        return cls(ent)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx)
        )

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose().entries
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                for row in self.entries
            )
        )


def det(M: ExactMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination with pivoting."""
    n = M.rows
    if n != M.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in M.entries]
    sgn = 1
    prev = Q(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sgn = -sgn
                    break
            else:
                return Q(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Q(0)
        prev = a[k][k]
    return sgn * a[n - 1][n - 1]


def rref(M: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    a = [list(row) for row in M.entries]
    nrows, ncols = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def rank(M: ExactMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: ExactMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {x : Mx = 0}."""
    rows, pivots = rref(M)
    n = M.cols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return basis


def orthogonal_complement(M: ExactMatrix) -> ExactMatrix:
    """Full-row-rank matrix whose rows span {v : M v^T = 0}.

    Returns a 0 x n matrix when M already spans everything.
    """
    if rank(M) != M.rows:
        raise ValueError("matrix must have full row rank")
    basis = kernel_basis(M)
    return ExactMatrix(tuple(basis))


def row_space_basis(M: ExactMatrix) -> ExactMatrix:
    """A full-row-rank matrix with the same row space."""
    rows, _ = rref(M)
    if not rows:
        raise ValueError("zero matrix has no row basis")
    return ExactMatrix(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# Pluecker coordinates and sign classification


@dataclass(frozen=True)
class PlueckerVector:
    c: int
    n: int
    coordinates: tuple[tuple[tuple[int, ...], Fraction], ...]  # lex order

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.coordinates)


def maximal_minors(M: ExactMatrix) -> PlueckerVector:
    """All r x r minors on column subsets, in lex order (0-based subsets)."""
    r, n = M.rows, M.cols
    if r > n:
        raise ValueError("more rows than columns")
    if rank(M) != r:
        raise ValueError("matrix must have full row rank")
    coords = []
    rows_idx = range(r)
    for subset in itertools.combinations(range(n), r):
        coords.append((subset, det(M.submatrix(rows_idx, subset))))
    return PlueckerVector(r, n, tuple(coords))


class GrassmannianClass(Enum):
    POSITIVE = "Positive"
    NONNEGATIVE = "Nonnegative"
    MIXED = "Mixed"


def grassmannian_class(M: ExactMatrix) -> GrassmannianClass:
    """Sign class of the row space, projectively (global negation allowed)."""
    minors = [v for _, v in maximal_minors(M).coordinates]
    signs = {sign(v) for v in minors}
    nonzero = signs - {0}
    if len(nonzero) == 2:
        return GrassmannianClass.MIXED
    if 0 in signs:
        return GrassmannianClass.NONNEGATIVE
    return GrassmannianClass.POSITIVE


# ---------------------------------------------------------------------------
# Exact LP feasibility (phase-1 simplex with Bland's rule)


def _phase1_feasible(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Feasibility of {x >= 0 : Ax = b} by phase-1 simplex, exactly."""
    m = len(A)
    if m == 0:
        return True
    n = len(A[0]) if A else 0
    # make b nonnegative
    T = []
    for row, bi in zip(A, b):
        if bi < 0:
            T.append([-x for x in row] + [Q(0)] * m + [-bi])
        else:
            T.append(list(row) + [Q(0)] * m + [bi])
    for i in range(m):
        T[i][n + i] = Q(1)
    cost = [Q(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            cost[j] -= T[i][j]
        cost[n + m] -= T[i][n + m]
    basis = [n + i for i in range(m)]
    total = n + m
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][total] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            break  # unbounded phase-1 cannot happen, defensive
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, T[leave])]
        basis[leave] = enter
    return -cost[total] == 0


def lp_feasible(
    eqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    ineqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    nvars: int,
) -> bool:
    """Feasibility of {x free : a.x = b for eqs, a.x >= b for ineqs}.

    Free variables are split into differences of nonnegatives; surplus
    variables turn inequalities into equations.
    """
    n_sur = len(ineqs)
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for coeffs, rhs in eqs:
        row = []
        for c in coeffs:
            row.extend((c, -c))
        row.extend([Q(0)] * n_sur)
        A.append(row)
        b.append(_frac(rhs))
    for k, (coeffs, rhs) in enumerate(ineqs):
        row = []
        for c in coeffs:
            row.extend((c, -c))
        sur = [Q(0)] * n_sur
        sur[k] = Q(-1)
        row.extend(sur)
        A.append(row)
        b.append(_frac(rhs))
    return _phase1_feasible(A, b)


def in_convex_hull(point: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Exact test whether ``point`` is a convex combination of ``generators``."""
    if not generators:
        return False
    n = len(point)
    A = [[_frac(g[i]) for g in generators] for i in range(n)]
    A.append([Q(1)] * len(generators))
    b = [_frac(x) for x in point] + [Q(1)]
    return _phase1_feasible(A, b)


# ---------------------------------------------------------------------------
# Sign patterns realized on a row space


def sign_orthant_feasible(L: ExactMatrix, tau: Sequence[Sign], method: str = "lp") -> bool:
    """Does the row space of L contain a vector with exact sign pattern tau?

    ``method="lp"`` builds the strict system with an epsilon scaled to 1
    (row spaces are cones) and runs the exact simplex.  ``method="covectors"``
    consults the full covector enumeration.
    """
    if len(tau) != L.cols:
        raise ValueError("pattern length mismatch")
    if method == "covectors":
        t = tuple(tau)
        if all(s == 0 for s in t):
            return True
        return t in covectors(L)
    r = L.rows
    cols = [L.column(j) for j in range(L.cols)]
    eqs = [(cols[j], Q(0)) for j, s in enumerate(tau) if s == 0]
    ineqs = [
        (tuple(s * x for x in cols[j]), Q(1)) for j, s in enumerate(tau) if s != 0
    ]
    return lp_feasible(eqs, ineqs, r)


def _compose(x: tuple[Sign, ...], y: tuple[Sign, ...]) -> tuple[Sign, ...]:
    return tuple(a if a != 0 else b for a, b in zip(x, y))


def cocircuits(L: ExactMatrix) -> frozenset[tuple[Sign, ...]]:
    """Minimal-support nonzero sign patterns of the row space of L."""
    r, n = L.rows, L.cols
    cols = [L.column(j) for j in range(n)]
    found: set[tuple[Sign, ...]] = set()
    for subset in itertools.combinations(range(n), r - 1):
        sub = ExactMatrix(tuple(cols[j] for j in subset)) if subset else None
        if subset:
            ker = kernel_basis(sub)
            if len(ker) != 1:
                continue
            y = ker[0]
        else:
            if r != 1:
                continue
            y = (Q(1),)
        pat = tuple(sign(sum(a * b for a, b in zip(y, col))) for col in cols)
        if any(s != 0 for s in pat):
            found.add(pat)
            found.add(tuple(-s for s in pat))
    return frozenset(found)


@lru_cache(maxsize=16)
def covectors(L: ExactMatrix) -> frozenset[tuple[Sign, ...]]:
    """All nonzero sign patterns realized by vectors of the row space.

    These are the covectors of the oriented matroid on the columns of L;
    every one is a composition of cocircuits, so we close the cocircuit
    set under composition.
    """
    if rank(L) != L.rows:
        raise ValueError("matrix must have full row rank")
    circ = cocircuits(L)
    out: set[tuple[Sign, ...]] = set(circ)
    frontier = list(circ)
    while frontier:
        nxt = []
        for x in frontier:
            for c in circ:
                z = _compose(x, c)
                if z not in out:
                    out.add(z)
                    nxt.append(z)
        frontier = nxt
    return frozenset(out)


def max_var_over_subspace(L: ExactMatrix) -> int:
    """max of var(sign(v)) over nonzero v in the row space of L."""
    return max(var(p) for p in covectors(L))


def max_varbar_over_subspace(L: ExactMatrix) -> int:
    """max of varbar(sign(v)) over nonzero v in the row space of L."""
    return max(varbar(p) for p in covectors(L))


def min_var_over_subspace(L: ExactMatrix) -> int:
    return min(var(p) for p in covectors(L))


def min_varbar_over_subspace(L: ExactMatrix) -> int:
    return min(varbar(p) for p in covectors(L))


# ---------------------------------------------------------------------------
# Complex-rational matrices


@dataclass(frozen=True)
class CQ:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Q(0)

    @classmethod
    def of(cls, re, im=0) -> "CQ":
        return cls(_frac(re), _frac(im))

    def __add__(self, other: "CQ") -> "CQ":
        return CQ(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CQ") -> "CQ":
        return CQ(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "CQ") -> "CQ":
        return CQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "CQ":
        return CQ(-self.re, -self.im)

    def __truediv__(self, other: "CQ") -> "CQ":
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by complex zero")
        return CQ(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0


CQ_ZERO = CQ(Q(0), Q(0))
CQ_ONE = CQ(Q(1), Q(0))


@dataclass(frozen=True)
class ComplexMatrix:
    real_part: ExactMatrix
    imag_part: ExactMatrix

    def __post_init__(self):
        if (
            self.real_part.rows != self.imag_part.rows
            or self.real_part.cols != self.imag_part.cols
        ):
            raise ValueError("real and imaginary shapes differ")

    @property
    def rows(self) -> int:
        return self.real_part.rows

    @property
    def cols(self) -> int:
        return self.real_part.cols


def rank_complex(M: ComplexMatrix) -> int:
    """Rank over C by Gaussian elimination with exact complex rationals."""
    a = [
        [CQ(M.real_part.entries[i][j], M.imag_part.entries[i][j]) for j in range(M.cols)]
        for i in range(M.rows)
    ]
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


@dataclass(frozen=True)
class LinearHyperbolicityVerdict:
    ok: bool
    failing_condition: str | None
    complement_class: GrassmannianClass | None

    def __bool__(self) -> bool:
        return self.ok


def is_positively_hyperbolic_linear(M: ComplexMatrix) -> LinearHyperbolicityVerdict:
    """Is the complex row space a positively hyperbolic linear subspace?

    True exactly when the row space is defined over R (the stacked real
    and imaginary parts have rank equal to the complex rank) and the
    orthogonal complement of its real form is nonnegative.
    """
    d = rank_complex(M)
    if d != M.rows:
        raise ValueError("matrix must have full row rank over C")
    stacked = ExactMatrix(M.real_part.entries + M.imag_part.entries)
    if rank(stacked) != d:
        return LinearHyperbolicityVerdict(False, "not defined over R", None)
    real_form = row_space_basis(stacked)
    if real_form.rows == real_form.cols:
        # the whole space; complement is zero, vacuously nonnegative
        return LinearHyperbolicityVerdict(True, None, None)
    comp = orthogonal_complement(real_form)
    cls = grassmannian_class(comp)
    if cls is GrassmannianClass.MIXED:
        return LinearHyperbolicityVerdict(False, "orthogonal complement not nonnegative", cls)
    return LinearHyperbolicityVerdict(True, None, cls)


def matroid_of_columns(M: ExactMatrix):
    """Matroid of linear dependencies among the columns (0-based ground set)."""
    from . import matroids

    r = rank(M)
    n = M.cols
    bases = []
    if r == 0:
        return matroids.from_bases(n, 0, [()], validate=False)
    rows_idx = range(M.rows)
    for subset in itertools.combinations(range(n), r):
        if rank(M.submatrix(rows_idx, subset)) == r:
            bases.append(subset)
    return matroids.from_bases(n, r, bases, validate=False)
