"""Exact integer and rational linear algebra.

Everything in here is exact: integer matrices use Python's unbounded ints,
rational data uses fractions.Fraction, and the LP solver is a plain simplex
with Bland's rule so that feasibility answers are deterministic and carry no
tolerance parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def _as_int_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        row = []
        for x in r:
            n = int(x)
            if n != x:
                raise ValueError("matrix entries must be integers")
            row.append(n)
        out.append(row)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows must all have the same length")
    return out


def _hnf_in_place(work: list[list[int]], pivot_cols: int) -> int:
    """Row-reduce `work` over the integers, pivoting only on the first
    `pivot_cols` columns.  Returns the number of pivot rows; rows below that
    are zero in all pivot columns."""
    nrows = len(work)
    row = 0
    for col in range(pivot_cols):
        nz = [i for i in range(row, nrows) if work[i][col] != 0]
        if not nz:
            continue
        while nz:
            i = min(nz, key=lambda k: abs(work[k][col]))
            work[row], work[i] = work[i], work[row]
            if work[row][col] < 0:
                work[row] = [-a for a in work[row]]
            p = work[row][col]
            nz = []
            for k in range(row + 1, nrows):
                if work[k][col] != 0:
                    q = work[k][col] // p
                    work[k] = [a - q * b for a, b in zip(work[k], work[row])]
                    if work[k][col] != 0:
                        nz.append(k)
        p = work[row][col]
        for k in range(row):
            if work[k][col] != 0:
                q = work[k][col] // p
                work[k] = [a - q * b for a, b in zip(work[k], work[row])]
        row += 1
    return row


def hnf(rows) -> tuple[Matrix, int]:
    """Row-style Hermite normal form of the integer row span of `rows`.

    Returns (basis, rank).  Pivot entries are positive, entries above each
    pivot are reduced into [0, pivot), and zero rows are dropped, so the
    result is a canonical basis of the spanned lattice.
    """
    work = _as_int_rows(rows)
    ncols = len(work[0]) if work else 0
    rank = _hnf_in_place(work, ncols)
    return tuple(tuple(r) for r in work[:rank]), rank


def pivot_columns(basis: Matrix) -> tuple[int, ...]:
    """Column index of the leading entry of each HNF basis row."""
    return tuple(next(j for j, x in enumerate(row) if x != 0) for row in basis)


def integer_kernel(rows) -> Matrix:
    """HNF basis of the left integer kernel {x : x * M = 0} of `rows`."""
    work = _as_int_rows(rows)
    k = len(work)
    ncols = len(work[0]) if work else 0
    aug = [work[i] + [int(i == j) for j in range(k)] for i in range(k)]
    rank = _hnf_in_place(aug, ncols)
    kernel = [r[ncols:] for r in aug[rank:]]
    return hnf(kernel)[0]


def solve_rational(rows, rhs, ncols: int | None = None):
    """Solve A*x = b exactly over the rationals.

    Returns (particular, basis) where `basis` spans the solution space of the
    homogeneous system, or None if the system is inconsistent.  `ncols` is
    only needed when the system has no equations.
    """
    a = [[Fraction(x) for x in r] for r in rows]
    b = [Fraction(x) for x in rhs]
    if len(a) != len(b):
        raise ValueError("matrix and right-hand side sizes differ")
    if ncols is None:
        if not a:
            raise ValueError("ncols is required for an empty system")
        ncols = len(a[0])
    if any(len(r) != ncols for r in a):
        raise ValueError("matrix rows must have length ncols")

    aug = [r + [x] for r, x in zip(a, b)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if any(aug[i][ncols] != 0 for i in range(r, len(aug))):
        return None

    particular = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        particular[c] = aug[i][ncols]
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -aug[i][fc]
        basis.append(tuple(vec))
    return tuple(particular), tuple(basis)


@dataclass(frozen=True)
class LPProblem:
    """Rational feasibility problem: A*x = b, with x[i] >= 0 where
    nonneg[i] is true and x[i] free otherwise."""

    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    nonneg: tuple[bool, ...]

    @classmethod
    def build(cls, rows, rhs, nonneg, normalization=None) -> "LPProblem":
        """Assemble a problem, optionally appending the constraint
        `normalization . x = 1`."""
        mat = [tuple(Fraction(x) for x in r) for r in rows]
        b = [Fraction(x) for x in rhs]
        flags = tuple(bool(f) for f in nonneg)
        if normalization is not None:
            mat.append(tuple(Fraction(x) for x in normalization))
            b.append(Fraction(1))
        if len(mat) != len(b) or any(len(r) != len(flags) for r in mat):
            raise ValueError("inconsistent LP dimensions")
        return cls(tuple(mat), tuple(b), flags)


def _pivot(tab: list[list[Fraction]], pr: int, pc: int) -> None:
    inv = tab[pr][pc]
    tab[pr] = [x / inv for x in tab[pr]]
    prow = tab[pr]
    for i in range(len(tab)):
        if i != pr and tab[i][pc] != 0:
            f = tab[i][pc]
            tab[i] = [x - f * y for x, y in zip(tab[i], prow)]


def _minimize(tab, basis, cost, columns) -> Fraction | None:
    """Run simplex iterations with Bland's rule until optimal or unbounded.
    Returns the optimal objective value, or None when unbounded below."""
    while True:
        in_basis = set(basis)
        entering = None
        for j in columns:
            if j in in_basis:
                continue
            rc = cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(len(tab)))
            if rc < 0:
                entering = j
                break
        if entering is None:
            return sum(cost[basis[i]] * tab[i][-1] for i in range(len(tab)))
        leaving = None
        best = None
        for i in range(len(tab)):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving is None:
            return None
        _pivot(tab, leaving, entering)
        basis[leaving] = entering


def _solve(problem: LPProblem, objective=None, maximize=False):
    """Phase-I simplex, plus an optional phase II for a linear objective.

    Returns (witness, value) where witness is a rational point satisfying all
    constraints, or None when infeasible.  Raises ArithmeticError when the
    requested objective is unbounded.
    """
    split: list[tuple[int, int]] = []
    for idx, nn in enumerate(problem.nonneg):
        split.append((idx, 1))
        if not nn:
            split.append((idx, -1))
    ncols = len(split)
    nrows = len(problem.matrix)

    tab: list[list[Fraction]] = []
    for i, (r, b) in enumerate(zip(problem.matrix, problem.rhs)):
        row = [r[idx] * s for idx, s in split]
        if b < 0:
            row = [-x for x in row]
            b = -b
        art = [Fraction(int(i == j)) for j in range(nrows)]
        tab.append(row + art + [b])
    basis = list(range(ncols, ncols + nrows))

    phase1 = [Fraction(0)] * ncols + [Fraction(1)] * nrows
    value = _minimize(tab, basis, phase1, range(ncols + nrows))
    if value != 0:
        return None

    # Drive leftover artificials out of the basis; a row with no usable pivot
    # is redundant and gets dropped.
    keep = []
    for i in range(len(tab)):
        if basis[i] >= ncols:
            pc = next((j for j in range(ncols) if tab[i][j] != 0), None)
            if pc is None:
                continue
            _pivot(tab, i, pc)
            basis[i] = pc
        keep.append(i)
    tab = [tab[i][:ncols] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    opt = None
    if objective is not None:
        cost = [Fraction(objective[idx]) * s for idx, s in split]
        if maximize:
            cost = [-c for c in cost]
        opt = _minimize(tab, basis, cost, range(ncols))
        if opt is None:
            raise ArithmeticError("objective is unbounded on the feasible region")
        if maximize:
            opt = -opt

    values = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    witness = [Fraction(0)] * len(problem.nonneg)
    for col, (idx, s) in enumerate(split):
        witness[idx] += s * values[col]
    return tuple(witness), opt


def lp_feasible(problem: LPProblem):
    """Exact rational feasible point of `problem`, or None when infeasible."""
    res = _solve(problem)
    return None if res is None else res[0]


def lp_extremum(problem: LPProblem, objective, maximize=False):
    """Exact optimum of `objective . x` over the feasible region, or None
    when the region is empty.  Raises ArithmeticError if unbounded."""
    res = _solve(problem, objective=objective, maximize=maximize)
    return None if res is None else res[1]


def scale_to_integers(values) -> tuple[int, tuple[int, ...]]:
    """Smallest positive integer D such that D*values is integral, together
    with the scaled integer tuple."""
    fracs = [Fraction(x) for x in values]
    den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return den, tuple(int(f * den) for f in fracs)
