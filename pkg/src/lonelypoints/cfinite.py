"""Closed-form sequences with rational bases and recurrence order reduction.

A sequence a_n = sum_i p_i(n) * base_i**n with pairwise distinct nonzero
rational bases and nonzero rational polynomials p_i satisfies a minimal
linear recurrence of order (number of terms) + (sum of polynomial degrees).
Substituting such a sequence into a polynomial q produces another sequence
of the same shape whose bases are products of the original ones; searching
for a q that cancels enough of those products is what reduces the order.
The multiplicative relations among the bases form an integer lattice, which
ties the cancellation question to lonely points of dilated simplices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .counting import ultimate_number_of_lonely_points
from .geometry import DilatedSimplex, Lattice

Poly = tuple[Fraction, ...]  # dense coefficients, constant term first


def _poly(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _poly(out)


def _poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_scale(c: Fraction, p: Poly) -> Poly:
    return _poly(x * c for x in p)


def _poly_eval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class ClosedForm:
    """Sum of terms p(n) * base**n; each term is (poly, base)."""

    terms: tuple[tuple[Poly, Fraction], ...]

    @classmethod
    def of(cls, terms) -> "ClosedForm":
        """Build from (coefficients, base) pairs; coefficients are listed
        constant term first."""
        built = []
        for coeffs, base in terms:
            base = Fraction(base)
            if base == 0:
                raise ValueError("bases must be nonzero")
            built.append((_poly(coeffs), base))
        return cls(tuple(built))


def normalize(cf: ClosedForm) -> ClosedForm:
    """Merge terms with equal bases, drop zero polynomials, sort by base.
    The zero sequence normalizes to an empty term list."""
    merged: dict[Fraction, Poly] = {}
    for poly, base in cf.terms:
        if base == 0:
            raise ValueError("bases must be nonzero")
        merged[base] = _poly_add(merged.get(base, ()), poly)
    terms = tuple(
        (poly, base) for base, poly in sorted(merged.items()) if poly
    )
    return ClosedForm(terms)


def evaluate(cf: ClosedForm, n: int) -> Fraction:
    """Exact value of the sequence at index n >= 0."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    return sum(
        (_poly_eval(poly, n) * base**n for poly, base in cf.terms),
        Fraction(0),
    )


def minimal_order(cf: ClosedForm) -> int:
    """Order of the minimal recurrence: number of terms plus the sum of the
    polynomial degrees.  Expects a normalized form."""
    return sum(len(poly) for poly, _ in cf.terms)


def _cf_add(a: ClosedForm, b: ClosedForm) -> ClosedForm:
    return normalize(ClosedForm(a.terms + b.terms))


def _cf_mul(a: ClosedForm, b: ClosedForm) -> ClosedForm:
    products = []
    for pa, ba in a.terms:
        for pb, bb in b.terms:
            products.append((_poly_mul(pa, pb), ba * bb))
    return normalize(ClosedForm(tuple(products)))


def compose_polynomial(cf: ClosedForm, q) -> ClosedForm:
    """Closed form of q(a_n): expand the powers of the sequence, collect
    equal product bases exactly, and normalize."""
    q = _poly(q)
    result = ClosedForm(())
    for coeff in reversed(q):
        result = _cf_add(
            _cf_mul(result, cf), ClosedForm(((_poly([coeff]), Fraction(1)),))
        )
    return result


def _factor(n: int) -> dict[int, int]:
    """Prime factorization by trial division; inputs here are numerators and
    denominators of sequence bases, which stay desk-sized."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _factor_signed(q: Fraction) -> tuple[int, dict[int, int]]:
    sign = -1 if q < 0 else 1
    exponents = _factor(abs(q.numerator))
    for p, e in _factor(q.denominator).items():
        exponents[p] = exponents.get(p, 0) - e
    return sign, exponents


def exponent_lattice(bases) -> Lattice:
    """Lattice of multiplicative relations {v : prod base_i**v_i = 1} of a
    list of nonzero rationals.

    Relations among the absolute values are the integer kernel of the prime
    exponent matrix; the sign condition that the product of negative bases
    occurs an even number of times cuts out an index-2 sublattice when it is
    not already satisfied.
    """
    bases = [Fraction(b) for b in bases]
    if any(b == 0 for b in bases):
        raise ValueError("bases must be nonzero")
    m = len(bases)
    signs, exponents = zip(*(_factor_signed(b) for b in bases)) if bases else ((), ())
    primes = sorted({p for e in exponents for p in e})
    rows = [[e.get(p, 0) for p in primes] for e in exponents]
    kernel = linalg.integer_kernel(rows) if m else ()

    negative = [i for i in range(m) if signs[i] < 0]
    if negative:
        parities = [sum(row[i] for i in negative) % 2 for row in kernel]
        if any(parities):
            j0 = parities.index(1)
            refined = [
                row if parity == 0 else tuple(a + b for a, b in zip(row, kernel[j0]))
                for idx, (row, parity) in enumerate(zip(kernel, parities))
                if idx != j0
            ]
            refined.append(tuple(2 * a for a in kernel[j0]))
            kernel = linalg.hnf(refined)[0]
    return Lattice(m, kernel)


LinearForm = tuple[Fraction, ...]  # coefficients of the unknowns q_0..q_d


@dataclass(frozen=True)
class SymbolicClosedForm:
    """Expansion of q(a_n) with the coefficients q_0..q_d left symbolic.

    Each term is (base, powers) where powers[j] is the linear form in
    q_0..q_d multiplying n**j.  Bases are the distinct products of the
    sequence bases with total exponent at most the ansatz degree.
    """

    degree: int
    terms: tuple[tuple[Fraction, tuple[LinearForm, ...]], ...]


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(total + 1):
        for rest in _compositions(total - x, parts - 1):
            yield (x,) + rest


def symbolic_compose(cf: ClosedForm, degree: int) -> SymbolicClosedForm:
    """Expand q(a_n) for an ansatz q of the given degree with undetermined
    coefficients, collecting equal product bases exactly."""
    if degree < 1:
        raise ValueError("ansatz degree must be at least 1")
    m = len(cf.terms)
    nq = degree + 1
    table: dict[Fraction, list[list[Fraction]]] = {}
    for k in range(degree + 1):
        for exps in _compositions(k, m):
            multinomial = math.factorial(k)
            for e in exps:
                multinomial //= math.factorial(e)
            poly: Poly = (Fraction(multinomial),)
            base = Fraction(1)
            for (p, b), e in zip(cf.terms, exps):
                base *= b**e
                for _ in range(e):
                    poly = _poly_mul(poly, p)
            slot = table.setdefault(base, [])
            for j, c in enumerate(poly):
                while len(slot) <= j:
                    slot.append([Fraction(0)] * nq)
                slot[j][k] += c
    terms = []
    for base in sorted(table):
        powers = [tuple(lf) for lf in table[base]]
        while powers and not any(powers[-1]):
            powers.pop()
        if powers:
            terms.append((base, tuple(powers)))
    return SymbolicClosedForm(degree, tuple(terms))


def specialize(sym: SymbolicClosedForm, q) -> ClosedForm:
    """Substitute concrete ansatz coefficients into a symbolic expansion."""
    coeffs = [Fraction(c) for c in q]
    if len(coeffs) > sym.degree + 1:
        raise ValueError("polynomial degree exceeds the ansatz degree")
    coeffs += [Fraction(0)] * (sym.degree + 1 - len(coeffs))
    terms = []
    for base, powers in sym.terms:
        poly = _poly(
            sum(c * qc for c, qc in zip(lf, coeffs)) for lf in powers
        )
        if poly:
            terms.append((poly, base))
    return normalize(ClosedForm(tuple(terms)))


@dataclass(frozen=True)
class Reduction:
    """Monic polynomial q of degree >= 1 together with the verified order of
    the composed sequence q(a_n)."""

    q: Poly
    order: int


def reduce_order(cf: ClosedForm, degree: int) -> Reduction | None:
    """Search for a polynomial q of degree at most `degree` such that q(a_n)
    satisfies a recurrence of order lower than a_n does.

    For every way of keeping r-1 of the product bases (r the current order),
    the coefficients of all other bases are equated to zero and the linear
    system is solved exactly.  Solution vectors that are not constants are
    normalized to be monic and accepted only if the recomputed order of the
    composed sequence actually drops.  Subsets of kept bases are tried in
    lexicographic order, so the result is deterministic; None means no q of
    this degree works.
    """
    order = minimal_order(cf)
    if order == 0:
        return None
    sym = symbolic_compose(cf, degree)
    # bases indexed largest first: subsets keeping the high product bases are
    # tried before those that merely drop low-order terms
    terms = sym.terms[::-1]
    nbases = len(terms)
    keep = order - 1
    if keep > nbases:
        return None
    for kept in itertools.combinations(range(nbases), keep):
        kept_set = set(kept)
        rows = [
            lf
            for idx in range(nbases)
            if idx not in kept_set
            for lf in terms[idx][1]
        ]
        solved = linalg.solve_rational(rows, [0] * len(rows), ncols=degree + 1)
        _, nullspace = solved
        for vec in nullspace:
            if not any(vec[1:]):
                continue
            q = _poly(vec)
            q = _poly_scale(1 / q[-1], q)
            composed = compose_polynomial(cf, q)
            achieved = minimal_order(composed)
            if achieved < order:
                return Reduction(q, achieved)
    return None


def uncancellable_term_count(bases, degree: int) -> int:
    """Number of exponent vectors v with |v|_1 <= degree whose base product
    has no cancellation partner: no other vector in the region differs from
    v by a multiplicative relation of the bases."""
    bases = list(bases)
    lat = exponent_lattice(bases)
    points = list(DilatedSimplex(len(bases), degree).integer_points())
    count = 0
    for v in points:
        if not any(
            w != v and lat.member(tuple(a - b for a, b in zip(v, w)))
            for w in points
        ):
            count += 1
    return count


def degree_bound_exists(bases) -> bool:
    """Whether the number of partner-less product terms grows without bound
    as the ansatz degree increases, so that only finitely many degrees can
    admit enough cancellation."""
    return ultimate_number_of_lonely_points(exponent_lattice(bases)).is_infinite
