"""Independent verification by counting points over finite fields.

A balanced polynomial value predicts point counts: the prediction for the
field with q^d elements is the value at q^d.  From the counts over the tower
F_q, F_{q^2}, ... we recover how many Frobenius orbits of geometric points
have each degree (Moebius inversion), and from those orbit counts we count

  * effective configurations with multiplicity (symmetric powers):
    coefficient of t^n in prod_d (1 - t^d)^(-N_d),
  * multiplicity-free configurations (stable n-element subsets):
    coefficient of t^n in prod_d (1 + t^d)^(N_d),
  * ordered configurations of rational points: the falling factorial of the
    F_q count.

These counts are combinatorial facts about Frobenius orbits and make no use
of the formulas they are meant to check.  A small brute-force enumeration of
2x2 invertible matrices modulo scalars grounds the base counts used in the
worked examples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .poly import BivarPoly

PGL2_SIZE_BOUND = 10**6


def _mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius argument must be positive")
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


@dataclass(frozen=True)
class PointCountProfile:
    """Counts over the field tower: counts[d-1] is the count over F_{q^d}."""

    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be a prime power >= 2")
        if any(c < 0 for c in self.counts):
            raise ValueError("point counts must be nonnegative")
        # divisibility of the Moebius inversion must already hold
        for d in range(1, len(self.counts) + 1):
            total = sum(
                _mobius(d // e) * self.counts[e - 1] for e in range(1, d + 1) if d % e == 0
            )
            if total % d:
                raise ValueError(f"counts are not realizable: degree {d} inversion is not integral")

    @property
    def depth(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class ClosedPointCounts:
    """N[d-1] = number of degree-d Frobenius orbits of geometric points."""

    q: int
    N: tuple[int, ...]


def profile_from_epoly(p: BivarPoly, q: int, n_max: int) -> PointCountProfile:
    """Predicted counts of a balanced polynomial value over F_{q^d}, d = 1..n_max."""
    if not p.is_balanced():
        raise ValueError("profile requires a balanced polynomial")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    counts = tuple(p.eval_balanced(q**d) for d in range(1, n_max + 1))
    return PointCountProfile(q, counts)


def closed_points(profile: PointCountProfile) -> ClosedPointCounts:
    """Moebius inversion of the tower counts into orbit counts per degree."""
    ns = []
    for d in range(1, profile.depth + 1):
        total = sum(
            _mobius(d // e) * profile.counts[e - 1]
            for e in range(1, d + 1)
            if d % e == 0
        )
        quot, rem = divmod(total, d)
        if rem:
            raise ValueError(f"non-integral orbit count at degree {d}")
        if quot < 0:
            raise ValueError(f"negative orbit count at degree {d}")
        if d * quot > profile.counts[d - 1]:
            raise ValueError(f"orbit count at degree {d} exceeds the point count")
        ns.append(quot)
    return ClosedPointCounts(profile.q, tuple(ns))


def _mul_truncated(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j > order:
                    break
                out[i + j] += ai * bj
    return out


def count_sym(cp: ClosedPointCounts, n: int) -> int:
    """Number of degree-n effective configurations (multiplicities allowed)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > len(cp.N):
        raise ValueError(f"need orbit counts up to degree {n}, have {len(cp.N)}")
    series = [1] + [0] * n
    for d in range(1, n + 1):
        nd = cp.N[d - 1]
        if not nd:
            continue
        factor = [0] * (n + 1)
        for k in range(0, n // d + 1):
            factor[k * d] = comb(nd + k - 1, k)
        series = _mul_truncated(series, factor, n)
    return series[n]


def count_unordered_config(cp: ClosedPointCounts, n: int) -> int:
    """Number of Frobenius-stable n-element subsets of distinct geometric points."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > len(cp.N):
        raise ValueError(f"need orbit counts up to degree {n}, have {len(cp.N)}")
    series = [1] + [0] * n
    for d in range(1, n + 1):
        nd = cp.N[d - 1]
        if not nd:
            continue
        factor = [0] * (n + 1)
        for k in range(0, n // d + 1):
            factor[k * d] = comb(nd, k)
        series = _mul_truncated(series, factor, n)
    return series[n]


def count_ordered_config(profile: PointCountProfile, n: int) -> int:
    """Number of ordered n-tuples of distinct rational points (falling factorial)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    count = 1
    base = profile.counts[0] if profile.counts else 0
    for i in range(n):
        count *= base - i  # hits a zero factor as soon as n exceeds the count
    return count


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _field_tables(q: int, d: int) -> tuple[int, list[list[int]]]:
    """Multiplication table of F_{q^d} for d in {1, 2}, elements coded 0..q^d-1.

    The quadratic extension is built as residues modulo an irreducible monic
    x^2 + b*x + c found by searching for a quadratic with no root; element
    lo + hi*q codes lo + hi*x.
    """
    if d == 1:
        return q, [[(i * j) % q for j in range(q)] for i in range(q)]
    found = None
    for b in range(q):
        for c in range(1, q):
            if all((t * t + b * t + c) % q for t in range(q)):
                found = (b, c)
                break
        if found:
            break
    assert found is not None  # a quadratic extension always exists
    b, c = found
    size = q * q
    table = [[0] * size for _ in range(size)]
    for e1 in range(size):
        a0, a1 = e1 % q, e1 // q
        for e2 in range(e1, size):
            b0, b1 = e2 % q, e2 // q
            cross = a1 * b1
            lo = (a0 * b0 - c * cross) % q
            hi = (a0 * b1 + a1 * b0 - b * cross) % q
            table[e1][e2] = table[e2][e1] = lo + hi * q
    return size, table


def enumerate_pgl2(q: int, d: int) -> int:
    """Count 2x2 invertible matrices over F_{q^d} modulo scalars, by enumeration.

    Every matrix is visited through its diagonal product and antidiagonal
    product: for each diagonal pair the invertible completions are the
    antidiagonal pairs with a different product.  The resulting group order
    must be divisible by the number of scalars, and the quotient is returned.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if d not in (1, 2):
        raise ValueError("only d = 1 or 2 are supported")
    if q ** (3 * d) > PGL2_SIZE_BOUND:
        raise ValueError(f"q^(3d) = {q ** (3 * d)} exceeds the bound {PGL2_SIZE_BOUND}")
    size, mul = _field_tables(q, d)
    product_freq = [0] * size
    for x in range(size):
        row = mul[x]
        for y in range(size):
            product_freq[row[y]] += 1
    total_pairs = size * size
    invertible = 0
    for a in range(size):
        row = mul[a]
        for db in range(size):
            invertible += total_pairs - product_freq[row[db]]
    quot, rem = divmod(invertible, size - 1)
    assert rem == 0
    return quot
