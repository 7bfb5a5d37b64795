"""Number-theoretic helpers and closed-form counts of Schur rings over Z_n.

All arithmetic is exact. Factorization is trial division, which is plenty at
the scales these formulas are evaluated at (well below 10**6).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

__all__ = [
    "is_prime",
    "factorize",
    "divisors",
    "divisor_count",
    "euler_phi",
    "two_adic_split",
    "semiprime_factors",
    "four_p_factor",
    "SemiprimeProfile",
    "FourPProfile",
    "count_prime",
    "count_semiprime",
    "count_semiprime_split",
    "count_2p",
    "count_3p",
    "count_5p",
    "count_4p",
]


def is_prime(m: int) -> bool:
    """Deterministic primality test by trial division."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of m >= 1 as ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    out: list[tuple[int, int]] = []
    rest = m
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(m: int) -> tuple[int, ...]:
    """All positive divisors of m, ascending."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisor_count(m: int) -> int:
    return prod(e + 1 for _, e in factorize(m))


def euler_phi(m: int) -> int:
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(m))


def two_adic_split(m: int) -> tuple[int, int]:
    """Write m = 2**k * a with a odd; returns (k, a)."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return k, m


def semiprime_factors(n: int) -> tuple[int, int] | None:
    """Return (p, q) with p < q primes and n = p*q, or None."""
    f = factorize(n)
    if len(f) == 2 and f[0][1] == 1 and f[1][1] == 1:
        return f[0][0], f[1][0]
    return None


def four_p_factor(n: int) -> int | None:
    """Return the odd prime p when n = 4*p, else None."""
    if n % 4 == 0 and n // 4 > 2 and is_prime(n // 4):
        return n // 4
    return None


@dataclass(frozen=True)
class SemiprimeProfile:
    """Joint factorization shape of p - 1 and q - 1 over a shared prime list.

    primes lists every prime dividing (p-1)(q-1); the exponent vectors may
    contain zeros so that both numbers live over the same support.
    """

    p: int
    q: int
    primes: tuple[int, ...]
    p_exponents: tuple[int, ...]
    q_exponents: tuple[int, ...]

    @classmethod
    def from_primes(cls, p: int, q: int) -> "SemiprimeProfile":
        if not (is_prime(p) and is_prime(q)):
            raise ValueError(f"{p} and {q} must both be prime")
        if p == q:
            raise ValueError("p and q must be distinct")
        fp = dict(factorize(p - 1))
        fq = dict(factorize(q - 1))
        primes = tuple(sorted(set(fp) | set(fq)))
        return cls(
            p=p,
            q=q,
            primes=primes,
            p_exponents=tuple(fp.get(r, 0) for r in primes),
            q_exponents=tuple(fq.get(r, 0) for r in primes),
        )


@dataclass(frozen=True)
class FourPProfile:
    """Shape data for a modulus 4p: p = 2**k * a + 1 with a odd."""

    p: int
    k: int
    a: int
    x: int  # number of divisors of p - 1; always divisible by k + 1

    @classmethod
    def from_prime(cls, p: int) -> "FourPProfile":
        if not is_prime(p) or p == 2:
            raise ValueError(f"expected an odd prime, got {p}")
        k, a = two_adic_split(p - 1)
        x = divisor_count(p - 1)
        return cls(p=p, k=k, a=a, x=x)


def count_prime(p: int) -> int:
    """Number of Schur rings over Z_p: the divisor count of p - 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return divisor_count(p - 1)


def count_semiprime(p: int, q: int) -> int:
    """Number of Schur rings over Z_pq for distinct primes p, q.

    The count splits as (number of subgroups of the unit group of Z_pq)
    + 2 * tau(p-1) * tau(q-1) wedge products + 1 trivial ring, with the
    subgroup lattice size evaluated prime by prime over the shared support
    of p - 1 and q - 1.
    """
    prof = SemiprimeProfile.from_primes(p, q)
    lattice = 1
    for r, k, ell in zip(prof.primes, prof.p_exponents, prof.q_exponents):
        lattice *= sum(
            euler_phi(r**j) * (k - j + 1) * (ell - j + 1)
            for j in range(min(k, ell) + 1)
        )
    wedges = 2 * prod(
        (k + 1) * (ell + 1)
        for k, ell in zip(prof.p_exponents, prof.q_exponents)
    )
    return lattice + wedges + 1


def count_semiprime_split(p: int, q: int, *, totient_coefficient: bool = True) -> int:
    """Semiprime count via the 2-adic shapes p = 2**k*a + 1, q = 2**l*b + 1.

    Requires gcd(a, b) = 1. The j-th summand carries phi(2**j) = 2**(j-1);
    passing totient_coefficient=False replaces it with 2**j, a plausible
    looking variant that overcounts (e.g. 79 instead of 67 at p=5, q=13) and
    is kept only so the discrepancy can be demonstrated.
    """
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError(f"{p}, {q} must be distinct primes")
    k, a = two_adic_split(p - 1)
    ell, b = two_adic_split(q - 1)
    if gcd(a, b) != 1:
        raise ValueError(f"odd parts {a} and {b} must be coprime")
    x = divisor_count(p - 1)
    y = divisor_count(q - 1)
    bracket = 3 * (k + 1) * (ell + 1)
    for j in range(1, min(k, ell) + 1):
        coeff = euler_phi(2**j) if totient_coefficient else 2**j
        bracket += coeff * (k - j + 1) * (ell - j + 1)
    scale, rem = divmod(x * y, (k + 1) * (ell + 1))
    assert rem == 0
    return bracket * scale + 1


def count_2p(p: int) -> int:
    """Number of Schur rings over Z_2p: 3*tau(p-1) + 1."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"expected an odd prime, got {p}")
    return 3 * divisor_count(p - 1) + 1


def count_3p(p: int) -> int:
    """Number of Schur rings over Z_3p for a prime p != 3."""
    if not is_prime(p) or p == 3:
        raise ValueError(f"expected a prime different from 3, got {p}")
    prof = FourPProfile.from_prime(p) if p != 2 else None
    if prof is None:
        # p = 2 reduces to the 2p = 6 case counted the other way around
        return count_2p(3)
    value, rem = divmod((7 * prof.k + 6) * prof.x, prof.k + 1)
    assert rem == 0
    return value + 1


def count_5p(p: int) -> int:
    """Number of Schur rings over Z_5p for a prime p != 5."""
    if not is_prime(p) or p == 5:
        raise ValueError(f"expected a prime different from 5, got {p}")
    if p == 2:
        return count_2p(5)
    prof = FourPProfile.from_prime(p)
    value, rem = divmod((13 * prof.k + 7) * prof.x, prof.k + 1)
    assert rem == 0
    return value + 1


def count_4p(p: int) -> int:
    """Number of Schur rings over Z_4p: ((15k + 14)/(k + 1)) * x + 3."""
    prof = FourPProfile.from_prime(p)
    value, rem = divmod((15 * prof.k + 14) * prof.x, prof.k + 1)
    assert rem == 0
    return value + 3
