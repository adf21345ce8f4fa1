"""Number-theory side of the bound: classification of primes by the factor
count of p^2+p+1, shared-divisor bounds for pairs, and the brute-force scans
that check the supporting lemmas on ranges.

Conventions: classification applies to odd primes p > 3; residue means
p mod 3 (always 1 or 2 for such p); bucket S1/S2/S3plus is the number of
prime factors of p^2+p+1 counted with multiplicity (one, two, three or
more).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .primes import factorize, is_prime, sieve
from .workers import effective_jobs, run_chunks, stride_chunks

BUCKETS = ("S1", "S2", "S3plus")
RESIDUES = (1, 2)


@dataclass(frozen=True)
class PrimeClass:
    prime: int
    residue: int          # prime mod 3
    sigma: int            # prime^2 + prime + 1
    factors: tuple        # sorted prime factors of sigma, with multiplicity

    @property
    def factor_count(self) -> int:
        return len(self.factors)

    @property
    def bucket(self) -> str:
        return BUCKETS[min(self.factor_count, 3) - 1]


def classify_prime(p: int) -> PrimeClass:
    """Classify an odd prime p > 3 by the factorization of p^2 + p + 1."""
    if p <= 3:
        raise ValueError(f"classification needs an odd prime above 3, got {p}")
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    sigma = p * p + p + 1
    return PrimeClass(p, p % 3, sigma, tuple(factorize(sigma)))


@dataclass(frozen=True)
class SharedPrimes:
    a: int
    b: int
    common: tuple              # distinct primes dividing both sigma values
    bound: Fraction | None     # size bound when both residues agree, else None


def shared_primes(a: int, b: int) -> SharedPrimes:
    """Primes dividing both a^2+a+1 and b^2+b+1 for distinct odd primes
    a, b > 3, plus the applicable bound: any shared prime is at most
    (a+b+1)/5 when a = b = 2 (mod 3) and (a+b+1)/3 when a = b = 1 (mod 3);
    mixed residues carry no bound."""
    if a == b:
        raise ValueError("the pair must be distinct")
    for p in (a, b):
        if p <= 3 or not is_prime(p):
            raise ValueError(f"needs odd primes above 3, got {p}")
    g = gcd(a * a + a + 1, b * b + b + 1)
    common = tuple(sorted(set(factorize(g)))) if g > 1 else ()
    if a % 3 == b % 3:
        bound = Fraction(a + b + 1, 5 if a % 3 == 2 else 3)
    else:
        bound = None
    return SharedPrimes(min(a, b), max(a, b), common, bound)


@dataclass(frozen=True)
class Lemma1Violation:
    a: int
    b: int
    p: int
    bound: Fraction


def _lemma1_chunk(args) -> list:
    primes, sigmas, indices = args
    out = []
    for i in indices:
        a = primes[i]
        sa = sigmas[i]
        ra = a % 3
        for j in range(i + 1, len(primes)):
            if primes[j] % 3 != ra:
                continue
            g = gcd(sa, sigmas[j])
            if g == 1:
                continue
            b = primes[j]
            bound = Fraction(a + b + 1, 5 if ra == 2 else 3)
            for p in sorted(set(factorize(g))):
                if p > bound:
                    out.append(Lemma1Violation(a, b, p, bound))
    return out


def lemma1_scan(max_prime: int, jobs: int | None = 1) -> list:
    """Check every same-residue pair of odd primes 3 < a < b <= max_prime:
    each prime dividing both a^2+a+1 and b^2+b+1 must respect the residue
    bound. Returns violations sorted by (a, b, p); the expectation is none."""
    primes = [p for p in sieve(max_prime) if p > 3]
    sigmas = [p * p + p + 1 for p in primes]
    index_chunks = stride_chunks(list(range(len(primes))), _parts(jobs, len(primes)))
    chunks = [(primes, sigmas, idxs) for idxs in index_chunks]
    results = run_chunks(_lemma1_chunk, chunks, jobs)
    merged = [v for part in results for v in part]
    merged.sort(key=lambda v: (v.a, v.b, v.p))
    return merged


def _parts(jobs, size):
    return max(1, min(effective_jobs(jobs), size)) if size else 1


@dataclass(frozen=True)
class Lemma2Solution:
    p: int
    q: int
    r: int

    @property
    def p_is_odd_prime(self) -> bool:
        return self.p > 2 and is_prime(self.p)


def _lemma2_chunk(bounds) -> list:
    lo, hi = bounds
    out = []
    for p in range(lo, hi + 1):
        r = p * p + p + 1
        m = 12 * r - 3
        u = isqrt(m)
        if u * u == m and u >= 3:
            q = (u - 1) // 2
            if q * q + q + 1 == 3 * r:
                out.append(Lemma2Solution(p, q, r))
    return out


def lemma2_scan(max_p: int, jobs: int | None = 1) -> list:
    """All positive integer solutions of p^2+p+1 = r, q^2+q+1 = 3r with
    p <= max_p, sorted by p. The supporting lemma says no solution has p an
    odd prime; solutions that do exist (like p = 2) are incidental."""
    if max_p < 1:
        return []
    parts = _parts(jobs, max_p)
    edges = [1 + (max_p * k) // parts for k in range(parts)] + [max_p + 1]
    chunks = [(edges[k], edges[k + 1] - 1) for k in range(parts) if edges[k] <= edges[k + 1] - 1]
    results = run_chunks(_lemma2_chunk, chunks, jobs)
    merged = [s for part in results for s in part]
    merged.sort(key=lambda s: s.p)
    return merged


def lemma2_violations(solutions) -> list:
    return [s for s in solutions if s.p_is_odd_prime]


def _census_chunk(primes) -> dict:
    counts = {}
    for p in primes:
        k = len(factorize(p * p + p + 1))
        key = (BUCKETS[min(k, 3) - 1], p % 3)
        counts[key] = counts.get(key, 0) + 1
    return counts


def bucket_census(max_prime: int, jobs: int | None = 1) -> dict:
    """Counts of odd primes 3 < p <= max_prime per (bucket, residue) cell;
    all six cells are present, empty ones as zero."""
    primes = [p for p in sieve(max_prime) if p > 3]
    chunks = stride_chunks(primes, _parts(jobs, len(primes)))
    counts = {(bucket, residue): 0 for bucket in BUCKETS for residue in RESIDUES}
    for part in run_chunks(_census_chunk, chunks, jobs):
        for key, n in part.items():
            counts[key] += n
    return counts
