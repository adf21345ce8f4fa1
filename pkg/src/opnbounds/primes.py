"""Prime generation, primality testing, and integer factorization, sized for
desk-scale scans (inputs comfortably below 2^64 and a bit beyond).

Factorization runs a small trial-division wheel first, then finishes any
surviving cofactor with deterministic Miller-Rabin plus Brent's rho with a
fixed parameter schedule, so repeated runs factor identically.
"""
from __future__ import annotations

from math import gcd, isqrt

# strong-pseudoprime bases making Miller-Rabin deterministic far past any
# input this package meets (valid below 3.3 * 10^24)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 1000


def _simple_sieve(limit: int) -> list:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = bytearray(len(flags[p * p::p]))
    return [i for i, f in enumerate(flags) if f]


def sieve(limit: int) -> list:
    """All primes <= limit via a segmented sieve; memory stays near sqrt(limit)."""
    if limit < 2:
        return []
    root = isqrt(limit)
    base = _simple_sieve(root)
    primes = list(base)
    segment = max(root, 1 << 16)
    low = root + 1
    while low <= limit:
        high = min(low + segment - 1, limit)
        flags = bytearray([1]) * (high - low + 1)
        for p in base:
            start = max(p * p, (low + p - 1) // p * p)
            flags[start - low::p] = bytearray(len(flags[start - low::p]))
        primes.extend(i + low for i, f in enumerate(flags) if f)
        low = high + 1
    return primes


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the sizes this package handles."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n, deterministic schedule."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:  # batching overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare: the whole cycle collapsed, retry with a new constant


def factorize(n: int, trial_bound: int = _TRIAL_BOUND) -> list:
    """Sorted prime factors of n >= 1, with multiplicity; factorize(1) == []."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    factors = []
    for p in (2, 3):
        while n % p == 0:
            factors.append(p)
            n //= p
    d = 5
    step = 2
    while d <= trial_bound and d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += step
        step = 6 - step  # 5, 7, 11, 13, ... wheel
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors.append(m)
            continue
        g = _brent_rho(m)
        stack.append(g)
        stack.append(m // g)
    factors.sort()
    return factors
