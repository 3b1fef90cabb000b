"""Exact integer arithmetic helpers: primality, inverses, integer roots.

Everything here is pure integer arithmetic; no result depends on floating
point. Exponent comparisons with rational exponents are reduced to integer
power comparisons.
"""

from __future__ import annotations

from fractions import Fraction

try:
    import gmpy2

    _HAS_GMPY2 = True
except ImportError:  # pragma: no cover
    _HAS_GMPY2 = False

# Witness set sufficient for a deterministic Miller-Rabin verdict on all
# inputs below 3.3 * 10^24, which covers every 64-bit integer.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit inputs."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with a*s + b*t = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def inv_mod(a: int, m: int) -> int:
    """Modular inverse by extended Euclid; raises ValueError if gcd != 1."""
    g, s, _ = xgcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return s % m


def nth_root_floor(x: int, n: int) -> int:
    """Largest r with r**n <= x, for x >= 0, n >= 1."""
    if x < 0 or n < 1:
        raise ValueError("nth_root_floor requires x >= 0 and n >= 1")
    if n == 1 or x < 2:
        return x
    if _HAS_GMPY2:
        return int(gmpy2.iroot(gmpy2.mpz(x), n)[0])
    # Integer Newton iteration, converging from above.
    r = 1 << -(-x.bit_length() // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r**n > x:
        r -= 1
    return r


def pow_floor(base: int, exponent: Fraction) -> int:
    """Exact floor(base**exponent) for a positive rational exponent."""
    if base < 0 or exponent <= 0:
        raise ValueError("pow_floor requires base >= 0 and exponent > 0")
    return nth_root_floor(base ** exponent.numerator, exponent.denominator)


def exceeds_power(value: int, base: int, exponent: Fraction) -> bool:
    """Exact test value > base**exponent, all in integer arithmetic."""
    if value < 0 or base < 0 or exponent <= 0:
        raise ValueError("exceeds_power requires nonnegative arguments")
    return value ** exponent.denominator > base ** exponent.numerator
