"""Small integer helpers on top of sympy's factorisation."""
from functools import lru_cache

from sympy import factorint, isprime

__all__ = ["is_prime", "prime_divisors", "p_part", "prime_power_base", "squarefree_split"]


def is_prime(n: int) -> bool:
    return n > 1 and bool(isprime(n))


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple:
    return tuple(sorted(factorint(n).items()))


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in _factor(n)]


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def prime_power_base(n: int) -> int:
    """Return p if n = p**a with a >= 1, else 0 (including n = 1)."""
    f = _factor(n) if n > 1 else ()
    return f[0][0] if len(f) == 1 else 0


def squarefree_split(n: int) -> tuple[int, int]:
    """Write a positive integer as s**2 * d with d square-free; return (s, d)."""
    s = d = 1
    for p, e in _factor(n) if n > 1 else ():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d
