"""Fibonacci and Lucas numbers for any integer index (f_0 = 0, f_1 = f_2 = 1)."""
from functools import lru_cache
from typing import Tuple


def _fib_pair(n: int) -> Tuple[int, int]:
    """(f_n, f_{n+1}) for n >= 0 by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


@lru_cache(maxsize=4096)
def fibonacci(n: int) -> int:
    if n < 0:
        value = fibonacci(-n)
        return value if n % 2 else -value
    return _fib_pair(n)[0]


@lru_cache(maxsize=4096)
def lucas(n: int) -> int:
    if n < 0:
        value = lucas(-n)
        return -value if n % 2 else value
    f_n, f_next = _fib_pair(n)
    # l_n = f_{n-1} + f_{n+1} = 2 f_{n+1} - f_n
    return 2 * f_next - f_n
