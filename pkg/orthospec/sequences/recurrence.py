"""
Two-term linear recurrences over exact scalars.

Every recurrence the identities need (trace recurrences, the Lucas-type
p_n, the a/b recurrence, the H_n/K_n splits, powers of a 2x2 matrix) is a
Recurrence2 with particular seeds; the factories below name them.
"""
import logging
import threading
from typing import List

from ..exceptions import ExactArithmeticError, InvalidParameterError
from ..exact import QuadNum, as_quad

logger = logging.getLogger(__name__)


class Recurrence2:
    """
    x_n = coeff1 * x_{n-1} + coeff0 * x_{n-2}, seeded with x_0 and x_1.

    Terms are memoized in two append-only tables (n >= 0 and n < 0);
    extension is serialized by a lock, reads of filled slots are lock-free.
    """

    def __init__(self, coeff1, coeff0, seed0, seed1, name: str = "x"):
        self.coeff1 = as_quad(coeff1)
        self.coeff0 = as_quad(coeff0)
        self.name = name
        self._forward: List[QuadNum] = [as_quad(seed0), as_quad(seed1)]
        self._backward: List[QuadNum] = []
        self._lock = threading.Lock()

    @property
    def seed0(self) -> QuadNum:
        return self._forward[0]

    @property
    def seed1(self) -> QuadNum:
        return self._forward[1]

    def _known(self, n: int) -> QuadNum:
        return self._forward[n] if n >= 0 else self._backward[-n - 1]

    def term(self, n: int) -> QuadNum:
        if n >= 0:
            if n < len(self._forward):
                return self._forward[n]
            with self._lock:
                forward = self._forward
                while len(forward) <= n:
                    forward.append(self.coeff1 * forward[-1] + self.coeff0 * forward[-2])
            return self._forward[n]
        slot = -n - 1
        if slot < len(self._backward):
            return self._backward[slot]
        if not self.coeff0:
            raise ExactArithmeticError(f"{self.name}: backward terms need coeff0 != 0")
        with self._lock:
            backward = self._backward
            while len(backward) <= slot:
                m = -len(backward) - 1
                backward.append((self._known(m + 2) - self.coeff1 * self._known(m + 1)) / self.coeff0)
        return self._backward[slot]

    __getitem__ = term

    def terms(self, start: int, count: int) -> List[QuadNum]:
        return [self.term(n) for n in range(start, start + count)]

    def __repr__(self):
        return (f"Recurrence2({self.name}: coeff1={self.coeff1}, coeff0={self.coeff0}, "
                f"seeds=({self.seed0}, {self.seed1}))")


def trace_recurrence(t, name: str = "q") -> Recurrence2:
    """q_0 = 1, q_1 = t, q_n = t q_{n-1} - q_{n-2}; so q_{-1} = 0, q_{-2} = -1."""
    t = as_quad(t)
    return Recurrence2(t, -1, 1, t, name=name)


def difference_recurrence(t, name: str = "p") -> Recurrence2:
    """p_n = q_n - q_{n-1}: p_0 = 1, p_1 = t - 1."""
    t = as_quad(t)
    return Recurrence2(t, -1, 1, t - 1, name=name)


def lucas_type_recurrence(t, name: str = "p") -> Recurrence2:
    """p_0 = 2, p_1 = t; p_n = u^n + u^-n where t = u + 1/u."""
    t = as_quad(t)
    return Recurrence2(t, -1, 2, t, name=name)


def bridge_recurrence(t, name: str = "v") -> Recurrence2:
    """v_{-1} = 2, v_0 = t, v_n = t v_{n-1} - v_{n-2}."""
    t = as_quad(t)
    return Recurrence2(t, -1, t, t * t - 2, name=name)


def two_term_recurrence(a, b, name: str = "p") -> Recurrence2:
    """p_{-2} = 0, p_{-1} = 1, p_n = a p_{n-1} + b p_{n-2}."""
    a, b = as_quad(a), as_quad(b)
    return Recurrence2(a, b, a, a * a + b, name=name)


def split_h_recurrence(t0, name: str = "H") -> Recurrence2:
    """H_1 = 1, H_2 = t0, H_n = t0 H_{n-1} - H_{n-2} (so H_0 = 0)."""
    return Recurrence2(as_quad(t0), -1, 0, 1, name=name)


def split_k_recurrence(t0, name: str = "K") -> Recurrence2:
    """K_0 = 1, K_1 = t0 + 1, K_n = t0 K_{n-1} - K_{n-2}."""
    t0 = as_quad(t0)
    return Recurrence2(t0, -1, 1, t0 + 1, name=name)


class MatrixPowers:
    """
    Entries of A^n for A = [[a, c], [b, d]] in SL(2), indexed as

        A^n = [[p_{2n-1}, p_{2n-2}], [q_{2n-1}, q_{2n-2}]]

    for every integer n. Odd and even subsequences each obey the trace
    recurrence x_n = t x_{n-1} - x_{n-2}, t = a + d.
    """

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (as_quad(v) for v in (a, b, c, d))
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidParameterError(f"[[{a}, {c}], [{b}, {d}]] does not have determinant 1")
        self.trace = self.a + self.d
        self._p_odd = Recurrence2(self.trace, -1, 1, self.a, name="p_odd")
        self._p_even = Recurrence2(self.trace, -1, 0, self.c, name="p_even")
        self._q_odd = Recurrence2(self.trace, -1, 0, self.b, name="q_odd")
        self._q_even = Recurrence2(self.trace, -1, 1, self.d, name="q_even")

    def p(self, k: int) -> QuadNum:
        if k % 2:
            return self._p_odd.term((k + 1) // 2)
        return self._p_even.term((k + 2) // 2)

    def q(self, k: int) -> QuadNum:
        if k % 2:
            return self._q_odd.term((k + 1) // 2)
        return self._q_even.term((k + 2) // 2)


def chebyshev_U(n: int, x):
    """U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}; x may be a BigReal or exact."""
    if n < 0:
        raise ValueError(f"chebyshev_U needs n >= 0, got {n}")
    previous, current = x * 0 + 1, 2 * x
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, 2 * x * current - previous
    return current
