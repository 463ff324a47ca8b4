"""
Purely periodic continued fractions alpha = [a_0, a_1, ..., a_{l-1}, a_0, ...].

Convergents follow p_n = a_n p_{n-1} + p_{n-2} with (p_{-2}, p_{-1}) = (0, 1)
and (q_{-2}, q_{-1}) = (1, 0), so r_{-1} = 1/0 is the point at infinity.
"""
import logging
import threading
from fractions import Fraction
from typing import Iterable, Tuple

from ..exceptions import DegenerateCrossRatioError, InvalidParameterError
from ..exact import INF, QuadNum, BoundaryPoint

logger = logging.getLogger(__name__)


class PeriodicCF:
    """
    Parameters
    ----------
    quotients : iterable of int
        One period a_0, ..., a_{l-1}; every quotient must be >= 1.
    """

    def __init__(self, quotients: Iterable[int]):
        quotients = tuple(int(a) for a in quotients)
        if not quotients:
            raise InvalidParameterError("a periodic continued fraction needs at least one quotient")
        if any(a < 1 for a in quotients):
            raise InvalidParameterError(f"quotients must be positive integers, got {list(quotients)}")
        self.quotients = quotients
        # index n lives at position n + 2
        self._p = [0, 1]
        self._q = [1, 0]
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, text: str) -> "PeriodicCF":
        """Read a comma-separated quotient list such as ``"1,2,3"``."""
        try:
            return cls(int(part) for part in str(text).replace(" ", "").strip("[]").split(","))
        except ValueError as e:
            raise InvalidParameterError(f"Cannot parse continued fraction {text!r}") from e

    @property
    def period(self) -> int:
        return len(self.quotients)

    def effective(self) -> "PeriodicCF":
        """The same number with an even period (odd periods are doubled)."""
        if self.period % 2:
            return PeriodicCF(self.quotients * 2)
        return self

    @property
    def effective_period(self) -> int:
        return self.period * (2 if self.period % 2 else 1)

    def quotient(self, n: int) -> int:
        if n < 0:
            raise InvalidParameterError(f"quotient index must be >= 0, got {n}")
        return self.quotients[n % self.period]

    def convergent(self, n: int) -> Tuple[int, int]:
        if n < -2:
            raise InvalidParameterError(f"convergents start at index -2, got {n}")
        slot = n + 2
        if slot >= len(self._p):
            with self._lock:
                p, q = self._p, self._q
                while len(p) <= slot:
                    a = self.quotient(len(p) - 2)
                    p.append(a * p[-1] + p[-2])
                    q.append(a * q[-1] + q[-2])
        return self._p[slot], self._q[slot]

    def convergent_point(self, n: int) -> BoundaryPoint:
        """r_n = p_n / q_n as a boundary point (r_{-1} is infinity)."""
        p, q = self.convergent(n)
        if q == 0:
            return INF
        return QuadNum.from_rational(Fraction(p, q))

    def period_matrix(self) -> Tuple[int, int, int, int]:
        """Entries (p_{l-1}, p_{l-2}, q_{l-1}, q_{l-2}) of A, row by row."""
        l = self.period
        p1, q1 = self.convergent(l - 1)
        p0, q0 = self.convergent(l - 2)
        return p1, p0, q1, q0

    def value(self) -> QuadNum:
        """The attracting fixed point alpha > 1 of the period matrix."""
        p, p_prev, q, q_prev = self.period_matrix()
        # q x^2 + (q' - p) x - p' = 0, positive root
        discriminant = (p - q_prev) ** 2 + 4 * q * p_prev
        return (QuadNum.from_rational(p - q_prev) + QuadNum.sqrt_of(discriminant)) / (2 * q)

    def conjugate_value(self) -> QuadNum:
        return self.value().conjugate()

    def cyclic_permutation(self, k: int) -> "PeriodicCF":
        if not 0 <= k < self.period:
            raise InvalidParameterError(f"rotation must satisfy 0 <= k < {self.period}, got {k}")
        return PeriodicCF(self.quotients[k:] + self.quotients[:k])

    def det_rec(self, k: int, n: int) -> int:
        """
        d_k(n) = det [r_k : r_n] = p_k q_n - p_n q_k, computed by the
        recurrence d_k(k) = 0, d_k(k+1) = (-1)^(k-1), d_k(n) = a_n d_k(n-1) + d_k(n-2).
        For n < k the antisymmetry d_k(n) = -d_n(k) is used.
        """
        if min(k, n) < -2:
            raise InvalidParameterError(f"det_rec needs indices >= -2, got ({k}, {n})")
        if n < k:
            return -self.det_rec(n, k)
        if n == k:
            return 0
        previous, current = 0, (1 if (k - 1) % 2 == 0 else -1)
        for j in range(k + 2, n + 1):
            previous, current = current, self.quotient(j) * current + previous
        return current

    def convergent_cross_ratio(self, n: int, m: int) -> QuadNum:
        """
        [r_{n+2}, r_n, r_{m+2}, r_m] from the determinant recurrence:

            (-1)^(m+n) a_{n+2} a_{m+2} / (d_m(n) d_{m+2}(n+2))

        The value is returned with its sign; callers using it as a Rogers
        argument check positivity themselves.
        """
        if m == n:
            raise DegenerateCrossRatioError(f"convergent cross ratio with m = n = {n}")
        denominator = self.det_rec(m, n) * self.det_rec(m + 2, n + 2)
        if denominator == 0:
            raise DegenerateCrossRatioError(f"coinciding convergents for (n, m) = ({n}, {m})")
        sign = -1 if (m + n) % 2 else 1
        numerator = sign * self.quotient(n + 2) * self.quotient(m + 2)
        return QuadNum.from_rational(Fraction(numerator, denominator))

    def permuted_numerator(self, k: int, s: int) -> int:
        """p^(k)(s): numerator of the s-th convergent of the k-th cyclic permutation."""
        return self.cyclic_permutation(k % self.period).convergent(s)[0]

    def __eq__(self, other):
        if not isinstance(other, PeriodicCF):
            return NotImplemented
        return self.quotients == other.quotients

    def __hash__(self):
        return hash(self.quotients)

    def __str__(self):
        return ",".join(str(a) for a in self.quotients)

    def __repr__(self):
        return f"PeriodicCF([{self}])"
