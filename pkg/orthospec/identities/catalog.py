"""
The identity catalog.

Every entry is an IdentityTemplate whose builder validates its parameters
and assembles a fresh Identity. Builders create their own recurrences, so
two instantiations never share memo tables.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..contfrac import PeriodicCF
from ..exact import PHI, QuadNum, as_quad
from ..exceptions import InvalidParameterError, SignConventionError, UnknownIdentityError
from ..geometry import Geodesic, Mobius, geodesic_cross_ratio
from ..numerics import GUARD_BITS, BigReal, log, sinh
from ..sequences import (
    MatrixPowers,
    bridge_recurrence,
    chebyshev_U,
    difference_recurrence,
    fibonacci,
    lucas,
    lucas_type_recurrence,
    split_h_recurrence,
    split_k_recurrence,
    trace_recurrence,
    two_term_recurrence,
)
from .base import (
    Decay,
    FiniteTerm,
    GeometricLink,
    Identity,
    NumericArgument,
    PiMultiple,
    RogersOf,
    Series,
)
from .templates import IdentityTemplate, ParameterKind, ParameterSpec

logger = logging.getLogger(__name__)

ONE = QuadNum.from_rational(1)
SQRT5 = QuadNum.sqrt_of(5)


def _frac(numerator, denominator=1) -> QuadNum:
    return QuadNum.from_rational(Fraction(numerator, denominator))


def _check_trace(t) -> QuadNum:
    t = as_quad(t)
    if not t > 2:
        raise InvalidParameterError(f"trace parameter t must exceed 2, got {t}")
    return t


def _larger_root(t: QuadNum) -> QuadNum:
    """u > 1 with u + 1/u = t."""
    return Mobius(t, -1, 1, 0).fixed_points()[0]


def _check_sl2(a: int, b: int, c: int, d: int) -> None:
    if min(a, b, c, d) < 1:
        raise InvalidParameterError(f"matrix entries must be positive integers, got {(a, b, c, d)}")
    if a * d - b * c != 1:
        raise InvalidParameterError(f"[[{a}, {c}], [{b}, {d}]] does not have determinant 1")
    if a + d <= 2:
        raise InvalidParameterError(f"[[{a}, {c}], [{b}, {d}]] is not hyperbolic")


def _identity(id: str, parameters: Dict[str, Any], series: List[Series], rhs,
              finite: Sequence[FiniteTerm] = (), link: Optional[GeometricLink] = None,
              note: str = "") -> Identity:
    return Identity(id=id, parameters=parameters, series=list(series), finite_terms=list(finite),
                    rhs=rhs, link=link, note=note)


# trace-t identities on the double crown and the crown

def _inverse_square(sequence: Callable[[int], QuadNum], shift: int = 0) -> Callable[[int], QuadNum]:
    return lambda n: 1 / sequence(n + shift) ** 2


def _double_crown_sum(t) -> Identity:
    t = _check_trace(t)
    q, p = trace_recurrence(t), difference_recurrence(t)
    return _identity("prop-4.1", {"t": t}, [
        Series("1/q_{n-1}^2", _inverse_square(q.term, -1), start=2, family="i"),
        Series("(t-2)/(p_{n+1} p_{n-1})", lambda n: (t - 2) / (p[n + 1] * p[n - 1]), start=0, family="iv"),
    ], PiMultiple(Fraction(1, 6)),
        link=GeometricLink("double_crown_i", {"t": t}, families=("i", "iv"), include_finite=False))


def _fibonacci_double_crown() -> Identity:
    return _identity("eq-4.7", {}, [
        Series("1/f_{2k+2}^2", lambda k: _frac(1, fibonacci(2 * k + 2) ** 2), start=1, family="i"),
        Series("1/(f_{2k-3} f_{2k+1})", lambda k: _frac(1, fibonacci(2 * k - 3) * fibonacci(2 * k + 1)), start=1, family="iv"),
    ], PiMultiple(Fraction(1, 6)),
        link=GeometricLink("double_crown_i", {"t": 3}, families=("i", "iv"), include_finite=False))


def _fibonacci_double_crown_seven() -> Identity:
    return _identity("eq-4.8", {}, [
        Series("9/f_{4k}^2", lambda k: _frac(9, fibonacci(4 * k) ** 2), start=2, family="i"),
        Series("45/(l_{4k-2} l_{4k+6})", lambda k: _frac(45, lucas(4 * k - 2) * lucas(4 * k + 6)), start=0, family="iv"),
    ], PiMultiple(Fraction(1, 6)),
        link=GeometricLink("double_crown_i", {"t": 7}, families=("i", "iv"), include_finite=False))


def _crown_sum(t) -> Identity:
    t = _check_trace(t)
    q, u = trace_recurrence(t), _larger_root(t)
    return _identity("eq-5.1", {"t": t}, [
        Series("1/q_{n-1}^2", _inverse_square(q.term, -1), start=2, family="i"),
    ], PiMultiple(Fraction(1, 6)), finite=[FiniteTerm(1 - 1 / u ** 2, label="[1/u, u, t, oo]")],
        link=GeometricLink("crown_i", {"t": t}))


def _crown_family(t) -> Identity:
    t = _check_trace(t)
    q, u = trace_recurrence(t), _larger_root(t)
    return _identity("eq-5.2", {"t": t}, [
        Series("1/q_{n-1}^2", _inverse_square(q.term, -1), start=2, family="i"),
    ], RogersOf(1 / u ** 2), link=GeometricLink("crown_i", {"t": t}, families=("i",), include_finite=False))


def _trace_squares(t) -> Identity:
    t = _check_trace(t)
    q, u = trace_recurrence(t), _larger_root(t)
    return _identity("eq-5.3", {"t": t}, [
        Series("1/q_n^2", _inverse_square(q.term), start=1, family="i"),
    ], RogersOf(1 / u ** 2), link=GeometricLink("crown_i", {"t": t}, families=("i",), include_finite=False))


def _trace_differences(t) -> Identity:
    t = _check_trace(t)
    q, u = trace_recurrence(t), _larger_root(t)

    def term(n: int) -> QuadNum:
        return (t - 2) / ((q[n] - q[n - 1]) * (q[n - 2] - q[n - 3]))

    return _identity("eq-5.3b", {"t": t}, [
        Series("(t-2)/((q_n - q_{n-1})(q_{n-2} - q_{n-3}))", term, start=1, family="iv"),
    ], RogersOf(1 - 1 / u ** 2),
        link=GeometricLink("double_crown_i", {"t": t}, families=("iv",), include_finite=False))


def _sinh_ratio(u: QuadNum, k: int) -> NumericArgument:
    def evaluate(precision: int) -> BigReal:
        half_length = log(u.to_real(precision + GUARD_BITS))
        ratio = sinh(half_length) / sinh(k * half_length)
        return (ratio * ratio).with_precision(precision)

    return NumericArgument(evaluate, label=f"sinh^2(log u)/sinh^2({k} log u)")


def _sinh_form(t) -> Identity:
    t = _check_trace(t)
    u = _larger_root(t)
    return _identity("eq-5.4", {"t": t}, [
        Series("sinh^2(log u)/sinh^2(k log u)", lambda k: _sinh_ratio(u, k), start=2),
    ], RogersOf(1 / u ** 2), note="arguments evaluated numerically")


def _bridge_form(t) -> Identity:
    t = _check_trace(t)
    v, u = bridge_recurrence(t), _larger_root(t)
    return _identity("eq-5.7", {"t": t}, [
        Series("((t^2-4)/(v_n - v_{n-2}))^2", lambda n: ((t * t - 4) / (v[n] - v[n - 2])) ** 2, start=2),
    ], RogersOf(1 / u ** 2))


def _golden_even_squares() -> Identity:
    return _identity("eq-5.8a", {}, [
        Series("1/f_{2k}^2", lambda k: _frac(1, fibonacci(2 * k) ** 2), start=2, family="i"),
    ], RogersOf(PHI ** -4), link=GeometricLink("crown_i", {"t": 3}, families=("i",), include_finite=False))


def _golden_even_products() -> Identity:
    return _identity("eq-5.8b", {}, [
        Series("1/(f_{2k-3} f_{2k+1})", lambda k: _frac(1, fibonacci(2 * k - 3) * fibonacci(2 * k + 1)), start=1, family="iv"),
    ], RogersOf(1 - PHI ** -4),
        link=GeometricLink("double_crown_i", {"t": 3}, families=("iv",), include_finite=False))


def _golden_quadruple_squares() -> Identity:
    return _identity("eq-5.9a", {}, [
        Series("9/f_{4k}^2", lambda k: _frac(9, fibonacci(4 * k) ** 2), start=2, family="i"),
    ], RogersOf(PHI ** -8), link=GeometricLink("crown_i", {"t": 7}, families=("i",), include_finite=False))


def _golden_quadruple_products() -> Identity:
    return _identity("eq-5.9b", {}, [
        Series("45/(l_{4k-2} l_{4k+6})", lambda k: _frac(45, lucas(4 * k - 2) * lucas(4 * k + 6)), start=0, family="iv"),
    ], RogersOf(1 - PHI ** -8),
        link=GeometricLink("double_crown_i", {"t": 7}, families=("iv",), include_finite=False))


def _golden_mixed() -> Identity:
    return _identity("eq-5.10", {}, [
        Series("1/(5 f_{2n}^2)", lambda n: _frac(1, 5 * fibonacci(2 * n) ** 2), start=1, family="i"),
        Series("1/l_{2n-1}^2", lambda n: _frac(1, lucas(2 * n - 1) ** 2), start=2, family="i"),
    ], RogersOf(PHI ** -2), link=GeometricLink("crown_i", {"t": SQRT5}, families=("i",), include_finite=False))


# rational traces

def _check_positive(**values) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidParameterError(f"{name} must be a positive integer, got {value}")


def _rational_trace(a: int, b: int) -> Identity:
    _check_positive(a=a, b=b)
    t = _frac(a * a, b) + 2
    q, u = trace_recurrence(t), _larger_root(t)
    return _identity("eq-6.2", {"a": a, "b": b}, [
        Series("1/q_n^2", _inverse_square(q.term), start=1, family="i"),
    ], RogersOf(1 / u ** 2), link=GeometricLink("crown_i", {"t": t}, families=("i",), include_finite=False))


def _rational_trace_sums(a: int, b: int) -> Identity:
    _check_positive(a=a, b=b)
    t = _frac(a * a, b) + 2
    p, u = two_term_recurrence(a, b), _larger_root(t)

    def term(n: int) -> QuadNum:
        total = sum((b ** j * p[2 * n - 2 * j - 1] for j in range(n + 1)), _frac(0))
        return (b ** n / total) ** 2

    return _identity("eq-6.3", {"a": a, "b": b}, [
        Series("(b^n / sum_j b^j p_{2n-2j-1})^2", term, start=1),
    ], RogersOf(1 / u ** 2))


def _powers_of_three() -> Identity:
    def term(k: int) -> QuadNum:
        return _frac(3 ** k, sum(9 ** j for j in range(k + 1))) ** 2

    return _identity("eq-6.4", {}, [
        Series("(3^k / sum_j 9^j)^2", term, start=1, family="i"),
    ], RogersOf(_frac(1, 9)),
        link=GeometricLink("crown_i", {"t": _frac(10, 3)}, families=("i",), include_finite=False))


def _geometric_ratio(n: int) -> Identity:
    if n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n}")

    def term(k: int) -> QuadNum:
        return _frac(n ** k * (n - 1) ** 2, (n ** (k + 1) - 1) ** 2)

    t = QuadNum(0, n + 1, n, n)
    return _identity("eq-7.1", {"n": n}, [
        Series("n^k (n-1)^2/(n^{k+1}-1)^2", term, start=1, family="i"),
    ], RogersOf(_frac(1, n)), link=GeometricLink("crown_i", {"t": t}, families=("i",), include_finite=False))


def _chebyshev_setup(x: Fraction):
    if not x > 1:
        raise InvalidParameterError(f"x must exceed 1, got {x}")
    x = as_quad(x)
    return x, x + QuadNum.sqrt_of((x * x - 1).to_fraction())


def _chebyshev_squares(x: Fraction) -> Identity:
    x, u = _chebyshev_setup(x)
    return _identity("eq-7.3a", {"x": x}, [
        Series("1/U_n(x)^2", lambda n: 1 / chebyshev_U(n, x) ** 2, start=1),
    ], RogersOf(1 / u ** 2))


def _chebyshev_differences(x: Fraction) -> Identity:
    x, u = _chebyshev_setup(x)
    below = {-1: _frac(0), -2: _frac(-1), -3: -2 * x}

    def U(n: int) -> QuadNum:
        return below[n] if n < 0 else chebyshev_U(n, x)

    def term(n: int) -> QuadNum:
        return (2 * x - 2) / ((U(n) - U(n - 1)) * (U(n - 2) - U(n - 3)))

    return _identity("eq-7.3b", {"x": x}, [
        Series("(2x-2)/((U_n - U_{n-1})(U_{n-2} - U_{n-3}))", term, start=1),
    ], RogersOf(1 - 1 / u ** 2))


# matrix powers

def _matrix_series(m: MatrixPowers, b: int, c: int) -> List[Series]:
    return [
        Series("(b/q_{2n-1})^2", lambda n: (b / m.q(2 * n - 1)) ** 2, start=2, family="i_inf"),
        Series("(c/p_{2n-2})^2", lambda n: (c / m.p(2 * n - 2)) ** 2, start=2, family="i_zero"),
        Series("bc/(q_{2n} q_{2n-4})", lambda n: b * c / (m.q(2 * n) * m.q(2 * n - 4)), start=1, family="ii_b"),
        Series("bc/(p_{2n+1} p_{2n-3})", lambda n: b * c / (m.p(2 * n + 1) * m.p(2 * n - 3)), start=1,
               family="ii_a"),
    ]


def _matrix_double_crown(a: int, b: int, c: int, d: int) -> Identity:
    _check_sl2(a, b, c, d)
    m = MatrixPowers(a, b, c, d)
    return _identity("eq-8.4", {"a": a, "b": b, "c": c, "d": d}, _matrix_series(m, b, c),
                     PiMultiple(Fraction(1, 3)), finite=[FiniteTerm(_frac(b * c, a * d), label="bc/ad")],
                     link=GeometricLink("double_crown_ii", {"a": a, "b": b, "c": c, "d": d}))


def _matrix_crown(a: int, b: int, c: int, d: int) -> Identity:
    _check_sl2(a, b, c, d)
    m, u = MatrixPowers(a, b, c, d), _larger_root(as_quad(a + d))
    return _identity("eq-8.5", {"a": a, "b": b, "c": c, "d": d}, _matrix_series(m, b, c)[:1],
                     RogersOf(1 / u ** 2),
                     link=GeometricLink("crown_ii", {"a": a, "b": b, "c": c, "d": d},
                                        families=("i_inf",), include_finite=False))


def _matrix_folded(a: int, b: int, c: int, d: int) -> Identity:
    _check_sl2(a, b, c, d)
    m = MatrixPowers(a, b, c, d)
    squares, _, *products = _matrix_series(m, b, c)
    doubled = Series(squares.name, squares.term, start=squares.start, weight=Fraction(2), family=squares.family)
    return _identity("eq-8.6", {"a": a, "b": b, "c": c, "d": d}, [doubled, *products],
                     PiMultiple(Fraction(1, 3)), finite=[FiniteTerm(_frac(b * c, a * d), label="bc/ad")],
                     note="the i_zero orbit is folded onto i_inf",
                     link=GeometricLink("double_crown_ii", {"a": a, "b": b, "c": c, "d": d}))


def _fibonacci_matrix(n: int) -> Identity:
    _check_positive(n=n)
    entries = {"a": fibonacci(2 * n + 1), "b": fibonacci(2 * n), "c": fibonacci(2 * n), "d": fibonacci(2 * n - 1)}
    return _identity("eq-8.7", {"n": n}, [
        Series("(f_{2n}/f_{2nk})^2", lambda k: _frac(fibonacci(2 * n), fibonacci(2 * n * k)) ** 2, start=2, family="i_inf"),
    ], RogersOf(PHI ** (-4 * n)),
        link=GeometricLink("crown_ii", entries, families=("i_inf",), include_finite=False))


def _two_periodic(a: int, b: int) -> Identity:
    _check_positive(a=a, b=b)
    cf = PeriodicCF([a, b])
    alpha = cf.value()

    def term(n: int) -> QuadNum:
        return _frac(b, cf.convergent(2 * n - 1)[1]) ** 2

    return _identity("eq-9.2", {"a": a, "b": b}, [
        Series("(b/q_{2n-1})^2", term, start=2, family="i_inf"),
    ], RogersOf(1 / (b * alpha + 1) ** 2),
        link=GeometricLink("crown_ii", {"a": a * b + 1, "b": b, "c": a, "d": 1},
                           families=("i_inf",), include_finite=False))


# Lucas rewrites and the H/K splits

def _check_index(k: int) -> None:
    if k < 0:
        raise InvalidParameterError(f"k must be non-negative, got {k}")


def _lucas_split(k: int) -> Identity:
    _check_index(k)
    odd, step = 2 * k + 1, 4 * k + 2
    numerator = lucas(odd) ** 2
    return _identity("eq-10.1", {"k": k}, [
        Series("l_{2k+1}^2/l_{n(4k+2)-(2k+1)}^2", lambda n: _frac(numerator, lucas(n * step - odd) ** 2), start=2),
        Series("l_{2k+1}^2/(5 f_{n(4k+2)}^2)", lambda n: _frac(numerator, 5 * fibonacci(n * step) ** 2), start=1),
    ], RogersOf(PHI ** -step))


def _split_setup(k: int):
    _check_index(k)
    k0 = 2 * k + 1
    t0 = fibonacci(k0) * SQRT5
    return k0, t0, t0 + 2, split_h_recurrence(t0), split_k_recurrence(t0)


def _hk_split(k: int) -> Identity:
    k0, _, t2, H, K = _split_setup(k)
    return _identity("eq-11.1", {"k": k}, [
        Series("1/(t^2 H_n^2)", lambda n: 1 / (t2 * H[n] ** 2), start=1),
        Series("1/K_n^2", _inverse_square(K.term), start=1),
    ], RogersOf(PHI ** -k0))


def _hk_lucas(k: int) -> Identity:
    k0, _, t2, _, K = _split_setup(k)
    numerator = lucas(k0) ** 2
    return _identity("eq-11.4", {"k": k}, [
        Series("l^2/(t^2 l_{(2n-1)k0}^2)", lambda n: numerator / (t2 * lucas((2 * n - 1) * k0) ** 2), start=1),
        Series("l^2/(5 t^2 f_{2n k0}^2)", lambda n: numerator / (5 * t2 * fibonacci(2 * n * k0) ** 2), start=1),
        Series("1/K_n^2", _inverse_square(K.term), start=1),
    ], RogersOf(PHI ** -k0))


def _hk_surd(k: int) -> Identity:
    k0, _, t2, H, _ = _split_setup(k)
    lk = lucas(k0)

    def leading(n: int) -> QuadNum:
        return (lk / (lucas((2 * n - 1) * k0) + SQRT5 * fibonacci(2 * n * k0))) ** 2

    def trailing(n: int) -> QuadNum:
        return (lk / (lucas((2 * n - 1) * k0) + SQRT5 * fibonacci(2 * (n - 1) * k0))) ** 2

    return _identity("eq-11.5", {"k": k}, [
        Series("1/(t^2 H_n^2)", lambda n: 1 / (t2 * H[n] ** 2), start=1),
        Series("(l/(l_{(2n-1)k0} + sqrt5 f_{2n k0}))^2", leading, start=1),
        Series("(l/(l_{(2n-1)k0} + sqrt5 f_{2(n-1)k0}))^2", trailing, start=2),
    ], RogersOf(PHI ** -k0))


# third pairing and its Fibonacci forms

def _third_pairing(t) -> Identity:
    t = _check_trace(t)
    q, p = trace_recurrence(t), lucas_type_recurrence(t)
    gap = t * t - 4
    return _identity("eq-12.1", {"t": t}, [
        Series("1/q_n^2", _inverse_square(q.term), start=1, weight=Fraction(2)),
        Series("(t^2-4)/(p_n p_{n-2})", lambda n: gap / (p[n] * p[n - 2]), start=1, family="iii"),
        Series("(t^2-4)/(p_{n+1} p_{n-1})", lambda n: gap / (p[n + 1] * p[n - 1]), start=1, family="iv"),
    ], PiMultiple(Fraction(1, 3)), link=GeometricLink("third_pair", {"t": t}))


_FIFTH = FiniteTerm(_frac(1, 5), weight=Fraction(1, 2), label="1/5")


def _odd_lucas_products() -> List[Series]:
    return [
        Series("1/(l_{2k-2} l_{2k})", lambda k: _frac(1, lucas(2 * k - 2) * lucas(2 * k)), start=1),
        Series("1/(5 f_{2k-3} f_{2k-1})", lambda k: _frac(1, 5 * fibonacci(2 * k - 3) * fibonacci(2 * k - 1)), start=2),
    ]


def _golden_third() -> Identity:
    return _identity("eq-12.2", {}, [
        Series("1/(5 f_{2k}^2)", lambda k: _frac(1, 5 * fibonacci(2 * k) ** 2), start=1),
        Series("1/l_{2k+1}^2", lambda k: _frac(1, lucas(2 * k + 1) ** 2), start=1),
        *_odd_lucas_products(),
    ], PiMultiple(Fraction(1, 6)), finite=[_FIFTH],
        link=GeometricLink("third_pair", {"t": SQRT5}, multiplicity=2))


def _golden_tenth() -> Identity:
    return _identity("eq-12.3", {}, _odd_lucas_products(), PiMultiple(Fraction(1, 10)), finite=[_FIFTH],
                     link=GeometricLink("third_pair", {"t": SQRT5}, families=("iii", "iv"), multiplicity=2))


# parabolic pairs

def _parabolic_vertices(vertices: tuple) -> Identity:
    points = (_frac(0),) + tuple(vertices) + (_frac(1),)
    for left, right in zip(points, points[1:]):
        if not left < right:
            raise InvalidParameterError(
                f"vertices must increase strictly inside (0, 1), got {[str(v) for v in vertices]}")
    sides = len(points) - 1
    n = sides + 2
    v = dict(enumerate(points, start=1))

    def family(i: int, j: int) -> Series:
        c = (v[i + 1] - v[i]) * (v[j + 1] - v[j])

        def term(k: int) -> QuadNum:
            return c / ((k + v[j] - v[i]) * (k + v[j + 1] - v[i + 1]))

        adjacent = (i, j) == (sides, 1)
        return Series(f"pair {i},{j}", term, start=2 if adjacent else 1, decay=Decay.QUADRATIC,
                      coefficient=float(c), family=f"{i},{j}")

    series = [family(i, j) for i in range(1, sides + 1) for j in range(1, sides + 1)]
    finite = [FiniteTerm(ONE, label=f"pair {sides},1 at k=1")]
    for i in range(1, sides + 1):
        for j in range(1, i):
            value = ((v[i + 1] - v[i]) * (v[j + 1] - v[j])) / ((v[i] - v[j]) * (v[i + 1] - v[j + 1]))
            finite.append(FiniteTerm(value, label=f"sides {i},{j}"))
    return _identity("eq-13.2", {"vertices": ",".join(str(x) for x in vertices)}, series,
                     PiMultiple(Fraction(n - 2, 3)), finite=finite,
                     link=GeometricLink("parabolic", {"vertices": tuple(vertices)}))


def _basel() -> Identity:
    return _identity("eq-13.3", {}, [
        Series("1/k^2", lambda k: _frac(1, k * k), start=2, decay=Decay.QUADRATIC, family="1,1"),
    ], PiMultiple(Fraction(1, 6)),
        link=GeometricLink("parabolic", {"vertices": ()}, families=("1,1",), include_finite=False))


def _golden_parabolic() -> Identity:
    phi2, phi4 = PHI ** 2, PHI ** 4
    return _identity("eq-13.4", {}, [
        Series("1/(phi^2 k^2)", lambda k: 1 / (phi2 * k * k), start=1, decay=Decay.QUADRATIC,
               coefficient=float(1 / phi2)),
        Series("1/(phi^4 k^2)", lambda k: 1 / (phi4 * k * k), start=1, decay=Decay.QUADRATIC,
               coefficient=float(1 / phi4)),
        Series("1/((phi k - 1)(phi^2 k - 1))", lambda k: 1 / ((PHI * k - 1) * (phi2 * k - 1)), start=2,
               weight=Fraction(2), decay=Decay.QUADRATIC, coefficient=float(PHI ** -3)),
    ], PiMultiple(Fraction(2, 3)), finite=[FiniteTerm(ONE, weight=Fraction(2))],
        link=GeometricLink("parabolic", {"vertices": (PHI - 1,)}))


def _rational_parabolic(p: int, q: int) -> Identity:
    if not 0 < p < q:
        raise InvalidParameterError(f"need 0 < p < q, got p={p}, q={q}")
    r = q - p
    return _identity("eq-13.5", {"p": p, "q": q}, [
        Series("p^2/(q^2 k^2)", lambda k: _frac(p * p, q * q * k * k), start=1, decay=Decay.QUADRATIC,
               coefficient=p * p / (q * q), family="1,1"),
        Series("r^2/(q^2 k^2)", lambda k: _frac(r * r, q * q * k * k), start=1, decay=Decay.QUADRATIC,
               coefficient=r * r / (q * q), family="2,2"),
        Series("pr/((qk - p)(qk - r))", lambda k: _frac(p * r, (q * k - p) * (q * k - r)), start=2,
               weight=Fraction(2), decay=Decay.QUADRATIC, coefficient=p * r / (q * q)),
    ], PiMultiple(Fraction(2, 3)), finite=[FiniteTerm(ONE, weight=Fraction(2))],
        link=GeometricLink("parabolic", {"vertices": (_frac(p, q),)}))


# even-period continued fractions

def _positive(value: QuadNum, where: str) -> QuadNum:
    if value.sign() <= 0:
        raise SignConventionError(f"non-positive cross ratio {value} at {where}")
    return value


def _even_period(id: str, quotients: PeriodicCF,
                 pair_term: Callable[[PeriodicCF, int, int, int], QuadNum]) -> Identity:
    cf = quotients.effective()
    period, half = cf.period, cf.period // 2
    adjacent = (0, half - 1)

    def family(i: int, j: int) -> Series:
        return Series(f"pair {i},{j}", lambda k: _positive(pair_term(cf, k, i, j), f"k={k}, i={i}, j={j}"),
                      start=2 if (i, j) == adjacent else 1, family=f"{i},{j}")

    series = [family(i, j) for i in range(half) for j in range(half)]
    finite = [FiniteTerm(ONE, label=f"pair {adjacent[0]},{adjacent[1]} at k=1")]
    for i in range(half):
        for j in range(i):
            finite.append(FiniteTerm(_positive(pair_term(cf, 0, i, j), f"i={i}, j={j}"), label=f"sides {i},{j}"))
    axis = Geodesic(cf.conjugate_value(), cf.value())
    r = cf.convergent_point
    for m in range(half):
        finite.append(FiniteTerm(geodesic_cross_ratio(axis, Geodesic(r(2 * m + 1), r(2 * m - 1))),
                                 label=f"axis, side {m}"))
    return _identity(id, {"cf": str(quotients)}, series, PiMultiple(Fraction(period, 6)), finite=finite,
                     link=GeometricLink("even_period_cf", {"cf": quotients}))


def _determinant_pair(cf: PeriodicCF, k: int, i: int, j: int) -> QuadNum:
    return cf.convergent_cross_ratio(k * cf.period + 2 * i - 1, 2 * j - 1)


def _convergent_identity(cf: PeriodicCF) -> Identity:
    return _even_period("prop-15.1", cf, _determinant_pair)


def _rotation_identity(cf: PeriodicCF) -> Identity:
    rotations: Dict[int, PeriodicCF] = {}

    def numerator(cf: PeriodicCF, rotation: int, s: int) -> int:
        rotation %= cf.period
        if rotation not in rotations:
            rotations[rotation] = cf.cyclic_permutation(rotation)
        return rotations[rotation].convergent(s)[0]

    def pair(cf: PeriodicCF, k: int, i: int, j: int) -> QuadNum:
        s = k * cf.period + 2 * i - 2 * j - 2
        top = cf.quotient(2 * i + 1) * cf.quotient(2 * j + 1)
        return _frac(top, numerator(cf, 2 * j + 1, s) * numerator(cf, 2 * j + 3, s))

    return _even_period("thm-15.3", cf, pair)


def _param(name: str, kind: ParameterKind, default, description: str = "") -> ParameterSpec:
    return ParameterSpec(name, kind, default, description)


_T = _param("t", ParameterKind.SURD, "3", "trace, t > 2")
_ABCD = (_param("a", ParameterKind.INTEGER, 2), _param("b", ParameterKind.INTEGER, 1),
         _param("c", ParameterKind.INTEGER, 1), _param("d", ParameterKind.INTEGER, 1))
_CF = _param("cf", ParameterKind.QUOTIENTS, "1,2,3", "one period of quotients")

CATALOG = (
    IdentityTemplate("prop-4.1", (_T,), "double crown, trace t", _double_crown_sum,
                     "sum of the two orbit families of the double crown is pi^2/6"),
    IdentityTemplate("eq-4.7", (), "double crown, t = 3", _fibonacci_double_crown,
                     "Fibonacci form of the double crown sum"),
    IdentityTemplate("eq-4.8", (), "double crown, t = 7", _fibonacci_double_crown_seven,
                     "Fibonacci/Lucas form at t = 7"),
    IdentityTemplate("eq-5.1", (_T,), "crown, trace t", _crown_sum, "crown orbit plus the axis term"),
    IdentityTemplate("eq-5.2", (_T,), "crown family", _crown_family, "crown orbit equals L(1/u^2)"),
    IdentityTemplate("eq-5.3", (_T,), "trace squares", _trace_squares, "sum of L(1/q_n^2)"),
    IdentityTemplate("eq-5.3b", (_T,), "trace differences", _trace_differences, "complementary family"),
    IdentityTemplate("eq-5.4", (_T,), "hyperbolic sine form", _sinh_form, "numerical arguments"),
    IdentityTemplate("eq-5.7", (_T,), "bridge sequence", _bridge_form, "differences of v_n"),
    IdentityTemplate("eq-5.8a", (), "golden, even Fibonacci squares", _golden_even_squares),
    IdentityTemplate("eq-5.8b", (), "golden, even Fibonacci products", _golden_even_products),
    IdentityTemplate("eq-5.9a", (), "golden, quadruple squares", _golden_quadruple_squares),
    IdentityTemplate("eq-5.9b", (), "golden, quadruple products", _golden_quadruple_products),
    IdentityTemplate("eq-5.10", (), "golden, mixed Fibonacci/Lucas", _golden_mixed),
    IdentityTemplate("eq-6.2", (_param("a", ParameterKind.INTEGER, 2), _param("b", ParameterKind.INTEGER, 3)),
                     "rational trace a^2/b + 2", _rational_trace),
    IdentityTemplate("eq-6.3", (_param("a", ParameterKind.INTEGER, 2), _param("b", ParameterKind.INTEGER, 3)),
                     "rational trace, explicit sums", _rational_trace_sums),
    IdentityTemplate("eq-6.4", (), "powers of three", _powers_of_three),
    IdentityTemplate("eq-7.1", (_param("n", ParameterKind.INTEGER, 2, "n >= 2"),), "geometric ratio",
                     _geometric_ratio, "L(1/n)"),
    IdentityTemplate("eq-7.3a", (_param("x", ParameterKind.RATIONAL, "2", "x > 1"),), "Chebyshev squares",
                     _chebyshev_squares),
    IdentityTemplate("eq-7.3b", (_param("x", ParameterKind.RATIONAL, "2", "x > 1"),), "Chebyshev differences",
                     _chebyshev_differences),
    IdentityTemplate("eq-8.4", _ABCD, "matrix double crown", _matrix_double_crown, "four orbit families"),
    IdentityTemplate("eq-8.5", _ABCD, "matrix crown", _matrix_crown),
    IdentityTemplate("eq-8.6", _ABCD, "matrix double crown, folded", _matrix_folded),
    IdentityTemplate("eq-8.7", (_param("n", ParameterKind.INTEGER, 1),), "Fibonacci matrix powers",
                     _fibonacci_matrix),
    IdentityTemplate("eq-9.2", (_param("a", ParameterKind.INTEGER, 1), _param("b", ParameterKind.INTEGER, 2)),
                     "period-two continued fraction", _two_periodic),
    IdentityTemplate("eq-10.1", (_param("k", ParameterKind.INTEGER, 1),), "Lucas split", _lucas_split),
    IdentityTemplate("eq-11.1", (_param("k", ParameterKind.INTEGER, 0),), "H/K split", _hk_split),
    IdentityTemplate("eq-11.4", (_param("k", ParameterKind.INTEGER, 0),), "H/K split, Lucas form", _hk_lucas),
    IdentityTemplate("eq-11.5", (_param("k", ParameterKind.INTEGER, 0),), "H/K split, surd form", _hk_surd),
    IdentityTemplate("eq-12.1", (_T,), "third pairing, trace t", _third_pairing),
    IdentityTemplate("eq-12.2", (), "third pairing, golden", _golden_third),
    IdentityTemplate("eq-12.3", (), "pi^2/10", _golden_tenth),
    IdentityTemplate("eq-13.2", (_param("vertices", ParameterKind.VERTICES, "1/2", "interior vertices"),),
                     "parabolic polygon", _parabolic_vertices, "quadratic decay"),
    IdentityTemplate("eq-13.3", (), "Basel", _basel, "sum of L(1/k^2), k >= 2"),
    IdentityTemplate("eq-13.4", (), "golden parabolic", _golden_parabolic),
    IdentityTemplate("eq-13.5", (_param("p", ParameterKind.INTEGER, 2), _param("q", ParameterKind.INTEGER, 5)),
                     "rational parabolic vertex p/q", _rational_parabolic),
    IdentityTemplate("prop-15.1", (_CF,), "even-period continued fraction", _convergent_identity),
    IdentityTemplate("thm-15.3", (_CF,), "even-period, rotated numerators", _rotation_identity),
)

_BY_ID = {template.id: template for template in CATALOG}


def catalog() -> List[IdentityTemplate]:
    """All templates, in catalog order."""
    return list(CATALOG)


def get_template(id: str) -> IdentityTemplate:
    if id not in _BY_ID:
        raise UnknownIdentityError(f"Unknown identity '{id}'. Available: {', '.join(_BY_ID)}")
    return _BY_ID[id]


def instantiate(id: str, params: Optional[Dict[str, Any]] = None, **kwargs) -> Identity:
    return get_template(id).instantiate(params, **kwargs)
