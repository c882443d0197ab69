from fractions import Fraction
from typing import Dict, List, Sequence, Union

from sympy import Poly, Symbol, ZZ

from src.series.series import TruncSeries, inverse

Q = Symbol('q')


class RatFunError(ArithmeticError):
    """Деление на нулевую рациональную функцию или разложение в полюсе."""


def _poly(coeffs: Sequence[int]) -> Poly:
    """Многочлен над ZZ по коэффициентам в порядке возрастания степеней."""
    values = [int(c) for c in coeffs] or [0]
    return Poly(list(reversed(values)), Q, domain=ZZ)


def _ascending(poly: Poly) -> List[int]:
    return [int(c) for c in reversed(poly.all_coeffs())]


class RatFun:
    """
    Рациональная функция num/den от q с целыми коэффициентами.

    Нормальная форма: gcd(num, den) = 1 (включая общее целое содержание),
    старший коэффициент den положителен. Представитель может иметь den(0) = 0
    (например, после q ↦ 1/q); разложение в ряд тогда запрещено.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: Union[Poly, Sequence[int]], den: Union[Poly, Sequence[int]] = (1,)):
        num = num if isinstance(num, Poly) else _poly(num)
        den = den if isinstance(den, Poly) else _poly(den)
        if den.is_zero:
            raise RatFunError("Знаменатель рациональной функции равен нулю")
        if num.is_zero:
            num, den = _poly([0]), _poly([1])
        else:
            common = num.gcd(den)
            num, den = num.exquo(common), den.exquo(common)
            if den.LC() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def const(cls, value: Union[int, Fraction]) -> 'RatFun':
        value = Fraction(value)
        return cls([value.numerator], [value.denominator])

    @classmethod
    def monomial(cls, k: int, coefficient: int = 1) -> 'RatFun':
        """coefficient·q^k для любого целого k."""
        if k >= 0:
            return cls([0] * k + [coefficient])
        return cls([coefficient], [0] * (-k) + [1])

    @property
    def num_coeffs(self) -> List[int]:
        return _ascending(self.num)

    @property
    def den_coeffs(self) -> List[int]:
        return _ascending(self.den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_expandable(self) -> bool:
        return self.den_coeffs[0] != 0

    def __add__(self, other: Union['RatFun', int, Fraction]) -> 'RatFun':
        other = _coerce(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> 'RatFun':
        return RatFun(-self.num, self.den)

    def __sub__(self, other: Union['RatFun', int, Fraction]) -> 'RatFun':
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[int, Fraction]) -> 'RatFun':
        return _coerce(other) + (-self)

    def __mul__(self, other: Union['RatFun', int, Fraction]) -> 'RatFun':
        other = _coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union['RatFun', int, Fraction]) -> 'RatFun':
        other = _coerce(other)
        if other.is_zero:
            raise RatFunError("Деление на нулевую рациональную функцию")
        return RatFun(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> 'RatFun':
        return rf_pow(self, k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return rf_eq(self, other)

    def __hash__(self) -> int:
        return hash((tuple(self.num_coeffs), tuple(self.den_coeffs)))

    def __repr__(self) -> str:
        return f"RatFun(({self.num.as_expr()})/({self.den.as_expr()}))"

    def __str__(self) -> str:
        return f"({self.num.as_expr()})/({self.den.as_expr()})"

    def to_json(self) -> Dict[str, List[str]]:
        return {"num": [str(c) for c in self.num_coeffs], "den": [str(c) for c in self.den_coeffs]}

    @classmethod
    def from_json(cls, document: Dict[str, List[str]]) -> 'RatFun':
        return cls([int(c) for c in document["num"]], [int(c) for c in document["den"]])


def _coerce(value: Union[RatFun, int, Fraction]) -> RatFun:
    if isinstance(value, RatFun):
        return value
    return RatFun.const(value)


def _alternate(coeffs: List[int]) -> List[int]:
    return [c if k % 2 == 0 else -c for k, c in enumerate(coeffs)]


def rf_add(f: RatFun, g: RatFun) -> RatFun:
    return f + g


def rf_mul(f: RatFun, g: RatFun) -> RatFun:
    return f * g


def rf_pow(f: RatFun, k: int) -> RatFun:
    """f^k; при k < 0 числитель должен быть ненулевым."""
    if k < 0:
        if f.is_zero:
            raise RatFunError("Отрицательная степень нулевой рациональной функции")
        return RatFun(f.den ** (-k), f.num ** (-k))
    return RatFun(f.num ** k, f.den ** k)


def rf_expand(f: RatFun, order: int) -> TruncSeries:
    """
    Разложение Маклорена до q^order.

    Raises:
        RatFunError: если den(0) = 0
    """
    if not f.is_expandable:
        raise RatFunError(f"Знаменатель {f.den.as_expr()} обращается в ноль при q = 0")
    numerator = TruncSeries('q', f.num_coeffs[:order + 1], trunc=order)
    denominator = TruncSeries.polynomial('q', f.den_coeffs)
    return numerator * inverse(denominator, order)


def rf_subst_neg(f: RatFun) -> RatFun:
    """f(-q)."""
    return RatFun(_alternate(f.num_coeffs), _alternate(f.den_coeffs))


def rf_subst_inv(f: RatFun) -> RatFun:
    """f(1/q), записанная как отношение многочленов после сокращения степеней q."""
    if f.is_zero:
        return f
    num_degree = f.num.degree()
    den_degree = f.den.degree()
    # q^deg · p(1/q): коэффициенты в обратном порядке
    num = list(reversed(f.num_coeffs))
    den = list(reversed(f.den_coeffs))
    if den_degree >= num_degree:
        num = [0] * (den_degree - num_degree) + num
    else:
        den = [0] * (num_degree - den_degree) + den
    return RatFun(num, den)


def rf_eq(f: RatFun, g: RatFun) -> bool:
    """Равенство через перекрёстное умножение, без разложения в ряд."""
    return f.num * g.den == g.num * f.den
