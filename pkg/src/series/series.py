from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Union

from sympy import divisor_sigma

from src.series.coefficient import GaussianRational, Number, ONE, ZERO, I

VARIABLES = ('q', 'v', 'u')


class VariableMismatchError(ValueError):
    """Операнды являются рядами по разным переменным."""


class TruncationError(ValueError):
    """Запрошен коэффициент за порядком усечения."""


class SeriesDomainError(ArithmeticError):
    """Нарушено условие на свободный член (обращение, exp, log, подстановка)."""


class TruncSeries:
    """
    Усечённый формальный степенной ряд с точными коэффициентами.

    Коэффициенты известны для показателей 0..trunc. Если closed=True, ряд является
    многочленом: все коэффициенты за trunc равны нулю, а не неизвестны.
    Результат операции известен до минимума порядков операндов; многочлен
    не ограничивает порядок результата.
    """

    __slots__ = ('var', 'trunc', 'coeffs', 'closed')

    def __init__(self, var: str, coeffs: Iterable[Number], trunc: Optional[int] = None, closed: bool = False):
        if var not in VARIABLES:
            raise ValueError(f"Неизвестная переменная ряда: {var}")
        values = [GaussianRational.coerce(c) for c in coeffs]
        if trunc is None:
            trunc = max(len(values) - 1, 0)
        if trunc < 0:
            raise ValueError(f"Порядок усечения должен быть неотрицательным: {trunc}")
        if closed:
            while len(values) > trunc + 1 and not values[-1]:
                values.pop()
            if len(values) > trunc + 1:
                raise ValueError("Степень многочлена превышает порядок усечения")
        values = values[:trunc + 1]
        values += [ZERO] * (trunc + 1 - len(values))
        self.var = var
        self.trunc = trunc
        self.coeffs = tuple(values)
        self.closed = closed

    @classmethod
    def polynomial(cls, var: str, coeffs: Sequence[Number]) -> 'TruncSeries':
        """Многочлен с коэффициентами по возрастанию степеней."""
        values = list(coeffs)
        while len(values) > 1 and not GaussianRational.coerce(values[-1]):
            values.pop()
        return cls(var, values, trunc=max(len(values) - 1, 0), closed=True)

    @classmethod
    def constant(cls, var: str, value: Number, trunc: int) -> 'TruncSeries':
        return cls(var, [value], trunc=trunc)

    @classmethod
    def monomial(cls, var: str, exponent: int, trunc: int, value: Number = 1) -> 'TruncSeries':
        if exponent > trunc:
            return cls(var, [], trunc=trunc)
        return cls(var, [0] * exponent + [value], trunc=trunc)

    def coeff(self, k: int) -> GaussianRational:
        if k < 0:
            return ZERO
        if k > self.trunc:
            if self.closed:
                return ZERO
            raise TruncationError(f"Коэффициент {self.var}^{k} за порядком усечения {self.trunc}")
        return self.coeffs[k]

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeff(k)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other: Union['TruncSeries', Number]) -> 'TruncSeries':
        if isinstance(other, TruncSeries):
            if other.var != self.var:
                raise VariableMismatchError(f"Ряды по разным переменным: {self.var} и {other.var}")
            return other
        return TruncSeries.polynomial(self.var, [other])

    def __add__(self, other: Union['TruncSeries', Number]) -> 'TruncSeries':
        other = self._coerce(other)
        if self.closed and other.closed:
            trunc = max(self.trunc, other.trunc)
        else:
            trunc = min(s.trunc for s in (self, other) if not s.closed)
        coeffs = [self.coeff(k) + other.coeff(k) for k in range(trunc + 1)]
        return TruncSeries(self.var, coeffs, trunc=trunc, closed=self.closed and other.closed)

    __radd__ = __add__

    def __neg__(self) -> 'TruncSeries':
        return TruncSeries(self.var, [-c for c in self.coeffs], trunc=self.trunc, closed=self.closed)

    def __sub__(self, other: Union['TruncSeries', Number]) -> 'TruncSeries':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> 'TruncSeries':
        return self._coerce(other) + (-self)

    def __mul__(self, other: Union['TruncSeries', Number]) -> 'TruncSeries':
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        other = self._coerce(other)
        if self.closed and other.closed:
            trunc = self.trunc + other.trunc
        else:
            trunc = min(s.trunc for s in (self, other) if not s.closed)
        out = [ZERO] * (trunc + 1)
        right = other.coeffs
        for i, a in enumerate(self.coeffs):
            if i > trunc:
                break
            if not a:
                continue
            for j in range(min(len(right) - 1, trunc - i) + 1):
                b = right[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.var, out, trunc=trunc, closed=self.closed and other.closed)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'TruncSeries':
        factor = GaussianRational.coerce(factor)
        return TruncSeries(self.var, [c * factor for c in self.coeffs], trunc=self.trunc, closed=self.closed)

    def __truediv__(self, other: Union['TruncSeries', Number]) -> 'TruncSeries':
        if not isinstance(other, TruncSeries):
            return self.scale(ONE / GaussianRational.coerce(other))
        other = self._coerce(other)
        order = self.trunc if other.closed else other.trunc
        if not self.closed:
            order = min(order, self.trunc)
        return self * inverse(other, order)

    def __pow__(self, k: int) -> 'TruncSeries':
        return int_pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var, self.trunc, self.coeffs, self.closed) == (other.var, other.trunc, other.coeffs, other.closed)

    def __hash__(self) -> int:
        return hash((self.var, self.trunc, self.coeffs, self.closed))

    def __repr__(self) -> str:
        tail = '' if self.closed else f" + O({self.var}^{self.trunc + 1})"
        terms = [f"({c})*{self.var}^{k}" for k, c in enumerate(self.coeffs) if c]
        return (' + '.join(terms) or '0') + tail

    def agrees_with(self, other: 'TruncSeries', upto: Optional[int] = None) -> bool:
        """Совпадение коэффициентов до общего порядка (или до upto)."""
        self._coerce(other)
        if upto is None:
            open_truncs = [s.trunc for s in (self, other) if not s.closed]
            upto = min(open_truncs) if open_truncs else max(self.trunc, other.trunc)
        return all(self.coeff(k) == other.coeff(k) for k in range(upto + 1))

    def truncate(self, trunc: int) -> 'TruncSeries':
        if trunc > self.trunc and not self.closed:
            raise TruncationError(f"Нельзя поднять порядок усечения {self.trunc} до {trunc}")
        return TruncSeries(self.var, [self.coeff(k) for k in range(trunc + 1)], trunc=trunc)

    def shift(self, k: int) -> 'TruncSeries':
        """Умножение на var^k, k ≥ 0; порядок усечения растёт на k."""
        if k < 0:
            raise ValueError("Сдвиг ряда на отрицательную степень не поддерживается")
        return TruncSeries(self.var, [ZERO] * k + list(self.coeffs), trunc=self.trunc + k, closed=self.closed)

    def valuation(self) -> Optional[int]:
        """Наименьший показатель с ненулевым коэффициентом; None для нуля в пределах усечения."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_integer for c in self.coeffs)

    def to_ints(self) -> List[int]:
        return [c.to_int() for c in self.coeffs]

    def to_json(self) -> Dict:
        return {"var": self.var, "trunc": self.trunc, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, document: Dict) -> 'TruncSeries':
        return cls(document["var"], [GaussianRational.from_json(c) for c in document["coeffs"]],
                   trunc=int(document["trunc"]))


def inverse(s: TruncSeries, order: Optional[int] = None) -> TruncSeries:
    """
    Обратный ряд 1/s.

    Args:
        s: Ряд с ненулевым свободным членом
        order: Порядок усечения результата (по умолчанию порядок s)

    Raises:
        SeriesDomainError: если свободный член равен нулю
    """
    if order is None:
        order = s.trunc
    if not s.closed:
        order = min(order, s.trunc)
    head = s.coeff(0)
    if not head:
        raise SeriesDomainError("Свободный член необратим: обращение ряда невозможно")
    head_inv = ONE / head
    out = [head_inv]
    for k in range(1, order + 1):
        acc = ZERO
        for i in range(1, k + 1):
            a = s.coeff(i)
            if a:
                acc = acc + a * out[k - i]
        out.append(-acc * head_inv)
    return TruncSeries(s.var, out, trunc=order)


def int_pow(s: TruncSeries, k: int, order: Optional[int] = None) -> TruncSeries:
    """
    Целая степень ряда; отрицательная через обращение.

    Args:
        s: Ряд
        k: Показатель
        order: Порядок обращения при k < 0 (нужен, если s является многочленом)

    Raises:
        SeriesDomainError: при k < 0 и нулевом свободном члене или при k < 0 для многочлена без order
    """
    if k == 0:
        if s.closed:
            return TruncSeries.polynomial(s.var, [1])
        return TruncSeries.constant(s.var, 1, s.trunc)
    base = s
    if k < 0:
        if s.closed and order is None:
            raise SeriesDomainError("Для отрицательной степени многочлена нужен порядок усечения order")
        base = inverse(s, order)
        k = -k
    result = None
    while k:
        if k & 1:
            result = base if result is None else result * base
        k >>= 1
        if k:
            base = base * base
    return result


def exp_series(s: TruncSeries) -> TruncSeries:
    """exp(s) при нулевом свободном члене: k·E_k = Σ j·s_j·E_{k-j}."""
    if s.coeff(0):
        raise SeriesDomainError("exp определён только для рядов с нулевым свободным членом")
    trunc = s.trunc
    out = [ONE]
    for k in range(1, trunc + 1):
        acc = ZERO
        for j in range(1, k + 1):
            a = s.coeff(j)
            if a:
                acc = acc + a * j * out[k - j]
        out.append(acc / k)
    return TruncSeries(s.var, out, trunc=trunc)


def log_series(s: TruncSeries) -> TruncSeries:
    """log(s) при свободном члене 1: k·L_k = k·s_k - Σ_{j<k} j·L_j·s_{k-j}."""
    if s.coeff(0) != 1:
        raise SeriesDomainError("log определён только для рядов со свободным членом 1")
    trunc = s.trunc
    out = [ZERO]
    for k in range(1, trunc + 1):
        acc = s.coeff(k) * k
        for j in range(1, k):
            if out[j]:
                acc = acc - out[j] * j * s.coeff(k - j)
        out.append(acc / k)
    return TruncSeries(s.var, out, trunc=trunc)


def substitute(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """
    Композиция outer(inner).

    Допустима, если свободный член inner равен нулю или outer является многочленом.
    Результат бесконечного outer известен не дальше порядка outer.

    Raises:
        SeriesDomainError: при нарушении этого условия
    """
    head = inner.coeff(0)
    if head and not outer.closed:
        raise SeriesDomainError("Подстановка ряда с ненулевым свободным членом в бесконечный ряд")
    result = TruncSeries.polynomial(inner.var, [outer.coeff(outer.trunc)])
    for k in range(outer.trunc - 1, -1, -1):
        result = result * inner + outer.coeff(k)
    if outer.closed:
        return result
    valuation = inner.valuation()
    if valuation is None:
        limit = inner.trunc if not inner.closed else outer.trunc
    else:
        limit = (outer.trunc + 1) * valuation - 1
        if not inner.closed:
            limit = min(limit, inner.trunc)
    limit = min(limit, outer.trunc)
    return result.truncate(limit)


def negate_variable(s: TruncSeries) -> TruncSeries:
    """s(-x): знак коэффициента при нечётных степенях меняется."""
    return TruncSeries(s.var, [c if k % 2 == 0 else -c for k, c in enumerate(s.coeffs)],
                       trunc=s.trunc, closed=s.closed)


def mcmahon(order: int, var: str = 'q') -> TruncSeries:
    """M(q) = ∏_{m≥1} (1 - q^m)^{-m} до q^order."""
    if order < 0:
        raise ValueError(f"Порядок должен быть неотрицательным: {order}")
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        for _ in range(m):
            # деление на (1 - q^m): накопление с шагом m
            for k in range(m, order + 1):
                coeffs[k] += coeffs[k - m]
    return TruncSeries(var, coeffs, trunc=order)


def mcmahon_log(order: int, var: str = 'q') -> TruncSeries:
    """log M(q) = Σ_n (σ₂(n)/n) q^n."""
    coeffs: List[Number] = [0]
    for n in range(1, order + 1):
        coeffs.append(Fraction(int(divisor_sigma(n, 2)), n))
    return TruncSeries(var, coeffs, trunc=order)


def exp_iu(order: int, sign: int = 1) -> TruncSeries:
    """e^{±iu} = Σ (±iu)^k / k! до u^order."""
    coeffs = []
    power = ONE
    unit = I if sign > 0 else -I
    for k in range(order + 1):
        coeffs.append(power / factorial(k))
        power = power * unit
    return TruncSeries('u', coeffs, trunc=order)


def sine_series(order: int, frequency: Number = 1) -> TruncSeries:
    """sin(frequency·u) до u^order."""
    frequency = GaussianRational.coerce(frequency)
    coeffs: List[GaussianRational] = []
    power = ONE
    for k in range(order + 1):
        if k % 2 == 1:
            sign = 1 if (k // 2) % 2 == 0 else -1
            coeffs.append(power * sign / factorial(k))
        else:
            coeffs.append(ZERO)
        power = power * frequency
    return TruncSeries('u', coeffs, trunc=order)
