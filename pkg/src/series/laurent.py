from typing import Dict, Iterable, List, Optional

from src.series.coefficient import GaussianRational, Number, ONE, ZERO
from src.series.series import TruncSeries, TruncationError, VariableMismatchError, inverse


class LaurentSeries:
    """
    Усечённый ряд Лорана: коэффициенты для показателей lead..trunc.

    После нормализации coeffs[0] ≠ 0; нулевой ряд хранится без коэффициентов
    с lead = trunc + 1.
    """

    __slots__ = ('var', 'lead', 'trunc', 'coeffs')

    def __init__(self, var: str, lead: int, coeffs: Iterable[Number], trunc: Optional[int] = None):
        values = [GaussianRational.coerce(c) for c in coeffs]
        if trunc is None:
            trunc = lead + len(values) - 1
        values = values[:max(trunc - lead + 1, 0)]
        values += [ZERO] * (trunc - lead + 1 - len(values))
        start = 0
        while start < len(values) and not values[start]:
            start += 1
        self.var = var
        self.trunc = trunc
        self.coeffs = tuple(values[start:])
        self.lead = lead + start if self.coeffs else trunc + 1

    @classmethod
    def from_series(cls, series: TruncSeries, shift: int = 0) -> 'LaurentSeries':
        """var^shift · series."""
        return cls(series.var, shift, series.coeffs, trunc=series.trunc + shift)

    @classmethod
    def zero(cls, var: str, trunc: int) -> 'LaurentSeries':
        return cls(var, trunc + 1, [], trunc=trunc)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> GaussianRational:
        if k > self.trunc:
            raise TruncationError(f"Коэффициент {self.var}^{k} за порядком усечения {self.trunc}")
        if k < self.lead:
            return ZERO
        return self.coeffs[k - self.lead]

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeff(k)

    def items(self) -> List[tuple]:
        """Пары (показатель, коэффициент) от lead до trunc."""
        return [(self.lead + k, c) for k, c in enumerate(self.coeffs)]

    def _check(self, other: 'LaurentSeries') -> None:
        if other.var != self.var:
            raise VariableMismatchError(f"Ряды по разным переменным: {self.var} и {other.var}")

    def __add__(self, other: 'LaurentSeries') -> 'LaurentSeries':
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        lead = min(self.lead, other.lead, trunc + 1)
        return LaurentSeries(self.var, lead,
                             [self.coeff(k) + other.coeff(k) for k in range(lead, trunc + 1)], trunc=trunc)

    def __neg__(self) -> 'LaurentSeries':
        return LaurentSeries(self.var, self.lead, [-c for c in self.coeffs], trunc=self.trunc)

    def __sub__(self, other: 'LaurentSeries') -> 'LaurentSeries':
        return self + (-other)

    def __mul__(self, other) -> 'LaurentSeries':
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check(other)
        lead = self.lead + other.lead
        trunc = min(self.trunc + other.lead, other.trunc + self.lead)
        if lead > trunc:
            return LaurentSeries.zero(self.var, trunc)
        out = [ZERO] * (trunc - lead + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.var, lead, out, trunc=trunc)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'LaurentSeries':
        factor = GaussianRational.coerce(factor)
        return LaurentSeries(self.var, self.lead, [c * factor for c in self.coeffs], trunc=self.trunc)

    def inverse(self) -> 'LaurentSeries':
        """Обратный ряд: ведущий множитель var^lead выделяется явно."""
        if self.is_zero:
            raise ZeroDivisionError("Обращение нулевого ряда Лорана")
        relative = self.trunc - self.lead
        unit = TruncSeries(self.var, self.coeffs, trunc=relative)
        return LaurentSeries.from_series(inverse(unit), shift=-self.lead)

    def __truediv__(self, other) -> 'LaurentSeries':
        if not isinstance(other, LaurentSeries):
            return self.scale(ONE / GaussianRational.coerce(other))
        return self * other.inverse()

    def truncate(self, trunc: int) -> 'LaurentSeries':
        if trunc > self.trunc:
            raise TruncationError(f"Нельзя поднять порядок усечения {self.trunc} до {trunc}")
        return LaurentSeries(self.var, self.lead, self.coeffs, trunc=trunc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.var, self.lead, self.trunc, self.coeffs) == (other.var, other.lead, other.trunc, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.var, self.lead, self.trunc, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"({c})*{self.var}^{k}" for k, c in self.items() if c]
        return (' + '.join(terms) or '0') + f" + O({self.var}^{self.trunc + 1})"

    def to_json(self) -> Dict:
        return {"var": self.var, "lead": self.lead, "trunc": self.trunc,
                "coeffs": [c.to_json() for c in self.coeffs]}
