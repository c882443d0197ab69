from fractions import Fraction
from typing import List, Union

Number = Union[int, Fraction, 'GaussianRational']


class GaussianRational:
    """
    Точное число a + b·i с рациональными a и b.

    Единственный тип коэффициентов рядов; рациональный и целочисленный случаи
    проверяются отдельно (is_real, is_integer).
    """

    __slots__ = ('re', 'im')

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def coerce(value: Number) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"Неточный тип коэффициента: {type(value).__name__}")

    def __add__(self, other: Number) -> 'GaussianRational':
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> 'GaussianRational':
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Number) -> 'GaussianRational':
        return GaussianRational.coerce(other) - self

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: Number) -> 'GaussianRational':
        other = GaussianRational.coerce(other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> 'GaussianRational':
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("Деление на нулевой коэффициент")
        if not other.im:
            return GaussianRational(self.re / other.re, self.im / other.re)
        norm = other.re * other.re + other.im * other.im
        return GaussianRational((self.re * other.re + self.im * other.im) / norm,
                                (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other: Number) -> 'GaussianRational':
        return GaussianRational.coerce(other) / self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"

    @property
    def is_real(self) -> bool:
        return not self.im

    @property
    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"Коэффициент {self} не является целым")
        return self.re.numerator

    def to_json(self) -> List[str]:
        """[re_num, re_den, im_num, im_den]; мнимая пара опускается для вещественных чисел."""
        encoded = [str(self.re.numerator), str(self.re.denominator)]
        if self.im:
            encoded += [str(self.im.numerator), str(self.im.denominator)]
        return encoded

    @staticmethod
    def from_json(encoded: List[str]) -> 'GaussianRational':
        if len(encoded) not in (2, 4):
            raise ValueError(f"Ожидалось 2 или 4 элемента коэффициента, получено {len(encoded)}")
        re = Fraction(int(encoded[0]), int(encoded[1]))
        im = Fraction(int(encoded[2]), int(encoded[3])) if len(encoded) == 4 else Fraction(0)
        return GaussianRational(re, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
