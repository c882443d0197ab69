from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from src.core.config import QUINTIC_CONICS, QUINTIC_EULER_CHARACTERISTIC, QUINTIC_LINES


class MultiplicityError(ValueError):
    """Кратность кривой в цикле должна быть положительной."""


class GeometryFormatError(ValueError):
    """Некорректная текстовая запись видов кривых."""


@dataclass(frozen=True)
class CurveSpecies:
    """Набор попарно непересекающихся суперрегидных рациональных кривых одного класса."""
    count: int
    class_degree: int

    def __post_init__(self):
        if self.count < 1 or self.class_degree < 1:
            raise GeometryFormatError(
                f"Число кривых и степень класса должны быть положительными: {self.count}:{self.class_degree}"
            )

    def to_json(self) -> Dict:
        return {"count": str(self.count), "class_degree": str(self.class_degree)}


@dataclass(frozen=True)
class Geometry:
    """Калаби-Яу Y: эйлерова характеристика и виды суперрегидных кривых."""
    euler_char: int
    species: Tuple[CurveSpecies, ...] = ()
    name: str = 'custom'
    euler_char_source: Optional[str] = None

    def to_json(self) -> Dict:
        document = {
            "name": self.name,
            "euler_char": str(self.euler_char),
            "species": [s.to_json() for s in self.species],
        }
        if self.euler_char_source:
            document["euler_char_source"] = self.euler_char_source
        return document


@dataclass(frozen=True)
class MultiplicityVector:
    """Кратности (d_1, ..., d_s) цикла Σ d_i C_i; все d_i > 0."""
    d: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'd', tuple(self.d))
        for value in self.d:
            if value <= 0:
                raise MultiplicityError(f"Кратности должны быть положительными: {self.d}")

    def __iter__(self):
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)


def quintic_preset() -> Geometry:
    """Общая квинтика: 2875 прямых и 609250 коник; χ = -200 берётся из внешних данных."""
    return Geometry(
        euler_char=QUINTIC_EULER_CHARACTERISTIC,
        species=(CurveSpecies(QUINTIC_LINES, 1), CurveSpecies(QUINTIC_CONICS, 2)),
        name='quintic',
        euler_char_source='external: standard Euler characteristic of the quintic threefold',
    )


def toy_preset(curves: int = 1, class_degree: int = 1, euler_char: int = 0) -> Geometry:
    return Geometry(euler_char=euler_char, species=(CurveSpecies(curves, class_degree),),
                    name=f'toy-{curves}x{class_degree}')


def parse_species(text: str, euler_char: int = 0) -> Geometry:
    """Разбирает запись вида "2875:1,609250:2"."""
    species = []
    for piece in text.split(','):
        piece = piece.strip()
        if not piece:
            continue
        try:
            count, class_degree = (int(value) for value in piece.split(':'))
        except ValueError as e:
            raise GeometryFormatError(f"Ожидалась запись count:class, получено '{piece}'") from e
        species.append(CurveSpecies(count, class_degree))
    if not species:
        raise GeometryFormatError("Не задано ни одного вида кривых")
    return Geometry(euler_char=euler_char, species=tuple(species))


def parse_multiplicities(text: str) -> MultiplicityVector:
    """Разбирает запись вида "1,2"; пустая строка задаёт пустой вектор."""
    text = text.strip()
    if not text:
        return MultiplicityVector(())
    try:
        return MultiplicityVector(tuple(int(piece) for piece in text.split(',')))
    except ValueError as e:
        if isinstance(e, MultiplicityError):
            raise
        raise MultiplicityError(f"Некорректная запись кратностей: '{text}'") from e
