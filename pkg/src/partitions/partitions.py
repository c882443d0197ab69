from dataclasses import dataclass
from functools import cache
from typing import Iterator, List, Tuple


class InvalidCellError(ValueError):
    """Клетка не принадлежит диаграмме Юнга."""


class PartitionFormatError(ValueError):
    """Некорректная текстовая запись разбиения."""


@dataclass(frozen=True, order=True)
class Partition:
    """
    Разбиение целого числа: невозрастающий кортеж положительных частей.

    Пустой кортеж задаёт пустое разбиение.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        for k, part in enumerate(parts):
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"Части разбиения должны быть положительными целыми: {parts}")
            if k + 1 < len(parts) and parts[k + 1] > part:
                raise ValueError(f"Части разбиения должны не возрастать: {parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def row(self, i: int) -> int:
        """Длина строки i (0 за пределами диаграммы)."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def contains(self, cell: 'Cell') -> bool:
        return cell.row >= 0 and cell.col >= 0 and cell.col < self.row(cell.row)


@dataclass(frozen=True, order=True)
class Cell:
    """Клетка диаграммы: строка и столбец, нумерация с нуля."""
    row: int
    col: int


EMPTY = Partition(())


def size(partition: Partition) -> int:
    return sum(partition.parts)


def cells(partition: Partition) -> List[Cell]:
    """Клетки диаграммы построчно."""
    return [Cell(i, j) for i, part in enumerate(partition.parts) for j in range(part)]


def transpose(partition: Partition) -> Partition:
    """Транспонированное разбиение: (λ^t)_j = #{i : λ_i > j}."""
    if not partition.parts:
        return EMPTY
    return Partition(tuple(
        sum(1 for part in partition.parts if part > j) for j in range(partition.parts[0])
    ))


def hook_length(partition: Partition, cell: Cell) -> int:
    """
    Длина крюка клетки: рука + нога + 1.

    Args:
        partition: Разбиение λ
        cell: Клетка (i, j) в λ

    Returns:
        (λ_i - j) + (λ^t_j - i) - 1

    Raises:
        InvalidCellError: если клетка лежит вне λ
    """
    if not partition.contains(cell):
        raise InvalidCellError(f"Клетка {cell} не лежит в разбиении {partition.parts}")
    conjugate = transpose(partition)
    return (partition.row(cell.row) - cell.col) + (conjugate.row(cell.col) - cell.row) - 1


def hook_lengths(partition: Partition) -> List[int]:
    return [hook_length(partition, cell) for cell in cells(partition)]


def b2(partition: Partition) -> int:
    """Σ_i binom(λ_i, 2)."""
    return sum(part * (part - 1) // 2 for part in partition.parts)


def leg_weight(partition: Partition) -> int:
    """Σ (i + j + 1) по клеткам λ: вклад бесконечной ноги формы λ в n."""
    return sum(cell.row + cell.col + 1 for cell in cells(partition))


def enumerate_partitions(d: int) -> List[Partition]:
    """
    Все разбиения числа d в лексикографически убывающем порядке.

    Args:
        d: Неотрицательное целое

    Returns:
        Список разбиений; для d = 0 это [∅]
    """
    if d < 0:
        raise ValueError(f"Ожидалось неотрицательное d, получено {d}")
    return [Partition(parts) for parts in _partitions_bounded(d, d)]


@cache
def _partitions_bounded(d: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    result = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            result.append((first,) + rest)
    return tuple(result)


@cache
def partition_count(d: int) -> int:
    """Число разбиений d по пентагональной рекурсии Эйлера."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > d:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(d - first)
        second = k * (3 * k + 1) // 2
        if second <= d:
            total += sign * partition_count(d - second)
        k += 1
    return total


def parse_partition(text: str) -> Partition:
    """Разбирает запись вида "3,2,1"; пустая строка задаёт ∅."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = tuple(int(piece) for piece in text.split(','))
    except ValueError as e:
        raise PartitionFormatError(f"Некорректная запись разбиения: '{text}'") from e
    try:
        return Partition(parts)
    except ValueError as e:
        raise PartitionFormatError(str(e)) from e


def format_partition(partition: Partition) -> str:
    return ','.join(str(part) for part in partition.parts)
