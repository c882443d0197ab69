import threading
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src.core.config import DEFAULT_THREADS_COUNT
from src.core.logger import log_exception, vertex_logger
from src.partitions.partitions import Cell, InvalidCellError, Partition

Row = Tuple[int, ...]


@dataclass(frozen=True)
class AsymptoticPP:
    """
    Трёхмерное разбиение с одной бесконечной ногой формы shape вдоль оси z.

    Высоты хранятся только вне λ; столбцы над λ бесконечны.
    """
    shape: Partition
    heights: Tuple[Tuple[Cell, int], ...] = ()

    def height(self, cell: Cell) -> int:
        if self.shape.contains(cell):
            raise InvalidCellError(f"Клетка {cell} лежит в бесконечной ноге {self.shape.parts}")
        for key, value in self.heights:
            if key == cell:
                return value
        return 0

    @property
    def volume(self) -> int:
        """Перенормированный объём: число кубиков вне цилиндра над λ."""
        return sum(value for _, value in self.heights)

    def is_valid(self) -> bool:
        """Ключи вне λ, высоты положительны, монотонность по строкам и столбцам."""
        table = dict(self.heights)
        for cell, value in self.heights:
            if self.shape.contains(cell) or value < 1:
                return False
            for neighbour in (Cell(cell.row - 1, cell.col), Cell(cell.row, cell.col - 1)):
                if neighbour.row < 0 or neighbour.col < 0 or self.shape.contains(neighbour):
                    continue
                if table.get(neighbour, 0) < value:
                    return False
        return True


class BoxCounter:
    """
    Перечисление трёхмерных разбиений с асимптотикой λ по перенормированному объёму.

    Разбиение строится построчно: строка i есть невозрастающая последовательность
    высот в столбцах j ≥ λ_i, ограниченная сверху строкой i-1 там, где клетка
    над ней лежит вне λ. Счётчики кэшируются; кэш защищён блокировкой.
    """

    def __init__(self, num_threads: int = DEFAULT_THREADS_COUNT):
        self.num_threads = max(1, num_threads)
        self.lock = threading.Lock()
        self._memo: Dict[Tuple[Partition, int, Row, int], int] = {}

    def count(self, shape: Partition, volume: int) -> int:
        """Число AsymptoticPP формы shape объёма volume."""
        if volume < 0:
            raise ValueError(f"Объём должен быть неотрицательным: {volume}")
        return self._count(shape, 0, (), volume)

    def iterate(self, shape: Partition, volume: int) -> Iterator[AsymptoticPP]:
        """Все AsymptoticPP формы shape объёма volume в детерминированном порядке."""
        if volume < 0:
            raise ValueError(f"Объём должен быть неотрицательным: {volume}")
        for rows in self._walk(shape, 0, (), volume, []):
            heights = tuple(
                (Cell(i, shape.row(i) + k), value)
                for i, row in rows for k, value in enumerate(row)
            )
            yield AsymptoticPP(shape, heights)

    def _count(self, shape: Partition, i: int, prev: Row, remaining: int) -> int:
        if remaining == 0:
            return 1
        if i > len(shape) and not prev:
            return 0
        key = (shape, i, prev, remaining)
        with self.lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for row in _rows(shape, i, prev, remaining):
            total += self._count(shape, i + 1, row, remaining - sum(row))
        with self.lock:
            self._memo[key] = total
        return total

    def _walk(self, shape: Partition, i: int, prev: Row, remaining: int,
              acc: List[Tuple[int, Row]]) -> Iterator[List[Tuple[int, Row]]]:
        if remaining == 0:
            yield acc
            return
        if i > len(shape) and not prev:
            return
        for row in _rows(shape, i, prev, remaining):
            yield from self._walk(shape, i + 1, row, remaining - sum(row), acc + [(i, row)] if row else acc)

    def worker(self, jobs: List[Tuple[Partition, int]]) -> None:
        """Рабочий процесс для потока: заполняет кэш для своей части заданий."""
        try:
            for shape, volume in jobs:
                self.count(shape, volume)
        except Exception as e:
            log_exception(vertex_logger, "Ошибка в рабочем потоке перечисления", e)
            raise

    def precompute(self, jobs: List[Tuple[Partition, int]]) -> Dict[Tuple[Partition, int], int]:
        """
        Считает все задания (форма, объём) в нескольких потоках.

        Args:
            jobs: Список пар (λ, m)

        Returns:
            Словарь (λ, m) -> число разбиений; порядок обхода не влияет на результат
        """
        threads = self._create_threads(jobs)
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        vertex_logger.info(f"Посчитано {len(jobs)} заданий перечисления в {len(threads)} потоках")
        return {(shape, volume): self.count(shape, volume) for shape, volume in jobs}

    def _create_threads(self, jobs: List[Tuple[Partition, int]]) -> List[threading.Thread]:
        """Создает потоки для обработки заданий."""
        threads = []
        jobs_per_thread = len(jobs) // self.num_threads

        for i in range(self.num_threads):
            start = i * jobs_per_thread
            end = len(jobs) if i == self.num_threads - 1 else (i + 1) * jobs_per_thread
            subset_jobs = jobs[start:end]
            if subset_jobs:
                threads.append(threading.Thread(target=self.worker, args=(subset_jobs,)))

        return threads


def _rows(shape: Partition, i: int, prev: Row, remaining: int) -> Iterator[Row]:
    """Допустимые строки i: сначала большие высоты, пустая строка последней."""
    above_start: Optional[int] = shape.row(i - 1) if i > 0 else None

    def cap(j: int) -> Optional[int]:
        if above_start is None or j < above_start:
            return None
        k = j - above_start
        return prev[k] if k < len(prev) else 0

    def extend(j: int, last: int, volume_left: int) -> Iterator[Row]:
        limit = min(last, volume_left)
        bound = cap(j)
        if bound is not None:
            limit = min(limit, bound)
        for h in range(limit, 0, -1):
            for rest in extend(j + 1, h, volume_left - h):
                yield (h,) + rest
        yield ()

    return extend(shape.row(i), remaining, remaining)


# Общий экземпляр с общим кэшем
box_counter = BoxCounter()


def enumerate_app(shape: Partition, volume: int) -> int:
    return box_counter.count(shape, volume)


def iter_app(shape: Partition, volume: int) -> Iterator[AsymptoticPP]:
    return box_counter.iterate(shape, volume)
