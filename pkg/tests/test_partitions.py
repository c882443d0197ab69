from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from src.partitions.partitions import (
    EMPTY, Cell, InvalidCellError, Partition, PartitionFormatError, b2, cells, enumerate_partitions,
    format_partition, hook_length, hook_lengths, leg_weight, parse_partition, partition_count, size, transpose
)


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return EMPTY
    k = draw(st.integers(min_value=1, max_value=n))

    # Каждый элемент попадает в случайную корзину
    bin_assignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bin_assignments)

    return Partition(tuple(sorted(counts.values(), reverse=True)))


def test_enumerate_small():
    assert enumerate_partitions(0) == [EMPTY]
    assert enumerate_partitions(2) == [Partition((2,)), Partition((1, 1))]
    assert len(enumerate_partitions(5)) == 7


@pytest.mark.parametrize("d", range(0, 16))
def test_enumerate_matches_pentagonal_count(d):
    assert len(enumerate_partitions(d)) == partition_count(d)


def test_enumerate_order_and_uniqueness():
    shapes = enumerate_partitions(6)
    assert shapes == sorted(shapes, reverse=True)
    assert len(set(shapes)) == len(shapes)
    assert all(size(shape) == 6 for shape in shapes)


def test_enumerate_negative():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_transpose_examples():
    assert transpose(Partition((2, 1))) == Partition((2, 1))
    assert transpose(Partition((3, 1))) == Partition((2, 1, 1))
    assert transpose(EMPTY) == EMPTY


def test_hook_length_examples():
    assert hook_length(Partition((1,)), Cell(0, 0)) == 1
    assert hook_length(Partition((2, 1)), Cell(0, 0)) == 3
    assert hook_length(Partition((3, 1)), Cell(0, 1)) == 2


def test_hook_length_outside_cell():
    with pytest.raises(InvalidCellError):
        hook_length(Partition((2, 1)), Cell(1, 1))
    with pytest.raises(InvalidCellError):
        hook_length(EMPTY, Cell(0, 0))


def test_b2_examples():
    assert b2(EMPTY) == 0
    assert b2(Partition((2,))) == 1
    assert b2(Partition((3, 2))) == 4


def test_leg_weight_examples():
    assert leg_weight(Partition((1,))) == 1
    assert leg_weight(Partition((2,))) == 3
    assert leg_weight(Partition((2, 1))) == 5


def test_cells_row_major():
    assert cells(Partition((2, 1))) == [Cell(0, 0), Cell(0, 1), Cell(1, 0)]


@given(partition_strategy())
def test_transpose_involution(shape):
    assert transpose(transpose(shape)) == shape
    assert size(transpose(shape)) == size(shape)


@given(partition_strategy())
def test_leg_weight_identity(shape):
    assert leg_weight(shape) == size(shape) + b2(shape) + b2(transpose(shape))


@given(partition_strategy())
def test_total_hook_length_identity(shape):
    assert sum(hook_lengths(shape)) == size(shape) + b2(shape) + b2(transpose(shape))


@settings(max_examples=50)
@given(partition_strategy(max_n=8))
def test_format_parse(shape):
    assert parse_partition(format_partition(shape)) == shape


def test_parse_partition():
    assert parse_partition("3,2,1") == Partition((3, 2, 1))
    assert parse_partition("") == EMPTY
    assert parse_partition(" 2 , 2 ") == Partition((2, 2))


@pytest.mark.parametrize("text", ["a,b", "1,2", "3,,1", "0"])
def test_parse_partition_errors(text):
    with pytest.raises(PartitionFormatError):
        parse_partition(text)


def test_partition_count_values():
    assert [partition_count(d) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partition_count(100) == 190569292
