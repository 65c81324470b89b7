import numpy as np
import pytest

from src.models.type_matrix import TypeMatrix, iter_bits


def test_iter_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b10110)) == [1, 2, 4]


def test_identity_is_neutral(rng):
    array = rng.integers(0, 2, size=(4, 4))
    m = TypeMatrix.from_array(array)
    identity = TypeMatrix.identity(4)
    assert identity @ m == m
    assert m @ identity == m


def test_product_matches_numpy(rng):
    for _ in range(20):
        a = rng.integers(0, 2, size=(5, 5))
        b = rng.integers(0, 2, size=(5, 5))
        expected = (a @ b > 0).astype(np.uint8)
        product = TypeMatrix.from_array(a) @ TypeMatrix.from_array(b)
        assert np.array_equal(product.to_array(), expected)


def test_rows_and_indexing():
    m = TypeMatrix(3, [0b010, 0b100, 0b100])
    assert m[0, 1]
    assert not m[1, 0]
    assert m.post(0b001) == 0b010
    assert m.post(0b011) == 0b110
    assert m.post(0) == 0


def test_or():
    a = TypeMatrix(2, [0b01, 0])
    b = TypeMatrix(2, [0, 0b01])
    assert a | b == TypeMatrix(2, [0b01, 0b01])
    assert TypeMatrix.zero(2) | a == a


def test_dimension_checks():
    with pytest.raises(ValueError):
        TypeMatrix(2, [0])
    with pytest.raises(ValueError):
        TypeMatrix(2, [0b100, 0])
    with pytest.raises(ValueError):
        TypeMatrix.identity(2) @ TypeMatrix.identity(3)
    with pytest.raises(ValueError):
        TypeMatrix.from_array(np.zeros((2, 3)))


def test_canonical_bytes():
    m = TypeMatrix.identity(3)
    data = m.canonical_bytes()
    # 4-byte dimension header, then 9 bits packed into 2 bytes
    assert len(data) == 6
    assert data[:4] == (3).to_bytes(4, "big")
    assert data[4:] == bytes([0b10001000, 0b10000000])
    assert m.hex() == data.hex()


def test_hash_and_equality():
    a = TypeMatrix(2, [1, 2])
    b = TypeMatrix.identity(2)
    assert a == b
    assert len({a, b}) == 1
    assert a != TypeMatrix(3, [1, 2, 4])
