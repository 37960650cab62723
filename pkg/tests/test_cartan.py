import pytest

from youngwalls.cartan import (
    INDEX_SET,
    LAMBDA0,
    AffineWeight,
    CartanType,
    ClassicalWeight,
    cartan_datum,
)


def test_matrices_as_tabulated():
    e6 = cartan_datum("e6-2")
    f4 = cartan_datum("f4-1")
    assert e6.matrix[3] == (0, 0, -1, 2, -1)
    assert e6.matrix[2][3] == -2
    assert f4.matrix[3] == (0, 0, -2, 2, -1)


def test_null_root_and_center():
    e6, f4 = cartan_datum("e6-2"), cartan_datum("f4-1")
    assert e6.delta_coeffs == (1, 2, 3, 2, 1)
    assert e6.central_coeffs == (1, 2, 3, 4, 2)
    assert f4.delta_coeffs == (1, 2, 3, 4, 2)
    assert f4.central_coeffs == (1, 2, 3, 2, 1)
    for d in (e6, f4):
        for i in INDEX_SET:
            assert sum(d.matrix[i][j] * d.delta_coeffs[j] for j in INDEX_SET) == 0
            assert sum(d.central_coeffs[j] * d.matrix[j][i] for j in INDEX_SET) == 0


def test_matrices_are_transposes():
    e6, f4 = cartan_datum("e6-2"), cartan_datum("f4-1")
    assert all(e6.matrix[i][j] == f4.matrix[j][i] for i in INDEX_SET for j in INDEX_SET)


def test_root_list_sizes():
    assert len(cartan_datum("e6-2").positive_roots) == 12
    assert len(cartan_datum("f4-1").positive_roots) == 24
    assert cartan_datum("e6-2").theta == (2, 3, 2, 1)
    assert cartan_datum("f4-1").theta == (2, 3, 4, 2)


def test_pairing(ctype):
    d = cartan_datum(ctype)
    assert d.pairing(0, LAMBDA0) == 1
    assert d.pairing(3, LAMBDA0) == 0
    assert d.pairing(0, LAMBDA0 - d.simple_root(0)) == -1
    with pytest.raises(ValueError):
        d.pairing(5, LAMBDA0)


def test_level(ctype):
    d = cartan_datum(ctype)
    assert d.level(LAMBDA0) == 1
    assert d.level(ClassicalWeight.zero()) == 0
    assert d.level(ClassicalWeight.fundamental(2)) == 3
    for i in INDEX_SET:
        assert d.level(d.simple_root(i)) == 0


def test_simple_roots_as_weights():
    assert cartan_datum("e6-2").simple_root(0).coeffs == (2, -1, 0, 0, 0)
    assert cartan_datum("f4-1").simple_root(3).coeffs == (0, 0, -1, 2, -1)


def test_lambda4_is_level_one_for_f4():
    # the stated central element makes Lambda_4 level 1 as well (informational)
    assert cartan_datum("f4-1").level(ClassicalWeight.fundamental(4)) == 1
    assert cartan_datum("e6-2").level(ClassicalWeight.fundamental(4)) == 2


def test_root_coordinates_roundtrip(ctype):
    d = cartan_datum(ctype)
    content = (0, 3, -1, 2, 5)
    assert d.root_coordinates(d.root_combination(content)) == content


def test_root_coordinates_rejects():
    d = cartan_datum("e6-2")
    with pytest.raises(ValueError):
        d.root_coordinates(LAMBDA0)  # not in the span of alpha_1..alpha_4
    # delta has zero classical part, so alpha_0 = -(2a1+3a2+2a3+a4) classically
    assert d.root_coordinates(d.simple_root(0)) == (0, -2, -3, -2, -1)


def test_affine_weight_equality_and_json():
    w = AffineWeight(ClassicalWeight((1, 0, -2, 0, 3)), -4)
    assert w == AffineWeight.from_json(w.to_json())
    assert w != AffineWeight(w.classical, -3)
    assert cartan_datum("e6-2").affine_simple_root(0).delta == 1


def test_type_parsing():
    assert CartanType.parse("E6_2") is CartanType.E6_2
    assert CartanType.parse("f4-1") is CartanType.F4_1
    with pytest.raises(ValueError):
        CartanType.parse("g2-1")
    assert cartan_datum("e6-2") is cartan_datum(CartanType.E6_2)
