import pytest

from functorlab.intlinalg import Matrix
from functorlab.modules import (
    Element,
    FreeModule,
    Hom,
    SetMap,
    compose,
    hom,
    hom_from_json,
    hom_to_json,
    identity_hom,
    linear_as_setmap,
)


def test_element_arithmetic():
    M = FreeModule(2)
    x = M.element((1, 2))
    y = M.element((3, -1))
    assert (x + y).coords == (4, 1)
    assert (x - y).coords == (-2, 3)
    assert (-x).coords == (-1, -2)
    assert x.scale(3).coords == (3, 6)
    assert (2 * x).coords == (2, 4)
    assert M.zero().is_zero and not x.is_zero


def test_element_coords_validated():
    M = FreeModule(2)
    with pytest.raises(ValueError):
        M.element((1,))
    with pytest.raises(TypeError):
        M.element((1, 0.5))


def test_cross_module_addition_rejected():
    a = FreeModule(2).element((1, 0))
    b = FreeModule(3).element((1, 0, 0))
    with pytest.raises(ValueError):
        a + b


def test_basis():
    M = FreeModule(3)
    assert [e.coords for e in M.basis()] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert M.basis_vector(1).coords == (0, 1, 0)


def test_hom_composition_and_apply():
    f = hom(Matrix([[1, 2], [0, 1]], 2))
    g = hom(Matrix([[2, 0], [0, 3]], 2))
    x = f.source.element((1, 1))
    assert f(x).coords == (3, 1)
    gf = compose(g, f)
    assert gf.matrix == g.matrix @ f.matrix
    assert gf(x).coords == (6, 3)
    assert identity_hom(f.source)(x).coords == (1, 1)


def test_hom_shape_must_match_modules():
    with pytest.raises(ValueError):
        Hom(FreeModule(2), FreeModule(2), Matrix([[1, 2, 3]], 3))


def test_setmap_validates_membership():
    M = FreeModule(1)
    doubler = SetMap(M, M, lambda x: M.element((2 * x.coords[0],)))
    assert doubler(M.element((3,))).coords == (6,)
    with pytest.raises(ValueError):
        doubler(FreeModule(2).element((1, 2)))

    bad = SetMap(M, M, lambda x: FreeModule(2).element((0, 0)))
    with pytest.raises(ValueError):
        bad(M.element((1,)))


def test_linear_as_setmap_agrees():
    f = hom(Matrix([[1, 2], [3, 4]], 2))
    s = linear_as_setmap(f)
    x = f.source.element((1, -1))
    assert s(x).coords == f(x).coords


def test_hom_json_round_trip():
    f = hom(Matrix([[1, 2, 3], [4, 5, 6]], 3))
    data = hom_to_json(f)
    g = hom_from_json(data)
    assert g.matrix == f.matrix
    assert g.source.rank == 3 and g.target.rank == 2
