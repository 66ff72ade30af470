import pytest

from src.homalg import (
    connecting_class,
    default_degree_cap,
    ext,
    ext_dim,
    ext_space,
    ext_table,
    global_dimension,
    les_check,
    min_resolution,
    positive_ext_vanishing,
    projective_dimension,
    tor,
    universal_extension,
    yoneda_extension,
)
from src.modcat import (
    iso_test,
    projective_module,
    projective_modules,
    regular_bimodule,
    simple_module,
    simple_modules,
)
from src.utils.exceptions import AlgebraError, UndecidedError


def test_projective_dimensions(kalck):
    s1, s2, s3 = simple_modules(kalck)
    assert projective_dimension(s1).value == 2
    assert projective_dimension(s2).value == 3
    assert projective_dimension(s3).value == 1
    assert global_dimension(kalck).value == 3
    assert all(projective_dimension(p).value == 0 for p in projective_modules(kalck))


def test_resolution_of_s2(kalck):
    res = min_resolution(simple_module(kalck, 1), 32)
    assert res.terminated and res.length == 3
    assert [res.multiplicities(k) for k in range(4)] == [[0, 1, 0], [1, 0, 0], [0, 0, 1], [0, 1, 0]]
    for k in range(1, 4):
        assert res.differential(k).then(res.differential(k - 1)).is_zero()


def test_capped_resolution_is_undetermined(kalck, dual_numbers):
    s2 = simple_module(kalck, 1)
    pd = projective_dimension(s2, cap=1)
    assert not pd.determined
    assert pd.to_dict() == {"value": None, "undetermined_beyond_cap": 1}
    with pytest.raises(UndecidedError):
        ext_dim(s2, s2, 3, cap=1)
    # k[x]/x^2 has infinite global dimension
    assert global_dimension(dual_numbers, cap=6).value is None


def test_ext_between_simples(kalck):
    s1, s2, s3 = simple_modules(kalck)
    assert ext_dim(s2, s1, 1) == 1
    assert ext_dim(s2, s3, 2) == 1
    assert ext_dim(s2, s2, 3) == 1
    assert ext_dim(s3, s2, 1) == 1
    assert ext_dim(s1, s3, 1) == 1
    assert ext_dim(s1, s2, 2) == 1
    assert ext_dim(s1, s1, 1) == 0
    assert ext_dim(s2, s2, 4) == 0


def test_ext_into_projective(kalck):
    s1 = simple_module(kalck, 0)
    assert ext_dim(s1, projective_module(kalck, 1), 2) == 1
    assert ext_dim(projective_module(kalck, 0), s1, 1) == 0
    assert positive_ext_vanishing(projective_module(kalck, 2), s1, 32).is_true


def test_ext_degree_zero_is_hom(kalck):
    assert ext_dim(projective_module(kalck, 1), projective_module(kalck, 2), 0) == 1
    assert ext_dim(projective_module(kalck, 2), projective_module(kalck, 1), 0) == 0


def test_ext_on_a2(a2):
    s1, s2 = simple_modules(a2)
    dim, classes = ext(s1, s2, 1)
    assert dim == 1 and len(classes) == 1
    assert not classes[0].is_zero()
    assert ext_dim(s2, s1, 1) == 0


def test_ext_coordinates_of_coboundary(kalck):
    space = ext_space(simple_module(kalck, 1), simple_module(kalck, 0), 1)
    assert space.dim == 1
    basis = space.classes()[0]
    assert tuple(space.coordinates(basis.cocycle.matrix)) == tuple(basis.coordinates)


def test_yoneda_extension_realises_projective(kalck):
    s2, s1 = simple_module(kalck, 1), simple_module(kalck, 0)
    _, classes = ext(s2, s1, 1)
    ses = yoneda_extension(classes[0])
    assert ses.is_exact()
    assert iso_test(ses.middle, projective_module(kalck, 1)).is_true
    assert not connecting_class(ses).is_zero()


def test_yoneda_extension_needs_degree_one(kalck):
    s2 = simple_module(kalck, 1)
    _, classes = ext(s2, simple_module(kalck, 2), 2)
    with pytest.raises(AlgebraError):
        yoneda_extension(classes[0])


def test_universal_extension(kalck):
    s3, s2 = simple_module(kalck, 2), simple_module(kalck, 1)
    middle, ses, r = universal_extension(s3, s2)
    assert r == 1
    assert middle.dims == (0, 1, 1)
    assert ses.is_exact()
    assert les_check(ses, s2, 2).is_true

    s1 = simple_module(kalck, 0)
    middle, _, r = universal_extension(s1, s1)
    assert r == 0 and middle is s1


def test_tor_with_regular_bimodule(kalck):
    bim = regular_bimodule(kalck)
    for s in simple_modules(kalck):
        assert tor(s, bim, 0) == 1
        assert tor(s, bim, 1) == 0
        assert tor(s, bim, 2) == 0


def test_ext_table(kalck):
    simples = simple_modules(kalck)
    table = ext_table(simples, simples, 3)
    assert table.values[1][1][0] == 1
    assert table.values[3][1][1] == 1
    assert table.values[0] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert table.certified and table.to_dict()["dimensions"] == table.values


def test_default_degree_cap(kalck, a2):
    assert default_degree_cap(kalck) == 5
    assert default_degree_cap(a2) == 3
