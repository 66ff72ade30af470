import pytest

from src.modcat import (
    HomSpace,
    ModuleMap,
    cokernel,
    composition_factors,
    cover_multiplicities,
    decompose,
    factor_through,
    direct_sum,
    endomorphism_algebra,
    hom_dimension,
    iso_test,
    is_indecomposable,
    is_projective,
    iyama_chain,
    kernel,
    loewy_series,
    parse_module,
    power,
    projective_cover,
    projective_module,
    projective_modules,
    quotient_bimodule,
    rad,
    regular_bimodule,
    regular_module,
    resolve_module,
    resolve_modules,
    simple_module,
    simple_modules,
    soc,
    tensor_data,
    tensor_map,
    tensor_over,
    top,
)
from src.algebra import cartan_matrix, idempotent_ideal
from src.utils.exceptions import ModuleExpressionError, ModuleFormatError


def test_projectives_of_kalck(kalck):
    p1, p2, p3 = projective_modules(kalck)
    assert p1.dims == (1, 0, 1)
    assert p2.dims == (1, 1, 0)
    assert p3.dims == (1, 1, 1)
    assert all(p.check() for p in (p1, p2, p3))


def test_loewy_series(kalck):
    p3 = projective_module(kalck, 2)
    assert loewy_series(p3) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert composition_factors(p3) == [1, 1, 1]


def test_rad_top_soc(kalck):
    p3 = projective_module(kalck, 2)
    radical, inclusion = rad(p3)
    assert iso_test(radical, projective_module(kalck, 1)).is_true
    assert inclusion.is_injective() and inclusion.is_homomorphism()
    head, _ = top(p3)
    assert head.dims == (0, 0, 1)
    socle, _ = soc(p3)
    assert socle.dims == (1, 0, 0)


def test_simples(kalck):
    simples = simple_modules(kalck)
    assert [s.dims for s in simples] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert [s.name for s in simples] == ["S1", "S2", "S3"]


def test_hom_dimensions_match_cartan(kalck):
    projectives = projective_modules(kalck)
    cartan = cartan_matrix(kalck)
    for s, ps in enumerate(projectives):
        for t, pt in enumerate(projectives):
            assert hom_dimension(pt, ps) == cartan[s][t]


def test_hom_space_maps_are_homomorphisms(kalck):
    space = HomSpace(projective_module(kalck, 1), projective_module(kalck, 2))
    assert space.dim == 1
    f = space.maps[0]
    assert f.is_homomorphism() and f.is_injective()
    assert space.combine([kalck.field.one]).matrix == f.matrix


def test_kernel_and_cokernel(kalck):
    cover = projective_cover(simple_module(kalck, 0))
    assert cover.source.dims == (1, 0, 1)
    ker, _ = kernel(cover)
    assert ker.dims == (0, 0, 1)
    coker, _ = cokernel(kernel(cover)[1])
    assert iso_test(coker, simple_module(kalck, 0)).is_true


def test_factor_through_cover(kalck):
    cover = projective_cover(simple_module(kalck, 0))
    g = factor_through(cover, cover)
    assert g is not None
    assert g.source.dim == g.target.dim == 1
    assert cover.then(g).matrix == cover.matrix
    # the identity of P1 does not vanish on the kernel of the cover
    assert factor_through(cover, ModuleMap.identity(cover.source)) is None


def test_projectivity(kalck):
    assert is_projective(projective_module(kalck, 1))
    assert not is_projective(simple_module(kalck, 0))
    assert is_projective(regular_module(kalck))
    assert cover_multiplicities(regular_module(kalck)) == [1, 1, 1]


def test_decompose_regular(kalck):
    d = decompose(regular_module(kalck))
    assert d.count == 3
    assert d.basic_count == 3
    assert sorted(p.module.dim for p in d.pieces) == [2, 2, 3]


def test_decompose_power(kalck):
    p1 = projective_module(kalck, 0)
    d = decompose(power(p1, 2).module)
    assert d.count == 2
    assert d.basic_count == 1
    assert is_indecomposable(p1).is_true
    assert is_indecomposable(power(p1, 2).module).is_false


def test_iso_test_distinguishes(kalck):
    s1, s2 = simple_module(kalck, 0), simple_module(kalck, 1)
    assert iso_test(s1, s1).is_true
    assert iso_test(s1, s2).is_false
    x = direct_sum([s1, projective_module(kalck, 1)]).module
    y = direct_sum([projective_module(kalck, 1), s1]).module
    assert iso_test(x, y).is_true


def test_endomorphism_algebra_of_regular(kalck):
    end = endomorphism_algebra(regular_module(kalck))
    assert end.algebra.dim == 7
    assert end.algebra.n_vertices == 3
    assert end.algebra.check_associative()


def test_basic_endomorphism_algebra(kalck):
    p1 = projective_module(kalck, 0)
    m = direct_sum([p1, p1, simple_module(kalck, 1)]).module
    assert endomorphism_algebra(m).algebra.dim == 5
    assert endomorphism_algebra(m, basic=True).algebra.dim == 2


def test_hom_module(a2):
    end = endomorphism_algebra(regular_module(a2))
    hom = end.hom_module(simple_module(a2, 0))
    assert hom.dim == 1
    assert hom.check()


def test_iyama_chain(a2, kalck):
    assert [m.dim for m in iyama_chain(regular_module(a2))] == [3, 1]
    assert [m.dim for m in iyama_chain(regular_module(kalck))] == [7, 4, 1]


def test_tensor_with_regular_bimodule(kalck):
    for m in list(simple_modules(kalck)) + list(projective_modules(kalck)):
        assert tensor_over(m, regular_bimodule(kalck)).dim == m.dim


def test_tensor_with_quotient_bimodule(kalck):
    bim = quotient_bimodule(kalck, idempotent_ideal(kalck, [0]))
    assert tensor_over(simple_module(kalck, 1), bim).dim == 1
    assert tensor_over(projective_module(kalck, 0), bim).dim == 0
    # P3 / P3·Λe1Λ keeps the top [3;2]
    assert tensor_over(projective_module(kalck, 2), bim).dim == 2


@pytest.mark.parametrize("vertices", [[0], [1], [2], [0, 2]])
def test_tensor_is_right_exact(kalck, vertices):
    bim = quotient_bimodule(kalck, idempotent_ideal(kalck, vertices))
    for s in simple_modules(kalck):
        cover = projective_cover(s)
        _, inc = kernel(cover)
        middle = tensor_data(cover.source, bim)
        left = tensor_map(inc, bim, target=middle)
        right = tensor_map(cover, bim, source=middle)
        assert right.rank() == right.target.dim
        assert left.then(right).is_zero()
        assert left.rank() == middle.module.dim - right.rank()


def test_hom_is_additive(kalck):
    modules = list(simple_modules(kalck)) + list(projective_modules(kalck))
    for m in modules:
        for m2 in modules:
            total = direct_sum([m, m2]).module
            for n in modules:
                assert hom_dimension(total, n) == hom_dimension(m, n) + hom_dimension(m2, n)
                assert hom_dimension(n, total) == hom_dimension(n, m) + hom_dimension(n, m2)


def test_module_expressions(kalck):
    assert resolve_module(kalck, "rad P3").dims == (1, 1, 0)
    assert resolve_module(kalck, "P1 + 2*S2").dims == (1, 2, 1)
    assert resolve_module(kalck, "top (P3 + P1)").dims == (1, 0, 1)
    assert resolve_module(kalck, "Lambda").dim == 7
    seq = resolve_modules(kalck, "S1, P2, P3")
    assert [m.dim for m in seq] == [1, 2, 3]


def test_module_expression_errors(kalck):
    with pytest.raises(ModuleExpressionError):
        resolve_module(kalck, "S9")
    with pytest.raises(ModuleExpressionError):
        resolve_module(kalck, "(P1 + S2")


def test_module_file(kalck, fixtures_dir):
    m = resolve_module(kalck, str(fixtures_dir / "kalck_delta2.mod"))
    assert m.name == "D2"
    assert m.dims == (1, 1, 0)
    assert iso_test(m, projective_module(kalck, 1)).is_true


def test_module_file_relative_to_algebra(kalck, fixtures_dir):
    m = resolve_module(kalck, "kalck_delta2.mod", base_dir=str(fixtures_dir))
    assert m.dims == (1, 1, 0)


def test_module_format_errors(kalck):
    with pytest.raises(ModuleFormatError):
        parse_module("dims 1 1 0\naction b = 0 0 0; 1 0 0\n", kalck)
    with pytest.raises(ModuleFormatError):
        parse_module("dims 1 1\n", kalck)
    with pytest.raises(ModuleFormatError):
        parse_module("dims 1 1 1\naction a = 0 0 1; 0 0 0; 0 0 0\n", kalck)
    # b maps vertex 2 to vertex 1, so m1·b must vanish
    with pytest.raises(ModuleFormatError):
        parse_module("dims 1 1 0\naction a = 0 0; 0 0\naction b = 1 0; 0 0\naction c = 0 0; 0 0\n", kalck)
