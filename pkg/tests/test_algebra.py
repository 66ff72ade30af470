import pytest

from src.algebra import (
    build_algebra,
    cartan_matrix,
    corner_algebra,
    idempotent_ideal,
    ideal_power,
    ideal_product,
    is_division_ring,
    is_nilpotent,
    is_semisimple,
    opposite_algebra,
    parse_presentation,
    parse_structure_constants,
    quotient_algebra,
    radical,
    check_radical,
)
from src.utils.exceptions import (
    AdmissibilityError,
    AlgebraError,
    ComposabilityError,
    MixedEndpointsError,
    PresentationSyntaxError,
)

KALCK_HEADER = "field Q\nvertex 1 2 3\narrow a 1 3\narrow b 2 1\narrow c 3 2\n"


def _build(text: str, source: str = "test.alg"):
    return build_algebra(parse_presentation(text, source))


def test_a2_basis(a2):
    assert a2.dim == 3
    assert set(a2.labels) == {"e1", "e2", "a"}
    assert a2.n_vertices == 2


def test_kalck_basis(kalck):
    assert kalck.dim == 7
    assert set(kalck.labels) == {"e1", "e2", "e3", "a", "b", "c", "cb"}
    assert kalck.blocks[kalck.index_of("cb")] == (2, 0)
    assert kalck.check_associative()
    assert kalck.check_idempotents()


def test_kalck_products(kalck):
    c, b, cb = kalck.index_of("c"), kalck.index_of("b"), kalck.index_of("cb")
    a = kalck.index_of("a")
    assert kalck.basis_product(c, b) == kalck.unit_vector(cb)
    assert kalck.basis_product(b, a) == kalck.zero_vector()
    assert kalck.basis_product(a, c) == kalck.zero_vector()


def test_cartan_matrix(kalck, a2):
    assert cartan_matrix(kalck) == [[1, 0, 1], [1, 1, 0], [1, 1, 1]]
    assert cartan_matrix(a2) == [[1, 1], [0, 1]]


def test_opposite_transposes_cartan(kalck):
    op = opposite_algebra(kalck)
    assert cartan_matrix(op) == [list(row) for row in zip(*cartan_matrix(kalck))]
    assert op.check_associative()


def test_idempotent_ideal_and_quotient(kalck):
    ideal = idempotent_ideal(kalck, [0])
    assert ideal.dim == 4
    for label in ("e1", "a", "b", "cb"):
        assert ideal.contains(kalck.unit_vector(kalck.index_of(label)))
    assert ideal.is_two_sided()

    quotient, qmap = quotient_algebra(kalck, idempotent_ideal(kalck, [1]))
    assert quotient.dim == 3
    assert sorted(quotient.labels) == ["a", "e1", "e3"]
    assert qmap.vertex_map == (0, None, 1)
    assert cartan_matrix(quotient) == [[1, 1], [0, 1]]


def test_corner_algebra(kalck):
    corner, indices = corner_algebra(kalck, [0, 2])
    # e1, e3, a and cb: the path cb passes through vertex 2 but starts and ends outside it
    assert corner.dim == len(indices) == 4
    assert corner.check_associative()


def test_radical_and_nilpotency(kalck, ss3):
    j = radical(kalck)
    assert j.dim == 4
    assert is_nilpotent(j)
    assert ideal_power(j, 3).dim == 0
    assert ideal_product(j, j).dim == 1
    assert check_radical(kalck)
    assert is_semisimple(ss3).is_true
    assert is_semisimple(kalck).is_false


def test_structure_constants(dual_numbers):
    assert dual_numbers.dim == 2
    assert dual_numbers.n_vertices == 1
    assert radical(dual_numbers).dim == 1
    assert is_division_ring(dual_numbers).is_false


def test_structure_constants_rejects_non_associative():
    # (x x) x = y x = x but x (x x) = x y = 0
    text = ("field Q\ndimension 3\nidempotents 1\n"
            "product 1 1 = 1 0 0\nproduct 1 2 = 0 1 0\nproduct 1 3 = 0 0 1\n"
            "product 2 1 = 0 1 0\nproduct 3 1 = 0 0 1\n"
            "product 2 2 = 0 0 1\nproduct 3 2 = 0 1 0\n")
    with pytest.raises(AlgebraError):
        parse_structure_constants(text, "bad.sc")


def test_syntax_error_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("vertex 1 2\narrow a 1 2\nfrobnicate\n", "bad.alg")
    assert info.value.line == 3
    assert info.value.column == 1
    assert "bad.alg:3:1" in str(info.value)


def test_unknown_vertex_in_arrow():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("vertex 1 2\narrow a 1 7\n", "bad.alg")
    assert info.value.line == 2


def test_composability_error():
    with pytest.raises(ComposabilityError):
        parse_presentation(KALCK_HEADER + "relation a*b = 0\nlengthbound 3\n")


def test_mixed_endpoints_error():
    with pytest.raises(MixedEndpointsError):
        parse_presentation(KALCK_HEADER + "relation a*c - c*b = 0\nlengthbound 3\n")


def test_cycle_requires_length_bound():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(KALCK_HEADER + "relation a*c = 0\n")


def test_admissibility_error():
    with pytest.raises(AdmissibilityError):
        _build("vertex 1\narrow x 1 1\nlengthbound 3\n")


def test_relation_with_coefficients_over_f5():
    alg = _build("field 5\nvertex 1 2\narrow a 1 2\narrow b 1 2\narrow c 2 2\n"
                 "relation a*c - 2*b*c = 0\nrelation c*c = 0\nlengthbound 3\n")
    assert alg.field.characteristic == 5
    # paths: e1, e2, a, b, c, ac, bc with ac = 2 bc
    assert alg.dim == 6


def test_acyclic_default_length_bound(a3):
    assert a3.dim == 6
    assert cartan_matrix(a3) == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
