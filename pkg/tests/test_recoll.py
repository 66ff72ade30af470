from itertools import combinations

import pytest

from src.modcat import iso_test, projective_module, projective_modules, simple_module, simple_modules
from src.recoll import (
    annihilator,
    colocalisation_criterion,
    counit_sequence,
    heredity_test,
    homological_test,
    i_lower_star,
    i_upper_shriek,
    i_upper_star,
    j_lower_shriek,
    j_lower_star,
    j_upper_shriek,
    parse_idempotent,
    recollement,
    recollement_functors,
    serre_idempotent,
)
from src.utils.exceptions import InvalidIdempotentError


def test_parse_idempotent(kalck):
    assert parse_idempotent(kalck, "e2") == (1,)
    assert parse_idempotent(kalck, "e3 + e1") == (0, 2)
    assert parse_idempotent(kalck, "0") == ()
    assert parse_idempotent(kalck, "1") == (0, 1, 2)


@pytest.mark.parametrize("text", ["e4", "e1+e1", "x2", "e"])
def test_parse_idempotent_rejects(kalck, text):
    with pytest.raises(InvalidIdempotentError):
        parse_idempotent(kalck, text)


def test_recollement_pieces(kalck):
    rd = recollement(kalck, [1])
    assert rd.label == "e2"
    assert rd.corner.dim == 1
    assert rd.ideal.dim == 4
    assert rd.quotient.dim == 3
    assert recollement(kalck, [1]) is rd
    assert recollement(kalck, []).ideal.dim == 0


def test_j_functors(kalck):
    rd = recollement(kalck, [1])
    assert j_upper_shriek(rd, projective_module(kalck, 2)).dims == (1,)
    z = j_upper_shriek(rd, projective_module(kalck, 1))
    assert iso_test(j_lower_shriek(rd, z), projective_module(kalck, 1)).is_true
    # j^! j_* is the identity on mod eΛe
    assert j_upper_shriek(rd, j_lower_star(rd, z)).dims == z.dims


def test_i_functors(kalck):
    rd = recollement(kalck, [1])
    assert i_upper_star(rd, projective_module(kalck, 2)).dim == 1
    assert i_upper_shriek(rd, projective_module(kalck, 0)).dim == 2
    assert i_upper_star(rd, simple_module(kalck, 1)).dim == 0


def test_recollement_functors(kalck):
    images = recollement_functors(recollement(kalck, [1]), projective_module(kalck, 2))
    assert images.j_upper_shriek.dims == (1,)
    assert images.j_lower_shriek.dims == (1, 1, 0)
    assert images.i_upper_star.dim == images.i_lower_star.dim == 1
    assert images.i_upper_shriek.dim == 1
    assert images.adjunction == [(1, 1)] * 4
    assert images.adjunction_ok
    assert images.unit.target.dim == 1
    assert images.j_lower_star.dims == (0, 1, 1)
    assert images.to_dict()["j^!"] == [1]


def test_counit_sequence(kalck):
    seq = counit_sequence(recollement(kalck, [1]), projective_module(kalck, 2))
    assert seq.mono and seq.exact
    assert seq.kernel_dim == 0
    assert seq.cokernel.dims == (0, 0, 1)
    assert seq.to_dict()["induced_dims"] == [1, 1, 0]


def test_heredity_ideal(kalck):
    verdict = heredity_test(kalck, [1])
    assert verdict.is_true
    assert verdict.witness["ideal_dim"] == 4
    assert len(verdict.witness["summands"]) == 2
    assert verdict.witness["sandwich_dim"] == 0


def test_non_heredity_ideal(kalck):
    verdict = heredity_test(kalck, [0])
    assert verdict.is_false
    assert verdict.witness["projective"] is False
    assert len(verdict.witness["summands"]) == 3


def test_heredity_of_zero_and_whole(kalck, ss3):
    assert heredity_test(kalck, []).is_true
    assert heredity_test(ss3, [0, 1, 2]).is_true


def test_homological_epimorphism(kalck):
    verdict = homological_test(kalck, [1])
    assert verdict.is_true
    assert not verdict.conditional


def test_homological_test_failure(kalck):
    verdict = homological_test(kalck, [0])
    assert verdict.is_false
    assert verdict.witness["tor"] == {2: 2}
    mismatches = {(m["degree"], m["source"], m["target"]) for m in verdict.witness["ext_mismatches"]}
    assert (2, "S2", "S3") in mismatches
    assert (3, "S2", "S2") in mismatches
    assert all(degree >= 2 for degree, _, _ in mismatches)


def test_colocalisation(kalck):
    failing = colocalisation_criterion(kalck, [0])
    assert failing.is_false
    assert failing.witness["failures"][0] == "P2"
    assert failing.witness["kernel_dims"] == {"P1": 0, "P2": 1, "P3": 1}
    passing = colocalisation_criterion(kalck, [1])
    assert passing.is_true
    assert passing.witness["kernel_dims"] == {"P1": 0, "P2": 0, "P3": 0}


def test_serre_idempotent(kalck):
    vertices, verdict = serre_idempotent(kalck, [0, 2])
    assert vertices == (1,)
    assert verdict.is_true
    assert verdict.witness["ideal_dim"] == 4


@pytest.mark.parametrize("name", ["kalck", "a3"])
def test_serre_idempotent_every_subset(request, name):
    a = request.getfixturevalue(name)
    for size in range(a.n_vertices + 1):
        for subset in combinations(range(a.n_vertices), size):
            vertices, verdict = serre_idempotent(a, subset)
            assert set(vertices).isdisjoint(subset)
            assert verdict.is_true, (subset, verdict)


@pytest.mark.parametrize("vertices", [[0], [1], [2], [0, 2]])
def test_adjunctions_on_every_projective_and_simple(kalck, vertices):
    rd = recollement(kalck, vertices)
    for x in list(projective_modules(kalck)) + list(simple_modules(kalck)):
        assert recollement_functors(rd, x).adjunction_ok


@pytest.mark.parametrize("vertices", [[0], [1], [2], [0, 2]])
def test_j_upper_shriek_kills_quotient_modules(kalck, vertices):
    rd = recollement(kalck, vertices)
    for y in list(simple_modules(rd.quotient)) + list(projective_modules(rd.quotient)):
        assert j_upper_shriek(rd, i_lower_star(rd, y)).dim == 0


def test_annihilator_of_simple(kalck):
    # everything but e1 kills S1
    assert annihilator(simple_module(kalck, 0)).dim == kalck.dim - 1
