from src.algebra import cartan_matrix
from src.exceptional import (
    GENERATION_CRITERION,
    exceptional_check,
    filt_closure_check,
    standardise,
    strictly_full_check,
    tilting_check,
)
from src.hwc import parse_ordering, standard_modules
from src.modcat import direct_sum, projective_module, projective_modules, simple_module, simple_modules


def _kalck_sequence(kalck):
    return [simple_module(kalck, 0), projective_module(kalck, 1), projective_module(kalck, 2)]


def test_exceptional_sequence(kalck):
    report = exceptional_check(_kalck_sequence(kalck))
    assert report.exceptional.is_true
    assert not report.exceptional.conditional
    assert report.full
    assert report.ext["P2,S1"] == [0]
    assert report.to_dict()["sequence"] == ["S1", "P2", "P3"]


def test_not_exceptional(a2):
    s1, s2 = simple_modules(a2)
    report = exceptional_check([s2, s1])
    assert report.exceptional.is_false
    assert report.exceptional.witness["degree"] == 1
    assert exceptional_check([s1, s2]).exceptional.is_true


def test_empty_sequence(kalck):
    assert exceptional_check([]).exceptional.is_true
    assert standardise([]).verdict.is_false


def test_standardise_kalck_sequence(kalck):
    std = standardise(_kalck_sequence(kalck))
    assert std.verdict.is_true
    assert [p.dim for p in std.generators] == [1, 2, 3]
    assert std.generator.dim == 6
    assert [d.dim for d in std.deltas] == [1, 2, 3]
    assert std.to_dict()["generator_dims"] == [1, 2, 3]


def test_standardise_standard_modules_recovers_algebra(kalck):
    ordering = parse_ordering(kalck, "1,3,2")
    deltas = standard_modules(kalck, ordering)
    std = standardise(deltas)
    assert std.verdict.is_true
    assert std.algebra.dim == 7
    assert std.algebra.n_vertices == 3
    assert strictly_full_check(deltas).is_true


def test_standardise_projectives_of_a2(a2):
    p1, p2 = projective_modules(a2)
    std = standardise([p2, p1])
    assert std.verdict.is_true
    assert std.algebra.dim == 3
    assert sorted(map(sorted, cartan_matrix(std.algebra))) == sorted(map(sorted, cartan_matrix(a2)))
    assert strictly_full_check([p2, p1]).is_true


def test_standardise_rejects_self_extensions(a2):
    s1, s2 = simple_modules(a2)
    std = standardise([s2, s1])
    assert std.verdict.is_false
    assert std.generator is None


def test_tilting(a2, kalck):
    t = direct_sum([projective_module(a2, 0), simple_module(a2, 0)]).module
    verdict = tilting_check(t)
    assert verdict.is_true
    assert verdict.witness["generation_criterion"] == GENERATION_CRITERION
    assert tilting_check(projective_module(a2, 0)).is_false

    bad = direct_sum(_kalck_sequence(kalck)).module
    verdict = tilting_check(bad)
    assert verdict.is_false
    assert verdict.witness["degree"] == 2


def test_strictly_full_fails(kalck):
    assert strictly_full_check(_kalck_sequence(kalck)).is_false


def test_filt_closure(a2):
    assert filt_closure_check(simple_modules(a2), 4).is_false
    projectives = filt_closure_check(projective_modules(a2), 4)
    assert projectives.is_true
    assert projectives.witness["extensions_examined"] == 0


def test_filt_closure_of_kalck_sequence(kalck):
    verdict = filt_closure_check(_kalck_sequence(kalck), 6)
    assert verdict.is_true
    assert verdict.witness["extensions_examined"] == 0
