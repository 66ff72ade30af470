import pytest

from src.hwc import (
    Ordering,
    delta_via_recollement,
    division_verdict,
    ext_bound_check,
    filt_check,
    heredity_chain,
    hwc_check,
    hwt_chain_report,
    iyama,
    parse_ordering,
    qh_search,
    stage_ext_comparison,
    standard_defn_check,
    standard_modules,
)
from src.hwc.checkers import PROJECTIVE_GENERATOR
from src.modcat import iso_test, projective_module, regular_module, simple_module, simple_modules
from src.utils.exceptions import InvalidOrderingError


@pytest.fixture
def good(kalck):
    return parse_ordering(kalck, "1,3,2")


def test_parse_ordering(kalck, good):
    assert good.weights == (0, 2, 1)
    assert good.labels(kalck) == ["1", "3", "2"]
    assert good.format(kalck) == "(1,3,2)"
    assert good.higher(2) == (1,)
    assert Ordering.identity(3).weights == (0, 1, 2)


@pytest.mark.parametrize("text", ["1,1,2", "1,2", "1,2,4", ""])
def test_parse_ordering_rejects(kalck, text):
    with pytest.raises(InvalidOrderingError):
        parse_ordering(kalck, text)


def test_ordering_must_be_a_permutation():
    with pytest.raises(InvalidOrderingError):
        Ordering((0, 0, 1))


def test_standard_modules(kalck, good):
    deltas = standard_modules(kalck, good)
    assert [d.dim for d in deltas] == [1, 1, 2]
    assert [d.name for d in deltas] == ["Δ1", "Δ3", "Δ2"]
    assert iso_test(deltas[2], projective_module(kalck, 1)).is_true


def test_hwc_check_accepts(kalck, good):
    verdict, cert = hwc_check(kalck, good)
    assert verdict.is_true
    assert verdict.witness["generator"] == PROJECTIVE_GENERATOR
    data = cert.to_dict()
    assert data["delta_dims"] == [1, 1, 2]
    assert data["u_dims"] == [1, 2, 0]
    # P3 has a Δ-filtration with Δ3 on top of Δ2
    assert data["projective_multiplicities"][1] == [0, 1, 1]


def test_hwc_check_rejects(kalck):
    verdict, _ = hwc_check(kalck, parse_ordering(kalck, "1,2,3"))
    assert verdict.is_false
    assert verdict.witness["axiom"] in ("hom_vanishing", "filtration")


def test_hwc_check_rejects_short_ordering(kalck):
    with pytest.raises(InvalidOrderingError):
        hwc_check(kalck, Ordering((0, 1)))


def test_heredity_chain(kalck, good):
    verdict, chain = heredity_chain(kalck, good)
    assert verdict.is_true
    assert chain.dims == [7, 3, 1]
    assert chain.to_dict()["stage_dims"] == [7, 3, 1]

    verdict, chain = heredity_chain(kalck, parse_ordering(kalck, "1,2,3"))
    assert verdict.is_false
    assert verdict.witness["weight"] == "3"


@pytest.mark.parametrize("ordering", ["1,3,2", "3,1,2", "1,2,3", "2,1,3", "2,3,1", "3,2,1"])
def test_checkers_agree(kalck, ordering):
    o = parse_ordering(kalck, ordering)
    v1, _ = hwc_check(kalck, o)
    v2, _ = heredity_chain(kalck, o)
    v3 = standard_defn_check(kalck, standard_modules(kalck, o))
    assert v1.truth == v2.truth == v3.truth


def test_qh_search(kalck, ss3, a3):
    found = qh_search(kalck)
    assert [o.labels(kalck) for o in found] == [["1", "3", "2"], ["3", "1", "2"]]
    assert len(qh_search(ss3)) == 6
    assert len(qh_search(ss3, jobs=3)) == 6
    assert Ordering((0, 1, 2)) in qh_search(a3)


def test_qh_search_limit(kalck):
    with pytest.raises(ValueError):
        qh_search(kalck, max_simples=2)


def test_standard_defn_conditions(kalck):
    s1, s2, s3 = simple_modules(kalck)
    p2, p3 = projective_module(kalck, 1), projective_module(kalck, 2)
    failing = standard_defn_check(kalck, [s1, p2, p3])
    assert failing.is_false and failing.witness["condition"] == 4
    failing = standard_defn_check(kalck, [s1, s2, s3])
    assert failing.is_false and failing.witness["condition"] == 3


def test_filt_check(kalck, good):
    deltas = standard_modules(kalck, good)
    verdict, mult = filt_check(projective_module(kalck, 2), deltas)
    assert verdict.is_true and mult == [0, 1, 1]
    verdict, mult = filt_check(projective_module(kalck, 1), deltas)
    assert verdict.is_true and mult == [0, 0, 1]
    verdict, mult = filt_check(simple_module(kalck, 1), deltas)
    assert verdict.is_false and mult is None
    assert verdict.witness["delta"] == "Δ2"


def test_division_verdict(kalck, dual_numbers):
    assert division_verdict(simple_module(kalck, 0)).is_true
    assert division_verdict(regular_module(dual_numbers)).is_false


def test_delta_via_recollement(kalck, good):
    deltas = standard_modules(kalck, good)
    for k, delta in enumerate(deltas):
        assert iso_test(delta_via_recollement(kalck, good, k), delta).is_true


def test_hwt_chain_report(kalck, good):
    verdict, reports = hwt_chain_report(kalck, good)
    assert verdict.is_true
    assert [r.algebra_dim for r in reports] == [7, 3, 1]
    assert all(r.gamma_dim == 1 and r.kernel_of_hom for r in reports)
    assert reports[0].to_dict()["heredity"]["verdict"] == "true"

    verdict, reports = hwt_chain_report(kalck, parse_ordering(kalck, "1,2,3"))
    assert verdict.is_false and reports == []


def test_stage_ext_comparison(kalck, good):
    assert stage_ext_comparison(kalck, good).is_true


def test_ext_bound(kalck, dual_numbers):
    assert ext_bound_check(kalck).is_true
    bound = ext_bound_check(dual_numbers)
    assert bound.is_false and bound.witness["degree"] == 1


def test_iyama_construction(a2):
    result = iyama(a2, regular_module(a2))
    assert [m.dim for m in result.chain] == [3, 1]
    assert result.full_dim == 7
    assert result.gamma.dim == 3
    assert result.verdict.is_true
    assert result.to_dict()["gamma_simples"] == 2
