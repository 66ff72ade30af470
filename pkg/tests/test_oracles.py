import pytest

from src.algebra import build_algebra, parse_presentation
from src.homalg import ext_dim
from src.hwc import filt_check, parse_ordering, standard_modules
from src.modcat import projective_modules, rad, simple_modules
from src.utils.oracles import derivation_ext1_dim, filtration_search
from src.utils.sweeps import oracle_sweep

KALCK_F3 = ("field 3\nvertex 1 2 3\narrow a 1 3\narrow b 2 1\narrow c 3 2\n"
            "relation a*c = 0\nrelation b*a = 0\nlengthbound 3\n")


@pytest.fixture(scope="module")
def kalck_f3():
    return build_algebra(parse_presentation(KALCK_F3, "kalck_f3.alg"))


def _sample(a):
    projectives = projective_modules(a)
    return list(simple_modules(a)) + projectives + [rad(p)[0] for p in projectives]


def test_derivations_match_resolutions(kalck):
    sample = [m for m in _sample(kalck) if m.dim]
    for x in sample:
        for y in sample:
            assert derivation_ext1_dim(x, y) == ext_dim(x, y, 1), (x.name, y.name)


def test_filtration_search_matches_peeling(kalck_f3):
    deltas = standard_modules(kalck_f3, parse_ordering(kalck_f3, "1,3,2"))
    for x in _sample(kalck_f3):
        verdict, _ = filt_check(x, deltas)
        assert verdict.is_true == filtration_search(x, deltas), x.name


def test_filtration_search_needs_finite_field(kalck):
    deltas = standard_modules(kalck, parse_ordering(kalck, "1,3,2"))
    with pytest.raises(ValueError):
        filtration_search(projective_modules(kalck)[2], deltas)


@pytest.mark.slow
def test_oracle_sweep():
    summary = oracle_sweep(count=4)
    assert summary["algebras"] == 4
    assert summary["ext_pairs"] > 0
    assert summary["ext_mismatches"] == []
    assert summary["filt_mismatches"] == []
