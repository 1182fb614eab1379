import random
from fractions import Fraction

import pytest

from cochain_tuza.casesearch import (
    ALL_STRATEGIES,
    EXPECTED_EXCEPTIONAL,
    audit_inequalities,
    constrained_profiles,
    evaluate_case_functions,
    recipe_lower_bound,
    search_exceptional,
    t2_size,
    F_RECIPE_IDS,
)
from cochain_tuza.certify import _Ctx, _F_RECIPES, build_T2, certify
from cochain_tuza.graphs import CaseProfile, profile, verify_packing

from conftest import random_realization, realize_profile


def test_search_reproduces_published_tuples():
    found = {p.as_tuple() for p in search_exceptional(10)}
    assert found == set(EXPECTED_EXCEPTIONAL)


def test_search_limit_one_is_empty():
    assert search_exceptional(1) == set()


def test_exceptional_set_is_swap_symmetric():
    # closed under side swap wherever the swapped tuple is in the search
    # domain (the domain itself carries the |K_2| >= |K_1| normalization)
    found = search_exceptional(10)
    domain = set(constrained_profiles(10))
    for p in found:
        if p.swapped() in domain:
            assert p.swapped() in found
    # the named symmetric pair
    assert CaseProfile(2, 3, 1, 2) in found and CaseProfile(3, 2, 2, 1) in found


def test_named_exceptional_examples():
    assert evaluate_case_functions(CaseProfile(2, 3, 1, 2)).exceptional
    assert evaluate_case_functions(CaseProfile(1, 2, 0, 1)).exceptional
    rep = evaluate_case_functions(CaseProfile(3, 3, 1, 1))
    assert not rep.exceptional
    assert 6 in rep.passing  # P17^l settles this profile
    assert rep.f_values[6] > -3


def test_evaluate_rejects_out_of_domain_profiles():
    with pytest.raises(ValueError):
        evaluate_case_functions(CaseProfile(2, 2, 2, 2))  # x_ell = ell
    with pytest.raises(ValueError):
        evaluate_case_functions(CaseProfile(4, 2, 1, 1))  # ell + x_m > m + x_ell


def test_t2_size_example():
    assert t2_size(CaseProfile(3, 3, 2, 1)) == 19


def test_recipe_lower_bound_specializes_at_zero_x():
    # with x_ell = x_m = 0, P13 reduces to the clique and within-half terms:
    # 6*p(K_3) = 6, the apex term vanishes, each half term gives 6*binom(3,2)
    p = CaseProfile(3, 3, 0, 0)
    assert recipe_lower_bound("P13", p) == 6 + 18 + 18


def test_recipe_lower_bound_at_most_realized_size():
    rng = random.Random(20240817)
    per_recipe = 200
    for idx, rid in enumerate(F_RECIPE_IDS):
        checked = 0
        while checked < per_recipe:
            ell = rng.randint(1, 6)
            m = rng.randint(1, 6)
            xl = rng.randrange(ell)
            xm = rng.randrange(m)
            if ell + xm > m + xl or ell - xl > xm + xl:
                continue
            g = random_realization(rng, ell, m, xl, xm)
            prof = profile(g)
            assert prof.as_tuple() == (ell, m, xl, xm)
            ctx = _Ctx.of(g)
            tag, fn = _F_RECIPES[idx]
            assert tag == rid
            tris = fn(ctx)
            assert verify_packing(ctx.G, tris)
            assert 6 * len(tris) >= recipe_lower_bound(rid, prof), (
                rid,
                prof.as_tuple(),
                len(tris),
            )
            checked += 1


def test_recipe_lower_bound_unknown_id():
    with pytest.raises(ValueError):
        recipe_lower_bound("P99", CaseProfile(2, 2, 1, 1))


def test_f_values_certified_by_realized_packings():
    # on concrete maximal-completeness instances, a passing f-recipe yields
    # a packing beating T2
    for p in constrained_profiles(5):
        rep = evaluate_case_functions(p)
        g = realize_profile(*p.as_tuple())
        ctx = _Ctx.of(g)
        t2 = build_T2(g)
        for i in sorted(rep.passing):
            tris = _F_RECIPES[i][1](ctx)
            assert 2 * len(tris) >= len(t2), (p.as_tuple(), _F_RECIPES[i][0])


def test_exceptional_profiles_certify_on_realizing_graphs():
    for tup in sorted(EXPECTED_EXCEPTIONAL):
        g = realize_profile(*tup)
        assert profile(g).as_tuple() == tup
        cert = certify(g, "guided")
        assert cert.ratio_ok, tup


def test_weaker_strategies_only_grow_the_exceptional_set():
    base = search_exceptional(6)
    for strategy in ALL_STRATEGIES:
        found = search_exceptional(6, strategy)
        assert base <= found


# -- inequality audit --------------------------------------------------------

KNOWN_SLACK = ("(x_l-l-1)*(2l-1-x_m)", "x_l>l+1 => >= l-2")


def test_audit_runs_clean_except_known_slack():
    report = audit_inequalities(25)
    assert report.chains
    for v in report.violations:
        assert (v.chain, v.step) == KNOWN_SLACK, v
    # the slack is real: it appears at, e.g., a complete balanced join
    assert any(v.params == (3, 6, 6) for v in report.violations)


def test_audit_violating_parameters_still_certify():
    # paper slack lives only in the symbolic chain, never in certificates
    report = audit_inequalities(9)
    seen = set()
    for v in report.violations:
        ell, xl, xm = v.params
        if (ell, xl, xm) in seen or ell > 5:
            continue
        seen.add((ell, xl, xm))
        g = realize_profile(ell, ell, xl, xm)
        cert = certify(g, "guided")
        assert cert.ratio_ok, v.params


def test_audit_values_are_exact_rationals():
    report = audit_inequalities(6)
    for v in report.violations:
        assert isinstance(v.lhs, Fraction) and isinstance(v.rhs, Fraction)
