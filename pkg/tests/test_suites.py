from fractions import Fraction

import pytest

from mzv.suites import (
    NUMERIC_CEILING,
    Q_CEILING,
    REGISTRY,
    admissible_compositions,
    compositions,
    decomp_coefficient,
    eds_relations,
    euler_decomposition_closed_form,
    generalized_decomposition,
    gx_weight_coefficient,
    run_all,
    run_suite,
)

F = Fraction


def test_compositions_enumeration():
    assert list(compositions(4, 2)) == [(2, 2), (3, 1)]
    assert list(compositions(5, 3)) == [(2, 1, 2), (2, 2, 1), (3, 1, 1)]
    assert list(compositions(3, 1)) == [(3,)]
    assert list(compositions(2, 2)) == []


def test_admissible_enumeration_count():
    # 2^{n-2} admissible compositions of weight n
    by_weight = {}
    for s in admissible_compositions(8):
        by_weight.setdefault(sum(s), []).append(s)
    for n in range(2, 9):
        assert len(by_weight[n]) == 2 ** (n - 2)


def test_registry_complete():
    expected = {
        "sum_formula",
        "okuda_ueno",
        "duality",
        "ohno",
        "cyclic_sum",
        "cyclic_sum_star",
        "elo",
        "weighted_euler",
        "weighted_sum_gx",
        "q_sum",
        "q_cyclic",
        "q_star_sum",
        "euler_decomp_symbolic",
        "gen_decomp_symbolic",
        "euler_decomp_numeric",
        "eds_generation",
        "ohno_zagier_generating_function",
    }
    assert set(REGISTRY) == expected


def test_ohno_zagier_is_recorded_not_implemented():
    res = run_suite("ohno_zagier_generating_function")
    assert not res.implemented
    assert "not implemented" in res.note


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nonexistent")


def test_gx_weight_reduces_for_depth_two():
    # the k = 2 degeneration of the weighted sum formula coefficient is
    # 2^{s1} - 1; this symbolic reduction gates the numeric run
    for s1 in range(2, 9):
        for s2 in range(1, 5):
            assert gx_weight_coefficient((s1, s2)) == 2**s1 - 1


def test_euler_closed_form_example():
    # r = 3, s = 2: the binomial form equals the brute transported shuffle
    from mzv.words import Word, transported_shuffle

    out = euler_decomposition_closed_form(3, 2)
    assert out == transported_shuffle(
        Word.from_composition((3,)), Word.from_composition((2,))
    )


def test_decomp_coefficient_reduces_to_euler():
    # at depth (1,1) the coefficient formula collapses to the Euler binomials
    from mzv.words import stuffle_pairs

    r, s = 3, 4
    pairs = stuffle_pairs(1, 1, 0)
    for t1 in range(1, r + s):
        t = (t1, r + s - t1)
        total = sum(decomp_coefficient((r,), (s,), t, phi, psi) for phi, psi in pairs)
        expected = 0
        if t1 >= r:
            expected += __import__("math").comb(t1 - 1, t1 - r)
        if t1 >= s:
            expected += __import__("math").comb(t1 - 1, t1 - s)
        assert total == expected, t


def test_generalized_decomposition_small():
    got = generalized_decomposition((2,), (2,))
    from mzv.words import Word, WordSum

    assert got == WordSum(
        {Word.from_composition((2, 2)): 2, Word.from_composition((3, 1)): 4}
    )


def test_eds_relations_admissible_support():
    rels = eds_relations(6)
    assert rels
    for (_c1, _c2), rel in rels:
        for w, _ in rel.items():
            comp = w.composition()
            assert comp[0] >= 2 and all(x >= 1 for x in comp)


@pytest.mark.parametrize(
    "name,params",
    [
        ("sum_formula", {"n_max": 5, "k_max": 2}),
        ("okuda_ueno", {"n_max": 4}),
        ("duality", {"weight_max": 5}),
        ("ohno", {"total_max": 5}),
        ("cyclic_sum", {"weight_max": 4}),
        ("cyclic_sum_star", {"n_max": 4}),
        ("elo", {"n_max": 4, "p_max": 1}),
        ("weighted_euler", {"n_max": 5}),
        ("weighted_sum_gx", {"n_max": 5, "k_max": 3}),
        ("q_sum", {"n_max": 4, "k_max": 2, "qs": (F(1, 2),)}),
        ("q_cyclic", {"n_max": 4, "k_max": 2, "qs": (F(1, 2),)}),
        ("q_star_sum", {"n_max": 4, "k_max": 2, "qs": (F(1, 2),)}),
        ("euler_decomp_symbolic", {"total_max": 8}),
        ("gen_decomp_symbolic", {"weight_max": 6}),
        ("euler_decomp_numeric", {"max_arg": 3}),
        ("eds_generation", {"weight_max": 5}),
    ],
)
def test_suites_pass_reduced(name, params):
    res = run_suite(name, **params)
    assert res.passed, [c.instance for c in res.cases if not c.passed]
    assert res.cases
    ceiling = Q_CEILING if name.startswith("q_") else NUMERIC_CEILING
    if res.tolerance is not None and REGISTRY[name][1] in ("numeric", "q"):
        assert res.tolerance <= ceiling


def test_suite_result_json_shape():
    res = run_suite("weighted_euler", n_max=4)
    blob = res.to_json()
    assert blob["suite"] == "weighted_euler"
    assert blob["passed"] is True
    assert all({"instance", "status", "lhs", "rhs", "discrepancy"} <= set(c) for c in blob["cases"])


def test_registry_kinds():
    kinds = {kind for _fn, kind in REGISTRY.values()}
    assert kinds == {"numeric", "q", "symbolic", "not_implemented"}
    assert callable(run_all)
