import itertools
from fractions import Fraction

import pytest

from epipool.entailment import (
    ClearCutError,
    IncompatibleScorerError,
    default_sigmoid_params,
    gamma_q,
    psi,
    scorer_compatible,
    sigmoid_conditions_ok,
    x_star_membership,
)
from epipool.epistemic import EpistemicState, kb_to_state
from epipool.logic import AtomTable, Const, parse_formula, parse_kb
from epipool.pooling import pool
from epipool.spaces import encode, make_space, member_sign, vector
from epipool.verifier import logical_space

F = Fraction
AB = AtomTable.of(("a", "b"))


def test_linear_sum_on_nonpos_max_space():
    cfg = make_space("max-weak-nonpos", 4)
    s = gamma_q(cfg, "linear", {0, 1}, vector(["0", "0", "-1", "-1"]))
    assert s.exact == 0  # >= 0 means the pair of properties is satisfied


def test_linear_sum_on_nonneg_had_space():
    cfg = make_space("had-weak-nonneg", 4)
    s = gamma_q(cfg, "linear", {0, 1, 2}, vector(["0", "0", "1", "1"]))
    assert s.exact == -1  # < 0: not all three satisfied


def test_empty_subset_scores_plus_one():
    for name, scorer in [
        ("avg-strict-nonneg", "min"),
        ("max-weak-nonpos", "linear"),
        ("avg-margin-nonneg", "margin-relu"),
    ]:
        cfg = make_space(name, 3)
        v = vector(["0", "0", "0"]) if name != "max-weak-nonpos" else vector(["0", "0", "0"])
        assert gamma_q(cfg, scorer, (), v).exact == 1


def test_min_score_conjunction_equivalence_on_grid():
    from epipool.spaces import registry_names, score_sign

    grid = [F(-2), F(-1), F(0), F(1, 2), F(2)]
    for name in registry_names():
        cfg = make_space(name, 2)
        pts = [
            p
            for p in itertools.product(grid, repeat=2)
            if all(cfg.domain.contains_scalar(x) for x in p)
        ]
        for v in pts:
            for q in ({0}, {1}, {0, 1}):
                expected = all(
                    member_sign(cfg.semantics, score_sign(cfg, i, v)) for i in q
                )
                s = gamma_q(cfg, "min", q, v)
                observed = (
                    s.signum() > 0 if cfg.semantics == "strict" else s.signum() >= 0
                )
                assert expected == observed, (name, v, q)


def test_min_score_works_on_the_disc_demo():
    cfg = make_space("example1")
    s = gamma_q(cfg, "min", {0, 1}, vector(["1/2", "1/2"]))
    assert s.signum() > 0
    s = gamma_q(cfg, "min", {0, 1}, vector(["1/4", "0"]))
    assert s.signum() < 0


def test_incompatible_scorer_refused():
    cfg = make_space("avg-strict-nonneg", 4)
    with pytest.raises(IncompatibleScorerError):
        gamma_q(cfg, "linear", {0}, vector(["0", "0", "0", "0"]))
    assert scorer_compatible(cfg, "linear") is not None


def test_compatibility_matrix_spot_checks():
    assert scorer_compatible(make_space("max-weak-nonpos", 3), "linear") is None
    assert scorer_compatible(make_space("had-weak-nonneg", 3), "linear") is None
    assert scorer_compatible(make_space("max-weak-reals", 3), "relu") is None
    assert scorer_compatible(make_space("had-weak-reals", 3), "squared") is None
    assert scorer_compatible(make_space("avg-margin-nonneg", 3), "margin-relu") is None
    assert scorer_compatible(make_space("avg-margin-nonneg", 3), "sigmoid") is None
    assert scorer_compatible(make_space("avg-margin-unit", 3), "margin-linear") is None
    assert scorer_compatible(make_space("max-weak-reals", 3), "linear") is not None
    for name in ("max-strict-reals", "had-strict-reals"):
        assert scorer_compatible(make_space(name, 3), "min") is None


# --- psi -----------------------------------------------------------------


def pooled_encoding(cfg, *kb_texts):
    states = [kb_to_state(parse_kb(t)) for t in kb_texts]
    vs = [encode(cfg, EpistemicState(cfg.properties, s.members)) for s in states]
    out = vs[0]
    for v in vs[1:]:
        out = pool(cfg.operator, out, v)
    return out


def test_psi_linear_matches_oracle_on_pooled_kb():
    cfg = logical_space("max-weak-nonpos")
    v = pooled_encoding(cfg, "atoms: a b\na b\n", "atoms: a b\n-a b\n")
    assert psi(cfg, "linear", parse_formula("b", AB), v) is True
    assert psi(cfg, "linear", parse_formula("a", AB), v) is False


def test_psi_top_is_always_entailed():
    for name, scorer in [("max-weak-nonpos", "linear"), ("avg-strict-nonneg", "min")]:
        cfg = logical_space(name)
        v = encode(cfg, EpistemicState.of(cfg.properties, ()))
        assert psi(cfg, scorer, Const(True), v) is True


def test_psi_requires_logical_space():
    cfg = make_space("max-weak-nonpos", 4)
    from epipool.epistemic import AbstractSpaceError

    with pytest.raises(AbstractSpaceError):
        psi(cfg, "linear", Const(True), vector(["0", "0", "0", "0"]))


# --- clear-cut machinery -----------------------------------------------------------------


def test_x_star_membership_examples():
    cfg = make_space("avg-margin-nonneg", 3, margin=1)
    assert x_star_membership(cfg, F(1), vector(["0", "1", "2"]))
    assert not x_star_membership(cfg, F(1), vector(["1/2", "0", "0"]))


def test_x_star_vacuous_on_zero_dimensions():
    cfg = make_space("avg-margin-nonneg", 0, margin=1)
    assert x_star_membership(cfg, F(1), ())


def test_margin_scorers_refuse_ambiguous_vectors():
    cfg = make_space("avg-margin-nonneg", 2, margin=1)
    with pytest.raises(ClearCutError):
        gamma_q(cfg, "margin-relu", {0}, vector(["1/2", "0"]))


def test_margin_relu_agrees_with_conjunction_on_clear_cut_grid():
    cfg = make_space("avg-margin-nonneg", 3, margin=1)
    for v in itertools.product((F(0), F(1), F(2)), repeat=3):
        for bits in range(8):
            q = [i for i in range(3) if bits >> i & 1]
            expected = all(v[i] > 0 for i in q)
            got = gamma_q(cfg, "margin-relu", q, v).signum() > 0
            assert expected == got


def test_margin_linear_agrees_with_conjunction_on_clear_cut_grid():
    cfg = make_space("avg-margin-unit", 4, eps=F(1, 8))
    delta = cfg.margin
    for v in itertools.product((F(0), delta, F(1)), repeat=4):
        for bits in range(16):
            q = [i for i in range(4) if bits >> i & 1]
            expected = all(v[i] > 0 for i in q)
            got = gamma_q(cfg, "margin-linear", q, v).signum() > 0
            assert expected == got


def test_sigmoid_parameters_satisfy_separation_conditions():
    for n in (2, 3, 4, 8):
        cfg = make_space("avg-margin-nonneg", n, margin=1)
        assert sigmoid_conditions_ok(cfg)
        params = default_sigmoid_params(cfg)
        assert params.offset == F(1, 2)


def test_sigmoid_agrees_and_margins_are_certifiable():
    cfg = make_space("avg-margin-nonneg", 4, margin=1)
    for v in itertools.product((F(0), F(1), F(2)), repeat=4):
        for bits in range(16):
            q = [i for i in range(4) if bits >> i & 1]
            if not q:
                continue
            expected = all(v[i] > 0 for i in q)
            s = gamma_q(cfg, "sigmoid", q, v)
            assert abs(s.as_float()) > 1e-6
            assert (s.signum() > 0) == expected
