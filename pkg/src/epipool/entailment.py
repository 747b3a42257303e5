"""Scoring functions over property subsets, and formula-level checks.

``gamma_q`` scores a subset Q of properties so that a single sign test
answers "are all properties in Q satisfied?".  ``psi`` lifts that to
propositional formulas over a logical property space: a formula is entailed
by the state a vector encodes exactly when every countermodel world is
excluded, i.e. when gamma_q over the countermodel properties passes its
sign test.

Families:

* ``min``         minimum of the per-property scores; works on any space.
* ``linear``      plain sum of per-property scores; only sound where the
                  geometry allows it (max pooling on the nonpositive
                  orthant, Hadamard pooling on the nonnegative orthant),
                  both under weak semantics.
* ``relu``        sum of clipped coordinates for max pooling on all of R^n.
* ``squared``     negated sum of squares for Hadamard pooling on R^n.
* ``margin-relu`` / ``sigmoid`` / ``margin-linear``
                  margin-space scorers, valid only on clear-cut vectors
                  (every per-property score <= 0 or >= the margin).

The sigmoid family is the one place binary64 arithmetic is used; its
scores carry a conservative error bound and sign queries raise
IndeterminateSign rather than guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .epistemic import AbstractSpaceError
from .logic import Formula, Not, models
from .numeric import ScoreValue, sign_ge0, sign_gt0
from .spaces import (
    COORDINATE,
    NEG_COORDINATE,
    NEG_RELU,
    NEG_SQUARE,
    SpaceConfig,
    Vector,
    contains,
    DomainError,
    format_vector,
    gamma,
    scalar_score,
)

SCORERS = (
    "min",
    "linear",
    "relu",
    "squared",
    "margin-relu",
    "sigmoid",
    "margin-linear",
)

_SIGMOID_TERM_BOUND = Fraction(1, 2**40)


class IncompatibleScorerError(ValueError):
    """Scorer family not valid for this space configuration."""


class ClearCutError(ValueError):
    """Margin-family scorer applied to a vector that is not clear-cut."""


@dataclass(frozen=True)
class SigmoidParams:
    steepness: Fraction  # the slope multiplier inside the sigmoid
    offset: Fraction     # the acceptance threshold subtracted from


def default_sigmoid_params(config: SpaceConfig) -> SigmoidParams:
    """Steepness large enough that both sign-separation conditions hold
    with slack for every query size up to n, keeping float signs certifiable."""
    if config.margin is None:
        raise IncompatibleScorerError("sigmoid scoring needs a margin space")
    n = config.n
    raw = (math.log(2 * n) + 1.0) * 2.0 / float(config.margin)
    steepness = Fraction(math.ceil(raw * 16), 16)
    return SigmoidParams(steepness=steepness, offset=Fraction(1, 2))


def sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def sigmoid_conditions_ok(
    config: SpaceConfig, params: SigmoidParams | None = None
) -> bool:
    """Check the two separation conditions the sigmoid scorer relies on."""
    if params is None:
        params = default_sigmoid_params(config)
    assert config.margin is not None
    half = float(params.steepness * config.margin / 2)
    mu = float(params.offset)
    return sigmoid(half) >= mu and sigmoid(-half) < mu / config.n


def scorer_compatible(config: SpaceConfig, scorer: str) -> str | None:
    """None when the pair is valid, else a human-readable reason."""
    if scorer not in SCORERS:
        return f"unknown scorer {scorer!r}"
    if scorer == "min":
        return None
    if scorer == "linear":
        ok = config.semantics == "weak" and (
            (
                config.operator == "max"
                and config.family == COORDINATE
                and (
                    config.domain.kind == "nonpos"
                    or (config.domain.kind == "bounded-above" and config.domain.z == 0)
                )
            )
            or (
                config.operator == "had"
                and config.family == NEG_COORDINATE
                and config.domain.kind == "nonneg"
            )
        )
        if not ok:
            return (
                "linear subset scoring needs weak semantics with max pooling on "
                "(-inf,0]^n or Hadamard pooling on [0,+inf)^n"
            )
        return None
    if scorer == "relu":
        ok = (
            config.semantics == "weak"
            and config.operator == "max"
            and config.domain.kind == "reals"
            and config.family in (COORDINATE, NEG_RELU)
        )
        return None if ok else "relu subset scoring pairs with weak max pooling on R^n"
    if scorer == "squared":
        ok = (
            config.semantics == "weak"
            and config.operator == "had"
            and config.family == NEG_SQUARE
        )
        return None if ok else "squared subset scoring pairs with weak Hadamard pooling on R^n"
    if scorer in ("margin-relu", "sigmoid"):
        ok = (
            config.semantics == "strict"
            and config.margin is not None
            and config.eps is None
            and config.family == COORDINATE
            and config.domain.kind == "nonneg"
        )
        return None if ok else f"{scorer} scoring needs the nonnegative margin space"
    # margin-linear
    ok = (
        config.semantics == "strict"
        and config.eps is not None
        and config.family == COORDINATE
        and config.domain.kind == "unit"
    )
    return None if ok else "margin-linear scoring needs the near-binary unit space"


def _require_compatible(config: SpaceConfig, scorer: str) -> None:
    reason = scorer_compatible(config, scorer)
    if reason is not None:
        raise IncompatibleScorerError(f"{scorer} on {config.name}: {reason}")


def x_star_membership(config: SpaceConfig, delta: Fraction, v: Vector) -> bool:
    """True when every per-property score is <= 0 or >= delta (clear-cut)."""
    if not contains(config.domain, v):
        raise DomainError(f"vector {format_vector(v)} outside {config.domain.describe()}")
    for i in range(config.size):
        s = scalar_score(config.family, v[i])
        if 0 < s < delta:
            return False
    return True


def _require_clear_cut(config: SpaceConfig, v: Vector) -> None:
    assert config.margin is not None
    if not x_star_membership(config, config.margin, v):
        raise ClearCutError(
            f"vector {format_vector(v)} is ambiguous: some score lies strictly "
            f"between 0 and the margin; margin scorers make no claim there"
        )


def gamma_q(
    config: SpaceConfig,
    scorer: str,
    q: Iterable[int],
    v: Vector,
    sigmoid_params: SigmoidParams | None = None,
) -> ScoreValue:
    """Subset score whose sign test equals the conjunction over ``q``.

    The sign test is ``> 0`` on strict spaces and ``>= 0`` on weak spaces.
    An empty subset scores +1: the conjunction is vacuous.
    """
    _require_compatible(config, scorer)
    if not contains(config.domain, v):
        raise DomainError(f"vector {format_vector(v)} outside {config.domain.describe()}")
    indices = sorted(set(q))
    if any(i < 0 or i >= config.size for i in indices):
        raise IndexError("property index out of range")
    if not indices:
        return ScoreValue.of(1)

    if scorer == "min":
        parts = [gamma(config, i, v) for i in indices]
        if all(p.is_exact for p in parts):
            return ScoreValue.of(min(p.exact for p in parts))  # type: ignore[arg-type]
        # the minimum's sign equals the minimum of the signs
        return ScoreValue.certified(
            min(p.as_float() for p in parts), min(p.signum() for p in parts)
        )
    if scorer in ("linear", "squared"):
        return ScoreValue.of(
            sum((scalar_score(config.family, v[i]) for i in indices), Fraction(0))
        )
    if scorer == "relu":
        total = sum((min(v[i], Fraction(0)) for i in indices), Fraction(0))
        return ScoreValue.of(total)
    if scorer == "margin-relu":
        _require_clear_cut(config, v)
        delta = config.margin
        assert delta is not None
        penalty = sum(
            (max(Fraction(0), delta - v[i]) for i in indices), Fraction(0)
        )
        return ScoreValue.of(delta - penalty)
    if scorer == "sigmoid":
        _require_clear_cut(config, v)
        delta = config.margin
        assert delta is not None
        params = sigmoid_params or default_sigmoid_params(config)
        lam = float(params.steepness)
        half = float(delta) / 2.0
        total = float(params.offset)
        for i in indices:
            total -= sigmoid(lam * (half - float(v[i])))
        bound = _SIGMOID_TERM_BOUND * (len(indices) + 1)
        return ScoreValue.approximate(total, bound)
    # margin-linear
    _require_clear_cut(config, v)
    k = len(indices)
    total = sum((v[i] for i in indices), Fraction(0))
    return ScoreValue.of(total - k + 1)


def entails_sign(config: SpaceConfig, score: ScoreValue) -> bool:
    return sign_gt0(score) if config.semantics == "strict" else sign_ge0(score)


def psi(
    config: SpaceConfig,
    scorer: str,
    formula: Formula,
    v: Vector,
    sigmoid_params: SigmoidParams | None = None,
) -> bool:
    """Does the state encoded by ``v`` entail ``formula``?

    Implemented as the subset sign test over the properties of the formula's
    countermodels: entailment holds exactly when every countermodel world is
    excluded.
    """
    atoms = config.properties.atoms
    if atoms is None:
        raise AbstractSpaceError("formula queries need a logical property space")
    counter = models(Not(formula), atoms=atoms)
    score = gamma_q(config, scorer, counter, v, sigmoid_params=sigmoid_params)
    return entails_sign(config, score)
