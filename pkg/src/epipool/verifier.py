"""Grid, random, and exhaustive verification of the result tables.

Possibility cells are verified constructively: the named construction is
swept over every grid pair inside its domain plus a seeded batch of random
rational pairs, and its encoder is round-tripped over whole state spaces.
Impossibility cells cannot be verified by search; for those the harness
falsifies one natural candidate construction per cell and reports the
concrete witness, stating the limitation rather than claiming a proof.

Everything here is a deterministic function of the plan seed: random
streams are derived from string-labelled child seeds, scan orders are
fixed (grid lexicographic, then random), and the JSON rendering of a
report contains no timings, so identical runs are byte-identical.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .entailment import (
    gamma_q,
    psi,
    scorer_compatible,
    sigmoid_conditions_ok,
    x_star_membership,
)
from .epistemic import EpistemicState, PropertySpace, state_entails
from .logic import (
    Atom,
    AtomTable,
    Const,
    Formula,
    Iff,
    Implies,
    And,
    Not,
    Or,
    models,
    pretty,
)
from .numeric import format_rational, parse_rational
from .pooling import check_principle, check_weighted_principle, pool_scalar
from .spaces import (
    COORDINATE,
    DISC,
    ONE_MINUS_SQUARE,
    ZERO_INDICATOR,
    DomainX,
    SpaceConfig,
    Vector,
    decode,
    encode,
    make_space,
    member_sign,
    nonneg,
    reals,
    scalar_sign,
    validate_config,
)
from .weighted import WeightedState, decode_weighted, encode_weighted


def parse_seed(text: str) -> int:
    """Accept decimal, 0x hex, or 0x-prefixed base-36 tags like 0xEP00."""
    try:
        return int(text, 0)
    except ValueError:
        pass
    if text.lower().startswith("0x"):
        try:
            return int(text[2:], 36)
        except ValueError:
            pass
    raise ValueError(f"cannot parse seed: {text!r}")


DEFAULT_SEED = parse_seed("0xEP00")

DEFAULT_GRID: tuple[Fraction, ...] = tuple(
    parse_rational(s) for s in ("-2", "-1", "-1/2", "0", "1/2", "1", "2")
)

UNIT_LEVEL_GRID: tuple[Fraction, ...] = tuple(
    parse_rational(s) for s in ("0", "1/4", "1/2", "3/4", "1")
)


@dataclass(frozen=True)
class TrialPlan:
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    dimension: int = 3
    trials: int = 10_000
    seed: int = DEFAULT_SEED

    def rng(self, label: str) -> random.Random:
        """Deterministic child stream; label keeps streams independent."""
        return random.Random(f"{self.seed}:{label}")


@dataclass(frozen=True)
class Witness:
    """A replayable counterexample; re-evaluation reproduces the mismatch."""

    candidate: str
    kind: str  # pooling | subset-score | weighted | roundtrip
    semantics: str
    vectors: tuple[Vector, ...]
    prop: int
    expected: bool
    observed: bool
    level: int | None = None
    q: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {
            "candidate": self.candidate,
            "kind": self.kind,
            "semantics": self.semantics,
            "vectors": [[format_rational(x) for x in v] for v in self.vectors],
            "prop": self.prop,
            "expected": self.expected,
            "observed": self.observed,
        }
        if self.level is not None:
            out["level"] = self.level
        if self.q is not None:
            out["q"] = list(self.q)
        return out


VERIFIED = "verified-on-grid"
FALSIFIED = "falsified-with-witness"
SKIPPED = "skipped"


@dataclass
class ReportCell:
    cell: str
    status: str
    trials: int = 0
    expected_status: str | None = None
    witness: Witness | None = None
    note: str = ""
    elapsed: float = 0.0  # wall-clock; deliberately absent from the JSON form

    @property
    def as_expected(self) -> bool:
        return self.expected_status is None or self.status == self.expected_status

    def to_json(self, seed: int | None = None) -> dict:
        out: dict = {"cell": self.cell, "status": self.status, "trials": self.trials}
        if seed is not None:
            out["seed"] = seed
        if self.expected_status is not None:
            out["expected_status"] = self.expected_status
            out["as_expected"] = self.as_expected
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    seed: int
    plan: TrialPlan
    cells: list[ReportCell] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {VERIFIED: 0, FALSIFIED: 0, SKIPPED: 0}
        for c in self.cells:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    @property
    def all_as_expected(self) -> bool:
        return all(c.as_expected for c in self.cells)

    def to_json(self) -> str:
        doc = {
            "seed": self.seed,
            "plan": {
                "grid": [format_rational(g) for g in self.plan.grid],
                "dimension": self.plan.dimension,
                "trials": self.plan.trials,
            },
            "counts": self.counts(),
            "cells": [c.to_json(seed=self.seed) for c in self.cells],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"seed {self.seed}; {len(self.cells)} cells"]
        width = max((len(c.cell) for c in self.cells), default=0)
        for c in self.cells:
            mark = "ok " if c.as_expected else "?! "
            lines.append(
                f"  {mark}{c.cell:<{width}}  {c.status:<24} "
                f"trials={c.trials:<8} {c.elapsed * 1000:7.1f} ms"
                + (f"  [{c.note}]" if c.note else "")
            )
            if c.witness is not None:
                w = c.witness
                vecs = "; ".join(
                    "(" + ", ".join(format_rational(x) for x in v) + ")"
                    for v in w.vectors
                )
                lines.append(
                    f"      witness: prop {w.prop}"
                    + (f" level {w.level}" if w.level is not None else "")
                    + f" at {vecs}: expected {w.expected}, observed {w.observed}"
                )
        counts = self.counts()
        lines.append(
            "  totals: "
            + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        )
        return "\n".join(lines) + "\n"


# --- random rational sampling -------------------------------------------------


def rational_pool(domain: DomainX) -> tuple[Fraction, ...]:
    """Small-denominator rationals inside the domain, covering boundaries."""
    base = sorted({Fraction(n, d) for d in (1, 2, 3, 4) for n in range(-8, 9)})
    return tuple(x for x in base if domain.contains_scalar(x))


def _random_index_vector(rng: random.Random, count: int, n: int) -> tuple[int, ...]:
    r = rng.random
    return tuple(int(r() * count) for _ in range(n))


# --- pooling-principle sweeps ---------------------------------------------------


def _sweep_per_coordinate(
    config: SpaceConfig, plan: TrialPlan
) -> tuple[int, Witness | None]:
    """Grid-then-random principle sweep for per-coordinate scoring families.

    Per-coordinate membership tables make the sweep cheap; any candidate
    mismatch is confirmed through check_principle before being reported, so
    a witness always replays on the normative path.
    """
    dom = config.domain
    n = dom.n
    sem = config.semantics
    fam = config.family
    op = config.operator

    grid_vals = tuple(x for x in plan.grid if dom.contains_scalar(x))
    pool_vals = rational_pool(dom)
    values: tuple[Fraction, ...] = tuple(sorted(set(grid_vals) | set(pool_vals)))
    count = len(values)
    member = [member_sign(sem, scalar_sign(fam, x)) for x in values]
    pooled = [
        [
            member_sign(sem, scalar_sign(fam, pool_scalar(op, a, b)))
            for b in values
        ]
        for a in values
    ]

    def confirm(u_idx: Sequence[int], w_idx: Sequence[int]) -> Witness:
        u = tuple(values[i] for i in u_idx)
        w = tuple(values[i] for i in w_idx)
        violation = check_principle(config, u, w)
        if violation is None:
            raise AssertionError(
                "fast sweep flagged a pair the normative check accepts: "
                f"{u} / {w} on {config.name}"
            )
        return Witness(
            candidate=config.name,
            kind="pooling",
            semantics=violation.semantics,
            vectors=(u, w),
            prop=violation.prop,
            expected=violation.expected,
            observed=violation.observed,
        )

    trials = 0
    grid_idx = [values.index(g) for g in grid_vals]
    points = list(itertools.product(grid_idx, repeat=n))
    rng_range = range(n)
    for u_idx in points:
        for w_idx in points:
            trials += 1
            for k in rng_range:
                a, b = u_idx[k], w_idx[k]
                if (member[a] or member[b]) != pooled[a][b]:
                    return trials, confirm(u_idx, w_idx)

    rng = plan.rng(f"pooling:{config.name}")
    for _ in range(plan.trials):
        trials += 1
        u_idx = _random_index_vector(rng, count, n)
        w_idx = _random_index_vector(rng, count, n)
        for k in rng_range:
            a, b = u_idx[k], w_idx[k]
            if (member[a] or member[b]) != pooled[a][b]:
                return trials, confirm(u_idx, w_idx)
    return trials, None


def _sweep_direct(config: SpaceConfig, plan: TrialPlan) -> tuple[int, Witness | None]:
    """Plain check_principle sweep for families that are not per-coordinate."""
    dom = config.domain
    grid_vals = tuple(x for x in plan.grid if dom.contains_scalar(x))
    points = list(itertools.product(grid_vals, repeat=dom.n))
    trials = 0
    for u in points:
        for w in points:
            trials += 1
            violation = check_principle(config, u, w)
            if violation is not None:
                return trials, Witness(
                    candidate=config.name,
                    kind="pooling",
                    semantics=violation.semantics,
                    vectors=(u, w),
                    prop=violation.prop,
                    expected=violation.expected,
                    observed=violation.observed,
                )
    pool_vals = rational_pool(dom)
    rng = plan.rng(f"pooling:{config.name}")
    for _ in range(plan.trials):
        trials += 1
        u = tuple(rng.choice(pool_vals) for _ in range(dom.n))
        w = tuple(rng.choice(pool_vals) for _ in range(dom.n))
        violation = check_principle(config, u, w)
        if violation is not None:
            return trials, Witness(
                candidate=config.name,
                kind="pooling",
                semantics=violation.semantics,
                vectors=(u, w),
                prop=violation.prop,
                expected=violation.expected,
                observed=violation.observed,
            )
    return trials, None


def principle_sweep(config: SpaceConfig, plan: TrialPlan) -> tuple[int, Witness | None]:
    if config.family == DISC:
        return _sweep_direct(config, plan)
    return _sweep_per_coordinate(config, plan)


def roundtrip_sweep(
    config: SpaceConfig, plan: TrialPlan, exhaustive_limit: int = 4
) -> tuple[int, Witness | None]:
    """decode(encode(Q)) == Q over all states (|P| small) or a seeded sample."""
    size = config.size
    if size <= exhaustive_limit:
        subsets: Iterable[frozenset[int]] = (
            frozenset(c)
            for r in range(size + 1)
            for c in itertools.combinations(range(size), r)
        )
    else:
        rng = plan.rng(f"roundtrip:{config.name}")
        subsets = (
            frozenset(i for i in range(size) if rng.random() < 0.5)
            for _ in range(256)
        )
    trials = 0
    for members in subsets:
        trials += 1
        state = EpistemicState(config.properties, members)
        got = decode(config, encode(config, state))
        if got.members != members:
            prop = min(got.members ^ members)
            return trials, Witness(
                candidate=config.name,
                kind="roundtrip",
                semantics=config.semantics,
                vectors=(encode(config, state),),
                prop=prop,
                expected=prop in members,
                observed=prop in got.members,
            )
    return trials, None


def verify_space(config: SpaceConfig, plan: TrialPlan | None = None) -> Report:
    """Pooling-principle sweep plus encoder roundtrip for one space."""
    plan = plan or TrialPlan()
    report = Report(plan.seed, plan)
    expected = VERIFIED if config.principle_expected else FALSIFIED

    start = time.perf_counter()
    trials, witness = principle_sweep(config, plan)
    report.cells.append(
        ReportCell(
            cell=f"pooling:{config.name}",
            status=FALSIFIED if witness else VERIFIED,
            trials=trials,
            expected_status=expected,
            witness=witness,
            elapsed=time.perf_counter() - start,
        )
    )

    start = time.perf_counter()
    trials, witness = roundtrip_sweep(config, plan)
    report.cells.append(
        ReportCell(
            cell=f"roundtrip:{config.name}",
            status=FALSIFIED if witness else VERIFIED,
            trials=trials,
            expected_status=VERIFIED,
            witness=witness,
            elapsed=time.perf_counter() - start,
        )
    )
    return report


# --- weighted sweeps ------------------------------------------------------------


def weighted_roundtrip_sweep(
    config: SpaceConfig, cap: int
) -> tuple[int, Witness | None]:
    trials = 0
    for levels in itertools.product(range(cap + 1), repeat=config.size):
        trials += 1
        state = WeightedState(config.properties, levels, cap)
        v = encode_weighted(config, state)
        for semantics in ("strict", "weak"):
            got = decode_weighted(config, v, semantics=semantics, cap=cap)
            if got.levels != state.levels:
                prop = next(
                    i for i, (x, y) in enumerate(zip(state.levels, got.levels)) if x != y
                )
                return trials, Witness(
                    candidate=config.name,
                    kind="weighted",
                    semantics=semantics,
                    vectors=(v,),
                    prop=prop,
                    expected=True,
                    observed=False,
                    level=state.levels[prop],
                )
    return trials, None


def weighted_principle_sweep(
    config: SpaceConfig,
    plan: TrialPlan,
    cap: int,
    semantics: str,
) -> tuple[int, Witness | None]:
    """Encoded pairs, then a grid (unit domains) or random pairs (real domains)."""
    trials = 0

    def run(u: Vector, w: Vector) -> Witness | None:
        violation = check_weighted_principle(config, cap, u, w, semantics)
        if violation is None:
            return None
        return Witness(
            candidate=config.name,
            kind="weighted",
            semantics=semantics,
            vectors=(u, w),
            prop=violation.prop,
            expected=violation.expected,
            observed=violation.observed,
            level=violation.level,
        )

    if config.size <= 3 and (cap + 1) ** config.size <= 64:
        encoded = [
            encode_weighted(config, WeightedState(config.properties, levels, cap))
            for levels in itertools.product(range(cap + 1), repeat=config.size)
        ]
        for u in encoded:
            for w in encoded:
                trials += 1
                witness = run(u, w)
                if witness:
                    return trials, witness

    if config.domain.kind == "unit":
        grid = tuple(x for x in UNIT_LEVEL_GRID if config.domain.contains_scalar(x))
        points = list(itertools.product(grid, repeat=config.n))
        for u in points:
            for w in points:
                trials += 1
                witness = run(u, w)
                if witness:
                    return trials, witness
    else:
        pool_vals = rational_pool(config.domain)
        rng = plan.rng(f"weighted:{config.name}:{semantics}")
        for _ in range(plan.trials):
            trials += 1
            u = tuple(rng.choice(pool_vals) for _ in range(config.n))
            w = tuple(rng.choice(pool_vals) for _ in range(config.n))
            witness = run(u, w)
            if witness:
                return trials, witness
    return trials, None


def verify_weighted(config: SpaceConfig, plan: TrialPlan | None = None) -> Report:
    plan = plan or TrialPlan()
    cap = config.levels
    if cap is None:
        raise ValueError(f"{config.name} has no level cap configured")
    report = Report(plan.seed, plan)

    start = time.perf_counter()
    trials, witness = weighted_roundtrip_sweep(config, cap)
    report.cells.append(
        ReportCell(
            cell=f"weighted-roundtrip:{config.name}:K{cap}",
            status=FALSIFIED if witness else VERIFIED,
            trials=trials,
            expected_status=VERIFIED,
            witness=witness,
            elapsed=time.perf_counter() - start,
        )
    )
    for semantics in ("strict", "weak"):
        start = time.perf_counter()
        trials, witness = weighted_principle_sweep(config, plan, cap, semantics)
        report.cells.append(
            ReportCell(
                cell=f"weighted-principle:{config.name}:K{cap}:{semantics}",
                status=FALSIFIED if witness else VERIFIED,
                trials=trials,
                expected_status=VERIFIED,
                witness=witness,
                elapsed=time.perf_counter() - start,
            )
        )
    return report


# --- entailment sweeps ------------------------------------------------------------


_TWO_ATOMS = AtomTable.of(("a", "b"))


def two_atom_clauses() -> list[Formula]:
    a, b = Atom("a"), Atom("b")
    return [
        a,
        b,
        Not(a),
        Not(b),
        Or(a, b),
        Or(a, Not(b)),
        Or(Not(a), b),
        Or(Not(a), Not(b)),
    ]


def random_formula(rng: random.Random, names: Sequence[str], depth: int) -> Formula:
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.08:
            return Const(True)
        if r < 0.16:
            return Const(False)
        return Atom(rng.choice(list(names)))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_formula(rng, names, depth - 1))
    left = random_formula(rng, names, depth - 1)
    right = random_formula(rng, names, depth - 1)
    return (And, Or, Implies, Iff)[kind - 1](left, right)


def formula_battery(plan: TrialPlan, count: int = 50) -> list[Formula]:
    rng = plan.rng("formulas")
    battery = two_atom_clauses() + [Const(True), Const(False)]
    battery.extend(
        random_formula(rng, _TWO_ATOMS.names, 3) for _ in range(count)
    )
    return battery


def logical_space(name: str, atom_count: int = 2, **params) -> SpaceConfig:
    names = tuple("abcdefghijkl"[:atom_count])
    atoms = AtomTable.of(names)
    props = PropertySpace.logical(atoms)
    return make_space(name, properties=props, **params)


def oracle_equivalence_sweep(
    config: SpaceConfig, scorer: str, plan: TrialPlan
) -> tuple[int, Witness | None]:
    """psi against the brute-force oracle, all states x the formula battery."""
    atoms = config.properties.atoms
    if atoms is None:
        raise ValueError("oracle sweep needs a logical property space")
    formulas = formula_battery(plan)
    counter_cache = {
        pretty(f): tuple(sorted(models(Not(f), atoms=atoms))) for f in formulas
    }
    trials = 0
    size = config.size
    for bits in range(1 << size):
        members = frozenset(i for i in range(size) if bits >> i & 1)
        state = EpistemicState(config.properties, members)
        v = encode(config, state)
        for f in formulas:
            trials += 1
            expected = state_entails(state, f, config.semantics)
            observed = psi(config, scorer, f, v)
            if expected != observed:
                return trials, Witness(
                    candidate=f"{config.name}+{scorer}",
                    kind="subset-score",
                    semantics=config.semantics,
                    vectors=(v,),
                    prop=min(counter_cache[pretty(f)], default=0),
                    expected=expected,
                    observed=observed,
                    q=counter_cache[pretty(f)],
                )
    return trials, None


def clear_cut_grid_sweep(
    config: SpaceConfig, scorer: str
) -> tuple[int, Witness | None]:
    """Margin scorers against the conjunction test on the clear-cut grid."""
    assert config.margin is not None
    delta = config.margin
    if config.domain.kind == "unit":
        grid_vals: tuple[Fraction, ...] = (Fraction(0), delta, Fraction(1))
    else:
        grid_vals = (Fraction(0), delta, 2 * delta)
    grid_vals = tuple(sorted(set(grid_vals)))
    trials = 0
    size = config.size
    for v in itertools.product(grid_vals, repeat=config.n):
        if not x_star_membership(config, delta, v):
            continue
        for bits in range(1 << size):
            q = tuple(i for i in range(size) if bits >> i & 1)
            trials += 1
            expected = all(
                member_sign(config.semantics, scalar_sign(config.family, v[i]))
                for i in q
            )
            score = gamma_q(config, scorer, q, v)
            observed = (
                score.signum() > 0
                if config.semantics == "strict"
                else score.signum() >= 0
            )
            if expected != observed:
                return trials, Witness(
                    candidate=f"{config.name}+{scorer}",
                    kind="subset-score",
                    semantics=config.semantics,
                    vectors=(v,),
                    prop=min(q, default=0),
                    expected=expected,
                    observed=observed,
                    q=q,
                )
    return trials, None


def verify_entailment(
    config: SpaceConfig, scorer: str, plan: TrialPlan | None = None
) -> Report:
    plan = plan or TrialPlan()
    report = Report(plan.seed, plan)
    reason = scorer_compatible(config, scorer)
    if reason is not None:
        report.cells.append(
            ReportCell(
                cell=f"entailment:{config.name}:{scorer}",
                status=SKIPPED,
                expected_status=SKIPPED,
                note=reason,
            )
        )
        return report

    if config.properties.atoms is not None:
        start = time.perf_counter()
        trials, witness = oracle_equivalence_sweep(config, scorer, plan)
        report.cells.append(
            ReportCell(
                cell=f"entailment:{config.name}:{scorer}",
                status=FALSIFIED if witness else VERIFIED,
                trials=trials,
                expected_status=VERIFIED,
                witness=witness,
                elapsed=time.perf_counter() - start,
            )
        )
    if scorer in ("margin-relu", "sigmoid", "margin-linear"):
        start = time.perf_counter()
        trials, witness = clear_cut_grid_sweep(config, scorer)
        note = ""
        if scorer == "sigmoid" and not sigmoid_conditions_ok(config):
            witness = witness or Witness(
                candidate=f"{config.name}+sigmoid",
                kind="subset-score",
                semantics=config.semantics,
                vectors=(),
                prop=0,
                expected=True,
                observed=False,
            )
            note = "sigmoid separation conditions failed"
        report.cells.append(
            ReportCell(
                cell=f"clear-cut:{config.name}:{scorer}",
                status=FALSIFIED if witness else VERIFIED,
                trials=trials,
                expected_status=VERIFIED,
                witness=witness,
                note=note,
                elapsed=time.perf_counter() - start,
            )
        )
    return report


# --- falsification candidates ---------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    name: str
    kind: str  # pooling | subset-score
    summary: str
    config: SpaceConfig
    q: tuple[int, ...] | None = None
    score: Callable[[Vector], Fraction] | None = None


def _doomed_space(name: str, operator: str, semantics: str, family: str) -> SpaceConfig:
    return SpaceConfig(
        name,
        operator,
        semantics,
        reals(2),
        family,
        PropertySpace.abstract(2),
        principle_expected=False,
    )


def _affine_sum_minus_one(v: Vector) -> Fraction:
    return v[0] + v[1] - 1


def _plain_sum(v: Vector) -> Fraction:
    return v[0] + v[1]


FALSIFY_REGISTRY: dict[str, Candidate] = {
    "avg-strict-reals-coordinate": Candidate(
        "avg-strict-reals-coordinate",
        "pooling",
        "average pooling with coordinate scores on all of R^n (strict)",
        _doomed_space("avg-strict-reals-coordinate", "avg", "strict", COORDINATE),
    ),
    "avg-weak-reals-coordinate": Candidate(
        "avg-weak-reals-coordinate",
        "pooling",
        "average pooling with coordinate scores on all of R^n (weak)",
        _doomed_space("avg-weak-reals-coordinate", "avg", "weak", COORDINATE),
    ),
    "sum-weak-reals-coordinate": Candidate(
        "sum-weak-reals-coordinate",
        "pooling",
        "summation pooling with coordinate scores on all of R^n (weak)",
        _doomed_space("sum-weak-reals-coordinate", "sum", "weak", COORDINATE),
    ),
    "had-strict-reals-oneMinusSquare": Candidate(
        "had-strict-reals-oneMinusSquare",
        "pooling",
        "Hadamard pooling with continuous band scores 1 - e_i^2 (strict)",
        _doomed_space(
            "had-strict-reals-oneMinusSquare", "had", "strict", ONE_MINUS_SQUARE
        ),
    ),
    "strict-linear-gammaQ-affine": Candidate(
        "strict-linear-gammaQ-affine",
        "subset-score",
        "affine subset score e_0 + e_1 - 1 under strict semantics",
        SpaceConfig(
            "strict-linear-gammaQ-affine",
            "avg",
            "strict",
            nonneg(2),
            COORDINATE,
            PropertySpace.abstract(2),
            principle_expected=False,
        ),
        q=(0, 1),
        score=_affine_sum_minus_one,
    ),
    "max-weak-reals-linear-gammaQ": Candidate(
        "max-weak-reals-linear-gammaQ",
        "subset-score",
        "linear subset score e_0 + e_1 for weak max pooling on R^n",
        SpaceConfig(
            "max-weak-reals-linear-gammaQ",
            "max",
            "weak",
            reals(2),
            COORDINATE,
            PropertySpace.abstract(2),
            principle_expected=False,
        ),
        q=(0, 1),
        score=_plain_sum,
    ),
}


def _subset_score_mismatch(cand: Candidate, v: Vector) -> Witness | None:
    assert cand.q is not None and cand.score is not None
    config = cand.config
    s = cand.score(v)
    observed = s > 0 if config.semantics == "strict" else s >= 0
    per_prop = {
        i: member_sign(config.semantics, scalar_sign(config.family, v[i]))
        for i in cand.q
    }
    expected = all(per_prop.values())
    if expected == observed:
        return None
    culprit = next((i for i in cand.q if not per_prop[i]), min(cand.q))
    return Witness(
        candidate=cand.name,
        kind="subset-score",
        semantics=config.semantics,
        vectors=(v,),
        prop=culprit,
        expected=expected,
        observed=observed,
        q=cand.q,
    )


def falsify_counted(
    candidate: str, plan: TrialPlan | None = None
) -> tuple[int, Witness | None]:
    """Deterministic grid-then-random search; returns (trials run, witness)."""
    plan = plan or TrialPlan()
    try:
        cand = FALSIFY_REGISTRY[candidate]
    except KeyError:
        raise KeyError(
            f"unknown candidate {candidate!r}; known: "
            + ", ".join(sorted(FALSIFY_REGISTRY))
        ) from None
    config = cand.config
    dom = config.domain
    grid_vals = tuple(x for x in plan.grid if dom.contains_scalar(x))
    points = list(itertools.product(grid_vals, repeat=dom.n))
    pool_vals = rational_pool(dom)
    rng = plan.rng(f"falsify:{cand.name}")
    trials = 0

    if cand.kind == "pooling":

        def pooling_witness(u: Vector, w: Vector) -> Witness | None:
            violation = check_principle(config, u, w)
            if violation is None:
                return None
            return Witness(
                candidate=cand.name,
                kind="pooling",
                semantics=violation.semantics,
                vectors=(u, w),
                prop=violation.prop,
                expected=violation.expected,
                observed=violation.observed,
            )

        for u in points:
            for w in points:
                trials += 1
                witness = pooling_witness(u, w)
                if witness is not None:
                    return trials, witness
        for _ in range(plan.trials):
            trials += 1
            u = tuple(rng.choice(pool_vals) for _ in range(dom.n))
            w = tuple(rng.choice(pool_vals) for _ in range(dom.n))
            witness = pooling_witness(u, w)
            if witness is not None:
                return trials, witness
        return trials, None

    for v in points:
        trials += 1
        witness = _subset_score_mismatch(cand, v)
        if witness is not None:
            return trials, witness
    for _ in range(plan.trials):
        trials += 1
        v = tuple(rng.choice(pool_vals) for _ in range(dom.n))
        witness = _subset_score_mismatch(cand, v)
        if witness is not None:
            return trials, witness
    return trials, None


def falsify(candidate: str, plan: TrialPlan | None = None) -> Witness | None:
    return falsify_counted(candidate, plan)[1]


def replay_witness(witness: Witness) -> bool:
    """Re-evaluate a witness from scratch; True when it reproduces exactly."""
    cand = FALSIFY_REGISTRY.get(witness.candidate)
    if witness.kind == "pooling":
        if cand is not None:
            config = cand.config
        else:
            config = make_space(witness.candidate, size=len(witness.vectors[0]))
        violation = check_principle(config, *witness.vectors)
        return (
            violation is not None
            and violation.prop == witness.prop
            and violation.expected == witness.expected
            and violation.observed == witness.observed
        )
    if witness.kind == "subset-score" and cand is not None:
        again = _subset_score_mismatch(cand, witness.vectors[0])
        return again is not None and again == witness
    if witness.kind == "weighted":
        config = make_space(witness.candidate, size=len(witness.vectors[0]))
        cap = config.levels or 1
        violation = check_weighted_principle(
            config, cap, *witness.vectors, semantics=witness.semantics
        )
        return (
            violation is not None
            and violation.prop == witness.prop
            and violation.level == witness.level
        )
    return False


# --- the consolidated table report ---------------------------------------------


def _skip(cell: str, note: str) -> ReportCell:
    return ReportCell(cell=cell, status=SKIPPED, expected_status=SKIPPED, note=note)


def _falsify_cell(cell: str, candidate: str, plan: TrialPlan, note: str = "") -> ReportCell:
    start = time.perf_counter()
    trials, witness = falsify_counted(candidate, plan)
    tail = "impossibility itself is out of mechanised scope; one natural candidate is refuted"
    return ReportCell(
        cell=cell,
        status=FALSIFIED if witness else VERIFIED,
        trials=trials,
        expected_status=FALSIFIED,
        witness=witness,
        note=f"{note + '; ' if note else ''}{tail}",
        elapsed=time.perf_counter() - start,
    )


def table_report(plan: TrialPlan | None = None) -> Report:
    """Machine-check every cell of the three result tables.

    Possible cells run the matching construction sweep; impossible cells
    refute their registry candidate or cite the configuration validator.
    """
    plan = plan or TrialPlan()
    report = Report(plan.seed, plan)
    cells = report.cells

    # realizability of the pooling principles, per (operator, semantics)
    sweeps: dict[str, tuple[int, Witness | None, float]] = {}

    def sweep(name: str) -> tuple[int, Witness | None, float]:
        if name not in sweeps:
            config = make_space(name, plan.dimension)
            start = time.perf_counter()
            trials, witness = principle_sweep(config, plan)
            sweeps[name] = (trials, witness, time.perf_counter() - start)
        return sweeps[name]

    def verified_cell(cell: str, space: str, note: str = "") -> ReportCell:
        trials, witness, elapsed = sweep(space)
        return ReportCell(
            cell=cell,
            status=FALSIFIED if witness else VERIFIED,
            trials=trials,
            expected_status=VERIFIED,
            witness=witness,
            note=note or f"construction {space}",
            elapsed=elapsed,
        )

    cells.append(verified_cell("realizability:avg:strict:construction", "avg-strict-nonneg"))
    cells.append(
        _falsify_cell(
            "realizability:avg:strict:unrestricted-domain",
            "avg-strict-reals-coordinate",
            plan,
        )
    )
    cells.append(
        verified_cell(
            "realizability:avg:strict:continuous-scores",
            "avg-strict-nonneg",
            note="coordinate scores are continuous",
        )
    )

    cells.append(
        verified_cell("realizability:avg:weak:construction", "avg-weak-nonneg-step")
    )
    cells.append(
        _falsify_cell(
            "realizability:avg:weak:unrestricted-domain",
            "avg-weak-reals-coordinate",
            plan,
        )
    )
    cells.append(
        _falsify_cell(
            "realizability:avg:weak:continuous-scores",
            "avg-weak-reals-coordinate",
            plan,
            note="natural continuous candidate",
        )
    )

    cells.append(verified_cell("realizability:sum:strict:construction", "sum-strict-nonneg"))
    cells.append(
        _skip(
            "realizability:sum:strict:unrestricted-domain",
            "no registry candidate; summation on R^n shares the averaging obstruction",
        )
    )
    cells.append(
        verified_cell(
            "realizability:sum:strict:continuous-scores",
            "sum-strict-nonneg",
            note="coordinate scores are continuous",
        )
    )

    cells.append(
        _skip(
            "realizability:sum:weak:construction",
            "no registry construction; the step-score workaround is exercised for averaging",
        )
    )
    cells.append(
        _falsify_cell(
            "realizability:sum:weak:unrestricted-domain",
            "sum-weak-reals-coordinate",
            plan,
        )
    )
    cells.append(
        _falsify_cell(
            "realizability:sum:weak:continuous-scores",
            "sum-weak-reals-coordinate",
            plan,
            note="natural continuous candidate",
        )
    )

    for sem, space in (("strict", "max-strict-reals"), ("weak", "max-weak-reals")):
        cells.append(verified_cell(f"realizability:max:{sem}:construction", space))
        cells.append(
            verified_cell(
                f"realizability:max:{sem}:unrestricted-domain",
                space,
                note="the construction already lives on all of R^n",
            )
        )
        cells.append(
            verified_cell(
                f"realizability:max:{sem}:continuous-scores",
                space,
                note="coordinate scores are continuous",
            )
        )

    cells.append(verified_cell("realizability:had:strict:construction", "had-strict-reals"))
    cells.append(
        verified_cell(
            "realizability:had:strict:unrestricted-domain",
            "had-strict-reals",
            note="the construction already lives on all of R^n",
        )
    )
    cells.append(
        _falsify_cell(
            "realizability:had:strict:continuous-scores",
            "had-strict-reals-oneMinusSquare",
            plan,
        )
    )

    cells.append(verified_cell("realizability:had:weak:construction", "had-weak-reals"))
    cells.append(
        verified_cell(
            "realizability:had:weak:unrestricted-domain",
            "had-weak-reals",
            note="the construction already lives on all of R^n",
        )
    )
    cells.append(
        verified_cell(
            "realizability:had:weak:continuous-scores",
            "had-weak-reals",
            note="negated-square scores are continuous",
        )
    )

    # demo space: the pooling principle is expected NOT to hold here
    config = make_space("example1")
    start = time.perf_counter()
    trials, witness = principle_sweep(config, plan)
    cells.append(
        ReportCell(
            cell="demo:example1",
            status=FALSIFIED if witness else VERIFIED,
            trials=trials,
            expected_status=FALSIFIED,
            witness=witness,
            note="two-disc demo; failure is the expected outcome",
            elapsed=time.perf_counter() - start,
        )
    )

    # linear subset scorers
    strict_note = "the strict-semantics obstruction is operator-independent"
    for cell in (
        "linear-scorers:avg:strict",
        "linear-scorers:sum:strict",
        "linear-scorers:max:reals:strict",
        "linear-scorers:max:bounded-above:strict",
        "linear-scorers:had:reals:strict",
        "linear-scorers:had:nonneg:strict",
    ):
        cells.append(
            _falsify_cell(cell, "strict-linear-gammaQ-affine", plan, note=strict_note)
        )
    weak_note = "weak averaging/summation admit no continuous scores at all"
    cells.append(_skip("linear-scorers:avg:weak", weak_note))
    cells.append(_skip("linear-scorers:sum:weak", weak_note))
    cells.append(
        _falsify_cell(
            "linear-scorers:max:reals:weak", "max-weak-reals-linear-gammaQ", plan
        )
    )
    cells.append(
        _skip(
            "linear-scorers:had:reals:weak",
            "no registry candidate; the bounding hyperplanes cannot be parallel",
        )
    )
    for cell, space in (
        ("linear-scorers:max:bounded-above:weak", "max-weak-nonpos"),
        ("linear-scorers:had:nonneg:weak", "had-weak-nonneg"),
    ):
        sub = verify_entailment(logical_space(space), "linear", plan)
        for c in sub.cells:
            c.cell = cell
            cells.append(c)

    # clear-cut margin scorers; cells keep their oracle/grid split
    for scorer in ("margin-relu", "sigmoid", "margin-linear"):
        space = "avg-margin-unit" if scorer == "margin-linear" else "avg-margin-nonneg"
        sub = verify_entailment(logical_space(space), scorer, plan)
        cells.extend(sub.cells)

    # weighted pooling
    for op in ("avg", "sum", "had"):
        for sem in ("strict", "weak"):
            probe = SpaceConfig(
                f"weighted-{op}-probe",
                op,
                sem,
                nonneg(2),
                COORDINATE if op != "had" else ZERO_INDICATOR,
                PropertySpace.abstract(2),
                levels=2,
                principle_expected=False,
            )
            violations = validate_config(probe)
            dim = next((v for v in violations if v.rule == "weighted-dimension"), None)
            note = (
                dim.message
                if dim is not None
                else "; ".join(v.message for v in violations) or "no violation raised"
            )
            cells.append(
                _skip(
                    f"weighted:{op}:{sem}:n-equals-P",
                    f"configuration validator rejects n=|P|: {note}",
                )
            )

    wmax = make_space("weighted-max-reals", plan.dimension, levels=2)
    sub = verify_weighted(wmax, plan)
    cells.extend(sub.cells)
    whad = make_space("weighted-had-unit", plan.dimension)
    sub = verify_weighted(whad, plan)
    for c in sub.cells:
        c.note = (c.note + "; " if c.note else "") + "cap-2 exception on [0,1]^n"
        cells.append(c)

    return report
