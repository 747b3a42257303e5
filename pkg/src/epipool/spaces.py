"""Embedding-space configurations: domain, scoring family, encoder, decoder.

A :class:`SpaceConfig` bundles everything needed to treat vectors as
epistemic states: the admissible region ``X``, a per-property scoring
family, the pooling operator the space is meant for, and whether property
satisfaction reads scores with ``> 0`` (strict) or ``>= 0`` (weak).

The registry ships one named configuration per construction the package
can realise, plus ``example1``, a deliberately unsound two-disc demo space
whose pooling principle fails for some pairs (that failure is part of what
the verifier demonstrates).  Encoders are fixed canonical witnesses so that
outputs are reproducible byte for byte; many encodings would work, the
particular values below are this package's choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .epistemic import EpistemicState, PropertySpace
from .numeric import ScoreValue, format_rational, is_square, sqrt_exact

Vector = tuple[Fraction, ...]

OPERATORS = ("avg", "sum", "max", "had")
SEMANTICS = ("strict", "weak")

# scoring families; names describe the per-coordinate score
COORDINATE = "coordinate"            # e_i
STEP_SIGN = "step-sign"              # 1 if e_i > 0 else -1
ZERO_INDICATOR = "zero-indicator"    # 1 if e_i = 0 else 0
NEG_COORDINATE = "neg-coordinate"    # -e_i
NEG_SQUARE = "neg-square"            # -e_i^2
NEG_RELU = "neg-relu"                # -max(0, -e_i)
GRADED_UNIT = "graded-unit"          # 3/2 at 0, -1/2 at 1, 1/2 in between
DISC = "disc"                        # unit discs at (0,0) and (1,1), n = 2
ONE_MINUS_SQUARE = "one-minus-square"  # 1 - e_i^2 (doomed candidate)

FAMILIES = (
    COORDINATE,
    STEP_SIGN,
    ZERO_INDICATOR,
    NEG_COORDINATE,
    NEG_SQUARE,
    NEG_RELU,
    GRADED_UNIT,
    DISC,
    ONE_MINUS_SQUARE,
)

CONTINUOUS_FAMILIES = frozenset(
    {COORDINATE, NEG_COORDINATE, NEG_SQUARE, NEG_RELU, DISC, ONE_MINUS_SQUARE}
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DomainError(ValueError):
    """Vector outside the admissible region X, or dimension mismatch."""


class EncodingError(ValueError):
    """No canonical encoder for this configuration."""


@dataclass(frozen=True)
class DomainX:
    """Coordinatewise-decidable region of R^n."""

    kind: str  # reals | nonneg | nonpos | bounded-above | unit
    n: int
    z: Fraction | None = None  # upper bound for bounded-above

    def __post_init__(self) -> None:
        if self.kind not in ("reals", "nonneg", "nonpos", "bounded-above", "unit"):
            raise ValueError(f"unknown domain kind: {self.kind!r}")
        if (self.kind == "bounded-above") != (self.z is not None):
            raise ValueError("z is required exactly for bounded-above domains")
        if self.n < 0:
            raise ValueError("dimension cannot be negative")

    def contains_scalar(self, x: Fraction) -> bool:
        if self.kind == "reals":
            return True
        if self.kind == "nonneg":
            return x >= 0
        if self.kind == "nonpos":
            return x <= 0
        if self.kind == "unit":
            return 0 <= x <= 1
        assert self.z is not None
        return x <= self.z

    def describe(self) -> str:
        return {
            "reals": "R^n",
            "nonneg": "[0,+inf)^n",
            "nonpos": "(-inf,0]^n",
            "unit": "[0,1]^n",
            "bounded-above": f"(-inf,{format_rational(self.z)}]^n" if self.z is not None else "",
        }[self.kind]


def reals(n: int) -> DomainX:
    return DomainX("reals", n)


def nonneg(n: int) -> DomainX:
    return DomainX("nonneg", n)


def nonpos(n: int) -> DomainX:
    return DomainX("nonpos", n)


def unit(n: int) -> DomainX:
    return DomainX("unit", n)


def bounded_above(z: Fraction, n: int) -> DomainX:
    return DomainX("bounded-above", n, z=Fraction(z))


def contains(domain: DomainX, v: Vector) -> bool:
    if len(v) != domain.n:
        raise DomainError(f"vector has dimension {len(v)}, domain expects {domain.n}")
    return all(domain.contains_scalar(x) for x in v)


def vector(coords: Iterable[Fraction | int | str]) -> Vector:
    from .numeric import parse_rational

    out: list[Fraction] = []
    for c in coords:
        if isinstance(c, str):
            out.append(parse_rational(c))
        else:
            out.append(Fraction(c))
    return tuple(out)


def format_vector(v: Vector) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


@dataclass(frozen=True)
class SpaceConfig:
    name: str
    operator: str
    semantics: str
    domain: DomainX
    family: str
    properties: PropertySpace
    margin: Fraction | None = None  # separation width for margin spaces
    eps: Fraction | None = None     # near-binary slack for the unit margin space
    levels: int | None = None       # certainty cap K for weighted spaces
    principle_expected: bool = True  # False for demo/doomed configurations

    def __post_init__(self) -> None:
        if self.operator not in OPERATORS:
            raise ValueError(f"unknown operator: {self.operator!r}")
        if self.semantics not in SEMANTICS:
            raise ValueError(f"unknown semantics: {self.semantics!r}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown scoring family: {self.family!r}")

    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def size(self) -> int:
        return self.properties.size


@dataclass(frozen=True)
class ConfigViolation:
    rule: str
    message: str


# --- per-coordinate scoring --------------------------------------------------


def scalar_score(family: str, x: Fraction) -> Fraction:
    if family == COORDINATE:
        return x
    if family == STEP_SIGN:
        return _ONE if x > 0 else -_ONE
    if family == ZERO_INDICATOR:
        return _ONE if x == 0 else _ZERO
    if family == NEG_COORDINATE:
        return -x
    if family == NEG_SQUARE:
        return -(x * x)
    if family == NEG_RELU:
        return x if x < 0 else _ZERO
    if family == GRADED_UNIT:
        if x == 0:
            return Fraction(3, 2)
        if x == 1:
            return Fraction(-1, 2)
        return Fraction(1, 2)
    if family == ONE_MINUS_SQUARE:
        return _ONE - x * x
    raise ValueError(f"family {family!r} is not per-coordinate")


def scalar_sign(family: str, x: Fraction) -> int:
    """Exact sign of the per-coordinate score, avoiding Fraction churn."""
    if family == COORDINATE:
        return (x > 0) - (x < 0)
    if family == STEP_SIGN:
        return 1 if x > 0 else -1
    if family == ZERO_INDICATOR:
        return 1 if x == 0 else 0
    if family == NEG_COORDINATE:
        return (x < 0) - (x > 0)
    if family == NEG_SQUARE:
        return 0 if x == 0 else -1
    if family == NEG_RELU:
        return 0 if x >= 0 else -1
    if family == GRADED_UNIT:
        return -1 if x == 1 else 1
    if family == ONE_MINUS_SQUARE:
        s = _ONE - x * x
        return (s > 0) - (s < 0)
    raise ValueError(f"family {family!r} is not per-coordinate")


_DISC_CENTERS: tuple[Vector, ...] = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(1)),
)


def _disc_score(i: int, v: Vector) -> ScoreValue:
    # score is 1 - distance to the i-th centre; its sign equals the sign of
    # 1 - distance^2, which is rational and hence decidable
    cx, cy = _DISC_CENTERS[i]
    d2 = (v[0] - cx) ** 2 + (v[1] - cy) ** 2
    if is_square(d2):
        return ScoreValue.of(_ONE - sqrt_exact(d2))
    value = 1.0 - math.sqrt(float(d2))
    sign = 1 if d2 < 1 else (-1 if d2 > 1 else 0)
    return ScoreValue.certified(value, sign)


def _disc_sign(i: int, v: Vector) -> int:
    cx, cy = _DISC_CENTERS[i]
    d2 = (v[0] - cx) ** 2 + (v[1] - cy) ** 2
    return 1 if d2 < 1 else (-1 if d2 > 1 else 0)


def gamma(config: SpaceConfig, i: int, v: Vector) -> ScoreValue:
    """Score of property ``i`` at ``v``; exact except for the disc demo."""
    if not contains(config.domain, v):
        raise DomainError(f"vector {format_vector(v)} outside {config.domain.describe()}")
    if i < 0 or i >= config.size:
        raise IndexError(f"property index {i} out of range")
    if config.family == DISC:
        return _disc_score(i, v)
    return ScoreValue.of(scalar_score(config.family, v[i]))


def score_sign(config: SpaceConfig, i: int, v: Vector) -> int:
    if config.family == DISC:
        return _disc_sign(i, v)
    return scalar_sign(config.family, v[i])


def member_sign(semantics: str, sign: int) -> bool:
    return sign > 0 if semantics == "strict" else sign >= 0


def decode(config: SpaceConfig, v: Vector) -> EpistemicState:
    """Epistemic state encoded by ``v`` under the configured semantics."""
    if not contains(config.domain, v):
        raise DomainError(f"vector {format_vector(v)} outside {config.domain.describe()}")
    members = frozenset(
        i
        for i in range(config.size)
        if member_sign(config.semantics, score_sign(config, i, v))
    )
    return EpistemicState(config.properties, members)


_DISC_WITNESSES: dict[frozenset[int], Vector] = {
    frozenset(): (Fraction(10), Fraction(10)),
    frozenset({0}): (Fraction(0), Fraction(0)),
    frozenset({1}): (Fraction(1), Fraction(1)),
    frozenset({0, 1}): (Fraction(1, 2), Fraction(1, 2)),
}


def encode_values(config: SpaceConfig) -> tuple[Fraction, Fraction]:
    """Canonical (member, non-member) coordinate values for this space.

    Refuses configurations whose semantics cannot distinguish the two
    values (e.g. strict reading where no positive score exists in the
    domain); silent non-roundtripping encodings would be worse.
    """
    fam, dom = config.family, config.domain
    if fam == COORDINATE:
        if dom.kind in ("nonneg", "unit"):
            values = (config.margin if config.margin is not None else _ONE, _ZERO)
        elif dom.kind == "reals":
            values = (_ONE, -_ONE)
        elif dom.kind == "nonpos":
            values = (_ZERO, -_ONE)
        else:
            assert dom.z is not None
            top = min(_ONE, dom.z)
            values = (top, top - 2)
    elif fam == STEP_SIGN:
        values = (_ONE, _ZERO)
    elif fam in (ZERO_INDICATOR, NEG_SQUARE, NEG_COORDINATE, GRADED_UNIT):
        values = (_ZERO, _ONE)
    elif fam == NEG_RELU:
        values = (_ONE, -_ONE)
    elif fam == ONE_MINUS_SQUARE:
        values = (_ZERO, Fraction(2))
    else:
        raise EncodingError(f"no coordinatewise encoder for family {fam!r}")
    member, non_member = values
    if not member_sign(config.semantics, scalar_sign(fam, member)) or member_sign(
        config.semantics, scalar_sign(fam, non_member)
    ):
        raise EncodingError(
            f"{config.semantics} semantics cannot separate the canonical "
            f"values for {fam} on {dom.describe()}"
        )
    return values


def encode(config: SpaceConfig, state: EpistemicState) -> Vector:
    """Canonical witness vector with ``decode(encode(state)) == state``."""
    if state.space != config.properties:
        raise ValueError("state belongs to a different property space")
    if config.family == DISC:
        return _DISC_WITNESSES[state.members]
    member, non_member = encode_values(config)
    coords = [
        member if i in state.members else non_member for i in range(config.size)
    ]
    coords.extend([non_member] * (config.n - config.size))
    return tuple(coords)


# --- configuration validation ------------------------------------------------


def _closed_under(operator: str, dom: DomainX) -> bool:
    if operator == "avg":
        return True  # all supported kinds are convex
    if operator == "max":
        return True  # max of two admissible coordinates stays admissible
    if operator == "sum":
        if dom.kind in ("reals", "nonneg", "nonpos"):
            return True
        if dom.kind == "bounded-above":
            assert dom.z is not None
            return dom.z <= 0
        return False  # unit
    # had
    return dom.kind in ("reals", "nonneg", "unit")


def validate_config(config: SpaceConfig) -> list[ConfigViolation]:
    """Structured soundness check; returns violations, never raises.

    A configuration with violations can still be constructed and exercised
    (the falsifier does exactly that); the registry's claimed-sound spaces
    come back clean.
    """
    out: list[ConfigViolation] = []
    op, sem, dom, fam = (
        config.operator,
        config.semantics,
        config.domain,
        config.family,
    )
    size = config.size

    if dom.n < size:
        out.append(
            ConfigViolation(
                "dimension",
                f"n={dom.n} is below the property count {size}; every pooling "
                f"operator needs n >= |P| to realise all states",
            )
        )
    if config.levels is not None:
        k = config.levels
        if k < 1:
            out.append(ConfigViolation("levels", "certainty cap K must be >= 1"))
        blowup_needed = op in ("avg", "sum") or (
            op == "had" and dom.kind in ("reals", "nonneg")
        )
        if blowup_needed and dom.n < size * k:
            out.append(
                ConfigViolation(
                    "weighted-dimension",
                    f"weighted {op} pooling needs n >= |P|*K = {size * k}, got n={dom.n}",
                )
            )
    if op in ("avg", "sum") and dom.kind == "reals":
        out.append(
            ConfigViolation(
                "unrestricted-domain",
                f"{op} pooling over all of R^n forces every vector to encode the "
                f"same state; restrict the domain",
            )
        )
    if not _closed_under(op, dom):
        out.append(
            ConfigViolation(
                "closure",
                f"{dom.describe()} is not closed under {op} pooling",
            )
        )
    if op in ("avg", "sum") and sem == "weak" and fam in CONTINUOUS_FAMILIES:
        out.append(
            ConfigViolation(
                "weak-continuity",
                f"{op} pooling under weak semantics admits no continuous scoring "
                f"family; {fam} is continuous",
            )
        )
    if op == "had" and sem == "strict" and fam in CONTINUOUS_FAMILIES:
        out.append(
            ConfigViolation(
                "strict-continuity",
                "Hadamard pooling under strict semantics admits no continuous "
                f"scoring family; {fam} is continuous",
            )
        )

    # family/operator/domain pairings
    if fam == NEG_COORDINATE and (op != "had" or dom.kind != "nonneg"):
        out.append(
            ConfigViolation(
                "family-pairing",
                "neg-coordinate scoring is a Hadamard-on-[0,+inf)^n family",
            )
        )
    if fam in (ZERO_INDICATOR, NEG_SQUARE, ONE_MINUS_SQUARE, GRADED_UNIT) and op != "had":
        out.append(
            ConfigViolation(
                "family-pairing", f"{fam} scoring pairs with Hadamard pooling only"
            )
        )
    if fam == GRADED_UNIT and dom.kind != "unit":
        out.append(
            ConfigViolation("family-pairing", "graded-unit scoring needs X = [0,1]^n")
        )
    if fam == NEG_RELU and op != "max":
        out.append(
            ConfigViolation("family-pairing", "neg-relu scoring pairs with max pooling")
        )
    if fam == STEP_SIGN and op == "had":
        out.append(
            ConfigViolation("family-pairing", "step-sign scoring breaks under Hadamard pooling")
        )
    if fam == DISC and (dom.n != 2 or size != 2 or op != "avg"):
        out.append(
            ConfigViolation("family-pairing", "disc scoring is the fixed 2-D average demo")
        )

    if config.margin is not None and config.margin <= 0:
        out.append(ConfigViolation("margin", "margin must be positive"))
    if config.eps is not None:
        if not (0 < config.eps < Fraction(1, dom.n)):
            out.append(
                ConfigViolation(
                    "margin",
                    f"near-binary slack must satisfy 0 < eps < 1/n = 1/{dom.n}",
                )
            )
        if dom.kind != "unit":
            out.append(ConfigViolation("margin", "eps applies to the [0,1]^n space only"))
    return out


# --- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class RegistryEntry:
    build: Callable[..., SpaceConfig]
    summary: str
    weighted: bool = False
    principle_expected: bool = True


def _abstract(size: int, properties: PropertySpace | None) -> PropertySpace:
    return properties if properties is not None else PropertySpace.abstract(size)


def _build_simple(
    name: str, operator: str, semantics: str, domain_kind: str, family: str
) -> Callable[..., SpaceConfig]:
    def build(
        size: int,
        properties: PropertySpace | None = None,
        n: int | None = None,
        **params,
    ) -> SpaceConfig:
        props = _abstract(size, properties)
        dom = DomainX(domain_kind, n if n is not None else props.size)
        return SpaceConfig(name, operator, semantics, dom, family, props, **params)

    return build


def _build_margin_nonneg(
    size: int,
    properties: PropertySpace | None = None,
    n: int | None = None,
    margin: Fraction | int = 1,
) -> SpaceConfig:
    props = _abstract(size, properties)
    dom = nonneg(n if n is not None else props.size)
    return SpaceConfig(
        "avg-margin-nonneg", "avg", "strict", dom, COORDINATE, props,
        margin=Fraction(margin),
    )


def _build_margin_unit(
    size: int,
    properties: PropertySpace | None = None,
    n: int | None = None,
    eps: Fraction | None = None,
) -> SpaceConfig:
    props = _abstract(size, properties)
    dim = n if n is not None else props.size
    slack = Fraction(eps) if eps is not None else Fraction(1, 2 * dim)
    return SpaceConfig(
        "avg-margin-unit", "avg", "strict", unit(dim), COORDINATE, props,
        margin=_ONE - slack, eps=slack,
    )


def _build_weighted_max(
    size: int,
    properties: PropertySpace | None = None,
    n: int | None = None,
    levels: int = 2,
) -> SpaceConfig:
    props = _abstract(size, properties)
    dom = reals(n if n is not None else props.size)
    return SpaceConfig(
        "weighted-max-reals", "max", "strict", dom, COORDINATE, props, levels=levels
    )


def _build_weighted_had_unit(
    size: int,
    properties: PropertySpace | None = None,
    n: int | None = None,
    levels: int = 2,
) -> SpaceConfig:
    if levels != 2:
        raise EncodingError("the graded unit-interval space supports K = 2 only")
    props = _abstract(size, properties)
    dom = unit(n if n is not None else props.size)
    return SpaceConfig(
        "weighted-had-unit", "had", "strict", dom, GRADED_UNIT, props, levels=2
    )


def _build_example1(
    size: int = 2, properties: PropertySpace | None = None, n: int | None = None
) -> SpaceConfig:
    if size != 2 or (n is not None and n != 2):
        raise EncodingError("the disc demo space is fixed at n = |P| = 2")
    props = properties if properties is not None else PropertySpace.abstract(("a", "b"))
    return SpaceConfig(
        "example1", "avg", "strict", reals(2), DISC, props, principle_expected=False
    )


REGISTRY: dict[str, RegistryEntry] = {
    "avg-strict-nonneg": RegistryEntry(
        _build_simple("avg-strict-nonneg", "avg", "strict", "nonneg", COORDINATE),
        "average pooling, strict, X=[0,+inf)^n, coordinate scores",
    ),
    "sum-strict-nonneg": RegistryEntry(
        _build_simple("sum-strict-nonneg", "sum", "strict", "nonneg", COORDINATE),
        "summation pooling, strict, X=[0,+inf)^n, coordinate scores",
    ),
    "avg-weak-nonneg-step": RegistryEntry(
        _build_simple("avg-weak-nonneg-step", "avg", "weak", "nonneg", STEP_SIGN),
        "average pooling, weak, X=[0,+inf)^n, two-valued step scores",
    ),
    "max-strict-reals": RegistryEntry(
        _build_simple("max-strict-reals", "max", "strict", "reals", COORDINATE),
        "max pooling, strict, X=R^n, coordinate scores",
    ),
    "max-weak-reals": RegistryEntry(
        _build_simple("max-weak-reals", "max", "weak", "reals", COORDINATE),
        "max pooling, weak, X=R^n, coordinate scores",
    ),
    "max-weak-nonpos": RegistryEntry(
        _build_simple("max-weak-nonpos", "max", "weak", "nonpos", COORDINATE),
        "max pooling, weak, X=(-inf,0]^n, coordinate scores (linear-scorer friendly)",
    ),
    "had-strict-reals": RegistryEntry(
        _build_simple("had-strict-reals", "had", "strict", "reals", ZERO_INDICATOR),
        "Hadamard pooling, strict, X=R^n, zero-indicator scores (discontinuous by design)",
    ),
    "had-weak-reals": RegistryEntry(
        _build_simple("had-weak-reals", "had", "weak", "reals", NEG_SQUARE),
        "Hadamard pooling, weak, X=R^n, negated-square scores",
    ),
    "had-weak-nonneg": RegistryEntry(
        _build_simple("had-weak-nonneg", "had", "weak", "nonneg", NEG_COORDINATE),
        "Hadamard pooling, weak, X=[0,+inf)^n, negated-coordinate scores (linear-scorer friendly)",
    ),
    "avg-margin-nonneg": RegistryEntry(
        _build_margin_nonneg,
        "average pooling, strict, X=[0,+inf)^n with a separation margin for clear-cut scorers",
    ),
    "avg-margin-unit": RegistryEntry(
        _build_margin_unit,
        "average pooling, strict, X=[0,1]^n with near-binary clear-cut states",
    ),
    "weighted-max-reals": RegistryEntry(
        _build_weighted_max,
        "max pooling over R^n with certainty levels 0..K",
        weighted=True,
    ),
    "weighted-had-unit": RegistryEntry(
        _build_weighted_had_unit,
        "Hadamard pooling over [0,1]^n with three certainty levels (K=2)",
        weighted=True,
    ),
    "example1": RegistryEntry(
        _build_example1,
        "two-disc average-pooling demo on R^2; the pooling principle fails here",
        principle_expected=False,
    ),
}


def make_space(name: str, size: int | None = None, **params) -> SpaceConfig:
    """Instantiate a registry configuration at a given property count."""
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown space {name!r}; known: {', '.join(sorted(REGISTRY))}"
        ) from None
    if size is None:
        props = params.get("properties")
        size = props.size if props is not None else (2 if name == "example1" else 3)
    return entry.build(size, **params)


def registry_names(weighted: bool | None = None) -> list[str]:
    return [
        name
        for name, entry in REGISTRY.items()
        if weighted is None or entry.weighted == weighted
    ]


def sound_space_names() -> list[str]:
    """The nine core constructions the pooling-principle suite sweeps.

    Margin and weighted spaces also honour the principle (they reuse these
    constructions) but are exercised by their own dedicated suites.
    """
    return [
        name
        for name, entry in REGISTRY.items()
        if entry.principle_expected and not entry.weighted
        and name not in ("avg-margin-nonneg", "avg-margin-unit")
    ]
