"""Vector file format: JSON with rational-string coordinates.

Document shape::

    {"space": "<registry name>", "n": 4,
     "vectors": [{"name": "kb", "coords": ["1", "0", "1/2", "-2"]}]}

Coordinates use the rational text format everywhere, so files round-trip
losslessly.  Loading against a space configuration rejects any vector that
falls outside the configured domain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .numeric import RationalParseError, format_rational, parse_rational
from .spaces import DomainError, SpaceConfig, Vector, contains, format_vector


class VectorFileError(ValueError):
    """Structurally invalid vector file."""


@dataclass(frozen=True)
class NamedVector:
    name: str
    coords: Vector


@dataclass(frozen=True)
class VectorFile:
    space: str
    n: int
    vectors: tuple[NamedVector, ...]


def dumps_vectors(space: str, vectors: list[NamedVector]) -> str:
    if not vectors:
        raise VectorFileError("refusing to write an empty vector file")
    n = len(vectors[0].coords)
    doc = {
        "space": space,
        "n": n,
        "vectors": [
            {"name": v.name, "coords": [format_rational(x) for x in v.coords]}
            for v in vectors
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads_vectors(text: str) -> VectorFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VectorFileError(f"not valid JSON: {exc}") from None
    try:
        space = doc["space"]
        n = int(doc["n"])
        raw = doc["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise VectorFileError(f"missing or malformed field: {exc}") from None
    vectors = []
    for item in raw:
        try:
            name = item["name"]
            coords = tuple(parse_rational(c) for c in item["coords"])
        except (KeyError, TypeError, AttributeError, RationalParseError) as exc:
            raise VectorFileError(f"bad vector entry: {exc}") from None
        if len(coords) != n:
            raise VectorFileError(
                f"vector {name!r} has {len(coords)} coordinates, file says n={n}"
            )
        vectors.append(NamedVector(name, coords))
    return VectorFile(space, n, tuple(vectors))


def load_for_space(text: str, config: SpaceConfig) -> list[NamedVector]:
    """Parse and admit vectors into the given space, enforcing the domain."""
    vf = loads_vectors(text)
    if vf.n != config.n:
        raise VectorFileError(
            f"file dimension n={vf.n} does not match space {config.name} (n={config.n})"
        )
    for v in vf.vectors:
        if not contains(config.domain, v.coords):
            raise DomainError(
                f"vector {v.name!r} = {format_vector(v.coords)} lies outside "
                f"{config.domain.describe()}"
            )
    return list(vf.vectors)
