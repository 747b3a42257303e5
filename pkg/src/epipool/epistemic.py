"""Epistemic states over a property space, and the bridge to logic.

An epistemic state is just the set of elementary properties for which
evidence has been accumulated.  In *logical* mode the property space has one
property per possible world, read as "this world is excluded", which lets a
state stand for an arbitrary propositional knowledge base: what is entailed
is whatever holds in every world that has not been excluded.  The deductively
closed clause set itself is never materialised; entailment questions go
through the excluded-world reading, and the CLI can reconstruct prime
implicates for small vocabularies on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .logic import (
    MAX_ATOMS_DEFAULT,
    AtomTable,
    Clause,
    Formula,
    KnowledgeBase,
    clause_excluding,
    eval_world,
    models,
)


class SpaceMismatchError(ValueError):
    """Two states from different property spaces were combined."""


class AbstractSpaceError(TypeError):
    """A logical-mode operation was applied to an abstract property space."""


@dataclass(frozen=True)
class PropertySpace:
    """Either an abstract list of named properties or one property per world."""

    size: int
    atoms: AtomTable | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("property count cannot be negative")
        if self.atoms is not None and self.size != self.atoms.world_count():
            raise ValueError("logical property space must have size 2^m")
        if self.names is not None and len(self.names) != self.size:
            raise ValueError("one name per property required")

    @staticmethod
    def abstract(size_or_names: int | Iterable[str]) -> "PropertySpace":
        if isinstance(size_or_names, int):
            return PropertySpace(size_or_names)
        names = tuple(size_or_names)
        return PropertySpace(len(names), names=names)

    @staticmethod
    def logical(atoms: AtomTable) -> "PropertySpace":
        return PropertySpace(atoms.world_count(), atoms=atoms)

    @property
    def is_logical(self) -> bool:
        return self.atoms is not None

    def label(self, i: int) -> str:
        if self.names is not None:
            return self.names[i]
        return f"p{i}"


@dataclass(frozen=True)
class EpistemicState:
    space: PropertySpace
    members: frozenset[int]

    def __post_init__(self) -> None:
        if any(i < 0 or i >= self.space.size for i in self.members):
            raise ValueError("property index out of range")

    @staticmethod
    def of(space: PropertySpace, members: Iterable[int]) -> "EpistemicState":
        return EpistemicState(space, frozenset(members))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def format(self) -> str:
        if not self.members:
            return "{}"
        return "{" + " ".join(self.space.label(i) for i in sorted(self.members)) + "}"


def union_states(s: EpistemicState, t: EpistemicState) -> EpistemicState:
    if s.space != t.space:
        raise SpaceMismatchError("cannot union states over different property spaces")
    return EpistemicState(s.space, s.members | t.members)


def kb_to_state(kb: KnowledgeBase, cap: int = MAX_ATOMS_DEFAULT) -> EpistemicState:
    """State holding one exclusion property per world the KB rules out."""
    space = PropertySpace.logical(kb.atoms)
    satisfied = models(kb, cap=cap)
    excluded = frozenset(range(space.size)) - satisfied
    return EpistemicState(space, excluded)


def state_entails(
    s: EpistemicState, f: Formula, semantics: str = "strict"
) -> bool:
    """True when every world not excluded by ``s`` satisfies ``f``.

    The ``semantics`` tag is accepted for interface symmetry with vector
    decoding; once a state is in hand, member/non-member already is the
    excluded/non-excluded split under either reading.
    """
    if semantics not in ("strict", "weak"):
        raise ValueError(f"unknown semantics: {semantics!r}")
    if s.space.atoms is None:
        raise AbstractSpaceError("entailment needs a logical property space")
    atoms = s.space.atoms
    return all(
        eval_world(f, w, atoms)
        for w in range(s.space.size)
        if w not in s.members
    )


def induced_clauses(s: EpistemicState) -> list[Clause]:
    """One clause per excluded world; their conjunction has exactly the
    non-excluded worlds as models."""
    if s.space.atoms is None:
        raise AbstractSpaceError("clauses need a logical property space")
    return [clause_excluding(w, s.space.atoms) for w in sorted(s.members)]


def state_to_kb(s: EpistemicState) -> KnowledgeBase:
    if s.space.atoms is None:
        raise AbstractSpaceError("clauses need a logical property space")
    return KnowledgeBase(tuple(induced_clauses(s)), s.space.atoms)
