"""Propositional syntax, world enumeration, and a brute-force entailment oracle.

Worlds are integers: with atoms sorted ascending, bit ``j`` of a world index
gives the truth value of atom ``j``.  That canonical indexing is what ties
propositional semantics to vector coordinates elsewhere in the package, so
it is fixed here once and never varied.

Formula grammar (used by :func:`parse_formula` and the CLI)::

    formula := iff
    iff     := imp ('<->' imp)*          # left-associative
    imp     := or ('->' imp)?            # right-associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '!' unary | '(' formula ')' | 'T' | 'F' | atom

Atoms are ASCII identifiers.  ``T`` and ``F`` are reserved for the constants.

KB files (``.kb``) are line-oriented: ``#`` starts a comment, an optional
first directive ``atoms: a b c`` declares the vocabulary, and every other
nonblank line is one clause written as whitespace-separated literals with a
``-`` prefix for negation.  Clauses containing an atom with both polarities
are tautologies and are dropped with a warning; an empty clause is kept and
denotes inconsistency.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

MAX_ATOMS_DEFAULT = 12


class FormulaSyntaxError(ValueError):
    """Formula text does not match the grammar; carries a 1-based column."""

    def __init__(self, message: str, index: int) -> None:
        super().__init__(f"{message} (at position {index + 1})")
        self.position = index + 1


class UnknownAtomError(ValueError):
    """Formula uses an atom absent from the supplied atom table."""


class KBFormatError(ValueError):
    """Malformed knowledge-base file."""


class AtomCapExceeded(ValueError):
    """World enumeration refused: too many atoms."""


class TautologyWarning(UserWarning):
    """A clause contained an atom with both polarities and was dropped."""


@dataclass(frozen=True)
class AtomTable:
    """Ordered vocabulary; names are distinct and sorted ascending."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if list(self.names) != sorted(set(self.names)):
            raise ValueError("atom names must be distinct and sorted ascending")

    @staticmethod
    def of(names: Iterable[str]) -> "AtomTable":
        return AtomTable(tuple(sorted(set(names))))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownAtomError(f"unknown atom: {name!r}") from None

    def world_count(self) -> int:
        return 1 << len(self.names)

    def atom_true(self, world: int, j: int) -> bool:
        return bool(world >> j & 1)

    def describe_world(self, world: int) -> str:
        """Human-readable row like ``a=1 b=0`` in canonical order."""
        return " ".join(
            f"{name}={world >> j & 1}" for j, name in enumerate(self.names)
        )


# --- formula AST -----------------------------------------------------------


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


TOP = Const(True)
BOTTOM = Const(False)


@dataclass(frozen=True)
class Literal:
    atom: int
    positive: bool


Clause = frozenset  # of Literal


@dataclass(frozen=True)
class KnowledgeBase:
    clauses: tuple[Clause, ...]
    atoms: AtomTable


# --- parsing ---------------------------------------------------------------

_TOKEN_SPECS = (
    ("<->", "IFF"),
    ("->", "IMP"),
    ("&", "AND"),
    ("|", "OR"),
    ("!", "NOT"),
    ("(", "LP"),
    (")", "RP"),
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for lit, kind in _TOKEN_SPECS:
            if text.startswith(lit, i):
                tokens.append((kind, lit, i))
                i += len(lit)
                break
        else:
            if c.isalpha() or c == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("IDENT", text[i:j], i))
                i = j
            else:
                raise FormulaSyntaxError(f"unexpected character {c!r}", i)
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise FormulaSyntaxError(f"expected {kind}, found {tok[1] or 'end'!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok[0] != "END":
            raise FormulaSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek()[0] == "IFF":
            self.take("IFF")
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.peek()[0] == "IMP":
            self.take("IMP")
            return Implies(f, self.imp())  # right-associative
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[0] == "OR":
            self.take("OR")
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "AND":
            self.take("AND")
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, pos = self.peek()
        if kind == "NOT":
            self.take("NOT")
            return Not(self.unary())
        if kind == "LP":
            self.take("LP")
            f = self.iff()
            self.take("RP")
            return f
        if kind == "IDENT":
            self.take("IDENT")
            if value == "T":
                return TOP
            if value == "F":
                return BOTTOM
            return Atom(value)
        raise FormulaSyntaxError(f"expected formula, found {value or 'end'!r}", pos)


def parse_formula(text: str, atoms: AtomTable | None = None) -> Formula:
    """Parse a formula; if ``atoms`` is given, unknown atoms are an error."""
    f = _Parser(text).parse()
    if atoms is not None:
        for name in sorted(formula_atoms(f)):
            if name not in atoms:
                raise UnknownAtomError(f"unknown atom: {name!r}")
    return f


def formula_atoms(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Const):
        return set()
    if isinstance(f, Not):
        return formula_atoms(f.arg)
    return formula_atoms(f.left) | formula_atoms(f.right)  # type: ignore[union-attr]


_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6, Const: 6}


def pretty(f: Formula) -> str:
    """Minimal-parenthesis rendering; ``parse_formula(pretty(f)) == f``."""

    def render(g: Formula, parent: int, right_side: bool) -> str:
        prec = _PRECEDENCE[type(g)]
        if isinstance(g, Atom):
            s = g.name
        elif isinstance(g, Const):
            s = "T" if g.value else "F"
        elif isinstance(g, Not):
            s = "!" + render(g.arg, prec, False)
        else:
            op = {And: "&", Or: "|", Implies: "->", Iff: "<->"}[type(g)]
            # '->' chains to the right; the other binary ops chain left.
            if isinstance(g, Implies):
                s = f"{render(g.left, prec + 1, False)} {op} {render(g.right, prec, True)}"
            else:
                s = f"{render(g.left, prec, False)} {op} {render(g.right, prec + 1, True)}"
        if prec < parent or (prec == parent and right_side and not isinstance(g, Implies)):
            return f"({s})"
        return s

    return render(f, 0, False)


def parse_kb(text: str) -> KnowledgeBase:
    """Parse the line-oriented clause format described in the module docstring."""
    declared: list[str] | None = None
    raw_clauses: list[list[tuple[str, bool]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("atoms:"):
            if declared is not None or raw_clauses:
                raise KBFormatError(
                    f"line {lineno}: 'atoms:' directive must be the first statement"
                )
            names = line[len("atoms:"):].split()
            if len(names) != len(set(names)):
                raise KBFormatError(f"line {lineno}: duplicate atom declaration")
            declared = names
            continue
        literals: list[tuple[str, bool]] = []
        for tok in line.split():
            positive = not tok.startswith("-")
            name = tok[1:] if not positive else tok
            if not name or not all(c.isalnum() or c == "_" for c in name) or not (
                name[0].isalpha() or name[0] == "_"
            ):
                raise KBFormatError(f"line {lineno}: malformed literal {tok!r}")
            literals.append((name, positive))
        raw_clauses.append(literals)

    used = {name for clause in raw_clauses for name, _ in clause}
    if declared is not None:
        undeclared = used - set(declared)
        if undeclared:
            raise KBFormatError(f"undeclared atoms used: {sorted(undeclared)}")
        atoms = AtomTable.of(declared)
    else:
        atoms = AtomTable.of(used)

    clauses: list[Clause] = []
    for literals in raw_clauses:
        by_atom: dict[int, set[bool]] = {}
        for name, positive in literals:
            by_atom.setdefault(atoms.index(name), set()).add(positive)
        if any(len(p) == 2 for p in by_atom.values()):
            warnings.warn(
                f"dropping tautological clause: {' '.join(('' if p else '-') + n for n, p in literals)}",
                TautologyWarning,
                stacklevel=2,
            )
            continue
        clauses.append(
            frozenset(Literal(i, p.pop()) for i, p in by_atom.items())
        )
    return KnowledgeBase(tuple(clauses), atoms)


# --- evaluation ------------------------------------------------------------


def eval_world(f: Formula, world: int, atoms: AtomTable) -> bool:
    """Truth of ``f`` under the interpretation encoded by ``world``."""
    if isinstance(f, Atom):
        return atoms.atom_true(world, atoms.index(f.name))
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not eval_world(f.arg, world, atoms)
    if isinstance(f, And):
        return eval_world(f.left, world, atoms) and eval_world(f.right, world, atoms)
    if isinstance(f, Or):
        return eval_world(f.left, world, atoms) or eval_world(f.right, world, atoms)
    if isinstance(f, Implies):
        return (not eval_world(f.left, world, atoms)) or eval_world(f.right, world, atoms)
    if isinstance(f, Iff):
        return eval_world(f.left, world, atoms) == eval_world(f.right, world, atoms)
    raise TypeError(f"not a formula: {f!r}")


def eval_clause(clause: Clause, world: int) -> bool:
    return any(bool(world >> lit.atom & 1) == lit.positive for lit in clause)


def _check_cap(atoms: AtomTable, cap: int) -> None:
    if len(atoms) > cap:
        raise AtomCapExceeded(f"{len(atoms)} atoms exceeds cap {cap}")


def all_worlds(atoms: AtomTable, cap: int = MAX_ATOMS_DEFAULT) -> range:
    _check_cap(atoms, cap)
    return range(atoms.world_count())


def models(
    target: Union[Formula, KnowledgeBase],
    atoms: AtomTable | None = None,
    cap: int = MAX_ATOMS_DEFAULT,
) -> frozenset[int]:
    """Exhaustively enumerate the worlds satisfying a formula or KB."""
    if isinstance(target, KnowledgeBase):
        table = target.atoms
        _check_cap(table, cap)
        return frozenset(
            w
            for w in range(table.world_count())
            if all(eval_clause(c, w) for c in target.clauses)
        )
    if atoms is None:
        atoms = AtomTable.of(formula_atoms(target))
    _check_cap(atoms, cap)
    return frozenset(
        w for w in range(atoms.world_count()) if eval_world(target, w, atoms)
    )


def oracle_entails(
    kb: KnowledgeBase, f: Formula, cap: int = MAX_ATOMS_DEFAULT
) -> bool:
    """Ground-truth entailment: every model of the KB satisfies ``f``."""
    for name in formula_atoms(f):
        if name not in kb.atoms:
            raise UnknownAtomError(f"query atom {name!r} not in KB vocabulary")
    return all(
        eval_world(f, w, kb.atoms) for w in models(kb, cap=cap)
    )


def clause_excluding(world: int, atoms: AtomTable) -> Clause:
    """The unique widest clause false exactly at ``world``."""
    return frozenset(
        Literal(j, not atoms.atom_true(world, j)) for j in range(len(atoms))
    )


def format_clause(clause: Clause, atoms: AtomTable) -> str:
    if not clause:
        return "<empty>"
    lits = sorted(clause, key=lambda l: (l.atom, not l.positive))
    return " ".join(("" if l.positive else "-") + atoms.names[l.atom] for l in lits)


def all_clauses(atoms: AtomTable) -> Iterator[Clause]:
    """Every clause over the vocabulary, the empty clause included."""
    for polarity in itertools.product((None, True, False), repeat=len(atoms)):
        yield frozenset(
            Literal(i, p) for i, p in enumerate(polarity) if p is not None
        )


def prime_implicates(
    remaining_worlds: frozenset[int], atoms: AtomTable, cap: int = 3
) -> list[Clause]:
    """Subset-minimal clauses true in every remaining world (brute force).

    Intended for the CLI's logical decode view; refuses vocabularies larger
    than ``cap`` atoms because the clause lattice grows as 3^m.
    """
    _check_cap(atoms, cap)
    implicates = [
        c
        for c in all_clauses(atoms)
        if all(eval_clause(c, w) for w in remaining_worlds)
    ]
    primes = [
        c
        for c in implicates
        if not any(other < c for other in implicates)
    ]
    return sorted(
        primes,
        key=lambda c: (len(c), sorted((l.atom, not l.positive) for l in c)),
    )
