"""Command-line interface.

Subcommands: encode, pool, decode, query, verify, falsify, report, plot.
Exit codes: 0 success (including NOT-ENTAILED answers), 1 when verify or
falsify end with violations or witnesses in hand, 2 for usage and parse
errors, 3 when a vector falls outside the configured domain (or a margin
scorer is asked about an ambiguous vector).

The environment variable EPIPOOL_SEED overrides the default verification
seed; seeds are accepted in decimal, hex, or 0x-prefixed base-36 tags.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .entailment import ClearCutError, IncompatibleScorerError, SCORERS, psi
from .epistemic import PropertySpace, kb_to_state
from .files import NamedVector, dumps_vectors, load_for_space, loads_vectors
from .logic import (
    AtomTable,
    FormulaSyntaxError,
    KBFormatError,
    UnknownAtomError,
    parse_formula,
    parse_kb,
    prime_implicates,
)
from .numeric import IndeterminateSign, RationalParseError, parse_rational
from .pooling import pool_many
from .spaces import (
    REGISTRY,
    DomainError,
    decode,
    encode,
    make_space,
    validate_config,
)
from .svgplot import render_regions
from .verifier import (
    FALSIFY_REGISTRY,
    TrialPlan,
    falsify,
    parse_seed,
    table_report,
    verify_space,
    verify_weighted,
)
from .weighted import WeightedState, decode_weighted, encode_weighted

USAGE_ERROR = 2
DOMAIN_ERROR = 3


class _CliParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep argparse's exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit_(USAGE_ERROR, f"{self.prog}: error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = "") -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _default_seed() -> int:
    env = os.environ.get("EPIPOOL_SEED")
    if env:
        return parse_seed(env)
    from .verifier import DEFAULT_SEED

    return DEFAULT_SEED


def _space_params(args: argparse.Namespace) -> dict:
    params = {}
    if getattr(args, "margin", None) is not None:
        params["margin"] = parse_rational(args.margin)
    if getattr(args, "eps", None) is not None:
        params["eps"] = parse_rational(args.eps)
    if getattr(args, "K", None) is not None:
        params["levels"] = args.K
    return params


def _atoms_for(args: argparse.Namespace, n: int) -> AtomTable:
    if getattr(args, "kb", None):
        kb = parse_kb(Path(args.kb).read_text())
        if kb.atoms.world_count() != n:
            raise SystemExit_(
                USAGE_ERROR,
                f"KB has {len(kb.atoms)} atoms (2^m={kb.atoms.world_count()}), "
                f"vectors have n={n}",
            )
        return kb.atoms
    if getattr(args, "atoms", None):
        names = args.atoms.replace(",", " ").split()
        table = AtomTable.of(names)
        if table.world_count() != n:
            raise SystemExit_(
                USAGE_ERROR, f"{len(table)} atoms imply n={table.world_count()}, got n={n}"
            )
        return table
    m = n.bit_length() - 1
    if 1 << m != n:
        raise SystemExit_(USAGE_ERROR, f"n={n} is not a power of two; pass --atoms or --kb")
    return AtomTable.of(tuple("abcdefghijkl"[:m]))


def _load_space_and_vectors(args: argparse.Namespace):
    text = Path(args.vectors[0]).read_text()
    vf = loads_vectors(text)
    config = make_space(args.space, vf.n, **_space_params(args))
    named: list[NamedVector] = []
    for path in args.vectors:
        body = Path(path).read_text()
        parsed = loads_vectors(body)
        if parsed.space != args.space:
            raise SystemExit_(
                USAGE_ERROR,
                f"{path} was written for space {parsed.space!r}, not {args.space!r}",
            )
        named.extend(load_for_space(body, config))
    return config, named


def _cmd_encode(args: argparse.Namespace) -> int:
    if (args.kb is None) == (args.levels is None):
        raise SystemExit_(USAGE_ERROR, "encode needs exactly one of --kb or --levels")
    if args.kb is not None:
        kb = parse_kb(Path(args.kb).read_text())
        props = PropertySpace.logical(kb.atoms)
        config = make_space(args.space, properties=props, **_space_params(args))
        state = kb_to_state(kb, cap=args.atom_cap)
        v = encode(config, state)
        name = args.name or Path(args.kb).stem
        summary = state.format()
    else:
        levels = tuple(int(part) for part in args.levels.replace(",", " ").split())
        config = make_space(args.space, len(levels), **_space_params(args))
        if config.levels is None:
            raise SystemExit_(
                USAGE_ERROR, f"space {args.space} has no certainty levels; pass --K"
            )
        wstate = WeightedState.of(config.properties, levels, config.levels)
        v = encode_weighted(config, wstate)
        name = args.name or "levels"
        summary = f"levels {wstate.format()} (cap {config.levels})"
    out = dumps_vectors(args.space, [NamedVector(name, v)])
    Path(args.output).write_text(out)
    print(f"encoded {summary} -> {args.output}")
    return 0


def _cmd_pool(args: argparse.Namespace) -> int:
    config, named = _load_space_and_vectors(args)
    pooled = pool_many(config.operator, [v.coords for v in named])
    out = dumps_vectors(args.space, [NamedVector(args.name, pooled)])
    Path(args.output).write_text(out)
    print(f"pooled {len(named)} vectors ({config.operator}) -> {args.output}")
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    config, named = _load_space_and_vectors(args)
    if args.weighted:
        if config.levels is None:
            raise SystemExit_(
                USAGE_ERROR, f"space {args.space} has no certainty levels; pass --K"
            )
        for nv in named:
            wstate = decode_weighted(config, nv.coords)
            print(f"{nv.name}: levels {wstate.format()}")
        return 0
    atoms = _atoms_for(args, config.size) if args.logical else None
    for nv in named:
        state = decode(config, nv.coords)
        if not args.logical or atoms is None:
            print(f"{nv.name}: {state.format()}")
            continue
        bits = " ".join(
            "".join(str(w >> j & 1) for j in range(len(atoms)))
            for w in sorted(state.members)
        )
        print(f"{nv.name}: excluded worlds: {bits or '<none>'}")
        remaining = [w for w in range(config.size) if w not in state.members]
        rows = "; ".join(atoms.describe_world(w) for w in remaining) or "<none>"
        print(f"{nv.name}: worlds remaining: {rows}")
        if args.prime_implicates:
            from .logic import format_clause

            clauses = prime_implicates(frozenset(remaining), atoms)
            shown = ", ".join(format_clause(c, atoms) for c in clauses) or "<none>"
            print(f"{nv.name}: prime implicates: {shown}")
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    text = Path(args.vectors[0]).read_text()
    vf = loads_vectors(text)
    atoms = _atoms_for(args, vf.n)
    props = PropertySpace.logical(atoms)
    config = make_space(args.space, properties=props, **_space_params(args))
    named = []
    for path in args.vectors:
        named.extend(load_for_space(Path(path).read_text(), config))
    formula = parse_formula(args.formula, atoms)
    for nv in named:
        verdict = psi(config, args.scorer, formula, nv.coords)
        print(f"{nv.name}: {'ENTAILED' if verdict else 'NOT-ENTAILED'}")
    return 0


def _plan(args: argparse.Namespace) -> TrialPlan:
    seed = parse_seed(args.seed) if args.seed else _default_seed()
    kwargs = {"seed": seed}
    if getattr(args, "trials", None) is not None:
        kwargs["trials"] = args.trials
    if getattr(args, "dimension", None) is not None:
        kwargs["dimension"] = args.dimension
    return TrialPlan(**kwargs)


def _cmd_verify(args: argparse.Namespace) -> int:
    plan = _plan(args)
    size = 2 if args.space == "example1" else plan.dimension
    config = make_space(args.space, size, **_space_params(args))
    problems = validate_config(config)
    for p in problems:
        print(f"config note [{p.rule}]: {p.message}")
    report = verify_space(config, plan)
    if config.levels is not None:
        weighted = verify_weighted(config, plan)
        report.cells.extend(weighted.cells)
    sys.stdout.write(report.to_text())
    found = any(c.status == "falsified-with-witness" for c in report.cells)
    return 1 if found else 0


def _cmd_falsify(args: argparse.Namespace) -> int:
    plan = _plan(args)
    witness = falsify(args.candidate, plan)
    if witness is None:
        print(f"{args.candidate}: no witness within budget")
        return 0
    from .spaces import format_vector

    vecs = "; ".join(format_vector(v) for v in witness.vectors)
    extra = f" q={list(witness.q)}" if witness.q else ""
    print(
        f"{args.candidate}: witness at {vecs}: property {witness.prop}{extra}: "
        f"expected {witness.expected}, observed {witness.observed}"
    )
    return 1


def _cmd_report(args: argparse.Namespace) -> int:
    plan = _plan(args)
    report = table_report(plan)
    if args.output:
        Path(args.output).write_text(report.to_json())
        sys.stdout.write(report.to_text())
    elif args.text:
        sys.stdout.write(report.to_text())
    else:
        sys.stdout.write(report.to_json())
    return 0 if report.all_as_expected else 1


def _cmd_plot(args: argparse.Namespace) -> int:
    config = make_space(args.space, 2, **_space_params(args))
    hi = parse_rational(args.range)
    svg = render_regions(config, -hi, hi, resolution=args.resolution)
    Path(args.out).write_text(svg)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(
        prog="epipool",
        description="Pool exact-arithmetic epistemic vectors and check the result tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space(p: argparse.ArgumentParser) -> None:
        p.add_argument("--space", required=True, choices=sorted(REGISTRY), metavar="SPACE")
        p.add_argument("--margin", help="separation margin for margin spaces (rational)")
        p.add_argument("--eps", help="near-binary slack for the unit margin space (rational)")
        p.add_argument("--K", type=int, help="certainty level cap for weighted spaces")

    p = sub.add_parser("encode", help="encode a KB file or a weighted level list")
    add_space(p)
    p.add_argument("--kb", help="knowledge-base file to encode")
    p.add_argument("--levels", help="comma-separated certainty levels, e.g. 2,0,1")
    p.add_argument("--atom-cap", type=int, default=12, help="refuse KBs beyond this many atoms")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", help="vector name (default: KB file stem)")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("pool", help="pool all vectors from the given files")
    add_space(p)
    p.add_argument("vectors", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", default="pooled")
    p.set_defaults(func=_cmd_pool)

    p = sub.add_parser("decode", help="print the epistemic state of each vector")
    add_space(p)
    p.add_argument("vectors", nargs="+")
    p.add_argument("--logical", action="store_true", help="print non-excluded worlds")
    p.add_argument("--weighted", action="store_true", help="print certainty levels")
    p.add_argument(
        "--prime-implicates",
        action="store_true",
        help="also print prime implicate clauses (small vocabularies only)",
    )
    p.add_argument("--kb", help="KB file supplying atom names")
    p.add_argument("--atoms", help="comma- or space-separated atom names")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("query", help="ask whether each vector entails a formula")
    add_space(p)
    p.add_argument("vectors", nargs="+")
    p.add_argument("--scorer", required=True, choices=SCORERS)
    p.add_argument("--formula", required=True)
    p.add_argument("--kb", help="KB file supplying atom names")
    p.add_argument("--atoms", help="comma- or space-separated atom names")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("verify", help="sweep one space against its principles")
    add_space(p)
    p.add_argument("--seed")
    p.add_argument("--trials", type=int)
    p.add_argument("--dimension", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("falsify", help="search a doomed candidate for a witness")
    p.add_argument("--candidate", required=True, choices=sorted(FALSIFY_REGISTRY))
    p.add_argument("--seed")
    p.add_argument("--trials", type=int)
    p.set_defaults(func=_cmd_falsify)

    p = sub.add_parser("report", help="machine-check every result-table cell")
    p.add_argument("--seed")
    p.add_argument("--trials", type=int)
    p.add_argument("--dimension", type=int)
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.add_argument("--text", action="store_true", help="human-readable output")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("plot", help="render satisfied regions of a 2-D space as SVG")
    add_space(p)
    p.add_argument("--out", required=True)
    p.add_argument("--range", default="2", help="plot [-R, R]^2 (rational, default 2)")
    p.add_argument("--resolution", type=int, default=400)
    p.set_defaults(func=_cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except (DomainError, ClearCutError, IndeterminateSign) as exc:
        print(f"domain violation: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except (
        RationalParseError,
        FormulaSyntaxError,
        KBFormatError,
        UnknownAtomError,
        IncompatibleScorerError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
