"""Batch command-line surface: one verb per pipeline stage.

Inputs are automaton text files (see textfmt) or `--regex` strings, which
stand for the minimal quotient DFA of the denoted language. Results go to
stdout or `--out`; report verbs emit tab-delimited records with `#`
comment lines, and `--fig` additionally renders a figure. Exit status: 0
on success, 1 on domain errors (empty language, blowup bounds, trim or
minimality preconditions), 2 on usage or parse errors. `equiv` exits 0 or
1 by verdict; `verify-duality` exits 1 when any corpus instance
disagrees, which would indicate a library defect.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .automata import (
    Alphabet,
    Dfa,
    Nfa,
    _subset_text,
    as_nfa,
    determinize,
    equivalent,
    format_word,
    is_bideterministic,
    minimize,
    reverse,
    shortest_accepted,
    shortest_distinguishing,
    trim,
    try_as_dfa,
)
from .atoms import (
    atom_recognizer,
    atomaton_direct,
    atomaton_reverse_route,
    compute_atoms,
)
from .brzozowski import brzozowski_minimize, check_duality
from .classify import build_universal, is_atomic, is_residual
from .dot import export_dot
from .equations import render, to_equations
from .errors import AtomataError, SyntaxPosError
from .regex import infer_alphabet, parse_regex, quotient_dfa
from .testkit import GenParams, random_dfa, random_minimal_dfa, random_nfa
from .textfmt import format_automaton, parse_automaton

_YES = {True: "yes", False: "no"}


def _add_input(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("input", nargs="?", help="automaton text file")
    sp.add_argument("--regex", help="regular expression instead of a file")
    sp.add_argument(
        "--alphabet",
        help="alphabet for --regex as a string of symbols (default: inferred)",
    )


def _add_out(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--out", help="write output here instead of stdout")


def _add_fig(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--fig", help="also render a figure to this image file")


def _load(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Nfa:
    has_file = args.input is not None
    has_regex = args.regex is not None
    if has_file == has_regex:
        parser.error("give exactly one input: a file or --regex")
    if has_file:
        try:
            with open(args.input, encoding="utf-8") as fh:
                return parse_automaton(fh.read())
        except OSError as e:
            parser.error(f"cannot read {args.input}: {e.strerror}")
    if args.alphabet is not None:
        try:
            alphabet = Alphabet.of(args.alphabet)
        except ValueError as e:
            parser.error(str(e))
    else:
        alphabet = infer_alphabet(args.regex)
    r = parse_regex(args.regex, alphabet)
    return as_nfa(quotient_dfa(r, alphabet))


def _as_dfa(n: Nfa) -> Dfa:
    # already-deterministic inputs keep their labels instead of gaining
    # singleton subset labels from a redundant subset construction
    d = try_as_dfa(n)
    if d is not None:
        return d
    return determinize(n)


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fig(args: argparse.Namespace, m, title: str) -> None:
    if getattr(args, "fig", None):
        from .figures import draw_automaton

        draw_automaton(m, args.fig, title)


# ------------------------------------------------------------------ handlers

def _run_determinize(args, parser) -> int:
    d = determinize(_load(args, parser))
    _emit(args, format_automaton(d))
    _fig(args, d, "determinized")
    return 0


def _run_minimize(args, parser) -> int:
    n = _load(args, parser)
    if args.algo == "brzozowski":
        m = brzozowski_minimize(n)
    else:
        m = minimize(_as_dfa(n))
    _emit(args, format_automaton(m))
    _fig(args, m, "minimal")
    return 0


def _run_reverse(args, parser) -> int:
    r = reverse(_load(args, parser))
    _emit(args, format_automaton(r))
    _fig(args, r, "reversed")
    return 0


def _run_trim(args, parser) -> int:
    t = trim(_load(args, parser))
    _emit(args, format_automaton(t))
    _fig(args, t, "trim")
    return 0


def _run_atoms(args, parser) -> int:
    d = _as_dfa(_load(args, parser))
    aset = compute_atoms(d)
    lines = ["# index\tsignature\tinitial\tfinal\twitness"]
    for i in range(len(aset)):
        sig = _subset_text(aset.atoms[i].states, aset.base.labels)
        w = shortest_accepted(atom_recognizer(aset, i))
        assert w is not None
        lines.append(
            "\t".join(
                (
                    str(i),
                    sig,
                    "initial" if i in aset.initial_indices else "-",
                    "final" if i == aset.final_index else "-",
                    format_word(d.alphabet, w),
                )
            )
        )
    _emit(args, "\n".join(lines))
    if args.fig:
        _fig(args, atomaton_direct(d).nfa, "atomaton")
    return 0


def _run_atomaton(args, parser) -> int:
    n = _load(args, parser)
    if args.method == "direct":
        atm = atomaton_direct(_as_dfa(n))
    else:
        atm = atomaton_reverse_route(n)
    _emit(args, format_automaton(atm.nfa))
    _fig(args, atm.nfa, "atomaton")
    return 0


def _run_universal(args, parser) -> int:
    u = build_universal(minimize(_as_dfa(_load(args, parser))))
    _emit(args, format_automaton(u))
    _fig(args, u, "universal")
    return 0


def _run_check(args, parser) -> int:
    if not (args.atomic or args.residual or args.bidet):
        parser.error("choose at least one of --atomic, --residual, --bidet")
    nn = _load(args, parser)
    if args.trim_first:
        nn = trim(nn)
    lines: list[str] = []
    if args.atomic:
        report = is_atomic(nn)
        lines.append("# state\tverdict\tdetail")
        for sa in report.per_state:
            if sa.is_union:
                detail = ",".join(map(str, sa.atom_indices)) or "-"
                lines.append(f"{nn.label_of(sa.state)}\tatomic\t{detail}")
            else:
                word = format_word(nn.alphabet, sa.counterexample)
                lines.append(f"{nn.label_of(sa.state)}\tnot-atomic\t{word}")
        lines.append(f"# atomic: {_YES[report.atomic]}")
    if args.residual:
        report = is_residual(nn)
        lines.append("# state\tverdict\tdetail")
        for sr in report.per_state:
            if sr.matched:
                word = format_word(nn.alphabet, sr.witness)
                lines.append(f"{nn.label_of(sr.state)}\tresidual\t{word}")
            else:
                lines.append(f"{nn.label_of(sr.state)}\tnot-residual\t-")
        lines.append(f"# residual: {_YES[report.residual]}")
    if args.bidet:
        lines.append(f"# bideterministic: {_YES[is_bideterministic(nn)]}")
    _emit(args, "\n".join(lines))
    return 0


def _run_equations(args, parser) -> int:
    _emit(args, render(to_equations(_load(args, parser))))
    return 0


def _run_equiv(args, parser) -> int:
    def load_one(path: str) -> Nfa:
        try:
            with open(path, encoding="utf-8") as fh:
                return parse_automaton(fh.read())
        except OSError as e:
            parser.error(f"cannot read {path}: {e.strerror}")

    a, b = load_one(args.first), load_one(args.second)
    if equivalent(a, b):
        _emit(args, "equivalent")
        return 0
    w = shortest_distinguishing(a, b)
    assert w is not None
    _emit(args, f"not equivalent\t{format_word(a.alphabet, w)}")
    return 1


def _corpus_params(args) -> GenParams:
    return GenParams(
        min_states=1,
        max_states=args.states,
        alphabet_size=args.alphabet_size,
        seed=args.seed,
    )


def _run_verify_duality(args, parser) -> int:
    base = _corpus_params(args)
    rows = []
    lines = ["# seed\tnfa\tdet\tmin\tdet_minimal\trev_atomic\tagree"]
    agreed = 0
    for i in range(args.count):
        seed = args.seed + i
        n = trim(random_nfa(GenParams(
            min_states=base.min_states,
            max_states=base.max_states,
            alphabet_size=base.alphabet_size,
            seed=seed,
        )))
        v = check_duality(n)
        mn = minimize(v.nd).state_count
        rows.append(
            (seed, n.state_count, v.nd.state_count, mn,
             v.nd_minimal, v.nr_atomic, v.agree)
        )
        agreed += v.agree
        lines.append(
            "\t".join(
                (
                    str(seed),
                    str(n.state_count),
                    str(v.nd.state_count),
                    str(mn),
                    _YES[v.nd_minimal],
                    _YES[v.nr_atomic],
                    _YES[v.agree],
                )
            )
        )
    lines.append(f"# agree: {agreed}/{args.count}")
    _emit(args, "\n".join(lines))
    if args.fig:
        from .figures import duality_scatter

        duality_scatter(rows, args.fig)
    return 0 if agreed == args.count else 1


def _run_random(args, parser) -> int:
    os.makedirs(args.dir, exist_ok=True)
    make = {
        "nfa": random_nfa,
        "dfa": random_dfa,
        "minimal": random_minimal_dfa,
    }[args.kind]
    lines = []
    for i in range(args.count):
        seed = args.seed + i
        p = GenParams(
            min_states=1,
            max_states=args.states,
            alphabet_size=args.alphabet_size,
            seed=seed,
        )
        m = make(p)
        path = os.path.join(args.dir, f"{args.kind}-{seed}.aut")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_automaton(m))
        params = (
            f"states=1..{args.states},alphabet={args.alphabet_size},"
            f"density={p.density},initial_p={p.initial_p},final_p={p.final_p},"
            f"kind={args.kind}"
        )
        lines.append(f"{seed}\t{params}\t{path}")
    _emit(args, "\n".join(lines))
    return 0


def _run_dot(args, parser) -> int:
    _emit(args, export_dot(_load(args, parser)))
    return 0


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atomata",
        description="Atoms, atomatons, classifiers, and duality checks "
        "for regular languages.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, help_: str, *, fig: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        _add_input(sp)
        _add_out(sp)
        if fig:
            _add_fig(sp)
        return sp

    verb("determinize", "subset construction; keeps a reachable empty subset")
    sp = verb("minimize", "minimal complete DFA of the input's language")
    sp.add_argument("--algo", choices=("refine", "brzozowski"), default="refine")
    verb("reverse", "transition-reversed NFA with initial/final swapped")
    verb("trim", "drop states that are unreachable or lead nowhere useful")
    verb("atoms", "atom report: one line per atom of the language")
    sp = verb("atomaton", "NFA whose states are the atoms of the language")
    sp.add_argument("--method", choices=("direct", "reverse"), default="direct")
    verb("universal", "universal automaton built from the factorizations")

    sp = sub.add_parser("check", help="classify the input automaton's states")
    _add_input(sp)
    _add_out(sp)
    sp.add_argument("--atomic", action="store_true",
                    help="is every right language a union of atoms")
    sp.add_argument("--residual", action="store_true",
                    help="is every right language a quotient of the language")
    sp.add_argument("--bidet", action="store_true",
                    help="is the automaton bideterministic (needs trim input)")
    sp.add_argument("--trim-first", action="store_true",
                    help="trim the input before checking")

    sp = sub.add_parser("equations", help="language equation system of the input")
    _add_input(sp)
    _add_out(sp)

    sp = sub.add_parser("equiv", help="exit 0 iff the two files accept the same language")
    sp.add_argument("first")
    sp.add_argument("second")
    _add_out(sp)

    sp = sub.add_parser(
        "verify-duality",
        help="random corpus: determinization minimal iff reverse atomic",
    )
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--states", type=int, default=6, help="maximum state count")
    sp.add_argument("--alphabet-size", type=int, default=2)
    _add_out(sp)
    _add_fig(sp)

    sp = sub.add_parser("random", help="write a reproducible corpus plus manifest")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--states", type=int, default=6, help="maximum state count")
    sp.add_argument("--alphabet-size", type=int, default=2)
    sp.add_argument("--kind", choices=("nfa", "dfa", "minimal"), default="nfa")
    sp.add_argument("--dir", default="corpus", help="directory for the instances")
    _add_out(sp)

    sp = sub.add_parser("dot", help="Graphviz DOT rendering of the input")
    _add_input(sp)
    _add_out(sp)

    return parser


_HANDLERS = {
    "determinize": _run_determinize,
    "minimize": _run_minimize,
    "reverse": _run_reverse,
    "trim": _run_trim,
    "atoms": _run_atoms,
    "atomaton": _run_atomaton,
    "universal": _run_universal,
    "check": _run_check,
    "equations": _run_equations,
    "equiv": _run_equiv,
    "verify-duality": _run_verify_duality,
    "random": _run_random,
    "dot": _run_dot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _HANDLERS[args.verb](args, parser)
    except SystemExit as e:
        return int(e.code or 0)
    except SyntaxPosError as e:
        print(f"atomata: parse error: {e}", file=sys.stderr)
        return 2
    except AtomataError as e:
        print(f"atomata: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
