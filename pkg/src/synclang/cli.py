"""Command-line front end for the synchronization toolkit.

Subcommands map onto the library surface: ``validate`` and ``classify``
inspect automata, ``sync`` and ``constrained`` decide synchronization
questions, ``gen`` writes family fixtures, ``dot`` exports diagrams, and
``report`` runs the desk-scale experiment battery into CSV files plus
rendered figures.

Exit codes: 0 the question was answered (yes or no), 2 usage error,
3 search budget exceeded, 4 invalid input file.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .automata import (
    AutomatonFormatError,
    Dcsa,
    Pdfa,
    parse_automaton,
    scc_decompose,
    serialize,
    to_dot,
)
from .commutative import constrained_sync_commutative, is_commutative, is_weakly_acyclic
from .families import (
    GenerationError,
    case2_automaton,
    cerny,
    random_commutative,
    random_simple_idempotents,
    sink_cycle_automaton,
)
from .idempotent import (
    Case1,
    Case2,
    classify_letters,
    decide_constrained,
    structure_classify,
)
from .regexes import RegexSyntaxError, UnknownRegexSymbol, compile, parse_regex
from .search import (
    BudgetExceededError,
    SearchBudget,
    constrained_sync_oracle,
    is_synchronizing,
    shortest_sync_word,
)

EXIT_ANSWERED = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_BAD_INPUT = 4


class _UsageError(Exception):
    pass


def _load_dcsa(path: str) -> Dcsa:
    try:
        aut = parse_automaton(Path(path).read_text())
    except OSError as exc:
        raise AutomatonFormatError(f"{path}: {exc}") from exc
    except AutomatonFormatError as exc:
        raise AutomatonFormatError(f"{path}: {exc}") from exc
    if not isinstance(aut, Dcsa):
        raise AutomatonFormatError(
            f"{path}: expected a complete automaton without initial/final lines"
        )
    return aut


def _load_constraint(path: str) -> Pdfa:
    try:
        aut = parse_automaton(Path(path).read_text())
    except OSError as exc:
        raise AutomatonFormatError(f"{path}: {exc}") from exc
    except AutomatonFormatError as exc:
        raise AutomatonFormatError(f"{path}: {exc}") from exc
    if not isinstance(aut, Pdfa):
        raise AutomatonFormatError(
            f"{path}: a constraint automaton needs initial/final lines"
        )
    return aut


def _emit(pairs: list[tuple[str, str]], machine: bool, prefix: str = "") -> None:
    if machine:
        for key, value in pairs:
            print(f"{key}={value}")
    else:
        print(prefix + " ".join(f"{key}={value}" for key, value in pairs))


def _budget(args) -> SearchBudget:
    if args.budget is None:
        return SearchBudget()
    return SearchBudget(max_subsets=args.budget)


def _cmd_validate(args) -> int:
    try:
        aut = parse_automaton(Path(args.input).read_text())
    except (OSError, AutomatonFormatError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    pairs = [
        ("kind", "pdfa" if isinstance(aut, Pdfa) else "dcsa"),
        ("states", str(aut.n_states)),
        ("letters", str(aut.n_letters)),
    ]
    if isinstance(aut, Pdfa):
        pairs.append(("initial", str(aut.start)))
        pairs.append(("final", " ".join(str(f) for f in sorted(aut.finals))))
    _emit(pairs, args.machine)
    return EXIT_ANSWERED


def _sync_one(path: str, args) -> list[tuple[str, str]]:
    aut = _load_dcsa(path)
    if args.shortest:
        word = shortest_sync_word(aut, _budget(args))
        if word is None:
            return [("answer", "no")]
        return [
            ("answer", "yes"),
            ("length", str(len(word))),
            ("witness", aut.alphabet.text(word)),
        ]
    report = is_synchronizing(aut)
    if not report.synchronizing:
        return [("answer", "no")]
    return [
        ("answer", "yes"),
        ("length", str(len(report.witness))),
        ("witness", aut.alphabet.text(report.witness)),
    ]


def _route_method(aut: Dcsa, constraint: Pdfa, method: str) -> str:
    if method != "auto":
        return method
    if is_commutative(aut):
        return "commutative"
    if (
        aut.n_letters == 2
        and classify_letters(aut).all_structured
        and constraint.n_states <= 3
    ):
        return "simple-idempotent"
    return "oracle"


def _constrained_one(path: str, args) -> list[tuple[str, str]]:
    aut = _load_dcsa(path)
    if args.regex is not None:
        try:
            constraint = compile(parse_regex(args.regex), aut.alphabet)
        except (RegexSyntaxError, UnknownRegexSymbol) as exc:
            raise _UsageError(str(exc)) from exc
    else:
        constraint = _load_constraint(args.constraint)
        if constraint.alphabet.symbols != aut.alphabet.symbols:
            raise _UsageError(
                "constraint alphabet "
                f"{''.join(constraint.alphabet.symbols)!r} does not match input "
                f"alphabet {''.join(aut.alphabet.symbols)!r}"
            )
    method = _route_method(aut, constraint, args.method)
    try:
        if method == "commutative":
            word = constrained_sync_commutative(aut, constraint)
        elif method == "simple-idempotent":
            word = decide_constrained(aut, constraint, _budget(args))
        else:
            word = constrained_sync_oracle(aut, constraint, _budget(args))
    except (ValueError, AutomatonFormatError) as exc:
        if isinstance(exc, BudgetExceededError):
            raise
        raise _UsageError(str(exc)) from exc
    if word is None:
        return [("answer", "no"), ("method", method)]
    return [
        ("answer", "yes"),
        ("length", str(len(word))),
        ("witness", aut.alphabet.text(word)),
        ("method", method),
    ]


def _run_batch(paths: list[str], args, worker) -> int:
    results: list[tuple[str, list[tuple[str, str]] | None, int, str]] = []

    def run(path: str):
        try:
            return path, worker(path, args), EXIT_ANSWERED, ""
        except AutomatonFormatError as exc:
            return path, None, EXIT_BAD_INPUT, str(exc)
        except BudgetExceededError as exc:
            return path, None, EXIT_BUDGET, str(exc)
        except _UsageError as exc:
            return path, None, EXIT_USAGE, str(exc)

    if args.jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, paths))
    else:
        results = [run(path) for path in paths]

    status = EXIT_ANSWERED
    for path, pairs, code, message in results:
        if pairs is None:
            print(f"error: {message}", file=sys.stderr)
            if status == EXIT_ANSWERED:
                status = code
            continue
        if len(paths) > 1:
            if args.machine:
                print(f"file={path}")
            _emit(pairs, args.machine, prefix=f"{path}: ")
        else:
            _emit(pairs, args.machine)
    return status


def _cmd_sync(args) -> int:
    return _run_batch(args.inputs, args, _sync_one)


def _cmd_constrained(args) -> int:
    return _run_batch(args.inputs, args, _constrained_one)


def _cmd_classify(args) -> int:
    try:
        aut = _load_dcsa(args.input)
    except AutomatonFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    letters = classify_letters(aut)
    pairs = [
        ("letters", " ".join(
            f"{sym}:{tag}" for sym, tag in zip(aut.alphabet, letters.tags)
        )),
        ("commutative", "yes" if is_commutative(aut) else "no"),
        ("weakly_acyclic", "yes" if is_weakly_acyclic(aut) else "no"),
    ]
    if aut.n_letters == 2 and aut.n_states > 3 and letters.all_structured:
        form = structure_classify(aut)
        if isinstance(form, Case1):
            pairs.append(("structure", "case1"))
            pairs.append(("sink", str(form.sink)))
            pairs.append(("pre_sink", str(form.pre_sink)))
        elif isinstance(form, Case2):
            pairs.append(("structure", "case2"))
            pairs.append(("merged", str(form.merged)))
            pairs.append(("target", str(form.target)))
            pairs.append(("cycle_steps", str(form.cycle_steps)))
        else:
            pairs.append(("structure", "none"))
    else:
        pairs.append(("structure", "unavailable"))
    _emit(pairs, args.machine)
    return EXIT_ANSWERED


def _cmd_gen(args) -> int:
    try:
        if args.family == "cerny":
            aut = cerny(args.n)
        elif args.family == "sink-cycle":
            aut = sink_cycle_automaton(args.n)
        elif args.family == "case2":
            if args.p is None:
                raise _UsageError("--family case2 requires --p")
            aut = case2_automaton(args.n, args.p)
        elif args.family == "random-commutative":
            aut = random_commutative(args.n, args.k, args.seed)
        else:
            aut = random_simple_idempotents(args.n, args.seed)
    except (_UsageError, ValueError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = serialize(aut)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    return EXIT_ANSWERED


def _cmd_dot(args) -> int:
    try:
        aut = parse_automaton(Path(args.input).read_text())
    except (OSError, AutomatonFormatError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    text = to_dot(aut)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    return EXIT_ANSWERED


def _report_cerny(out_dir: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = []
    for n in range(2, 9):
        word = shortest_sync_word(cerny(n))
        rows.append((n, len(word), (n - 1) ** 2))
    csv_path = out_dir / "cerny_lengths.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "shortest_length", "square_bound"])
        writer.writerows(rows)
    print(f"wrote {csv_path}")

    ns = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    ax.plot(ns, [r[1] for r in rows], "o-", label="shortest reset word")
    ax.plot(ns, [r[2] for r in rows], "s--", label="(n-1)^2")
    ax.set_xlabel("states n")
    ax.set_ylabel("length")
    ax.set_title("cerny(n) shortest reset lengths")
    ax.legend()
    fig.tight_layout()
    png_path = out_dir / "cerny_lengths.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    print(f"wrote {png_path}")


_TABLE_ROWS = [
    "b(a+bb)*", "b(aa*b)*", "b(a+ba)*", "b(ab*a)*", "b(b+ab)*", "b(ba*b)*",
    "b(b+aa)*", "b(bb*a)*", "b((a+b)a)*", "b(a(a+b))*", "b((a+b)b)*",
    "b(b(a+b))*",
]


def _report_table(out_dir: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    ns = list(range(5, 11))
    grid = np.zeros((len(_TABLE_ROWS), len(ns)), dtype=int)
    csv_path = out_dir / "table_decisions.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["constraint", "n", "answer", "witness_length"])
        for i, rx in enumerate(_TABLE_ROWS):
            for j, n in enumerate(ns):
                aut = sink_cycle_automaton(n)
                constraint = compile(parse_regex(rx), aut.alphabet)
                word = decide_constrained(aut, constraint)
                grid[i, j] = int(word is not None)
                writer.writerow([
                    rx, n,
                    "yes" if word is not None else "no",
                    "" if word is None else len(word),
                ])
    print(f"wrote {csv_path}")

    fig, ax = plt.subplots(figsize=(5.2, 4.6))
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(len(ns)), [str(n) for n in ns])
    ax.set_yticks(range(len(_TABLE_ROWS)), _TABLE_ROWS, fontsize=7)
    ax.set_xlabel("states n (sink-cycle family)")
    ax.set_title("constrained decisions per table row")
    fig.tight_layout()
    png_path = out_dir / "table_decisions.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    print(f"wrote {png_path}")


def _report_remark_language(out_dir: Path) -> None:
    rx = "(bbba)*bb(bbba)*bb(bbba)*"
    csv_path = out_dir / "remark_language.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "answer", "witness_length"])
        for n in range(5, 10):
            aut = sink_cycle_automaton(n)
            constraint = compile(parse_regex(rx), aut.alphabet)
            word = constrained_sync_oracle(aut, constraint)
            writer.writerow([
                n,
                "yes" if word is not None else "no",
                "" if word is None else len(word),
            ])
            print(
                f"remark_language n={n} "
                + ("answer=yes length=" + str(len(word)) if word is not None
                   else "answer=no")
            )
    print(f"wrote {csv_path}")


def _cmd_report(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    _report_cerny(out_dir)
    _report_table(out_dir)
    _report_remark_language(out_dir)
    return EXIT_ANSWERED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synclang",
        description="Decide synchronization questions about finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="parse a .aut file and describe it")
    p_validate.add_argument("input")
    p_validate.add_argument("--machine", action="store_true")
    p_validate.set_defaults(func=_cmd_validate)

    p_sync = sub.add_parser("sync", help="decide synchronizability")
    p_sync.add_argument("inputs", nargs="+")
    p_sync.add_argument("--shortest", action="store_true",
                        help="exact shortest reset word via subset search")
    p_sync.add_argument("--budget", type=int, default=None)
    p_sync.add_argument("--machine", action="store_true")
    p_sync.add_argument("--jobs", type=int, default=1)
    p_sync.set_defaults(func=_cmd_sync)

    p_con = sub.add_parser("constrained",
                           help="decide constrained synchronization")
    p_con.add_argument("inputs", nargs="+")
    source = p_con.add_mutually_exclusive_group(required=True)
    source.add_argument("--regex", default=None,
                        help="constraint as a regular expression over + * ( )")
    source.add_argument("--constraint", default=None,
                        help="constraint as a .aut file with initial/final")
    p_con.add_argument("--method", default="auto",
                       choices=["auto", "commutative", "simple-idempotent",
                                "oracle"])
    p_con.add_argument("--budget", type=int, default=None)
    p_con.add_argument("--machine", action="store_true")
    p_con.add_argument("--jobs", type=int, default=1)
    p_con.set_defaults(func=_cmd_constrained)

    p_cls = sub.add_parser("classify",
                           help="letter classes, structure form, commutativity")
    p_cls.add_argument("input")
    p_cls.add_argument("--machine", action="store_true")
    p_cls.set_defaults(func=_cmd_classify)

    p_gen = sub.add_parser("gen", help="generate a family fixture")
    p_gen.add_argument("--family", required=True,
                       choices=["cerny", "sink-cycle", "case2",
                                "random-commutative",
                                "random-simple-idempotent"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=int, default=None)
    p_gen.add_argument("--k", type=int, default=2)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_dot = sub.add_parser("dot", help="emit Graphviz DOT")
    p_dot.add_argument("input")
    p_dot.add_argument("-o", "--output", default=None)
    p_dot.set_defaults(func=_cmd_dot)

    p_rep = sub.add_parser("report",
                           help="run the experiment battery into CSV + PNG")
    p_rep.add_argument("--out-dir", default="report")
    p_rep.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AutomatonFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
