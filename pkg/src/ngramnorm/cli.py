"""Command-line interface: ``ngramnorm <command> [options]``.

Commands: train, normalize, evaluate, cv, sweep, add-rule, inspect.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from ngramnorm.errors import NormalizerError
from ngramnorm.evaluation import (
    DEFAULT_SWEEP_CUTOFFS,
    cross_validate,
    run_evaluation,
    sweep_cutoff,
    write_sweep_csv,
)
from ngramnorm.pipeline import (
    TrainConfig,
    atomic_write_text,
    explain,
    load_model,
    save_model,
    train,
)
from ngramnorm.preprocessing import read_pairs, read_vocabulary
from ngramnorm.rules import Rule, rule_probability

logger = logging.getLogger("ngramnorm")


def _add_training_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k-max", type=int, default=2, help="longest substring window (1-4)")
    p.add_argument("--mode", choices=["short_key", "literal"], default="short_key", help="rule recording mode")
    p.add_argument("--variant", choices=["v1", "v2"], default="v1")
    p.add_argument("--ranker", choices=["dld", "likelihood"], default="dld")
    p.add_argument("--cutoff", type=int, default=None, help="candidates kept per step (default 100 for dld, 30 for likelihood)")
    p.add_argument("--unbounded", action="store_true", help="disable the candidate cutoff")
    p.add_argument("--dld-variant", choices=["osa", "unrestricted"], default="osa")


def _train_config(args) -> TrainConfig:
    return TrainConfig(
        k_max=args.k_max,
        recording_mode=args.mode,
        variant=args.variant,
        ranker=args.ranker,
        cutoff=args.cutoff,
        unbounded=args.unbounded,
        dld_variant=args.dld_variant,
    )


def _json_dump(data, path) -> None:
    atomic_write_text(path, json.dumps(data, ensure_ascii=False, indent=2) + "\n")


def _load_test_pairs(path):
    pairs, skipped = read_pairs(path)
    for s in skipped:
        print(f"{path}:{s.line_number}: skipped: {s.reason}", file=sys.stderr)
    if not pairs:
        raise NormalizerError(f"{path}: no valid pairs")
    return pairs


def cmd_train(args) -> str:
    model, skipped = train(args.data, args.vocab, _train_config(args))
    for s in skipped:
        print(f"{args.data}:{s.line_number}: skipped: {s.reason}", file=sys.stderr)
    save_model(model, args.out)
    return (
        f"trained on {model.metadata['n_training_pairs']} pairs: {len(model.dictionary)} keys, "
        f"{len(model.dictionary.rules())} rules -> {args.out}"
    )


def cmd_normalize(args) -> str:
    model = load_model(args.model)
    words = [args.word] if args.word is not None else [line.strip() for line in sys.stdin if line.strip()]
    n = 0
    for word in words:
        try:
            suggestions = [text for text, _ in explain(model, word).top(args.top)]
        except NormalizerError as exc:
            print(f"{word!r}: {exc}", file=sys.stderr)
            continue
        print("\t".join([word, *suggestions]))
        n += 1
    return f"normalized {n} word(s)"


def cmd_evaluate(args) -> str:
    model = load_model(args.model)
    pairs = _load_test_pairs(args.data)
    result = run_evaluation(model, pairs, ks=(1, 3, args.top) if args.top > 3 else (1, args.top))
    report = result.report
    if args.report:
        _json_dump(report.to_dict(), args.report)
    if args.predictions:
        atomic_write_text(args.predictions, result.predictions_tsv())
    accs = " ".join(f"acc@{k}={v:.3f}" for k, v in sorted(report.accuracy_at.items()))
    return (
        f"{report.n_examples} examples: {accs} dld min/mean/max="
        f"{report.dld_min:.2f}/{report.dld_mean:.2f}/{report.dld_max:.2f} "
        f"{report.mean_inference_seconds:.4f}s/word"
    )


def cmd_cv(args) -> str:
    pairs = _load_test_pairs(args.data)
    vocab = read_vocabulary(args.vocab) if args.vocab else None
    report = cross_validate(pairs, args.folds, args.seed, _train_config(args), vocab)
    if args.report:
        _json_dump(report.to_dict(include_timing=not args.no_timing), args.report)
    row = report.table_row()
    return f"{args.folds}-fold cv (seed {args.seed}): " + " ".join(f"{k}={v}" for k, v in row.items() if k != "seconds_per_word")


def cmd_sweep(args) -> str:
    pairs = _load_test_pairs(args.data)
    test = _load_test_pairs(args.test) if args.test else None
    vocab = read_vocabulary(args.vocab) if args.vocab else None
    cutoffs = [int(c) for c in args.cutoffs.split(",")]
    rows = sweep_cutoff(pairs, cutoffs, _train_config(args), test, vocab)
    if args.out:
        write_sweep_csv(rows, args.out)
    else:
        for row in rows:
            print(f"{row.cutoff}\t{row.accuracy_at_1:.3f}\t{row.mean_inference_seconds:.6f}\t{row.mean_candidates:.1f}")
    return f"swept {len(rows)} cutoffs" + (f" -> {args.out}" if args.out else "")


def cmd_add_rule(args) -> str:
    model = load_model(args.model)
    model = model.with_rule(Rule(args.wrong.lower(), args.right.lower()), args.count)
    out = args.out or args.model
    save_model(model, out)
    return f"added {args.wrong}->{args.right} (x{args.count}) -> {out}"


def cmd_inspect(args) -> str:
    model = load_model(args.model)
    d = model.dictionary
    keys = [args.key] if args.key else list(d)
    for key in keys:
        if key not in d:
            raise NormalizerError(f"no rules for key {key!r}")
        for right, count in d.replacements(key).items():
            print(f"{key}\t{right}\t{count}\t{rule_probability(d, Rule(key, right)):.4f}")
    return f"{len(keys)} key(s), k_max={d.k_max}, mode={d.recording_mode.value}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ngramnorm", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="build a model from a pairs TSV")
    p.add_argument("--data", required=True, help="wrong<TAB>correct pairs file")
    p.add_argument("--vocab", help="vocabulary file, one word per line")
    p.add_argument("--out", required=True, help="model JSON to write")
    _add_training_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("normalize", help="suggest corrections (reads stdin without --word)")
    p.add_argument("--model", required=True)
    p.add_argument("--word")
    p.add_argument("--top", type=int, default=5)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("evaluate", help="score a model on a pairs TSV")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--predictions", help="write input<TAB>cand1..candN TSV here")
    p.add_argument("--top", type=int, default=5)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("cv", help="k-fold cross-validation")
    p.add_argument("--data", required=True)
    p.add_argument("--vocab")
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from the report")
    _add_training_flags(p)
    p.set_defaults(func=cmd_cv)

    p = sub.add_parser("sweep", help="accuracy@1 and runtime per candidate cutoff")
    p.add_argument("--data", required=True, help="training pairs")
    p.add_argument("--test", help="test pairs (default: training pairs)")
    p.add_argument("--vocab")
    p.add_argument("--cutoffs", default=",".join(map(str, DEFAULT_SWEEP_CUTOFFS)))
    p.add_argument("--out", help="CSV to write")
    _add_training_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("add-rule", help="add a rewrite rule to a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--wrong", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="defaults to overwriting --model")
    p.set_defaults(func=cmd_add_rule)

    p = sub.add_parser("inspect", help="list rules with counts and probabilities")
    p.add_argument("--model", required=True)
    p.add_argument("--key")
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        summary = args.func(args)
    except (NormalizerError, OSError) as exc:
        print(f"ngramnorm {args.command}: error: {exc}", file=sys.stderr)
        return 1
    print(summary, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
