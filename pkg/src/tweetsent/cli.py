"""Command-line interface: ``tweetsent run`` plus one subcommand per stage.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 I/O error.
Errors are reported on stderr as one line: ``error: <CODE>: <message>``.
"""

import argparse
import json
import os
import sys

from . import pipeline
from .errors import ConfigError, IoError, TweetSentError
from .pipeline import RunConfig


def _optional_int(value):
    return None if value.lower() in ("none", "null", "") else int(value)


def _models(value):
    return tuple(m.strip() for m in value.split(",") if m.strip())


def _add_common(p):
    p.add_argument("--config", help="JSON config file (same keys as the flags; flags win)")
    p.add_argument("--out", dest="out_dir", help="working/output directory (default: out)")
    p.add_argument("--input", help="raw tweet CSV (UTF-8, header row)")
    p.add_argument("--text-column", dest="text_column", help="name of the tweet column (default: text)")
    p.add_argument("--stopwords", help="stopword list, one word per line (default: bundled)")
    p.add_argument("--lexicon", help="lexicon TSV word/polarity/subjectivity (default: bundled)")
    p.add_argument("--negators", help="negator list, one word per line (default: bundled)")
    p.add_argument("--fraction", type=float, help="training fraction of the split (default: 0.8)")
    p.add_argument("--seed", type=int, help="seed for the split and SVM sweeps (default: 42)")
    p.add_argument("--models", type=_models, help="comma list from nb,svc,dt (default: all)")
    p.add_argument("--alpha", type=float, help="naive Bayes smoothing (default: 1.0)")
    p.add_argument("-C", dest="C", type=float, help="SVM penalty (default: 1.0)")
    p.add_argument("--tol", type=float, help="SVM stopping tolerance (default: 1e-4)")
    p.add_argument("--max-sweeps", dest="max_sweeps", type=int, help="SVM sweep cap (default: 1000)")
    p.add_argument("--max-depth", dest="max_depth", type=_optional_int, help="tree depth cap (default: none)")
    p.add_argument("--min-samples-split", dest="min_samples_split", type=int,
                   help="smallest node the tree may split (default: 2)")
    p.add_argument("--min-df", dest="min_df", type=int, help="minimum document frequency (default: 1)")
    p.add_argument("--max-features", dest="max_features", type=_optional_int,
                   help="vocabulary size cap (default: none)")
    p.add_argument("--paper-order", dest="paper_order", action="store_const", const=True,
                   help="fit the vocabulary on all documents before splitting")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tweetsent",
        description="Lexicon-labelled tweet sentiment: clean, preprocess, label, "
                    "vectorize, train NB/SVC/DT and report.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "run": "run every stage end to end",
        "clean": "load the input CSV, drop blank and duplicate tweets -> clean.csv",
        "prep": "normalize, tokenize, remove stopwords, stem -> tokens.jsonl",
        "label": "lexicon polarity/subjectivity and labels -> labels.jsonl",
        "split": "stratified train/test split -> split.json",
        "vectorize": "fit vocabulary, count matrix -> vocabulary.txt, matrix.jsonl",
        "train": "train one model -> model_<name>.json",
        "evaluate": "score the test split -> evaluation.json",
        "report": "write report.json and SVG figures",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text, argument_default=argparse.SUPPRESS)
        _add_common(p)
        if name == "train":
            p.add_argument("--model", required=True, choices=sorted(pipeline.MODEL_TYPES),
                           help="which classifier to train")
    return parser


def resolve_config(args):
    values = {}
    cfg_path = getattr(args, "config", None)
    if cfg_path:
        try:
            with open(cfg_path, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except OSError as exc:
            raise IoError(f"cannot read config {cfg_path}: {exc.strerror or exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        values.update(loaded)
    for key, value in vars(args).items():
        if key not in ("command", "config", "model"):
            values[key] = value
    return RunConfig.from_dict(values).validate()


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.command == "run":
            pipeline.run(cfg)
        else:
            try:
                os.makedirs(cfg.out_dir, exist_ok=True)
            except OSError as exc:
                raise IoError(f"cannot create {cfg.out_dir}: {exc.strerror or exc}") from exc
            stage = getattr(pipeline, f"stage_{args.command}")
            if args.command == "train":
                stage(cfg, cfg.out_dir, args.model)
            else:
                stage(cfg, cfg.out_dir)
    except TweetSentError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: E_IO: {exc}", file=sys.stderr)
        return IoError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
