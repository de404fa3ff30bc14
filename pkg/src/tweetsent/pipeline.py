"""End-to-end pipeline as a chain of file-backed stages.

Every stage reads the artifacts of earlier stages from a working directory
and writes its own, so ``run`` is exactly the stages called in order:

    clean -> prep -> label -> split -> vectorize -> train -> evaluate -> report

Artifacts (all UTF-8, LF newlines):

==================  ====================================================
clean.csv           ``doc_id,text[,extra columns...]``
clean_stats.json    source/dropped/kept counters
tokens.jsonl        ``{"doc_id", "raw_tokens", "stemmed_tokens"}`` per doc
labels.jsonl        ``{"doc_id", "polarity", "subjectivity", "matched", "label"}``
split.json          ``{"train": [...], "test": [...], "seed", "fraction"}``
vocabulary.txt      one term per line, in column order
matrix.jsonl        ``{"doc_id", "cols", "counts"}`` per doc
model_<m>.json      versioned model document
evaluation.json     per-model confusion matrix, metrics and predictions
config.json         parameters echoed by each stage, with input hashes
timing.json         wall-clock seconds (kept out of report.json)
==================  ====================================================
"""

import hashlib
import json
import os
import time
from dataclasses import asdict, dataclass, fields

import numpy as np
import scipy.sparse as sp

from . import corpus as corpus_mod
from .errors import ConfigError, IoError, MalformedLine, MissingStageInput
from .evaluation import SplitIndices, confusion, metrics, round_half_even, split
from .lexicon import LABELS, SentimentScorer, load_lexicon, load_negators, to_label
from .models import MODEL_TYPES, load_model, save_model
from .report import canonical_json, emit_json, render_charts
from .textprep import TokenDoc, bundled_path, load_stopwords, preprocess
from .vectorizer import Vocabulary, fit_vocabulary, transform

__all__ = ["RunConfig", "STAGES", "run", "REPORT_FILES"]

REPORT_FORMAT_VERSION = 1
REPORT_FILES = (
    "report.json",
    "accuracy.svg",
    "confusion_svc.svg",
    "confusion_dt.svg",
    "confusion_nb.svg",
    "scatter.svg",
)


@dataclass
class RunConfig:
    input: str = None
    text_column: str = "text"
    stopwords: str = None
    lexicon: str = None
    negators: str = None
    fraction: float = 0.8
    seed: int = 42
    models: tuple = ("nb", "svc", "dt")
    alpha: float = 1.0
    C: float = 1.0
    tol: float = 1e-4
    max_sweeps: int = 1000
    max_depth: int = None
    min_samples_split: int = 2
    min_df: int = 1
    max_features: int = None
    paper_order: bool = False
    out_dir: str = "out"

    @classmethod
    def from_dict(cls, values):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        cfg = cls(**values)
        cfg.models = tuple(cfg.models)
        return cfg

    def validate(self):
        if not isinstance(self.fraction, (int, float)) or not (0.0 < self.fraction < 1.0):
            raise ConfigError(f"fraction must be in (0, 1), got {self.fraction}")
        if not self.models:
            raise ConfigError("at least one model must be selected")
        bad = [m for m in self.models if m not in MODEL_TYPES]
        if bad:
            raise ConfigError(f"unknown model(s): {', '.join(bad)}")
        if len(set(self.models)) != len(self.models):
            raise ConfigError("duplicate model in selection")
        if not self.alpha > 0:
            raise ConfigError("alpha must be > 0")
        if not self.C > 0:
            raise ConfigError("C must be > 0")
        if not self.tol > 0:
            raise ConfigError("tol must be > 0")
        if self.max_sweeps < 1:
            raise ConfigError("max_sweeps must be >= 1")
        if self.max_depth is not None and self.max_depth < 0:
            raise ConfigError("max_depth must be >= 0")
        if self.min_samples_split < 2:
            raise ConfigError("min_samples_split must be >= 2")
        if self.min_df < 1:
            raise ConfigError("min_df must be >= 1")
        if self.max_features is not None and self.max_features < 1:
            raise ConfigError("max_features must be >= 1")
        return self

    def model_params(self, name):
        if name == "nb":
            return {"alpha": self.alpha}
        if name == "svc":
            return {"C": self.C, "tol": self.tol, "max_sweeps": self.max_sweeps, "seed": self.seed}
        return {"max_depth": self.max_depth, "min_samples_split": self.min_samples_split}


# ---------------------------------------------------------------- file helpers

def _path(workdir, name):
    return os.path.join(workdir, name)


def _require(workdir, name):
    path = _path(workdir, name)
    if not os.path.exists(path):
        raise MissingStageInput(f"{path} not found; run the stage that produces it first")
    return path


def _sha256(path):
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_jsonl(path, rows):
    _write_text(path, "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in rows))


def _read_jsonl(path):
    rows = []
    try:
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                if line.strip():
                    try:
                        rows.append(json.loads(line))
                    except json.JSONDecodeError as exc:
                        raise MalformedLine(line_no, f"{path}: {exc}") from exc
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return rows


def _record_config(workdir, section, values):
    path = _path(workdir, "config.json")
    current = _read_json(path) if os.path.exists(path) else {}
    current[section] = values
    _write_text(path, canonical_json(current))


def _record_timing(workdir, key, seconds):
    path = _path(workdir, "timing.json")
    current = _read_json(path) if os.path.exists(path) else {}
    current[key] = round(seconds, 6)
    _write_text(path, canonical_json(current))


def _asset(path, name):
    """(display name, filesystem path) for a user file or a bundled default."""
    if path:
        return path, path
    return f"bundled:{name}", str(bundled_path(name))


def _load_token_docs(workdir):
    return [
        TokenDoc(r["doc_id"], tuple(r["raw_tokens"]), tuple(r["stemmed_tokens"]))
        for r in _read_jsonl(_require(workdir, "tokens.jsonl"))
    ]


def _load_labels(workdir):
    rows = _read_jsonl(_require(workdir, "labels.jsonl"))
    return rows, np.asarray([r["label"] for r in rows], dtype=np.int64)


def _load_matrix(workdir):
    vocab = Vocabulary.load(_require(workdir, "vocabulary.txt"))
    rows = _read_jsonl(_require(workdir, "matrix.jsonl"))
    indptr, indices, data = [0], [], []
    for r in rows:
        indices.extend(r["cols"])
        data.extend(r["counts"])
        indptr.append(len(indices))
    X = sp.csr_matrix(
        (np.asarray(data, dtype=np.int64), np.asarray(indices, dtype=np.int64), np.asarray(indptr)),
        shape=(len(rows), len(vocab)),
    )
    return X, vocab


def _load_split(workdir):
    return SplitIndices.from_dict(_read_json(_require(workdir, "split.json")))


# ---------------------------------------------------------------------- stages

def stage_clean(cfg, workdir):
    if not cfg.input:
        raise ConfigError("an input CSV is required")
    records = corpus_mod.load_csv(cfg.input, cfg.text_column)
    corpus = corpus_mod.clean(records)
    corpus_mod.write_clean_csv(corpus, _path(workdir, "clean.csv"))
    _write_text(_path(workdir, "clean_stats.json"), canonical_json(corpus.stats()))
    _record_config(workdir, "clean", {
        "input": os.path.basename(cfg.input),
        "input_sha256": _sha256(cfg.input),
        "text_column": cfg.text_column,
    })
    return corpus


def _negator_words(cfg):
    name, path = _asset(cfg.negators, "negators_en.txt")
    return name, path, load_negators(path)


def stage_prep(cfg, workdir):
    corpus = corpus_mod.read_clean_csv(_require(workdir, "clean.csv"))
    sw_name, sw_path = _asset(cfg.stopwords, "stopwords_en.txt")
    _, _, negators = _negator_words(cfg)
    # negation cues must survive stopword removal for the lexicon scorer
    stopwords = load_stopwords(sw_path) - negators
    docs = preprocess(corpus, stopwords)
    _write_jsonl(_path(workdir, "tokens.jsonl"), (
        {"doc_id": d.doc_id, "raw_tokens": list(d.raw_tokens), "stemmed_tokens": list(d.stemmed_tokens)}
        for d in docs
    ))
    _record_config(workdir, "prep", {
        "stopwords": sw_name,
        "stopwords_sha256": _sha256(sw_path),
        "negators_exempt": sorted(negators & load_stopwords(sw_path)),
    })
    return docs


def stage_label(cfg, workdir):
    docs = _load_token_docs(workdir)
    lex_name, lex_path = _asset(cfg.lexicon, "lexicon_en.tsv")
    neg_name, neg_path, negators = _negator_words(cfg)
    scorer = SentimentScorer(load_lexicon(lex_path), negators)
    rows = []
    for doc in docs:
        s = scorer.score(doc.raw_tokens)
        rows.append({
            "doc_id": doc.doc_id,
            "polarity": s.polarity,
            "subjectivity": s.subjectivity,
            "matched": s.matched,
            "label": int(to_label(s.polarity)),
        })
    _write_jsonl(_path(workdir, "labels.jsonl"), rows)
    _record_config(workdir, "label", {
        "lexicon": lex_name,
        "lexicon_sha256": _sha256(lex_path),
        "negators": neg_name,
        "negators_sha256": _sha256(neg_path),
    })
    return rows


def stage_split(cfg, workdir):
    _, labels = _load_labels(workdir)
    indices = split(labels, cfg.fraction, cfg.seed)
    _write_text(_path(workdir, "split.json"), canonical_json(indices.to_dict()))
    _record_config(workdir, "split", {"fraction": cfg.fraction, "seed": cfg.seed, "stratified": True})
    return indices


def stage_vectorize(cfg, workdir):
    docs = _load_token_docs(workdir)
    if cfg.paper_order:
        fit_docs = docs
    else:
        train_ids = set(_load_split(workdir).train)
        fit_docs = [d for d in docs if d.doc_id in train_ids]
    vocab = fit_vocabulary(fit_docs, cfg.min_df, cfg.max_features)
    X = transform(docs, vocab)
    vocab.save(_path(workdir, "vocabulary.txt"))
    _write_jsonl(_path(workdir, "matrix.jsonl"), (
        {
            "doc_id": d.doc_id,
            "cols": X.indices[X.indptr[i]:X.indptr[i + 1]].tolist(),
            "counts": X.data[X.indptr[i]:X.indptr[i + 1]].tolist(),
        }
        for i, d in enumerate(docs)
    ))
    _record_config(workdir, "vectorize", {
        "min_df": cfg.min_df,
        "max_features": cfg.max_features,
        "vocabulary_fit_on": "all documents (paper order)" if cfg.paper_order else "training documents",
    })
    return vocab, X


def stage_train(cfg, workdir, model_name):
    if model_name not in MODEL_TYPES:
        raise ConfigError(f"unknown model {model_name!r}")
    X, _ = _load_matrix(workdir)
    _, labels = _load_labels(workdir)
    train = np.asarray(_load_split(workdir).train, dtype=np.int64)
    params = cfg.model_params(model_name)
    model = MODEL_TYPES[model_name](**params)
    start = time.perf_counter()
    model.fit(X[train], labels[train])
    _record_timing(workdir, f"train_{model_name}_seconds", time.perf_counter() - start)
    save_model(model, _path(workdir, f"model_{model_name}.json"))
    _record_config(workdir, f"train_{model_name}", params)
    return model


def stage_evaluate(cfg, workdir):
    X, _ = _load_matrix(workdir)
    _, labels = _load_labels(workdir)
    test = np.asarray(_load_split(workdir).test, dtype=np.int64)
    results = {}
    for name in cfg.models:
        model = load_model(_require(workdir, f"model_{name}.json"), expected_type=name)
        predicted = model.predict(X[test])
        cm = confusion(labels[test], predicted)
        results[name] = {
            "confusion": cm.to_list(),
            "metrics": metrics(cm).to_dict(),
            "predicted": [int(p) for p in predicted],
        }
    _write_text(_path(workdir, "evaluation.json"), canonical_json(results))
    return results


def _table_row(metric_dict):
    row = {"accuracy": round_half_even(metric_dict["accuracy"], 4)}
    for label, vals in metric_dict["per_label"].items():
        row[label] = {k: round_half_even(vals[k], 2) for k in ("precision", "recall", "f1")}
    return row


def build_report(workdir):
    config = _read_json(_require(workdir, "config.json"))
    stats = _read_json(_require(workdir, "clean_stats.json"))
    label_rows, labels = _load_labels(workdir)
    indices = _load_split(workdir)
    evaluation = _read_json(_require(workdir, "evaluation.json"))
    vocab = Vocabulary.load(_require(workdir, "vocabulary.txt"))
    tokens = _read_jsonl(_require(workdir, "tokens.jsonl"))

    def distribution(ids):
        counts = np.bincount(labels[np.asarray(ids, dtype=np.int64)], minlength=len(LABELS))
        return {LABELS[i].display: int(counts[i]) for i in range(len(LABELS))}

    models = {}
    for name, res in evaluation.items():
        payload = _read_json(_require(workdir, f"model_{name}.json"))
        models[name] = {
            "confusion": res["confusion"],
            "metrics": res["metrics"],
            "table": _table_row(res["metrics"]),
            "params": payload["params"],
            "training": payload["training"],
        }
    return {
        "format_version": REPORT_FORMAT_VERSION,
        "config": config,
        "corpus": dict(stats, empty_after_preprocessing=sum(1 for t in tokens if not t["raw_tokens"])),
        "labels": {
            "all": distribution(range(len(labels))),
            "train": distribution(indices.train),
            "test": distribution(indices.test),
            "lexicon_matched_docs": sum(1 for r in label_rows if r["matched"]),
        },
        "split": {"train": len(indices.train), "test": len(indices.test),
                  "fraction": indices.fraction, "seed": indices.seed},
        "vocabulary_size": len(vocab),
        "models": models,
    }, [(r["doc_id"], r["polarity"], r["subjectivity"]) for r in label_rows]


def stage_report(cfg, workdir):
    report, points = build_report(workdir)
    emit_json(report, _path(workdir, "report.json"))
    render_charts(report, workdir, points)
    return report


STAGES = ("clean", "prep", "label", "split", "vectorize", "train", "evaluate", "report")


def run(cfg):
    """Execute every stage into ``cfg.out_dir`` and return the report dict."""
    cfg.validate()
    workdir = cfg.out_dir
    try:
        os.makedirs(workdir, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {workdir}: {exc.strerror or exc}") from exc
    # a stale config or timing file from an earlier run would leak into this one
    for name in ("config.json", "timing.json"):
        if os.path.exists(_path(workdir, name)):
            os.remove(_path(workdir, name))
    start = time.perf_counter()
    stage_clean(cfg, workdir)
    stage_prep(cfg, workdir)
    stage_label(cfg, workdir)
    stage_split(cfg, workdir)
    stage_vectorize(cfg, workdir)
    for name in cfg.models:
        stage_train(cfg, workdir, name)
    stage_evaluate(cfg, workdir)
    report = stage_report(cfg, workdir)
    _record_timing(workdir, "total_seconds", time.perf_counter() - start)
    return report


def config_dict(cfg):
    d = asdict(cfg)
    d["models"] = list(cfg.models)
    return d
