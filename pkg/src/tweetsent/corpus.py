"""Loading raw tweet tables and dropping empty and duplicate rows."""

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple

from .errors import IoError, MalformedCsv, MissingColumn

__all__ = [
    "RawRecord",
    "Document",
    "CleanCorpus",
    "load_csv",
    "read_csv_text",
    "clean",
    "write_clean_csv",
    "read_clean_csv",
]


@dataclass(frozen=True)
class RawRecord:
    row_index: int
    text: str
    extra: tuple = ()


class Document(NamedTuple):
    doc_id: int
    text: str
    extra: tuple = ()


@dataclass(frozen=True)
class CleanCorpus:
    records: tuple = ()
    source_count: int = 0
    dropped_empty: int = 0
    dropped_duplicate: int = 0

    def __len__(self):
        return len(self.records)

    def stats(self):
        return {
            "source_count": self.source_count,
            "dropped_empty": self.dropped_empty,
            "dropped_duplicate": self.dropped_duplicate,
            "kept": len(self.records),
        }


def _has_undecodable(value):
    # bytes that were not valid UTF-8 survive as lone surrogates
    return any("\udc80" <= ch <= "\udcff" for ch in value)


def read_csv_text(data, text_column="text"):
    """Parse CSV content (``str`` or ``bytes``) into raw records."""
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="surrogateescape")
    if data.startswith("\ufeff"):
        data = data[1:]
    reader = csv.reader(io.StringIO(data, newline=""), strict=True)
    row_index = -1
    try:
        header = next(reader, None)
        if header is None:
            raise MissingColumn(text_column)
        if any(_has_undecodable(h) for h in header):
            raise MalformedCsv(-1, "header is not valid UTF-8")
        if text_column not in header:
            raise MissingColumn(text_column)
        text_pos = header.index(text_column)

        records = []
        for row in reader:
            if not row:
                continue
            row_index += 1
            if len(row) != len(header):
                raise MalformedCsv(row_index, f"expected {len(header)} fields, got {len(row)}")
            if any(_has_undecodable(v) for v in row):
                raise MalformedCsv(row_index, "invalid UTF-8")
            extra = tuple((h, v) for i, (h, v) in enumerate(zip(header, row)) if i != text_pos)
            records.append(RawRecord(row_index, row[text_pos], extra))
    except csv.Error as exc:
        raise MalformedCsv(row_index + 1, str(exc)) from exc
    return records


def load_csv(path, text_column="text"):
    """Read a UTF-8 CSV file with a header row; one record per data row."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return read_csv_text(data, text_column)


def clean(records):
    """Drop blank texts, then exact duplicates (first occurrence wins).

    Texts are compared after trimming surrounding whitespace only, and the
    trimmed form is what gets stored.
    """
    kept = []
    seen = set()
    dropped_empty = dropped_duplicate = 0
    for rec in records:
        text = rec.text.strip()
        if not text:
            dropped_empty += 1
            continue
        if text in seen:
            dropped_duplicate += 1
            continue
        seen.add(text)
        kept.append(Document(len(kept), text, tuple(rec.extra)))
    return CleanCorpus(
        records=tuple(kept),
        source_count=len(records),
        dropped_empty=dropped_empty,
        dropped_duplicate=dropped_duplicate,
    )


def write_clean_csv(corpus, path):
    """Write ``doc_id,text`` plus any preserved extra columns."""
    extra_names = [name for name, _ in corpus.records[0].extra] if corpus.records else []
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["doc_id", "text", *extra_names])
        for doc in corpus.records:
            writer.writerow([doc.doc_id, doc.text, *(v for _, v in doc.extra)])


def read_clean_csv(path, stats=None):
    """Inverse of :func:`write_clean_csv`."""
    stats = stats or {}
    docs = []
    for rec in load_csv(path, "text"):
        extra = dict(rec.extra)
        try:
            doc_id = int(extra.pop("doc_id"))
        except (KeyError, ValueError) as exc:
            raise MalformedCsv(rec.row_index, "bad or missing doc_id") from exc
        if doc_id != len(docs):
            raise MalformedCsv(rec.row_index, "doc_id not dense")
        docs.append(Document(doc_id, rec.text, tuple(extra.items())))
    return CleanCorpus(
        records=tuple(docs),
        source_count=stats.get("source_count", len(docs)),
        dropped_empty=stats.get("dropped_empty", 0),
        dropped_duplicate=stats.get("dropped_duplicate", 0),
    )
