"""Canonical JSON output and static SVG figures."""

import json
import math
import os
from xml.sax.saxutils import escape

from .errors import IoError
from .lexicon import LABELS

__all__ = [
    "PALETTE",
    "MODEL_ORDER",
    "MODEL_NAMES",
    "canonical_json",
    "emit_json",
    "accuracy_svg",
    "confusion_svg",
    "scatter_svg",
    "render_charts",
]

WIDTH, HEIGHT = 640, 480
MAX_SCATTER_POINTS = 20000

PALETTE = {
    "ink": "#222222",
    "grid": "#d9d9d9",
    "background": "#ffffff",
    "bar": "#4c72b0",
    "heat": "#08306b",
    "point": "#dd8452",
    "axis": "#555555",
    "light_text": "#f7f7f7",
}

MODEL_ORDER = ("svc", "dt", "nb")
MODEL_NAMES = {"svc": "SVC", "dt": "DT", "nb": "NB"}


def canonical_json(obj):
    """Sorted keys, two-space indent, shortest round-trip floats, LF newlines."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def emit_json(report, path):
    _write(path, canonical_json(report))


def _attrs(attrs):
    # class_ -> class, data_row -> data-row
    return "".join(f' {k.rstrip("_").replace("_", "-")}="{v}"' for k, v in attrs.items())


class _Svg:
    def __init__(self, title):
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">',
            f"<title>{escape(title)}</title>",
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="{PALETTE["background"]}"/>',
        ]

    def rect(self, x, y, w, h, fill, **attrs):
        extra = _attrs(attrs)
        self.parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{w:.2f}" height="{h:.2f}" fill="{fill}"{extra}/>'
        )

    def line(self, x1, y1, x2, y2, stroke, width=1):
        self.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{stroke}" stroke-width="{width}"/>'
        )

    def circle(self, cx, cy, r, fill):
        self.parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r}" fill="{fill}" fill-opacity="0.6"/>')

    def text(self, x, y, content, size=12, anchor="middle", fill=PALETTE["ink"], rotate=None, **attrs):
        transform = f' transform="rotate({rotate} {x:.2f} {y:.2f})"' if rotate else ""
        extra = _attrs(attrs)
        self.parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-family="sans-serif" font-size="{size}" '
            f'text-anchor="{anchor}" fill="{fill}"{transform}{extra}>{escape(str(content))}</text>'
        )

    def render(self):
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _blend(hex_color, t):
    """Linear mix from white (t=0) to ``hex_color`` (t=1)."""
    r, g, b = (int(hex_color[i:i + 2], 16) for i in (1, 3, 5))
    mix = [round(255 + (c - 255) * t) for c in (r, g, b)]
    return "#{:02x}{:02x}{:02x}".format(*mix)


def accuracy_svg(accuracies):
    """Bar chart of accuracy per model; ``accuracies`` maps model key to value."""
    svg = _Svg("Accuracy of models")
    left, top, right, bottom = 80, 60, WIDTH - 40, HEIGHT - 70
    plot_h = bottom - top
    svg.text(WIDTH / 2, 35, "Accuracy Plot of Models", size=18)
    for i in range(6):
        v = i / 5
        y = bottom - v * plot_h
        svg.line(left, y, right, y, PALETTE["grid"])
        svg.text(left - 10, y + 4, f"{v:.1f}", anchor="end", fill=PALETTE["axis"])
    svg.line(left, top, left, bottom, PALETTE["axis"])
    svg.line(left, bottom, right, bottom, PALETTE["axis"])
    svg.text(25, (top + bottom) / 2, "Accuracy", size=14, rotate=-90)

    keys = [k for k in MODEL_ORDER if k in accuracies] + sorted(set(accuracies) - set(MODEL_ORDER))
    slot = (right - left) / max(len(keys), 1)
    for i, key in enumerate(keys):
        acc = min(max(float(accuracies[key]), 0.0), 1.0)
        h = acc * plot_h
        x = left + slot * i + slot * 0.2
        svg.rect(x, bottom - h, slot * 0.6, h, PALETTE["bar"], class_="bar", data_model=key)
        svg.text(x + slot * 0.3, bottom - h - 8, f"{acc:.4f}", size=13)
        svg.text(x + slot * 0.3, bottom + 22, MODEL_NAMES.get(key, key.upper()), size=14)
    return svg.render()


def confusion_svg(matrix, model_name):
    """3x3 heatmap; each row is shaded from 0 up to that row's maximum."""
    svg = _Svg(f"Confusion matrix of {model_name}")
    n = len(matrix)
    names = [label.display for label in LABELS][:n]
    cell = 100
    x0 = (WIDTH - cell * n) / 2 + 30
    y0 = 90
    svg.text(WIDTH / 2, 40, f"Confusion Matrix of {model_name}", size=18)
    svg.text(x0 + cell * n / 2, y0 - 30, "Predicted", size=14)
    svg.text(x0 - 100, y0 + cell * n / 2, "Actual", size=14, rotate=-90)
    for j, name in enumerate(names):
        svg.text(x0 + cell * j + cell / 2, y0 - 8, name)
    for i, row in enumerate(matrix):
        svg.text(x0 - 8, y0 + cell * i + cell / 2 + 4, names[i], anchor="end")
        row_max = max(row) if row else 0
        for j, count in enumerate(row):
            t = count / row_max if row_max else 0.0
            fill = _blend(PALETTE["heat"], t)
            svg.rect(x0 + cell * j, y0 + cell * i, cell, cell, fill,
                     stroke=PALETTE["background"], class_="cell",
                     data_row=i, data_col=j, data_intensity=f"{t:.4f}")
            ink = PALETTE["light_text"] if t > 0.5 else PALETTE["ink"]
            svg.text(x0 + cell * j + cell / 2, y0 + cell * i + cell / 2 + 5, count,
                     size=16, fill=ink, class_="count")
    return svg.render()


def _downsample(points):
    points = sorted(points)
    if len(points) <= MAX_SCATTER_POINTS:
        return points
    k = math.ceil(len(points) / MAX_SCATTER_POINTS)
    return points[::k]


def scatter_svg(points):
    """Subjectivity against polarity, one dot per ``(doc_id, polarity, subjectivity)``."""
    svg = _Svg("Subjectivity vs polarity")
    left, top, right, bottom = 80, 60, WIDTH - 40, HEIGHT - 70
    pw, ph = right - left, bottom - top
    svg.text(WIDTH / 2, 35, "Subjectivity vs. Polarity", size=18)
    for i in range(5):
        x = left + pw * i / 4
        svg.line(x, top, x, bottom, PALETTE["grid"])
        svg.text(x, bottom + 20, f"{-1 + i * 0.5:.1f}", fill=PALETTE["axis"])
        y = bottom - ph * i / 4
        svg.line(left, y, right, y, PALETTE["grid"])
        svg.text(left - 10, y + 4, f"{i * 0.25:.2f}", anchor="end", fill=PALETTE["axis"])
    svg.line(left, top, left, bottom, PALETTE["axis"])
    svg.line(left, bottom, right, bottom, PALETTE["axis"])
    svg.text(WIDTH / 2, bottom + 45, "Polarity", size=14)
    svg.text(25, (top + bottom) / 2, "Subjectivity", size=14, rotate=-90)
    for _, pol, sub in _downsample(points):
        svg.circle(left + (pol + 1) / 2 * pw, bottom - sub * ph, 2, PALETTE["point"])
    return svg.render()


def render_charts(report, out_dir, points=()):
    """Write accuracy, per-model confusion and scatter SVGs; return their paths."""
    written = []
    models = report.get("models", {})
    path = os.path.join(out_dir, "accuracy.svg")
    _write(path, accuracy_svg({k: v["metrics"]["accuracy"] for k, v in models.items()}))
    written.append(path)
    for key in sorted(models):
        path = os.path.join(out_dir, f"confusion_{key}.svg")
        _write(path, confusion_svg(models[key]["confusion"], MODEL_NAMES.get(key, key.upper())))
        written.append(path)
    path = os.path.join(out_dir, "scatter.svg")
    _write(path, scatter_svg(points))
    written.append(path)
    return written
