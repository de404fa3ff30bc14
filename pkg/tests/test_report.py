import json
import xml.etree.ElementTree as ET

from tweetsent.report import (
    PALETTE, accuracy_svg, canonical_json, confusion_svg, emit_json, render_charts, scatter_svg,
)

NS = {"svg": "http://www.w3.org/2000/svg"}


def parse(text):
    return ET.fromstring(text)


def test_palette_has_eight_hex_colours():
    assert len(PALETTE) == 8
    assert all(v.startswith("#") and len(v) == 7 for v in PALETTE.values())


def test_accuracy_bars_and_labels():
    svg = accuracy_svg({"svc": 0.8976, "dt": 0.9223, "nb": 0.9321})
    root = parse(svg)
    assert root.get("width") == "640" and root.get("height") == "480"
    bars = [r for r in root.iter("{http://www.w3.org/2000/svg}rect") if r.get("class") == "bar"]
    assert [b.get("data-model") for b in bars] == ["svc", "dt", "nb"]
    heights = [float(b.get("height")) for b in bars]
    assert heights == sorted(heights)
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    for label in ("0.8976", "0.9223", "0.9321", "SVC", "DT", "NB", "0.0", "1.0"):
        assert label in texts


def cells(svg):
    root = parse(svg)
    rects = [r for r in root.iter("{http://www.w3.org/2000/svg}rect") if r.get("class") == "cell"]
    counts = [t for t in root.iter("{http://www.w3.org/2000/svg}text") if t.get("class") == "count"]
    return rects, counts


def test_diagonal_heatmap():
    rects, counts = cells(confusion_svg([[5, 0, 0], [0, 5, 0], [0, 0, 5]], "NB"))
    assert len(rects) == 9
    for r in rects:
        expected = "1.0000" if r.get("data-row") == r.get("data-col") else "0.0000"
        assert r.get("data-intensity") == expected
    assert sum(int(t.text) for t in counts) == 15


def test_rows_scale_to_their_own_max():
    rects, counts = cells(confusion_svg([[8, 2, 0], [0, 0, 0], [1, 1, 4]], "DT"))
    by_pos = {(r.get("data-row"), r.get("data-col")): r.get("data-intensity") for r in rects}
    assert by_pos[("0", "1")] == "0.2500"
    assert by_pos[("1", "1")] == "0.0000"
    assert by_pos[("2", "0")] == "0.2500"
    assert sum(int(t.text) for t in counts) == 16


def test_empty_scatter_keeps_axes():
    root = parse(scatter_svg([]))
    assert not list(root.iter("{http://www.w3.org/2000/svg}circle"))
    assert len(list(root.iter("{http://www.w3.org/2000/svg}line"))) >= 2
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert "Polarity" in texts and "Subjectivity" in texts and "-1.0" in texts


def test_scatter_points_and_downsampling():
    root = parse(scatter_svg([(i, 0.0, 0.5) for i in range(10)]))
    assert len(list(root.iter("{http://www.w3.org/2000/svg}circle"))) == 10
    big = [(i, (i % 200) / 100 - 1, (i % 7) / 7) for i in range(45000)]
    root = parse(scatter_svg(big))
    assert len(list(root.iter("{http://www.w3.org/2000/svg}circle"))) == 15000


def test_svg_is_byte_stable():
    m = [[3, 1, 0], [2, 7, 1], [0, 0, 9]]
    assert confusion_svg(m, "SVC") == confusion_svg([row[:] for row in m], "SVC")
    assert accuracy_svg({"nb": 0.5}) == accuracy_svg({"nb": 0.5})


def test_canonical_json(tmp_path):
    text = canonical_json({"b": 0.1, "a": [1, 2.5], "c": {"z": 1.0, "y": None}})
    assert text.endswith("\n") and "\r" not in text
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    assert "0.1" in text and "1.0" in text
    path = tmp_path / "r.json"
    emit_json({"x": 1.0}, str(path))
    assert json.loads(path.read_text()) == {"x": 1.0}


def test_render_charts_writes_all_files(tmp_path):
    report = {"models": {
        k: {"confusion": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "metrics": {"accuracy": 1.0}}
        for k in ("nb", "svc", "dt")
    }}
    paths = render_charts(report, str(tmp_path), [(0, 0.2, 0.4)])
    names = sorted(p.rsplit("/", 1)[-1] for p in paths)
    assert names == ["accuracy.svg", "confusion_dt.svg", "confusion_nb.svg", "confusion_svc.svg", "scatter.svg"]
    for p in paths:
        parse(open(p, encoding="utf-8").read())
