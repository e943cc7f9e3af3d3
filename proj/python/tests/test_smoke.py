import io
import json

import pytest

import docanno

SCHEMA = {
    "labels": [
        {"text": "title", "color": "#ff0000"},
        {"text": "author", "color": "#00ff00"},
        {"text": "figure", "color": "#ffaa00", "freeform": True},
    ],
    "relations": [{"text": "caption-of"}],
}


def textual(layout, ident, label, refs):
    b = docanno.snap_bounds(layout, refs)
    return {
        "id": ident,
        "page": refs[0][0],
        "label": label,
        "bounds": {"left": b.left, "top": b.top, "right": b.right, "bottom": b.bottom},
        "tokens": [{"pageIndex": p, "tokenIndex": t} for p, t in refs],
    }


def box(ident, label, l, t, r, b, page=0):
    return {"id": ident, "page": page, "label": label,
            "bounds": {"left": l, "top": t, "right": r, "bottom": b}, "tokens": None}


def test_geometry():
    a = docanno.Bounds(0, 0, 10, 10)
    b = docanno.Bounds(5, 0, 15, 10)
    assert docanno.intersection_area(a, b) == 50
    assert docanno.iou(a, b) == pytest.approx(1 / 3)
    assert docanno.iou(a, a) == 1.0
    r = docanno.rescale_bounds(a, (100, 100), (200, 50))
    assert r.as_tuple() == (0, 0, 20, 5)


def test_extract_synthetic():
    layout, warnings = docanno.extract_tokens(docanno.synthetic_pdf(["hello brave world"]))
    assert warnings == []
    assert len(layout) == 1
    assert layout[0]["page"]["width"] == 612
    assert [t["text"] for t in layout[0]["tokens"]] == ["hello", "brave", "world"]
    assert docanno.select_tokens(layout, 0, docanno.Bounds(0, 0, 612, 792)) == [0, 1, 2]


def test_extract_reportlab_pdf():
    canvas = pytest.importorskip("reportlab.pdfgen.canvas")
    from reportlab.pdfbase.pdfmetrics import stringWidth

    buf = io.BytesIO()
    c = canvas.Canvas(buf, pagesize=(612, 792))
    c.setFont("Helvetica", 12)
    c.drawString(72, 720, "Layout annotation")
    c.showPage()
    c.save()

    layout, _ = docanno.extract_tokens(buf.getvalue())
    tokens = layout[0]["tokens"]
    assert [t["text"] for t in tokens] == ["Layout", "annotation"]
    assert tokens[0]["x"] == pytest.approx(72, abs=0.5)
    assert tokens[0]["width"] == pytest.approx(stringWidth("Layout", "Helvetica", 12), abs=0.5)
    second_x = 72 + stringWidth("Layout ", "Helvetica", 12)
    assert tokens[1]["x"] == pytest.approx(second_x, abs=0.5)
    baseline = 792 - 720
    for t in tokens:
        assert t["y"] < baseline < t["y"] + t["height"]


def test_malformed_pdf_raises():
    with pytest.raises(docanno.DocannoError) as info:
        docanno.extract_tokens(b"not a pdf")
    assert info.value.code == "malformed-pdf"


def test_metrics():
    layout, _ = docanno.extract_tokens(docanno.synthetic_pdf(["one two three four"]))
    a = {"annotations": [textual(layout, "x", "title", [(0, 0), (0, 1)])], "relations": []}
    b = {"annotations": [textual(layout, "y", "title", [(0, 0)]),
                         textual(layout, "z", "author", [(0, 1)])], "relations": []}
    assert docanno.token_accuracy(a, a, layout) == 100.0
    assert docanno.token_accuracy(a, b, layout) == 50.0

    thresholds = docanno.default_iou_thresholds()
    assert len(thresholds) == 10
    gt = {"annotations": [box("g", "figure", 0, 0, 10, 10)], "relations": []}
    pred = {"annotations": [box("s", "figure", 50, 50, 60, 60), box("p", "figure", 0, 0, 10, 10)],
            "relations": []}
    assert docanno.average_precision(gt, gt, ["figure"]) == 1.0
    assert docanno.average_precision(gt, pred, ["figure"]) == pytest.approx(0.5)
    assert docanno.average_precision(pred, gt, ["figure"]) == pytest.approx(51 / 101)


def test_project_round_trip(tmp_path):
    project = docanno.Project(tmp_path)
    project.schema = SCHEMA
    assert project.schema == SCHEMA
    h = project.add_document(docanno.synthetic_pdf(["alpha beta gamma"]))
    assert project.add_document(docanno.synthetic_pdf(["alpha beta gamma"])) == h
    assert project.documents() == [h]
    assert project.assign("ann", [h]) == {h}
    layout = project.layout(h)

    sent = {"annotations": [textual(layout, "t", "title", [(0, 0)]), box("f", "figure", 100, 100, 200, 200)],
            "relations": [{"id": "r", "label": "caption-of", "targetIds": ["t", "f"]}]}
    sent["annotations"][0]["bounds"]["left"] = 0.0
    saved = project.save("ann", h, sent)
    assert saved["revision"] == 1
    assert saved["annotations"][0]["bounds"] == textual(layout, "t", "title", [(0, 0)])["bounds"]
    loaded = project.load("ann", h)
    saved.pop("revision")
    assert loaded == saved
    assert json.loads((tmp_path / h / "ann.json").read_text())["annotations"] == loaded["annotations"]

    bad = {"annotations": [box("f", "nope", 0, 0, 1, 1)], "relations": []}
    with pytest.raises(docanno.DocannoError) as info:
        project.save("ann", h, bad)
    assert info.value.code == "validation-failed"
    assert info.value.violations
    assert project.revision("ann", h) == 1

    with pytest.raises(docanno.DocannoError) as info:
        project.load("stranger", h)
    assert info.value.code == "not-assigned"

    status = project.set_status("ann", h, {"finished": True, "junk": False, "comments": ""})
    assert status["finished"] is True


def test_agreement_and_export(tmp_path):
    project = docanno.Project(tmp_path)
    project.schema = SCHEMA
    h = project.add_document(docanno.synthetic_pdf(["one two three"]))
    layout = project.layout(h)
    for who, label in (("alice", "title"), ("bob", "author")):
        project.assign(who, [h])
        project.save(who, h, {"annotations": [textual(layout, "a", "title", [(0, 0)]),
                                              textual(layout, "b", label, [(0, 1)]),
                                              box("f", "figure", 10, 10, 50, 30)], "relations": []})
    matrix = project.agreement()
    assert matrix["annotators"] == ["alice", "bob"]
    first = matrix["reports"][0]
    assert (first["ground_truth"], first["prediction"]) == ("alice", "bob")
    assert first["textual_accuracy"] == 50.0
    assert first["freeform_ap"] == 1.0

    coco, manifest, warnings = project.export_coco(["alice"], scale=2.0)
    assert warnings == []
    assert coco["images"][0]["width"] == 1224
    assert len(coco["annotations"]) == 3
    figure = next(c["id"] for c in coco["categories"] if c["name"] == "figure")
    ann = next(a for a in coco["annotations"] if a["category_id"] == figure)
    assert ann["bbox"] == [20, 20, 80, 40]
    assert ann["area"] == 3200
    assert manifest[0]["document"] == h

    with pytest.raises(docanno.DocannoError) as info:
        project.export_coco(["nobody"])
    assert info.value.code == "unknown-annotator"
