import json
import subprocess
import sys

import pytest

from phda import fixtures as F
from phda import jsonio
from phda.cli import main
from phda.colimits import colimit
from phda.errors import ModelInvalid, ParseError
from phda.unfolding import unfold


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        p = tmp_path / name
        jsonio.save_json(str(p), doc)
        return str(p)

    return tmp_path, write


def test_model_roundtrip_all_fixtures(tmp_path):
    for name, mk in F.MODELS.items():
        x = mk()
        path = tmp_path / f"{name}.json"
        jsonio.save_json(str(path), jsonio.model_to_dict(x))
        assert jsonio.load_model(str(path)) == x, name


def test_operation_outputs_roundtrip(tmp_path):
    outputs = [
        colimit(F.glued_square_diagram()).model,
        unfold(F.full_square(), 3).tree,
    ]
    from phda.completion import complete

    outputs.append(complete(F.punctured_cube())[0])
    for k, x in enumerate(outputs):
        path = tmp_path / f"out{k}.json"
        jsonio.save_json(str(path), jsonio.model_to_dict(x))
        assert jsonio.load_model(str(path)) == x


def test_morphism_and_diagram_roundtrip(tmp_path):
    fold = F.branch_fold(2, 1)
    p = tmp_path / "fold.json"
    jsonio.save_json(str(p), jsonio.morphism_to_dict(fold))
    assert jsonio.load_morphism(str(p)) == fold
    d = F.glued_square_diagram()
    q = tmp_path / "diagram.json"
    jsonio.save_json(str(q), jsonio.diagram_to_dict(d))
    assert jsonio.load_diagram(str(q)) == d


def test_morphism_with_file_references(tmp_path):
    fold = F.branch_fold(2, 1)
    jsonio.save_json(str(tmp_path / "src.json"), jsonio.model_to_dict(fold.source))
    jsonio.save_json(str(tmp_path / "tgt.json"), jsonio.model_to_dict(fold.target))
    doc = {"source": "src.json", "target": "tgt.json", "map": fold.mapping}
    jsonio.save_json(str(tmp_path / "fold.json"), doc)
    assert jsonio.load_morphism(str(tmp_path / "fold.json")) == fold


def test_saturate_flag_closes_table(files):
    _, write = files
    doc = {
        "alphabet": ["a", "b"],
        "cells": [
            {"id": "q", "dim": 2, "label": ["a", "b"]},
            {"id": "e", "dim": 1, "label": ["b"]},
            {"id": "v", "dim": 0, "label": []},
            {"id": "i", "dim": 0, "label": []},
        ],
        "initial": "i",
        "faces": [
            {"from": "q", "word": [[1, 0]], "to": "e"},
            {"from": "e", "word": [[1, 0]], "to": "v"},
        ],
    }
    with pytest.raises(ModelInvalid) as err:
        jsonio.load_model(write("plain.json", doc))
    assert any(v.kind == "LaxLawViolation" for v in err.value.violations)
    x = jsonio.load_model(write("closed.json", dict(doc, saturate=True)))
    from phda.words import word

    assert x.faces[("q", word((1, 0), (2, 0)))] == "v"


def test_saturate_flag_on_generator_only_cube(files):
    # the punctured cube rebuilt from single faces alone: saturation must
    # re-derive every composite, including the far-vertex word
    _, write = files
    x = F.punctured_cube()
    doc = jsonio.model_to_dict(x)
    doc["faces"] = [e for e in doc["faces"] if len(e["word"]) == 1]
    doc["saturate"] = True
    loaded = jsonio.load_model(write("cube_gen.json", doc))
    assert loaded == x
    from phda.words import word

    assert loaded.faces[("***", word((1, 1), (2, 1), (3, 0)))] == "110"


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        jsonio.load_model(str(bad))
    empty = tmp_path / "missing_fields.json"
    empty.write_text("{}")
    with pytest.raises(ParseError):
        jsonio.load_model(str(empty))


def test_dot_export_contracts():
    point_dot = jsonio.export_dot(F.point())
    assert point_dot.count(" -> ") == 0 and point_dot.count("doublecircle") == 1
    sq_dot = jsonio.export_dot(F.full_square())
    assert sq_dot.count(" -> ") == 4
    assert sum(l.strip().startswith('"') and "circle" in l for l in sq_dot.splitlines()) == 4
    assert sum(l.strip().startswith("//") for l in sq_dot.splitlines()) == 1
    split_dot = jsonio.export_dot(F.split_segment())
    assert split_dot.count(" -> ") == 1
    assert split_dot.count("style=dashed") == 2


def test_dot_export_deterministic():
    a = jsonio.export_dot(F.glued_square())
    b = jsonio.export_dot(F.glued_square())
    assert a == b


def cli(args):
    from io import StringIO
    import contextlib

    out, err = StringIO(), StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def model_files(tmp_path):
    paths = {}
    for name in ("full_square", "glued_square", "split_segment", "self_loop"):
        p = tmp_path / f"{name}.json"
        jsonio.save_json(str(p), jsonio.model_to_dict(F.MODELS[name]()))
        paths[name] = str(p)
    d = tmp_path / "diagram.json"
    jsonio.save_json(str(d), jsonio.diagram_to_dict(F.glued_square_diagram()))
    paths["diagram"] = str(d)
    fold = tmp_path / "fold.json"
    jsonio.save_json(str(fold), jsonio.morphism_to_dict(F.branch_fold(2, 1)))
    paths["fold"] = str(fold)
    cover = tmp_path / "cover.json"
    jsonio.save_json(str(cover), jsonio.morphism_to_dict(unfold(F.full_square(), 4).cover))
    paths["cover"] = str(cover)
    return paths


def test_cli_validate_and_decisions(model_files):
    code, out, _ = cli(["validate", model_files["full_square"]])
    assert code == 0 and json.loads(out)["ok"] is True
    assert cli(["is-tree", model_files["glued_square"]])[0] == 0
    assert cli(["is-tree", model_files["full_square"]])[0] == 1
    assert cli(["check-open", model_files["fold"]])[0] == 0
    assert cli(["check-covering", model_files["fold"]])[0] == 1
    assert cli(["check-covering", model_files["cover"], "--max-len", "3"])[0] == 0


def test_cli_structural_commands(model_files):
    code, out, _ = cli(["complete", model_files["split_segment"]])
    assert code == 0 and len(json.loads(out)["model"]["cells"]) == 5
    code, out, _ = cli(["paths", model_files["glued_square"], "--max-len", "4"])
    assert code == 0 and len(json.loads(out)["paths"]) == 7
    code, out, _ = cli(["homotopy", model_files["glued_square"], "--to", "B:4"])
    assert code == 0 and json.loads(out)["count"] == 1
    code, out, _ = cli(["unfold", model_files["self_loop"], "--depth", "3"])
    doc = json.loads(out)
    assert code == 0 and doc["truncated"] is True and len(doc["model"]["cells"]) == 4
    code, out, _ = cli(["colimit", model_files["diagram"]])
    assert code == 0 and len(json.loads(out)["model"]["cells"]) == 6
    code, out, _ = cli(["dot", model_files["glued_square"]])
    assert code == 0 and out.startswith("digraph")


def test_cli_lift(model_files, tmp_path):
    phi_path = tmp_path / "phi.json"
    d = F.glued_square_diagram()
    res = colimit(d)
    sq = F.full_square()
    from phda.colimits import mediate
    from phda.model import Morphism

    legs = {
        "A": Morphism(d.shape("A", sq.alphabet), sq, {"0": "00", "1": "0*", "2": "**"}),
        "B": Morphism(d.shape("B", sq.alphabet), sq, {"0": "00", "1": "0*", "2": "**", "3": "1*", "4": "11"}),
        "C": Morphism(d.shape("C", sq.alphabet), sq, {"0": "00", "1": "0*", "2": "**", "3": "*1", "4": "11"}),
    }
    jsonio.save_json(str(phi_path), jsonio.morphism_to_dict(mediate(d, res, legs)))
    code, out, _ = cli(["lift", str(phi_path), model_files["cover"]])
    assert code == 0 and len(json.loads(out)["map"]) == 6


def test_cli_error_exit_code(files):
    tmp_path, write = files
    doc = {
        "alphabet": ["a", "b"],
        "cells": [
            {"id": "q", "dim": 2, "label": ["a", "b"]},
            {"id": "e", "dim": 1, "label": ["b"]},
            {"id": "v", "dim": 0, "label": []},
            {"id": "i", "dim": 0, "label": []},
        ],
        "initial": "i",
        "faces": [
            {"from": "q", "word": [[1, 0]], "to": "e"},
            {"from": "e", "word": [[1, 0]], "to": "v"},
        ],
    }
    path = write("badlax.json", doc)
    code, out, err = cli(["validate", path])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "ModelInvalid"
    missing = str(tmp_path / "nope.json")
    assert cli(["validate", missing])[0] == 2


def test_cli_subprocess_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "phda", "validate", "/nonexistent.json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["error"]["type"] == "ParseError"


def test_cli_output_deterministic(model_files):
    a = cli(["colimit", model_files["diagram"]])
    b = cli(["colimit", model_files["diagram"]])
    assert a == b
