"""Shared CLI fixtures: the subcommand matrix and JSON-checking runners."""

import json

import jsonschema

from ordpart.cli import main
from ordpart.derivation import larson_instance
from ordpart.partition import pentagon_coloring
from ordpart.serialize import coloring_to_json, derivation_to_json, schema_for

OUTPUT = schema_for("cli_output")
ERROR = schema_for("error")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    if code == 2:
        assert out == ""
        doc = json.loads(err)
        jsonschema.validate(doc, ERROR)
        return code, doc
    doc = json.loads(out)
    jsonschema.validate(doc, OUTPUT)
    assert doc["ok"] == (code == 0)
    return code, doc


def make_files(tmp_path):
    d = larson_instance(2, 3)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(derivation_to_json(d)))
    doc = derivation_to_json(d)
    doc["premises"][0]["premises"][0]["conclusion"]["goals"][0] = "5"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    pent = tmp_path / "pent.json"
    pent.write_text(json.dumps(coloring_to_json(pentagon_coloring())))
    return {"good": str(good), "bad": str(bad), "pent": str(pent), "missing": str(tmp_path / "nope.json")}


# (argv, expected exit code)
MATRIX = [
    (["ord", "eval", "w^(w+1)*3 + w"], 0),
    (["ord", "eval", "w*0"], 0),
    (["ord", "eval", "w^^2"], 2),
    (["ord", "cmp", "w", "w+1"], 0),
    (["ord", "cmp", "w+1", "w+1"], 0),
    (["ord", "cnf", "w^2*2+w"], 0),
    (["ord", "indecomp", "w^w"], 0),
    (["ord", "indecomp", "w*2"], 1),
    (["ord", "split", "w^2+w*3"], 0),
    (["ord", "split", "w^w"], 1),
    (["ord", "code", "w^w+5"], 0),
    (["ord", "decode", "6102"], 0),
    (["ord", "decode", "3"], 1),
    (["iset", "otype", "[w,w*2)+[w*3,w*3+5)"], 0),
    (["iset", "otype", "[0,w"], 2),
    (["iset", "trim", "--A", "[0,w^2)", "--A1", "[w,w^2)", "--x", "w*2+3", "--alpha", "w^2"], 0),
    (["iset", "trim", "--A", "[0,w+1)", "--A1", "[0,w+1)", "--x", "0", "--alpha", "w+1"], 2),
    (["iset", "segment", "--beta", "5", "--F", "0,2"], 0),
    (["iset", "segment", "--beta", "w"], 0),
    (["iset", "segment", "--beta", "5", "--F", "7"], 2),
    (["iset", "strong", "--D", "[0,w^2*2+w)", "--beta", "w^3"], 0),
    (["iset", "strong", "--D", "[0,w+1)", "--beta", "w"], 2),
    (["ramsey", "check", "--n", "6", "--goals", "3,3"], 0),
    (["ramsey", "check", "--n", "5", "--goals", "3,3"], 1),
    (["ramsey", "check", "--n", "3", "--goals", "1,7"], 0),
    (["ramsey", "check", "--n", "12", "--goals", "3,5"], 1),
    (["ramsey", "check", "--n", "4", "--goals", ""], 2),
    (["ramsey", "homog", "--coloring", "{pent}", "--color", "0", "--size", "2"], 0),
    (["ramsey", "homog", "--coloring", "{pent}", "--color", "1", "--size", "3"], 1),
    (["ramsey", "homog", "--coloring", "{missing}", "--color", "1", "--size", "3"], 2),
    (["ramsey", "witness", "--kind", "sierpinski", "--alpha", "w*2", "--sample", "0,1,w,w+1"], 0),
    (["ramsey", "witness", "--kind", "decomposable", "--alpha", "w^2+w"], 0),
    (["ramsey", "witness", "--kind", "decomposable", "--alpha", "w^w"], 2),
    (["ramsey", "witness", "--kind", "sierpinski", "--alpha", "w"], 2),
    (["em", "headline", "--nu", "1", "--n", "2"], 0),
    (["em", "headline", "--nu", "w", "--n", "1"], 0),
    (["em", "headline", "--nu", "0", "--n", "0"], 0),
    (["em", "larson", "--n", "2", "--k", "3"], 0),
    (["em", "larson", "--n", "0", "--k", "7"], 0),
    (["em", "verify", "{good}"], 0),
    (["em", "verify", "{bad}"], 1),
    (["em", "verify", "{missing}"], 2),
]
