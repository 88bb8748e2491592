from __future__ import annotations

import io
import json

import pytest

from sizeramsey.cli import parse_graph_arg, run
from sizeramsey.families import family


def cli(*argv: str, stdin: str = "") -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_arrow_h3():
    code, out = cli("arrow", "--graph", "family:H3", "--red", "2K2", "--blue", "F3", "--threads", "1")
    assert code == 0 and out.startswith("Arrows")


def test_arrow_c6_certificate(tmp_path):
    path = tmp_path / "certs.json"
    code, out = cli("arrow", "--graph", "family:C6", "--red", "2K2", "--blue", "2P3", "--json",
                    "--certificates-out", str(path))
    assert code == 1
    payload = json.loads(out)
    assert payload["schema"] == "sizeramsey.cli/1" and payload["verdict"] == "NotArrows"
    cert = payload["certificate"]
    assert set(cert) == {"host", "red", "blue", "red_pattern", "blue_pattern"}
    saved = json.loads(path.read_text())["certificates"]
    assert saved == [cert]
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps(cert))
    assert cli("check-color", "--coloring", str(cfile))[0] == 0
    assert cli("check-color", "--coloring", str(cfile), "--blue", "P3")[0] == 1
    assert cli("check-color", "--coloring", "-", stdin=json.dumps(cert))[0] == 0


def test_ramsey_2k2_f2():
    code, out = cli("ramsey", "--red", "2K2", "--blue", "F2", "--budget-edges", "12", "--json", "--threads", "1")
    assert code == 0
    report = json.loads(out)["report"]
    assert report["value"] == 12 and report["status"] == "exact"


def test_ramsey_over_budget(tmp_path):
    code, out = cli("ramsey", "--red", "2K2", "--blue", "F3", "--budget-edges", "8", "--threads", "1")
    assert code == 3 and "<=" in out


def test_ramsey_certificates(tmp_path):
    path = tmp_path / "lower.json"
    code, _ = cli("ramsey", "--red", "2K2", "--blue", "K3", "--threads", "1", "--certificates-out", str(path))
    assert code == 0
    bundle = json.loads(path.read_text())["lower_bound"]
    assert bundle["q"] == 5 and len(bundle["certificates"]) == bundle["graphs"] == 26


def test_enumerate_stream_into_arrow():
    code, out = cli("enumerate", "--edges", "3", "--threads", "1")
    assert code == 0 and len(out.split()) == 5
    code, arrow_out = cli("arrow", "--red", "P3", "--blue", "2K2", "--threads", "1", stdin=out)
    assert code == 1 and arrow_out.count("NotArrows") == 5


def test_enumerate_count_and_budget():
    assert cli("enumerate", "-q", "6", "--count", "--threads", "1") == (0, "68\n")
    code, out = cli("enumerate", "-q", "4", "--min-max-degree", "3", "--count", "--json", "--threads", "1")
    assert json.loads(out)["count"] == 4
    assert cli("enumerate", "-q", "20", "--threads", "1")[0] == 3


def test_graph_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Dhc\nCr\n")
    code, out = cli("arrow", "--graph-file", str(path), "--red", "P3", "--blue", "2K2", "--threads", "1")
    assert code == 0 and out.count("Arrows") == 2


def test_family_command():
    code, out = cli("family", "K1+2C4", "--json")
    d = json.loads(out)
    assert code == 0 and len(d["edges"]) == 16 and d["vertices"] == 9
    assert cli("family", "family:C5") == (0, "Dhc\n")


def test_usage_errors():
    assert cli("arrow", "--graph", "family:Q3", "--red", "2K2", "--blue", "F3")[0] == 2
    assert cli("arrow", "--graph", "Dhc", "--red", "X", "--blue", "F3")[0] == 2
    assert cli("nonsense")[0] == 2
    code, out = cli("arrow", "--graph", "zz", "--red", "P3", "--blue", "K3", "--json")
    assert code == 2 and json.loads(out)["error"]["type"]


def test_config_file(tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("budget_edges = 3\nthreads = 1\n")
    code, out = cli("ramsey", "--red", "2K2", "--blue", "K3", "--config", str(cfg))
    assert code == 3
    cfg.write_text("bogus = 1\n")
    assert cli("ramsey", "--red", "2K2", "--blue", "K3", "--config", str(cfg))[0] == 2


@pytest.mark.parametrize("text", ["family:H3", "g6:Dhc", "Dhc", "family:K3|K3"])
def test_parse_graph_arg(text):
    g = parse_graph_arg(text)
    assert g.num_edges in (18, 5, 6)


def test_deterministic_output_across_threads():
    a = cli("enumerate", "-q", "7", "--threads", "1", "--deterministic")
    b = cli("enumerate", "-q", "7", "--threads", "2", "--deterministic")
    assert a == b
