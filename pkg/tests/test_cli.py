"""CLI surface: subcommands, JSON shape, exit codes."""

import json

import pytest

from spexplanar import k2_bipartite, parse_graph6, to_graph6
from spexplanar.cli import main, render_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_render_json_floats():
    assert render_json(2.8284271247461903) == "2.82842712474619"
    assert render_json({"a": 1, "b": True, "c": None}) == '{"a": 1, "b": true, "c": null}'
    assert json.loads(render_json({"x": [1.5, "s"]})) == {"x": [1.5, "s"]}


def test_construct_extremal_theta4(capsys):
    code, out, err = run_cli(capsys, "construct", "--family", "extremal",
                             "--forbid", "theta:4", "--n", "10")
    assert code == 0 and err == ""
    assert out.strip() == to_graph6(k2_bipartite(10))


def test_construct_theta_family_lines(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "theta", "--k", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert all(parse_graph6(s).n == 8 for s in lines)


def test_rho_command(capsys, tmp_path):
    g6 = to_graph6(k2_bipartite(6))
    f = tmp_path / "g.g6"
    f.write_text(g6 + "\n")
    code, out, err = run_cli(capsys, "rho", "--input", str(f), "--perron")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert abs(payload["rho"] - 8 ** 0.5) < 1e-9
    assert payload["residual"] <= 1e-12
    assert len(payload["perron"]) == 6


def test_planar_command(capsys, tmp_path):
    f = tmp_path / "k5.g6"
    from spexplanar import Graph

    k5 = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    f.write_text(to_graph6(k5) + "\n")
    code, out, _ = run_cli(capsys, "planar", "--input", str(f))
    payload = json.loads(out)
    assert code == 0 and payload["planar"] is False


def test_check_free_command(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(k2_bipartite(8)) + "\n")
    code, out, _ = run_cli(capsys, "check-free", "--pattern", "cll:3", "--input", str(f))
    payload = json.loads(out)
    assert code == 0 and payload["free"] is True and payload["pattern"] == "cll:3"


def test_predicate_command(capsys):
    code, out, _ = run_cli(capsys, "predicate", "--claim", "8", "--k", "6",
                           "--partition", "2,1,1")
    payload = json.loads(out)
    assert code == 0 and payload["free"] is True


def test_predicate_requires_parameter(capsys):
    code, out, err = run_cli(capsys, "predicate", "--claim", "4", "--partition", "2,2")
    assert code == 2
    assert json.loads(err)["status"] == "error"


def test_oracle_vs_predicate_command(capsys):
    code, out, _ = run_cli(capsys, "oracle-vs-predicate", "--claim", "c33",
                           "--max-total", "6")
    payload = json.loads(out)
    assert code == 0 and payload["agreement"] is True and payload["mismatch_count"] == 0


def test_family_search_command(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    csv_file = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "family-search", "--forbid", "theta:5",
                           "--n", "14", "--top", "2",
                           "--out", str(out_file), "--csv", str(csv_file))
    payload = json.loads(out)
    assert code == 0
    assert payload["mode"] == "family"
    assert payload["ranked"][0]["rank"] == 1
    assert json.loads(out_file.read_text())["pattern"] == "theta:5"
    header = csv_file.read_text().splitlines()[0]
    assert header == "rank,graph6,rho,residual,flags"


def test_extremal_search_command(capsys):
    code, out, _ = run_cli(capsys, "extremal-search", "--forbid", "theta:4",
                           "--n", "5", "--internal", "--top", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["mode"] == "exhaustive"
    assert payload["comparison"]["construction"] == "k2_bipartite"


def test_perron_report_command(capsys, tmp_path):
    from spexplanar import ForbiddenPattern, extremal_construction

    f = tmp_path / "g.g6"
    f.write_text(to_graph6(extremal_construction(ForbiddenPattern.cll(3), 12)) + "\n")
    code, out, _ = run_cli(capsys, "perron-report", "--input", str(f))
    payload = json.loads(out)
    assert code == 0 and len(payload["entries"]) == 10


def test_transform_ascent_command(capsys):
    code, out, _ = run_cli(capsys, "transform-ascent", "--forbid", "cll:4",
                           "--n", "12", "--partition", "2,2,2,2,1,1")
    payload = json.loads(out)
    assert code == 0 and "is_local_maximum" in payload


def test_domain_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "rho", "--input", "/nonexistent/file.g6")
    assert code == 1 and out == ""
    assert json.loads(err)["status"] == "error"


def test_malformed_graph6_is_domain_error(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text(":sparse6\n")
    code, _, err = run_cli(capsys, "planar", "--input", str(f))
    assert code == 1 and "sparse6" in json.loads(err)["message"]


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "no-such-command")[0] == 2
    assert run_cli(capsys, "construct", "--family", "path")[0] == 2  # missing --n


def test_cli_matches_module_results(capsys, tmp_path):
    from spexplanar import spectral_radius

    g = k2_bipartite(9)
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(g) + "\n")
    code, out, _ = run_cli(capsys, "rho", "--input", str(f))
    payload = json.loads(out)
    direct = spectral_radius(g)
    assert payload["rho"] == float(format(direct.rho, ".15g"))
    assert payload["iterations"] == direct.iterations
