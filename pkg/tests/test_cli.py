import subprocess
import sys

import pytest

from conftest import FIXTURES
from graphpart import verify_certificate
from graphpart.cli import RunConfig, main
from graphpart.errors import ConfigError
from graphpart.io import parse_certificate, parse_graph_file

K3 = str(FIXTURES / "k3.gr")
C4 = str(FIXTURES / "c4.txt")


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_yes_on_triangle(capsys):
    status, out, _ = run(capsys, "recognize", "--problem", "monopolar", "--k", "1", "--input", K3)
    assert (status, out.split()[0]) == (0, "YES")


def test_no_on_cycle(capsys):
    status, out, _ = run(capsys, "recognize", "--problem", "monopolar", "--k", "1", "--input", C4)
    assert (status, out.strip()) == (1, "NO")


def test_certificate_written_and_verified(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    status, _, _ = run(capsys, "recognize", "--problem", "subcoloring-total", "--k", "2", "--input", C4, "--certificate", str(cert))
    assert status == 0
    assert verify_certificate(parse_graph_file(C4), parse_certificate(cert), "subcoloring", 2, "total")
    status, out, _ = run(capsys, "verify", "--input", C4, "--certificate", str(cert), "--problem", "subcoloring-total", "--k", "2")
    assert (status, out.strip()) == (0, "VALID")
    status, out, _ = run(capsys, "verify", "--input", C4, "--certificate", str(cert), "--problem", "subcoloring-total", "--k", "1")
    assert (status, out.strip()) == (1, "INVALID")


def test_stats_lines(capsys):
    status, out, _ = run(capsys, "recognize", "--problem", "monopolar", "--k", "2", "--input", C4, "--stats")
    lines = out.split()
    assert status == 0 and lines[0] == "YES"
    assert all("=" in line for line in lines[1:]) and any(line.startswith("max_depth=") for line in lines)


@pytest.mark.parametrize(
    "extra, status",
    [
        (["--problem", "generic-exclusive", "--property-a", "clique", "--property-b", "edgeless"], 1),
        (["--problem", "generic-exclusive", "--property-b", "edgeless", "--method", "cluster-fsg", "--k", "2"], 0),
        (["--problem", "generic-exclusive", "--property-a", "clique", "--property-b", "edgeless", "--method", "small-fsg"], 1),
        (["--problem", "bounded-a", "--k", "2", "--property-a", "any", "--property-b", "edgeless"], 0),
        (["--problem", "subcoloring-ka", "--k", "1"], 0),
    ],
)
def test_generic_modes(capsys, extra, status):
    assert run(capsys, "recognize", "--input", C4, *extra)[0] == status


def test_error_paths_exit_two(capsys, tmp_path):
    status, out, err = run(capsys, "recognize", "--problem", "monopolar", "--input", C4)
    assert status == 2 and "--k" in err and out == ""
    bad = FIXTURES / "malformed" / "vertex_past_n.gr"
    status, _, err = run(capsys, "recognize", "--problem", "monopolar", "--k", "1", "--input", str(bad))
    assert status == 2 and "line 2" in err
    status, _, err = run(capsys, "recognize", "--problem", "monopolar", "--k", "1", "--input", str(tmp_path / "missing"))
    assert status == 2 and err
    status, _, err = run(capsys, "recognize", "--problem", "generic-exclusive", "--property-a", "planar", "--property-b", "edgeless", "--input", C4)
    assert status == 2 and "planar" in err
    assert run(capsys, "recognize", "--problem", "nonsense", "--input", C4)[0] == 2


def test_gen_then_recognize(capsys, tmp_path):
    graph_path, cert_path = tmp_path / "g.gr", tmp_path / "planted.txt"
    status, _, _ = run(capsys, "gen", "--kind", "planted-monopolar", "--n", "50", "--k", "3", "--p", "0.1", "--seed", "2", "--output", str(graph_path), "--certificate", str(cert_path))
    assert status == 0
    assert run(capsys, "verify", "--problem", "monopolar", "--k", "3", "--input", str(graph_path), "--certificate", str(cert_path))[0] == 0
    assert run(capsys, "recognize", "--problem", "monopolar", "--k", "3", "--input", str(graph_path))[0] == 0
    first = graph_path.read_text()
    run(capsys, "gen", "--kind", "planted-monopolar", "--n", "50", "--k", "3", "--p", "0.1", "--seed", "2", "--output", str(graph_path))
    assert graph_path.read_text() == first


def test_gen_gnp_has_no_certificate(capsys, tmp_path):
    status, _, err = run(capsys, "gen", "--kind", "gnp", "--n", "5", "--output", str(tmp_path / "g"), "--certificate", str(tmp_path / "c"))
    assert status == 2 and "no planted certificate" in err


def test_oracle_subcommand(capsys):
    assert run(capsys, "oracle", "--problem", "monopolar", "--k", "1", "--input", C4)[0] == 1
    assert run(capsys, "oracle", "--problem", "generic-exclusive", "--property-a", "clique", "--property-b", "edgeless", "--input", K3)[0] == 0


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig("bounded-a", 2, "x", property_b="edgeless").validate()
    RunConfig("generic-exclusive", 2, "x", property_b="edgeless", method="cluster-fsg").validate()


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "graphpart", "recognize", "--problem", "monopolar", "--k", "1", "--input", K3],
        capture_output=True, text=True,
    )
    assert done.returncode == 0 and done.stdout.strip() == "YES"
