import shutil

import pytest

from siegelcount import cli
from siegelcount.census.quartic import enumerate_quartics
from siegelcount.census.runner import RunOptions
from siegelcount.census.table import load_census


def _data(store):
    return ["--data", str(store.root)]


def test_selfcheck_passes(capsys):
    assert cli.main(["selfcheck"]) == cli.EXIT_OK
    assert "PASS" in capsys.readouterr().out


def test_selfcheck_is_deterministic(capsys):
    cli.main(["selfcheck"])
    first = [ln.rsplit(" (", 1)[0] for ln in capsys.readouterr().out.splitlines()]
    cli.main(["selfcheck"])
    second = [ln.rsplit(" (", 1)[0] for ln in capsys.readouterr().out.splitlines()]
    assert first == second


def test_selfcheck_reports_corrupted_character(monkeypatch, capsys):
    real = cli._rational_character
    monkeypatch.setattr(cli, "_rational_character",
                        lambda lam, a, t, g: real(lam, a, t, g) + (1 if tuple(lam)[:2] == (2, 1) else 0))
    assert cli.main(["selfcheck"]) == cli.EXIT_FAIL
    assert "(2, 1" in capsys.readouterr().out


def test_predict(store, capsys):
    assert cli.main(["predict", "--lambda", "11,5,2", "--q", "3", *_data(store)]) == cli.EXIT_OK
    assert "-453600" in capsys.readouterr().out


def test_verify_theorem(store, capsys, tmp_path):
    out = tmp_path / "rows.csv"
    assert cli.main(["verify-theorem", "--q", "2", "3", "--out", str(out), *_data(store)]) == cli.EXIT_OK
    rows = out.read_text().splitlines()
    assert rows[0] == "check,lambda,q,expected,actual,pass"
    assert len(rows) == 29 and all(r.endswith("PASS") for r in rows[1:])


def test_trace_and_dims(store, capsys, tmp_path):
    assert cli.main(["trace", "--lambda", "6,0,0", "--q", "3", *_data(store)]) == cli.EXIT_OK
    assert "-63" in capsys.readouterr().out
    ec = tmp_path / "ec.txt"
    ec.write_text("A2 50 0 -37\nA2 11 11 -4\n")
    assert cli.main(["dims", "--input", str(ec)]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "s_{50,3} = 1" in out and "s_{0,14} = 1" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["no-such-command"])
    assert e.value.code == 2
    assert cli.main(["predict", "--lambda", "3,1,1"]) == cli.EXIT_USAGE


def test_missing_census_is_reported(tmp_path, capsys):
    cfg = cli.RunConfig("trace", [2], [(2, 0, 0)], data=tmp_path)
    store = cfg.store(build=False)
    with pytest.raises(Exception):
        store.get("A3", 2)


def test_build_census_idempotent(tmp_path, capsys):
    args = ["build-census", "--family", "hyper2", "--q", "3", "--data", str(tmp_path)]
    assert cli.main(args) == cli.EXIT_OK
    first = (tmp_path / "hyper2-3.census").read_bytes()
    assert cli.main(args) == cli.EXIT_OK
    assert cli.main(args + ["--force"]) == cli.EXIT_OK
    assert (tmp_path / "hyper2-3.census").read_bytes() == first


def test_worker_count_does_not_change_the_census():
    a = enumerate_quartics(2, RunOptions(workers=1))
    b = enumerate_quartics(2, RunOptions(workers=2))
    assert a.checksum() == b.checksum()


def test_resume_after_partial_run(tmp_path):
    ck = tmp_path / "blocks"
    ck.mkdir()
    full = enumerate_quartics(2, RunOptions(checkpoint_dir=ck))
    parts = sorted(ck.iterdir())
    # pretend the run died halfway: drop the later checkpoints and corrupt one
    for p in parts[len(parts) // 2:]:
        p.unlink()
    parts[0].write_text("garbage\n")
    resumed = enumerate_quartics(2, RunOptions(checkpoint_dir=ck, resume=True))
    assert resumed.checksum() == full.checksum()
    assert load_census(parts[0]).family == "quartic"
