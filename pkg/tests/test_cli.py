import json

import pytest

from binsort.cli import build_parser, run
from binsort.imaging import load_corpus
from binsort.simulator import scenario_from_corpus, save_scenario
from binsort.taxonomy import BinKind


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["--help"])
    assert exc.value.code == 0
    assert "simulate" in capsys.readouterr().out


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["corpus", "--wat"])
    assert exc.value.code == 2


def test_missing_required_flag_named_in_error(capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["simulate", "--corpus", "c/", "--oracle"])
    assert exc.value.code == 2
    assert "--scenario" in capsys.readouterr().err


def test_train_parses_with_defaults():
    args = build_parser().parse_args(["train", "--corpus", "c/", "--out", "m.bin"])
    assert args.command == "train"
    assert args.seed == 7
    assert args.train_fraction == 0.8


def test_corpus_command_writes_images(tmp_path):
    out = tmp_path / "corpus"
    assert run(["corpus", "--seed", "7", "--per-class", "2", "--out", str(out)]) == 0
    items = load_corpus(out)
    assert len(items) == 16


def test_corpus_is_reproducible_byte_for_byte(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["corpus", "--seed", "3", "--per-class", "1", "--out", str(a)])
    run(["corpus", "--seed", "3", "--per-class", "1", "--out", str(b)])
    files_a = sorted(p.relative_to(a) for p in a.rglob("*.p?m"))
    files_b = sorted(p.relative_to(b) for p in b.rglob("*.p?m"))
    assert files_a == files_b
    for rel in files_a:
        assert (a / rel).read_bytes() == (b / rel).read_bytes()


def test_augment_command_adds_four_variants_per_image(tmp_path):
    src, dst = tmp_path / "src", tmp_path / "dst"
    run(["corpus", "--seed", "1", "--per-class", "1", "--out", str(src)])
    assert run(["augment", "--in", str(src), "--out", str(dst), "--seed", "5"]) == 0
    assert len(load_corpus(dst)) == 8 * 5  # originals + 4 variants each


def test_train_eval_pipeline(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    model_path = tmp_path / "model.bin"
    run(["corpus", "--seed", "7", "--per-class", "8", "--out", str(corpus_dir)])
    assert run(["train", "--corpus", str(corpus_dir), "--out", str(model_path), "--seed", "13"]) == 0
    capsys.readouterr()

    assert run([
        "eval", "--model", str(model_path), "--corpus", str(corpus_dir),
        "--split-seed", "13", "--split", "val", "--json",
    ]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"accuracy", "total", "categories", "confusion"}
    assert report["accuracy"] >= 0.90
    assert len(report["confusion"]) == 8


def test_eval_human_output_prints_accuracy(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    model_path = tmp_path / "model.bin"
    run(["corpus", "--seed", "2", "--per-class", "3", "--out", str(corpus_dir)])
    run(["train", "--corpus", str(corpus_dir), "--out", str(model_path)])
    capsys.readouterr()
    run(["eval", "--model", str(model_path), "--corpus", str(corpus_dir)])
    out = capsys.readouterr().out
    assert "accuracy:" in out
    assert "plastic_bottle" in out


def test_simulate_local_writes_trace(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    run(["corpus", "--seed", "5", "--per-class", "2", "--out", str(corpus_dir)])
    items = load_corpus(corpus_dir)
    scenario = scenario_from_corpus(
        items, seed=4, capacities={BinKind.RECYCLABLE: 50, BinKind.NON_RECYCLABLE: 50}, count=6
    )
    scenario_path = tmp_path / "scenario.json"
    save_scenario(scenario, scenario_path)
    trace_path = tmp_path / "trace.jsonl"

    code = run([
        "simulate", "--scenario", str(scenario_path), "--corpus", str(corpus_dir),
        "--oracle", "--local", "--out", str(trace_path),
    ])
    assert code == 0
    lines = trace_path.read_text().strip().splitlines()
    assert len(lines) == 6
    for line in lines:
        record = json.loads(line)
        assert record["completed"] is True
    assert "cycles completed: 6" in capsys.readouterr().out


def test_simulate_trace_is_deterministic(tmp_path):
    corpus_dir = tmp_path / "corpus"
    run(["corpus", "--seed", "5", "--per-class", "2", "--out", str(corpus_dir)])
    items = load_corpus(corpus_dir)
    scenario = scenario_from_corpus(
        items, seed=4, capacities={BinKind.RECYCLABLE: 50, BinKind.NON_RECYCLABLE: 50}, count=5
    )
    scenario_path = tmp_path / "scenario.json"
    save_scenario(scenario, scenario_path)

    t1, t2 = tmp_path / "t1.jsonl", tmp_path / "t2.jsonl"
    for out in (t1, t2):
        run([
            "simulate", "--scenario", str(scenario_path), "--corpus", str(corpus_dir),
            "--oracle", "--local", "--out", str(out),
        ])
    assert t1.read_bytes() == t2.read_bytes()


def test_missing_scenario_file_is_io_error(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    run(["corpus", "--seed", "5", "--per-class", "1", "--out", str(corpus_dir)])
    code = run([
        "simulate", "--scenario", str(tmp_path / "nope.json"), "--corpus", str(corpus_dir),
        "--oracle", "--local", "--out", str(tmp_path / "t.jsonl"),
    ])
    assert code == 3


def test_bad_model_file_is_runtime_error(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    run(["corpus", "--seed", "5", "--per-class", "1", "--out", str(corpus_dir)])
    bad_model = tmp_path / "bad.bin"
    bad_model.write_bytes(b"not a model")
    code = run(["eval", "--model", str(bad_model), "--corpus", str(corpus_dir)])
    assert code == 1
