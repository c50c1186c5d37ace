import json

from dgskew.cli import main

FLAGSHIP = "[[1,1,0],[1,1,0],[1,1,0]]"


def test_classify_flagship(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["classify", "--matrix", FLAGSHIP, "--out", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "R1c" in text and "NonGorenstein" in text
    payload = json.loads(out.read_text())
    assert payload["case"] == "R1c"
    assert payload["gorenstein"] == "NonGorenstein"


def test_cohomology_identity(capsys):
    rc = main(["cohomology", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]",
               "--max-degree", "8"])
    assert rc == 0
    assert "[1, 0, 0, 0, 0, 0, 0, 0, 0]" in capsys.readouterr().out


def test_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["cohomology", "--matrix", FLAGSHIP, "--out", str(a)])
    main(["cohomology", "--matrix", FLAGSHIP, "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_crosscheck_reports_falsification_exit_code(capsys):
    # the degenerate presentation over-count surfaces as exit status 1
    rc = main(["crosscheck", "--matrix", FLAGSHIP, "--max-degree", "6"])
    assert rc == 1
    assert "FALSIFIED" in capsys.readouterr().out


def test_crosscheck_passes_on_generic_instance(capsys):
    rc = main(["crosscheck", "--matrix", "[[2,1,1],[2,1,1],[2,1,1]]",
               "--max-degree", "6"])
    assert rc == 0


def test_gorenstein_pipeline(capsys):
    rc = main(["gorenstein", "--matrix", FLAGSHIP, "--hom-bound", "5",
               "--int-bound", "8"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "NonGorenstein" in out and "witness" in out


def test_transform_invariance(capsys):
    rc = main(["transform", "--matrix", FLAGSHIP,
               "--transform", "[[0,2,0],[1,0,0],[0,0,3]]", "--max-degree", "5"])
    assert rc == 0


def test_transform_rejects_non_monomial(capsys):
    rc = main(["transform", "--matrix", FLAGSHIP,
               "--transform", "[[1,1,0],[0,1,0],[0,0,1]]"])
    assert rc == 2
    assert "monomial" in capsys.readouterr().err


def test_malformed_matrix_is_usage_error(capsys):
    assert main(["classify", "--matrix", "[[1,2],[3,4]]"]) == 2
    assert main(["classify", "--matrix", "not json"]) == 2
    assert "error" in capsys.readouterr().err


def test_bad_prime_is_usage_error(capsys):
    rc = main(["classify", "--matrix", FLAGSHIP, "--field", "Fp:10"])
    assert rc == 2


def test_rational_entries_as_pairs_and_strings(capsys):
    half_flagship = '[[[1,2],"1/2",0],["1/2","1/2",0],[[1,2],[1,2],0]]'
    rc = main(["classify", "--matrix", half_flagship])
    assert rc == 0
    assert "R1c" in capsys.readouterr().out  # scaling preserves the case
    assert main(["classify", "--matrix", "[[0.5,0,0],[0,1,0],[0,0,1]]"]) == 2


def test_missing_matrix_is_usage_error(capsys):
    assert main(["classify"]) == 2


def test_config_file_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"matrix": json.loads(FLAGSHIP), "max_degree": 4}))
    rc = main(["cohomology", "--config", str(cfg)])
    assert rc == 0
    assert "[1, 2, 3, 4, 5]" in capsys.readouterr().out


def test_env_var_sets_default_field(monkeypatch, capsys):
    monkeypatch.setenv("DGSKEW_FIELD", "Fp:2147483659")
    rc = main(["cohomology", "--matrix", FLAGSHIP, "--max-degree", "4"])
    assert rc == 0
    assert "[1, 2, 3, 4, 5]" in capsys.readouterr().out


def test_verify_dg_subcommand(capsys):
    rc = main(["verify-dg", "--matrix", FLAGSHIP, "--max-degree", "5"])
    assert rc == 0
    assert "pass" in capsys.readouterr().out


def test_suite_subset(capsys):
    rc = main(["paper-suite", "--criteria", "5"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "criterion  5" in out and "PASS" in out
