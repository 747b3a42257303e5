import json
import os

import pytest

from epipool.cli import main
from epipool.files import loads_vectors

KB_A_OR_B = "atoms: a b\na b\n"
KB_NOT_A_OR_B = "atoms: a b\n-a b\n"


@pytest.fixture()
def kb_files(tmp_path):
    one = tmp_path / "one.kb"
    one.write_text(KB_A_OR_B)
    two = tmp_path / "two.kb"
    two.write_text(KB_NOT_A_OR_B)
    return one, two


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_pool_decode_query_pipeline(tmp_path, capsys, kb_files):
    one, two = kb_files
    v1 = tmp_path / "v1.json"
    v2 = tmp_path / "v2.json"
    pooled = tmp_path / "pooled.json"

    code, _, _ = run(capsys, "encode", "--space", "max-weak-nonpos", "--kb", str(one), "-o", str(v1))
    assert code == 0
    code, _, _ = run(capsys, "encode", "--space", "max-weak-nonpos", "--kb", str(two), "-o", str(v2))
    assert code == 0

    code, _, _ = run(
        capsys, "pool", "--space", "max-weak-nonpos", str(v1), str(v2), "-o", str(pooled)
    )
    assert code == 0
    doc = loads_vectors(pooled.read_text())
    assert [c for c in doc.vectors[0].coords] == [0, 0, -1, -1]

    code, out, _ = run(
        capsys, "query", "--space", "max-weak-nonpos", "--scorer", "linear",
        "--formula", "b", str(pooled),
    )
    assert code == 0 and "pooled: ENTAILED" in out

    code, out, _ = run(
        capsys, "query", "--space", "max-weak-nonpos", "--scorer", "linear",
        "--formula", "a", str(pooled),
    )
    assert code == 0 and "pooled: NOT-ENTAILED" in out  # questions are not errors

    code, out, _ = run(
        capsys, "decode", "--space", "max-weak-nonpos", str(pooled), "--logical",
        "--prime-implicates",
    )
    assert code == 0
    assert "excluded worlds: 00 10" in out
    assert "worlds remaining: a=0 b=1; a=1 b=1" in out
    assert "prime implicates: b" in out


def test_encode_reports_coordinates_of_the_excluded_world(tmp_path, capsys, kb_files):
    one, _ = kb_files
    out_file = tmp_path / "v.json"
    code, _, _ = run(
        capsys, "encode", "--space", "avg-strict-nonneg", "--kb", str(one), "-o", str(out_file)
    )
    assert code == 0
    doc = loads_vectors(out_file.read_text())
    assert [c for c in doc.vectors[0].coords] == [1, 0, 0, 0]


def test_decode_abstract_listing(tmp_path, capsys, kb_files):
    one, _ = kb_files
    v1 = tmp_path / "v1.json"
    run(capsys, "encode", "--space", "avg-strict-nonneg", "--kb", str(one), "-o", str(v1))
    code, out, _ = run(capsys, "decode", "--space", "avg-strict-nonneg", str(v1))
    assert code == 0 and "{p0}" in out


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, "decode", "--space", "no-such-space", "nothing.json")
    assert code == 2


def test_domain_violation_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "space": "avg-strict-nonneg",
                "n": 2,
                "vectors": [{"name": "v", "coords": ["-1", "0"]}],
            }
        )
    )
    code, _, err = run(capsys, "decode", "--space", "avg-strict-nonneg", str(bad))
    assert code == 3 and "domain violation" in err


def test_space_name_mismatch_is_usage_error(tmp_path, capsys):
    f = tmp_path / "v.json"
    f.write_text(
        json.dumps(
            {"space": "max-strict-reals", "n": 2,
             "vectors": [{"name": "v", "coords": ["1", "1"]}]}
        )
    )
    code, _, _ = run(capsys, "decode", "--space", "avg-strict-nonneg", str(f))
    assert code == 2


def test_verify_sound_space_exit_0(capsys):
    code, out, _ = run(
        capsys, "verify", "--space", "avg-strict-nonneg", "--trials", "200", "--seed", "7"
    )
    assert code == 0 and "verified-on-grid" in out


def test_verify_demo_space_exit_1(capsys):
    code, out, _ = run(
        capsys, "verify", "--space", "example1", "--trials", "100", "--seed", "7"
    )
    assert code == 1 and "falsified-with-witness" in out


def test_falsify_exit_1_with_witness(capsys):
    code, out, _ = run(
        capsys, "falsify", "--candidate", "avg-weak-reals-coordinate", "--trials", "100"
    )
    assert code == 1 and "witness" in out


def test_report_json_byte_identical_across_runs(capsys):
    code1, out1, _ = run(capsys, "report", "--seed", "0xEP00", "--trials", "150")
    code2, out2, _ = run(capsys, "report", "--seed", "0xEP00", "--trials", "150")
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)  # valid JSON document


def test_report_text_mode_and_file_output(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "report", "--trials", "100", "-o", str(target)
    )
    assert code == 0
    assert target.exists() and json.loads(target.read_text())
    assert "totals:" in out


def test_plot_writes_svg(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "plot", "--space", "example1", "--out", str(target),
                       "--resolution", "60")
    assert code == 0
    body = target.read_text()
    assert body.startswith("<?xml") and "<rect" in body and "</svg>" in body


def test_env_seed_override(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("EPIPOOL_SEED", "0x10")
    code, out, _ = run(capsys, "report", "--trials", "60")
    assert code == 0 and '"seed": 16' in out


def test_encode_weighted_levels_roundtrip(tmp_path, capsys):
    target = tmp_path / "w.json"
    code, out, _ = run(
        capsys, "encode", "--space", "weighted-max-reals", "--levels", "2,0,1",
        "--K", "2", "-o", str(target),
    )
    assert code == 0 and "levels 2,0,1" in out
    doc = loads_vectors(target.read_text())
    assert [str(c) for c in doc.vectors[0].coords] == ["3/2", "-1/2", "1/2"]

    code, out, _ = run(
        capsys, "decode", "--space", "weighted-max-reals", "--K", "2",
        "--weighted", str(target),
    )
    assert code == 0 and "levels 2,0,1" in out


def test_encode_requires_exactly_one_source(tmp_path, capsys):
    code, _, err = run(
        capsys, "encode", "--space", "weighted-max-reals", "-o", str(tmp_path / "x.json")
    )
    assert code == 2


def test_pipeline_composes_identically_to_library_oracle(tmp_path, capsys):
    """encode -> pool -> query through the CLI, versus the in-library path,
    exhaustively over all pairs of two-atom states."""
    from epipool.epistemic import EpistemicState, PropertySpace, state_entails, union_states
    from epipool.logic import AtomTable, format_clause, parse_formula
    from epipool.epistemic import induced_clauses

    atoms = AtomTable.of(("a", "b"))
    space = PropertySpace.logical(atoms)
    queries = ["b", "a -> b", "a & b"]
    parsed = {q: parse_formula(q, atoms) for q in queries}

    vec_files = []
    for bits in range(16):
        members = frozenset(i for i in range(4) if bits >> i & 1)
        state = EpistemicState.of(space, members)
        kb_path = tmp_path / f"kb{bits}.kb"
        kb_path.write_text(
            "atoms: a b\n"
            + "".join(format_clause(c, atoms) + "\n" for c in induced_clauses(state))
        )
        v_path = tmp_path / f"v{bits}.json"
        code, _, _ = run(
            capsys, "encode", "--space", "max-weak-nonpos", "--kb", str(kb_path),
            "-o", str(v_path),
        )
        assert code == 0
        vec_files.append((members, v_path))

    pooled_path = tmp_path / "pooled.json"
    for members_s, file_s in vec_files:
        for members_t, file_t in vec_files:
            code, _, _ = run(
                capsys, "pool", "--space", "max-weak-nonpos",
                str(file_s), str(file_t), "-o", str(pooled_path),
            )
            assert code == 0
            union = union_states(
                EpistemicState.of(space, members_s), EpistemicState.of(space, members_t)
            )
            for q in queries:
                code, out, _ = run(
                    capsys, "query", "--space", "max-weak-nonpos",
                    "--scorer", "linear", "--formula", q, str(pooled_path),
                )
                assert code == 0
                cli_answer = "NOT-ENTAILED" not in out
                assert cli_answer == state_entails(union, parsed[q]), (
                    members_s, members_t, q,
                )


def test_max_pooling_min_scorer_pipeline(tmp_path, capsys, kb_files):
    one, two = kb_files
    v1, v2, pooled = (tmp_path / n for n in ("v1.json", "v2.json", "pooled.json"))
    run(capsys, "encode", "--space", "max-strict-reals", "--kb", str(one), "-o", str(v1))
    run(capsys, "encode", "--space", "max-strict-reals", "--kb", str(two), "-o", str(v2))
    doc = loads_vectors(v1.read_text())
    assert [c for c in doc.vectors[0].coords] == [1, -1, -1, -1]
    run(capsys, "pool", "--space", "max-strict-reals", str(v1), str(v2), "-o", str(pooled))
    code, out, _ = run(
        capsys, "query", "--space", "max-strict-reals", "--scorer", "min",
        "--formula", "b", str(pooled),
    )
    assert code == 0 and "pooled: ENTAILED" in out
