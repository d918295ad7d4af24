import json

import pytest

from supersum.cli import main
from supersum.memo import CACHE_FORMAT, clear_caches
from supersum.osp import poly_P
from supersum.providers import SyntheticProvider, iter_family_keys, write_tsv
from supersum.suites import SuiteConfig, load_provider, run_suite


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


@pytest.mark.parametrize("argv, expected", [
    (["compute", "P", "1", "1/2", "1/2"], "u - v"),
    (["compute", "nabla", "1", "1", "1"], "2*sqrt(6)"),
    (["compute", "closure", "1", "1", "1"], "2*sqrt(3)*u"),
    (["compute", "sixj", "1", "1", "1", "1", "1", "1"], "1/6"),
    (["compute", "qsixj", "1/2", "1/2", "0", "1/2", "1/2", "1", "--q", "2"], "2/5"),
    (["compute", "gamma-product", "1", "1"], "2*u"),
    (["compute", "x", "0", "1", "1", "3/2"], "24"),
    (["compute", "Q", "1/2", "1", "5/2"], "0"),
    (["compute", "nablaS", "1/2", "1/2", "1"], "sqrt(2)"),
])
def test_compute(capsys, argv, expected):
    code, out = _run(capsys, *argv)
    assert code == 0 and out.out.strip() == expected


def test_compute_json(capsys):
    code, out = _run(capsys, "compute", "closure", "1", "1", "1", "--format", "json")
    assert code == 0
    assert json.loads(out.out) == {"symbol": "closure", "args": ["1", "1", "1"], "value": "2*sqrt(3)*u"}


def test_domain_errors_exit_2(capsys):
    code, out = _run(capsys, "compute", "nabla", "1", "1", "3")
    assert code == 2 and "triangle" in out.err
    code, out = _run(capsys, "compute", "sixj", "1", "1")
    assert code == 2
    code, out = _run(capsys, "verify", "zeng")
    assert code == 2 and "provider" in out.err
    code, out = _run(capsys, "lab", "residual", "1", "1", "1", "1", "1", "--provider", "/no/such/file.tsv")
    assert code == 2


def test_verify_exit_codes(capsys):
    code, out = _run(capsys, "verify", "theorems", "--twice-max", "8", "--format", "json")
    report = json.loads(out.out)
    assert code == 0 and report["status"] == "pass" and report["counterexamples"] == []
    assert "wall_time" not in report
    code, out = _run(capsys, "verify", "lab-residuals", "--twice-max", "1", "--provider", "experimental",
                     "--precision", "40")
    assert code == 1


def test_lab_commands(capsys):
    code, out = _run(capsys, "lab", "emit-system", "1/2", "1/2", "1/2", "1/2", "0", "--format", "json")
    system = json.loads(out.out)
    assert code == 0 and system["basis_degree"] == 1 and system["unknowns"] == [0, 1, 2]
    code, out = _run(capsys, "lab", "residual", "1/2", "1/2", "1", "1/2", "1/2", "--provider", "synthetic:3",
                     "--format", "json")
    assert code == 0 and json.loads(out.out)["fixed_spins"] == [1, 1, 2, 1, 1]
    code, out = _run(capsys, "zeng", "check", "1/2", "1/2", "0", "1/2", "1/2", "1/2", "--provider",
                     "synthetic:1")
    assert code == 0


def test_table_validate(tmp_path, capsys):
    provider = SyntheticProvider(2)
    keys = [k for fam in [(1, 1, 1, 1), (2, 2, 2, 2)] for k in iter_family_keys(*fam)]
    good = tmp_path / "good.tsv"
    write_tsv(provider, good, keys)
    code, out = _run(capsys, "table", "validate", str(good))
    assert code == 0
    lines = good.read_text().splitlines()
    last = lines[-1].split("\t")
    last[-1] = "7/3"
    bad = tmp_path / "bad.tsv"
    bad.write_text("\n".join(lines[:-1] + ["\t".join(last)]) + "\n")
    code, out = _run(capsys, "table", "validate", str(bad), "--format", "json")
    assert code == 1 and json.loads(out.out)["findings"]


def test_reports_are_thread_independent():
    cfg1 = SuiteConfig(threads=1, provider=load_provider("synthetic:5"))
    cfg4 = SuiteConfig(threads=4, provider=load_provider("synthetic:5"))
    for name, bound in [("su2-sumrule", 5), ("poly-oracles", 8), ("lab-residuals", 2), ("zeng", 1)]:
        assert run_suite(name, bound, cfg1).to_json() == run_suite(name, bound, cfg4).to_json()


def test_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "memo.bin"
    code, warm = _run(capsys, "verify", "conjecture1", "--twice-max", "8", "--cache", str(cache))
    assert code == 0 and cache.read_bytes().startswith(CACHE_FORMAT)
    expected = poly_P(4, 6, 8)
    clear_caches()
    code, cold = _run(capsys, "verify", "conjecture1", "--twice-max", "8")
    assert cold.out == warm.out
    clear_caches()
    code, reloaded = _run(capsys, "verify", "conjecture1", "--twice-max", "8", "--cache", str(cache))
    assert reloaded.out == warm.out and poly_P(4, 6, 8) == expected
    foreign = tmp_path / "foreign.bin"
    foreign.write_bytes(b"not a cache")
    code, _ = _run(capsys, "verify", "conjecture1", "--twice-max", "4", "--cache", str(foreign))
    assert code == 0
