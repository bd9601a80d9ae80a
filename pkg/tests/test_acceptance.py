"""Acceptance criteria, each checked exactly (zero tolerance).

Every test records a PASS/FAIL line that is printed in the pytest terminal
summary. Running this file directly prints the same lines without pytest.
"""

import io
import sys
import time
from pathlib import Path

import pytest

from arrowspace import SignFlipped
from arrowspace.cli import dispatch
from arrowspace.harness import TrialConfig, run_axiom_suite, run_theorem_suite

GOLDEN = Path(__file__).resolve().parent / "golden"
SEED = 20240601
RESULTS = []

# checks that do 20-100 inner iterations per trial run fewer outer trials
HEAVY_TRIALS = 200


def record(number, title, ok, detail):
    RESULTS.append("ACCEPTANCE %d %s: %s (%s)" % (number, "PASS" if ok else "FAIL", title, detail))
    return ok


def theorems(names, trials, dims=(2,)):
    """Run the named theorem checks; return {name: failures} summed over dims."""
    failures = dict.fromkeys(names, 0)
    for dim in dims:
        report = run_theorem_suite(TrialConfig(trials, dim, SEED), only=names)
        for r in report.results:
            if r.name in failures:
                failures[r.name] += r.failures
    return failures


def summarize(failures):
    bad = {k: v for k, v in failures.items() if v}
    return "%d checks, failures: %s" % (len(failures), bad or "none")


def test_1_axioms():
    start = time.perf_counter()
    failures = 0
    for dim in (1, 2, 3, 4):
        report = run_axiom_suite(TrialConfig(1000, dim, SEED))
        assert len(report.results) == 8
        failures += report.total_failures
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 10
    assert record(1, "axiom suite, 1000 trials x dims 1-4", ok,
                  "failures=%d, %.2fs" % (failures, elapsed))


def test_2_negative_results():
    names = ["scalar.neg_one_not_negation", "arrow.noncommutative",
             "scalar.distributed_sum_undefined"]
    failures = theorems(names, 200, dims=(1, 2, 3))
    assert record(2, "negative results, 200 trials", not any(failures.values()),
                  summarize(failures))


def test_3_arrow_algebra():
    names = ["arrow.associativity", "scalar.associativity", "arrow.identity",
             "scalar.special_values", "arrow.inverse", "scalar.injectivity"]
    failures = theorems(names, 1000)
    assert record(3, "arrow algebra, 1000 trials", not any(failures.values()),
                  summarize(failures))


def test_4_lines():
    light = ["line.pm_one_law", "line.membership", "line.betweenness_trichotomy",
             "line.parallel_on_line"]
    failures = theorems(light, 1000)
    failures.update(theorems(["line.uniqueness"], HEAVY_TRIALS))
    assert record(4, "line suite", not any(failures.values()), summarize(failures))


def test_5_quotient():
    light = ["relation.equivalence_laws", "vector.add_commutative", "vector.add_associative",
             "vector.add_identity", "vector.add_inverse", "vector.scalar_associative",
             "vector.distributes_over_scalars", "vector.distributes_over_vectors",
             "vector.scalar_unit", "vector.paths_agree", "affine.barycenter_paths_agree"]
    failures = theorems(light, 1000)
    failures.update(theorems(["vector.transport_independence"], HEAVY_TRIALS))
    assert record(5, "quotient suite", not any(failures.values()), summarize(failures))


def test_6_affine():
    light = ["affine.projection_orthogonal", "affine.projection_optimal",
             "affine.cauchy_schwarz"]
    failures = theorems(light, 1000)
    failures.update(theorems(["affine.barycenter_origin_independence"], HEAVY_TRIALS))
    assert record(6, "affine suite", not any(failures.values()), summarize(failures))


def test_7_mutation():
    report = run_axiom_suite(TrialConfig(1000, 2, SEED), SignFlipped(),
                             only=["axiom1.positive_definiteness"])
    found = report.result("axiom1.positive_definiteness").failures
    assert record(7, "sign-flipped model detected", found >= 1,
                  "failures=%d of 1000" % found)


def _scene(tmp_path):
    path = tmp_path / "scene.txt"
    path.write_text("dim 2\npoint O 0 0\npoint G 2 0\npoint P 1 3\n"
                    "point A 0 0\npoint B 1 0\npoint C 2 0\npoint D 3 1\n", encoding="utf-8")
    return str(path)


def test_8_cli_golden(tmp_path):
    scene = _scene(tmp_path)
    cases = [
        (["project", "--scene", scene, "--line", "O", "G", "--point", "P"],
         0, "t = 1/2\nW = (1, 0)\nresidual_sq = 9\n", ""),
        (["add", "--scene", scene, "--arrow", "A", "B", "--arrow", "C", "D"],
         2, "", "error: undefined addition: head B != tail C\n"),
        (["check", "--trials", "100", "--dim", "2", "--seed", "1"],
         0, (GOLDEN / "check_trials100_dim2_seed1.txt").read_text(encoding="utf-8"), ""),
    ]
    matched = 0
    for argv, code, out, err in cases:
        stderr = io.StringIO()
        got = dispatch(argv, stderr=stderr)
        matched += got == (code, out) and stderr.getvalue() == err
    assert record(8, "CLI golden transcripts", matched == len(cases),
                  "%d/%d byte-identical" % (matched, len(cases)))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
