import json
import time

import pytest

from src.core.errors import ParseError
from src.core.existential import existential_search
from src.core.generators import gen_single_process_watcher
from src.core.report_generator import ReportGenerator, describe_counterexample
from src.core.simulation import fixed_round_equivalent, fixed_round_simulates
from src.core.symmetry import permute_transducer
from src.formats.report_text import parse_report_text, render_json, render_text
from src.models.report import ExitCode, ReportOutcome
from src.models.symmetry import Permutation
from src.models.verdicts import Counterexample


@pytest.fixture
def generator():
    return ReportGenerator()


def test_simulation_report(asymmetric, generator):
    verdict = fixed_round_simulates(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 1)
    report = generator.simulation_report(["fixed", "-k", "1"], time.perf_counter(), verdict)
    assert report.outcome is ReportOutcome.REFUTED
    assert report.exit_code is ExitCode.REFUTED
    assert report.messages == ["counterexample: x = b, y = 0 (1 rounds)"]
    assert report.elapsed_seconds >= 0


def test_text_report_lines(asymmetric, generator):
    verdict = fixed_round_equivalent(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 2)
    report = generator.equivalence_report(["equiv", "-k", "2"], time.perf_counter(), verdict)
    fields = parse_report_text(render_text(report))
    assert fields["command.0"] == "equiv"
    assert fields["outcome"] == "refuted"
    assert fields["verdicts.equivalent"] == "false"
    assert fields["verdicts.forward.holds"] == "true"
    assert fields["verdicts.forward.counterexample"] == "null"
    assert fields["verdicts.backward.counterexample.x.0"] == "a"
    assert fields["exit_code"] == "1"


def test_json_report(asymmetric, generator):
    verdict = existential_search(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 3)
    report = generator.existential_report(["existential"], time.perf_counter(), verdict)
    data = json.loads(render_json(report))
    assert data["outcome"] == "found"
    assert data["verdicts"]["existential"]["k"] == 2
    assert data["verdicts"]["existential"]["profile_log"][0]["source"] == "computed"
    assert report.messages[-1] == "found k=2; every multiple of 2 also holds"


def test_error_report(generator):
    report = generator.error_report(["fixed"], time.perf_counter(), ParseError("bad", 3, "t1.txt"))
    assert report.exit_code is ExitCode.USAGE
    assert report.verdicts == {"error": "ParseError"}
    assert report.messages == ["t1.txt:3: bad"]


def test_describe_empty_counterexample():
    assert describe_counterexample(Counterexample(x=[], y=[], rounds=0)) == (
        "counterexample: x = ε, y = ε (0 rounds)"
    )


def test_parse_report_text_errors():
    with pytest.raises(ParseError, match="repeated key"):
        parse_report_text("a: 1\na: 2\n")
    with pytest.raises(ParseError):
        parse_report_text("no separator here\n")
    assert parse_report_text("note:\nempty: []\n") == {"note": "", "empty": "[]"}


def test_existential_report_counts_reuse(generator):
    watcher = gen_single_process_watcher(2, 0)
    swapped = permute_transducer(watcher, Permutation.transposition(2))
    verdict = existential_search(swapped, watcher, None, 5)
    report = generator.existential_report(["existential"], time.perf_counter(), verdict)
    assert verdict.reuse_count == 3
    assert "3 of 5 round lengths reused an earlier answer" in report.messages
    assert report.messages[-1] == "no k up to 5; this is a bounded answer"
