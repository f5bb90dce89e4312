import io
import shutil
import subprocess
import sys

import pytest

from eventf import (Scope, causal_chain, diff_interpretations, find_events,
                    infer_correlations, load, parts_closure, serialize,
                    validate_store)
from eventf.cli import ERRORS, LOAD_FAILURE, OK, USAGE, run
from support import CORPUS, CORPUS_FILES

EMERGENCY = str(CORPUS / "emergency.f.ttl")
FIG_G = str(CORPUS / "fig-g.f.ttl")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def lines(*items):
    return "".join(f"{i}\n" for i in items)


@pytest.fixture(scope="module")
def emergency():
    return load(EMERGENCY)


class TestValidate:
    def test_golden_file_is_clean(self):
        assert call("validate", FIG_G) == (OK, "", "")

    def test_errors_exit_one_and_match_report(self):
        path = CORPUS / "nonconformant.f.ttl"
        code, out, _ = call("validate", path)
        assert code == ERRORS
        assert out == validate_store(load(path)).to_text()

    def test_warnings_only_fail_under_strict(self, tmp_path):
        path = tmp_path / "w.f.ttl"
        path.write_text("@prefix ex: <http://example.org/w/> .\n"
                        "@prefix f: <urn:eventf:vocab#> .\nex:d a f:Description .\n")
        code, out, _ = call("validate", path)
        assert code == OK and out.startswith("WARNING DESC-001 ex:d")
        assert call("validate", "--strict", path)[0] == ERRORS

    def test_ttl_report_format(self):
        code, out, _ = call("validate", "--format", "ttl", CORPUS / "nonconformant.f.ttl")
        assert code == ERRORS and "f-report:" in out

    def test_multiple_files_merge(self, tmp_path):
        ex = "@prefix ex: <http://example.org/m/> .\n@prefix f: <urn:eventf:vocab#> .\n"
        (tmp_path / "a.f.ttl").write_text(ex + "ex:e a f:Event .\n")
        (tmp_path / "b.f.ttl").write_text(ex + "ex:e a f:Event .\nex:o a f:Object .\n")
        (tmp_path / "c.f.ttl").write_text(ex + "ex:e a f:Object .\n")
        assert call("validate", tmp_path / "a.f.ttl", tmp_path / "b.f.ttl")[0] == OK
        code, _, err = call("validate", tmp_path / "a.f.ttl", tmp_path / "c.f.ttl")
        assert code == LOAD_FAILURE and "c.f.ttl:3:1" in err

    def test_files_with_clashing_prefix_labels_merge(self):
        assert call("validate", FIG_G, CORPUS / "handwritten.f.ttl") == (OK, "", "")

    def test_minted_name_collision_across_files(self):
        code, _, err = call("validate", CORPUS / "causality-chain.f.ttl", CORPUS / "correlation.f.ttl")
        assert code == LOAD_FAILURE and "f-inst:causality-1" in err


class TestExitCodes:
    def test_parse_failure(self, tmp_path):
        bad = tmp_path / "bad.f.ttl"
        bad.write_text("ex:x a")
        code, out, err = call("validate", bad)
        assert code == LOAD_FAILURE and out == "" and f"{bad}:1:1:" in err

    def test_missing_file(self, tmp_path):
        assert call("validate", tmp_path / "nope.f.ttl")[0] == LOAD_FAILURE

    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["query", EMERGENCY],
        ["query", EMERGENCY, "--participant", "ex:person-1", "--documenter", "ex:photo-1"],
        ["query", EMERGENCY, "--time-overlap", "yesterday"],
        ["causes", EMERGENCY],
        ["causes", EMERGENCY, "--event", "ex:no-such-event"],
        ["causes", EMERGENCY, "--event", "ex:power-outage-1", "--interpretation", "ex:causality-1"],
        ["diff", EMERGENCY, "--a", "ex:officer-A", "--b", "ex:causality-1"],
        ["check-constraints", EMERGENCY, "--composition", "ex:causality-1"],
    ])
    def test_usage_errors(self, argv):
        code, out, err = call(*argv)
        assert code == USAGE and out == "" and err.startswith("eventf: usage error")


class TestQueries:
    def test_causes_for_officer_a(self):
        code, out, _ = call("causes", EMERGENCY, "--event", "ex:power-outage-1",
                            "--interpretation", "ex:officer-A")
        assert (code, out) == (OK, lines("ex:snapped-power-pole-1"))

    def test_causes_matches_operation(self, emergency):
        for direction in ("ancestors", "descendants"):
            _, out, _ = call("causes", EMERGENCY, "--event", "ex:flooding-1", "--direction", direction)
            expected = causal_chain(emergency, "ex:flooding-1", direction=direction).related
            assert out == lines(*sorted(expected))

    def test_causes_edge_listing(self):
        _, out, _ = call("causes", EMERGENCY, "--event", "ex:power-outage-1", "--edges")
        assert out == lines("ex:power-plant-problem-1 -> ex:power-outage-1 [laws of physics]",
                            "ex:snapped-power-pole-1 -> ex:power-outage-1 [laws of physics]")

    def test_parts_matches_operation(self, emergency):
        _, out, _ = call("parts", EMERGENCY, "--event", "ex:flooding-1")
        assert out == lines(*sorted(parts_closure(emergency, "ex:flooding-1")))
        _, out, _ = call("parts", EMERGENCY, "--event", "ex:rescue-1", "--direction", "wholes")
        assert out == lines("ex:flooding-1")
        _, out, _ = call("parts", EMERGENCY, "--event", "ex:flooding-1", "--interpretation", "ex:officer-A")
        assert out == lines(*sorted(parts_closure(emergency, "ex:flooding-1", Scope("ex:officer-A"))))

    @pytest.mark.parametrize("flag, value, key", [
        ("--participant", "ex:person-1", "participant"),
        ("--documenter", "ex:hotline-call-1", "documenter"),
        ("--interpretant", "dom:EmergencyIncident", "interpretant"),
    ])
    def test_query_matches_operation(self, emergency, flag, value, key):
        code, out, _ = call("query", EMERGENCY, flag, value)
        assert code == OK and out == lines(*find_events(emergency, **{key: value}))

    def test_time_overlap_query(self, emergency):
        from eventf import TimeInterval
        span = "2009-06-10T00:00:00Z/2009-06-11T00:00:00Z"
        _, out, _ = call("query", EMERGENCY, "--time-overlap", span)
        assert out == lines(*find_events(emergency, time_overlap=TimeInterval.from_iso(span)))

    def test_infer_correlations(self, emergency):
        _, out, _ = call("infer-correlations", EMERGENCY)
        (found,) = infer_correlations(emergency)
        assert out == lines(f"{found.events[0]} {found.events[1]} asserted common-causes: "
                            + " ".join(found.common_causes))

    def test_diff(self, emergency):
        code, out, _ = call("diff", EMERGENCY, "--a", "ex:officer-A", "--b", "ex:officer-B")
        d = diff_interpretations(emergency, "ex:officer-A", "ex:officer-B")
        assert code == OK
        assert "shared ex:participation-1\n" in out
        assert out.count("\nonly-a ") + out.startswith("only-a ") == len(d.only_a)
        assert out.endswith("conflict ex:power-outage-1: ex:snapped-power-pole-1 [ex:causality-1]"
                            " vs ex:power-plant-problem-1 [ex:causality-5]\n")

    def test_check_constraints(self):
        code, out, _ = call("check-constraints", EMERGENCY, "--composition", "ex:composition-1")
        assert code == OK and out and all(ln.startswith("SATISFIED ") for ln in out.splitlines())

    def test_violated_constraint_exits_one(self, tmp_path):
        from eventf import DataProperty, TimeInterval
        from eventf.scenarios import emergency_store, june, span
        s = emergency_store()
        (region,) = [r for r in s.entities() if r.startswith("ex:power-outage-1")
                     and s.literal(r, DataProperty.VALUE) is not None
                     and isinstance(s.literal(r, DataProperty.VALUE), TimeInterval)]
        s.clear_literal(region, DataProperty.VALUE)
        s.set_literal(region, DataProperty.VALUE, span(june(13), june(15)))
        path = tmp_path / "v.f.ttl"
        path.write_text(serialize(s))
        code, out, _ = call("check-constraints", path, "--composition", "ex:composition-1")
        assert code == ERRORS and "VIOLATED" in out and "ex:power-outage-1" in out


class TestFmt:
    def test_fmt_twice_is_identical(self, tmp_path):
        path = tmp_path / "h.f.ttl"
        shutil.copy(CORPUS / "handwritten.f.ttl", path)
        assert call("fmt", path)[0] == OK
        first = path.read_bytes()
        assert first == serialize(load(CORPUS / "handwritten.f.ttl")).encode()
        call("fmt", path)
        assert path.read_bytes() == first

    def test_fmt_stdout_leaves_file(self, tmp_path):
        path = tmp_path / "h.f.ttl"
        shutil.copy(CORPUS / "handwritten.f.ttl", path)
        before = path.read_bytes()
        code, out, _ = call("fmt", "--stdout", path)
        assert code == OK and path.read_bytes() == before and out.encode() != before

    def test_canonical_corpus_file_untouched(self, tmp_path):
        path = tmp_path / "g.f.ttl"
        shutil.copy(FIG_G, path)
        call("fmt", path)
        assert path.read_bytes() == (CORPUS / "fig-g.f.ttl").read_bytes()


def test_output_is_deterministic():
    argvs = [("validate", CORPUS / "nonconformant.f.ttl"), ("infer-correlations", EMERGENCY),
             ("causes", EMERGENCY, "--event", "ex:rescue-1", "--edges"),
             ("diff", EMERGENCY, "--a", "ex:officer-A", "--b", "ex:officer-B")]
    for argv in argvs:
        assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eventf", "causes", EMERGENCY,
                           "--event", "ex:power-outage-1", "--interpretation", "ex:officer-B"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "ex:power-plant-problem-1\n"
