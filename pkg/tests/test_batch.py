import json
import os

import pytest

from vbridge.batch import (
    CSV_COLUMNS,
    PipelineConfig,
    TableEntry,
    ingest_table,
    render_results,
    run_pipeline,
    write_results,
)
from vbridge.quandle import dihedral_quandle

DATA = os.path.join(os.path.dirname(__file__), "data", "sample_table.tsv")


@pytest.fixture(scope="module")
def records():
    entries, _ = ingest_table(DATA)
    cfg = PipelineConfig(quandles=(dihedral_quandle(3),))
    return {r.name: r for r in run_pipeline(entries, cfg)}


class TestIngest:
    def test_sample_table(self):
        entries, problems = ingest_table(DATA)
        assert problems == []
        assert len(entries) == 20
        assert entries[0] == TableEntry("unknot", ".", 3)
        assert entries[4].name == "k6"
        assert len({e.name for e in entries}) == 20

    def test_problem_lines(self, tmp_path):
        path = tmp_path / "table.tsv"
        path.write_text(
            "# comment\n"
            "\n"
            "good\tO1+U1+\n"
            "no tab here\n"
            "\tO1+U1+\n"
            "good\t.\n"
            "also_good\t.\n"
        )
        entries, problems = ingest_table(path)
        assert [e.name for e in entries] == ["good", "also_good"]
        assert [p.line for p in problems] == [4, 5, 6]
        assert "duplicate" in problems[2].message

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            ingest_table(tmp_path / "nope.tsv")


class TestPipeline:
    def test_all_ok(self, records):
        assert all(r.status == "ok" for r in records.values())

    def test_trefoil_row(self, records):
        r = records["trefoil"]
        assert (r.components, r.chords, r.strands) == (1, 3, 3)
        assert (r.vb_d, r.omega_d, r.seed_set) == (3, 2, (0, 1))
        assert (r.ideal_lb, r.parity_lb) == (2, 2)
        assert r.quandle_counts == {"R3": 9}
        assert r.welded_unknot is None  # three overbridges

    def test_k6_row(self, records):
        r = records["k6"]
        assert (r.components, r.chords, r.strands) == (1, 6, 6)
        assert (r.vb_d, r.omega_d, r.seed_set) == (3, 1, (0,))
        assert r.quandle_counts == {"R3": 3}

    def test_unknot_normalized(self, records):
        # "." gains a kink during normalization, stats describe the result
        r = records["unknot"]
        assert (r.components, r.chords, r.strands, r.vb_d, r.omega_d) == (1, 1, 1, 1, 1)
        assert r.welded_unknot is True

    def test_link_row_skips_knot_analyses(self, records):
        r = records["unlink2"]
        assert (r.components, r.chords, r.omega_d) == (2, 2, 2)
        assert r.ideal_lb is None and r.parity_lb is None
        assert r.welded_unknot is None
        assert r.quandle_counts == {"R3": 9}

    def test_invariant_holds(self, records):
        for r in records.values():
            assert r.omega_d <= r.vb_d
            if r.ideal_lb is not None:
                assert r.ideal_lb <= r.omega_d

    def test_bounds_agree_with_direct_calls(self, records):
        from vbridge.gauss import ensure_tail_per_component, parse_gauss_code
        from vbridge.parity import parity_lower_bound

        entries, _ = ingest_table(DATA)
        for e in entries:
            r = records[e.name]
            if r.parity_lb is None:
                continue
            d = ensure_tail_per_component(parse_gauss_code(e.code))
            assert r.parity_lb == parity_lower_bound(d).bound

    def test_parse_error_record(self):
        recs = run_pipeline([TableEntry("oops", "O1+", 1)])
        [r] = recs
        assert r.status_text == "error(parse)"
        assert r.components is None and r.omega_d is None

    def test_timeout_record(self):
        recs = run_pipeline(
            [TableEntry("slow", "O1-U2-O3-U1-O2-U3-", 1)],
            PipelineConfig(time_limit=0.0),
        )
        assert recs[0].status_text == "timeout"

    def test_exhausted_record(self):
        recs = run_pipeline(
            [TableEntry("capped", "O1-U2-O3-U1-O2-U3-", 1)],
            PipelineConfig(max_k=1),
        )
        assert recs[0].status_text == "error(exhausted)"

    def test_certificates_attached(self):
        recs = run_pipeline(
            [TableEntry("vt", "O1+O2+U1+U2+", 1)],
            PipelineConfig(certificates=True),
        )
        certs = recs[0].certificates
        assert set(certs) == {"sequence", "welded"}
        assert certs["welded"]["final"] == "."
        assert certs["sequence"]["k"] == 1

    def test_results_in_input_order(self):
        entries, _ = ingest_table(DATA)
        for jobs in (1, 4):
            recs = run_pipeline(entries, PipelineConfig(jobs=jobs))
            assert [r.name for r in recs] == [e.name for e in entries]


class TestRendering:
    def test_csv_layout(self):
        entries, _ = ingest_table(DATA)
        text = render_results(run_pipeline(entries[:3]))
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1] == "unknot,1,1,1,1,1,0,1,1,ok,0"
        assert lines[3] == "trefoil,1,3,3,3,2,0;1,2,2,ok,0"
        assert len(lines) == 4

    def test_none_cells_render_empty(self):
        recs = run_pipeline([TableEntry("pair", ".|.", 1)])
        row = render_results(recs).splitlines()[1]
        assert row == "pair,2,2,2,2,2,0;1,,,ok,0"

    def test_csv_deterministic_across_jobs(self):
        entries, _ = ingest_table(DATA)
        texts = {
            render_results(run_pipeline(entries, PipelineConfig(jobs=jobs)))
            for jobs in (1, 4)
        }
        assert len(texts) == 1

    def test_json_carries_timing_and_counts(self):
        entries, _ = ingest_table(DATA)
        cfg = PipelineConfig(quandles=(dihedral_quandle(3),), certificates=True)
        data = json.loads(render_results(run_pipeline(entries[:4], cfg), "json"))
        assert [d["name"] for d in data] == ["unknot", "kink", "trefoil", "vtrefoil"]
        assert all(d["elapsed_ms"] >= 0.0 for d in data)
        assert data[2]["quandle_counts"] == {"R3": 9}
        assert data[3]["certificates"]["welded"]["initial"] == "O1+O2+U1+U2+"
        assert data[2]["status"] == "ok"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_results([], "xml")

    def test_write_results(self, tmp_path):
        recs = run_pipeline([TableEntry("k", "O1+U1+", 1)])
        out = tmp_path / "out.csv"
        text = write_results(recs, "csv", out)
        assert out.read_text() == text
