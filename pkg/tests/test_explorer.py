import json
import math
import re
from pathlib import Path

import numpy as np
import pytest

from lapspec.errors import ParseError
from lapspec.explorer import (
    ConjectureReport,
    TrialConfig,
    emit_figure,
    run_conjecture,
    run_verify_suite,
    sample_digraph,
    sample_standardized,
    trial_rng,
)
from lapspec.explorer.figures import figure_svg
from lapspec.graph import complete_digraph, cycle_digraph, is_hamiltonian_cycle
from lapspec.io import read_matrix, write_digraph, write_matrix
from lapspec.laplacian import validate
from lapspec.linalg import eigenvalues
from lapspec.region import prop1_excess

GOLDEN = Path(__file__).parent / "golden"


class TestSampling:
    def test_density_zero(self):
        assert not sample_standardized(5, trial_rng(0, 0), density=0).matrix.any()

    def test_reproducible(self):
        a = sample_standardized(2, trial_rng(7, 3)).matrix
        b = sample_standardized(2, trial_rng(7, 3)).matrix
        np.testing.assert_array_equal(a, b)
        assert np.all(a.sum(axis=1) == 0)

    def test_trials_independent_streams(self):
        a = sample_standardized(4, trial_rng(7, 3)).matrix
        b = sample_standardized(4, trial_rng(7, 4)).matrix
        assert not np.array_equal(a, b)

    def test_mean_diagonal(self):
        n, count = 4, 100_000
        rng = trial_rng(11, 0)
        from lapspec.explorer.sampling import sample_offdiagonal
        diag = np.array([np.diag(sample_offdiagonal(n, rng))[0] for _ in range(count)])
        expect = (n - 1) / (2 * n)
        sigma = math.sqrt((n - 1) / (12 * n * n)) / math.sqrt(count)
        assert abs(diag.mean() - expect) <= 3 * sigma

    @pytest.mark.parametrize("density", [0.0, 0.3, 1.0])
    def test_valid(self, density):
        for t in range(50):
            validate(sample_standardized(7, trial_rng(1, t), density=density).matrix)

    def test_levels_exact(self):
        lap = sample_standardized(5, trial_rng(2, 2), levels=4)
        assert lap.is_exact and all(x.denominator in (1, 2, 4, 5, 10, 20) for x in lap.exact.flat)

    def test_digraph_extremes(self):
        assert len(sample_digraph(4, trial_rng(0, 0), density=1.0).arcs) == 12
        assert sample_digraph(4, trial_rng(0, 0), density=0.0).arcs == ()

    def test_digraph_replay(self):
        a = sample_digraph(5, np.random.default_rng(9), density=0.3)
        b = sample_digraph(5, np.random.default_rng(9), density=0.3)
        assert a == b and 0 < len(a.arcs) < 20
        assert all(0 < w <= 1 for *_, w in a.arcs)


class TestConjecture:
    def test_n3(self):
        rep = run_conjecture(TrialConfig(n=3, trials=1000, seed=1))
        assert rep.violation_count == 0 and rep.region_r_failures == 0
        assert rep.eigenvalues_tested == 3000

    def test_n2_real_spectrum(self):
        cfg = TrialConfig(n=2, trials=500, seed=5)
        for t in range(cfg.trials):
            ev = eigenvalues(sample_standardized(2, trial_rng(5, t)).matrix).eigenvalues
            assert np.all(ev.imag == 0) and np.all((ev.real >= -1e-15) & (ev.real <= 1 + 1e-15))
        assert run_conjecture(cfg).clean

    def test_n8(self):
        rep = run_conjecture(TrialConfig(n=8, trials=10_000, seed=42))
        assert rep.violation_count == 0 and rep.clean and rep.no_convergence == 0

    def test_sparse_mode(self):
        rep = run_conjecture(TrialConfig(n=6, trials=2000, seed=3, density=0.3, mode="sparse-digraph"))
        assert rep.clean

    def test_invariant_and_thread_independence(self):
        cfg = TrialConfig(n=5, trials=3000, seed=9, density=0.5, mode="sparse-digraph")
        one = run_conjecture(cfg, threads=1)
        four = run_conjecture(cfg, threads=4)
        assert one.to_json() == four.to_json()
        d = json.loads(one.to_json())
        assert d["inside"] + d["violations"] == d["eigenvalues_tested"]
        assert "runtime" not in d

    def test_violations_persisted(self, tmp_path):
        # a negative tolerance shrinks S, so boundary eigenvalues (0) count as outside
        cfg = TrialConfig(n=4, trials=3, seed=2, geo_tol=-1e-3)
        rep = run_conjecture(cfg, out_dir=tmp_path)
        assert rep.violation_count == len(rep.violations) > 0
        for v in rep.violations:
            stub = json.loads((tmp_path / v["matrix_file"]).with_suffix(".json").read_text())
            m = read_matrix(tmp_path / v["matrix_file"])
            ev = eigenvalues(m).eigenvalues
            assert np.min(np.abs(ev - complex(stub["re"], stub["im"]))) < 1e-12
            np.testing.assert_array_equal(m, sample_standardized(4, trial_rng(2, v["trial"])).matrix)

    def test_no_files_without_violations(self, tmp_path):
        run_conjecture(TrialConfig(n=4, trials=10, seed=0), out_dir=tmp_path / "v")
        assert not (tmp_path / "v").exists()

    def test_merge_commutes(self):
        cfg = TrialConfig(n=3, trials=1)
        a = ConjectureReport(cfg, 3, 2, 0.1, 0, -1.0, 0, [{"trial": 5, "index": 0, "distance": 0.1}])
        b = ConjectureReport(cfg, 6, 6, -0.2, 0, -0.5, 1, [{"trial": 1, "index": 2, "distance": 0.0}])
        import copy
        ab = copy.deepcopy(a).merge(copy.deepcopy(b))
        ba = copy.deepcopy(b).merge(copy.deepcopy(a))
        assert ab.to_json() == ba.to_json()

    @pytest.mark.parametrize("kwargs", [dict(n=1, trials=1), dict(n=3, trials=0),
                                        dict(n=3, trials=1, mode="other"), dict(n=3, trials=1, density=2)])
    def test_config_invalid(self, kwargs):
        with pytest.raises(ValueError):
            TrialConfig(**kwargs)


class TestSuite:
    def test_cycle_file(self, tmp_path):
        write_digraph(cycle_digraph(7), tmp_path / "c7.tsv")
        for exact in (False, True):
            rep = run_verify_suite(tmp_path / "c7.tsv", exact=exact)
            assert rep.passed
            assert any(c.name.startswith("hamiltonian_extremal:") for c in rep.checks)
        assert any(c.name.startswith("charpoly_identities:") for c in rep.checks)

    def test_complete_file(self, tmp_path):
        write_digraph(complete_digraph(4), tmp_path / "k4.tsv")
        rep = run_verify_suite(tmp_path / "k4.tsv", exact=True)
        assert rep.passed
        assert rep.witnesses["multiplicities"]["algebraic"]["L"] == (1, 3)

    def test_matrix_file(self, tmp_path):
        write_matrix(sample_standardized(6, trial_rng(4, 4), density=0.5), tmp_path / "m.csv")
        assert run_verify_suite(tmp_path / "m.csv").passed

    def test_malformed(self, tmp_path):
        (tmp_path / "bad.tsv").write_text("3 1\n0 1 1\n1 2 oops\n")
        with pytest.raises(ParseError) as err:
            run_verify_suite(tmp_path / "bad.tsv")
        assert err.value.line == 3

    def test_unknown_suffix(self, tmp_path):
        (tmp_path / "g.txt").write_text("")
        with pytest.raises(ParseError):
            run_verify_suite(tmp_path / "g.txt")


class TestFigures:
    @pytest.mark.parametrize("kind", ["region", "polygon", "cycloid", "overlay"])
    def test_deterministic(self, kind, tmp_path):
        a = emit_figure(kind, 6, tmp_path / "a.svg", samples=20).read_bytes()
        b = emit_figure(kind, 6, tmp_path / "b.svg", samples=20).read_bytes()
        assert a == b
        text = a.decode()
        assert 'viewBox="0 0 800 500"' in text and "<pattern" in text

    def test_golden(self):
        assert figure_svg("polygon", 5) == (GOLDEN / "polygon_n5.svg").read_text()
        assert figure_svg("cycloid", 4) == (GOLDEN / "cycloid_n4.svg").read_text()

    def test_overlay_dots(self):
        text = figure_svg("overlay", 7, samples=10)
        assert text.count('r="2"') == 70
        assert 'fill="url(#hatch)"' in text

    def test_region_path_closed(self):
        text = figure_svg("region", 7)
        paths = re.findall(r'<path d="([^"]+)"', text)
        assert len(paths) == 1 and paths[0].endswith("Z")

    def test_region_boundary_constants(self):
        from lapspec.region import boundary_by_rays
        pts = boundary_by_rays(lambda z: prop1_excess(7, z), 1 - 1 / 7)
        assert np.max(np.abs(prop1_excess(7, pts))) < 1e-12

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            figure_svg("histogram", 4)
