import json

import numpy as np
import pytest

from whaleopt import benchmarks
from whaleopt.core import DimensionMismatchError, rng_stream

# printed reference values (id, dim, best value at the table's precision)
TABLE_ROWS = {
    "F1": (30, 0.0),
    "F2": (30, 0.0),
    "F3": (30, 0.0),
    "F4": (30, 0.0),
    "F5": (30, 0.0),
    "F6": (30, 0.0),
    "F7": (30, 0.0),
    "F8": (30, -12569.5),
    "F9": (30, 0.0),
    "F10": (30, 0.0),
    "F11": (30, 0.0),
    "F12": (30, 0.0),
    "F13": (30, 0.0),
    "F14": (2, 0.998),
    "F15": (4, 0.0003075),
    "F16": (2, -1.0316),
    "F17": (2, 0.398),
    "F18": (2, 3.0),
    "F19": (3, -3.8628),
    "F20": (6, -3.32),
    "F21": (4, -10.1532),
    "F22": (4, -10.4029),
    "F23": (4, -10.5364),
}


def _decimals(text: float) -> int:
    s = repr(text)
    return len(s.split(".")[1]) if "." in s else 0


class TestRegistry:
    def test_exactly_23_entries_in_order(self):
        entries = benchmarks.registry()
        assert [e.fid for e in entries] == [f"F{i}" for i in range(1, 24)]

    def test_dims_match_table(self):
        for entry in benchmarks.registry():
            assert entry.dim == TABLE_ROWS[entry.fid][0], entry.fid
        assert benchmarks.get("F14").dim == 2

    def test_best_values_match_table_at_printed_precision(self):
        # stored minima are full precision; the table rounds (e.g. -3.32
        # for the 6-d Hartman minimum -3.3223680...)
        for entry in benchmarks.registry():
            printed = TABLE_ROWS[entry.fid][1]
            assert round(entry.best_value, _decimals(printed)) == pytest.approx(
                printed, abs=1e-12
            ), entry.fid

    def test_f20_best_value(self):
        assert round(benchmarks.get("F20").best_value, 2) == -3.32

    def test_categories(self):
        cats = {e.fid: e.category for e in benchmarks.registry()}
        assert cats["F1"] == "uni-modal"
        assert cats["F8"] == "multi-modal"
        assert cats["F15"] == "multi-modal"
        assert cats["F16"] == "compositional"
        assert cats["F23"] == "compositional"

    def test_unknown_id_rejected(self):
        with pytest.raises(KeyError):
            benchmarks.get("F99")

    def test_json_export_roundtrip(self):
        rows = json.loads(benchmarks.registry_json())
        assert len(rows) == 23
        assert rows[13]["id"] == "F14" and rows[13]["dim"] == 2
        assert rows[19]["best_value"] == benchmarks.get("F20").best_value


class TestEvaluate:
    def test_sphere_at_origin(self):
        assert benchmarks.evaluate("F1", np.zeros(30)) == 0.0

    def test_schwefel_at_optimizer(self):
        value = benchmarks.evaluate("F8", np.full(30, 420.9687))
        assert value == pytest.approx(-12569.48, abs=0.1)

    def test_camel_at_optimizer(self):
        value = benchmarks.evaluate("F16", np.array([0.0898, -0.7126]))
        assert value == pytest.approx(-1.0316, abs=1e-4)

    def test_ackley_at_origin_floating_point_floor(self):
        # exact zero input leaves only rounding residue: 2 ulps of 2.22e-16
        value = benchmarks.evaluate("F10", np.zeros(30))
        assert value == 4.440892098500626e-16

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            benchmarks.evaluate("F1", np.zeros(29))

    def test_fidelity_at_stored_optimizers(self):
        # every deterministic entry evaluates at its stored optimizer to
        # its stored minimum
        for entry in benchmarks.registry():
            if entry.optimum is None:
                continue
            assert entry.evaluate(entry.optimum) == pytest.approx(
                entry.best_value, abs=1e-6
            ), entry.fid

    def test_finite_on_random_points(self):
        rng = rng_stream(99)
        for entry in benchmarks.registry():
            lo, hi = entry.space.lower, entry.space.upper
            points = lo + rng.random((10_000 // entry.dim + 50, entry.dim)) * (hi - lo)
            noise = rng_stream(1) if entry.noisy else None
            values = [entry.evaluate(p, noise) for p in points]
            assert np.all(np.isfinite(values)), entry.fid

    def test_even_symmetry(self):
        rng = rng_stream(5)
        for fid in ("F1", "F9", "F10", "F11"):
            entry = benchmarks.get(fid)
            for _ in range(20):
                x = entry.space.lower + rng.random(entry.dim) * (
                    entry.space.upper - entry.space.lower
                )
                assert entry.evaluate(x) == pytest.approx(entry.evaluate(-x), rel=1e-12), fid


class TestQuarticNoise:
    def test_requires_stream(self):
        with pytest.raises(ValueError):
            benchmarks.evaluate("F7", np.zeros(30))

    def test_noise_is_additive_uniform(self):
        rng = rng_stream(8)
        base = benchmarks.get("F7").fn(np.zeros(30))
        assert base == 0.0
        values = [benchmarks.evaluate("F7", np.zeros(30), rng) for _ in range(1000)]
        assert all(0.0 <= v < 1.0 for v in values)
        assert np.mean(values) == pytest.approx(0.5, abs=0.05)

    def test_deterministic_with_seeded_stream(self):
        x = np.full(30, 0.5)
        a = [benchmarks.evaluate("F7", x, rng_stream(3)) for _ in range(3)]
        assert a[0] == a[1] == a[2]

    def test_objective_requires_stream(self):
        with pytest.raises(ValueError):
            benchmarks.get("F7").objective()


class TestConstantTables:
    """Spot values and checksums against the published coefficient tables."""

    def test_foxholes_grid(self):
        a = benchmarks.FOXHOLES_A
        assert a.shape == (2, 25)
        assert a[0, :5].tolist() == [-32.0, -16.0, 0.0, 16.0, 32.0]
        assert a[1, 0] == -32.0 and a[1, 24] == 32.0
        assert a.sum() == 0.0

    def test_kowalik_data(self):
        assert benchmarks.KOWALIK_A.sum() == pytest.approx(1.0312, abs=1e-12)
        assert benchmarks.KOWALIK_A[0] == 0.1957 and benchmarks.KOWALIK_A[-1] == 0.0246
        assert benchmarks.KOWALIK_B[0] == 4.0 and benchmarks.KOWALIK_B[-1] == 0.0625

    def test_hartmann3_tables(self):
        assert benchmarks.HARTMANN3_A.sum() == pytest.approx(176.2, abs=1e-12)
        assert benchmarks.HARTMANN3_P.sum() == pytest.approx(5.441, abs=1e-12)
        assert benchmarks.HARTMANN3_P[0].tolist() == [0.3689, 0.1170, 0.2673]
        assert benchmarks.HARTMANN3_ALPHA.tolist() == [1.0, 1.2, 3.0, 3.2]

    def test_hartmann6_tables(self):
        assert benchmarks.HARTMANN6_A.sum() == pytest.approx(184.7, abs=1e-10)
        assert benchmarks.HARTMANN6_P.sum() == pytest.approx(10.1095, abs=1e-10)
        assert benchmarks.HARTMANN6_A[1, 0] == 0.05
        assert benchmarks.HARTMANN6_P[2, 1] == pytest.approx(0.1451)

    def test_shekel_tables(self):
        assert benchmarks.SHEKEL_A.shape == (10, 4)
        assert benchmarks.SHEKEL_A.sum() == pytest.approx(189.2, abs=1e-10)
        assert benchmarks.SHEKEL_A[9].tolist() == [7.0, 3.6, 7.0, 3.6]
        assert benchmarks.SHEKEL_C.sum() == pytest.approx(3.9, abs=1e-12)
