"""The 23 classical benchmark functions (F1-F23) with standard domains.

Definitions follow the classical suite used throughout the whale
optimization literature: seven uni-modal functions, eight multi-modal
functions of dimension 30, and eight fixed-dimension functions built on
published constant tables. F7 carries an additive uniform noise term that
must be fed from an explicit random stream; everything else is pure.

``best_value`` stores the function's true minimum at double precision;
``optimum`` stores a point attaining it (None for the noisy F7).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import DimensionMismatchError, Objective, SearchSpace

# --- constant tables for the fixed-dimension functions ---

FOXHOLES_A = np.stack(
    [
        np.tile([-32.0, -16.0, 0.0, 16.0, 32.0], 5),
        np.repeat([-32.0, -16.0, 0.0, 16.0, 32.0], 5),
    ]
)

KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])

HARTMANN3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array(
    [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]]
)
HARTMANN3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4387, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.0381, 0.5743, 0.8828],
    ]
)

HARTMANN6_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN6_A = np.array(
    [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ]
)
HARTMANN6_P = 1e-4 * np.array(
    [
        [1312.0, 1696.0, 5569.0, 124.0, 8283.0, 5886.0],
        [2329.0, 4135.0, 8307.0, 3736.0, 1004.0, 9991.0],
        [2348.0, 1451.0, 3522.0, 2883.0, 3047.0, 6650.0],
        [4047.0, 8828.0, 8732.0, 5743.0, 1091.0, 381.0],
    ]
)

SHEKEL_A = np.array(
    [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ]
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


# --- function bodies ---

def sphere(x):
    return float(np.sum(x * x))


def schwefel_2_22(x):
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def schwefel_1_2(x):
    partial = np.cumsum(x)
    return float(np.sum(partial * partial))


def schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def step_quadratic(x):
    shifted = x + 0.5
    return float(np.sum(shifted * shifted))


def quartic_noiseless(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x**4))


def schwefel(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def ackley(x):
    n = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _penalty(x, a, k, m):
    over = np.where(x > a, k * (x - a) ** m, 0.0)
    under = np.where(x < -a, k * (-x - a) ** m, 0.0)
    return np.sum(over + under)


def penalized_1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + _penalty(x, 10.0, 100.0, 4.0))


def penalized_2(x):
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + _penalty(x, 5.0, 100.0, 4.0))


def foxholes(x):
    j = np.arange(1, 26)
    denom = j + (x[0] - FOXHOLES_A[0]) ** 6 + (x[1] - FOXHOLES_A[1]) ** 6
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / denom)))


def kowalik(x):
    model = x[0] * (KOWALIK_B**2 + KOWALIK_B * x[1]) / (KOWALIK_B**2 + KOWALIK_B * x[2] + x[3])
    return float(np.sum((KOWALIK_A - model) ** 2))


def six_hump_camel(x):
    x1, x2 = x
    return float(
        4.0 * x1**2 - 2.1 * x1**4 + x1**6 / 3.0 + x1 * x2 - 4.0 * x2**2 + 4.0 * x2**4
    )


def branin(x):
    x1, x2 = x
    b = 5.1 / (4.0 * np.pi**2)
    c = 5.0 / np.pi
    t = 1.0 / (8.0 * np.pi)
    return float((x2 - b * x1**2 + c * x1 - 6.0) ** 2 + 10.0 * (1.0 - t) * np.cos(x1) + 10.0)


def goldstein_price(x):
    x1, x2 = x
    part1 = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    part2 = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return float(part1 * part2)


def hartmann_3(x):
    inner = np.sum(HARTMANN3_A * (x - HARTMANN3_P) ** 2, axis=1)
    return float(-np.sum(HARTMANN3_ALPHA * np.exp(-inner)))


def hartmann_6(x):
    inner = np.sum(HARTMANN6_A * (x - HARTMANN6_P) ** 2, axis=1)
    return float(-np.sum(HARTMANN6_ALPHA * np.exp(-inner)))


def shekel_5(x):
    return _shekel(x, 5)


def shekel_7(x):
    return _shekel(x, 7)


def shekel_10(x):
    return _shekel(x, 10)


def _shekel(x, m):
    diffs = x - SHEKEL_A[:m]
    return float(-np.sum(1.0 / (np.sum(diffs * diffs, axis=1) + SHEKEL_C[:m])))


@dataclass(frozen=True)
class BenchmarkEntry:
    """One benchmark function plus its metadata."""

    fid: str
    name: str
    category: str
    dim: int
    space: SearchSpace
    best_value: float
    fn: object
    optimum: np.ndarray | None = None
    noisy: bool = False

    def evaluate(self, x: np.ndarray, rng: np.random.Generator | None = None) -> float:
        """Standard function value at x; noisy entries need a stream."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise DimensionMismatchError(
                f"{self.fid} expects dimension {self.dim}, got shape {x.shape}"
            )
        value = self.fn(x)
        if self.noisy:
            if rng is None:
                raise ValueError(f"{self.fid} has a stochastic noise term; pass a random stream")
            value += rng.random()
        return float(value)

    def objective(self, noise_rng: np.random.Generator | None = None, budget: int | None = None) -> Objective:
        """Wrap as a minimization objective; noisy entries bind their stream here."""
        if self.noisy:
            if noise_rng is None:
                raise ValueError(f"{self.fid} needs a dedicated noise stream")
            fn = lambda x: self.fn(x) + noise_rng.random()
        else:
            fn = self.fn
        return Objective(self.space, fn, name=self.fid, budget=budget)


def _cube(dim, lo, hi):
    return SearchSpace.cube(dim, lo, hi)


def registry() -> list[BenchmarkEntry]:
    """All 23 entries, ids F1..F23, in suite order."""
    e = BenchmarkEntry
    uni, multi, comp = "uni-modal", "multi-modal", "compositional"
    return [
        e("F1", "Sphere", uni, 30, _cube(30, -100, 100), 0.0, sphere, np.zeros(30)),
        e("F2", "Schwefel's Problem 2.22", uni, 30, _cube(30, -10, 10), 0.0, schwefel_2_22, np.zeros(30)),
        e("F3", "Schwefel's Problem 1.2", uni, 30, _cube(30, -100, 100), 0.0, schwefel_1_2, np.zeros(30)),
        e("F4", "Schwefel's Problem 2.21", uni, 30, _cube(30, -100, 100), 0.0, schwefel_2_21, np.zeros(30)),
        e("F5", "Generalized Rosenbrock's Function", uni, 30, _cube(30, -30, 30), 0.0, rosenbrock, np.ones(30)),
        e("F6", "Step Function", uni, 30, _cube(30, -100, 100), 0.0, step_quadratic, np.full(30, -0.5)),
        e("F7", "Quartic Function", uni, 30, _cube(30, -1.28, 1.28), 0.0, quartic_noiseless, None, noisy=True),
        e("F8", "Generalized Schwefel's Function", multi, 30, _cube(30, -500, 500), -12569.486618173012, schwefel, np.full(30, 420.968745827907)),
        e("F9", "Generalized Rastrigin's Function", multi, 30, _cube(30, -5.12, 5.12), 0.0, rastrigin, np.zeros(30)),
        e("F10", "Ackley's Function", multi, 30, _cube(30, -32, 32), 0.0, ackley, np.zeros(30)),
        e("F11", "Generalized Griewank's Function", multi, 30, _cube(30, -600, 600), 0.0, griewank, np.zeros(30)),
        e("F12", "Generalized Penalized Function 1", multi, 30, _cube(30, -50, 50), 0.0, penalized_1, np.full(30, -1.0)),
        e("F13", "Generalized Penalized Function 2", multi, 30, _cube(30, -50, 50), 0.0, penalized_2, np.ones(30)),
        e("F14", "Shekel's Foxholes Function", multi, 2, _cube(2, -65.536, 65.536), 0.9980038377944498, foxholes, np.array([-31.97833357139726, -31.978336789414364])),
        e("F15", "Kowalik's Function", multi, 4, _cube(4, -5, 5), 0.0003074859878056051, kowalik, np.array([0.19283345304274813, 0.19083624027597035, 0.12311729907598003, 0.13576599033984466])),
        e("F16", "Six-Hump Camel-Back Function", comp, 2, _cube(2, -5, 5), -1.0316284534898776, six_hump_camel, np.array([0.08984201652927098, -0.7126564013807202])),
        e("F17", "Branin Function", comp, 2, SearchSpace(np.array([-5.0, 0.0]), np.array([10.0, 15.0])), 0.39788735772973816, branin, np.array([np.pi, 2.275])),
        e("F18", "Goldstein-Price Function", comp, 2, _cube(2, -2, 2), 3.0, goldstein_price, np.array([0.0, -1.0])),
        e("F19", "Hartman's Function 1", comp, 3, _cube(3, 0, 1), -3.862779787332663, hartmann_3, np.array([0.11458887552539938, 0.5556488958907866, 0.852546985097816])),
        e("F20", "Hartman's Function 2", comp, 6, _cube(6, 0, 1), -3.3223680114155147, hartmann_6, np.array([0.2016895108007481, 0.15001069354852684, 0.47687397607966353, 0.2753324335427154, 0.31165161773089545, 0.6573005356399204])),
        e("F21", "Shekel's Function 1", comp, 4, _cube(4, 0, 10), -10.153199679058229, shekel_5, np.array([4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425])),
        e("F22", "Shekel's Function 2", comp, 4, _cube(4, 0, 10), -10.402940566818662, shekel_7, np.array([4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923])),
        e("F23", "Shekel's Function 3", comp, 4, _cube(4, 0, 10), -10.536409816692045, shekel_10, np.array([4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975])),
    ]


_BY_ID = {entry.fid: entry for entry in registry()}


def get(fid: str) -> BenchmarkEntry:
    """Look up one entry by id (F1..F23)."""
    try:
        return _BY_ID[fid.upper()]
    except KeyError:
        raise KeyError(f"unknown benchmark id {fid!r}; expected F1..F23") from None


def evaluate(fid: str, x: np.ndarray, rng: np.random.Generator | None = None) -> float:
    """Evaluate one benchmark at x. F7 requires a noise stream."""
    return get(fid).evaluate(x, rng)


def registry_json() -> str:
    """Registry metadata (id, name, category, dim, bounds, best value) as JSON."""
    rows = [
        {
            "id": entry.fid,
            "name": entry.name,
            "category": entry.category,
            "dim": entry.dim,
            "lower": entry.space.lower.tolist(),
            "upper": entry.space.upper.tolist(),
            "best_value": entry.best_value,
        }
        for entry in registry()
    ]
    return json.dumps(rows, indent=2)
