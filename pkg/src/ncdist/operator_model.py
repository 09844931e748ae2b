"""Finite-dimensional operator model realizing Phi(nu).

Input: Hermitian d x d matrices a_1..a_k and a unit vector xi on H = C^d.
Output: Hermitian y_j = w_j + x_j + w_j^* on K = C + H^{+k}, with basis order
(Omega_0, v_1(H), ..., v_k(H)).  Here w_j is the rank-one partial isometry
Omega_0 -> Omega_j = v_j(xi) and x_j = 0 + a_j + ... + a_j.  The joint
distribution of the y_j in the state of Omega_0 is Phi(nu) when nu is the
joint distribution of the a_j in the state of xi.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .distributions import Distribution, phi_eta, phi_map
from .errors import PreconditionError
from .gaussian import GaussianRational
from .series import TruncatedSeries, Word, words_of_length, words_up_to

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-12
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ModelInput:
    matrices: tuple[np.ndarray, ...]
    state: np.ndarray

    def __post_init__(self):
        mats = tuple(np.asarray(a, dtype=complex) for a in self.matrices)
        xi = np.asarray(self.state, dtype=complex).reshape(-1)
        if not mats:
            raise PreconditionError("need at least one matrix")
        d = xi.shape[0]
        for j, a in enumerate(mats, start=1):
            if a.shape != (d, d):
                raise PreconditionError(f"a_{j} has shape {a.shape}, expected {(d, d)}")
            dev = np.max(np.abs(a - a.conj().T)) if d else 0.0
            if dev > HERMITIAN_TOL:
                raise PreconditionError(f"a_{j} is not Hermitian (max deviation {dev:.3g})")
        norm = np.linalg.norm(xi)
        if abs(norm - 1) > NORM_TOL:
            raise PreconditionError(f"state vector has norm {norm!r}, expected 1")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "state", xi)

    @property
    def dim(self) -> int:
        return self.state.shape[0]

    @property
    def k(self) -> int:
        return len(self.matrices)


@dataclass(frozen=True)
class ModelOutput:
    y: tuple[np.ndarray, ...]
    w: tuple[np.ndarray, ...]
    x: tuple[np.ndarray, ...]
    omega: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.y[0].shape[0]

    @property
    def k(self) -> int:
        return len(self.y)

    @property
    def vacuum(self) -> np.ndarray:
        return self.omega[0]


def random_input(dim: int, k: int, seed: int) -> ModelInput:
    """Hermitian matrices with real and imaginary parts of entries in [-1, 1], random unit state."""
    rng = np.random.default_rng(seed)
    mats = []
    for _ in range(k):
        b = rng.uniform(-1, 1, (dim, dim)) + 1j * rng.uniform(-1, 1, (dim, dim))
        mats.append((b + b.conj().T) / 2)
    xi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return ModelInput(tuple(mats), xi / np.linalg.norm(xi))


def build_model(inp: ModelInput) -> ModelOutput:
    d, k = inp.dim, inp.k
    size = 1 + k * d
    omega0 = np.zeros(size, dtype=complex)
    omega0[0] = 1
    omegas, ws, xs, ys = [omega0], [], [], []
    for j in range(k):
        om = np.zeros(size, dtype=complex)
        om[1 + j * d:1 + (j + 1) * d] = inp.state
        omegas.append(om)
    for j in range(k):
        w = np.outer(omegas[j + 1], omega0.conj())
        x = np.zeros((size, size), dtype=complex)
        for block in range(k):
            s = 1 + block * d
            x[s:s + d, s:s + d] = inp.matrices[j]
        ws.append(w)
        xs.append(x)
        ys.append(w + x + w.conj().T)
    return ModelOutput(tuple(ys), tuple(ws), tuple(xs), tuple(omegas))


def vector_state_moments(mats, vec: np.ndarray, max_degree: int) -> dict[Word, complex]:
    """<A_{i_1} ... A_{i_n} vec, vec> for every word up to max_degree (right-to-left products)."""
    out = {}
    for w in words_up_to(len(mats), max_degree):
        v = vec
        for i in reversed(w):
            v = mats[i - 1] @ v
        out[w] = complex(np.vdot(vec, v))
    return out


def model_moments(output: ModelOutput, max_degree: int) -> dict[Word, complex]:
    return vector_state_moments(output.y, output.vacuum, max_degree)


def input_moments(inp: ModelInput, max_degree: int) -> dict[Word, complex]:
    return vector_state_moments(inp.matrices, inp.state, max_degree)


def exact_distribution(moments: dict[Word, complex], k: int, degree: int) -> Distribution:
    """Carry floating moments into the exact pipeline as decimal-derived rationals."""
    return Distribution(TruncatedSeries(k, degree, {w: GaussianRational.from_complex(z)
                                                     for w, z in moments.items() if len(w) <= degree}))


def within(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= max(tol, tol * abs(b))


@dataclass
class ModelReport:
    max_degree: int
    tolerance: float
    seed: int | None = None
    moment_failures: list[dict] = field(default_factory=list)
    vector_failures: list[dict] = field(default_factory=list)
    pattern_failures: list[dict] = field(default_factory=list)
    max_delta: float = 0.0
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.moment_failures or self.vector_failures or self.pattern_failures)

    def to_dict(self) -> dict:
        return {
            "passed": self.ok,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "tolerance": self.tolerance,
            "checked": self.checked,
            "max_delta": self.max_delta,
            "moment_failures": self.moment_failures,
            "vector_failures": self.vector_failures,
            "pattern_failures": self.pattern_failures,
        }


def _cx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def transfer_vector(output: ModelOutput, left: int, inner: Word, right: int) -> np.ndarray:
    """w_left^* x_{j_1} ... x_{j_m} w_right Omega_0."""
    v = output.w[right - 1] @ output.vacuum
    for j in reversed(inner):
        v = output.x[j - 1] @ v
    return output.w[left - 1].conj().T @ v


def check_transfer_vectors(output: ModelOutput, nu: dict[Word, complex], max_len: int, tol: float) -> tuple[int, list[dict]]:
    """The vector w_{i'}^* x_J w_{i''} Omega_0 equals delta_{i',i''} nu(X_J) Omega_0."""
    failures, count = [], 0
    k = output.k
    for m in range(0, max_len - 1):
        for inner in words_of_length(k, m):
            for left, right in itertools.product(range(1, k + 1), repeat=2):
                count += 1
                v = transfer_vector(output, left, inner, right)
                lam = (nu[inner] if inner else 1.0) if left == right else 0.0
                expected = lam * output.vacuum
                delta = float(np.max(np.abs(v - expected)))
                if delta > max(tol, tol * abs(lam)):
                    failures.append({"word": ",".join(map(str, (left,) + inner + (right,))),
                                     "lambda": _cx(lam), "delta": delta})
    return count, failures


_RECIPE = re.compile(r"^(sx*w)+$")


def follows_recipe(choice: str) -> bool:
    """Choice string over {'w', 'x', 's'} (s = w^*): consecutive segments w^* x ... x w."""
    return bool(_RECIPE.match(choice))


def _recipe_partition(choice: str):
    blocks, start = [], 0
    for i, c in enumerate(choice):
        if c == "w":
            blocks.append(tuple(range(start, i + 1)))
            start = i + 1
    return tuple(blocks)


def check_patterns(output: ModelOutput, eta: TruncatedSeries, max_len: int, tol: float) -> tuple[int, list[dict]]:
    """Expand each y-word into its 3^n operator choices.

    Choices following the recipe give the eta-coefficients along the matching
    interval partition; every other choice gives 0.
    """
    failures, count = [], 0
    k = output.k
    ops = {"w": output.w, "x": output.x, "s": tuple(a.conj().T for a in output.w)}
    for n in range(1, max_len + 1):
        for word in words_of_length(k, n):
            for choice in itertools.product("wxs", repeat=n):
                choice = "".join(choice)
                count += 1
                v = output.vacuum
                for c, i in zip(reversed(choice), reversed(word)):
                    v = ops[c][i - 1] @ v
                value = complex(np.vdot(output.vacuum, v))
                if follows_recipe(choice):
                    expected = 1
                    for b in _recipe_partition(choice):
                        expected = expected * eta.get(tuple(word[i] for i in b))
                    expected = complex(expected)
                else:
                    expected = 0j
                if not within(value, expected, tol):
                    failures.append({"word": ",".join(map(str, word)), "choice": choice,
                                     "value": _cx(value), "expected": _cx(expected)})
    return count, failures


def verify_phi_model(inp: ModelInput, max_degree: int, tolerance: float = DEFAULT_TOL,
                     pattern_len: int = 5, seed: int | None = None) -> ModelReport:
    """Compare the model's moments with Phi(nu) computed through the exact pipeline."""
    if max_degree < 1:
        raise PreconditionError("max_degree must be >= 1")
    report = ModelReport(max_degree, tolerance, seed)
    output = build_model(inp)
    nu_degree = max(1, max_degree - 2, pattern_len - 2)
    nu_float = input_moments(inp, nu_degree)
    nu = exact_distribution(nu_float, inp.k, nu_degree)
    phi = phi_map(nu)
    got = model_moments(output, max_degree)
    for w, value in got.items():
        report.checked += 1
        expected = complex(phi.moments.get(w))
        delta = abs(value - expected)
        report.max_delta = max(report.max_delta, delta)
        if not within(value, expected, tolerance):
            report.moment_failures.append({"word": ",".join(map(str, w)), "model": _cx(value),
                                           "phi": _cx(expected), "delta": delta})
    if pattern_len:
        count, report.vector_failures = check_transfer_vectors(output, nu_float, pattern_len, tolerance)
        report.checked += count
        count, report.pattern_failures = check_patterns(output, phi_eta(nu), pattern_len, tolerance)
        report.checked += count
    return report

