"""Named verification suites.

Each suite builds seeded instances, runs exact identity checks and returns a
JSON-ready report whose ``assertions`` list is in a fixed order.  A failing
assertion lists the offending (word, lhs, rhs) triples, or the partition and
both counts for the combinatorial suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .brownian import brownian_vs_convolution, polynomial_identity_check
from .distributions import (
    BT_ROUTES,
    bbp_transform,
    delta1,
    exponent_commutation,
    mult_convolve,
    phi_brownian_identity,
    power_dilation_identities,
)
from .errors import PreconditionError
from .operator_model import DEFAULT_TOL, random_input, verify_phi_model
from .partitions import (
    ENUMERATION_ADVISORY_CAP,
    SetPartition,
    assign_singletons,
    count_ll_above,
    enumerate_nc,
    enumerate_nc_le2,
    extract_pairing,
    in_assignment_image,
    ll_order,
)
from .reports import IdentityReport, compare_series
from .sampling import random_distribution, random_series
from .series import geometric_inverse_combination, invert_eta_to_moments
from .transforms import (
    boolean_cumulants_from_moments,
    free_cumulants_from_moments,
    functional_equation_check,
    ll_one_positions,
    moments_from_boolean_cumulants,
    moments_from_free_cumulants,
    reta,
    reta_inverse,
    reta_inverse_signed,
    reta_scaled_compose,
)

DEFAULT_SEED = 20240607

SEMIGROUP_PAIRS = ((Fraction(1), Fraction(1)), (Fraction(1, 2), Fraction(3, 2)), (Fraction(2), Fraction(3)),
                   (Fraction(0), Fraction(2)))
COMMUTATION_PAIRS = ((Fraction(2), Fraction(3, 4)), (Fraction(3), Fraction(7, 8)), (Fraction(3, 2), Fraction(1, 2)))
RETA_SCALES = (Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3, 4))
BOXTIMES_TIMES = (Fraction(1, 2), Fraction(1), Fraction(2))
POWER_DILATION_TIMES = (Fraction(1, 2), Fraction(2))
BROWNIAN_TIMES = (Fraction(1), Fraction(1, 3))
PHI_TIMES = (Fraction(1, 2), Fraction(1), Fraction(3))


@dataclass
class SuiteParams:
    k: int = 2
    degree: int | None = None
    seed: int = DEFAULT_SEED
    trials: int | None = None
    t: Fraction | None = None
    n: int | None = None
    dim: int = 3
    tolerance: float = DEFAULT_TOL
    model_input: object = None

    def to_dict(self) -> dict:
        out = {"k": self.k, "degree": self.degree, "seed": self.seed, "trials": self.trials,
               "t": None if self.t is None else str(self.t), "n": self.n}
        return out


@dataclass
class SuiteResult:
    suite: str
    params: dict
    assertions: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a["passed"] for a in self.assertions)

    def add(self, report, instance: int | None = None):
        entry = report.to_dict()
        if instance is not None:
            entry = {"instance": instance, **entry}
        self.assertions.append(entry)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "params": self.params,
                "assertion_count": len(self.assertions), "assertions": self.assertions}


def _times(p: SuiteParams, default: Sequence[Fraction]) -> Sequence[Fraction]:
    return default if p.t is None else (p.t,)


def _instances(p: SuiteParams, count: int, degree: int):
    rng = random.Random(p.seed)
    for i in range(p.trials if p.trials is not None else count):
        yield i, random_distribution(rng, p.k, degree)


def suite_semigroup(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    pairs = SEMIGROUP_PAIRS if p.t is None else ((p.t, p.t),)
    for i, mu in _instances(p, 5, degree):
        for s, t in pairs:
            lhs = bbp_transform(bbp_transform(mu, t), s)
            report = compare_series(f"B_{s}(B_{t}(mu)) = B_{s + t}(mu)", lhs.moments, bbp_transform(mu, s + t).moments)
            report.details.update({"s": str(s), "t": str(t)})
            result.add(report, i)
        result.add(compare_series("R-view of B_1(mu) = eta-view of mu", bbp_transform(mu, 1).r, mu.eta), i)


def suite_commutation(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    for i, mu in _instances(p, 3, degree):
        for a, b in COMMUTATION_PAIRS:
            result.add(exponent_commutation(mu, a, b), i)


def suite_reta_iteration(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    rng = random.Random(p.seed)
    scales = RETA_SCALES if p.t is None else (p.t,)
    for i in range(p.trials if p.trials is not None else 3):
        f = random_series(rng, p.k, degree)
        for s in scales:
            result.add(reta_scaled_compose(s, f), i)
        result.add(compare_series("reta(-reta(f)) = -f", reta(-reta(f)), -f), i)
        result.add(compare_series("reta_inverse(g) = -reta(-g) = signed sum", reta_inverse(f), reta_inverse_signed(f)), i)
        result.add(compare_series("reta(reta_inverse(f)) = f", reta(reta_inverse(f)), f), i)
        result.add(compare_series("reta_inverse(reta(f)) = f", reta_inverse(reta(f)), f), i)


def _binomial_count_report(n: int) -> IdentityReport:
    report = IdentityReport(f"binomial count of partitions above pi, n={n}")
    ground = tuple(range(1, n + 1))
    rhos = list(enumerate_nc(ground))
    for blocks in ll_one_positions(n):
        pi = SetPartition([[x + 1 for x in b] for b in blocks], ground)
        tally = [0] * (len(pi) + 1)
        for rho in rhos:
            if len(rho) <= len(pi) and ll_order(pi, rho):
                tally[len(rho)] += 1
        for m in range(1, len(pi) + 1):
            report.checked += 1
            formula = count_ll_above(pi, m)
            if formula != tally[m]:
                report.mismatches.append(_PartitionMismatch(str(pi), m, formula, tally[m]))
    return report


@dataclass(frozen=True)
class _PartitionMismatch:
    partition: str
    block_count: int | None
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {"partition": self.partition, "block_count": self.block_count, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def _check_n(p: SuiteParams, default: int, cap: int) -> int:
    n = p.n if p.n is not None else default
    if not 1 <= n <= cap:
        raise PreconditionError(f"--n must lie in 1..{cap}, got {n}")
    return n


def suite_binomial_count(p: SuiteParams, result: SuiteResult):
    for n in range(1, _check_n(p, 7, 9) + 1):
        result.add(_binomial_count_report(n))


def _alpha_beta_reports(n: int) -> tuple[IdentityReport, IdentityReport]:
    forward = IdentityReport(f"extract_pairing(assign_singletons(rho)) = rho on NC<=2({n})")
    for rho in enumerate_nc_le2(n):
        forward.checked += 1
        back = extract_pairing(assign_singletons(rho))
        if back != rho:
            forward.mismatches.append(_PartitionMismatch(str(rho), None, str(back), str(rho)))
    backward = IdentityReport(f"assign_singletons(extract_pairing(pi)) = pi on the image set, n={n}")
    for pi in enumerate_nc(range(0, n + 2)):
        if not in_assignment_image(pi):
            continue
        backward.checked += 1
        again = assign_singletons(extract_pairing(pi))
        if again != pi:
            backward.mismatches.append(_PartitionMismatch(str(pi), None, str(again), str(pi)))
    return forward, backward


def suite_alpha_beta(p: SuiteParams, result: SuiteResult):
    for n in range(1, _check_n(p, 8, ENUMERATION_ADVISORY_CAP - 2) + 1):
        for report in _alpha_beta_reports(n):
            result.add(report)


def suite_boxtimes_homo(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 5
    rng = random.Random(p.seed)
    for i in range(p.trials if p.trials is not None else 2):
        mu, nu = random_distribution(rng, p.k, degree), random_distribution(rng, p.k, degree)
        result.add(compare_series("mu [x] delta_1 = mu", mult_convolve(mu, delta1(p.k, degree)).moments, mu.moments), i)
        prod = mult_convolve(mu, nu)
        for t in _times(p, BOXTIMES_TIMES):
            lhs = bbp_transform(prod, t)
            rhs = mult_convolve(bbp_transform(mu, t), bbp_transform(nu, t))
            report = compare_series(f"B_t(mu [x] nu) = B_t(mu) [x] B_t(nu), t={t}", lhs.moments, rhs.moments)
            report.details["t"] = str(t)
            result.add(report, i)


def suite_power_dilation(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 5
    rng = random.Random(p.seed)
    for i in range(p.trials if p.trials is not None else 2):
        mu, nu = random_distribution(rng, p.k, degree), random_distribution(rng, p.k, degree)
        for t in _times(p, POWER_DILATION_TIMES):
            result.add(power_dilation_identities(mu, nu, t), i)


def suite_brownian(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    for i, nu in _instances(p, 3, degree):
        for t in _times(p, BROWNIAN_TIMES):
            result.add(brownian_vs_convolution(nu, t), i)
        result.add(polynomial_identity_check(nu), i)


def suite_phi_brownian(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 4
    for i, nu in _instances(p, 3, degree):
        for t in _times(p, PHI_TIMES):
            result.add(phi_brownian_identity(nu, t), i)


def suite_cross_route(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    for i, mu in _instances(p, 3, degree):
        for t in _times(p, (Fraction(1, 2), Fraction(2))):
            base = bbp_transform(mu, t, BT_ROUTES[0]).moments
            for route in BT_ROUTES[1:]:
                report = compare_series(f"B_t routes {BT_ROUTES[0]} = {route}, t={t}", base,
                                        bbp_transform(mu, t, route).moments)
                result.add(report, i)
        m, f = mu.moments, random_series(random.Random(p.seed + i), p.k, degree)
        result.add(compare_series("eta: series algebra = interval-partition recursion",
                                  geometric_inverse_combination(m), boolean_cumulants_from_moments(m)), i)
        result.add(compare_series("moments from eta: series algebra = interval-partition sum",
                                  invert_eta_to_moments(f), moments_from_boolean_cumulants(f)), i)
        result.add(functional_equation_check(mu.r, m), i)
        result.add(compare_series("free cumulant round trip", moments_from_free_cumulants(free_cumulants_from_moments(m)), m), i)


def suite_operator_model(p: SuiteParams, result: SuiteResult):
    degree = p.degree or 6
    if p.model_input is not None:
        report = verify_phi_model(p.model_input, degree, p.tolerance)
        result.assertions.append({"name": "operator model matches Phi(nu)", **report.to_dict()})
        return
    for i in range(p.trials if p.trials is not None else 5):
        seed = p.seed + i
        report = verify_phi_model(random_input(p.dim, p.k, seed), degree, p.tolerance, seed=seed)
        result.assertions.append({"name": f"operator model matches Phi(nu), dim={p.dim}", "instance": i,
                                  **report.to_dict()})


SUITES: dict[str, Callable[[SuiteParams, SuiteResult], None]] = {
    "semigroup": suite_semigroup,
    "commutation": suite_commutation,
    "reta-iteration": suite_reta_iteration,
    "lemma35": suite_binomial_count,
    "boxtimes-homo": suite_boxtimes_homo,
    "power-dilation": suite_power_dilation,
    "brownian": suite_brownian,
    "phi-brownian": suite_phi_brownian,
    "operator-model": suite_operator_model,
    "alpha-beta": suite_alpha_beta,
    "cross-route": suite_cross_route,
}


def run_suite(name: str, params: SuiteParams | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = params or SuiteParams()
    result = SuiteResult(name, params.to_dict())
    SUITES[name](params, result)
    return result
