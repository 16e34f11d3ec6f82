"""Experiment harness: configuration, the reference system, and the runs.

The reference experiment integrates a three-frequency system with
lambda = (1, sqrt 2, 2) (a 1:2 resonance between the first and third
frequency), epsilon^-1 = omega = 70, quartic potential

    U(q) = (0.001 q0 + q11 + q12 + q2 + q3)^4,

initial data q(0) = (1, 0.3 eps, 0.8 eps, -1.1 eps, 0.7 eps),
p(0) = (-0.75, 0.6, 0.7, -0.9, 0.8), stepsize h = 0.01.  Long runs sample
the total energy H, the oscillatory energies I, I_1..I_3, the weighted
combinations I_mu for mu = (1, 0, 2) and (0, sqrt 2, 0), and the modified
energies H*, I*_mu, and write the signed deviations from t = 0 to CSV.
"""

import io
import math
from dataclasses import dataclass

import numpy as np

from .conditions import (check_newcond, check_order2, check_symmetry,
                         check_symplecticity)
from .errors import DivergenceError, DomainError
from .integrator import integrate
from .resonance import nonresonance_margin, resonance_scan
from .schemes import builtin_scheme, sigma
from .system import FrequencyBlock, OscillatorySystem, State

SQRT2 = math.sqrt(2.0)

REFERENCE_LAMBDAS = (1.0, SQRT2, 2.0)
REFERENCE_DIMS = (1, 2, 1, 1)  # block 0 first
REFERENCE_COEFFS = (0.001, 1.0, 1.0, 1.0, 1.0)
DEFAULT_MU_LIST = (("I1+I3", (1.0, 0.0, 2.0)), ("I2", (0.0, SQRT2, 0.0)))

#: Table of expected checker outcomes for the builtin schemes.
TRUTH_TABLE = {
    "ERKN1": {"order2": True, "symmetry": False, "symplecticity": False, "newcond": False},
    "ERKN2": {"order2": True, "symmetry": True, "symplecticity": False, "newcond": False},
    "ERKN3": {"order2": True, "symmetry": True, "symplecticity": True, "newcond": True},
    "ERKN4": {"order2": True, "symmetry": True, "symplecticity": False, "newcond": False},
}


@dataclass
class ExperimentConfig:
    scheme_name: str
    epsilon_inv: float = 70.0
    h: float = 0.01
    t_end: float = 1000.0
    sample_every: int = 100
    lambdas: tuple = REFERENCE_LAMBDAS
    mu_list: tuple = DEFAULT_MU_LIST
    output_path: str = "longrun.csv"
    potential_coeffs: tuple = REFERENCE_COEFFS

    def validate(self):
        if self.h <= 0:
            raise DomainError("h must be positive")
        if self.t_end < self.h:
            raise DomainError("t_end must be >= h")
        if self.sample_every < 1:
            raise DomainError("sample_every must be >= 1")
        return self


_REQUIRED_KEYS = ("scheme_name", "epsilon_inv", "h", "t_end", "sample_every",
                  "lambda", "output_path")


def parse_config(text: str) -> ExperimentConfig:
    """Parse the flat `key = value` config format.

    `#` starts a comment; vectors are comma-separated literals.  Lines of
    the form `mu_<label> = v1, v2, ...` accumulate into mu_list (defaulting
    to the reference pair when absent).  All other keys are required.
    """
    entries = {}
    mu_list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno} is not `key = value`: {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key.startswith("mu_"):
            mu_list.append((key[3:], _parse_vector(value)))
        else:
            entries[key] = value
    missing = [k for k in _REQUIRED_KEYS if k not in entries]
    if missing:
        raise DomainError(f"config is missing required keys: {', '.join(missing)}")
    cfg = ExperimentConfig(
        scheme_name=entries["scheme_name"],
        epsilon_inv=float(entries["epsilon_inv"]),
        h=float(entries["h"]),
        t_end=float(entries["t_end"]),
        sample_every=int(entries["sample_every"]),
        lambdas=_parse_vector(entries["lambda"]),
        output_path=entries["output_path"],
    )
    if mu_list:
        cfg.mu_list = tuple(mu_list)
    if "potential_coeffs" in entries:
        cfg.potential_coeffs = _parse_vector(entries["potential_coeffs"])
    unknown = set(entries) - set(_REQUIRED_KEYS) - {"potential_coeffs"}
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return cfg.validate()


def _parse_vector(value: str) -> tuple:
    return tuple(float(v.strip()) for v in value.split(","))


def read_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def build_reference_system(epsilon_inv: float = 70.0, lambdas=REFERENCE_LAMBDAS,
                           potential_coeffs=REFERENCE_COEFFS):
    """Reference system and initial state (see the module docstring).

    The quartic's linear form is (a . q) with a = potential_coeffs; the
    default couples every component with unit weight (0.001 on the slow
    one). Pass a different coefficient vector to probe alternative
    couplings.
    """
    eps = 1.0 / float(epsilon_inv)
    if len(lambdas) != 3:
        raise DomainError("the reference system has exactly 3 oscillatory frequencies")
    a = np.array(potential_coeffs, dtype=float)
    if a.shape != (5,):
        raise DomainError("potential_coeffs must have length 5")

    def potential(q):
        return float(a @ q) ** 4

    def gradient(q):
        return 4.0 * float(a @ q) ** 3 * a

    blocks = [FrequencyBlock(0.0, REFERENCE_DIMS[0])]
    blocks += [FrequencyBlock(lam, d) for lam, d in zip(lambdas, REFERENCE_DIMS[1:])]
    sys = OscillatorySystem(eps, blocks, potential, gradient)
    q0 = np.array([1.0, 0.3 * eps, 0.8 * eps, -1.1 * eps, 0.7 * eps])
    p0 = np.array([-0.75, 0.6, 0.7, -0.9, 0.8])
    return sys, State(q0, p0)


@dataclass
class EnergySeries:
    """Signed energy deviations from their t = 0 values, one row per sample."""

    labels: list            # error column labels, excluding the leading t
    t: np.ndarray
    errors: np.ndarray      # shape (n_rows, len(labels))

    def column(self, label: str) -> np.ndarray:
        return self.errors[:, self.labels.index(label)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(["t"] + self.labels) + "\n")
        for i in range(self.t.size):
            row = [self.t[i]] + list(self.errors[i])
            buf.write(",".join(repr(float(v)) for v in row) + "\n")
        return buf.getvalue()

    def write_csv(self, path):
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())


def _longrun_observers(scheme, cfg):
    # sigma(xi_j) are constants of the run; hoisting them keeps the modified
    # energies as cheap as the plain ones (and raises on a singular xi before
    # any stepping happens).  modified_energies itself is cross-checked
    # against these columns in the tests.
    sig = np.array([sigma(scheme, cfg.h * lam * cfg.epsilon_inv) for lam in cfg.lambdas])
    lams = np.asarray(cfg.lambdas)

    def block_energies(sys, s):
        return np.array([sys.oscillatory_energy(s, j) for j in range(1, len(lams) + 1)])

    obs = [
        ("err_H", lambda sys, s: sys.total_energy(s)),
        ("err_I", lambda sys, s: sys.total_oscillatory_energy(s)),
    ]
    for j in range(1, len(lams) + 1):
        obs.append((f"err_I{j}", lambda sys, s, j=j: sys.oscillatory_energy(s, j)))
    for label, mu in cfg.mu_list:
        obs.append((f"err_Imu_{label}",
                    lambda sys, s, mu=mu: sys.weighted_oscillatory_energy(s, mu)))
    obs.append(("err_Hstar",
                lambda sys, s: sys.total_energy(s) + (sig - 1.0) @ block_energies(sys, s)))
    for label, mu in cfg.mu_list:
        w = sig * np.asarray(mu) / lams
        obs.append((f"err_Istar_{label}",
                    lambda sys, s, w=w: w @ block_energies(sys, s)))
    return obs


def run_longrun(cfg: ExperimentConfig, write: bool = True) -> EnergySeries:
    """Integrate per the config and return (optionally write) the error series.

    On divergence the rows sampled so far are still written to the output
    path before the error is re-raised, so a partial CSV remains for
    inspection.
    """
    cfg.validate()
    scheme = builtin_scheme(cfg.scheme_name)
    sys, s0 = build_reference_system(cfg.epsilon_inv, cfg.lambdas, cfg.potential_coeffs)
    n_steps = int(round(cfg.t_end / cfg.h))
    observers = _longrun_observers(scheme, cfg)
    try:
        samples = integrate(scheme, sys, cfg.h, s0, n_steps, cfg.sample_every, observers)
    except DivergenceError as err:
        if write and err.last_sample is not None:
            # err.last_sample carries only the final finite row; recover the
            # sampled prefix by rerunning up to that step (row 0 alone when
            # the blow-up happened before the first retained sample).
            n_ok = int(round(err.last_sample[0] / cfg.h))
            if n_ok >= 1:
                partial = _to_series(
                    integrate(scheme, sys, cfg.h, s0, n_ok, cfg.sample_every, observers))
            else:
                partial = EnergySeries(labels=[name for name, _ in observers],
                                       t=np.zeros(1),
                                       errors=np.zeros((1, len(observers))))
            partial.write_csv(cfg.output_path)
        raise
    series = _to_series(samples)
    if write:
        series.write_csv(cfg.output_path)
    return series


def _to_series(samples) -> EnergySeries:
    errors = samples.values - samples.values[0]
    errors[0, :] = 0.0
    return EnergySeries(labels=list(samples.names), t=samples.t, errors=errors)


@dataclass
class ConvergenceReport:
    scheme_name: str
    h_list: list
    errors: list
    slope: float            # nan when degenerate
    exact: bool             # errors at machine precision, slope refused

    @property
    def passed(self) -> bool:
        return self.exact or 1.8 <= self.slope <= 2.2


def run_convergence(scheme_name: str, h_list=(0.02, 0.01, 0.005), t_end: float = 1.0,
                    epsilon_inv: float = 10.0, sys=None, s0=None,
                    scheme=None) -> ConvergenceReport:
    """Self-convergence study: solution error at t_end against a fine reference.

    The reference runs the same scheme at min(h)/50.  The slope is the
    least-squares fit of log(error) against log(h); errors at roundoff
    level are flagged exact instead of fitted.
    """
    h_list = list(h_list)
    if len(h_list) < 3:
        raise DomainError("h_list needs at least 3 entries")
    if any(h_list[i] <= h_list[i + 1] for i in range(len(h_list) - 1)):
        raise DomainError("h_list must be sorted in descending order")
    for h in h_list:
        if abs(t_end / h - round(t_end / h)) > 1e-9:
            raise DomainError(f"h = {h} does not divide t_end = {t_end}")
    if scheme is None:
        scheme = builtin_scheme(scheme_name)
    if sys is None:
        sys, s0 = build_reference_system(epsilon_inv)

    def endpoint(h):
        n = int(round(t_end / h))
        samples = integrate(scheme, sys, h, s0, n, sample_every=n,
                            observers=[("q", lambda _s, st: st.q.copy()),
                                       ("p", lambda _s, st: st.p.copy())])
        q, p = samples.values[-1]
        return np.concatenate([q, p])

    z_ref = endpoint(min(h_list) / 50.0)
    errs = [float(np.max(np.abs(endpoint(h) - z_ref))) for h in h_list]
    if max(errs) < 1e-12:
        return ConvergenceReport(scheme_name, h_list, errs, float("nan"), exact=True)
    slope = float(np.polyfit(np.log(h_list), np.log(errs), 1)[0])
    return ConvergenceReport(scheme_name, h_list, errs, slope, exact=False)


@dataclass
class CheckOutcome:
    reports: list
    expected: dict          # empty for non-builtin schemes
    mismatches: list

    @property
    def matched(self) -> bool:
        return not self.mismatches


def run_checks(scheme_name: str, scheme=None) -> CheckOutcome:
    """Run all four condition checkers; compare builtins to the truth table."""
    if scheme is None:
        scheme = builtin_scheme(scheme_name)
    reports = [
        check_order2(scheme),
        check_symmetry(scheme),
        check_symplecticity(scheme),
        check_newcond(scheme),
    ]
    expected = TRUTH_TABLE.get(scheme_name, {})
    mismatches = [
        r.name for r in reports
        if r.name in expected and r.passed != expected[r.name]
    ]
    return CheckOutcome(reports=reports, expected=expected, mismatches=mismatches)


def run_resonance(lambdas, N: int, tol: float = None, h: float = None,
                  epsilon: float = None) -> str:
    """Human-readable resonance report; the margin line needs both h and epsilon."""
    scan = resonance_scan(lambdas, N, tol)
    lines = [
        f"lambda = ({', '.join(repr(float(v)) for v in lambdas)}), N = {N}, tol = {scan.tol:g}",
        f"resonance module vectors (|k|_1 <= {N}): {len(scan.module_vectors)}",
    ]
    for k in scan.module_vectors:
        lines.append(f"  {k}")
    lines.append(f"class representatives: {len(scan.representatives)}")
    if h is not None and epsilon is not None:
        margin = nonresonance_margin(h, epsilon, lambdas, N, scan)
        lines.append(f"non-resonance margin at h = {h:g}, epsilon = {epsilon:g}: "
                     f"min |sin(h/(2 eps) k.lambda)| / sqrt(h) = {margin:.6g}")
    return "\n".join(lines)
