"""Parameter sweeps, verification runs, and table emission.

Every figure-style dataset is produced here as a column-labeled table
with the fully resolved configuration echoed in the metadata, so any
output can be reproduced from its own header.
"""

from __future__ import annotations

import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import fock
from . import landau
from .complexity import (
    PhysicalParams,
    complexity,
    complexity_rate,
    covariance_g,
    high_T_rate_limit,
    lloyd_check,
    oscillation_amplitude,
)

__all__ = [
    "SweepRange",
    "SweepConfig",
    "SweepTable",
    "run_time_series",
    "run_beta_sweep",
    "run_omega_sweep",
    "run_lloyd",
    "run_verify",
    "finite_difference_rate",
]

MODES = ("time-series", "beta-sweep", "omega-sweep", "lloyd", "verify")


@dataclass(frozen=True)
class SweepRange:
    start: float
    stop: float
    count: int
    log: bool = False

    def __post_init__(self):
        if self.count < 2:
            raise ValueError(f"count must be at least 2, got {self.count}")
        if not self.start < self.stop:
            raise ValueError(f"start must be less than stop, got {self.start} >= {self.stop}")
        if self.log and self.start <= 0:
            raise ValueError("log-spaced range requires start > 0")

    def grid(self) -> np.ndarray:
        if self.log:
            return np.logspace(math.log10(self.start), math.log10(self.stop), self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    params: PhysicalParams = PhysicalParams()
    betas: tuple = (math.inf, 1.0, 0.0)
    range_: SweepRange | None = None
    samples_per_period: int = 256
    fock_dim: int = 60

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    def to_dict(self) -> dict:
        d = {
            "mode": self.mode,
            "hbar": self.params.hbar,
            "mass": self.params.mass,
            "omega": self.params.omega,
            "omega_ref": self.params.omega_ref,
            "beta": self.params.beta if math.isfinite(self.params.beta) else "inf",
            "betas": [b if math.isfinite(b) else "inf" for b in self.betas],
            "samples_per_period": self.samples_per_period,
            "fock_dim": self.fock_dim,
        }
        if self.range_ is not None:
            d["range"] = {
                "start": self.range_.start,
                "stop": self.range_.stop,
                "count": self.range_.count,
                "log": self.range_.log,
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        def _beta(v):
            return math.inf if v == "inf" else float(v)

        rng = None
        if "range" in d:
            r = d["range"]
            rng = SweepRange(float(r["start"]), float(r["stop"]), int(r["count"]), bool(r["log"]))
        params = PhysicalParams(
            hbar=float(d["hbar"]),
            mass=float(d["mass"]),
            omega=float(d["omega"]),
            omega_ref=float(d["omega_ref"]),
            beta=_beta(d["beta"]),
        )
        return cls(
            mode=d["mode"],
            params=params,
            betas=tuple(_beta(b) for b in d["betas"]),
            range_=rng,
            samples_per_period=int(d["samples_per_period"]),
            fock_dim=int(d["fock_dim"]),
        )


@dataclass
class SweepTable:
    columns: list  # list of (name, unit)
    rows: list  # list of tuples of floats
    metadata: dict = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        idx = [c[0] for c in self.columns].index(name)
        return np.array([row[idx] for row in self.rows])

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, value in self.metadata.items():
            buf.write(f"# {key}={_fmt_meta(value)}\n")
        buf.write(",".join(f"{name} ({unit})" for name, unit in self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "columns": [{"name": n, "unit": u} for n, u in self.columns],
                "rows": [[_json_val(v) for v in row] for row in self.rows],
                "metadata": self.metadata,
            },
            indent=2,
        )


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    return format(float(v), ".17g")


def _fmt_meta(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_val(v):
    # JSON has no Infinity literal; keep output loadable everywhere
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def _beta_label(beta: float) -> str:
    return "inf" if math.isinf(beta) else format(beta, "g")


def _workers() -> int:
    env = os.environ.get("TFD_SEED_THREADS")
    if env is None:
        return 1
    return max(1, int(env))


def _map_indexed(fn, items):
    """Evaluate fn over items, in parallel if allowed; output order by index."""
    n = _workers()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _base_metadata(config: SweepConfig) -> dict:
    return {"config": json.dumps(config.to_dict(), sort_keys=True)}


def run_time_series(config: SweepConfig) -> SweepTable:
    """Complexity and rate over (at least) two periods for each beta.

    beta = inf is evaluated exactly at zero temperature; beta = 0 uses
    the closed-form infinite-temperature limits (the complexity column
    is the divergent limit, emitted as inf and flagged in metadata).
    """
    p = config.params
    if config.range_ is not None:
        ts = config.range_.grid()
    else:
        ts = np.linspace(0.0, 2.0 * p.period, 2 * config.samples_per_period)
    columns = [("t", "time")]
    series = []
    for beta in config.betas:
        columns.append((f"complexity[beta={_beta_label(beta)}]", "dimensionless"))
        columns.append((f"rate[beta={_beta_label(beta)}]", "1/time"))
        if beta == 0.0:
            comp = [math.inf] * len(ts)
            rate = [high_T_rate_limit(t, p.omega, p.omega_ref) for t in ts]
        else:
            pb = p.with_(beta=beta)
            comp = _map_indexed(lambda t, pb=pb: complexity(t, pb), ts)
            rate = _map_indexed(lambda t, pb=pb: complexity_rate(t, pb), ts)
        series.append((comp, rate))
    rows = []
    for i, t in enumerate(ts):
        row = [float(t)]
        for comp, rate in series:
            row.extend((comp[i], rate[i]))
        rows.append(tuple(row))
    meta = _base_metadata(config)
    if any(b == 0.0 for b in config.betas):
        meta["beta0_note"] = "complexity column is the divergent high-temperature limit (inf); rate from the closed-form limit"
    return SweepTable(columns=columns, rows=rows, metadata=meta)


def run_beta_sweep(config: SweepConfig) -> SweepTable:
    """Half-period complexity and oscillation amplitude over a beta grid."""
    rng = config.range_ or SweepRange(1e-2, 1e2, 64, log=True)
    p = config.params

    def point(beta):
        pb = p.with_(beta=float(beta))
        half = math.pi / (2.0 * pb.omega)
        return (float(beta), complexity(half, pb), oscillation_amplitude(pb))

    rows = _map_indexed(point, rng.grid())
    return SweepTable(
        columns=[("beta", "1/energy"), ("complexity_half_period", "dimensionless"), ("amplitude", "dimensionless")],
        rows=rows,
        metadata=_base_metadata(config),
    )


def run_omega_sweep(config: SweepConfig) -> SweepTable:
    """Half-period complexity and amplitude over an omega grid at fixed beta."""
    rng = config.range_ or SweepRange(1e-2, 1e2, 64, log=True)
    p = config.params

    def point(omega):
        pw = p.with_(omega=float(omega))
        half = math.pi / (2.0 * pw.omega)
        return (float(omega), complexity(half, pw), oscillation_amplitude(pw))

    rows = _map_indexed(point, rng.grid())
    return SweepTable(
        columns=[("omega", "1/time"), ("complexity_half_period", "dimensionless"), ("amplitude", "dimensionless")],
        rows=rows,
        metadata=_base_metadata(config),
    )


def run_lloyd(config: SweepConfig) -> SweepTable:
    """Maximum complexity rate against the energy bound over a beta grid."""
    rng = config.range_ or SweepRange(1e-2, 1e2, 25, log=True)
    p = config.params

    def point(beta):
        res = lloyd_check(p.with_(beta=float(beta)))
        return (float(beta), res.max_rate, res.bound, res.satisfied)

    rows = _map_indexed(point, rng.grid())
    return SweepTable(
        columns=[("beta", "1/energy"), ("max_rate", "1/time"), ("bound", "1/time"), ("satisfied", "bool")],
        rows=rows,
        metadata=_base_metadata(config),
    )


def finite_difference_rate(t: float, params: PhysicalParams, step: float | None = None) -> float:
    """4th-order central finite difference of the complexity in time."""
    h = step if step is not None else 1e-5 * params.period
    f = lambda s: complexity(s, params)
    return (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h)


def run_verify(config: SweepConfig) -> fock.OracleReport:
    """Aggregate every closed-form-vs-oracle check into one report."""
    p = config.params
    report = fock.OracleReport()

    # Laguerre orthogonality against Gamma(n+ell+1)/n! * delta_nm
    dev = 0.0
    for ell in range(5):
        for n in range(5):
            for m in range(5):
                got = landau.laguerre_norm_integral(n, m, ell)
                want = math.exp(math.lgamma(n + ell + 1) - math.lgamma(n + 1)) if n == m else 0.0
                dev = max(dev, abs(got - want))
    report.add("laguerre orthogonality", dev, 1e-9)

    # wavefunction Gram matrix for n + |ell| <= 4
    states = [
        landau.QuantumNumbers(n, ell)
        for n in range(5)
        for ell in range(-n, 5 - n)
        if n + abs(ell) <= 4
    ]
    gram = landau.wavefunction_gram(states, p)
    report.add("wavefunction orthonormality", np.max(np.abs(gram - np.eye(len(states)))), 1e-8)

    # ladder-operator coefficients by the finite-difference oracle
    cases = [
        (landau.QuantumNumbers(1, 0), "a_dagger", math.sqrt(2.0)),
        (landau.QuantumNumbers(0, 2), "b_dagger", math.sqrt(3.0)),
        (landau.QuantumNumbers(2, 0), "a", math.sqrt(2.0)),
        (landau.QuantumNumbers(1, 1), "b", math.sqrt(2.0)),
    ]
    dev = max(abs(landau.ladder_action_check(q, which, p) - want) for q, which, want in cases)
    report.add("ladder-operator coefficients", dev, 1e-4)

    # commutators on the truncated space
    for check in fock.commutator_report(config.fock_dim).checks:
        report.checks.append(check)

    # covariance blocks: brute force vs closed form
    dev = 0.0
    period = p.period
    for bho in (1.0, 2.0, 4.0):
        pb = p.with_(beta=bho / (p.hbar * p.omega))
        for t in np.linspace(0.0, period, 9):
            g_p, g_m = fock.oracle_covariance_1pm(t, pb, config.fock_dim)
            closed = covariance_g(t, pb)
            dev = max(dev, np.max(np.abs(g_p - closed.block_1p)), np.max(np.abs(g_m - closed.block_1m)))
    report.add("covariance oracle vs closed form", dev, 1e-8)

    # analytic rate vs finite differences
    dev = 0.0
    for bho in (0.5, 2.0, 8.0):
        for omega in (0.1, 0.5, 2.0):
            pb = p.with_(omega=omega, beta=bho / (p.hbar * omega))
            for t in np.linspace(0.05, 0.95, 6) * pb.period:
                analytic = complexity_rate(t, pb)
                fd = finite_difference_rate(t, pb)
                dev = max(dev, abs(analytic - fd) / max(abs(fd), 1e-3))
    report.add("rate vs finite differences (relative)", dev, 1e-6)
    return report
