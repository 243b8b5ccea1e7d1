"""Truncated-Fock-space oracle.

Dense matrices for the ladder operators and the Hamiltonian, the
a-sector of the time-evolved TFD state, and brute-force expectation
values that cross-check the closed-form covariance blocks.  Everything
here is deliberately independent of the closed forms it validates.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field, asdict

import numpy as np

from .complexity import PhysicalParams

__all__ = [
    "TruncatedOperator",
    "TwoModeState",
    "CheckResult",
    "OracleReport",
    "ladder_matrix",
    "hamiltonian_matrix",
    "tfd_a_sector_state",
    "oracle_covariance_1pm",
    "commutator_report",
]

_MAX_DIM = 128


@dataclass(frozen=True)
class TruncatedOperator:
    """A single-mode operator truncated to an N-dimensional Fock space."""

    dim: int
    entries: np.ndarray
    label: str


@dataclass(frozen=True)
class TwoModeState:
    """Two-mode state with amplitudes c[n, n'] over |n>_L |n'>_R."""

    dim: int
    amplitudes: np.ndarray
    norm_deficit: float


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool


@dataclass
class OracleReport:
    """Pass/fail record of brute-force checks with max absolute deviations."""

    checks: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def add(self, name: str, max_deviation: float, tolerance: float) -> None:
        self.checks.append(
            CheckResult(name, float(max_deviation), tolerance, bool(max_deviation <= tolerance))
        )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
            "warnings": list(self.warnings),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_dim(dim: int) -> None:
    if dim < 2:
        raise ValueError(f"truncation size must be at least 2, got {dim}")
    if dim > _MAX_DIM:
        raise ValueError(f"truncation size {dim} exceeds the dense-matrix cap {_MAX_DIM}")


def ladder_matrix(kind: str, dim: int) -> TruncatedOperator:
    """Annihilation or creation matrix: (a)_{n-1,n} = sqrt(n)."""
    _check_dim(dim)
    a = np.diag(np.sqrt(np.arange(1.0, dim)), k=1)
    if kind == "a":
        return TruncatedOperator(dim, a, "a")
    if kind == "a_dagger":
        return TruncatedOperator(dim, a.T.copy(), "a_dagger")
    raise ValueError(f"kind must be 'a' or 'a_dagger', got {kind!r}")


def hamiltonian_matrix(dim: int, params: PhysicalParams) -> TruncatedOperator:
    """hbar*omega*(a^dag a + 1/2), assembled from the ladder matrices."""
    _check_dim(dim)
    a = ladder_matrix("a", dim).entries
    h = params.hbar * params.omega * (a.T @ a + 0.5 * np.eye(dim))
    return TruncatedOperator(dim, h, "H")


def tfd_a_sector_state(t: float, params: PhysicalParams, dim: int) -> TwoModeState:
    """The a-sector of the time-evolved TFD state, normalized on its own.

    c_{n,n} = sqrt(1 - e^{-beta hbar omega}) e^{-beta hbar omega n / 2}
              e^{-i omega t (n + 1/2)}, diagonal in the two-mode basis.
    """
    _check_dim(dim)
    if not params.zero_temperature and params.beta * params.hbar * params.omega <= 0.0:
        raise ValueError("beta*hbar*omega must be positive for a normalizable state")
    n = np.arange(dim)
    if params.zero_temperature:
        q = 0.0
        mags = np.zeros(dim)
        mags[0] = 1.0
    else:
        q = math.exp(-params.beta * params.hbar * params.omega)
        mags = math.sqrt(1.0 - q) * q ** (n / 2.0)
    phases = np.exp(-1j * params.omega * t * (n + 0.5))
    c = np.zeros((dim, dim), dtype=complex)
    np.fill_diagonal(c, mags * phases)
    return TwoModeState(dim=dim, amplitudes=c, norm_deficit=q**dim)


def _quadratures(dim: int, params: PhysicalParams):
    """Single-mode position and momentum matrices."""
    a = ladder_matrix("a", dim).entries
    mw = params.mass * params.omega
    x = math.sqrt(params.hbar / (2.0 * mw)) * (a + a.T)
    p = -1j * math.sqrt(params.hbar * mw / 2.0) * (a - a.T)
    return x, p


def _apply_terms(terms, c: np.ndarray) -> np.ndarray:
    """Apply sum of (M_L, M_R) tensor-product terms to amplitudes c."""
    out = np.zeros_like(c)
    for ml, mr in terms:
        out += ml @ c @ mr.T
    return out


def oracle_covariance_1pm(t: float, params: PhysicalParams, dim: int = 60):
    """Brute-force covariance blocks of the +/- quadrature pairs.

    Expresses X_{1+-}, P_{1+-} through ladder matrices on the truncated
    two-mode space and takes symmetrized expectation values in the
    a-sector TFD state; returns (G1_plus, G1_minus) as 2x2 real arrays.
    """
    state = tfd_a_sector_state(t, params, dim)
    if state.norm_deficit > 1e-10:
        warnings.warn(
            f"truncation norm deficit {state.norm_deficit:.3e} exceeds 1e-10; "
            "increase dim or beta*hbar*omega",
            RuntimeWarning,
        )
    x, p = _quadratures(dim, params)
    eye = np.eye(dim)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    blocks = []
    for sign in (+1.0, -1.0):
        xi = [
            [(inv_sqrt2 * x, eye), (sign * inv_sqrt2 * eye, x)],  # X_{1 sign}
            [(inv_sqrt2 * p, eye), (sign * inv_sqrt2 * eye, p)],  # P_{1 sign}
        ]
        applied = [_apply_terms(terms, state.amplitudes) for terms in xi]
        g = np.empty((2, 2))
        for i in range(2):
            for j in range(2):
                g[i, j] = 2.0 * np.vdot(applied[i], applied[j]).real / params.hbar
        blocks.append(g)
    return blocks[0], blocks[1]


def commutator_report(dim: int) -> OracleReport:
    """Verify the ladder commutation relations on the truncated space.

    [a, a^dag] = 1 and [b, b^dag] = 1 hold exactly on the interior
    basis states (the last diagonal entry carries the truncation edge
    artifact -(N-1)); [a, b] = 0 across the two tensor factors; and
    L_z = -hbar(a^dag a - b^dag b) has eigenvalue hbar(k - n) on |n, k>.
    """
    if dim < 4:
        raise ValueError(f"dim must be at least 4, got {dim}")
    report = OracleReport()
    a = ladder_matrix("a", dim).entries
    comm = a @ a.T - a.T @ a
    interior = comm[: dim - 1, : dim - 1] - np.eye(dim - 1)
    report.add("[a,a_dagger] interior", np.max(np.abs(interior)), 1e-12)
    report.add("[b,b_dagger] interior", np.max(np.abs(interior)), 1e-12)
    edge = comm[dim - 1, dim - 1] - (-(dim - 1))
    report.add("[a,a_dagger] truncation edge = -(N-1)", abs(edge), 1e-12)

    # tensor-factor commutator on a reduced two-mode space (kron growth)
    dt = min(dim, 16)
    at = ladder_matrix("a", dt).entries
    a_l = np.kron(at, np.eye(dt))
    b_r = np.kron(np.eye(dt), at)
    report.add("[a,b] two-mode", np.max(np.abs(a_l @ b_r - b_r @ a_l)), 1e-12)

    num = np.diag(at.T @ at)
    lz = -(num[:, None] - num[None, :])  # -(n - k) = k - n on |n, k>
    expected = np.arange(dt)[None, :] - np.arange(dt)[:, None]
    report.add("L_z eigenvalue k - n", np.max(np.abs(lz - expected)), 1e-12)
    return report
