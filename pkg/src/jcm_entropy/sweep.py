"""Time sweeps over the scaled-time grid and machine-readable output."""

from __future__ import annotations

import io
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import dynamics, entropies, husimi
from .errors import DomainError

BASE_COLUMNS = ("t", "sx", "sy", "sz", "eta", "xi", "gamma",
                "wehrl_closed", "wehrl_series", "gamma_norm", "wehrl_norm")
ORACLE_COLUMNS = ("t", "sx", "sy", "sz", "eta", "xi", "gamma",
                  "wehrl_closed", "wehrl_series", "wehrl_quadrature",
                  "gamma_norm", "wehrl_norm")


@dataclass(frozen=True)
class SweepRow:
    t: float
    sx: float
    sy: float
    sz: float
    eta: float
    xi: float
    gamma: float
    wehrl_closed: float
    wehrl_series: float
    wehrl_quadrature: float | None
    gamma_norm: float
    wehrl_norm: float


@dataclass(frozen=True)
class SweepResult:
    config: dynamics.SimulationConfig
    with_oracle: bool
    rows: tuple[SweepRow, ...]

    @property
    def columns(self) -> tuple[str, ...]:
        return ORACLE_COLUMNS if self.with_oracle else BASE_COLUMNS


def run_sweep(config: dynamics.SimulationConfig,
              with_oracle: bool = False) -> SweepResult:
    """Evaluate the full entropy record on an evenly spaced time grid.

    The Fock amplitudes are built once; each grid point then goes through
    density matrix -> Bloch vector -> entropies.  The slow spherical
    quadrature column is only computed when ``with_oracle`` is set.
    """
    amps = dynamics.coherent_amplitudes(
        config.alpha_mag, config.alpha_phase, config.fock_tail_tol)
    quad = None
    if with_oracle:
        quad = husimi.SphereQuadrature(config.quad_theta_order,
                                       config.quad_phi_order)

    rows = []
    for t in np.linspace(config.t_start, config.t_end, config.t_steps):
        t = float(t)
        try:
            rho = dynamics.reduced_density(amps, t)
            bloch = dynamics.bloch_vector(rho)
            rec = entropies.entropy_record(t, bloch.eta, config.series_tol)
            w_quad = None
            if quad is not None:
                w_quad = husimi.wehrl_entropy_quadrature(bloch, quad)
        except DomainError as exc:
            raise DomainError(f"at T = {t!r}: {exc}") from exc
        rows.append(SweepRow(
            t=t, sx=bloch.sx, sy=bloch.sy, sz=bloch.sz, eta=bloch.eta,
            xi=rec.xi, gamma=rec.gamma,
            wehrl_closed=rec.wehrl_closed, wehrl_series=rec.wehrl_series,
            wehrl_quadrature=w_quad,
            gamma_norm=rec.gamma_norm, wehrl_norm=rec.wehrl_norm))
    return SweepResult(config=config, with_oracle=with_oracle, rows=tuple(rows))


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _render_csv(result: SweepResult) -> str:
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(_fmt(getattr(row, col)) for col in result.columns))
    return "\n".join(lines) + "\n"


def _render_structured(result: SweepResult) -> str:
    payload = {
        "config": asdict(result.config),
        "columns": list(result.columns),
        "rows": [[getattr(row, col) for col in result.columns]
                 for row in result.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit(result: SweepResult, format: str = "csv", path: str | None = None) -> None:
    """Write a sweep as CSV or structured JSON, to a path or stdout.

    The text is rendered fully before any byte reaches the destination, so
    a failure can never leave a header without rows behind.
    """
    if format == "csv":
        text = _render_csv(result)
    elif format == "structured":
        text = _render_structured(result)
    else:
        raise ValueError(f"unknown format {format!r}")

    if path is None:
        sys.stdout.write(text)
        return
    try:
        with io.open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write sweep output to {path!r}: {exc}") from exc
