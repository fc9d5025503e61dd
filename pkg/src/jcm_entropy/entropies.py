"""Entanglement entropies of the atomic qubit as functions of the Bloch radius.

Three measures are provided, each by at least two mutually independent
routes (closed form, power series, and for the Wehrl entropy also the raw
triple sum over Bloch components):

* linear entropy        xi    = (1 - eta^2)/2,            range [0, 1/2]
* von Neumann entropy   gamma = -sum mu log mu,           range [0, ln 2]
* atomic Wehrl entropy  W_a,                              range [ln(2pi)+1/2, ln(4pi)]

All of them depend on the Bloch vector only through its length eta, which
is what makes cross-route checking possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .dynamics import BlochVector
from .errors import DomainError, PrecisionLossError

LN2 = math.log(2.0)
LN4PI = math.log(4.0 * math.pi)
WEHRL_MIN = math.log(2.0 * math.pi) + 0.5       # value at eta = 1
WEHRL_SPAN = LN2 - 0.5                           # ln(4pi) - WEHRL_MIN

_ETA_TOL = 1e-9
_CLOSED_FORM_MIN_ETA = 1e-3   # below this the closed form cancels badly
_CLOSED_FORM_MAX_ETA = 1e-8   # 1 - eta below this: use the analytic limit
_MAX_TERMS = 10 ** 6
_TERM_FLOOR = 1e-300
_TERM_MAGNITUDE_LIMIT = 1e15


@dataclass(frozen=True)
class EntropyRecord:
    """All entropy measures evaluated at one time point."""

    t: float
    eta: float
    xi: float
    gamma: float
    wehrl_closed: float
    wehrl_series: float
    gamma_norm: float
    wehrl_norm: float


def _check_eta(eta: float) -> float:
    if not math.isfinite(eta):
        raise DomainError(f"eta must be finite, got {eta!r}")
    if eta < 0.0 or eta > 1.0 + _ETA_TOL:
        raise DomainError(f"eta = {eta!r} outside [0, 1]")
    return min(eta, 1.0)


def linear_entropy(eta: float) -> float:
    """Linear entropy (1 - eta^2)/2; 0 for pure, 1/2 for maximally mixed."""
    eta = _check_eta(eta)
    return 0.5 * (1.0 - eta * eta)


def von_neumann_entropy(eta: float) -> float:
    """von Neumann entropy from the eigenvalues (1 +- eta)/2, in nats."""
    eta = _check_eta(eta)
    mu_plus = 0.5 * (1.0 + eta)
    mu_minus = 0.5 * (1.0 - eta)
    out = 0.0
    for mu in (mu_plus, mu_minus):
        if mu > 0.0:  # 0 log 0 = 0 convention
            out -= mu * math.log(mu)
    return out


def _sum_series(eta: float, denom, series_tol: float) -> float:
    """Sum eta^{2n} / denom(n) with a relative-term stopping rule."""
    if not series_tol > 0.0:
        raise DomainError("series_tol must be positive")
    q = eta * eta
    power = 1.0
    acc = 0.0
    for n in range(1, _MAX_TERMS + 1):
        power *= q
        term = power / denom(n)
        acc += term
        if term < max(series_tol * acc, _TERM_FLOOR):
            break
    return acc


def von_neumann_series(eta: float, series_tol: float = 1e-14) -> float:
    """von Neumann entropy by its series ln 2 - sum eta^{2n}/(2n(2n-1)).

    Serves as the independent cross-check of :func:`von_neumann_entropy`.
    The series converges too slowly at eta = 1, where the closed form is
    exact anyway, so that endpoint is refused.
    """
    eta = _check_eta(eta)
    if eta >= 1.0:
        raise DomainError("von_neumann_series: eta = 1 is out of domain, "
                          "use von_neumann_entropy")
    return LN2 - _sum_series(eta, lambda n: 2 * n * (2 * n - 1), series_tol)


def wehrl_entropy_series(eta: float, series_tol: float = 1e-14) -> float:
    """Atomic Wehrl entropy ln(4pi) - sum eta^{2n}/(2n(2n-1)(2n+1)).

    Terms fall off like n^-3, so the series converges on the whole closed
    interval [0, 1].
    """
    eta = _check_eta(eta)
    return LN4PI - _sum_series(
        eta, lambda n: 2 * n * (2 * n - 1) * (2 * n + 1), series_tol)


def wehrl_entropy_closed(eta: float, series_tol: float = 1e-14) -> float:
    """Atomic Wehrl entropy in closed form.

    W(eta) = 1/2 + ln(4pi) - ln(1-eta^2)/2 + (eta + 1/eta)/4 * ln[(1-eta)/(1+eta)]

    The expression is singular at both ends of [0, 1]: near eta = 0 it
    cancels catastrophically, so the call is delegated to the series; at
    eta = 1 the analytic limit ln(2pi) + 1/2 is returned directly.
    """
    eta = _check_eta(eta)
    if eta < _CLOSED_FORM_MIN_ETA:
        return wehrl_entropy_series(eta, series_tol)
    if 1.0 - eta < _CLOSED_FORM_MAX_ETA:
        return WEHRL_MIN
    return (0.5 + LN4PI
            - 0.5 * math.log(1.0 - eta * eta)
            + 0.25 * (eta + 1.0 / eta) * math.log((1.0 - eta) / (1.0 + eta)))


def wehrl_entropy_triple_sum(bloch: BlochVector, n_terms: int) -> float:
    """Atomic Wehrl entropy from the raw sum over Bloch-vector components.

    The underlying expansion is a triple sum over (n, r, s) in which the
    alternating s-sum encodes the polar integral
    integral_0^1 t^{2(n-r)} (1-t^2)^r dt.  Summing it term by term loses
    all precision once sz^2 and sx^2+sy^2 are both appreciable (individual
    terms exceed 1e15 near n ~ 85), so that inner sum is carried out by
    exact cancellation to its beta-function value and the remaining (n, r)
    terms, all positive, are accumulated in log space.
    """
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    eta = _check_eta(bloch.eta)
    u = bloch.sz * bloch.sz
    v = bloch.sx * bloch.sx + bloch.sy * bloch.sy

    n = np.concatenate([np.full(k + 1, k) for k in range(1, n_terms + 1)])
    r = np.concatenate([np.arange(k + 1) for k in range(1, n_terms + 1)])

    # 0^0 = 1 here: a zero component only kills terms with a positive power
    if u > 0.0:
        pow_u = (n - r) * math.log(u)
    else:
        pow_u = np.where(n - r > 0, -np.inf, 0.0)
    if v > 0.0:
        pow_v = r * math.log(v)
    else:
        pow_v = np.where(r > 0, -np.inf, 0.0)

    log_terms = (gammaln(2 * n + 1) + gammaln(n - r + 0.5) + pow_u + pow_v
                 - np.log(2.0 * n * (2.0 * n - 1.0))
                 - gammaln(2 * (n - r) + 1) - gammaln(r + 1.0)
                 - r * math.log(4.0) - math.log(2.0) - gammaln(n + 1.5))

    if np.any(log_terms > math.log(_TERM_MAGNITUDE_LIMIT)):
        raise PrecisionLossError(
            "triple-sum partial term exceeds 1e15; input Bloch vector is "
            "outside the unit ball")
    return LN4PI - float(np.sum(np.exp(log_terms)))


def normalized_entropies(gamma: float, wehrl: float) -> tuple[float, float]:
    """Rescaled measures: gamma/ln 2 and (ln(4pi) - W)/(ln 2 - 1/2).

    Exact constants are used; their popular roundings 0.693 and 0.19315
    would shift the endpoints off 0 and 1 by about 1e-4.
    """
    return gamma / LN2, (LN4PI - wehrl) / WEHRL_SPAN


def entropy_record(t: float, eta: float, series_tol: float = 1e-14) -> EntropyRecord:
    """Evaluate every measure (both Wehrl routes) at one time point."""
    eta = _check_eta(eta)
    gamma = von_neumann_entropy(eta)
    w_closed = wehrl_entropy_closed(eta, series_tol)
    w_series = wehrl_entropy_series(eta, series_tol)
    gamma_norm, wehrl_norm = normalized_entropies(gamma, w_closed)
    return EntropyRecord(
        t=t, eta=eta, xi=linear_entropy(eta), gamma=gamma,
        wehrl_closed=w_closed, wehrl_series=w_series,
        gamma_norm=gamma_norm, wehrl_norm=wehrl_norm)
