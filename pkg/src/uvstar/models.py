"""Structural-model layer.

Contains the generalized efficient-unemployment formula with sufficient
statistics (Beveridge elasticity, social value of nonwork, recruiting
cost), unemployment-flow dynamics with a Runge-Kutta oracle, the
matching-model Beveridge generator, and the interest-rate rule that maps
an unemployment gap into a recommended policy move.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, IntegrationError
from .series import PairedSeries
from .efficiency import efficient_rate


@dataclass(frozen=True)
class Ms16Params:
    """Sufficient statistics of the generalized efficiency formula."""

    eps: float    # Beveridge elasticity, positive magnitude
    zeta: float   # social value of nonwork, in [0, 1)
    kappa: float  # recruiting cost per vacancy

    def __post_init__(self) -> None:
        if self.eps <= 0:
            raise DomainError(f"eps must be positive, got {self.eps}")
        if not 0 <= self.zeta < 1:
            raise DomainError(f"zeta must lie in [0, 1), got {self.zeta}")
        if self.kappa <= 0:
            raise DomainError(f"kappa must be positive, got {self.kappa}")


@dataclass(frozen=True)
class FlowParams:
    """Monthly job-separation and job-finding rates, matching efficiency."""

    lam: float           # separation rate per month
    f: float             # finding rate per month
    omega: float = 0.6   # matching efficiency per month

    def __post_init__(self) -> None:
        if self.lam <= 0 or self.f <= 0:
            raise DomainError("separation and finding rates must be positive")
        if self.omega <= 0:
            raise DomainError("matching efficiency must be positive")


@dataclass(frozen=True)
class PolicyInput:
    """State for the interest-rate rule."""

    i: float           # nominal rate, fraction per year
    u: float
    u_star: float
    multiplier: float  # du/di, percentage point per percentage point

    def __post_init__(self) -> None:
        if self.multiplier <= 0:
            raise DomainError(f"multiplier must be positive, got {self.multiplier}")
        if self.i < 0:
            raise DomainError(f"nominal rate must be non-negative, got {self.i}")


@dataclass(frozen=True)
class PolicyAdvice:
    delta_i: float        # signed change to apply; positive = raise rates
    implied_target: float  # i + delta_i, floored at zero
    zlb_binding: bool


def ms16_efficient_rate(u: float, v: float, p: Ms16Params) -> float:
    """Generalized efficient rate [(kappa*eps/(1-zeta)) * v * u^eps]^(1/(1+eps)).

    Reduces exactly to sqrt(uv) at eps=1, zeta=0, kappa=1.
    """
    if u <= 0 or v <= 0:
        raise DomainError(f"rates must be positive, got u={u}, v={v}")
    scale = p.kappa * p.eps / (1.0 - p.zeta)
    return (scale * v * u**p.eps) ** (1.0 / (1.0 + p.eps))


def compare_formulas(pairs: PairedSeries, p: Ms16Params) -> tuple[float, float]:
    """Mean and max absolute difference between the generalized and
    geometric-mean efficient rates, pointwise over the sample."""
    diffs = [
        abs(ms16_efficient_rate(u, v, p) - efficient_rate(u, v))
        for u, v in zip(pairs.u, pairs.v)
    ]
    return sum(diffs) / len(diffs), max(diffs)


def steady_state_u(fp: FlowParams) -> float:
    """Flow steady state lam / (lam + f)."""
    return fp.lam / (fp.lam + fp.f)


def unemployment_path(u0: float, fp: FlowParams, t: float) -> float:
    """Analytic solution u(t) = u_ss + (u0 - u_ss) * exp(-(lam+f) t)."""
    if not 0 < u0 < 1:
        raise DomainError(f"initial rate must lie in (0, 1), got {u0}")
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    u_ss = steady_state_u(fp)
    return u_ss + (u0 - u_ss) * math.exp(-(fp.lam + fp.f) * t)


def half_life(fp: FlowParams) -> float:
    """Months for a deviation from steady state to halve: ln 2 / (lam + f)."""
    return math.log(2.0) / (fp.lam + fp.f)


def simulate_ode(
    u0: float, fp: FlowParams, dt: float, horizon: float
) -> list[tuple[float, float]]:
    """Fixed-step RK4 integration of du/dt = lam (1-u) - f u.

    Serves as an independent numeric check on ``unemployment_path``. The
    ODE is linear and non-stiff, so a fixed step keeps the trajectory
    deterministic; the step is capped at a quarter month.
    """
    if not 0 < dt <= 0.25:
        raise DomainError(f"step must lie in (0, 0.25] months, got {dt}")
    if horizon <= 0:
        raise DomainError(f"horizon must be positive, got {horizon}")
    if not 0 < u0 < 1:
        raise DomainError(f"initial rate must lie in (0, 1), got {u0}")

    def rhs(u: float) -> float:
        return fp.lam * (1.0 - u) - fp.f * u

    path = [(0.0, u0)]
    t, u = 0.0, u0
    while t < horizon - 1e-12:
        step = min(dt, horizon - t)
        k1 = rhs(u)
        k2 = rhs(u + 0.5 * step * k1)
        k3 = rhs(u + 0.5 * step * k2)
        k4 = rhs(u + step * k3)
        u = u + step * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0
        t = t + step
        if not 0.0 < u < 1.0:
            raise IntegrationError(f"state left (0, 1) at t={t:.4f}: u={u}")
        path.append((t, u))
    return path


def beveridge_from_matching(fp: FlowParams, theta: float) -> tuple[float, float]:
    """Model-implied (u, v) on the Beveridge curve at tightness theta.

    With a square-root matching technology the finding rate is
    f(theta) = omega * sqrt(theta); the steady state gives
    u = lam / (lam + omega sqrt(theta)) and v = theta * u. Sweeping
    theta traces out the near-hyperbolic curve.
    """
    if theta <= 0:
        raise DomainError(f"tightness must be positive, got {theta}")
    f_theta = fp.omega * math.sqrt(theta)
    u = fp.lam / (fp.lam + f_theta)
    return u, theta * u


def policy_rate_change(p: PolicyInput) -> PolicyAdvice:
    """Interest-rate move that closes the unemployment gap.

    delta_i = -(u - u_star) / multiplier: cut when the market is slack,
    raise when it is tight. The implied target i + delta_i is floored at
    zero; the flag reports when the floor binds and conventional policy
    alone cannot close the gap.
    """
    delta = -(p.u - p.u_star) / p.multiplier
    target = p.i + delta
    if target < 0.0:
        return PolicyAdvice(delta_i=delta, implied_target=0.0, zlb_binding=True)
    return PolicyAdvice(delta_i=delta, implied_target=target, zlb_binding=False)
