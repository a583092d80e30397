"""Mirror map, normalized Yukawa coupling and genus zero BPS numbers at a
point of maximally unipotent monodromy, in exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ode import FrobeniusBasis, ThetaOperator, fit_operator, frobenius_basis, is_mum
from .series import RationalPowerSeries, SeriesError


class BPSError(ValueError):
    pass


@dataclass
class MirrorMapData:
    """``q(x) = x exp(omega_1^reg / omega_0)`` and its compositional inverse ``x(q)``."""

    q_of_x: RationalPowerSeries
    x_of_q: RationalPowerSeries

    def to_json(self) -> dict:
        return {"q_of_x": self.q_of_x.to_json(), "x_of_q": self.x_of_q.to_json()}


@dataclass
class YukawaSeries:
    deg: int
    K: RationalPowerSeries
    sign: int = 1

    def to_json(self) -> dict:
        return {"deg": self.deg, "sign": self.sign, "K": self.K.to_json()}


def mirror_map(fb: FrobeniusBasis, N: int | None = None) -> MirrorMapData:
    w0, w1 = fb.regular[0], fb.regular[1]
    N = N or w0.order
    if w0.order < N or N < 2:
        raise BPSError("truncation too short for the mirror map")
    w0, w1 = w0.truncate(N), w1.truncate(N)
    if w0[0] == 0:
        raise BPSError("omega_0 vanishes at the expansion point")
    t_reg = w1 / w0
    q = t_reg.exp().shift(1)
    x = q.reversion()
    return MirrorMapData(RationalPowerSeries(q.coeffs, "x"), RationalPowerSeries(x.coeffs, "q"))


def yukawa_x(op: ThetaOperator, N: int) -> RationalPowerSeries:
    """``Y(x)`` with ``theta Y = -(1/2) (S_3 / S_4) Y``, ``Y(0) = 1``.

    ``S_4`` and ``S_3`` are the coefficients of ``theta^4`` and ``theta^3``
    when the operator is written as ``sum_j S_j(x) theta^j``.  This is the
    three-point function in the ``theta`` frame; the ``d/dx`` frame version
    differs by ``x^-3``, which the change to the flat coordinate absorbs.
    """
    if op.order != 4:
        raise BPSError("Yukawa coupling needs a fourth order operator")
    if not is_mum(op):
        raise BPSError("expansion point is not of maximally unipotent monodromy")
    S4 = RationalPowerSeries([op.P(i)[4] for i in range(op.degree + 1)] + [0] * N).truncate(N)
    S3 = RationalPowerSeries([op.P(i)[3] for i in range(op.degree + 1)] + [0] * N).truncate(N)
    g = S3 / S4
    logY = RationalPowerSeries([0] + [-g[n] / (2 * n) for n in range(1, N)])
    return logY.exp()


def yukawa(op: ThetaOperator, deg: int, mm: MirrorMapData, N: int, fb: FrobeniusBasis | None = None,
           sign: int | None = None) -> YukawaSeries:
    """``K_ttt(q) = deg * Y / (omega_0^2 (theta_x t)^3)`` in the variable ``q``, normalized to ``K(0) = deg``.

    The constant of integration is fixed by ``K(0) = deg``; the sign of ``q``
    by ``n_0(1) > 0`` unless ``sign`` is given.
    """
    fb = fb or frobenius_basis(op, N)
    w0 = fb.regular[0].truncate(N)
    if w0[0] == 0:
        raise BPSError("omega_0 vanishes")
    Y = yukawa_x(op, N)
    dt = (fb.regular[1].truncate(N) / w0).theta() + 1
    Kx = Y / (w0 * w0 * dt * dt * dt)
    Kq = Kx.compose(mm.x_of_q.truncate(N))
    Kq = Kq.scale(Fraction(deg) / Kq[0])
    if sign is None:
        sign = 1 if N < 2 or Kq[1] >= 0 else -1
    if sign == -1:
        Kq = RationalPowerSeries([c * (-1) ** n for n, c in enumerate(Kq.coeffs)])
    return YukawaSeries(deg, RationalPowerSeries(Kq.coeffs, "q"), sign)


def bps_genus0(ys: YukawaSeries, dmax: int) -> list[int]:
    """Invert ``K = deg + sum_d n_0(d) d^3 q^d / (1 - q^d)``."""
    K = ys.K
    if K.order <= dmax:
        raise BPSError("Yukawa series shorter than dmax")
    n: dict[int, Fraction] = {}
    out = []
    for m in range(1, dmax + 1):
        rest = K[m] - sum(n[d] * d ** 3 for d in range(1, m) if m % d == 0)
        val = rest / m ** 3
        if val.denominator != 1:
            raise BPSError(f"non-integral BPS number at degree {m}: {val}")
        n[m] = val
        out.append(int(val))
    return out


def bps_from_operator(op: ThetaOperator, deg: int, dmax: int, extra: int = 2) -> list[int]:
    N = dmax + extra
    fb = frobenius_basis(op, N)
    mm = mirror_map(fb, N)
    return bps_genus0(yukawa(op, deg, mm, N, fb), dmax)


def bps_from_period(period: RationalPowerSeries, deg: int, dmax: int,
                    max_order: int = 4, max_degree: int = 8) -> tuple[ThetaOperator, list[int]]:
    """Fit the period's operator, then run the genus zero pipeline."""
    if period[0] == 0:
        raise SeriesError("period must have nonzero constant term")
    op = fit_operator(period, max_order, max_degree)
    return op, bps_from_operator(op, deg, dmax)
