"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class SeriesError(ValueError):
    pass


class RationalPowerSeries:
    """``sum_{n < N} c_n x^n`` known up to (excluding) order ``N = len(coeffs)``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable, var: str = "x"):
        self.coeffs = [Fraction(c) for c in coeffs]
        self.var = var

    # -- basics -----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"RationalPowerSeries([{head}{more}], N={self.order}, var={self.var!r})"

    def __eq__(self, other):
        if isinstance(other, RationalPowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def truncate(self, n: int) -> RationalPowerSeries:
        return RationalPowerSeries(self.coeffs[:n], self.var)

    def _other(self, other) -> RationalPowerSeries:
        if isinstance(other, RationalPowerSeries):
            return other
        return RationalPowerSeries([other] + [0] * (self.order - 1), self.var)

    def __add__(self, other):
        o = self._other(other)
        n = min(self.order, o.order)
        return RationalPowerSeries([a + b for a, b in zip(self.coeffs[:n], o.coeffs[:n])], self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalPowerSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> RationalPowerSeries:
        c = Fraction(c)
        return RationalPowerSeries([c * a for a in self.coeffs], self.var)

    def __mul__(self, other):
        if not isinstance(other, RationalPowerSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return RationalPowerSeries(out, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> RationalPowerSeries:
        """Multiply by ``x^k`` keeping the same truncation order (k >= 0)."""
        return RationalPowerSeries(([0] * k + self.coeffs)[: self.order], self.var)

    def theta(self) -> RationalPowerSeries:
        """``x d/dx``."""
        return RationalPowerSeries([n * c for n, c in enumerate(self.coeffs)], self.var)

    def derivative(self) -> RationalPowerSeries:
        return RationalPowerSeries([n * c for n, c in enumerate(self.coeffs)][1:], self.var)

    def inverse(self) -> RationalPowerSeries:
        a = self.coeffs
        if not a or a[0] == 0:
            raise SeriesError("series is not invertible")
        n = self.order
        out = [Fraction(0)] * n
        out[0] = 1 / a[0]
        for k in range(1, n):
            s = sum(a[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s / a[0]
        return RationalPowerSeries(out, self.var)

    def __truediv__(self, other):
        if isinstance(other, RationalPowerSeries):
            return self * other.inverse()
        return self.scale(Fraction(1) / Fraction(other))

    def exp(self) -> RationalPowerSeries:
        """``exp`` of a series with zero constant term."""
        a = self.coeffs
        if a and a[0] != 0:
            raise SeriesError("exp needs a zero constant term")
        n = self.order
        out = [Fraction(0)] * n
        if n:
            out[0] = Fraction(1)
        # f' = a' f  =>  k f_k = sum_j j a_j f_{k-j}
        for k in range(1, n):
            out[k] = sum(j * a[j] * out[k - j] for j in range(1, k + 1)) / k
        return RationalPowerSeries(out, self.var)

    def log(self) -> RationalPowerSeries:
        """``log`` of a series with constant term 1."""
        a = self.coeffs
        if not a or a[0] != 1:
            raise SeriesError("log needs constant term 1")
        d = self.derivative()
        q = (d * self.truncate(self.order - 1).inverse()).coeffs
        return RationalPowerSeries([Fraction(0)] + [q[k] / (k + 1) for k in range(len(q))], self.var)

    def compose(self, inner: RationalPowerSeries) -> RationalPowerSeries:
        """``self(inner(y))`` with ``inner`` having zero constant term."""
        if inner.coeffs and inner.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        out = RationalPowerSeries([0] * n, inner.var)
        power = RationalPowerSeries([1] + [0] * (n - 1), inner.var)
        inner = inner.truncate(n)
        for k in range(n):
            c = self.coeffs[k]
            if c:
                out = out + power.scale(c)
            power = power * inner
        return out

    def reversion(self) -> RationalPowerSeries:
        """Compositional inverse of ``a_1 x + a_2 x^2 + ...`` with ``a_1 != 0``."""
        a = self.coeffs
        if len(a) < 2 or a[0] != 0 or a[1] == 0:
            raise SeriesError("reversion needs a_0 = 0 and a_1 != 0")
        n = self.order
        # Newton-free fixed point: solve self(g(y)) = y term by term
        g = [Fraction(0)] * n
        g[1] = 1 / a[1]
        for k in range(2, n):
            trial = RationalPowerSeries(g[: k + 1], self.var)
            val = self.truncate(k + 1).compose(trial)
            g[k] = -val.coeffs[k] / a[1]
        return RationalPowerSeries(g, self.var)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> RationalPowerSeries:
        if isinstance(data, list):
            return cls([Fraction(c) for c in data])
        return cls([Fraction(c) for c in data["coeffs"]], data.get("var", "x"))
