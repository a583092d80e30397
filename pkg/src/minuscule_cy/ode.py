"""Linear differential operators in ``theta = x d/dx`` with rational coefficients:
application to series, exact fitting from series, Riemann schemes, Frobenius
bases at points of maximally unipotent monodromy, and coordinate inversion.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

import sympy

from .linalg import nullspace, primitive_integer_vector, rank_mod_p
from .series import RationalPowerSeries


class OperatorError(ValueError):
    pass


def _poly_eval(coeffs, t):
    """Evaluate ``sum coeffs[j] t^j``."""
    out = 0
    for c in reversed(coeffs):
        out = out * t + c
    return out


class ThetaOperator:
    """``sum_{i,j} c[i][j] x^i theta^j``; rows index powers of x."""

    def __init__(self, coeffs, var: str = "x", normalize: bool = False):
        rows = [[Fraction(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
        # trim trailing zero rows and columns
        while rows and not any(rows[-1]):
            rows.pop()
        while width and rows and not any(r[width - 1] for r in rows):
            width -= 1
            rows = [r[:width] for r in rows]
        if not rows:
            raise OperatorError("zero operator")
        self.c = rows
        self.var = var
        if normalize:
            self.c = self.normalized().c

    # -- shape ----------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def order(self) -> int:
        return len(self.c[0]) - 1

    def P(self, i: int) -> list[Fraction]:
        """Coefficient polynomial of ``x^i`` as a list in powers of theta."""
        return self.c[i] if 0 <= i <= self.degree else [Fraction(0)] * (self.order + 1)

    def __eq__(self, other):
        return isinstance(other, ThetaOperator) and self.c == other.c

    def __repr__(self):
        return f"ThetaOperator(order={self.order}, degree={self.degree})"

    def normalized(self) -> ThetaOperator:
        """Coprime integer coefficients with a positive ``theta^order`` coefficient at ``x^0``."""
        flat = [x for row in self.c for x in row]
        ints = primitive_integer_vector(flat)
        w = self.order + 1
        rows = [ints[i * w:(i + 1) * w] for i in range(len(self.c))]
        lead = rows[0][-1] if rows[0][-1] != 0 else next(x for row in rows for x in reversed(row) if x)
        if lead < 0:
            rows = [[-x for x in r] for r in rows]
        return ThetaOperator(rows, self.var)

    def equal_up_to_scalar(self, other: ThetaOperator) -> bool:
        a, b = self.normalized().c, other.normalized().c
        return a == b or a == [[-x for x in r] for r in b]

    # -- action ---------------------------------------------------------------

    def apply(self, s: RationalPowerSeries) -> RationalPowerSeries:
        N = s.order
        out = []
        for n in range(N):
            tot = Fraction(0)
            for i in range(min(self.degree, n) + 1):
                a = s.coeffs[n - i]
                if a:
                    tot += _poly_eval(self.c[i], n - i) * a
            out.append(tot)
        return RationalPowerSeries(out, s.var)

    # -- pretty printing -----------------------------------------------------

    def theta_poly(self, i: int, name: str = "θ") -> str:
        terms = []
        for j in range(len(self.c[i]) - 1, -1, -1):
            c = self.c[i][j]
            if c == 0:
                continue
            mon = "" if j == 0 else (name if j == 1 else f"{name}^{j}")
            coef = str(abs(c)) if (abs(c) != 1 or j == 0) else ""
            terms.append(("-" if c < 0 else "+", coef + mon))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s

    def __str__(self):
        parts = []
        for i in range(self.degree + 1):
            if any(self.c[i]):
                xp = "" if i == 0 else (f"{self.var}" if i == 1 else f"{self.var}^{i}")
                parts.append(f"{xp}({self.theta_poly(i)})" if xp else f"({self.theta_poly(i)})")
        return " + ".join(parts)

    def sympy_expr(self, theta=None, x=None):
        theta = theta or sympy.Symbol("theta")
        x = x or sympy.Symbol(self.var)
        return sum(sympy.Rational(c.numerator, c.denominator) * x ** i * theta ** j
                   for i, row in enumerate(self.c) for j, c in enumerate(row))

    def factored_rows(self) -> list[str]:
        theta = sympy.Symbol("theta")
        out = []
        for i in range(self.degree + 1):
            p = sum(sympy.Rational(c.numerator, c.denominator) * theta ** j
                    for j, c in enumerate(self.c[i]))
            out.append(str(sympy.factor(p)))
        return out

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [[str(c) for c in row] for row in self.c]}

    @classmethod
    def from_json(cls, data) -> ThetaOperator:
        if isinstance(data, str):
            data = json.loads(data)
        return cls([[Fraction(c) for c in row] for row in data["coeffs"]], data.get("var", "x"))

    @classmethod
    def from_polys(cls, polys, var: str = "x") -> ThetaOperator:
        """Build from sympy expressions in ``theta`` (one per power of x)."""
        theta = sympy.Symbol("theta")
        rows = []
        for p in polys:
            poly = sympy.Poly(sympy.expand(p), theta)
            deg = poly.degree()
            row = [Fraction(0)] * (deg + 1)
            for (k,), c in poly.terms():
                c = sympy.Rational(c)
                row[k] = Fraction(int(c.p), int(c.q))
            rows.append(row)
        return cls(rows, var)

    # -- d/dx form -----------------------------------------------------------

    def d_form(self) -> list[list[Fraction]]:
        """Coefficients ``A[k][l]`` of ``x^l d^k/dx^k`` (theta^j = sum_k S(j,k) x^k d^k)."""
        R = self.order
        A = [[Fraction(0)] * (self.degree + R + 1) for _ in range(R + 1)]
        for i, row in enumerate(self.c):
            for j, c in enumerate(row):
                if c:
                    for k in range(j + 1):
                        s = stirling2(j, k)
                        if s:
                            A[k][i + k] += c * s
        return A

    def leading_polynomial(self) -> list[Fraction]:
        """``sum_i c[i][order] x^i``: the ``d^order`` coefficient divided by ``x^order``."""
        return [row[self.order] for row in self.c]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def apply(op: ThetaOperator, s: RationalPowerSeries) -> RationalPowerSeries:
    return op.apply(s)


# ----------------------------------------------------------------------------
# fitting
# ----------------------------------------------------------------------------


class FitError(OperatorError):
    pass


def _fit_rows(a, order, degree):
    rows = []
    for n in range(len(a)):
        row = []
        for i in range(degree + 1):
            m = n - i
            for j in range(order + 1):
                row.append(Fraction(m) ** j * a[m] if m >= 0 else Fraction(0))
        rows.append(row)
    return rows


def fit_operator(s: RationalPowerSeries, max_order: int, max_degree: int,
                 margin: int = 10, min_order: int = 1) -> ThetaOperator:
    """Minimal (order first, then degree) annihilator of ``s`` with polynomial coefficients."""
    a = s.coeffs
    for R in range(min_order, max_order + 1):
        for d in range(0, max_degree + 1):
            unknowns = (R + 1) * (d + 1)
            if len(a) < unknowns + margin:
                break
            rows = _fit_rows(a, R, d)
            # a full rank modulo a large prime already rules out an annihilator
            rk = rank_mod_p(rows)
            if rk is not None and rk == unknowns:
                continue
            ns = nullspace(rows)
            if not ns:
                continue
            if len(ns) > 1:
                raise FitError(f"annihilator at order {R}, degree {d} is not unique "
                               f"({len(ns)}-dimensional); supply more terms")
            v = ns[0]
            rows = [v[i * (R + 1):(i + 1) * (R + 1)] for i in range(d + 1)]
            try:
                op = ThetaOperator(rows, s.var).normalized()
            except OperatorError:
                continue
            if op.order < R:
                continue
            return op
    raise FitError("no annihilating operator within the search grid")


# ----------------------------------------------------------------------------
# Riemann scheme
# ----------------------------------------------------------------------------


@dataclass
class SingularPoint:
    label: str
    minimal_polynomial: str | None
    value: complex | None
    approx: str
    exponents: list[Fraction]

    def to_json(self) -> dict:
        return {"label": self.label, "minimal_polynomial": self.minimal_polynomial,
                "approx": self.approx, "exponents": [str(e) for e in self.exponents]}


@dataclass
class RiemannScheme:
    points: list[SingularPoint]
    discriminant: list[str] = field(default_factory=list)

    def point(self, label: str) -> SingularPoint:
        for p in self.points:
            if p.label == label:
                return p
        raise KeyError(label)

    def fuchs_sum(self) -> Fraction:
        return sum((sum(p.exponents, Fraction(0)) for p in self.points), Fraction(0))

    def fuchs_expected(self, order: int) -> Fraction:
        s = len(self.points)
        return Fraction((s - 2) * order * (order - 1), 2)

    def to_json(self) -> dict:
        return {"points": [p.to_json() for p in self.points], "discriminant": self.discriminant}


def _rational_roots_with_mult(poly: sympy.Poly) -> list[Fraction]:
    out = []
    for factor, mult in sympy.factor_list(poly)[1]:
        fp = sympy.Poly(factor, poly.gen)
        if fp.degree() != 1:
            raise OperatorError(f"non-rational local exponent from factor {factor}")
        a, b = fp.all_coeffs()
        r = sympy.Rational(-b, a)
        out += [Fraction(int(r.p), int(r.q))] * mult
    return sorted(out)


def _indicial_at_theta_point(P0: list[Fraction]) -> list[Fraction]:
    rho = sympy.Symbol("rho")
    poly = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * rho ** j
                          for j, c in enumerate(P0)), rho)
    return _rational_roots_with_mult(poly)


def _local_exponents(op: ThetaOperator, factor: sympy.Poly, mult: int) -> list[Fraction]:
    """Exponents at a root of the irreducible ``factor`` (multiplicity ``mult`` in the leading term).

    Taylor coefficients of the d/dx coefficients at the root are computed in
    ``Q[x]/(factor)``; the indicial polynomial then has rational coefficients.
    """
    x = factor.gen
    R = op.order
    A = op.d_form()
    rho = sympy.Symbol("rho")
    f = factor.as_expr()

    def taylor(k, l):
        poly = sum(sympy.Rational(c.numerator, c.denominator) * x ** p for p, c in enumerate(A[k]))
        d = sympy.diff(poly, x, l) / sympy.factorial(l)
        return sympy.rem(sympy.expand(d), f, x)

    # regularity: ord(A_k) >= mult - (R - k)
    for k in range(R):
        need = mult - (R - k)
        for l in range(max(need, 0)):
            if sympy.simplify(taylor(k, l)) != 0:
                raise OperatorError("irregular singular point")
    lead = taylor(R, mult)
    inv = sympy.invert(lead, f, x)
    ind = 0
    for k in range(R + 1):
        l = mult - (R - k)
        if l < 0:
            continue
        ck = sympy.rem(sympy.expand(taylor(k, l) * inv), f, x)
        ind += ck * sympy.ff(rho, k)
    ind = sympy.expand(ind)
    poly = sympy.Poly(ind, rho)
    for c in poly.all_coeffs():
        if sympy.Poly(c, x).degree() > 0:
            raise OperatorError("indicial polynomial is not rational")
    return _rational_roots_with_mult(sympy.Poly(ind, rho))


def riemann_scheme(op: ThetaOperator, digits: int = 30) -> RiemannScheme:
    x = sympy.Symbol(op.var)
    R = op.order
    if len(op.c[0]) <= R or op.c[0][R] == 0:
        raise OperatorError("x = 0 is not a regular singular point (theta^order missing at x^0)")
    top = op.c[op.degree]
    if len(top) <= R or top[R] == 0:
        raise OperatorError("infinity is irregular for this operator")
    points = [SingularPoint("0", str(x), 0, "0", _indicial_at_theta_point(op.c[0]))]
    lead = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * x ** i
                          for i, c in enumerate(op.leading_polynomial())), x)
    disc = []
    for factor, mult in sorted(sympy.factor_list(lead)[1], key=lambda fm: (sympy.Poly(fm[0], x).degree(), str(fm[0]))):
        fp = sympy.Poly(factor, x)
        if fp.degree() == 0:
            continue
        exps = _local_exponents(op, fp, mult)
        fexpr = str(fp.as_expr())
        disc.append(f"({fexpr})^{mult}" if mult > 1 else fexpr)
        roots = sympy.Poly(factor, x).all_roots()
        for k, r in enumerate(sorted(roots, key=lambda z: (sympy.re(z).evalf(digits), sympy.im(z).evalf(digits)))):
            val = complex(sympy.N(r, digits))
            if fp.degree() == 1:
                label = str(r)
            else:
                label = f"root{k + 1}[{fexpr}]"
            points.append(SingularPoint(label, fexpr, val, str(sympy.N(r, digits)), exps))
    # infinity: w = 1/x, theta_x = -theta_w, leading term P_deg(-theta_w)
    inf = [c * (-1) ** j for j, c in enumerate(top)]
    points.append(SingularPoint("oo", None, None, "oo", _indicial_at_theta_point(inf)))
    return RiemannScheme(points, disc)


def is_mum(op: ThetaOperator) -> bool:
    try:
        return all(e == 0 for e in _indicial_at_theta_point(op.c[0])) and len(op.c[0]) == op.order + 1
    except OperatorError:
        return False


# ----------------------------------------------------------------------------
# Frobenius basis
# ----------------------------------------------------------------------------


@dataclass
class FrobeniusBasis:
    """``omega_k = sum_j C(k, j) omega_j^reg (log x)^(k-j)``, with ``omega_0^reg = omega_0``."""

    regular: list[RationalPowerSeries]

    @property
    def omega0(self) -> RationalPowerSeries:
        return self.regular[0]


def _eps_mul(a, b, K):
    out = [a[0] * 0] * K
    for i, ai in enumerate(a):
        if ai:
            for j in range(K - i):
                out[i + j] += ai * b[j]
    return out


def _eps_poly_at(P, n: int, K: int, zero=Fraction(0)):
    """``P(n + eps)`` truncated to ``eps^K``."""
    out = [zero] * K
    for j, c in enumerate(P):
        if c:
            for k in range(min(j, K - 1) + 1):
                out[k] += c * (comb(j, k) * n ** (j - k))
    return out


def _eps_inv(a, K):
    out = [a[0] * 0] * K
    out[0] = 1 / a[0]
    for k in range(1, K):
        out[k] = -sum(a[j] * out[k - j] for j in range(1, k + 1)) / a[0]
    return out


def frobenius_basis(op: ThetaOperator, N: int) -> FrobeniusBasis:
    """Frobenius solutions at ``x = 0`` (which must be a point of maximally unipotent monodromy)."""
    if not is_mum(op):
        raise OperatorError("x = 0 is not a point of maximally unipotent monodromy")
    R = op.order
    a = frobenius_coefficients(op.c, R, N, Fraction(1))
    regs = [RationalPowerSeries([factorial(k) * a[n][k] for n in range(N)], op.var) for k in range(R)]
    return FrobeniusBasis(regs)


def frobenius_coefficients(rows, K: int, N: int, one):
    """``a[n][k]``: coefficient of ``eps^k x^n`` in the solution ``x^eps sum a_n(eps) x^n`` mod ``eps^K``.

    ``rows`` are the theta-polynomials of the operator; the arithmetic follows
    the type of ``one`` (Fraction or a multiprecision float).
    """
    zero = one * 0
    a = [[one] + [zero] * (K - 1)]
    for n in range(1, N):
        rhs = [zero] * K
        for i in range(1, min(len(rows) - 1, n) + 1):
            term = _eps_mul(_eps_poly_at(rows[i], n - i, K, zero), a[n - i], K)
            rhs = [r - t for r, t in zip(rhs, term)]
        a.append(_eps_mul(rhs, _eps_inv(_eps_poly_at(rows[0], n, K, zero), K), K))
    return a


def frobenius_check(op: ThetaOperator, fb: FrobeniusBasis) -> bool:
    """Each ``omega_k`` is annihilated to the available order.

    Writing ``D(f (log x)^p)`` through ``theta(f L^p) = (theta f) L^p + p f L^(p-1)``,
    the coefficient of ``(log x)^0`` after applying ``D`` to ``omega_k`` must vanish;
    by induction over ``k`` this is the whole statement.
    """
    for k in range(len(fb.regular)):
        total = None
        for j in range(k + 1):
            p = k - j
            f = fb.regular[j]
            contrib = _log_free_part(op, f, p)
            contrib = contrib.scale(comb(k, j))
            total = contrib if total is None else total + contrib
        if any(total.coeffs):
            return False
    return True


def _log_free_part(op: ThetaOperator, f: RationalPowerSeries, p: int) -> RationalPowerSeries:
    """``L^0`` coefficient of ``D(f L^p)``: ``theta^j (f L^p)`` contributes ``p! C(j,p) theta^(j-p) f``."""
    N = f.order
    out = [Fraction(0)] * N
    for n in range(N):
        tot = Fraction(0)
        for i in range(min(op.degree, n) + 1):
            m = n - i
            a = f.coeffs[m]
            if not a:
                continue
            for j, c in enumerate(op.c[i]):
                if c and j >= p:
                    tot += c * factorial(p) * comb(j, p) * Fraction(m) ** (j - p) * a
        out[n] = tot
    return RationalPowerSeries(out, f.var)


# ----------------------------------------------------------------------------
# coordinate inversion
# ----------------------------------------------------------------------------


def _shift_negate(P: list[Fraction], c0: int = -1) -> list[Fraction]:
    """Coefficients of ``P(-theta + c0)`` as a polynomial in theta."""
    out = [Fraction(0)] * len(P)
    for j, c in enumerate(P):
        if c:
            for k in range(j + 1):
                out[k] += c * comb(j, k) * (-1) ** k * Fraction(c0) ** (j - k)
    return out


def invert_and_conjugate(op: ThetaOperator, c, var: str = "z", conjugate: bool = True) -> ThetaOperator:
    """Rewrite in ``z = c / x`` and conjugate by ``z``.

    Solutions of the result are ``z^(-1)`` times solutions of the original, so
    a point at infinity with all exponents 1 becomes a point of maximally
    unipotent monodromy at ``z = 0``.
    """
    c = Fraction(c)
    if c == 0:
        raise OperatorError("c must be nonzero")
    D = op.degree
    shift = -1 if conjugate else 0
    rows = []
    for k in range(D + 1):
        i = D - k
        rows.append([c ** i * t for t in _shift_negate(op.P(i), shift)])
    return ThetaOperator(rows, var).normalized()
