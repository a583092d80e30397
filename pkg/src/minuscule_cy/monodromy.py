"""Numerical analytic continuation of Picard-Fuchs solutions, monodromy in
Frobenius and integral symplectic bases, the connection matrix between two
points of maximally unipotent monodromy, and integrality searches.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb

import mpmath

from .linalg import nullspace, primitive_integer_vector, det as exact_det
from .ode import OperatorError, ThetaOperator, frobenius_coefficients, invert_and_conjugate, is_mum, riemann_scheme


class MonodromyError(RuntimeError):
    pass


class PrecisionError(MonodromyError):
    pass


def make_context(digits: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = digits
    return ctx


def _num(ctx, c: Fraction):
    return ctx.mpf(c.numerator) / c.denominator


# ----------------------------------------------------------------------------
# truncated polynomial helpers (lists of coefficients in a local variable)
# ----------------------------------------------------------------------------


def _pmul(a, b, n):
    out = [a[0] * 0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j in range(min(len(b), n - i)):
                out[i + j] += ai * b[j]
    return out


def _compose(f, g, n):
    """``f(g(u))`` mod ``u^n`` for ``g(0) = 0``."""
    out = [f[0] * 0] * n
    power = [f[0] * 0 + 1] + [f[0] * 0] * (n - 1)
    for k in range(min(len(f), n)):
        for i in range(n):
            out[i] += f[k] * power[i]
        power = _pmul(power, g, n)
    return out


# ----------------------------------------------------------------------------
# the operator in d/dx form, evaluated numerically
# ----------------------------------------------------------------------------


class NumericOperator:
    """``sum_k A_k(x) d^k/dx^k`` with multiprecision coefficients.

    Solutions are carried as jets: ``jet[i][s] = y_s^(i)(x) / i!`` for
    ``i < order`` and each solution ``s``.
    """

    def __init__(self, op: ThetaOperator, ctx: mpmath.MPContext, singular: list[complex],
                 ratio: float = 0.5, max_terms: int = 20000):
        self.op = op
        self.ctx = ctx
        self.R = op.order
        self.A = [[_num(ctx, c) for c in row] for row in op.d_form()]
        self.singular = [ctx.mpc(p) for p in singular]
        self.ratio = ratio
        self.max_terms = max_terms
        self.steps = 0

    def dist(self, x) -> float:
        return float(min(abs(x - p) for p in self.singular))

    def _local(self, x0):
        """``a[k][l]``: coefficient of ``t^l`` in ``A_k(x0 + t)``."""
        out = []
        for row in self.A:
            L = len(row)
            loc = []
            for l in range(L):
                s = self.ctx.mpc(0)
                for p in range(l, L):
                    if row[p]:
                        s += row[p] * comb(p, l) * x0 ** (p - l)
                loc.append(s)
            while len(loc) > 1 and loc[-1] == 0:
                loc.pop()
            out.append(loc)
        return out

    def step(self, x0, jets, h):
        """Jets at ``x0 + h`` from jets at ``x0`` via the local Taylor recurrence."""
        ctx = self.ctx
        R = self.R
        d = self.dist(x0)
        q = abs(complex(h)) / d
        if q >= 1:
            raise MonodromyError("step leaves the disc of convergence")
        if d < 10.0 ** (-ctx.dps / 4):
            raise PrecisionError("step underflow near a singular point")
        M = int(math.ceil((ctx.dps + 10) * math.log(10) / -math.log(q))) + R + 5
        if M > self.max_terms:
            raise PrecisionError("too many Taylor terms; refine the path")
        a = self._local(x0)
        lead = a[R][0]
        nsol = len(jets[0])
        c = [list(row) for row in jets]
        terms = [(k, l, a[k][l]) for k in range(R + 1) for l in range(len(a[k]))
                 if (k, l) != (R, 0) and a[k][l] != 0]
        for m in range(0, M - R):
            acc = [ctx.mpc(0)] * nsol
            for k, l, akl in terms:
                if l > m:
                    continue
                n = m - l + k
                ff = 1
                for t in range(k):
                    ff *= n - t
                coef = akl * ff
                row = c[n]
                for s in range(nsol):
                    acc[s] += coef * row[s]
            ffR = 1
            for t in range(R):
                ffR *= m + R - t
            den = -lead * ffR
            c.append([v / den for v in acc])
        # re-expand at x0 + h
        out = []
        hp = [ctx.mpc(1)]
        for n in range(1, len(c)):
            hp.append(hp[-1] * h)
        for j in range(R):
            row = []
            for s in range(nsol):
                tot = ctx.mpc(0)
                for n in range(j, len(c)):
                    tot += comb(n, j) * c[n][s] * hp[n - j]
                row.append(tot)
            out.append(row)
        self.steps += 1
        return out

    def along(self, path, jets):
        """Continue along the polygon ``path`` (its first vertex is the start)."""
        ctx = self.ctx
        x = ctx.mpc(path[0])
        for target in path[1:]:
            target = ctx.mpc(target)
            while abs(target - x) > 0:
                d = self.dist(x)
                remaining = abs(target - x)
                if remaining <= self.ratio * d:
                    h = target - x
                else:
                    h = (target - x) * (self.ratio * d / float(remaining))
                jets = self.step(x, jets, h)
                x = x + h
                if abs(target - x) < 10.0 ** (-ctx.dps):
                    x = target
        return jets


# ----------------------------------------------------------------------------
# Frobenius jets at a point
# ----------------------------------------------------------------------------


def frobenius_jets(op: ThetaOperator, ctx, x0, logx0=None, prefactor_power: int = 0, in_var=None):
    """Jets of the Frobenius solutions ``omega_k`` at ``x0`` (MUM point at the origin).

    ``logx0`` fixes the branch of the logarithm (principal by default).  With
    ``prefactor_power = 1`` the functions are ``x * omega_k``.  If ``in_var`` is
    given as ``(c, y0)`` the jets are re-expressed in the variable ``y = c / x``
    at ``y0 = c / x0``.
    """
    R = op.order
    x0 = ctx.mpc(x0)
    r = abs(x0)
    # radius of convergence: nearest nonzero finite singular point
    sch = riemann_scheme(op)
    rad = min(abs(complex(p.value)) for p in sch.points if p.value not in (None, 0))
    ratio = float(r) / rad
    if ratio >= 1:
        raise MonodromyError("point outside the disc of convergence of the Frobenius series")
    N = int(math.ceil((ctx.dps + 10) * math.log(10) / -math.log(ratio))) + 10
    rows = [[_num(ctx, c) for c in row] for row in op.c]
    a = frobenius_coefficients(rows, R, N, ctx.mpf(1))
    regs = [[math.factorial(k) * a[n][k] for n in range(N)] for k in range(R)]
    # local expansions in t = x - x0
    powers = [ctx.mpc(1)]
    for n in range(1, N):
        powers.append(powers[-1] * x0)
    reg_loc = []
    for k in range(R):
        loc = []
        for i in range(R):
            s = ctx.mpc(0)
            for n in range(i, N):
                if regs[k][n]:
                    s += regs[k][n] * comb(n, i) * powers[n - i]
            loc.append(s)
        reg_loc.append(loc)
    L0 = ctx.log(x0) if logx0 is None else logx0
    Lser = [L0] + [(-1) ** (i + 1) / (i * x0 ** i) for i in range(1, R)]
    Lpow = [[ctx.mpc(1)] + [ctx.mpc(0)] * (R - 1)]
    for p in range(1, R):
        Lpow.append(_pmul(Lpow[-1], Lser, R))
    sols = []
    for k in range(R):
        tot = [ctx.mpc(0)] * R
        for j in range(k + 1):
            term = _pmul(reg_loc[j], Lpow[k - j], R)
            tot = [u + comb(k, j) * v for u, v in zip(tot, term)]
        for _ in range(prefactor_power):
            tot = _pmul(tot, [x0, ctx.mpc(1)], R)
        sols.append(tot)
    if in_var is not None:
        c, y0 = in_var
        c = _num(ctx, Fraction(c))
        y0 = ctx.mpc(y0)
        # x - x0 = c/(y0+u) - c/y0 = -(c u / y0^2) * sum (-u/y0)^i
        g = [ctx.mpc(0)] + [-(c / y0 ** 2) * (-1 / y0) ** (i - 1) for i in range(1, R)]
        sols = [_compose(s, g, R) for s in sols]
    return [[sols[s][i] for s in range(R)] for i in range(R)]


# ----------------------------------------------------------------------------
# small dense complex linear algebra
# ----------------------------------------------------------------------------


def _cmat_inv(ctx, M):
    return ctx.inverse(ctx.matrix(M))


def _to_rows(ctx, M):
    return [[M[i, j] for j in range(M.cols)] for i in range(M.rows)]


def cmat_mul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), 0) for col in zip(*B)] for row in A]


def _transpose(M):
    return [list(r) for r in zip(*M)]


def frobenius_monodromy(ctx, J0, J1):
    """``F`` with continued ``omega_s = sum_t F[s][t] omega_t`` from jets before/after."""
    FT = ctx.inverse(ctx.matrix(J0)) * ctx.matrix(J1)
    return _transpose(_to_rows(ctx, FT))


# ----------------------------------------------------------------------------
# continuation plan
# ----------------------------------------------------------------------------


@dataclass
class SingularLocation:
    label: str
    value: complex | None  # None for infinity
    apparent: bool


@dataclass
class ContinuationPlan:
    """Base point on the positive real axis and loops through the upper half plane."""

    base: float
    points: list[SingularLocation]
    digits: int = 120
    ratio: float = 0.5
    polygon: int = 24

    @classmethod
    def for_operator(cls, op: ThetaOperator, digits: int = 120) -> ContinuationPlan:
        sch = riemann_scheme(op)
        pts = []
        for p in sch.points:
            if p.label == "oo":
                continue
            apparent = p.label != "0" and _is_apparent(p.exponents)
            pts.append(SingularLocation(p.label, complex(p.value), apparent))
        pts.sort(key=lambda s: s.value.real)
        k = 0
        for s in pts:
            if s.label != "0" and not s.apparent:
                k += 1
                s.label = f"zeta{k}"
        positive = [s.value.real for s in pts if s.value.real > 0]
        if not positive:
            raise MonodromyError("no singular point on the positive real axis to bound the base point")
        base = min(positive) / 2
        pts.append(SingularLocation("oo", None, False))
        return cls(base, pts, digits)

    @property
    def finite(self) -> list[complex]:
        return [p.value for p in self.points if p.value is not None]

    def label(self, p: SingularLocation) -> str:
        return p.label

    def radius(self, p: SingularLocation) -> float:
        others = [abs(p.value - q) for q in self.finite if q != p.value]
        return 0.5 * min(others)

    def loop(self, p: SingularLocation) -> list[complex]:
        """Closed polygon from the base point encircling ``p`` once.

        Finite points are circled counterclockwise; infinity is circled
        counterclockwise in ``1/x``, i.e. clockwise in ``x``.
        """
        b = complex(self.base)
        n = self.polygon
        if p.value is None:
            R = 2 * max(abs(v) for v in self.finite)
            start = [b, b + 1j * R, 1j * R]
            circle = [R * complex(math.cos(math.pi / 2 - 2 * math.pi * k / n),
                                  math.sin(math.pi / 2 - 2 * math.pi * k / n)) for k in range(1, n + 1)]
            return start + circle + start[::-1][1:]
        c = p.value
        r = self.radius(p)
        if abs(c) == 0:
            circle = [b * complex(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
                      for k in range(1, n)]
            return [b] + circle + [b]
        H = r
        start = [b, b + 1j * H, c.real + 1j * H, c + 1j * r]
        circle = [c + r * complex(math.cos(math.pi / 2 + 2 * math.pi * k / n),
                                  math.sin(math.pi / 2 + 2 * math.pi * k / n)) for k in range(1, n + 1)]
        return start + circle + start[::-1][1:]

    def path_to(self, x) -> list[complex]:
        """Upper-half-plane path from the base point to ``x`` (with ``Im x > 0``)."""
        b = complex(self.base)
        x = complex(x)
        return [b, b + 1j * x.imag, x]


def _is_apparent(exps) -> bool:
    """Integral distinct exponents forming (0, 1, ..., ) with a gap: a candidate apparent point."""
    return all(e.denominator == 1 for e in exps) and len(set(exps)) == len(exps) and \
        list(exps) != list(range(len(exps)))


# ----------------------------------------------------------------------------
# integral symplectic normalization
# ----------------------------------------------------------------------------


@dataclass
class SymplecticNormalization:
    deg: int
    c2H: int
    chi: int
    a: Fraction

    @property
    def kappa(self) -> int:
        return -self.deg

    @property
    def beta(self) -> int:
        return -self.c2H

    def transform(self, ctx):
        """``A * diag(n_k)`` mapping Frobenius solutions to the integral basis."""
        two_pi_i = 2 * ctx.pi * ctx.mpc(0, 1)
        n = [1 / two_pi_i ** k for k in range(4)]
        gamma = -n[3] * ctx.zeta(3) * self.chi
        k = ctx.mpf(self.kappa)
        b24 = ctx.mpf(self.beta) / 24
        a = _num(ctx, Fraction(self.a))
        A = [[1, 0, 0, 0],
             [0, 1, 0, 0],
             [b24, a, -k / 2, 0],
             [gamma, b24, 0, k / 6]]
        return [[A[i][j] * n[j] for j in range(4)] for i in range(4)]

    def to_json(self) -> dict:
        return {"deg": self.deg, "c2H": self.c2H, "chi": self.chi, "a": str(self.a)}


def conjugate(ctx, T, F):
    """``T F T^-1``."""
    Tm = ctx.matrix(T)
    return _to_rows(ctx, Tm * ctx.matrix(F) * ctx.inverse(Tm))


def integrality_defect(ctx, M) -> float:
    worst = 0.0
    for row in M:
        for x in row:
            x = ctx.mpc(x)
            worst = max(worst, float(abs(x.real - ctx.nint(x.real))), float(abs(x.imag)))
    return worst


def round_matrix(ctx, M) -> list[list[int]]:
    return [[int(ctx.nint(ctx.mpc(x).real)) for x in row] for row in M]


# ----------------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------------


@dataclass
class MonodromyReport:
    labels: list[str]
    matrices: dict[str, list[list[int]]]
    normalization: SymplecticNormalization
    defect: float
    S_xz: list[list[int]] | None = None
    N_z: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"points": self.labels, "matrices": self.matrices,
               "normalization": self.normalization.to_json(), "defect": f"{self.defect:.3e}"}
        if self.S_xz is not None:
            out["S_xz"] = self.S_xz
            out["N_z"] = self.N_z
        out.update(self.extra)
        return out


class MonodromyComputation:
    """All loops of one operator at a fixed working precision."""

    def __init__(self, op: ThetaOperator, digits: int = 120, plan: ContinuationPlan | None = None):
        if not is_mum(op):
            raise OperatorError("expansion point is not of maximally unipotent monodromy")
        self.op = op
        self.ctx = make_context(digits + 10)
        self.plan = plan or ContinuationPlan.for_operator(op, digits)
        self.num = NumericOperator(op, self.ctx, self.plan.finite)
        self.J0 = frobenius_jets(op, self.ctx, self.plan.base)
        self._F: dict[str, list] = {}

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.plan.points]

    def frobenius(self, label: str):
        if label not in self._F:
            p = next(q for q in self.plan.points if q.label == label)
            J1 = self.num.along(self.plan.loop(p), self.J0)
            self._F[label] = frobenius_monodromy(self.ctx, self.J0, J1)
        return self._F[label]

    def all_frobenius(self) -> dict[str, list]:
        return {lab: self.frobenius(lab) for lab in self.labels}

    def integral(self, norm: SymplecticNormalization, labels=None) -> dict[str, list]:
        T = norm.transform(self.ctx)
        return {lab: conjugate(self.ctx, T, self.frobenius(lab)) for lab in (labels or self.labels)}

    def jets_at(self, x):
        return self.num.along(self.plan.path_to(x), self.J0)


def a_candidates(deg: int, span: int = 3) -> list[Fraction]:
    """``deg/2 + Z`` near zero, then small rationals; ordered by size, negatives first."""
    base = Fraction(deg, 2)
    cands = {base + k for k in range(-deg - span, deg + span + 1)}
    cands |= {Fraction(p, q) for q in (1, 2, 3, 4, 6) for p in range(-2 * q, 2 * q + 1)}
    return sorted(cands, key=lambda a: (abs(a), a))


NEAR_INTEGRAL = 1e-3


def integral_basis_search(mc: MonodromyComputation, deg: int, c2H: int, chi: int,
                          tol: float | None = None, candidates=None) -> tuple[SymplecticNormalization, dict]:
    """First ``a`` for which every loop becomes integral in the symplectic basis.

    A candidate that is integral to ``NEAR_INTEGRAL`` but not to ``tol`` means
    the working precision is too low, reported as ``PrecisionError``.
    """
    tol = tol if tol is not None else 10.0 ** (-mc.plan.digits / 2)
    F = mc.all_frobenius()
    best = math.inf
    for a in candidates or a_candidates(deg):
        norm = SymplecticNormalization(deg, c2H, chi, a)
        T = norm.transform(mc.ctx)
        mats = {lab: conjugate(mc.ctx, T, F[lab]) for lab in mc.labels}
        defect = max(integrality_defect(mc.ctx, M) for M in mats.values())
        if defect < NEAR_INTEGRAL and is_symplectic_family([round_matrix(mc.ctx, M) for M in mats.values()]):
            if defect < tol:
                return norm, mats
            best = min(best, defect)
    if best < NEAR_INTEGRAL:
        raise PrecisionError(f"monodromy integral only to {best:.1e}, above the tolerance {tol:.1e}; "
                             "increase the working precision")
    raise MonodromyError(f"no integral symplectic basis for invariants ({deg}, {c2H}, {chi})")


def monodromy_report(mc: MonodromyComputation, norm: SymplecticNormalization, mats=None) -> MonodromyReport:
    mats = mats or mc.integral(norm)
    defect = max(integrality_defect(mc.ctx, M) for M in mats.values())
    rounded = {lab: round_matrix(mc.ctx, M) for lab, M in mats.items()}
    return MonodromyReport(mc.labels, rounded, norm, defect)


# ----------------------------------------------------------------------------
# exact checks on rounded matrices
# ----------------------------------------------------------------------------


def imat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def product_in_order(mats: dict[str, list], order) -> list[list[int]]:
    out = identity(len(next(iter(mats.values()))))
    for lab in order:
        out = imat_mul(out, mats[lab])
    return out


def trivial_product_orders(mats: dict[str, list]) -> list[tuple[str, ...]]:
    """Cyclic orders (first label fixed) whose product of loops is the identity."""
    labs = list(mats)
    found = []
    for perm in permutations(labs[1:]):
        order = (labs[0],) + perm
        if product_in_order(mats, order) == identity(len(mats[labs[0]])):
            found.append(order)
    return found


def invariant_symplectic_form(mats) -> list[list[int]] | None:
    """Primitive integer antisymmetric ``J`` with ``M^T J M = J`` for all given ``M``."""
    n = len(mats[0])
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = []
    for M in mats:
        for r in range(n):
            for s in range(r + 1, n):
                row = []
                for (i, j) in pairs:
                    # coefficient of J_ij in (M^T J M - J)_rs
                    v = M[i][r] * M[j][s] - M[j][r] * M[i][s]
                    if (i, j) == (r, s):
                        v -= 1
                    row.append(v)
                rows.append(row)
    ns = nullspace(rows, len(pairs))
    if len(ns) != 1:
        return None
    v = primitive_integer_vector(ns[0])
    J = [[0] * n for _ in range(n)]
    for (i, j), x in zip(pairs, v):
        J[i][j], J[j][i] = x, -x
    return J


def is_symplectic_family(mats) -> bool:
    """Integral symplectic monodromy: a shared invariant antisymmetric form of
    determinant 1, and every rank-one ``M - 1`` (a conifold) primitive, as for
    a Picard-Lefschetz transvection along a primitive vanishing cycle.
    """
    J = invariant_symplectic_form(mats)
    if J is None or exact_det(J) != 1:
        return False
    for M in mats:
        D = [[M[i][j] - (i == j) for j in range(len(M))] for i in range(len(M))]
        if exact_rank(D) == 1 and math.gcd(*[x for row in D for x in row]) != 1:
            return False
    return True


def is_maximally_unipotent(M) -> bool:
    n = len(M)
    N = [[M[i][j] - (i == j) for j in range(n)] for i in range(n)]
    P = identity(n)
    powers = []
    for _ in range(n):
        P = imat_mul(P, N)
        powers.append(P)
    zero = [[0] * n for _ in range(n)]
    return powers[n - 1] == zero and powers[n - 2] != zero


def exact_rank(M) -> int:
    from .linalg import rank
    return rank(M)


# ----------------------------------------------------------------------------
# second MUM point
# ----------------------------------------------------------------------------


@dataclass
class MirrorPair:
    """Monodromy at two MUM points of one operator, connected through the upper half plane."""

    x_side: MonodromyComputation
    op_z: ThetaOperator
    c: Fraction
    C: list  # omega^X = C (z omega^Z) as numeric matrix

    def z_frobenius(self, label: str):
        ctx = self.x_side.ctx
        Cm = ctx.matrix(self.C)
        F = ctx.matrix(self.x_side.frobenius(label))
        return _to_rows(ctx, ctx.inverse(Cm) * F * Cm)

    def z_integral(self, norm: SymplecticNormalization) -> dict[str, list]:
        T = norm.transform(self.x_side.ctx)
        return {lab: conjugate(self.x_side.ctx, T, self.z_frobenius(lab)) for lab in self.x_side.labels}

    def connection(self, norm_x: SymplecticNormalization, norm_z: SymplecticNormalization):
        """``S`` with ``Pi^X = S (z Pi^Z)``."""
        ctx = self.x_side.ctx
        TX = ctx.matrix(norm_x.transform(ctx))
        TZ = ctx.matrix(norm_z.transform(ctx))
        return _to_rows(ctx, TX * ctx.matrix(self.C) * ctx.inverse(TZ))

    def conifold_invariants(self, deg: int, label: str):
        """``(c2H, chi)`` forced by a conifold at ``label`` whose vanishing period is ``Pi_0``.

        With ``F - 1 = u w^T`` in the Frobenius basis, the image of the
        monodromy in the symplectic basis is proportional to ``e_0`` exactly when
        ``beta = 12 kappa n_2 u_2 / u_0`` and ``chi = kappa u_3 / (6 zeta(3) u_0)``.
        """
        ctx = self.x_side.ctx
        F = self.z_frobenius(label)
        D = [[F[i][j] - (i == j) for j in range(4)] for i in range(4)]
        col = max(range(4), key=lambda j: max(abs(D[i][j]) for i in range(4)))
        u = [D[i][col] for i in range(4)]
        two_pi_i = 2 * ctx.pi * ctx.mpc(0, 1)
        kappa = -deg
        if abs(u[0]) < ctx.mpf(10) ** (-ctx.dps // 2):
            return None
        beta = 12 * kappa * (u[2] / two_pi_i ** 2) / u[0]
        chi = kappa * u[3] / (6 * ctx.zeta(3) * u[0])
        return -beta, chi

    def z_invariant_scan(self, degs=range(1, 51), label: str | None = None, tol: float | None = None):
        """All ``(deg, c2H, chi, a)`` with integral Z-side monodromy, ``deg`` in ``degs``."""
        ctx = self.x_side.ctx
        tol = tol if tol is not None else 10.0 ** (-self.x_side.plan.digits / 2)
        label = label or self.z_conifold_label()
        hits = []
        Fz = {lab: self.z_frobenius(lab) for lab in self.x_side.labels}
        for deg in degs:
            inv = self.conifold_invariants(deg, label)
            if inv is None:
                continue
            c2, chi = inv
            if abs(c2.imag) > tol or abs(chi.imag) > tol:
                continue
            c2r, chir = int(ctx.nint(c2.real)), int(ctx.nint(chi.real))
            if abs(c2.real - c2r) > tol or abs(chi.real - chir) > tol:
                continue
            for a in a_candidates(deg):
                norm = SymplecticNormalization(deg, c2r, chir, a)
                T = norm.transform(ctx)
                mats = [conjugate(ctx, T, F) for F in Fz.values()]
                ok = all(integrality_defect(ctx, M) < tol for M in mats)
                if ok and is_symplectic_family([round_matrix(ctx, M) for M in mats]):
                    hits.append(norm)
                    break
        return hits

    def z_conifold_label(self) -> str:
        """Finite singular point nearest to ``z = 0`` (largest ``|x|``), excluding apparent ones."""
        cands = [p for p in self.x_side.plan.points if p.value is not None and not p.apparent and p.value != 0]
        return max(cands, key=lambda p: abs(p.value)).label


def mirror_pair(mc: MonodromyComputation, c=-1) -> MirrorPair:
    c = Fraction(c)
    opz = invert_and_conjugate(mc.op, c, var="z")
    ctx = mc.ctx
    far = 2 * max(abs(v) for v in mc.plan.finite)
    xs = ctx.mpc(0, far)
    zs = _num(ctx, c) / xs
    JX = mc.jets_at(xs)
    JZ = frobenius_jets(opz, ctx, zs, prefactor_power=1, in_var=(c, xs))
    CT = ctx.inverse(ctx.matrix(JZ)) * ctx.matrix(JX)
    C = _transpose(_to_rows(ctx, CT))
    return MirrorPair(mc, opz, c, C)
