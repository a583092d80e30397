"""Small quantum cohomology of minuscule homogeneous spaces: the quantum
Chevalley matrix of multiplication by the hyperplane class and its reduction
to a scalar differential operator in ``theta_q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ode import ThetaOperator, fit_operator
from .roots import RootSystem
from .schubert import WQLattice
from .series import RationalPowerSeries


class QuantumError(ValueError):
    pass


@dataclass
class QuantumConnection:
    """``H * sigma_mu = sum_nu (M0[nu][mu] + q M1[nu][mu]) sigma_nu``.

    Schubert classes ``sigma_mu`` are indexed by the orbit weights ``mu`` and
    graded by codimension ``length[mu]``; ``deg q`` is the index ``h``.
    """

    basis: list[tuple]
    length: dict[tuple, int]
    index: int
    classical: dict[tuple, dict[tuple, int]]
    quantum: dict[tuple, dict[tuple, int]]

    @property
    def fundamental(self) -> tuple:
        return self.basis[0]

    def matrix(self):
        """Dense ``(M0, M1)`` in basis order."""
        pos = {mu: k for k, mu in enumerate(self.basis)}
        n = len(self.basis)
        M0 = [[0] * n for _ in range(n)]
        M1 = [[0] * n for _ in range(n)]
        for mu, terms in self.classical.items():
            for nu, c in terms.items():
                M0[pos[nu]][pos[mu]] += c
        for mu, terms in self.quantum.items():
            for nu, c in terms.items():
                M1[pos[nu]][pos[mu]] += c
        return M0, M1

    def check_homogeneous(self):
        for mu, terms in self.classical.items():
            for nu in terms:
                if self.length[nu] != self.length[mu] + 1:
                    raise QuantumError("classical term breaks the grading")
        for mu, terms in self.quantum.items():
            for nu in terms:
                if self.length[nu] != self.length[mu] + 1 - self.index:
                    raise QuantumError("quantum term breaks the grading")


def quantum_chevalley(L: WQLattice) -> QuantumConnection:
    """Multiplication by the hyperplane class on the Schubert basis.

    For simply laced ``G`` and a minuscule weight, a term ``sigma_(mu - gamma)``
    appears for each root ``gamma`` with ``(mu, gamma) = 1``; it is classical
    when the length rises by one and carries ``q`` when the length changes
    by ``1 - h`` (degree homogeneity), all coefficients being 1.
    """
    rs = L.rs
    index = len(L.poset.poset) and L.poset.poset.heights().h_P
    roots = [rs.root_as_weight(r) for r in rs.roots]
    elements = set(L.elements)
    classical: dict[tuple, dict[tuple, int]] = {}
    quantum: dict[tuple, dict[tuple, int]] = {}
    for mu in L.elements:
        classical[mu], quantum[mu] = {}, {}
        for r, g in zip(rs.roots, roots):
            if rs.pairing(mu, r) != 1:
                continue
            nu = tuple(a - b for a, b in zip(mu, g))
            if nu not in elements:
                raise QuantumError("reflected weight left the orbit")
            dl = L.length[nu] - L.length[mu]
            if dl == 1:
                classical[mu][nu] = classical[mu].get(nu, 0) + 1
            elif dl == 1 - index:
                quantum[mu][nu] = quantum[mu].get(nu, 0) + 1
    qc = QuantumConnection(list(L.elements), dict(L.length), index, classical, quantum)
    qc.check_homogeneous()
    return qc


def flat_section_series(qc: QuantumConnection, N: int) -> RationalPowerSeries:
    """Fundamental-class component of the flat section of ``theta S = M(q)^T S`` with ``S(0) = e_1``.

    The recursion ``(m - M0^T) s_m = M1^T s_(m-1)`` is solved by back
    substitution along decreasing codimension (``M0^T`` lowers it by one).
    """
    M0, M1 = qc.matrix()
    n = len(qc.basis)
    order = sorted(range(n), key=lambda k: -qc.length[qc.basis[k]])
    T0 = [[(j, M0[j][i]) for j in range(n) if M0[j][i]] for i in range(n)]
    T1 = [[(j, M1[j][i]) for j in range(n) if M1[j][i]] for i in range(n)]
    prev = [Fraction(0)] * n
    prev[0] = Fraction(1)
    out = [Fraction(1)]
    for m in range(1, N):
        cur = [Fraction(0)] * n
        for i in order:
            tot = sum((c * prev[j] for j, c in T1[i]), Fraction(0))
            tot += sum((c * cur[j] for j, c in T0[i]), Fraction(0))
            cur[i] = tot / m
        out.append(cur[0])
        prev = cur
    return RationalPowerSeries(out, "q")


def scalar_reduction(qc: QuantumConnection, max_order: int | None = None, max_degree: int = 3,
                     terms: int | None = None) -> ThetaOperator:
    """Scalar operator annihilating the fundamental-class component."""
    n = len(qc.basis)
    R = max_order or n
    N = terms or (R + 1) * (max_degree + 1) + 12
    s = flat_section_series(qc, N)
    # the component is a series in q^1 only through q^h-steps; fit in q directly
    return fit_operator(s, R, max_degree, min_order=1)


def quantum_operator(family: str, node: int, max_degree: int = 3) -> ThetaOperator:
    L = WQLattice(RootSystem(family), node)
    return scalar_reduction(quantum_chevalley(L), max_degree=max_degree)
