"""Simply-laced root systems (types A, D, E6, E7) with Bourbaki node labels.

Weights are integer vectors in the basis of fundamental weights, so the
coroot pairing with a simple root is just a coordinate.  Roots are integer
vectors in the basis of simple roots.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property


class RootSystemError(ValueError):
    pass


def _dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise RootSystemError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise RootSystemError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((rank - 2, rank))
        return edges
    if family == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError("E_n needs n in 6, 7, 8")
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)]
        edges += [(i, i + 1) for i in range(5, rank)]
        return edges
    raise RootSystemError(f"unsupported family {family!r}")


def parse_type(name: str) -> tuple[str, int]:
    name = name.strip().upper().replace("_", "")
    try:
        return name[0], int(name[1:])
    except (IndexError, ValueError):
        raise RootSystemError(f"cannot parse Dynkin type {name!r}") from None


class RootSystem:
    def __init__(self, family: str, rank: int | None = None):
        if rank is None:
            family, rank = parse_type(family)
        self.family = family.upper()
        self.rank = rank
        self.edges = _dynkin_edges(self.family, rank)
        n = rank
        cm = [[0] * n for _ in range(n)]
        for i in range(n):
            cm[i][i] = 2
        for a, b in self.edges:
            cm[a - 1][b - 1] = cm[b - 1][a - 1] = -1
        self.cartan = cm

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(1, self.rank + 1) if self.cartan[i - 1][j - 1] == -1]

    def simple_root_weight(self, i: int) -> tuple[int, ...]:
        """alpha_i written in the fundamental-weight basis (row i of the Cartan matrix)."""
        return tuple(self.cartan[i - 1])

    def fundamental_weight(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def reflect_weight(self, i: int, mu: tuple[int, ...]) -> tuple[int, ...]:
        c = mu[i - 1]
        a = self.cartan[i - 1]
        return tuple(m - c * x for m, x in zip(mu, a))

    def pairing(self, mu: tuple[int, ...], root: tuple[int, ...]) -> int:
        """(mu, gamma^vee) for a root gamma given in simple-root coordinates."""
        return sum(m * c for m, c in zip(mu, root))

    def root_as_weight(self, root: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * self.rank
        for i, c in enumerate(root):
            if c:
                for j in range(self.rank):
                    out[j] += c * self.cartan[i][j]
        return tuple(out)

    @cached_property
    def positive_roots(self) -> list[tuple[int, ...]]:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                p = sum(beta[j] * self.cartan[j][i] for j in range(n))
                gamma = tuple(b - (p if j == i else 0) for j, b in enumerate(beta))
                if all(g >= 0 for g in gamma) and any(gamma) and gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        return sorted(seen, key=lambda r: (sum(r), r))

    @property
    def roots(self) -> list[tuple[int, ...]]:
        pos = self.positive_roots
        return pos + [tuple(-c for c in r) for r in pos]

    def minuscule_nodes(self) -> list[int]:
        if self.family == "A":
            return list(range(1, self.rank + 1))
        if self.family == "D":
            return [1, self.rank - 1, self.rank]
        if self.family == "E" and self.rank == 6:
            return [1, 6]
        if self.family == "E" and self.rank == 7:
            return [7]
        return []

    def check_minuscule(self, node: int):
        if node not in self.minuscule_nodes():
            raise RootSystemError(f"node {node} of {self.name} is not minuscule")
