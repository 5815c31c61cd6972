"""Generating sets of dihedral Cayley graphs and the concrete graphs they define.

Vertex ``k`` stands for the rotation b^k and vertex ``n + k`` for the
reflection b^k a, so the Laplacian keeps its 2x2 block-circulant shape.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from .errors import InvalidParameters

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _sub(i: int) -> str:
    return str(i).translate(_SUBSCRIPTS)


@dataclass(frozen=True)
class GenSet:
    """Parameters (beta_1..beta_s; gamma_1..gamma_t) of the graph family.

    The generators are b^{±beta_i} for each beta and a b^{gamma_j} for each
    gamma.  ``betas`` may be empty; ``gammas`` may not.
    """

    betas: tuple[int, ...] = ()
    gammas: tuple[int, ...] = (0,)

    def __post_init__(self):
        betas = tuple(int(b) for b in self.betas)
        gammas = tuple(int(g) for g in self.gammas)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "gammas", gammas)
        if not gammas:
            raise InvalidParameters("at least one gamma is required (t >= 1)")
        if any(b < 1 for b in betas):
            raise InvalidParameters(f"betas must be positive, got {list(betas)}")
        if any(g < 0 for g in gammas):
            raise InvalidParameters(f"gammas must be non-negative, got {list(gammas)}")
        if any(x >= y for x, y in zip(betas, betas[1:])):
            raise InvalidParameters(f"betas must be strictly increasing, got {list(betas)}")
        if any(x >= y for x, y in zip(gammas, gammas[1:])):
            raise InvalidParameters(f"gammas must be strictly increasing, got {list(gammas)}")

    @property
    def s(self) -> int:
        return len(self.betas)

    @property
    def t(self) -> int:
        return len(self.gammas)

    @property
    def degree(self) -> int:
        return 2 * self.s + self.t

    def gcd_parameters(self) -> int:
        """gcd of all betas and all pairwise gamma differences (0 if none)."""
        diffs = [g - self.gammas[0] for g in self.gammas[1:]]
        return reduce(math.gcd, list(self.betas) + diffs, 0)

    def __str__(self):
        b = ",".join(map(str, self.betas))
        g = ",".join(map(str, self.gammas))
        return f"GenSet(betas=[{b}], gammas=[{g}])"


@dataclass(frozen=True)
class ValidationReport:
    n: int
    violations: tuple[str, ...] = ()
    formula_valid: bool = True

    @property
    def graph_valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.graph_valid


def validate(gs: GenSet, n: int) -> ValidationReport:
    """Check the simple-graph constraints 0 < beta_1 < ... < beta_s < n/2 and
    0 <= gamma_1 < ... < gamma_t <= n - 1.

    Closed-form engines only need ``formula_valid`` (n >= 1, P not identically
    zero); the graph engines need ``graph_valid``.
    """
    violations = []
    if n < 1:
        violations.append("n ≥ 1 fails")
    for i, b in enumerate(gs.betas, 1):
        if not 2 * b < n:
            violations.append(f"β{_sub(i)} < n/2 fails ({b} ≥ {n}/2)")
    for i, g in enumerate(gs.gammas, 1):
        if g > n - 1:
            violations.append(f"γ{_sub(i)} ≤ n−1 fails ({g} > {n - 1})")
    degenerate = gs.s == 0 and gs.t == 1
    return ValidationReport(n=n, violations=tuple(violations),
                            formula_valid=n >= 1 and not degenerate)


def is_connected(gs: GenSet, n: int) -> bool:
    """Connectivity by the gcd criterion: gcd(n, betas, gamma differences) == 1."""
    if n < 1:
        raise InvalidParameters("n must be >= 1")
    return math.gcd(n, gs.gcd_parameters()) == 1


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on 2n vertices; ``edges`` maps (u, v), u < v, to
    multiplicity.  Loops are stored as (u, u)."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    _adj: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: dict[int, Counter] = {v: Counter() for v in range(2 * self.n)}
        for u, v, m in self.edges:
            adj[u][v] += m
            if u != v:
                adj[v][u] += m
        object.__setattr__(self, "_adj", adj)

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def num_edges(self) -> int:
        return sum(m for _, _, m in self.edges)

    def neighbors(self, v: int) -> dict[int, int]:
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        # a loop adds 2 to the degree
        return sum(self._adj[v].values()) + self._adj[v][v]

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.num_vertices

    def vertex_label(self, v: int) -> str:
        k = v % self.n
        rot = "1" if k == 0 else ("b" if k == 1 else f"b^{k}")
        if v < self.n:
            return rot
        return "a" if k == 0 else f"{rot}a"

    def to_edgelist(self) -> str:
        lines = []
        for u, v, m in self.edges:
            lines.extend([f"{u} {v}"] * m)
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dot(self, name: str = "D") -> str:
        out = [f"graph {name} {{"]
        for v in range(self.num_vertices):
            out.append(f'  {v} [label="{self.vertex_label(v)}"];')
        for u, v, m in self.edges:
            out.extend([f"  {u} -- {v};"] * m)
        out.append("}")
        return "\n".join(out) + "\n"


def build_graph(gs: GenSet, n: int) -> Graph:
    """Build the Cayley graph on the dihedral group of order 2n.

    Rotation generators b^{±j} join b^k to b^{k+j} and b^k a to b^{k-j} a;
    reflections a b^j join b^k to b^{k-j} a.
    """
    report = validate(gs, n)
    if not report.graph_valid:
        raise InvalidParameters(f"{gs} is not a simple graph for n={n}: "
                                + "; ".join(report.violations))
    edges: Counter = Counter()

    def add(u, v):
        edges[(min(u, v), max(u, v))] += 1

    for k in range(n):
        for b in gs.betas:
            add(k, (k + b) % n)
            add(n + k, n + (k - b) % n)
        for g in gs.gammas:
            add(k, n + (k - g) % n)
    return Graph(n=n, edges=tuple((u, v, m) for (u, v), m in sorted(edges.items())))


def laplacian(g: Graph) -> list[list[int]]:
    """Degree matrix minus adjacency matrix, as nested lists of Python ints."""
    size = g.num_vertices
    L = [[0] * size for _ in range(size)]
    for u, v, m in g.edges:
        if u == v:
            continue  # loops do not change the Laplacian
        L[u][v] -= m
        L[v][u] -= m
        L[u][u] += m
        L[v][v] += m
    return L


def all_gensets(max_param: int, max_s: int | None = None, max_t: int | None = None):
    """Every GenSet with betas in 1..max_param and gammas in 0..max_param."""
    betas_pool = range(1, max_param + 1)
    gammas_pool = range(0, max_param + 1)
    s_cap = max_param if max_s is None else max_s
    t_cap = max_param + 1 if max_t is None else max_t
    for s in range(0, s_cap + 1):
        for betas in combinations(betas_pool, s):
            for t in range(1, t_cap + 1):
                for gammas in combinations(gammas_pool, t):
                    yield GenSet(betas, gammas)
