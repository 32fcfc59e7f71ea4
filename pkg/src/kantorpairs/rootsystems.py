"""Finite root systems (types A-G and BC), their Dynkin diagrams, Weyl
machinery and diagram automorphisms.

Node labeling
-------------
Nodes are numbered 1..n.  For types A, B, C, D, F, G (and BC) the numbering
is Bourbaki's.  For E6, E7, E8 we use the chain-first labeling in which
nodes 1..n-1 form a path and node n hangs off node 3:

    E6:  1 - 2 - 3 - 4 - 5      with 6 attached to 3
    E7:  1 - 2 - 3 - 4 - 5 - 6  with 7 attached to 3
    E8:  1 - 2 - ... - 7        with 8 attached to 3

``BOURBAKI_MAP[family, rank]`` translates node ids to Bourbaki numbering.
In the extended diagram the affine node (the negative of the highest root)
carries id 0.

For BC_n the first simple root is the short one (so node 1 doubles), which
matches the BC2 base {a1, a2} with 2*a1 a root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

Vector = tuple[int, ...]
NodeSubset = frozenset[int]
WeylWord = tuple[int, ...]

RANK_BOUNDS = {
    "A": (1, 24),
    "B": (2, 24),
    "C": (3, 24),
    "D": (4, 24),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
    "BC": (1, 24),
}

FAMILIES = tuple(RANK_BOUNDS)


class InvalidTypeError(ValueError):
    """Requested diagram type is outside the supported rank bounds."""


class UnsupportedError(ValueError):
    """Operation not defined for this root system (e.g. non-reduced input)."""


@dataclass(frozen=True, order=True)
class DiagramType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in RANK_BOUNDS:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        lo, hi = RANK_BOUNDS[self.family]
        if not lo <= self.rank <= hi:
            raise InvalidTypeError(f"rank {self.rank} out of bounds for {self.family} ({lo}..{hi})")

    @classmethod
    def parse(cls, text: str) -> "DiagramType":
        text = text.strip()
        fam = "BC" if text[:2] == "BC" else text[:1]
        try:
            rank = int(text[len(fam):])
        except ValueError:
            raise InvalidTypeError(f"cannot parse diagram type {text!r}") from None
        return cls(fam, rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _edges_and_gram(t: DiagramType) -> tuple[list[tuple[int, int]], dict]:
    """Adjacency edges and the nonzero Gram entries (a_i, a_j) of the base."""
    n = t.rank
    fam = t.family
    chain = [(i, i + 1) for i in range(1, n)]
    diag = {i: Fraction(2) for i in range(1, n + 1)}
    off = {}
    if fam == "A" or (fam == "E"):
        edges = chain if fam == "A" else [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
        off = {e: Fraction(-1) for e in edges}
    elif fam == "B":
        edges = chain
        diag[n] = Fraction(1)
        off = {e: Fraction(-1) for e in edges}
    elif fam == "C":
        edges = chain
        diag[n] = Fraction(4)
        off = {e: Fraction(-1) for e in edges}
        off[(n - 1, n)] = Fraction(-2)
    elif fam == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        off = {e: Fraction(-1) for e in edges}
    elif fam == "F":
        edges = chain
        diag[3] = diag[4] = Fraction(1)
        off = {(1, 2): Fraction(-1), (2, 3): Fraction(-1), (3, 4): Fraction(-1, 2)}
    elif fam == "G":
        edges = chain
        diag[2] = Fraction(6)
        off = {(1, 2): Fraction(-3)}
    elif fam == "BC":
        # Short root first: node 1 is the doubling node.
        edges = chain
        diag[1] = Fraction(1)
        off = {e: Fraction(-1) for e in edges}
    gram = dict(diag)
    for (i, j), v in off.items():
        gram[(i, j)] = v
    return edges, gram


@dataclass(frozen=True)
class DynkinDiagram:
    type: DiagramType
    nodes: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]   # cartan[i-1][j-1] = <a_i, a_j>
    gram: tuple[tuple[Fraction, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def pairing(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]


def _build_diagram(t: DiagramType) -> DynkinDiagram:
    n = t.rank
    edges, gram = _edges_and_gram(t)
    gram_full = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        gram_full[i - 1][i - 1] = gram[i]
    for (i, j), v in ((k, v) for k, v in gram.items() if isinstance(k, tuple)):
        gram_full[i - 1][j - 1] = v
        gram_full[j - 1][i - 1] = v
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cartan[i][j] = int(2 * gram_full[i][j] / gram_full[j][j])
    diagram = DynkinDiagram(
        type=t,
        nodes=tuple(range(1, n + 1)),
        cartan=tuple(tuple(row) for row in cartan),
        gram=tuple(tuple(row) for row in gram_full),
        edges=tuple(edges),
    )
    for i in range(n):
        assert cartan[i][i] == 2
        for j in range(n):
            if i != j:
                assert cartan[i][j] in (0, -1, -2, -3)
                assert (cartan[i][j] == 0) == (cartan[j][i] == 0)
    return diagram


class RootSystem:
    """All roots of a finite root system as integer vectors in the basis
    of simple roots, with exact inner-product data and Weyl machinery."""

    def __init__(self, t: DiagramType):
        self.type = t
        self.diagram = _build_diagram(t)
        self.rank = t.rank
        self.reduced = t.family != "BC"
        self._gram = self.diagram.gram
        self.roots = self._generate_roots()
        self.root_set = set(self.roots)
        self.positive_roots = tuple(v for v in self.roots if self._is_positive(v))
        self.highest_root = self._find_highest_root()
        self._word_cache: dict[NodeSubset, WeylWord] = {}
        self._sigma_cache: dict[NodeSubset, dict[int, int]] = {}
        self._aut_cache: list[dict[int, int]] | None = None

    # -- construction ------------------------------------------------------

    def _generate_roots(self) -> tuple[Vector, ...]:
        n = self.rank
        simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            v = frontier.pop()
            for i in range(1, n + 1):
                w = self.reflect_simple(v, i)
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if self.type.family == "BC":
            # doubles of short roots (B_n-length normalization: short length 1)
            for v in list(seen):
                if self.inner(v, v) == 1:
                    seen.add(tuple(2 * c for c in v))
        for v in seen:
            assert all(c >= 0 for c in v) or all(c <= 0 for c in v), v
        return tuple(sorted(seen))

    @staticmethod
    def _is_positive(v: Vector) -> bool:
        return all(c >= 0 for c in v) and any(c > 0 for c in v)

    def _find_highest_root(self) -> Vector:
        best_h = max(sum(v) for v in self.positive_roots)
        top = [v for v in self.positive_roots if sum(v) == best_h]
        assert len(top) == 1, "highest root must be unique"
        return top[0]

    # -- inner products and reflections -------------------------------------

    def inner(self, v: Vector, w: Vector) -> Fraction:
        g = self._gram
        total = Fraction(0)
        for i, a in enumerate(v):
            if a:
                row = g[i]
                for j, b in enumerate(w):
                    if b:
                        total += a * b * row[j]
        return total

    def pairing(self, v: Vector, w: Vector):
        """<v, w> = 2(v,w)/(w,w); integral when w is a root."""
        return 2 * self.inner(v, w) / self.inner(w, w)

    def reflect_simple(self, v: Vector, i: int) -> Vector:
        """s_i(v) = v - <v, a_i> a_i."""
        c = self.pairing(v, self.basis_vector(i))
        assert c.denominator == 1
        c = int(c)
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def apply_word(self, word: WeylWord, v: Vector) -> Vector:
        for i in word:
            v = self.reflect_simple(v, i)
        return v

    # -- support / height / components ---------------------------------------

    @staticmethod
    def support(v: Vector) -> NodeSubset:
        return frozenset(i + 1 for i, c in enumerate(v) if c != 0)

    @staticmethod
    def height(v: Vector) -> int:
        return sum(v)

    def extended_neighbors(self) -> NodeSubset:
        """Nodes of the base adjacent to the affine node mu- = -(highest root)."""
        if not self.reduced:
            raise UnsupportedError("extended diagram requires a reduced system")
        mu = self.highest_root
        return frozenset(i for i in self.diagram.nodes
                         if self.inner(mu, self.basis_vector(i)) != 0)

    def adjacent_extended(self, i: int, j: int) -> bool:
        """Adjacency in the extended diagram; the affine node has id 0."""
        if i == j:
            return False
        if 0 not in (i, j):
            return self.diagram.adjacent(i, j)
        other = i + j  # the non-affine one
        return other in self.extended_neighbors()

    def connected_component(self, Y: NodeSubset, lam: int, extended: bool = False) -> NodeSubset:
        if lam not in Y:
            raise ValueError(f"node {lam} not in subset {sorted(Y)}")
        adj = self.adjacent_extended if extended else self.diagram.adjacent
        comp = {lam}
        frontier = [lam]
        while frontier:
            x = frontier.pop()
            for y in Y:
                if y not in comp and adj(x, y):
                    comp.add(y)
                    frontier.append(y)
        return frozenset(comp)

    def components(self, Y: NodeSubset, extended: bool = False) -> list[NodeSubset]:
        remaining = set(Y)
        out = []
        while remaining:
            c = self.connected_component(frozenset(remaining), min(remaining), extended)
            out.append(c)
            remaining -= c
        return sorted(out, key=sorted)

    # -- Weyl machinery ------------------------------------------------------

    def sub_positive_roots(self, X: NodeSubset) -> list[Vector]:
        return [v for v in self.positive_roots if self.support(v) <= X]

    def longest_element_word(self, X: NodeSubset) -> WeylWord:
        """Word for the extension of the longest element of W_X (identity on
        the orthogonal complement of span X); greedy descent on the sum of
        positive roots of Sigma_X, with post-verification."""
        X = frozenset(X)
        if X in self._word_cache:
            return self._word_cache[X]
        if not self.reduced:
            raise UnsupportedError("Weyl words are provided for reduced systems only")
        pos = self.sub_positive_roots(X)
        rho2 = tuple(sum(c) for c in zip(*pos)) if pos else tuple([0] * self.rank)
        word: list[int] = []
        guard = 4 * len(pos) + 4
        while True:
            for i in sorted(X):
                if self.inner(rho2, self.basis_vector(i)) > 0:
                    rho2 = self.reflect_simple(rho2, i)
                    word.append(i)
                    break
            else:
                break
            guard -= 1
            assert guard > 0, "longest-element descent failed to terminate"
        w = tuple(word)
        neg_pos = {tuple(-c for c in v) for v in pos}
        assert all(self.apply_word(w, v) in neg_pos for v in pos), \
            "longest element word does not negate the positive roots"
        self._word_cache[X] = w
        return w

    def tilde_w(self, X: NodeSubset, v: Vector) -> Vector:
        return self.apply_word(self.longest_element_word(X), v)

    def sigma(self, X: NodeSubset) -> dict[int, int]:
        """The diagram involution sigma_X = -w_X on X (identity off X keys
        are not included).  Computed from the longest element and checked
        against the type-based rule."""
        X = frozenset(X)
        if X in self._sigma_cache:
            return self._sigma_cache[X]
        out = {}
        for lam in X:
            img = tuple(-c for c in self.tilde_w(X, self.basis_vector(lam)))
            assert self._is_positive(img) and self.support(img) <= X
            (node,) = [i for i, c in enumerate(img, start=1) if c == 1]
            assert img == self.basis_vector(node)
            out[lam] = node
        rule = self._sigma_by_type_rule(X)
        assert out == rule, f"sigma mismatch on {sorted(X)}: {out} vs {rule}"
        self._sigma_cache[X] = out
        return out

    def sigma_set(self, X: NodeSubset, S: NodeSubset) -> NodeSubset:
        sg = self.sigma(X)
        return frozenset(sg[s] for s in S)

    def _sigma_by_type_rule(self, X: NodeSubset) -> dict[int, int]:
        """sigma_X read off the diagram: the nontrivial automorphism for
        components of type A_n (n>=2), D_n (n odd >= 5) and E6, identity
        otherwise."""
        out = {}
        for comp in self.components(X):
            out.update(self._sigma_component(comp))
        return out

    def _sigma_component(self, comp: NodeSubset) -> dict[int, int]:
        nodes = sorted(comp)
        ident = {i: i for i in nodes}
        if len(nodes) == 1:
            return ident
        adj = {i: [j for j in nodes if self.diagram.adjacent(i, j)] for i in nodes}
        multi = any(self.diagram.pairing(i, j) < -1 for i in nodes for j in adj[i])
        if multi:
            return ident  # types B, C, F, G
        deg3 = [i for i in nodes if len(adj[i]) == 3]
        if not deg3:
            # type A: reverse the path
            path = self._path_order(nodes, adj)
            return dict(zip(path, reversed(path)))
        (center,) = deg3
        arms = []
        for first in adj[center]:
            arm = [first]
            prev = center
            while True:
                nxt = [j for j in adj[arm[-1]] if j != prev]
                if not nxt:
                    break
                prev = arm[-1]
                arm.append(nxt[0])
            arms.append(arm)
        arms.sort(key=len)
        lengths = sorted(len(a) for a in arms)
        if lengths[:2] == [1, 1] and len(nodes) >= 5 and len(nodes) % 2 == 1:
            # D_n, n odd >= 5: swap the two fork tips
            ident[arms[0][0]], ident[arms[1][0]] = arms[1][0], arms[0][0]
            return ident
        if lengths == [1, 2, 2]:
            # E6: exchange the two long arms
            a, b = arms[1], arms[2]
            for x, y in zip(a, b):
                ident[x], ident[y] = y, x
            return ident
        return ident

    @staticmethod
    def _path_order(nodes: list[int], adj: dict[int, list[int]]) -> list[int]:
        ends = [i for i in nodes if len(adj[i]) == 1]
        start = min(ends)
        path = [start]
        prev = None
        while len(path) < len(nodes):
            nxt = [j for j in adj[path[-1]] if j != prev]
            prev = path[-1]
            path.append(nxt[0])
        return path

    # -- diagram automorphisms ------------------------------------------------

    def diagram_automorphisms(self) -> list[dict[int, int]]:
        """The full automorphism group of the Dynkin diagram, by brute-force
        permutation search preserving the Cartan matrix."""
        if self._aut_cache is not None:
            return self._aut_cache
        nodes = self.diagram.nodes
        C = self.diagram.pairing
        auts = []
        for perm in permutations(nodes):
            phi = dict(zip(nodes, perm))
            if all(C(phi[i], phi[j]) == C(i, j) for i in nodes for j in nodes):
                auts.append(phi)
        self._aut_cache = auts
        return auts


# Conversion from this package's node ids to Bourbaki numbering.
def _bourbaki_map(t: DiagramType) -> dict[int, int]:
    if t.family == "E":
        n = t.rank
        m = {1: 1, 2: 3, 3: 4, n: 2}
        m.update({i: i + 1 for i in range(4, n)})
        return m
    return {i: i for i in range(1, t.rank + 1)}


BOURBAKI_MAP = {
    (fam, rank): _bourbaki_map(DiagramType(fam, rank))
    for fam in ("A", "B", "C", "D", "E", "F", "G")
    for rank in range(RANK_BOUNDS[fam][0], min(RANK_BOUNDS[fam][1], 8) + 1)
}


@lru_cache(maxsize=None)
def build_root_system(t: DiagramType) -> RootSystem:
    """Construct (and cache) the full root system of the given type."""
    return RootSystem(t)


def root_system(text: str) -> RootSystem:
    return build_root_system(DiagramType.parse(text))
