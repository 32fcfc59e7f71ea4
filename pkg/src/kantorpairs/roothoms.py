"""Homomorphisms of a root system Sigma into BC1 or BC2: the indicator maps
of marked node subsets, membership flags, positivization under the right
Weyl-group action, and the left * action of Aut(BC2)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystems import (
    DiagramType,
    NodeSubset,
    RootSystem,
    Vector,
    WeylWord,
    build_root_system,
)


@lru_cache(maxsize=None)
def bc_target(rank: int) -> RootSystem:
    """The target system BC1 or BC2 used by chi-maps."""
    if rank not in (1, 2):
        raise ValueError("only BC1 and BC2 targets are shipped")
    return build_root_system(DiagramType("BC", rank))


class NotAHomomorphismError(ValueError):
    """The map does not send Sigma into the target root system."""


@dataclass(frozen=True)
class RootHom:
    """An element of Hom(Q_Sigma, Q_Delta) as a target_rank x n integer
    matrix over the simple-root bases."""

    source: DiagramType
    matrix: tuple[tuple[int, ...], ...]

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    def apply(self, v: Vector) -> Vector:
        return tuple(sum(r * c for r, c in zip(row, v)) for row in self.matrix)

    def compose_simple_reflection(self, rs: RootSystem, i: int) -> "RootHom":
        """rho . s_i, i.e. precompose with the reflection in the simple root i."""
        cartan = rs.diagram.cartan
        rows = []
        for row in self.matrix:
            pivot = row[i - 1]
            rows.append(tuple(
                x - cartan[j][i - 1] * pivot for j, x in enumerate(row)
            ))
        return RootHom(self.source, tuple(rows))

    def compose_word(self, rs: RootSystem, word: WeylWord) -> "RootHom":
        """rho . w for the word w, where w acts on vectors as
        RootSystem.apply_word (first letter applied first)."""
        out = self
        for i in reversed(word):
            out = out.compose_simple_reflection(rs, i)
        return out

    def left_compose(self, mat: tuple[tuple[int, ...], ...]) -> "RootHom":
        """theta . rho for a square integer matrix theta on the target."""
        rows = [
            tuple(sum(t * m for t, m in zip(trow, col)) for col in zip(*self.matrix))
            for trow in mat
        ]
        return RootHom(self.source, tuple(rows))


def chi(rs: RootSystem, S: NodeSubset) -> RootHom:
    """The indicator functional chi_S extended linearly to the root lattice."""
    row = tuple(1 if i in S else 0 for i in rs.diagram.nodes)
    return RootHom(rs.type, (row,))


def chi_pair(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> RootHom:
    """chi_(S,T) = (chi_S, chi_T) into the BC2 lattice."""
    return RootHom(rs.type, (chi(rs, S).matrix[0], chi(rs, T).matrix[0]))


@dataclass(frozen=True)
class MembershipFlags:
    in_hom: bool
    positive: bool
    short: bool


@lru_cache(maxsize=None)
def _short_roots(rank: int) -> frozenset[Vector]:
    target = bc_target(rank)
    shortest = min(target.inner(v, v) for v in target.root_set)
    return frozenset(v for v in target.root_set if target.inner(v, v) == shortest)


def membership(rs: RootSystem, rho: RootHom) -> MembershipFlags:
    """Flags computed by exhaustive evaluation over all roots of Sigma."""
    target = bc_target(rho.target_rank)
    shorts = _short_roots(rho.target_rank)
    zero = (0,) * rho.target_rank
    in_hom = True
    short = False
    positive = True
    for mu in rs.positive_roots:
        img = rho.apply(mu)
        if img == zero:
            continue
        if img not in target.root_set:
            in_hom = False
        if img in shorts or tuple(-c for c in img) in shorts:
            short = True
        if any(c < 0 for c in img):
            positive = False
    return MembershipFlags(in_hom=in_hom, positive=positive and in_hom, short=short)


def positivize(rs: RootSystem, rho: RootHom) -> tuple[RootHom, WeylWord]:
    """The unique positive element of rho . W_Sigma, together with a word w
    such that the returned hom equals rho . w.

    Mirrors the dominance argument for rho~ = sum of the coordinate
    functionals: while rho~ is negative on some simple root, reflect there
    (lowest node id first).
    """
    if not membership(rs, rho).in_hom:
        raise NotAHomomorphismError(f"{rho.matrix} does not map Sigma into BC{rho.target_rank}")
    word: list[int] = []
    cur = rho
    guard = 8 * len(rs.positive_roots) + 8
    while True:
        for i in rs.diagram.nodes:
            col = [row[i - 1] for row in cur.matrix]
            if sum(col) < 0:
                cur = cur.compose_simple_reflection(rs, i)
                word.append(i)
                break
        else:
            break
        guard -= 1
        assert guard > 0, "positivization failed to terminate"
    assert membership(rs, cur).positive
    return cur, tuple(reversed(word))


def star(rs: RootSystem, theta: tuple[tuple[int, ...], ...], rho: RootHom) -> RootHom:
    """The left action theta * rho: the positive representative of the
    right W_Sigma-orbit of theta . rho."""
    if not membership(rs, rho).positive:
        raise ValueError("star is defined on positive homomorphisms")
    out, _ = positivize(rs, rho.left_compose(theta))
    return out
