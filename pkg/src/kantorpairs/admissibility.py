"""Kantor-admissible subsets and SP-admissible pairs of a Dynkin diagram,
their orbits under the diagram automorphism group, the pair parameters
(d, e, f), and the close-to-Jordan data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .rootsystems import DiagramType, NodeSubset, RootSystem, build_root_system
from .roothoms import chi, chi_pair, membership


class NotAdmissibleError(ValueError):
    """Marking fails an admissibility criterion; the message names it."""


class NoCloseToJordanError(ValueError):
    """Type A1 has no close-to-Jordan pair."""


@dataclass(frozen=True)
class Marking:
    """A marked Dynkin diagram: circled nodes S, optional asterisked nodes T."""

    diagram_type: DiagramType
    S: NodeSubset
    T: NodeSubset | None = None

    def __post_init__(self):
        n = self.diagram_type.rank
        universe = set(range(1, n + 1))
        if not set(self.S) <= universe:
            raise ValueError(f"S not within nodes 1..{n}")
        if self.T is not None and not set(self.T) <= universe:
            raise ValueError(f"T not within nodes 1..{n}")

    def key(self) -> tuple:
        return (tuple(sorted(self.S)), tuple(sorted(self.T)) if self.T is not None else None)

    def act(self, phi: dict[int, int]) -> "Marking":
        """Right action by a diagram automorphism: members map through phi^-1."""
        inv = {v: k for k, v in phi.items()}
        S = frozenset(inv[i] for i in self.S)
        T = None if self.T is None else frozenset(inv[i] for i in self.T)
        return Marking(self.diagram_type, S, T)


@dataclass(frozen=True)
class PairParameters:
    d: int
    e: int
    f: int | None = None

    def label_suffix(self) -> str:
        if self.f is None:
            return f"({self.d},{self.e})"
        return f"({self.d},{self.e},{self.f})"


def pair_parameters(rs: RootSystem, S: NodeSubset, T: NodeSubset | None) -> PairParameters:
    """d = #roots with chi_S = 1, e = #roots with chi_S = 2, and (when T is
    given) f = #roots with chi_S = 1 and chi_T = 1."""
    cS = chi(rs, S)
    d = e = f = 0
    if T is not None:
        cT = chi(rs, T)
    for mu in rs.roots:
        v = cS.apply(mu)[0]
        if v == 1:
            d += 1
            if T is not None and cT.apply(mu)[0] == 1:
                f += 1
        elif v == 2:
            e += 1
    return PairParameters(d, e, f if T is not None else None)


def is_kantor_admissible(rs: RootSystem, S: NodeSubset) -> bool:
    """Both routes: (c) chi_S(mu+) in {1,2}; (b) S nonempty and chi_S a
    homomorphism into BC1.  Disagreement is an internal error."""
    value = chi(rs, S).apply(rs.highest_root)[0]
    route_c = value in (1, 2)
    flags = membership(rs, chi(rs, S))
    route_b = bool(S) and flags.in_hom
    assert route_b == route_c, f"Kantor admissibility routes disagree on {sorted(S)}"
    return route_c


def sp_failure_reason(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> str | None:
    """None when (S,T) is SP-admissible; otherwise the failing criterion."""
    cS = chi(rs, S).apply(rs.highest_root)[0]
    cT = chi(rs, T).apply(rs.highest_root)[0]
    if cS not in (1, 2):
        return f"chi_S(mu+) = {cS} not in {{1,2}}"
    if cT not in (0, 1, 2):
        return f"chi_T(mu+) = {cT} not in {{0,1,2}}"
    if cT == 2:
        if cS != 2:
            return "chi_T(mu+) = 2 but chi_S(mu+) != 2"
        universe = frozenset({0}) | (frozenset(rs.diagram.nodes) - T)
        comp = rs.connected_component(universe, 0, extended=True)
        if comp & S:
            return "comp(extended diagram minus T, mu-) meets S"
    return None


def is_sp_admissible(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> bool:
    """Both routes: (c) the path criterion on the extended diagram, and
    (b) brute-force membership of chi_(S,T) in Hom(Sigma, BC2)."""
    route_c = sp_failure_reason(rs, S, T) is None
    flags = membership(rs, chi_pair(rs, S, T))
    route_b = bool(S) and flags.in_hom
    assert route_b == route_c, f"SP admissibility routes disagree on ({sorted(S)},{sorted(T)})"
    return route_c


def ka_candidates(rs: RootSystem) -> list[NodeSubset]:
    """Candidate subsets per the pruning rule: singletons with highest-root
    coefficient 1 or 2, and 2-subsets of coefficient-1 nodes."""
    mu = rs.highest_root
    out = []
    ones = []
    for i in rs.diagram.nodes:
        c = mu[i - 1]
        if c in (1, 2):
            out.append(frozenset({i}))
        if c == 1:
            ones.append(i)
    out.extend(frozenset(p) for p in combinations(ones, 2))
    return out


def all_KA(rs: RootSystem) -> list[NodeSubset]:
    return [S for S in ka_candidates(rs) if is_kantor_admissible(rs, S)]


def all_SPA(rs: RootSystem, nontrivial_only: bool = False) -> list[Marking]:
    """All SP-admissible pairs (S,T); T ranges over the empty set and
    Kantor-admissible candidates (a consequence of the path criterion)."""
    out = []
    kas = all_KA(rs)
    t_candidates = [frozenset()] + kas
    for S in kas:
        for T in t_candidates:
            if nontrivial_only and (T == frozenset() or T == S):
                continue
            if is_sp_admissible(rs, S, T):
                out.append(Marking(rs.type, S, T))
    return sorted(out, key=Marking.key)


@dataclass(frozen=True)
class OrbitRow:
    representative: Marking
    orbit: tuple[Marking, ...]
    params: PairParameters
    label: str


@dataclass(frozen=True)
class OrbitTable:
    diagram_type: DiagramType
    sp: bool
    rows: tuple[OrbitRow, ...]

    def labels(self) -> list[str]:
        return [r.label for r in self.rows]

    def label_of(self, m: Marking) -> str:
        for row in self.rows:
            if m in row.orbit:
                return row.label
        raise KeyError(f"marking {m.key()} not in table")


def _orbits(rs: RootSystem, markings: list[Marking]) -> list[tuple[Marking, ...]]:
    auts = rs.diagram_automorphisms()
    seen: set[tuple] = set()
    orbits = []
    for m in sorted(markings, key=Marking.key):
        if m.key() in seen:
            continue
        orbit = sorted({m.act(phi) for phi in auts}, key=Marking.key)
        for x in orbit:
            seen.add(x.key())
        orbits.append(tuple(orbit))
    return orbits


def _label_rows(t: DiagramType, orbits, params_of) -> list[OrbitRow]:
    rows = [
        OrbitRow(orbit[0], orbit, params_of(orbit[0]), "")
        for orbit in orbits
    ]
    by_params: dict[str, list[int]] = {}
    for k, row in enumerate(rows):
        by_params.setdefault(row.params.label_suffix(), []).append(k)
    out = []
    for k, row in enumerate(rows):
        suffix = row.params.label_suffix()
        group = by_params[suffix]
        if len(group) > 1:
            letter = chr(ord("a") + group.index(k))
            suffix = suffix[:-1] + letter + ")"
        out.append(OrbitRow(row.representative, row.orbit, row.params, f"{t}{suffix}"))
    return out


@lru_cache(maxsize=None)
def enumerate_KA(t: DiagramType) -> OrbitTable:
    """The Kantor-admissible subsets of the diagram, grouped into orbits
    under the right action of Aut(Pi), with (d, e) labels."""
    if t.family == "BC":
        raise NotAdmissibleError("classification is for reduced irreducible types")
    rs = build_root_system(t)
    markings = [Marking(t, S, None) for S in all_KA(rs)]
    orbits = _orbits(rs, markings)
    rows = _label_rows(t, orbits, lambda m: pair_parameters(rs, m.S, None))
    return OrbitTable(t, sp=False, rows=tuple(rows))


@lru_cache(maxsize=None)
def enumerate_SPA(t: DiagramType, nontrivial_only: bool = False) -> OrbitTable:
    """The SP-admissible pairs, grouped into orbits, with (d, e, f) labels."""
    if t.family == "BC":
        raise NotAdmissibleError("classification is for reduced irreducible types")
    rs = build_root_system(t)
    markings = all_SPA(rs, nontrivial_only=nontrivial_only)
    orbits = _orbits(rs, markings)
    rows = _label_rows(t, orbits, lambda m: pair_parameters(rs, m.S, m.T))
    return OrbitTable(t, sp=True, rows=tuple(rows))


def close_to_jordan(t: DiagramType) -> Marking:
    """The unique S with a close-to-Jordan pair: the neighbors of the affine
    node in the extended diagram."""
    if t == DiagramType("A", 1):
        raise NoCloseToJordanError("the unique simple Kantor pair of type A1 is Jordan")
    rs = build_root_system(t)
    S = rs.extended_neighbors()
    params = pair_parameters(rs, S, None)
    assert chi(rs, S).apply(rs.highest_root)[0] == 2
    assert params.e == 1
    assert t.family == "A" or len(S) == 1
    return Marking(t, S, None)


def ctj_sp_gradings(t: DiagramType) -> list[NodeSubset]:
    """Representatives, up to Aut(Pi), of the nontrivial SP-gradings of the
    close-to-Jordan pair: T = {lam} with highest-root coefficient 1."""
    rs = build_root_system(close_to_jordan(t).diagram_type)
    mu = rs.highest_root
    singles = [frozenset({i}) for i in rs.diagram.nodes if mu[i - 1] == 1]
    auts = rs.diagram_automorphisms()
    reps = []
    seen = set()
    for T in sorted(singles, key=sorted):
        if T in seen:
            continue
        orbit = {frozenset({v for k, v in phi.items() if k in T}) for phi in auts}
        seen |= orbit
        reps.append(T)
    return reps
