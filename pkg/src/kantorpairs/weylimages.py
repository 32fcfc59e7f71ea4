"""Weyl images u*(S,T) of SP-admissible marked diagrams for the eight
elements of the BC2 Weyl group, by three independent routes: the closed
table with diagram-readable shortcut formulas, the longest-element
formulas, and positivization of u . chi_(S,T)."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsystems import NodeSubset, RootSystem, build_root_system
from .admissibility import Marking, NotAdmissibleError, sp_failure_reason
from .roothoms import chi_pair, star


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def _mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


@dataclass(frozen=True)
class WeylElement:
    """One of the eight elements of W(BC2) with its 2x2 integer matrix in
    the basis {a1, a2} (column-vector action)."""

    name: str
    matrix: tuple[tuple[int, ...], ...]


_I = ((1, 0), (0, 1))
_S1 = ((-1, 2), (0, 1))   # (a,b) -> (2b-a, b)
_S2 = ((1, 0), (1, -1))   # (a,b) -> (a, a-b)

WEYL_BC2: tuple[WeylElement, ...] = (
    WeylElement("1", _I),
    WeylElement("s1", _S1),
    WeylElement("s2", _S2),
    WeylElement("s2s1", _mat_mul(_S2, _S1)),
    WeylElement("-1", _mat_neg(_I)),
    WeylElement("-s1", _mat_neg(_S1)),
    WeylElement("-s2", _mat_neg(_S2)),
    WeylElement("-s2s1", _mat_neg(_mat_mul(_S2, _S1))),
)

WEYL_BY_NAME = {w.name: w for w in WEYL_BC2}


def _require_admissible(rs: RootSystem, m: Marking) -> tuple[NodeSubset, NodeSubset]:
    S = frozenset(m.S)
    T = frozenset(m.T) if m.T is not None else frozenset()
    reason = sp_failure_reason(rs, S, T)
    if reason is not None:
        raise NotAdmissibleError(f"({sorted(S)},{sorted(T)}) not SP-admissible: {reason}")
    return S, T


def breve_S_short(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> NodeSubset:
    """S-breve by the shortcut formula, split on chi_{S\\T}(mu+)."""
    nodes = frozenset(rs.diagram.nodes)
    c = sum(rs.highest_root[i - 1] for i in S - T)
    if c == 0:
        return S
    moved = rs.sigma_set(nodes - T, S - T)
    if c == 1:
        return moved | (T - S)
    assert c == 2
    return moved


def _is_between(rs: RootSystem, a: int, mid: int, b: int) -> bool:
    """mid lies strictly between a and b on an A_n path (ids in chain order)."""
    lo, hi = min(a, b), max(a, b)
    return lo < mid < hi


def _exceptional_case(rs: RootSystem, S: NodeSubset, T: NodeSubset):
    """The (ex) configuration: type A, S = {lam, lam'}, T = {mu}, with lam'
    between lam and mu.  Returns (lam, mu) or None."""
    if rs.type.family != "A" or rs.rank < 3 or len(S) != 2 or len(T) != 1:
        return None
    (mu,) = T
    if mu in S:
        return None
    lam_a, lam_b = sorted(S)
    if _is_between(rs, lam_a, lam_b, mu):
        return lam_a, mu
    if _is_between(rs, lam_b, lam_a, mu):
        return lam_b, mu
    return None


def bar_T_short(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> NodeSubset:
    """T-bar by the shortcut formula, with the exceptional type-A case."""
    nodes = frozenset(rs.diagram.nodes)
    if T <= S:
        return S - T
    ex = _exceptional_case(rs, S, T)
    if ex is not None:
        lam, mu = ex
        (mu_img,) = rs.sigma_set(nodes - S, frozenset({mu}))
        return frozenset({mu_img, lam})
    return rs.sigma_set(nodes - S, T - S)


def breve_S_general(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> NodeSubset:
    """S-breve by the longest-element formula."""
    nodes = frozenset(rs.diagram.nodes)
    first = rs.sigma_set(nodes - T, S - T)
    second = set()
    for lam in T:
        img = rs.tilde_w(nodes - T, rs.basis_vector(lam))
        val = sum(img[i - 1] for i in S - T) + (1 if lam in S & T else 0)
        if val == 1:
            second.add(lam)
    return first | frozenset(second)


def bar_T_general(rs: RootSystem, S: NodeSubset, T: NodeSubset) -> NodeSubset:
    """T-bar by the longest-element formula."""
    nodes = frozenset(rs.diagram.nodes)
    first = rs.sigma_set(nodes - S, T - S)
    second = set()
    for lam in S - T:
        img = rs.tilde_w(nodes - S, rs.basis_vector(lam))
        if not (rs.support(img) & (T - S)):
            second.add(lam)
    return first | frozenset(second)


def _assemble(rs: RootSystem, m: Marking, u: WeylElement, breve, bar) -> Marking:
    """Apply the table row for u given functions computing S-breve and T-bar
    of the input pair."""
    S, T = _require_admissible(rs, m)
    sigma_pi = lambda X: rs.sigma_set(frozenset(rs.diagram.nodes), X)
    rows = {
        "1": lambda: (S, T),
        "s1": lambda: (breve(rs, S, T), T),
        "s2": lambda: (S, bar(rs, S, T)),
        "s2s1": lambda: (breve(rs, S, T), sigma_pi(bar(rs, S, T))),
        "-1": lambda: (sigma_pi(S), sigma_pi(T)),
        "-s1": lambda: (sigma_pi(breve(rs, S, T)), sigma_pi(T)),
        "-s2": lambda: (sigma_pi(S), sigma_pi(bar(rs, S, T))),
        "-s2s1": lambda: (sigma_pi(breve(rs, S, T)), bar(rs, S, T)),
    }
    S2, T2 = rows[u.name]()
    out = Marking(m.diagram_type, S2, T2)
    assert sp_failure_reason(rs, S2, T2) is None, "Weyl image must stay admissible"
    return out


def weyl_image_table(m: Marking, u: WeylElement) -> Marking:
    """u*(S,T) via the table with the shortcut formulas."""
    rs = build_root_system(m.diagram_type)
    return _assemble(rs, m, u, breve_S_short, bar_T_short)


def weyl_image_general(m: Marking, u: WeylElement) -> Marking:
    """u*(S,T) via the table with the longest-element formulas."""
    rs = build_root_system(m.diagram_type)
    return _assemble(rs, m, u, breve_S_general, bar_T_general)


def weyl_image_oracle(m: Marking, u: WeylElement) -> Marking:
    """u*(S,T) via positivization of u . chi_(S,T) and the bijection between
    SP-admissible pairs and positive short homomorphisms."""
    rs = build_root_system(m.diagram_type)
    S, T = _require_admissible(rs, m)
    rho = star(rs, u.matrix, chi_pair(rs, S, T))
    row_s, row_t = rho.matrix
    assert all(x in (0, 1) for x in row_s) and all(x in (0, 1) for x in row_t)
    S2 = frozenset(i for i, x in zip(rs.diagram.nodes, row_s) if x == 1)
    T2 = frozenset(i for i, x in zip(rs.diagram.nodes, row_t) if x == 1)
    out = Marking(m.diagram_type, S2, T2)
    assert sp_failure_reason(rs, S2, T2) is None
    return out


def weyl_image_all_routes(m: Marking, u: WeylElement) -> Marking:
    """All three routes, with a loud diff on disagreement."""
    a = weyl_image_table(m, u)
    b = weyl_image_general(m, u)
    c = weyl_image_oracle(m, u)
    if not (a == b == c):
        raise AssertionError(
            f"Weyl image routes disagree for u={u.name} on {m.key()}:\n"
            f"  table:   {a.key()}\n  general: {b.key()}\n  oracle:  {c.key()}"
        )
    return a


def orbit_of_images(m: Marking) -> dict[str, str]:
    """Orbit label of u*(S,T) for each of the eight group elements."""
    from .admissibility import enumerate_SPA

    table = enumerate_SPA(m.diagram_type, False)
    return {u.name: table.label_of(weyl_image_table(m, u)) for u in WEYL_BC2}
