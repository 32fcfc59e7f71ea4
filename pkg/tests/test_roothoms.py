import pytest
from hypothesis import given, settings, strategies as st

from kantorpairs.rootsystems import DiagramType, build_root_system, root_system
from kantorpairs.roothoms import (
    NotAHomomorphismError,
    RootHom,
    bc_target,
    chi,
    chi_pair,
    membership,
    positivize,
    star,
)

# Reflection matrices on the BC2 lattice (column-vector action):
# s1 (a,b) -> (2b-a, b);  s2 (a,b) -> (a, a-b)
S1 = ((-1, 2), (0, 1))
S2 = ((1, 0), (1, -1))
IDENT = ((1, 0), (0, 1))


def test_chi_values_on_e6():
    rs = root_system("E6")
    mu = rs.highest_root
    assert chi(rs, frozenset()).apply(mu) == (0,)
    assert chi(rs, frozenset({6})).apply(mu) == (2,)
    assert chi(rs, frozenset({1, 5})).apply(mu) == (2,)
    assert chi(rs, frozenset({3})).apply(mu) == (3,)


def test_chi_pair_values():
    rs = root_system("E6")
    mu = rs.highest_root
    assert chi_pair(rs, frozenset(), frozenset()).apply(mu) == (0, 0)
    assert chi_pair(rs, frozenset({6}), frozenset({1})).apply(mu) == (2, 1)
    rs2 = root_system("A2")
    assert chi_pair(rs2, frozenset({1, 2}), frozenset({1})).apply(rs2.highest_root) == (2, 1)


def test_membership_flags():
    rs = root_system("E6")
    flags = membership(rs, chi(rs, frozenset({1})))
    assert flags.in_hom and flags.positive and flags.short
    # coefficient-3 node: evaluates to 3 on the highest root
    flags3 = membership(rs, chi(rs, frozenset({3})))
    assert not flags3.in_hom
    zero = membership(rs, chi(rs, frozenset()))
    assert zero.in_hom and zero.positive and not zero.short


def test_membership_matches_box_description_bc2():
    # Hom(Sigma, BC2) membership over the generated root set agrees with the
    # explicit description: image in the box {0,1,2}^2 u -(box), avoiding
    # (1,2) and (0,2) up to sign.
    rs = root_system("A3")
    box = {(a, b) for a in (0, 1, 2) for b in (0, 1, 2)}
    allowed = (box | {(-a, -b) for a, b in box}) - {(1, 2), (0, 2), (-1, -2), (0, -2)}
    allowed.discard((0, 0))
    target = bc_target(2)
    for m11 in range(-2, 3):
        for m12 in range(-2, 3):
            for m21 in range(-2, 3):
                for m22 in range(-2, 3):
                    rho = RootHom(rs.type, ((m11, m12, 0), (m21, m22, 0)))
                    images = {rho.apply(v) for v in rs.roots} - {(0, 0)}
                    assert membership(rs, rho).in_hom == (images <= target.root_set)
                    assert (images <= target.root_set) == (images <= allowed)


def test_positivize_trivial_and_rank1():
    rs = root_system("A1")
    rho = RootHom(rs.type, ((-1,),))
    pos, word = positivize(rs, rho)
    assert pos.matrix == ((1,),)
    assert word == (1,)
    # already positive: unchanged, empty word
    pos2, word2 = positivize(rs, pos)
    assert pos2 == pos and word2 == ()


def test_positivize_minus_chi_gives_sigma_image():
    # (-1) . chi_(S,T) positivizes to chi_(S.sigma, T.sigma)
    for name, S, T in [("E6", {6}, {1}), ("A4", {1, 3}, {2}), ("D5", {2}, {4})]:
        rs = root_system(name)
        S, T = frozenset(S), frozenset(T)
        rho = chi_pair(rs, S, T).left_compose(((-1, 0), (0, -1)))
        pos, word = positivize(rs, rho)
        sg = rs.sigma(frozenset(rs.diagram.nodes))
        expected = chi_pair(rs, frozenset(sg[i] for i in S), frozenset(sg[i] for i in T))
        assert pos == expected
        # the returned word witnesses the orbit: rho . w = pos
        assert rho.compose_word(rs, word) == pos


def test_positivize_requires_membership():
    rs = root_system("E6")
    with pytest.raises(NotAHomomorphismError):
        positivize(rs, chi(rs, frozenset({3})))


def test_star_identity_and_shift_of_trivial():
    rs = root_system("E6")
    rho = chi_pair(rs, frozenset({6}), frozenset({1}))
    assert star(rs, IDENT, rho) == rho
    # s2 * chi_(S, empty) = chi_(S, S)
    for S in [frozenset({1}), frozenset({6}), frozenset({1, 5})]:
        rho0 = chi_pair(rs, S, frozenset())
        assert star(rs, S2, rho0) == chi_pair(rs, S, S)


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def test_s1s2_dihedral_relations():
    m = _mat_mul(_mat_mul(S1, S2), _mat_mul(S1, S2))
    assert m == ((-1, 0), (0, -1))
    assert _mat_mul(S1, S1) == IDENT
    assert _mat_mul(S2, S2) == IDENT


def test_star_power_four_is_identity():
    rs = root_system("A3")
    s1s2 = _mat_mul(S1, S2)
    for S, T in [({1}, {2}), ({1, 3}, {2}), ({2}, set())]:
        rho = chi_pair(rs, frozenset(S), frozenset(T))
        if not membership(rs, rho).in_hom:
            continue
        cur = rho
        for _ in range(4):
            cur = star(rs, s1s2, cur)
        assert cur == rho


def test_rhocond_sign_condition():
    # rho_i(mu) rho_j(mu) >= 0 for every root and i != j
    rs = root_system("D4")
    for S, T in [({2}, {1}), ({1}, {3}), ({2}, set())]:
        rho = chi_pair(rs, frozenset(S), frozenset(T))
        if not membership(rs, rho).in_hom:
            continue
        for mu in rs.roots:
            a, b = rho.apply(mu)
            assert a * b >= 0


@st.composite
def _hom_with_word(draw):
    name = draw(st.sampled_from(["A3", "A4", "B3", "D4", "E6"]))
    rs = build_root_system(DiagramType.parse(name))
    nodes = list(rs.diagram.nodes)
    S = frozenset(draw(st.sets(st.sampled_from(nodes), min_size=1, max_size=2)))
    T = frozenset(draw(st.sets(st.sampled_from(nodes), max_size=2)))
    word = tuple(draw(st.lists(st.sampled_from(nodes), max_size=6)))
    return name, S, T, word


@settings(max_examples=80, deadline=None)
@given(_hom_with_word())
def test_positivize_recovers_chi_from_weyl_translates(data):
    # chi_(S,T) composed with any Weyl word stays in Hom and positivizes
    # back to chi_(S,T); positivize is idempotent.
    name, S, T, word = data
    rs = root_system(name)
    rho = chi_pair(rs, S, T)
    if not membership(rs, rho).in_hom:
        return
    moved = rho.compose_word(rs, word)
    assert membership(rs, moved).in_hom
    pos, w = positivize(rs, moved)
    assert pos == rho
    assert moved.compose_word(rs, w) == pos
    again, empty = positivize(rs, pos)
    assert again == pos and empty == ()
