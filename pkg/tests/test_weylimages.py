import random

import pytest
from hypothesis import given, settings, strategies as st

from kantorpairs.rootsystems import DiagramType, build_root_system, root_system
from kantorpairs.roothoms import chi, chi_pair
from kantorpairs.admissibility import (
    Marking,
    NotAdmissibleError,
    all_SPA,
    close_to_jordan,
    ctj_sp_gradings,
    enumerate_SPA,
    pair_parameters,
)
from kantorpairs.weylimages import (
    WEYL_BC2,
    WEYL_BY_NAME,
    weyl_image_all_routes,
    weyl_image_general,
    weyl_image_oracle,
    weyl_image_table,
    orbit_of_images,
    _mat_mul,
)


def T(name):
    return DiagramType.parse(name)


def test_weyl_group_is_dihedral_of_order_8():
    mats = {w.matrix for w in WEYL_BC2}
    assert len(mats) == 8
    # closed under multiplication and stabilizes the BC2 root set
    rs = root_system("BC2")
    for a in WEYL_BC2:
        for b in WEYL_BC2:
            assert _mat_mul(a.matrix, b.matrix) in mats
        for v in rs.roots:
            img = tuple(sum(r * c for r, c in zip(row, v)) for row in a.matrix)
            assert img in rs.root_set


def test_identity_row_and_minus_one_row():
    m = Marking(T("E6"), frozenset({6}), frozenset({1}))
    assert weyl_image_table(m, WEYL_BY_NAME["1"]) == m
    img = weyl_image_table(m, WEYL_BY_NAME["-1"])
    rs = root_system("E6")
    sg = rs.sigma(frozenset(rs.diagram.nodes))
    assert img.S == frozenset(sg[i] for i in m.S)
    assert img.T == frozenset(sg[i] for i in m.T)


def test_shift_of_trivial_gradings():
    # s2 sends (S, empty) to (S, S) and back
    s2 = WEYL_BY_NAME["s2"]
    for name, S in [("E6", {6}), ("A4", {1, 3}), ("B3", {2})]:
        m0 = Marking(T(name), frozenset(S), frozenset())
        m1 = weyl_image_table(m0, s2)
        assert m1.S == m0.S and m1.T == m0.S
        assert weyl_image_table(m1, s2) == m0


def test_reflection_fixes_trivial_gradings_orbit():
    s1 = WEYL_BY_NAME["s1"]
    for name, S in [("E6", {6}), ("A4", {1, 3})]:
        t = T(name)
        m0 = Marking(t, frozenset(S), frozenset())
        table = enumerate_SPA(t, False)
        assert table.label_of(weyl_image_table(m0, s1)) == table.label_of(m0)


def test_close_to_jordan_reflection_formula():
    # reflection of a ctj pair is (sigma_{Pi\T}(S\T), T); shift fixes its orbit
    s1, s2 = WEYL_BY_NAME["s1"], WEYL_BY_NAME["s2"]
    for name in ["A4", "B3", "C3", "D4", "D5", "E6", "E7"]:
        t = T(name)
        rs = build_root_system(t)
        S = close_to_jordan(t).S
        for TT in ctj_sp_gradings(t):
            m = Marking(t, S, TT)
            img = weyl_image_all_routes(m, s1)
            nodes = frozenset(rs.diagram.nodes)
            assert img.S == rs.sigma_set(nodes - TT, S - TT)
            assert img.T == TT
            table = enumerate_SPA(t, False)
            assert table.label_of(weyl_image_table(m, s2)) == table.label_of(m)


def test_e6_reflection_and_shift_exchange_orbits():
    t = T("E6")
    table = enumerate_SPA(t, True)
    lab = table.label_of
    s1, s2 = WEYL_BY_NAME["s1"], WEYL_BY_NAME["s2"]
    reps = {r.label: r.representative for r in table.rows}
    assert lab(weyl_image_table(reps["E6(16,0,8)"], s1)) == "E6(16,8,8a)"
    assert lab(weyl_image_table(reps["E6(16,8,8a)"], s1)) == "E6(16,0,8)"
    assert lab(weyl_image_table(reps["E6(20,1,10)"], s1)) == "E6(20,5,10)"
    assert lab(weyl_image_table(reps["E6(20,5,10)"], s1)) == "E6(20,1,10)"
    assert lab(weyl_image_table(reps["E6(20,5,8)"], s2)) == "E6(20,5,12)"
    assert lab(weyl_image_table(reps["E6(20,5,12)"], s2)) == "E6(20,5,8)"
    for fixed in ["E6(20,5,8)", "E6(20,5,12)", "E6(16,8,8b)"]:
        assert lab(weyl_image_table(reps[fixed], s1)) == fixed


def test_orbit_of_images():
    t = T("E6")
    table = enumerate_SPA(t, True)
    reps = {r.label: r.representative for r in table.rows}
    images = orbit_of_images(reps["E6(16,8,8b)"])
    assert images["s1"] == "E6(16,8,8b)"
    assert images["s2"] == "E6(16,8,8b)"
    assert images["-1"] == "E6(16,8,8b)"
    images2 = orbit_of_images(reps["E6(20,5,8)"])
    assert images2["s2"] == "E6(20,5,12)"
    # the -1 image is always in the input's orbit
    for r in table.rows:
        assert orbit_of_images(r.representative)["-1"] == r.label


def test_triple_agreement_exhaustive_small():
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]:
        rs = root_system(name)
        for m in all_SPA(rs):
            for u in WEYL_BC2:
                weyl_image_all_routes(m, u)


def test_group_action_law():
    for name in ["A3", "A4", "D4", "E6"]:
        t = T(name)
        rs = build_root_system(t)
        reps = [r.representative for r in enumerate_SPA(t, False).rows]
        by_mat = {w.matrix: w for w in WEYL_BC2}
        for m in reps:
            for u1 in WEYL_BC2:
                for u2 in WEYL_BC2:
                    u12 = by_mat[_mat_mul(u1.matrix, u2.matrix)]
                    lhs = weyl_image_table(weyl_image_table(m, u2), u1)
                    assert lhs == weyl_image_table(m, u12)


def test_commutation_with_diagram_automorphisms():
    for name in ["A4", "D4", "E6"]:
        t = T(name)
        rs = build_root_system(t)
        reps = [r.representative for r in enumerate_SPA(t, False).rows]
        for m in reps:
            for phi in rs.diagram_automorphisms():
                for u in WEYL_BC2:
                    assert weyl_image_table(m.act(phi), u) == weyl_image_table(m, u).act(phi)


def test_lmvalues2():
    # chi_{S\T}(w~_{Pi\T}(lam)) = chi_{S\T}(mu+) for lam in T, (S,T) admissible
    for name in ["A4", "B3", "C4", "D5", "E6", "F4", "G2"]:
        rs = root_system(name)
        nodes = frozenset(rs.diagram.nodes)
        for m in all_SPA(rs):
            for lam in m.T:
                img = rs.tilde_w(nodes - m.T, rs.basis_vector(lam))
                lhs = sum(img[i - 1] for i in m.S - m.T)
                rhs = sum(rs.highest_root[i - 1] for i in m.S - m.T)
                assert lhs == rhs


def test_exceptional_case_bar():
    # (ex): A_n, S = {lam, lam'}, T = {mu}, lam' between lam and mu
    t = T("A5")
    m = Marking(t, frozenset({1, 3}), frozenset({5}))
    img = weyl_image_all_routes(m, WEYL_BY_NAME["s2"])
    # bar T = {sigma_{Pi\S}(mu), lam}: Pi\S = {2} u {4,5}; sigma maps 5 -> 4
    assert img.S == m.S
    assert img.T == frozenset({4, 1})
    # singleton components: sigma fixes mu
    t4 = T("A4")
    m4 = Marking(t4, frozenset({1, 3}), frozenset({4}))
    img4 = weyl_image_all_routes(m4, WEYL_BY_NAME["s2"])
    assert img4.T == frozenset({1, 4})


def test_reflection_and_shift_preserve_d_shift_preserves_e():
    for name in ["A4", "D4", "E6"]:
        t = T(name)
        rs = build_root_system(t)
        for r in enumerate_SPA(t, False).rows:
            m = r.representative
            p = pair_parameters(rs, m.S, m.T)
            for u in WEYL_BC2:
                img = weyl_image_table(m, u)
                q = pair_parameters(rs, img.S, img.T)
                assert q.d == p.d
            shift = weyl_image_table(m, WEYL_BY_NAME["s2"])
            q = pair_parameters(rs, shift.S, shift.T)
            assert q.e == p.e
    # reflection changes e on E6(16,0,8)
    t = T("E6")
    rs = build_root_system(t)
    m = Marking(t, frozenset({1}), frozenset({5}))
    img = weyl_image_table(m, WEYL_BY_NAME["s1"])
    assert pair_parameters(rs, m.S, m.T).e == 0
    assert pair_parameters(rs, img.S, img.T).e == 8


def test_non_admissible_input_rejected():
    with pytest.raises(NotAdmissibleError):
        weyl_image_table(Marking(T("E6"), frozenset({3}), frozenset()), WEYL_BY_NAME["s1"])


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_triple_agreement_sampled_rank7_8(seed):
    rng = random.Random(seed)
    name = rng.choice(["A7", "A8", "B7", "B8", "C7", "C8", "D7", "D8", "E7", "E8"])
    rs = root_system(name)
    from kantorpairs.admissibility import all_KA, is_sp_admissible

    kas = all_KA(rs)
    S = rng.choice(kas)
    ts = [frozenset()] + kas
    TT = rng.choice(ts)
    if not is_sp_admissible(rs, S, TT):
        return
    m = Marking(rs.type, S, TT)
    u = rng.choice(WEYL_BC2)
    weyl_image_all_routes(m, u)
