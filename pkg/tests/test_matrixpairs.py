import random
from fractions import Fraction

import pytest

from kantorpairs.rootsystems import DiagramType
from kantorpairs.pairs import balanced_params, check_kantor_identities, check_sp_grading_law, is_jordan, is_simple
from kantorpairs.matrixpairs import (
    ExcludedCaseError,
    TABLE1,
    TauForm,
    build_jordan,
    construct_T,
    excluded_case,
    oct_add,
    oct_basis,
    oct_conj,
    oct_mul,
    oct_norm,
    oct_trace,
    tau_from_trace,
    theta_constant,
    verify_excluded_case,
    verify_table1_row,
    OCT_ONE,
)


def T(name):
    return DiagramType.parse(name)


def test_octonion_composition_and_involution():
    rng = random.Random(1)
    for _ in range(100):
        x = tuple(Fraction(rng.randint(-4, 4)) for _ in range(8))
        y = tuple(Fraction(rng.randint(-4, 4)) for _ in range(8))
        assert oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)
        assert oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x))
        assert oct_add(x, oct_conj(x)) == tuple(oct_trace(x) * c for c in OCT_ONE)
    for b in oct_basis():
        assert oct_mul(OCT_ONE, b) == b and oct_mul(b, OCT_ONE) == b
    # non-associative: witness among basis elements
    B = oct_basis()
    assert any(
        oct_mul(oct_mul(B[i], B[j]), B[k]) != oct_mul(B[i], oct_mul(B[j], B[k]))
        for i in range(8) for j in range(8) for k in range(8)
    )


def test_jordan_pair_dimensions():
    assert build_jordan("II", 5).dim(+1) == 10
    assert build_jordan("I", 1, 4).dim(+1) == 4
    assert build_jordan("IV", 3).dim(+1) == 3
    assert build_jordan("V").dim(+1) == 16


def test_jordan_pairs_are_jordan():
    for kind, params in [("I", (2, 3)), ("II", (4,)), ("IV", (5,)), ("V", ())]:
        pair = build_jordan(kind, *params)
        assert is_jordan(pair)
        assert balanced_params(pair).e == 0


def test_iv3_product_against_definition():
    J = build_jordan("IV", 3)
    # {e0, e0, e1} = q(e0,e0) e1 + q(e1,e0) e0 - q(e0,e1) e0 = e1
    assert J.triple(+1, 0, 0, 1) == {1: Fraction(1)}
    # {e0, e1, e0} = 2 q(e0,e1) e0 - q(e0,e0) e1 = -e1
    assert J.triple(+1, 0, 1, 0) == {1: Fraction(-1)}


def test_theta_constants():
    assert theta_constant(T("E6"), frozenset({1})) == Fraction(5, 4)
    assert theta_constant(T("E7"), frozenset({6})) == Fraction(4, 3)
    # closed forms: A_n theta = (n-1)/n at an end node; B_n theta = 1;
    # C_n theta = 2(n-1)/n; D_n (fork tip) theta = 2(n-2)/n
    for n in range(2, 7):
        assert theta_constant(T(f"A{n}"), frozenset({1})) == Fraction(n - 1, n)
    for n in range(3, 7):
        assert theta_constant(T(f"B{n}"), frozenset({1})) == 1
        assert theta_constant(T(f"C{n}"), frozenset({n})) == Fraction(2 * (n - 1), n)
    for n in range(5, 7):
        assert theta_constant(T(f"D{n}"), frozenset({n})) == Fraction(2 * (n - 2), n)
    with pytest.raises(ExcludedCaseError):
        theta_constant(T("A4"), frozenset({2}))


def test_tau_closed_forms():
    import kantorpairs.matrixpairs as mp

    # II_5 with theta = 5/4 gives exactly (1/2) tr(xa)
    J = build_jordan("II", 5)
    tau = tau_from_trace(J, Fraction(5, 4))
    assert tau.plus == mp._closed_form_tau(TABLE1[5], J, 6)
    # I_{1,n-1} in the A_n row gives x a^t; in the C_n row gives 2 x a^t
    Ja = build_jordan("I", 1, 3)
    tau_a = tau_from_trace(Ja, theta_constant(T("A4"), frozenset({1})))
    ident = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(3)) for i in range(3)
    )
    assert tau_a.plus == ident
    Jc = build_jordan("I", 1, 2)
    tau_c = tau_from_trace(Jc, theta_constant(T("C3"), frozenset({3})))
    two_ident = tuple(
        tuple(Fraction(2) if i == j else Fraction(0) for j in range(2)) for i in range(2)
    )
    assert tau_c.plus == two_ident


def test_tau_symmetry_and_nondegeneracy():
    for kind, params, theta in [("II", (5,), Fraction(5, 4)), ("IV", (3,), Fraction(1))]:
        J = build_jordan(kind, *params)
        tau = tau_from_trace(J, theta)
        d = J.dim(+1)
        for i in range(d):
            for j in range(d):
                assert tau.value(+1, i, j) == tau.value(-1, j, i)


def test_construct_T_grading_and_tau_zero_reduction():
    J = build_jordan("IV", 3)
    zero_tau = TauForm(tuple(tuple(Fraction(0) for _ in range(3)) for _ in range(3)))
    pair = construct_T(J, zero_tau)
    assert check_sp_grading_law(pair)
    # tau = 0: products reduce to {x,a,y} (x) <r,l> s
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for r in range(2):
                    for l in range(2):
                        for s in range(2):
                            out = pair.triple(+1, 2 * i + r, 2 * j + l, 2 * k + s)
                            expected = (
                                {2 * m + s: c for m, c in J.triple(+1, i, j, k).items()}
                                if r == l else {}
                            )
                            assert out == expected


def test_construct_T_dimension_doubles():
    J = build_jordan("II", 5)
    pair = construct_T(J, tau_from_trace(J, Fraction(5, 4)))
    assert pair.dim(+1) == 2 * J.dim(+1) == 20
    bp = balanced_params(pair)
    assert bp.f == J.dim(+1) == 10


@pytest.mark.parametrize("row", TABLE1[:5], ids=lambda r: r.type_name)
def test_table1_small_rows(row):
    res = verify_table1_row(row, seed=7)
    assert res.passed, res


def test_table1_excluded_cases():
    r3 = verify_excluded_case(3, 2, seed=7)
    assert r3.passed, r3
    assert r3.reflected == ((1, 3), (2,))
    r5 = verify_excluded_case(5, 3, seed=7)
    assert r5.passed, r5
    assert r5.reflected == ((2, 4), (3,))
    with pytest.raises(ValueError):
        excluded_case(4, 1)


def test_excluded_case_tau_is_two_weight_identity():
    J, tau = excluded_case(5, 3)
    # tau(x1+x2, a1+a2) = x1 a1^t + x2 a2^t on the natural bases
    d = J.dim(+1)
    assert d == 4
    for i in range(d):
        for j in range(d):
            assert tau.value(+1, i, j) == (1 if i == j else 0)


def test_simplicity_of_tensor_pairs():
    J = build_jordan("IV", 3)
    tau = tau_from_trace(J, Fraction(1))
    assert is_simple(construct_T(J, tau))
