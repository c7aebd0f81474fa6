import itertools
from fractions import Fraction

import pytest

from trilie.fields import PrimeField, QQ
from trilie.carriers import (
    ConstantOne,
    Endomorphism,
    Functional,
    GroupAlgebra,
    GroupHom,
    GroupHomDerivation,
    GroupNegation,
    HypothesisViolation,
    LaurentAlgebra,
    LaurentDerivation,
    LaurentFlip,
    MonomialScale,
    QuotientLaurentAlgebra,
)
from trilie.brackets import (
    ClosureFailure,
    DeterminantBracket,
    GroupWedgeBracket,
    LaurentFlipBracket,
    LaurentParityBracket,
    MonomialBracket,
    QuotientParityBracket,
    StructureBackedBracket,
    check_agreement,
    check_alternating,
    check_fi_window,
    check_involution_antisymmetry,
    check_parity_family_vanishing,
    check_principal_ideal_membership,
    check_trilinear,
    functional_det,
    laurent_divmod,
    laurent_reachability,
    pair_bracket_delta,
    pair_bracket_omega,
    parity_coefficient,
    parity_determinant_coefficient,
    tabulate,
)


@pytest.fixture
def A():
    return LaurentAlgebra(QQ, 1)


def mono(A, m, c=None):
    return A.monomial((m,), c)


# ---------------------------------------------------------------------------
# determinant bracket
# ---------------------------------------------------------------------------

def test_det_bracket_sign_id_deriv(A):
    # rows (sign involution e=-1, identity, d/dt) on (t^2, 1, t) -> 4 t^2
    rows = [
        Endomorphism(A, MonomialScale(QQ.embed(-1))),
        "id",
        Endomorphism(A, LaurentDerivation(0)),
    ]
    br = DeterminantBracket(A, rows)
    out = br(mono(A, 2), mono(A, 0), mono(A, 1))
    assert out == mono(A, 2, Fraction(4))


def test_det_bracket_repeated_argument_vanishes(A):
    rows = [
        Endomorphism(A, LaurentFlip((Fraction(2),))),
        "id",
        Endomorphism(A, LaurentDerivation(1)),
    ]
    br = DeterminantBracket(A, rows)
    x, y = mono(A, 1) + mono(A, -2), mono(A, 3)
    assert br(x, x, y).is_zero()


def test_det_bracket_functional_row_with_plain_derivative(A):
    # rows (constant-1 functional, identity, d/dt) on (1, t, t^2):
    # hand expansion gives t^2 - 2t + 1
    rows = [Functional(A, ConstantOne()), "id", Endomorphism(A, LaurentDerivation(0))]
    br = DeterminantBracket(A, rows)
    out = br(mono(A, 0), mono(A, 1), mono(A, 2))
    assert out == mono(A, 2) + mono(A, 1, Fraction(-2)) + mono(A, 0)


def test_det_bracket_functional_row_with_euler_derivative(A):
    # same rows but with t d/dt: hand expansion gives t^3 - 2t^2 + t
    rows = [Functional(A, ConstantOne()), "id", Endomorphism(A, LaurentDerivation(1))]
    br = DeterminantBracket(A, rows)
    out = br(mono(A, 0), mono(A, 1), mono(A, 2))
    assert out == mono(A, 3) + mono(A, 2, Fraction(-2)) + mono(A, 1)


def test_det_bracket_rejects_all_functional_rows(A):
    phi = Functional(A, ConstantOne())
    with pytest.raises(ValueError):
        DeterminantBracket(A, [phi, phi, phi])


def test_functional_det_parity_coefficient(A):
    from trilie.carriers import AlternatingSign, ExponentValue

    alpha = Functional(A, AlternatingSign())
    beta = Functional(A, ConstantOne())
    gamma = Functional(A, ExponentValue())
    for (l, m, n) in [(0, 1, 2), (2, 0, 1), (-3, 1, 4)]:
        got = functional_det(alpha, beta, gamma, mono(A, l), mono(A, m), mono(A, n))
        assert got == parity_coefficient(QQ, l, m, n)


def test_jacobian_style_bracket_from_three_commuting_derivations():
    # three-variable Laurent ring, rows = the three scaling derivations;
    # the determinant of commuting derivations is an alternating 3-bracket
    # satisfying the fundamental identity
    from trilie.carriers import VariableScalingDerivation

    B = LaurentAlgebra(QQ, 3)
    rows = [Endomorphism(B, VariableScalingDerivation(j)) for j in range(3)]
    br = DeterminantBracket(B, rows)
    # [t1, t2, t3] = det of the exponent matrix = 1 on t1*t2*t3
    out = br.eval_indices((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert out == B.monomial((1, 1, 1))
    assert br.eval_indices((1, 0, 0), (1, 0, 0), (0, 0, 1)).is_zero()
    rep = check_fi_window(br, B.window(1), mode="sampled", samples=120, seed=3)
    assert rep.passed


# ---------------------------------------------------------------------------
# 2-ary brackets
# ---------------------------------------------------------------------------

def test_pair_bracket_delta(A):
    d0 = Endomorphism(A, LaurentDerivation(0))
    assert pair_bracket_delta(d0, mono(A, 1), mono(A, 2)) == mono(A, 2)


def test_pair_bracket_repeated(A):
    d0 = Endomorphism(A, LaurentDerivation(0))
    x = mono(A, 1) + mono(A, 3, Fraction(5))
    assert pair_bracket_delta(d0, x, x).is_zero()


def test_pair_bracket_omega_group_negation():
    G = GroupAlgebra(QQ, free_rank=1)
    w = Endomorphism(G, GroupNegation())
    e1, e2 = G.monomial((1,)), G.monomial((2,))
    # w(e1) e2 - w(e2) e1 = e_{1} ... = e_1 - e_-1
    assert pair_bracket_omega(w, e1, e2) == G.monomial((1,)) - G.monomial((-1,))


# ---------------------------------------------------------------------------
# group wedge closed form
# ---------------------------------------------------------------------------

def group_setup(field=QQ, free=1, torsion=(), hom_free=None, hom_tor=None):
    G = GroupAlgebra(field, free_rank=free, torsion=torsion)
    hf = hom_free if hom_free is not None else [field.one] * free
    ht = hom_tor if hom_tor is not None else [field.zero] * len(torsion)
    alpha = GroupHom(G, free_values=hf, torsion_values=ht)
    return G, alpha


def test_group_bracket_integers():
    G, alpha = group_setup()
    br = GroupWedgeBracket(alpha)
    out = br.eval_indices((1,), (2,), (3,))
    expected = G.monomial((4,)) + G.monomial((2,), Fraction(-2)) + G.monomial((0,))
    assert out == expected


def test_group_bracket_skew():
    G, alpha = group_setup()
    br = GroupWedgeBracket(alpha)
    assert br.eval_indices((2,), (2,), (5,)).is_zero()


def test_group_bracket_cyclic_mod3():
    F3 = PrimeField(3)
    G, alpha = group_setup(field=F3, free=0, torsion=(3,), hom_free=[], hom_tor=[1])
    br = GroupWedgeBracket(alpha)
    out = br.eval_indices((0,), (1,), (2,))
    assert out == G.monomial((0,)) + G.monomial((1,)) + G.monomial((2,))


def test_group_bracket_agrees_with_determinant_rows():
    G, alpha = group_setup()
    closed = GroupWedgeBracket(alpha)
    det = DeterminantBracket(G, [
        Endomorphism(G, GroupNegation()),
        "id",
        Endomorphism(G, GroupHomDerivation(alpha)),
    ])
    report = check_agreement(closed, det, G.window(2))
    assert report.passed and report.checked == 125


def test_group_bracket_collision_combining():
    # torsion group Z_4 over F_5: indices h+w-g and g+w-h can collide
    F5 = PrimeField(5)
    G, alpha = group_setup(field=F5, free=0, torsion=(4,), hom_free=[], hom_tor=[0])
    # alpha must satisfy 4*a = 0 mod 5 => a = 0; use a second hom on Z_5 instead
    G5 = GroupAlgebra(F5, torsion=[5])
    alpha5 = GroupHom(G5, torsion_values=[1])
    closed = GroupWedgeBracket(alpha5)
    det = DeterminantBracket(G5, [
        Endomorphism(G5, GroupNegation()),
        "id",
        Endomorphism(G5, GroupHomDerivation(alpha5)),
    ])
    assert check_agreement(closed, det, G5.basis_indices()).passed


# ---------------------------------------------------------------------------
# Laurent flip closed form
# ---------------------------------------------------------------------------

def test_flip_bracket_lambda_one(A):
    br = LaurentFlipBracket(A, [Fraction(1)])
    out = br.eval_indices((0,), (1,), (2,))
    assert out == mono(A, 3) + mono(A, 1, Fraction(-2)) + mono(A, -1)


def test_flip_bracket_lambda_two(A):
    br = LaurentFlipBracket(A, [Fraction(2)])
    out = br.eval_indices((0,), (1,), (2,))
    assert out == mono(A, 3) + mono(A, 1, Fraction(-4)) + mono(A, -1, Fraction(4))


def test_flip_bracket_repeated(A):
    br = LaurentFlipBracket(A, [Fraction(3)])
    assert br.eval_indices((1,), (1,), (2,)).is_zero()


def test_flip_bracket_rejects_zero_lambda(A):
    with pytest.raises(HypothesisViolation):
        LaurentFlipBracket(A, [Fraction(0)])


def test_flip_bracket_rejects_char_two():
    A2 = LaurentAlgebra(PrimeField(2), 1)
    with pytest.raises(HypothesisViolation):
        LaurentFlipBracket(A2, [1])


def test_flip_agrees_with_determinant(A):
    lam = Fraction(2)
    closed = LaurentFlipBracket(A, [lam])
    det = DeterminantBracket(A, [
        Endomorphism(A, LaurentFlip((lam,))),
        "id",
        Endomorphism(A, LaurentDerivation(1)),
    ])
    assert check_agreement(closed, det, A.window(3)).passed


def test_flip_multivariable_agrees_with_determinant():
    from trilie.carriers import VariableScalingDerivation

    B = LaurentAlgebra(QQ, 2)
    lams = (Fraction(2), Fraction(3))
    for j in range(2):
        closed = LaurentFlipBracket(B, lams, var=j)
        det = DeterminantBracket(B, [
            Endomorphism(B, LaurentFlip(lams)),
            "id",
            Endomorphism(B, VariableScalingDerivation(j)),
        ])
        assert check_agreement(closed, det, B.window(1)).passed


def test_flip_involution_antisymmetry(A):
    # w([x,y,z]) = -[w x, w y, w z] for the lambda = 1 flip bracket
    br = LaurentFlipBracket(A, [Fraction(1)])
    w = Endomorphism(A, LaurentFlip((Fraction(1),)))
    assert check_involution_antisymmetry(br, w, A.window(3)).passed


# ---------------------------------------------------------------------------
# parity coefficient closed forms
# ---------------------------------------------------------------------------

def test_parity_bracket_shift_zero(A):
    br = LaurentParityBracket(A, shift=0)
    assert br.eval_indices((2,), (0,), (1,)) == mono(A, 2, Fraction(4))


def test_parity_bracket_all_even_vanishes(A):
    br = LaurentParityBracket(A, shift=0)
    assert br.eval_indices((0,), (2,), (4,)).is_zero()


def test_parity_bracket_repeated(A):
    br = LaurentParityBracket(A, shift=2)
    assert br.eval_indices((3,), (3,), (1,)).is_zero()


def test_parity_agrees_with_determinant(A):
    for k in (0, 1, 2):
        closed = LaurentParityBracket(A, shift=2 * k)
        det = DeterminantBracket(A, [
            Endomorphism(A, MonomialScale(QQ.embed(-1))),
            "id",
            Endomorphism(A, LaurentDerivation(2 * k)),
        ])
        assert check_agreement(closed, det, A.window(3)).passed


# ---------------------------------------------------------------------------
# quotient closed form
# ---------------------------------------------------------------------------

def quotient_bracket(p):
    F = PrimeField(p)
    Q = QuotientLaurentAlgebra(F, p)
    return Q, QuotientParityBracket(Q)


def test_quotient_case_boundary_family():
    # [t^{p-1}, t^p, t^{2-p}] = 4 t^p, which is t^p over F_3
    Q, br = quotient_bracket(3)
    out = br.eval_indices(2, 3, -1)
    assert out == Q.monomial(3, 1)


def test_quotient_interior_family():
    # [t^l, t^p, t^{1-p}] has coefficient (-1)^l - 2l + 1; l = 2 gives -2 = 1 mod 3
    Q, br = quotient_bracket(3)
    out = br.eval_indices(2, 3, -2)
    assert out == Q.monomial(2, 1)


def test_quotient_repeated():
    Q, br = quotient_bracket(3)
    assert br.eval_indices(1, 1, 2).is_zero()


def test_quotient_requires_matching_characteristic():
    Q = QuotientLaurentAlgebra(QQ, 3)
    with pytest.raises(HypothesisViolation):
        QuotientParityBracket(Q)
    Q2 = QuotientLaurentAlgebra(PrimeField(2), 2)
    with pytest.raises(HypothesisViolation):
        QuotientParityBracket(Q2)


# ---------------------------------------------------------------------------
# monomial bracket
# ---------------------------------------------------------------------------

def test_monomial_bracket_matches_parity_closed_form():
    A = LaurentAlgebra(QQ, 1)
    for k in (0, 1, 2):
        f = parity_determinant_coefficient(QQ)
        mb = MonomialBracket(A, f, (2 * k - 1,))
        pb = LaurentParityBracket(A, shift=2 * k)
        for l, m, n in itertools.product(range(-3, 4), repeat=3):
            assert mb.eval_indices((l,), (m,), (n,)) == pb.eval_indices((l,), (m,), (n,))


def test_monomial_bracket_zero_function_is_abelian():
    A = LaurentAlgebra(QQ, 1)
    mb = MonomialBracket(A, lambda a, b, c: QQ.zero, (0,))
    assert mb.eval_indices((1,), (2,), (3,)).is_zero()


def test_monomial_bracket_rejects_non_skew():
    A = LaurentAlgebra(QQ, 1)
    with pytest.raises(ValueError):
        MonomialBracket(A, lambda a, b, c: QQ.one, (0,))


# ---------------------------------------------------------------------------
# tabulation
# ---------------------------------------------------------------------------

def test_tabulate_quotient_p3_closes():
    Q, br = quotient_bracket(3)
    alg = tabulate(br, Q.basis_indices(), name="q3")
    assert not isinstance(alg, ClosureFailure)
    assert alg.dim == 6


def test_tabulate_laurent_window_escapes(A):
    br = LaurentParityBracket(A, shift=0)
    out = tabulate(br, A.window(2))
    assert isinstance(out, ClosureFailure)


def test_tabulate_cyclic_group_closes():
    F3 = PrimeField(3)
    G = GroupAlgebra(F3, torsion=[3])
    alpha = GroupHom(G, torsion_values=[1])
    alg = tabulate(GroupWedgeBracket(alpha), G.basis_indices(), name="z3")
    assert not isinstance(alg, ClosureFailure)
    assert alg.dim == 3
    # single increasing triple (0,1,2) -> e0 + e1 + e2
    assert alg.constants[(0, 1, 2)] == {0: 1, 1: 1, 2: 1}


def test_structure_backed_bracket_replays_tabulation():
    Q, br = quotient_bracket(3)
    basis = Q.basis_indices()
    alg = tabulate(br, basis)
    sb = StructureBackedBracket(alg, Q, basis)
    for (a, b, c) in itertools.combinations(basis, 3):
        assert sb.eval_indices(a, b, c) == br.eval_indices(a, b, c)


# ---------------------------------------------------------------------------
# generic bracket laws
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("make", [
    lambda A: LaurentFlipBracket(A, [Fraction(2)]),
    lambda A: LaurentParityBracket(A, shift=2),
    lambda A: LaurentParityBracket(A, shift=0),
])
def test_alternating_and_trilinear(A, make):
    br = make(A)
    window = A.window(3)
    assert check_alternating(br, window).passed
    assert check_trilinear(br, window).passed


# ---------------------------------------------------------------------------
# Laurent division and ideal membership
# ---------------------------------------------------------------------------

def test_laurent_divmod_exact(A):
    g = mono(A, 3) + mono(A, -3, Fraction(-1))          # t^3 - t^-3
    h = mono(A, 2, Fraction(5)) + mono(A, -1)
    prod = g * h
    q, r = laurent_divmod(prod, g)
    assert r.is_zero() and q == h


def test_laurent_divmod_remainder(A):
    g = mono(A, 1) + mono(A, 0)
    q, r = laurent_divmod(mono(A, 0), g)
    assert (q * g + r) == mono(A, 0)


def test_principal_ideal_membership_mod3():
    F3 = PrimeField(3)
    A3 = LaurentAlgebra(F3, 1)
    for sign in (1, -1):
        gen = A3.monomial((3,)) + A3.monomial((-3,), F3.embed(sign))
        for br in (LaurentFlipBracket(A3, [1]), LaurentParityBracket(A3, shift=0)):
            report = check_principal_ideal_membership(br, gen, range(-2, 3), 3)
            assert report.passed, report.failures


def test_principal_ideal_membership_fails_off_characteristic(A):
    # over Q the same family is NOT an ideal: divisibility must fail somewhere
    gen = mono(A, 3) + mono(A, -3, Fraction(-1))
    br = LaurentParityBracket(A, shift=0)
    report = check_principal_ideal_membership(br, gen, range(-2, 3), 3)
    assert not report.passed


# ---------------------------------------------------------------------------
# char-zero evidence for the plain-derivative family
# ---------------------------------------------------------------------------

def test_parity_family_vanishing_classification():
    report = check_parity_family_vanishing(QQ, 8)
    assert report.passed


def test_laurent_reachability():
    report = laurent_reachability(QQ, 4)
    assert report.passed
