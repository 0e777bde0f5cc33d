import pytest

from fixspace import ff
from fixspace.ff import (DegreeOutOfRange, DivisorZero, NotPrime, make_field,
                         poly_add, poly_deriv, poly_divides, poly_divmod,
                         poly_eval, poly_gcd, poly_is_irreducible, poly_mul,
                         poly_roots, root_multiplicity,
                         squarefree_decomposition)


def all_elements(F):
    return [F.element(n) for n in range(F.q)]


def test_make_field_validation():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(NotPrime):
        make_field(1)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 0)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 63)


def test_gf8_canonical_modulus():
    F = make_field(2, 3)
    # smallest irreducible cubic over GF(2) is x^3 + x + 1
    assert F.modulus == (1, 1, 0, 1)


def test_prime_field_arithmetic_table():
    F = make_field(5)
    for a in range(5):
        for b in range(5):
            assert F.add(a, b) == (a + b) % 5
            assert F.mul(a, b) == (a * b) % 5
            assert F.sub(a, b) == (a - b) % 5


def test_field_axioms_sampled():
    for (p, k) in [(2, 3), (3, 2), (5, 2), (7, 1)]:
        F = make_field(p, k)
        elems = all_elements(F)
        for a in elems:
            assert F.add(a, F.zero) == a
            assert F.mul(a, F.one) == a
            assert F.add(a, F.neg(a)) == F.zero
            if not F.is_zero(a):
                assert F.mul(a, F.inv(a)) == F.one
        # associativity and distributivity spot checks on a fixed window
        window = elems[: min(len(elems), 9)]
        for a in window:
            for b in window:
                assert F.mul(a, b) == F.mul(b, a)
                for c in window:
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_multiplicative_group_order():
    for (p, k) in [(2, 3), (3, 2), (5, 2)]:
        F = make_field(p, k)
        for a in all_elements(F):
            if not F.is_zero(a):
                assert F.pow(a, F.q - 1) == F.one


def test_pow_negative_exponent():
    F = make_field(7)
    assert F.pow(3, -1) == F.inv(3)
    assert F.pow(3, -2) == F.inv(F.mul(3, 3))
    F2 = make_field(3, 2)
    a = F2.element(5)
    assert F2.mul(F2.pow(a, -3), F2.pow(a, 3)) == F2.one


def test_frobenius_is_pth_power():
    F = make_field(3, 2)
    for a in all_elements(F):
        assert F.frobenius(a) == F.pow(a, 3)
        assert F.frobenius(a, 2) == a


def test_encode_element_roundtrip():
    F = make_field(5, 2)
    for n in range(F.q):
        assert F.encode(F.element(n)) == n


def test_poly_divmod_recombines():
    F = make_field(5)
    a = (3, 1, 4, 1, 2)
    b = (2, 0, 1)
    q, r = poly_divmod(F, a, b)
    assert poly_add(F, poly_mul(F, q, b), r) == a
    assert len(r) < len(b)


def test_poly_divmod_zero_divisor():
    F = make_field(5)
    with pytest.raises(DivisorZero):
        poly_divmod(F, (1, 2), ())


def test_poly_gcd_of_products():
    F = make_field(7)
    f = (1, 1)        # x + 1
    g = (3, 1)        # x + 3
    h = (2, 5, 1)     # arbitrary quadratic
    a = poly_mul(F, f, h)
    b = poly_mul(F, g, h)
    d = poly_gcd(F, a, b)
    assert poly_divides(F, h, a) and poly_divides(F, h, b)
    assert poly_divides(F, d, a) and poly_divides(F, d, b)
    assert len(d) == len(h)


def test_poly_is_irreducible_quadratics_gf3():
    F = make_field(3)
    # x^2 + 1 has no root mod 3; x^2 + 2 = (x+1)(x+2)
    assert poly_is_irreducible(F, (1, 0, 1))
    assert not poly_is_irreducible(F, (2, 0, 1))
    assert not poly_is_irreducible(F, (0, 1, 1))


def test_poly_roots_sorted_and_complete():
    F = make_field(11)
    # (x - 2)(x - 5)(x - 7)
    f = poly_mul(F, poly_mul(F, (-2 % 11, 1), (-5 % 11, 1)), (-7 % 11, 1))
    assert poly_roots(F, f) == [2, 5, 7]
    for r in [2, 5, 7]:
        assert poly_eval(F, f, r) == 0


def test_poly_roots_extension_field():
    F = make_field(3, 2)
    # x^2 + 1 splits over GF(9)
    roots = poly_roots(F, (F.one, F.zero, F.one))
    assert len(roots) == 2
    for r in roots:
        assert F.add(F.mul(r, r), F.one) == F.zero
    assert roots == sorted(roots, key=F.encode)


def test_root_multiplicity():
    F = make_field(5)
    # (x - 1)^3 (x - 2)
    f = (1,)
    for _ in range(3):
        f = poly_mul(F, f, (-1 % 5, 1))
    f = poly_mul(F, f, (-2 % 5, 1))
    assert root_multiplicity(F, f, 1) == 3
    assert root_multiplicity(F, f, 2) == 1
    assert root_multiplicity(F, f, 3) == 0


def test_squarefree_decomposition_char_p_edge():
    F = make_field(3)
    # f = (x^3 - x)^3 = g(x)^3 with g squarefree; derivative vanishes
    g = (0, 2, 0, 1)  # x^3 - x
    f = poly_mul(F, poly_mul(F, g, g), g)
    assert poly_deriv(F, f) == ()
    parts = squarefree_decomposition(F, f)
    recombined = (1,)
    for factor, mult in parts:
        for _ in range(mult):
            recombined = poly_mul(F, recombined, factor)
    assert recombined == f
    for factor, _ in parts:
        d = poly_gcd(F, factor, poly_deriv(F, factor))
        assert len(d) == 1


def test_poly_divides():
    F = make_field(5)
    f = poly_mul(F, (1, 1), (2, 1))
    assert poly_divides(F, (1, 1), f)
    assert not poly_divides(F, (3, 1), f)
