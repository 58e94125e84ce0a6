import random

import pytest

from oracles import WordAlgebra, quantum_plane_product, weyl_product
from skewpbw import (
    BaseRing,
    Field,
    IncompatibleAlgebras,
    InvalidPresentation,
    SkewPBWAlgebra,
    add,
    build,
    check_pbw_consistency,
    commutator,
    mul,
    parse_base,
    neg,
    power,
    random_element,
    scalar_mul,
    total_degree,
)
from skewpbw.algebra import Relation
from skewpbw.catalog import names

QP = build("quantum_plane", field="fp:7", q=2).algebra
WEYL3 = build("weyl", field="fp:3").algebra
JORDAN = build("jordan", field="fp:3").algebra
SHIFT = build("shift_operators", field="fp:3").algebra

CATALOG = {name: build(name).algebra for name in names()}


def coords(a):
    return {k: (int(v) if a.algebra.field.p else v) for k, v in a.coords().items()}


# -- examples -------------------------------------------------------------


def test_mul_examples():
    x, y = QP.gens()
    assert y * x == QP("2*x*y")
    t, xx = WEYL3.gens()
    assert xx * t == WEYL3("t*x + 1")
    jx, jy = JORDAN.base_gen(), JORDAN.gen(0)
    assert jy * jx == jx * jy + jx**2
    rng = random.Random(0)
    for alg in (QP, WEYL3, JORDAN):
        for _ in range(20):
            a = random_element(alg, rng)
            assert mul(alg.one(), a) == a == mul(a, alg.one())


def test_module_examples():
    rng = random.Random(1)
    a = random_element(QP, rng)
    assert add(a, neg(a)).is_zero()
    SD = build("shift_differential").algebra
    t, x, xh = SD.base_gen(), SD.gen("x"), SD.gen("xh")
    assert scalar_mul(parse_base("t", SD.base), x + xh) == t * x + t * xh
    F3 = build("quantum_plane", field="fp:3", q=2).algebra
    assert (3 * F3.gen(0)).is_zero()


def test_commutator_examples():
    x, y = QP.gens()
    assert commutator(y, x) == QP("x*y")
    assert commutator(x**3, y).is_zero()
    rng = random.Random(2)
    a = random_element(WEYL3, rng)
    assert commutator(a, a).is_zero()


def test_power_examples():
    x, y = QP.gens()
    assert power(x, 3) == QP.monomial((3, 0))
    assert power(x + y, 2) == QP("x^2 + 3*x*y + y^2")
    assert power(QP.zero(), 5).is_zero()
    assert power(x, 0) == QP.one()


def test_total_degree_examples():
    assert total_degree(QP("x^2*y")) == 3
    assert total_degree(SHIFT("t^2*xh")) == 3
    assert total_degree(QP.zero()) is None


def test_incompatible_algebras():
    other = build("quantum_plane", field="fp:5", q=2).algebra
    with pytest.raises(IncompatibleAlgebras):
        mul(QP.gen(0), other.gen(0))
    with pytest.raises(IncompatibleAlgebras):
        add(QP.gen(0), other.gen(0))


def test_non_unit_constant_rejected():
    F = Field.prime(7)
    R = BaseRing.of_field(F)
    with pytest.raises((InvalidPresentation, ValueError)):
        SkewPBWAlgebra(R, ["x", "y"], relations={(0, 1): Relation((), (), ((), ()))})


def test_zero_generator_presentation():
    R = BaseRing.polynomial(Field.prime(5), "t")
    A = SkewPBWAlgebra(R, [])
    t = A.base_gen()
    assert t * t == A("t^2")
    assert total_degree(t**3) == 3
    assert check_pbw_consistency(A, 3).passed


# -- closed-form oracles -------------------------------------------------------


def test_quantum_plane_closed_form():
    for a, b, c, d in [(1, 2, 3, 1), (0, 4, 2, 2), (3, 3, 3, 3), (2, 0, 0, 5)]:
        mono, coeff = quantum_plane_product((a, b), (c, d), 2, 7)
        assert QP.monomial((a, b)) * QP.monomial((c, d)) == QP.monomial(mono).scale(coeff)


@pytest.mark.parametrize("field,p", [("fp:3", 3), ("q", None), ("fp:7", 7)])
def test_weyl_closed_form(field, p):
    A = build("weyl", field=field).algebra
    t, x = A.gens()
    for b in range(5):
        for c in range(5):
            expected = A.zero()
            for (tc, xb), coeff in weyl_product(b, c, p).items():
                expected = expected + (t**tc * x**xb).scale(coeff)
            assert x**b * t**c == expected


# -- properties ---------------------------------------------------------------


@pytest.mark.parametrize("name", list(CATALOG))
def test_mul_matches_rewriting_oracle(name):
    A = CATALOG[name]
    W = WordAlgebra(A)
    rng = random.Random(7)
    for _ in range(40):
        a, b = random_element(A, rng), random_element(A, rng)
        assert coords(a * b) == W.mul(a, b)


@pytest.mark.parametrize("name", list(CATALOG))
def test_ring_axioms(name):
    A = CATALOG[name]
    rng = random.Random(13)
    for _ in range(200):
        a, b, c = (random_element(A, rng, max_degree=3, max_terms=3) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


@pytest.mark.parametrize("name", list(CATALOG))
def test_degree_additivity(name):
    A = CATALOG[name]
    rng = random.Random(17)
    for _ in range(100):
        a, b = random_element(A, rng), random_element(A, rng)
        assert total_degree(a * b) == total_degree(a) + total_degree(b)


@pytest.mark.parametrize("name", list(CATALOG))
def test_normal_form_closure(name):
    A = CATALOG[name]
    rng = random.Random(19)
    for _ in range(50):
        z = random_element(A, rng) * random_element(A, rng)
        for (alpha, j), c in z.coords().items():
            assert len(alpha) == A.n and min(alpha, default=0) >= 0
            assert c == A.field(c) and c
        if A.base.kind == "simple_extension":
            assert all(len(v) < len(A.base.modulus) for v in z.terms.values())


@pytest.mark.parametrize("name", [n for n in CATALOG if CATALOG[n].base.gen is not None])
def test_rewrite_fidelity(name):
    A = CATALOG[name]
    R = A.base
    top = 4 if R.kind != "simple_extension" else len(R.modulus) - 2
    for i in range(A.n):
        xi = A.gen(i)
        for k in range(top + 1):
            r = R.monomial(k)
            lhs = xi * A.element({A.unit_mono: r})
            sig, dl = A.sigma[i](r), A.delta[i](r)
            assert lhs == A.scalar(sig) * xi + A.scalar(dl)


# -- PBW consistency ---------------------------------------------------------------


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_is_pbw_consistent(name):
    report = check_pbw_consistency(CATALOG[name], 4)
    assert report.passed, str(report)


def test_pbw_checker_finds_mutation():
    A = build("quantum_polynomials", n=3).algebra
    bad = A.with_relation(0, 1, tail0=1)
    report = check_pbw_consistency(bad, 4)
    assert not report.passed
    assert report.witness is not None


def test_pbw_checker_requires_degree_three():
    with pytest.raises(ValueError):
        check_pbw_consistency(QP, 2)
