"""Degree-bounded centers, fixed subrings, and the Z(R[x; sigma]) check."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

from .algebra import Element, SkewPBWAlgebra, commutator
from .coeff import (
    FIELD_ITSELF,
    SIMPLE_EXTENSION,
    BaseElement,
    BaseRing,
    Endomorphism,
    endo_order,
)
from .linalg import Echelon, sparse_nullspace


@dataclass
class CenterBasis:
    degree_bound: int
    basis: list[Element]
    dims_by_degree: list[int]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: Element) -> bool:
        """Whether ``a`` lies in the K-span of the basis."""
        if not a:
            return True
        ech = _echelon_of(self.basis, a.algebra.field)
        return ech.contains(a.coords())


def _echelon_of(elems, field) -> Echelon:
    ech = Echelon(field)
    for e in elems:
        ech.add(e.coords())
    return ech


def span_rank(elems: list[Element]) -> int:
    if not elems:
        return 0
    return _echelon_of(elems, elems[0].algebra.field).rank


def same_span(a: list[Element], b: list[Element]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def is_central(a: Element) -> bool:
    """True iff a commutes with every algebra generator (x_i and the base generator)."""
    return all(commutator(a, g).is_zero() for g in a.algebra.algebra_generators())


def _canonical_basis(alg: SkewPBWAlgebra, vectors: list[dict], monos: list) -> list[Element]:
    """Reduced echelon basis keyed on leading monomials, each leading coefficient 1.

    Columns are eliminated from the highest degree-lex monomial down, so the
    result is a filtered basis: its members of degree <= e span the
    degree-<=e part of the space.  Sorted by leading monomial, ascending.
    """
    top = len(monos) - 1
    ech = Echelon(alg.field)
    for v in vectors:
        ech.add({top - c: x for c, x in v.items()})
    rows = ech.reduced_rows()
    return [alg.from_coords({monos[top - c]: x for c, x in row.items()}) for row in reversed(rows)]


def central_space(alg: SkewPBWAlgebra, d: int) -> CenterBasis:
    """Exact K-basis of {z : deg z <= d, z central}.

    A generic element over all ext-monomials of degree <= d is constrained by
    [z, g] = 0 for each algebra generator g, and the nullspace is solved
    exactly.  Results are cached on the algebra.
    """
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    key = ("center", d)
    if key in alg.cache:
        return alg.cache[key]
    monos = alg.ext_monomials(d)
    gens = alg.algebra_generators()
    rows: dict = {}
    for col, m in enumerate(monos):
        b = alg.ext_element(m)
        for gi, g in enumerate(gens):
            for coord, x in commutator(b, g).coords().items():
                rows.setdefault((gi, coord), {})[col] = x
    kernel = sparse_nullspace(rows.values(), len(monos), alg.field)
    basis = _canonical_basis(alg, kernel, monos)
    degrees = [z.total_degree() for z in basis]
    dims = [sum(1 for g in degrees if g <= e) for e in range(d + 1)]
    out = CenterBasis(d, basis, dims)
    alg.cache[key] = out
    return out


def fixed_subring_basis(sigma: Endomorphism, d: int) -> list[BaseElement]:
    """K-basis of {r in R : sigma(r) = r, deg r <= d}."""
    R = sigma.ring
    F = R.field
    if R.kind == FIELD_ITSELF:
        return [BaseElement(R, R.one)]
    top = min(d, R.ext_degree - 1) if R.kind == SIMPLE_EXTENSION else d
    rows: dict = {}
    for k in range(top + 1):
        tk = R.monomial(k)
        diff = R.sub(sigma(tk), tk)
        for j, c in enumerate(diff):
            if c:
                rows.setdefault(j, {})[k] = c
    kernel = sparse_nullspace(rows.values(), top + 1, F)
    ech = Echelon(F)
    for v in kernel:
        ech.add({top - k: c for k, c in v.items()})
    out = []
    for row in reversed(ech.reduced_rows()):
        coeffs = [F.zero] * (top + 1)
        for k, c in row.items():
            coeffs[top - k] = c
        out.append(BaseElement(R, R.coerce(tuple(coeffs))))
    return out


def expected_span(alg: SkewPBWAlgebra, generators: list[Element], d: int) -> list[Element]:
    """All products of the given (commuting) generators with total degree <= d."""
    out = [alg.one()]
    gens = [(g, g.total_degree()) for g in generators if g]
    if not gens:
        return out
    if any(dg <= 0 for _, dg in gens):
        raise ValueError("expected generators must have positive degree")
    bounds = [range(d // dg + 1) for _, dg in gens]
    for exps in itertools.product(*bounds):
        if not any(exps) or sum(e * dg for e, (_, dg) in zip(exps, gens)) > d:
            continue
        prod = alg.one()
        for e, (g, _) in zip(exps, gens):
            if e:
                prod = prod * g**e
        out.append(prod)
    return out


@dataclass
class CenterComparison:
    matches: bool
    computed_dim: int
    expected_dim: int
    missing: list[Element] = dc_field(default_factory=list)
    extra: list[Element] = dc_field(default_factory=list)


def compare_center(alg: SkewPBWAlgebra, expected_generators: list[Element], d: int) -> CenterComparison:
    """Compare central_space(d) with the degree-<=d span of products of expected generators."""
    center = central_space(alg, d)
    expected = expected_span(alg, expected_generators, d)
    exp_ech = _echelon_of(expected, alg.field)
    cen_ech = _echelon_of(center.basis, alg.field)
    extra = [z for z in center.basis if not exp_ech.contains(z.coords())]
    missing = [e for e in expected if not cen_ech.contains(e.coords())]
    return CenterComparison(not extra and not missing, center.dim, exp_ech.rank, missing, extra)


@dataclass
class SkewPolynomialCenterReport:
    passed: bool
    order: int | float
    center: CenterBasis
    expected: list[Element]
    message: str = ""

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        order = "infinite (within cap)" if self.order == math.inf else str(self.order)
        lines = [f"Z(R[x;sigma]) = R^sigma[x^v] check: {verdict} (order of sigma: {order})"]
        lines.append("  center:   " + ", ".join(map(str, self.center.basis)))
        lines.append("  expected: " + ", ".join(map(str, self.expected)))
        if self.message:
            lines.append("  " + self.message)
        return "\n".join(lines)


def skew_polynomial_ring(R: BaseRing, sigma: Endomorphism, name: str = "x") -> SkewPBWAlgebra:
    """R[x; sigma] with zero derivation."""
    return SkewPBWAlgebra(R, [name], sigma=[sigma], name="skew_polynomial_ring")


def verify_skew_polynomial_center(R: BaseRing, sigma: Endomorphism, d: int, cap: int = 64) -> SkewPolynomialCenterReport:
    """Check Z(R[x; sigma]) against R^sigma[x^v] (or R^sigma when sigma has infinite order)."""
    alg = skew_polynomial_ring(R, sigma)
    v = endo_order(sigma, cap)
    center = central_space(alg, d)
    w = alg.coeff_weight()
    expected = []
    steps = [0] if v == math.inf else range(0, d // v + 1)
    for k in steps:
        power = k * (0 if v == math.inf else v)
        for r in fixed_subring_basis(sigma, d - power):
            if w * r.degree() + power <= d:
                expected.append(alg.monomial((power,), r.coeffs))
    ok = same_span(center.basis, expected)
    msg = "" if ok else f"dim center {center.dim} vs dim expected {span_rank(expected)}"
    return SkewPolynomialCenterReport(ok, v, center, expected, msg)
