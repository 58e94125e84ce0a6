"""Built-in example algebras with expected-center metadata.

Each entry records its presentation and, where the center is known for the
chosen parameters, a list of generator expressions whose products span the
center.  ``expected_center_generators`` is ``None`` when no claim is made
(for instance quantum polynomials in an odd number of variables).

Roots of unity live inside prime fields: q = 2 in F_7 has order 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .algebra import Element, Relation, SkewPBWAlgebra
from .coeff import BaseRing, Endomorphism, Field, SigmaDerivation


class UnknownEntry(KeyError):
    def __str__(self):
        return str(self.args[0])


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "field", "scalar", "int"
    default: object
    help: str


@dataclass
class CatalogEntry:
    name: str
    params: dict
    algebra: SkewPBWAlgebra
    expected_center_generators: list[str] | None
    description: str
    notes: list[str] = dc_field(default_factory=list)

    def expected_elements(self) -> list[Element] | None:
        if self.expected_center_generators is None:
            return None
        return [self.algebra(g) for g in self.expected_center_generators]

    def relations_text(self) -> list[str]:
        alg = self.algebra
        lines = []
        if alg.base.gen is not None:
            for i in range(alg.n):
                lines.append(alg.commutation_text(i))
        for i in range(alg.n):
            for j in range(i + 1, alg.n):
                lines.append(alg.relation_text(i, j))
        return lines


FIELD = Param("field", "field", "fp:7", "q (rationals) or fp:<p>")
Q = Param("q", "scalar", "2", "deformation parameter, a nonzero field element")
M = Param("m", "int", None, "optional multiplicative order of q, validated if given")
LITERATURE = "presentation adopted from cited literature on skew PBW extensions"


def _field_param(default):
    return Param("field", "field", default, FIELD.help)


def _n_param(default=1):
    return Param("n", "int", default, "number of variable pairs")


# name -> (schema, builder, description)
_REGISTRY: dict = {}


def _entry(name, description, *schema):
    def wrap(fn):
        _REGISTRY[name] = (schema, fn, description)
        return fn

    return wrap


# -- parameter helpers -------------------------------------------------------------


def _nonzero(F: Field, value, label: str):
    c = F(value)
    if not c:
        raise InvalidParams(f"{label} must be nonzero in {F.label()}")
    return c


def _order(F: Field, q, m_given) -> int | float:
    m = F.mult_order(q)
    if m_given is not None and m_given != m:
        shown = "infinite" if m == math.inf else m
        raise InvalidParams(f"q = {F.fmt(q)} has multiplicative order {shown}, not m = {m_given}")
    return m



def _fmt_pow(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def _quantum_generators(names, m) -> list[str]:
    if m == math.inf:
        return []
    if m == 1:
        return list(names)
    return [_fmt_pow(x, m) for x in names]


def _pairs(F: Field, left: list[str], right: list[str], c, tail0=()) -> SkewPBWAlgebra:
    """Generators left + right where right[i] * left[i] = c left[i] right[i] + tail0; other pairs commute."""
    n = len(left)
    R = BaseRing.of_field(F)
    rels = {(i, n + i): Relation(R.const(c), tail0) for i in range(n)}
    return SkewPBWAlgebra(R, left + right, relations=rels)


# -- entries ------------------------------------------------------------------------


@_entry(
    "skew_poly_extension",
    "K(i)[x; sigma] with K(i) = K[u]/(u^2+1) and sigma the conjugation u -> -u",
    _field_param("q"),
)
def _skew_poly_extension(F):
    R = BaseRing.extension(F, (1, 0, 1), "u")
    sigma = Endomorphism(R, R.neg(R.gen_tuple()))
    alg = SkewPBWAlgebra(R, ["x"], sigma=[sigma], name="skew_poly_extension")
    return alg, ["x^2"], {}, []


@_entry(
    "shift_operators",
    "K[t][xh; sigma_h] with sigma_h(t) = t - h",
    _field_param("fp:3"),
    Param("h", "scalar", "1", "shift step, nonzero"),
)
def _shift_operators(F, h):
    h = _nonzero(F, h, "h")
    R = BaseRing.polynomial(F, "t")
    sigma = Endomorphism(R, R.coerce((F.neg(h), F.one)))
    alg = SkewPBWAlgebra(R, ["xh"], sigma=[sigma], name="shift_operators")
    p = F.p
    if p is None:
        # sigma_h has infinite order and fixes only K
        return alg, [], {}, []
    # h^(p-1) = 1 in F_p, so t^p - h^(p-1) t is t^p - t
    return alg, [f"t^{p} - t", f"xh^{p}"], {}, []


@_entry(
    "shift_differential",
    "K[t][x; d/dt][xh; sigma_h]: x t = t x + 1, xh t = (t - h) xh, x xh = xh x",
    _field_param("fp:2"),
    Param("h", "scalar", "1", "shift step, nonzero"),
)
def _shift_differential(F, h):
    h = _nonzero(F, h, "h")
    R = BaseRing.polynomial(F, "t")
    ident = Endomorphism.identity(R)
    shift = Endomorphism(R, R.coerce((F.neg(h), F.one)))
    ddt = SigmaDerivation(ident, R.one)
    alg = SkewPBWAlgebra(
        R, ["x", "xh"], sigma=[ident, shift], delta=[ddt, SigmaDerivation(shift)], name="shift_differential"
    )
    p = F.p
    if p is None:
        return alg, None, {}, []
    return alg, [f"x^{p}", f"xh^{p}", f"t^{p * p} - t^{p}"], {}, []


@_entry(
    "weyl",
    "Weyl algebra A_n(K): x_i t_i = t_i x_i + 1, all other pairs commute",
    _field_param("fp:3"),
    _n_param(),
)
def _weyl(F, n):
    if n < 1:
        raise InvalidParams("n must be at least 1")
    ts = ["t"] if n == 1 else [f"t{i}" for i in range(1, n + 1)]
    xs = ["x"] if n == 1 else [f"x{i}" for i in range(1, n + 1)]
    alg = _pairs(F, ts, xs, F.one, (F.one,))
    alg.name = "weyl"
    if F.p is None:
        return alg, [], {}, []
    return alg, [f"{v}^{F.p}" for v in ts + xs], {}, []


@_entry(
    "jordan",
    "Jordan plane K[x][y; d], d(x) = x^2, i.e. y x = x y + x^2",
    _field_param("fp:3"),
)
def _jordan(F):
    R = BaseRing.polynomial(F, "x")
    ident = Endomorphism.identity(R)
    delta = SigmaDerivation(ident, R.monomial(2))
    alg = SkewPBWAlgebra(R, ["y"], sigma=[ident], delta=[delta], name="jordan")
    if F.p is None:
        return alg, None, {}, []
    return alg, [f"x^{F.p}", f"y^{F.p}"], {}, []


@_entry("quantum_plane", "quantum plane: y x = q x y", FIELD, Q, M)
def _quantum_plane(F, q, m):
    q = _nonzero(F, q, "q")
    order = _order(F, q, m)
    R = BaseRing.of_field(F)
    alg = SkewPBWAlgebra(R, ["x", "y"], relations={(0, 1): Relation(R.const(q))}, name="quantum_plane")
    return alg, _quantum_generators(["x", "y"], order), {"m": order}, []


@_entry(
    "quantum_polynomials",
    "quantum polynomials: x_j x_i = q x_i x_j for i < j",
    FIELD,
    Q,
    Param("n", "int", 2, "number of variables, at least 2"),
    M,
)
def _quantum_polynomials(F, q, n, m):
    if n < 2:
        raise InvalidParams("n must be at least 2")
    q = _nonzero(F, q, "q")
    order = _order(F, q, m)
    R = BaseRing.of_field(F)
    names = [f"x{i}" for i in range(1, n + 1)]
    rels = {(i, j): Relation(R.const(q)) for i in range(n) for j in range(i + 1, n)}
    alg = SkewPBWAlgebra(R, names, relations=rels, name="quantum_polynomials")
    notes = []
    if order == 1 or (n % 2 == 0 and order != math.inf):
        expected = _quantum_generators(names, order)
    else:
        expected = None
        notes.append("no expected center recorded: the known description needs n even")
    return alg, expected, {"m": order}, notes


@_entry("quantum_weyl", "quantum Weyl algebra: y x = q x y + a", FIELD, Q, Param("a", "scalar", "1", "nonzero"), M)
def _quantum_weyl(F, q, a, m):
    q = _nonzero(F, q, "q")
    a = _nonzero(F, a, "a")
    order = _order(F, q, m)
    R = BaseRing.of_field(F)
    alg = SkewPBWAlgebra(R, ["x", "y"], relations={(0, 1): Relation(R.const(q), R.const(a))}, name="quantum_weyl")
    if order == math.inf:
        expected = None
    elif order == 1:
        expected = None if F.p is None else [f"x^{F.p}", f"y^{F.p}"]
    else:
        expected = [f"x^{order}", f"y^{order}"]
    return alg, expected, {"m": order}, []


def _root_of_unity(F, q, m):
    q = _nonzero(F, q, "q")
    order = _order(F, q, m)
    if order == 1 or order == math.inf:
        raise InvalidParams(f"q must be a root of unity of order >= 2, got q = {F.fmt(q)}")
    return q, order


@_entry("q_differential", "q-differential operators: y x = q x y + 1", FIELD, Q, M)
def _q_differential(F, q, m):
    q, order = _root_of_unity(F, q, m)
    R = BaseRing.of_field(F)
    alg = SkewPBWAlgebra(R, ["x", "y"], relations={(0, 1): Relation(R.const(q), R.one)}, name="q_differential")
    return alg, [f"x^{order}", f"y^{order}"], {"l": order}, [LITERATURE]


@_entry(
    "additive_weyl",
    "additive analogue of the Weyl algebra: y_i x_i = q x_i y_i + 1, other pairs commute",
    FIELD,
    Q,
    _n_param(),
    M,
)
def _additive_weyl(F, q, n, m):
    if n < 1:
        raise InvalidParams("n must be at least 1")
    q, order = _root_of_unity(F, q, m)
    xs = ["x"] if n == 1 else [f"x{i}" for i in range(1, n + 1)]
    ys = ["y"] if n == 1 else [f"y{i}" for i in range(1, n + 1)]
    alg = _pairs(F, xs, ys, q, (F.one,))
    alg.name = "additive_weyl"
    return alg, [f"{v}^{order}" for v in xs + ys], {"l": order}, [LITERATURE]


@_entry(
    "q_dilation",
    "linear partial q-dilation operators: H_i t_i = q t_i H_i, other pairs commute",
    FIELD,
    Q,
    _n_param(),
    M,
)
def _q_dilation(F, q, n, m):
    if n < 1:
        raise InvalidParams("n must be at least 1")
    q, order = _root_of_unity(F, q, m)
    ts = [f"t{i}" for i in range(1, n + 1)]
    hs = [f"H{i}" for i in range(1, n + 1)]
    alg = _pairs(F, ts, hs, q)
    alg.name = "q_dilation"
    return alg, [f"{v}^{order}" for v in ts + hs], {"l": order}, [LITERATURE]


@_entry(
    "q_partial_differential",
    "linear partial q-differential operators: D_i t_i = q t_i D_i + 1, other pairs commute",
    FIELD,
    Q,
    _n_param(),
    M,
)
def _q_partial_differential(F, q, n, m):
    if n < 1:
        raise InvalidParams("n must be at least 1")
    q, order = _root_of_unity(F, q, m)
    ts = [f"t{i}" for i in range(1, n + 1)]
    ds = [f"D{i}" for i in range(1, n + 1)]
    alg = _pairs(F, ts, ds, q, (F.one,))
    alg.name = "q_partial_differential"
    return alg, [f"{v}^{order}" for v in ts + ds], {"l": order}, [LITERATURE]


@_entry(
    "usl2_char2",
    "U(sl_2) in characteristic 2: f e = e f + h, h central",
    _field_param("fp:2"),
)
def _usl2(F):
    if F.p != 2:
        raise InvalidParams("usl2_char2 needs a field of characteristic 2 (fp:2)")
    R = BaseRing.of_field(F)
    h_tail = ((), (), R.one)
    alg = SkewPBWAlgebra(R, ["e", "f", "h"], relations={(0, 1): Relation(R.one, (), h_tail)}, name="usl2_char2")
    return alg, ["e^2", "f^2", "h"], {}, []


# -- public API ---------------------------------------------------------------------

_CHAR_P = {"shift_operators", "shift_differential", "weyl", "jordan"}


def _coerce_param(spec: Param, value, F: Field | None):
    if spec.kind == "field":
        try:
            return Field.parse(value)
        except ValueError as e:
            raise InvalidParams(str(e)) from None
    if spec.kind == "int":
        if value is None:
            return None
        try:
            return int(value)
        except (TypeError, ValueError):
            raise InvalidParams(f"{spec.name} must be an integer, got {value!r}") from None
    try:
        return F.parse_scalar(str(value)) if isinstance(value, str) else F(value)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParams(f"cannot read {spec.name} = {value!r} in {F.label()}: {e}") from None


def build(name: str, params: dict | None = None, **kwargs) -> CatalogEntry:
    """Construct a catalog entry; unspecified parameters take their defaults."""
    if name not in _REGISTRY:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(_REGISTRY)}")
    schema, fn, description = _REGISTRY[name]
    given = {**(params or {}), **kwargs}
    given = {k: v for k, v in given.items() if v is not None}
    known = {s.name for s in schema}
    extra = set(given) - known
    if extra:
        raise InvalidParams(f"{name} does not take parameter(s) {', '.join(sorted(extra))}")
    F = _coerce_param(schema[0], given.get("field", schema[0].default), None)
    values = [F]
    for spec in schema[1:]:
        values.append(_coerce_param(spec, given.get(spec.name, spec.default), F))
    try:
        alg, expected, derived, notes = fn(*values)
    except InvalidParams:
        raise
    except ValueError as e:
        raise InvalidParams(str(e)) from None
    alg.name = name
    shown = {"field": F.label()}
    for spec, v in zip(schema[1:], values[1:]):
        if v is not None:
            shown[spec.name] = F.fmt(v) if spec.kind == "scalar" else v
    for k, v in derived.items():
        shown[k] = "infinite" if v == math.inf else v
    if name in _CHAR_P and F.p is None and expected is None:
        notes = notes + ["characteristic 0: the known center description applies in positive characteristic"]
    return CatalogEntry(name, shown, alg, expected, description, list(notes))


def list_entries() -> list[dict]:
    """Entry names with their parameter schemas, in a fixed order."""
    return [
        {
            "name": name,
            "description": description,
            "params": [{"name": s.name, "kind": s.kind, "default": s.default, "help": s.help} for s in schema],
        }
        for name, (schema, _, description) in _REGISTRY.items()
    ]


def names() -> list[str]:
    return list(_REGISTRY)
