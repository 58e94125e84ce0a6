"""JSON presentation files (schema version 1).

Example::

    {
      "schema_version": 1,
      "field": {"kind": "prime_field", "p": 7},
      "base": {"kind": "field_itself"},
      "generators": [{"name": "x"}, {"name": "y"}],
      "relations": [{"j": "y", "i": "x", "c": "2", "tail0": "0", "tail_coeffs": {}}]
    }

``base`` is ``{"kind": "univariate_poly", "generator": "t"}`` or
``{"kind": "simple_extension", "generator": "u", "modulus": ["1", "0", "1"]}``
(coefficients lowest degree first, monic).  Generators may carry
``sigma_image`` and ``delta_image``, the images of the base-ring generator as
text (defaults: the generator itself, and 0).  Relations give
``x_j x_i = c x_i x_j + tail0 + sum tail_coeffs[k] x_k`` for generator i
listed before generator j; omitted pairs commute.  All ring elements are
written in the element syntax, e.g. ``"t - 1"`` or ``"-1/2"``.
"""

from __future__ import annotations

import json

from .algebra import Relation, SkewPBWAlgebra
from .coeff import FIELD_ITSELF, PRIME_FIELD, RATIONALS, SIMPLE_EXTENSION, UNIVARIATE_POLY
from .coeff import BaseRing, Endomorphism, Field, SigmaDerivation
from .parser import parse_base

SCHEMA_VERSION = 1


class SpecFileError(ValueError):
    pass


def _need(d: dict, key: str, where: str):
    if key not in d:
        raise SpecFileError(f"{where}: missing key {key!r}")
    return d[key]


def dump_spec(alg: SkewPBWAlgebra) -> dict:
    R, F = alg.base, alg.field
    field = {"kind": F.kind} if F.p is None else {"kind": F.kind, "p": F.p}
    base: dict = {"kind": R.kind}
    if R.kind != FIELD_ITSELF:
        base["generator"] = R.gen
    if R.kind == SIMPLE_EXTENSION:
        base["modulus"] = [F.fmt(c) for c in R.modulus]
    gens = []
    for name, s, d in zip(alg.gen_names, alg.sigma, alg.delta):
        g = {"name": name}
        if R.kind != FIELD_ITSELF:
            g["sigma_image"] = R.fmt(s.image)
            g["delta_image"] = R.fmt(d.image)
        gens.append(g)
    rels = []
    for (i, j), rel in sorted(alg.relations.items()):
        if rel.c == R.one and rel.is_plain():
            continue
        tail = {alg.gen_names[k]: R.fmt(t) for k, t in enumerate(rel.tail) if t}
        rels.append(
            {"j": alg.gen_names[j], "i": alg.gen_names[i], "c": R.fmt(rel.c), "tail0": R.fmt(rel.tail0), "tail_coeffs": tail}
        )
    return {"schema_version": SCHEMA_VERSION, "field": field, "base": base, "generators": gens, "relations": rels}


def load_spec(data: dict) -> SkewPBWAlgebra:
    """Build an algebra from a parsed presentation file; raises SpecFileError on bad input."""
    if not isinstance(data, dict):
        raise SpecFileError("top level must be an object")
    version = _need(data, "schema_version", "file")
    if version != SCHEMA_VERSION:
        raise SpecFileError(f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION})")
    try:
        return _build(data)
    except SpecFileError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise SpecFileError(str(e)) from None


def _build(data: dict) -> SkewPBWAlgebra:
    fd = _need(data, "field", "file")
    kind = _need(fd, "kind", "field")
    if kind == RATIONALS:
        F = Field.rationals()
    elif kind == PRIME_FIELD:
        F = Field.prime(int(_need(fd, "p", "field")))
    else:
        raise SpecFileError(f"field: unknown kind {kind!r}")

    bd = _need(data, "base", "file")
    bkind = _need(bd, "kind", "base")
    if bkind == FIELD_ITSELF:
        R = BaseRing.of_field(F)
    elif bkind == UNIVARIATE_POLY:
        R = BaseRing.polynomial(F, _need(bd, "generator", "base"))
    elif bkind == SIMPLE_EXTENSION:
        modulus = tuple(F.parse_scalar(str(c)) for c in _need(bd, "modulus", "base"))
        R = BaseRing.extension(F, modulus, _need(bd, "generator", "base"))
    else:
        raise SpecFileError(f"base: unknown kind {bkind!r}")

    def ring_el(text) -> tuple:
        return parse_base(str(text), R).coeffs

    gens = _need(data, "generators", "file")
    names, sigmas, deltas = [], [], []
    for k, g in enumerate(gens):
        names.append(_need(g, "name", f"generators[{k}]"))
        if R.kind == FIELD_ITSELF:
            if "sigma_image" in g or g.get("delta_image", "0") != "0":
                raise SpecFileError(f"generators[{k}]: sigma/delta images need a base ring with a generator")
            s = Endomorphism.identity(R)
            sigmas.append(s)
            deltas.append(SigmaDerivation(s))
            continue
        s = Endomorphism(R, ring_el(g.get("sigma_image", R.gen)))
        sigmas.append(s)
        deltas.append(SigmaDerivation(s, ring_el(g.get("delta_image", "0"))))

    index = {name: k for k, name in enumerate(names)}
    relations = {}
    for k, r in enumerate(data.get("relations", [])):
        where = f"relations[{k}]"
        i, j = _need(r, "i", where), _need(r, "j", where)
        if i not in index or j not in index:
            raise SpecFileError(f"{where}: unknown generator in ({j!r}, {i!r})")
        i, j = index[i], index[j]
        if not i < j:
            raise SpecFileError(f"{where}: i must be listed before j in generators")
        tail = [()] * len(names)
        for name, coeff in (r.get("tail_coeffs") or {}).items():
            if name not in index:
                raise SpecFileError(f"{where}: unknown generator {name!r} in tail_coeffs")
            tail[index[name]] = ring_el(coeff)
        relations[(i, j)] = Relation(ring_el(r.get("c", "1")), ring_el(r.get("tail0", "0")), tuple(tail))
    return SkewPBWAlgebra(R, names, sigma=sigmas, delta=deltas, relations=relations, name=data.get("name"))


def read_spec_file(path: str) -> SkewPBWAlgebra:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path}: invalid JSON ({e})") from None
    return load_spec(data)


def spec_json(alg: SkewPBWAlgebra) -> str:
    return json.dumps(dump_spec(alg), indent=2, sort_keys=True) + "\n"
