"""Problem files: JSON descriptions of a reduction model plus its semilinear
automorphism data.

Field elements are serialized as coefficient vectors over F_p with respect to
the canonical modulus of their field (an int is shorthand for a constant).
Integers that would lose precision in a double (|n| >= 2^53) are emitted as
decimal strings and accepted back in either form.
"""

import json
import os
from dataclasses import dataclass, field as dc_field

from . import fields
from .automorphisms import (AutGroup, ComponentMap, RatFunc, SemilinearAut,
                            identity_map, pure_frobenius,
                            validate_automorphism)
from .curve import (CurveModel, OrbitComponent, SuperellipticComponent,
                    validate_component)
from .errors import ValidationError
from .polynomials import Poly

_SAFE = 1 << 53


def encode_int(n):
    return n if abs(n) < _SAFE else str(n)


def decode_int(v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValidationError("expected an integer, got %r" % (v,))
    return int(v)


def encode_tree(obj):
    """Recursively apply the big-integer convention to a JSON-ready tree."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, dict):
        return {k: encode_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_tree(v) for v in obj]
    return obj


def _element(spec, F):
    """Parse an element of F from an int or coefficient list."""
    if isinstance(spec, str):
        spec = int(spec)
    if isinstance(spec, int):
        return F.element([spec % F.p])
    if isinstance(spec, list):
        vals = [decode_int(c) % F.p for c in spec]
        if len(vals) > F.s:
            raise ValidationError("coefficient vector longer than the field "
                                  "degree %d" % F.s)
        return F.element(vals)
    raise ValidationError("bad field element %r" % (spec,))


def _element_out(e):
    return list(e.coeffs)


def _poly(spec, F):
    return Poly(F, [_element(c, F) for c in spec])


def _ratfunc(spec, F):
    if spec is None:
        return RatFunc.one(F)
    return RatFunc(_poly(spec.get("num", [1]), F),
                   _poly(spec.get("den", [1]), F))


def _component_map(spec, F):
    if spec is None or spec == "identity":
        return identity_map(F)
    mob = spec.get("mobius")
    if mob is None:
        a, b = _element(spec.get("a", 1), F), _element(spec.get("b", 0), F)
        mobius = (a, b, F.zero(), F.one())
    else:
        if len(mob) != 4:
            raise ValidationError("mobius needs 4 entries")
        mobius = tuple(_element(v, F) for v in mob)
    return ComponentMap(mobius, _element(spec.get("y_scale", 1), F),
                        _ratfunc(spec.get("y_unit"), F))


@dataclass
class Problem:
    model: CurveModel
    ambient: object
    generators: dict  # name -> SemilinearAut (inertia generators)
    phi0: object  # SemilinearAut or None
    frob_period: int
    group: object  # AutGroup or None (built lazily)
    character_table: dict
    character_table_path: str
    options: dict
    raw: dict

    def build_group(self, cap=10000):
        if self.group is None:
            if self.phi0 is None and not self.generators:
                raise ValidationError("problem has no automorphism data")
            gens = dict(self.generators)
            if self.phi0 is not None:
                gens[self.phi0.word[0]] = self.phi0
            self.group = AutGroup(gens, self.frob_period, self.ambient,
                                  len(self.model.orbits), cap=cap)
        return self.group


DEFAULT_OPTIONS = {"max_field_bits": 32, "tolerance": 1e-9, "jobs": 1}


def parse_problem(doc, base_dir="."):
    for key in ("p", "base_degree", "components"):
        if key not in doc:
            raise ValidationError("problem file missing %r" % key)
    p = decode_int(doc["p"])
    s0 = decode_int(doc["base_degree"])
    opts = dict(DEFAULT_OPTIONS)
    opts.update(doc.get("options", {}))
    max_bits = opts["max_field_bits"]
    base = fields.make_field(p, s0, max_bits=max_bits)

    orbits = []
    for cs in doc["components"]:
        deg = decode_int(cs.get("degree", s0))
        if deg % s0:
            raise ValidationError(
                "component degree %d not a multiple of the base degree" % deg)
        F = fields.make_field(p, deg, max_bits=max_bits)
        comp = SuperellipticComponent(cs.get("label", "C%d" % len(orbits)),
                                      decode_int(cs["n"]), _poly(cs["f"], F))
        orbits.append(OrbitComponent(deg // s0, comp))
    model = CurveModel(base, orbits)

    amb_deg = decode_int(doc.get("ambient_degree", s0))
    ambient = fields.make_field(p, amb_deg, max_bits=max_bits)
    ncomp = len(orbits)

    generators = {}
    for gs in doc.get("generators", []):
        name = gs["name"]
        perm = [decode_int(i) for i in gs.get("perm", range(ncomp))]
        maps_spec = gs.get("maps")
        if maps_spec is None:
            maps = [identity_map(ambient)] * ncomp
        else:
            maps = [_component_map(m, ambient) for m in maps_spec]
        if len(maps) != ncomp or len(perm) != ncomp:
            raise ValidationError("generator %r has wrong component count"
                                  % name)
        generators[name] = SemilinearAut(
            ambient, decode_int(gs.get("frobenius", 0)), perm, maps, (name,))

    phi0 = None
    fs = doc.get("frobenius")
    if fs is not None:
        name = fs.get("name", "phi0")
        j = decode_int(fs.get("frobenius", s0))
        if j % s0:
            raise ValidationError(
                "distinguished Frobenius exponent must be a multiple of the "
                "base degree")
        if fs.get("maps") is None and fs.get("perm") is None:
            phi0 = pure_frobenius(ambient, ncomp, j, name)
        else:
            perm = [decode_int(i) for i in fs.get("perm", range(ncomp))]
            maps = [_component_map(m, ambient)
                    for m in fs.get("maps", [None] * ncomp)]
            phi0 = SemilinearAut(ambient, j, perm, maps, (name,))

    period = decode_int(doc.get("frobenius_period", 0))
    if (generators or phi0) and not period:
        raise ValidationError("automorphism data requires frobenius_period")

    ct, ct_path = None, doc.get("character_table")
    if ct_path is not None:
        full = os.path.join(base_dir, ct_path)
        with open(full) as fh:
            ct = json.load(fh)

    return Problem(model, ambient, generators, phi0, period, None, ct,
                   ct_path, opts, doc)


def load_problem(path):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError("problem file is not valid JSON: %s" % exc)
    return parse_problem(doc, base_dir=os.path.dirname(os.path.abspath(path)))


def emit_problem(problem):
    """Problem back to a JSON-ready dict (parse -> emit -> parse is the
    identity on the model and automorphism data)."""
    model = problem.model
    doc = {
        "p": model.base.p,
        "base_degree": model.base.s,
        "ambient_degree": problem.ambient.s,
        "components": [
            {"label": orb.component.label, "n": orb.component.n,
             "degree": orb.component.field.s,
             "f": [_element_out(c) for c in orb.component.f.coeffs]}
            for orb in model.orbits],
        "options": dict(problem.options),
    }
    if problem.frob_period:
        doc["frobenius_period"] = problem.frob_period

    def map_out(m):
        return {"mobius": [_element_out(v) for v in m.mobius],
                "y_scale": _element_out(m.y_scale),
                "y_unit": {"num": [_element_out(c)
                                   for c in m.y_unit.num.coeffs],
                           "den": [_element_out(c)
                                   for c in m.y_unit.den.coeffs]}}

    if problem.generators:
        doc["generators"] = [
            {"name": name, "frobenius": g.frob, "perm": list(g.perm),
             "maps": [map_out(m) for m in g.maps]}
            for name, g in problem.generators.items()]
    if problem.phi0 is not None:
        g = problem.phi0
        doc["frobenius"] = {"name": g.word[0], "frobenius": g.frob,
                            "perm": list(g.perm),
                            "maps": [map_out(m) for m in g.maps]}
    if problem.character_table_path:
        doc["character_table"] = problem.character_table_path
    return encode_tree(doc)


def validate_problem(problem):
    """Full structural validation; returns a summary dict."""
    from . import curve as curve_mod
    model = problem.model
    comp_info = []
    for orb in model.orbits:
        validate_component(orb.component)
        comp_info.append({"label": orb.component.label,
                          "n": orb.component.n,
                          "genus": curve_mod.genus(orb.component),
                          "orbit_length": orb.length})
    for name, g in problem.generators.items():
        if any(orb.length != 1 for orb in model.orbits):
            raise ValidationError(
                "automorphisms require a base model with trivial orbits")
        validate_automorphism(model, g)
    if problem.phi0 is not None:
        validate_automorphism(model, problem.phi0)
    return {"ok": True, "p": model.base.p, "q": model.base.order,
            "components": comp_info,
            "generators": sorted(problem.generators),
            "frobenius": problem.phi0.word[0] if problem.phi0 else None}
