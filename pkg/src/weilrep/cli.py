"""Command-line surface.

Subcommands: validate, count, zeta, twist, trace-table, decompose, report.
All output is JSON with sorted keys; runs are deterministic for any --jobs
setting.  Exit codes: 0 success, 2 validation/parse failure, 3 construction
impossible within the field-size bound, 4 mathematical inconsistency.
"""

import functools
import json
import sys

import click

from . import artin, curve, zeta
from .errors import (MathInconsistencyError, SolvabilityError,
                     ValidationError, WeilrepError)
from .problem import emit_problem, encode_tree, load_problem, validate_problem
from .twist import twist_model

EXIT_CODES = [(ValidationError, 2), (SolvabilityError, 3),
              (MathInconsistencyError, 4), (WeilrepError, 2)]


def _emit(doc):
    click.echo(json.dumps(encode_tree(doc), sort_keys=True, indent=1))


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WeilrepError as exc:
            for klass, code in EXIT_CODES:
                if isinstance(exc, klass):
                    break
            click.echo(json.dumps(
                {"error": exc.code, "message": str(exc)}, sort_keys=True),
                err=True)
            sys.exit(code)
        except (OSError, json.JSONDecodeError) as exc:
            click.echo(json.dumps(
                {"error": "io", "message": str(exc)}, sort_keys=True),
                err=True)
            sys.exit(2)
    return wrapper


def common_options(fn):
    for deco in (
        click.option("--max-field-bits", type=int, default=None,
                     help="Field size bound: constructions stay below "
                          "2^BITS elements (default 32)."),
        click.option("--tolerance", type=float, default=None,
                     help="Numeric tolerance for root checks (default 1e-9)."),
        click.option("--jobs", type=int, default=None,
                     help="Worker threads for point counting."),
    ):
        fn = deco(fn)
    return fn


def _load(path, max_field_bits, tolerance, jobs):
    prob = load_problem(path)
    opts = prob.options
    if max_field_bits is not None:
        opts["max_field_bits"] = max_field_bits
    if tolerance is not None:
        opts["tolerance"] = tolerance
    if jobs is not None:
        opts["jobs"] = jobs
    return prob


def _twisted(prob, element, f_power):
    """Model for the Frobenius element phi0^f_power * element."""
    opts = prob.options
    if not element and prob.phi0 is None and not prob.generators:
        if f_power != 1:
            raise ValidationError(
                "problem has no Frobenius data; only --frobenius-power 1 "
                "makes sense")
        return prob.model, None
    G = prob.build_group()
    g = G.resolve_word(element or "id")
    tw = twist_model(prob.model, g, G, f_power,
                     max_bits=opts["max_field_bits"])
    return tw.model, tw


@click.group()
def main():
    """Weil representations of p-adic curves from stable-reduction data."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@common_options
@handle_errors
def validate(file, max_field_bits, tolerance, jobs):
    """Check a problem file: curve equations, genus, automorphisms."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    summary = validate_problem(prob)
    if prob.generators or prob.phi0:
        summary["group_order"] = prob.build_group().order()
    _emit(summary)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--element", default="", help="Inertia word, e.g. 'tau2'.")
@click.option("--frobenius-power", default=1, type=int)
@click.option("--ext", default=1, type=int,
              help="Count over extensions of degree 1..EXT.")
@common_options
@handle_errors
def count(file, element, frobenius_power, ext, max_field_bits, tolerance,
          jobs):
    """Point counts of the (twisted) model over extension fields."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    model, _ = _twisted(prob, element, frobenius_power)
    opts = prob.options
    counts = [curve.count_points(model, m, jobs=opts["jobs"],
                                 max_bits=opts["max_field_bits"])
              for m in range(1, ext + 1)]
    _emit({"q": model.base.order, "element": element or "id",
           "frobenius_power": frobenius_power, "counts": counts})


def _poly_doc(P, tolerance):
    rep = zeta.verify_weil(P, tolerance)
    return {"coefficients": list(P.coeffs), "q": P.q, "genus": P.genus,
            "components": P.d, "weil_check": rep}


@main.command(name="zeta")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--element", default="")
@click.option("--frobenius-power", default=1, type=int)
@common_options
@handle_errors
def zeta_cmd(file, element, frobenius_power, max_field_bits, tolerance,
             jobs):
    """Local polynomial of the (twisted) model."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    model, _ = _twisted(prob, element, frobenius_power)
    opts = prob.options
    P = zeta.local_polynomial(model, jobs=opts["jobs"],
                              max_bits=opts["max_field_bits"],
                              tolerance=opts["tolerance"])
    _emit({"element": element or "id", "frobenius_power": frobenius_power,
           "polynomial": _poly_doc(P, opts["tolerance"])})


@main.command(name="twist")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--element", default="")
@click.option("--frobenius-power", default=1, type=int)
@common_options
@handle_errors
def twist_cmd(file, element, frobenius_power, max_field_bits, tolerance,
              jobs):
    """Twisted model equations for a Frobenius element."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    model, tw = _twisted(prob, element, frobenius_power)
    doc = {"element": element or "id", "frobenius_power": frobenius_power,
           "base_field": {"p": model.base.p, "degree": model.base.s},
           "components": [
               {"label": orb.component.label, "n": orb.component.n,
                "degree": orb.component.field.s,
                "orbit_length": orb.length,
                "f": [list(c.coeffs) for c in orb.component.f.coeffs]}
               for orb in model.orbits]}
    if tw is not None:
        doc["conjugator"] = " ".join(tw.conjugator_word) or "id"
        doc["orbits"] = [
            {"shape": o.shape_kind, "length": o.length,
             "descent_field_degree": o.alpha_field_degree,
             "virtual_degree": o.virtual_degree}
            for o in tw.orbits]
    _emit(doc)


def _trace_doc(table):
    rows = []
    for ct in table.classes:
        rows.append({
            "class": " ".join(ct.rep_word) or "id",
            "size": ct.size,
            "frobenius_power": ct.j_prime,
            "count": ct.count,
            "trace": ct.trace_int,
            "artin_trace": {
                "rational": str(ct.rho0_rational),
                "gamma_power": ct.rho0_power,
                "complex": _cplx(ct.rho0_cyc.to_complex()),
            }})
    return {
        "artin_order": table.f,
        "class_constant": table.c,
        "q": table.q,
        "genus": table.genus,
        "local_polynomial": list(table.base_polynomial),
        "gamma": {"relation": "gamma^%d = %d" % (table.f, table.c),
                  "complex_embedding": _cplx(table.gamma_complex())},
        "classes": rows,
    }


def _cplx(z):
    return [round(z.real, 9), round(z.imag, 9)]


@main.command(name="trace-table")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@common_options
@handle_errors
def trace_table_cmd(file, max_field_bits, tolerance, jobs):
    """Exact Artin traces on all conjugacy classes."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    opts = prob.options
    table = artin.trace_table(prob.model, prob.build_group(),
                              jobs=opts["jobs"],
                              max_bits=opts["max_field_bits"],
                              tolerance=opts["tolerance"])
    _emit(_trace_doc(table))


def _decomposition_doc(dec):
    return {"multiplicities": list(dec.multiplicities),
            "dimensions": list(dec.dims),
            "labels": list(dec.labels),
            "residual": dec.residual,
            "conjugation_ambiguous": list(dec.conjugation_ambiguous)}


@main.command(name="decompose")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--character-table", "ct_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="Override the character table referenced by the file.")
@common_options
@handle_errors
def decompose_cmd(file, ct_path, max_field_bits, tolerance, jobs):
    """Irreducible multiplicities of the Artin representation."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    ct = prob.character_table
    if ct_path is not None:
        with open(ct_path) as fh:
            ct = json.load(fh)
    if ct is None:
        raise ValidationError("no character table supplied")
    opts = prob.options
    G = prob.build_group()
    table = artin.trace_table(prob.model, G, jobs=opts["jobs"],
                              max_bits=opts["max_field_bits"],
                              tolerance=opts["tolerance"])
    _emit(_decomposition_doc(artin.decompose(table, ct, G)))


@main.command(name="report")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--character-table", "ct_path",
              type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--fixed-space", "fixed_spaces", multiple=True,
              help="Comma-separated inertia words generating a subgroup; "
                   "may be repeated.")
@common_options
@handle_errors
def report_cmd(file, ct_path, fixed_spaces, max_field_bits, tolerance, jobs):
    """Full pipeline: polynomial, eigenvalue classes, traces,
    decomposition."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    opts = prob.options
    doc = {"problem": validate_problem(prob)}
    P = zeta.local_polynomial(prob.model, jobs=opts["jobs"],
                              max_bits=opts["max_field_bits"],
                              tolerance=opts["tolerance"])
    doc["local_polynomial"] = _poly_doc(P, opts["tolerance"])
    classes = zeta.eigenvalue_classes(P, opts["tolerance"])
    doc["eigenvalue_classes"] = [
        {"order": c.order, "constant": c.constant, "size": c.size}
        for c in classes]
    if prob.generators or prob.phi0:
        G = prob.build_group()
        doc["group_order"] = G.order()
        table = artin.trace_table(prob.model, G, jobs=opts["jobs"],
                                  max_bits=opts["max_field_bits"],
                                  tolerance=opts["tolerance"])
        doc["trace_table"] = _trace_doc(table)
        ct = prob.character_table
        if ct_path is not None:
            with open(ct_path) as fh:
                ct = json.load(fh)
        if ct is not None:
            doc["decomposition"] = _decomposition_doc(
                artin.decompose(table, ct, G))
        if fixed_spaces:
            out = []
            for spec in fixed_spaces:
                words = [w.strip() for w in spec.split(",") if w.strip()]
                out.append({"generators": words,
                            "dimension": artin.fixed_space_dim(
                                table, G, words)})
            doc["fixed_spaces"] = out
    _emit(doc)


@main.command(name="roundtrip")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@common_options
@handle_errors
def roundtrip_cmd(file, max_field_bits, tolerance, jobs):
    """Re-emit a problem file in normalized form."""
    prob = _load(file, max_field_bits, tolerance, jobs)
    _emit(emit_problem(prob))


if __name__ == "__main__":
    main()
