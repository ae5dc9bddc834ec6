"""Command-line interface.

Exit codes: 0 success, 1 mathematical validation failure, 2 parse or
format error.  All output documents are JSON with exact rational values.
"""

from __future__ import annotations

import json
import sys

import click

from .acceptance import run_all
from .arrangements import (AbstractArrangement, TreeArrangement,
                           arrangement_cherries, arrangement_from_weight,
                           generalized_whitehead_diff,
                           metrize_abstract_arrangement,
                           weight_from_arrangement)
from .cones import adjacent_cones
from .documents import (dump_document, emit_arrangement, emit_subdivision,
                        emit_weight, load_document, parse_arrangement,
                        parse_fan, parse_weight)
from .errors import (CompatibilityError, DressianError, FormatError,
                     MembershipError, ParameterError)
from .relations import cone_signature, is_in_dressian
from .subdivision import is_matroid_cell, regular_subdivision

EXIT_VALIDATION = 1
EXIT_FORMAT = 2


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e


def _load(path, expect):
    obj = load_document(_read(path))
    if not isinstance(obj, expect):
        raise FormatError(
            f"{path}: expected a {expect.__name__} document")
    return obj


def _fail(message, code):
    click.echo(message, err=True)
    sys.exit(code)


def _guard(fn):
    """Run fn, mapping exceptions to the documented exit codes."""
    try:
        fn()
    except (FormatError, ParameterError) as e:
        _fail(f"format error: {e}", EXIT_FORMAT)
    except DressianError as e:
        _fail(f"validation error: {e}", EXIT_VALIDATION)


@click.group()
def main():
    """Exact computations on Dressians, subdivisions, and tree arrangements."""


@main.command()
@click.argument("weight_file")
def check(weight_file):
    """Dressian membership and cone signature of a weight file."""
    def run():
        from .subsets import WeightVector
        w = _load(weight_file, WeightVector)
        ok, bad = is_in_dressian(w)
        if not ok:
            _fail(f"not in Dressian: relation {bad} has a unique minimum",
                  EXIT_VALIDATION)
        click.echo("in Dressian")
        click.echo(f"signature: {cone_signature(w).codes}")
    _guard(run)


@main.command()
@click.argument("weight_file")
@click.option("--certify-matroidal", is_flag=True,
              help="Add per-cell basis-exchange verdicts to the document.")
def subdivide(weight_file, certify_matroidal):
    """Regular subdivision induced by a weight file."""
    def run():
        from .subsets import WeightVector
        w = _load(weight_file, WeightVector)
        sd = regular_subdivision(w)
        doc = emit_subdivision(sd)
        if certify_matroidal:
            doc["matroidal"] = [is_matroid_cell(c) for c in sd]
        click.echo(json.dumps(doc, indent=2))
    _guard(run)


@main.command()
@click.argument("weight_file")
def arrange(weight_file):
    """Metric tree arrangement supported by a weight file."""
    def run():
        from .subsets import WeightVector
        w = _load(weight_file, WeightVector)
        click.echo(dump_document(arrangement_from_weight(w)), nl=False)
    _guard(run)


@main.command()
@click.argument("arrangement_file")
def pi(arrangement_file):
    """Weight vector assembled from a compatible arrangement."""
    def run():
        arr = _load(arrangement_file, TreeArrangement)
        try:
            w = weight_from_arrangement(arr)
        except CompatibilityError as e:
            _fail(f"incompatible arrangement: {e.violation}", EXIT_VALIDATION)
        click.echo(dump_document(w), nl=False)
    _guard(run)


@main.command()
@click.argument("arrangement_file")
def metrize(arrangement_file):
    """Compatible edge lengths for an abstract arrangement's topologies."""
    def run():
        arr = _load(arrangement_file, TreeArrangement)
        abstract = AbstractArrangement(arr.k, arr.n, arr.trees)
        metric = metrize_abstract_arrangement(abstract)
        if metric is None:
            _fail("infeasible", EXIT_VALIDATION)
        click.echo(dump_document(metric), nl=False)
    _guard(run)


@main.command()
@click.argument("weight_file")
def adjacent(weight_file):
    """Cones adjacent to the maximal cone of a weight file."""
    def run():
        from .subsets import WeightVector
        w = _load(weight_file, WeightVector)
        base = arrangement_from_weight(w)
        entries = []
        for fc in adjacent_cones(w):
            entry = {"wall_relations": list(fc.wall_relations),
                     "wall_point": emit_weight(fc.wall_point),
                     "boundary": fc.boundary}
            if not fc.boundary:
                arr = arrangement_from_weight(fc.representative)
                cmp_ = generalized_whitehead_diff(base, arr)
                entry.update({
                    "signature": fc.signature.codes,
                    "representative": emit_weight(fc.representative),
                    "arrangement": emit_arrangement(arr),
                    "classification": cmp_.kind,
                    "differing": [list(J) for J in cmp_.differing],
                    "cherries": sorted(
                        list(K.elements) for K in arrangement_cherries(arr)),
                })
            entries.append(entry)
        click.echo(json.dumps({"type": "adjacency", "source": emit_weight(w),
                               "cones": entries}, indent=2))
    _guard(run)


@main.command()
@click.argument("arr_a")
@click.argument("arr_b")
def compare(arr_a, arr_b):
    """Classify two arrangements: identical / generalized-Whitehead / farther."""
    def run():
        a = _load(arr_a, TreeArrangement)
        b = _load(arr_b, TreeArrangement)
        cmp_ = generalized_whitehead_diff(a, b)
        if cmp_.kind == "identical":
            click.echo("identical")
        elif cmp_.kind == "generalized-whitehead":
            d = ", ".join(str(list(J)) for J in cmp_.differing)
            click.echo(f"generalized-Whitehead (D = [{d}])")
        else:
            click.echo("farther")
    _guard(run)


@main.command("ingest-fan")
@click.argument("fan_file")
def ingest_fan(fan_file):
    """Validate external fan data and annotate each cone."""
    def run():
        from .documents import FanFile
        fan = _load(fan_file, FanFile)
        cones = []
        for idx in range(len(fan.cones)):
            point = fan.interior_point(idx)
            ok, bad = is_in_dressian(point)
            if not ok:
                _fail(f"cone {idx}: interior point fails relation {bad}",
                      EXIT_VALIDATION)
            cones.append({
                "rays": list(fan.cones[idx]),
                "interior_point": emit_weight(point),
                "signature": cone_signature(point).codes,
                "arrangement": emit_arrangement(arrangement_from_weight(point)),
            })
        click.echo(json.dumps({"type": "validated-fan", "k": fan.k,
                               "n": fan.n, "cones": cones}, indent=2))
    _guard(run)


@main.command("verify-fixtures")
def verify_fixtures():
    """Run the full bundled acceptance suite."""
    if not run_all(report=click.echo):
        sys.exit(EXIT_VALIDATION)


if __name__ == "__main__":
    main()
