"""Command-line front door: enumerate multi-indices, compare families, sort
polynomial terms, and check relation properties on finite carriers.

Exit codes: 0 success / property PASS, 1 property FAIL, 2 usage or parse
error, 3 requested capability unavailable (e.g. an order without a slice
scheme when --allow-sort-fallback is not given).
"""

from __future__ import annotations

import csv
import json
import sys
from functools import cmp_to_key

import click

from . import multi_index, poly, weighted
from .families import VectorRelation, colex, lex, or_eq_rel, revlex, symlex
from .graded import grcolex, grevlex, grlex, grsymlex
from .relations import (
    DIVIDES,
    GE,
    GT,
    LE,
    LT,
    PROPERTY_NAMES,
    Relation,
    carrier_range,
    property_witness,
)

ORDER_BUILDERS = {
    "lex": lex,
    "colex": colex,
    "symlex": symlex,
    "revlex": revlex,
    "grlex": grlex,
    "grcolex": grcolex,
    "grsymlex": grsymlex,
    "grevlex": grevlex,
}

# orders whose enumeration is backed by a slice recursion scheme
SCHEME_FOR_ORDER = {"grlex": "lex", "grcolex": "colex", "grsymlex": "symlex"}

CLI_RELATIONS = {"lt": LT, "le": LE, "gt": GT, "ge": GE, "divides": DIVIDES}


def resolve_order(name: str, mode: str = "strict") -> VectorRelation:
    """Vector relation for an order name; 'weighted:FILE' loads a weight
    matrix fixture.  Nonstrict mode uses the nonstrict scalar order for the
    named combinators and the reflexive closure for weighted orders."""
    if name.startswith("weighted:"):
        path = name.split(":", 1)[1]
        try:
            matrix = weighted.load_matrix(path)
        except (OSError, ValueError) as exc:
            raise click.UsageError(f"cannot load weight matrix {path!r}: {exc}")
        strict = weighted.weighted_relation(matrix, LT)
        return strict if mode == "strict" else or_eq_rel(strict)
    try:
        builder = ORDER_BUILDERS[name]
    except KeyError:
        raise click.UsageError(f"unknown order {name!r}")
    return builder(LT if mode == "strict" else LE)


def _parse_index(text: str):
    try:
        items = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise click.UsageError(f"cannot parse multi-index {text!r}")
    if any(item < 0 for item in items):
        raise click.UsageError(f"multi-index components must be naturals: {text!r}")
    return items


@click.group()
def main():
    """Lexicographic and graded monomial orders on multi-indices."""


@main.command("enumerate")
@click.option("--d", "d", type=int, required=True, help="Dimension (>= 1).")
@click.option("--k", "k", type=int, required=True, help="Maximum component sum (>= 0).")
@click.option("--order", "order_name", default="grsymlex", show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "csv", "jsonl"]),
    default="plain",
    show_default=True,
)
@click.option(
    "--allow-sort-fallback",
    is_flag=True,
    help="Permit generate-then-sort for orders without a slice scheme.",
)
def cmd_enumerate(d, k, order_name, fmt, allow_sort_fallback):
    """List the multi-indices of dimension D with sum <= K, ascending."""
    if d < 1:
        raise click.UsageError(f"--d must be >= 1, got {d}")
    if k < 0:
        raise click.UsageError(f"--k must be >= 0, got {k}")
    scheme = SCHEME_FOR_ORDER.get(order_name)
    if scheme is not None:
        entries = list(multi_index.iter_multi_index_set(d, k, scheme))
    else:
        order = resolve_order(order_name, "strict")
        if not allow_sort_fallback:
            click.echo(
                f"order {order_name!r} has no slice scheme; pass --allow-sort-fallback",
                err=True,
            )
            sys.exit(3)
        click.echo(f"note: generate-then-sort fallback for order {order_name!r}", err=True)

        def compare(a, b):
            if order.apply(a, b):
                return -1
            if order.apply(b, a):
                return 1
            return 0

        entries = sorted(multi_index.iter_multi_index_set(d, k, "lex"), key=cmp_to_key(compare))

    if fmt == "plain":
        for entry in entries:
            click.echo(",".join(str(c) for c in entry))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([f"i{j}" for j in range(d)] + ["sum", "rank"])
        for rank, entry in enumerate(entries):
            writer.writerow(list(entry) + [sum(entry), rank])
    else:
        for rank, entry in enumerate(entries):
            click.echo(json.dumps({"index": list(entry), "sum": sum(entry), "rank": rank}))


@main.command("compare")
@click.option("--order", "order_name", default="grsymlex", show_default=True)
@click.option(
    "--mode",
    type=click.Choice(["strict", "nonstrict"]),
    default="strict",
    show_default=True,
    help="Verdicts are always computed from the strict core of the order.",
)
@click.argument("a")
@click.argument("b")
def cmd_compare(order_name, mode, a, b):
    """Print LT / GT / EQ / INCOMPARABLE for two multi-indices."""
    x = _parse_index(a)
    y = _parse_index(b)
    if len(x) != len(y):
        raise click.UsageError(f"length mismatch: {len(x)} vs {len(y)}")
    strict = resolve_order(order_name, "strict")
    if x == y:
        verdict = "EQ"
    elif strict.apply(x, y):
        verdict = "LT"
    elif strict.apply(y, x):
        verdict = "GT"
    else:
        verdict = "INCOMPARABLE"
    click.echo(verdict)


@main.command("sort-terms")
@click.option("--d", "d", type=int, required=True, help="Number of variables.")
@click.option("--order", "order_name", default="grlex", show_default=True)
@click.option(
    "--mode",
    type=click.Choice(["strict", "nonstrict"]),
    default="strict",
    show_default=True,
    help="Sorting always uses the strict core of the order.",
)
@click.argument("source", type=click.File("r"), default="-")
def cmd_sort_terms(d, order_name, mode, source):
    """Parse a polynomial and print its terms ascending under the order."""
    if d < 1:
        raise click.UsageError(f"--d must be >= 1, got {d}")
    order = resolve_order(order_name, "strict")
    text = source.read()
    try:
        p = poly.parse_poly(text, d)
    except poly.PolyParseError as exc:
        raise click.UsageError(str(exc))
    terms = poly.sort_terms(p, order)
    click.echo(poly.format_poly(terms, d))


@main.command("check")
@click.option("--property", "property_name", required=True)
@click.option("--relation", "relation_name", required=True)
@click.option("--carrier", "carrier_spec", required=True, help="Integer range 'a..b'.")
def cmd_check(property_name, relation_name, carrier_spec):
    """Decide a relation property by brute force over a finite carrier."""
    if property_name not in PROPERTY_NAMES:
        raise click.UsageError(f"unknown property {property_name!r}")
    relation = CLI_RELATIONS.get(relation_name)
    if relation is None:
        raise click.UsageError(f"unknown relation {relation_name!r}")
    try:
        lo_text, hi_text = carrier_spec.split("..")
        carrier = carrier_range(int(lo_text), int(hi_text))
    except ValueError:
        raise click.UsageError(f"cannot parse carrier {carrier_spec!r}; expected 'a..b'")
    failure = property_witness(property_name, relation, carrier)
    if failure is None:
        click.echo(f"PASS {property_name}({relation_name}) on {carrier_spec}")
        return
    conjunct, witness = failure
    click.echo(
        f"FAIL {property_name}({relation_name}) on {carrier_spec}: "
        f"{conjunct} fails at {witness}"
    )
    sys.exit(1)


if __name__ == "__main__":
    main()
