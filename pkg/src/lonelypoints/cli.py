"""Command-line front end.

Lattices and closed forms are read from JSON files; every subcommand writes
a single JSON document to standard output.  Rational numbers are serialized
as strings ("p/q" or an integer string) so that values survive round trips
exactly.  Exit codes: 0 success, 1 malformed input, 2 resource limit
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cfinite import ClosedForm, exponent_lattice, normalize, reduce_order
from .counting import (
    LonelyCount,
    ResourceLimitError,
    dimension_bound_guarantee,
    enumerate_lonely_simplex,
    has_infinitely_many_lonely_points,
    number_of_lonely_points,
    ultimate_number_of_lonely_points,
)
from .geometry import Cone, Lattice, corner_cone

DEFAULT_MAX_BOX = 2_000_000


class InputError(ValueError):
    """Malformed command line or input file."""


@dataclass(frozen=True)
class LatticeSpec:
    ambient_dimension: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ClosedFormSpec:
    """Terms as (base, coefficients) with exact rationals; coefficients are
    listed constant term first."""

    terms: tuple[tuple[Fraction, tuple[Fraction, ...]], ...]


def _rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def parse_lattice_spec(data) -> LatticeSpec:
    if not isinstance(data, dict):
        raise InputError("lattice file must hold a JSON object")
    try:
        dim = data["ambient_dimension"]
        gens = data["generators"]
    except KeyError as exc:
        raise InputError(f"lattice file is missing key {exc}") from exc
    if not isinstance(dim, int) or dim < 0:
        raise InputError("ambient_dimension must be a nonnegative integer")
    if not isinstance(gens, list):
        raise InputError("generators must be a list of integer vectors")
    rows = []
    for g in gens:
        if not isinstance(g, list) or len(g) != dim or not all(
            isinstance(x, int) for x in g
        ):
            raise InputError(
                f"generator {g!r} is not an integer vector of length {dim}"
            )
        rows.append(tuple(g))
    return LatticeSpec(dim, tuple(rows))


def serialize_lattice_spec(spec: LatticeSpec) -> dict:
    return {
        "ambient_dimension": spec.ambient_dimension,
        "generators": [list(g) for g in spec.generators],
    }


def parse_closed_form_spec(data) -> ClosedFormSpec:
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise InputError("closed form file must hold {\"terms\": [...]}")
    terms = []
    for entry in data["terms"]:
        if not isinstance(entry, dict) or "base" not in entry or "poly" not in entry:
            raise InputError(f"term {entry!r} needs 'base' and 'poly'")
        base = _rational(entry["base"])
        if base == 0:
            raise InputError("bases must be nonzero")
        if not isinstance(entry["poly"], list):
            raise InputError("poly must be a list of rational strings")
        poly = tuple(_rational(c) for c in entry["poly"])
        terms.append((base, poly))
    return ClosedFormSpec(tuple(terms))


def serialize_closed_form_spec(spec: ClosedFormSpec) -> dict:
    return {
        "terms": [
            {"base": str(base), "poly": [str(c) for c in poly]}
            for base, poly in spec.terms
        ]
    }


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_lattice(path) -> Lattice:
    spec = parse_lattice_spec(_load_json(path))
    return Lattice(spec.ambient_dimension, spec.generators)


def load_closed_form(path) -> ClosedForm:
    spec = parse_closed_form_spec(_load_json(path))
    return normalize(ClosedForm.of([(poly, base) for base, poly in spec.terms]))


def _corner(lat: Lattice, index: int) -> Cone:
    if not 0 <= index <= lat.ambient_dim:
        raise InputError(
            f"corner must be in 0..{lat.ambient_dim}, got {index}"
        )
    return corner_cone(lat.ambient_dim, index)


def _count_doc(count: LonelyCount) -> dict:
    return {"count": "infinity" if count.is_infinite else count.value}


def _emit(doc) -> int:
    print(json.dumps(doc))
    return 0


def _cmd_infinite(args) -> int:
    lat = load_lattice(args.lattice)
    cone = _corner(lat, args.corner)
    return _emit({"infinite": has_infinitely_many_lonely_points(lat, cone)})


def _cmd_count(args) -> int:
    lat = load_lattice(args.lattice)
    cone = _corner(lat, args.corner)
    return _emit(_count_doc(number_of_lonely_points(lat, cone)))


def _cmd_ultimate(args) -> int:
    lat = load_lattice(args.lattice)
    return _emit(_count_doc(ultimate_number_of_lonely_points(lat)))


def _cmd_enumerate(args) -> int:
    lat = load_lattice(args.lattice)
    if args.dilation < 0:
        raise InputError("dilation must be nonnegative")
    points = enumerate_lonely_simplex(lat, args.dilation, max_points=args.max_box)
    return _emit([list(p) for p in points])


def _cmd_exponent_lattice(args) -> int:
    bases = []
    for part in args.bases.split(","):
        base = _rational(part.strip())
        if base == 0:
            raise InputError("bases must be nonzero")
        bases.append(base)
    if not bases:
        raise InputError("at least one base is required")
    lat = exponent_lattice(bases)
    spec = LatticeSpec(lat.ambient_dim, lat.basis)
    return _emit(serialize_lattice_spec(spec))


def _cmd_reduce(args) -> int:
    cf = load_closed_form(args.closedform)
    if args.degree < 1:
        raise InputError("degree must be at least 1")
    result = reduce_order(cf, args.degree)
    if result is None:
        return _emit({"q": None})
    return _emit({"q": [str(c) for c in result.q], "order": result.order})


def _cmd_bound_check(args) -> int:
    lat = load_lattice(args.lattice)
    return _emit({"guarantee": dimension_bound_guarantee(lat).value})


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lonelypoints",
        description=(
            "Count and enumerate lonely points of dilated standard simplices "
            "relative to an integer lattice, and reduce the recurrence order "
            "of closed-form sequences with rational bases."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def lattice_cmd(name, help_text, func, corner=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--lattice", required=True, help="lattice JSON file")
        if corner:
            cmd.add_argument(
                "--corner", type=int, required=True, help="corner cone index"
            )
        cmd.set_defaults(func=func)
        return cmd

    lattice_cmd(
        "infinite",
        "decide whether a corner cone has infinitely many lonely points",
        _cmd_infinite,
        corner=True,
    )
    lattice_cmd(
        "count",
        "count the lonely points of a corner cone",
        _cmd_count,
        corner=True,
    )
    lattice_cmd(
        "ultimate",
        "eventual number of lonely points of the dilated simplex",
        _cmd_ultimate,
    )
    enum_cmd = lattice_cmd(
        "enumerate",
        "list the lonely points of one dilated simplex",
        _cmd_enumerate,
    )
    enum_cmd.add_argument("--dilation", type=int, required=True)
    enum_cmd.add_argument(
        "--max-box",
        type=int,
        default=DEFAULT_MAX_BOX,
        help="largest number of simplex points to enumerate",
    )

    exp_cmd = sub.add_parser(
        "exponent-lattice",
        help="multiplicative relation lattice of rational bases",
    )
    exp_cmd.add_argument(
        "--bases", required=True, help="comma-separated rationals, e.g. 2,1/2"
    )
    exp_cmd.set_defaults(func=_cmd_exponent_lattice)

    red_cmd = sub.add_parser(
        "reduce", help="search for an order-reducing polynomial"
    )
    red_cmd.add_argument("--closedform", required=True, help="closed form JSON file")
    red_cmd.add_argument("--degree", type=int, required=True)
    red_cmd.set_defaults(func=_cmd_reduce)

    lattice_cmd(
        "bound-check",
        "which lattice-dimension guarantee applies",
        _cmd_bound_check,
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
