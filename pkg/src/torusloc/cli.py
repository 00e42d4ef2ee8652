"""Command-line front end.

Subcommands:
    integrate   localize a class expression over a problem
    euler       Euler characteristic (expression fixed to the Euler class)
    check       vanishing / polynomiality certification

Problems come from built-in generators (--space sphere | cpn:<n> |
product:<spec>,<spec>) or from a JSON file (--file).  Results print as
canonical polynomial text, or as a JSON result document with --json.
All results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 expression parse error, 2 invalid problem data or
direction, 3 localization sum is not a polynomial (or vanishing fails),
4 degree mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .action import (
    FixedPoint,
    LocalizationProblem,
    NonGenericDirection,
    ValidationError,
    Weight,
    circle_reduce,
    validate,
)
from .classexpr import (
    EulerClass,
    InhomogeneousExpression,
    ParseError,
    degree,
    parse,
    render,
)
from .exact import NotPolynomialError
from .localize import DegreeMismatch, localize
from .spaces import projective_space, product, sphere_rotation

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_NOT_POLYNOMIAL = 3
EXIT_DEGREE = 4

DOCUMENT_FORMAT = 1


class DocumentError(Exception):
    """Problem file or space identifier is malformed."""


# ---------------------------------------------------------------------------
# problem sources

def parse_space(identifier):
    """Build a problem from a space identifier.

    Grammar: spec := 'sphere' | 'cpn:' <n> | 'product:' spec ',' spec
    (nested products associate greedily to the left argument).
    """
    problem, pos = _parse_space_at(identifier, 0)
    if pos != len(identifier):
        raise DocumentError(
            f"unexpected {identifier[pos:]!r} after space identifier"
        )
    return problem


def _parse_space_at(text, pos):
    if text.startswith("sphere", pos):
        return sphere_rotation(), pos + len("sphere")
    if text.startswith("cpn:", pos):
        pos += len("cpn:")
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise DocumentError("cpn: needs a positive integer, e.g. cpn:2")
        n = int(text[start:pos])
        if n < 1:
            raise DocumentError(f"cpn:{n} is not defined; need n >= 1")
        return projective_space(n), pos
    if text.startswith("product:", pos):
        pos += len("product:")
        left, pos = _parse_space_at(text, pos)
        if pos >= len(text) or text[pos] != ",":
            raise DocumentError("product: needs two comma-separated space identifiers")
        right, pos = _parse_space_at(text, pos + 1)
        return product(left, right), pos
    raise DocumentError(
        f"unknown space {text[pos:]!r}: expected sphere, cpn:<n>, or "
        f"product:<spec>,<spec>"
    )


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def document_to_problem(doc):
    """Decode a problem document (strict: integers, strings, arrays only)."""
    if not isinstance(doc, dict):
        raise DocumentError("problem document must be a JSON object")
    if doc.get("format", DOCUMENT_FORMAT) != DOCUMENT_FORMAT:
        raise DocumentError(f"unsupported format {doc.get('format')!r}")
    for key in ("torus_rank", "half_dim"):
        if not _is_int(doc.get(key)):
            raise DocumentError(f"{key} must be an integer")
    if not isinstance(doc.get("fixed_points"), list):
        raise DocumentError("fixed_points must be an array")
    points = []
    for entry in doc["fixed_points"]:
        if not isinstance(entry, dict):
            raise DocumentError("each fixed point must be a JSON object")
        name = entry.get("name")
        if not isinstance(name, str):
            raise DocumentError("fixed point name must be a string")
        weights = entry.get("weights")
        if not isinstance(weights, list):
            raise DocumentError(f"weights of point {name!r} must be an array")
        vectors = []
        for vector in weights:
            if not isinstance(vector, list) or not all(_is_int(c) for c in vector):
                raise DocumentError(
                    f"each weight of point {name!r} must be an array of integers"
                )
            vectors.append(Weight(tuple(vector)))
        sign = entry.get("sign", 1)
        if not _is_int(sign):
            raise DocumentError(f"sign of point {name!r} must be an integer")
        points.append(FixedPoint(name, tuple(vectors), sign))
    return LocalizationProblem(doc["torus_rank"], doc["half_dim"], tuple(points))


def problem_to_document(problem):
    return {
        "format": DOCUMENT_FORMAT,
        "torus_rank": problem.rank,
        "half_dim": problem.half_dim,
        "fixed_points": [
            {
                "name": point.label,
                "weights": [list(w.components) for w in point.weights],
                "sign": point.sign,
            }
            for point in problem.points
        ],
    }


def load_problem_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from None
    return document_to_problem(doc)


# ---------------------------------------------------------------------------
# result documents

def _per_point_entries(per_point_terms):
    return [
        {
            "name": label,
            "numerator": str(term.numerator),
            "denominator": [
                {"form": str(form), "power": power}
                for form, power in term.sorted_denominator()
            ],
        }
        for label, term in per_point_terms
    ]


def result_document(result, include_per_point, expr_text=None):
    doc = {
        "format": DOCUMENT_FORMAT,
        "status": "polynomial",
        "value": str(result.value),
        "value_terms": [
            {
                "exponents": list(exponents),
                "numerator": coefficient.numerator,
                "denominator": coefficient.denominator,
            }
            for exponents, coefficient in result.value.sorted_terms()
        ],
    }
    if expr_text is not None:
        doc["expr"] = expr_text
    if include_per_point:
        doc["per_point"] = _per_point_entries(result.per_point_terms)
    return doc


def not_polynomial_document(error):
    residual = error.fraction
    return {
        "format": DOCUMENT_FORMAT,
        "status": "not_polynomial",
        "value": None,
        "value_terms": [],
        "residual": {
            "numerator": str(residual.numerator),
            "denominator": [
                {"form": str(form), "power": power}
                for form, power in residual.sorted_denominator()
            ],
        },
        "per_point": _per_point_entries(error.per_point or ()),
    }


def _emit(doc):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _print_terms(per_point_terms):
    for label, term in per_point_terms:
        sys.stdout.write(f"{label}: {term}\n")


def _fail(args, code, message):
    sys.stderr.write(f"error: {message}\n")
    if getattr(args, "as_json", False):
        _emit({"format": DOCUMENT_FORMAT, "status": "error", "error": message})
    return code


# ---------------------------------------------------------------------------
# subcommands

def _cmd_integrate(args, problem):
    expr = parse(args.expr)
    class_degree = degree(expr, problem.half_dim)
    if args.top and class_degree != problem.dimension:
        raise DegreeMismatch(class_degree, problem.dimension)
    result = localize(problem, expr)
    if args.as_json:
        _emit(result_document(result, args.terms, render(expr)))
    elif args.top:
        sys.stdout.write(f"{result.value.constant_coefficient()}\n")
        if args.terms:
            _print_terms(result.per_point_terms)
    else:
        sys.stdout.write(f"{result.value}\n")
        if args.terms:
            _print_terms(result.per_point_terms)
    return EXIT_OK


def _cmd_euler(args, problem):
    result = localize(problem, EulerClass())
    chi = result.value.constant_coefficient()
    count = len(problem.points)
    if chi != count:
        raise RuntimeError(
            f"Euler characteristic {chi} does not match fixed point count {count}"
        )
    sys.stderr.write(f"fixed points: {count} (matches the localized integral)\n")
    if args.as_json:
        _emit(result_document(result, args.terms, "e"))
    else:
        sys.stdout.write(f"{chi}\n")
        if args.terms:
            _print_terms(result.per_point_terms)
    return EXIT_OK


def _cmd_check(args, problem):
    expr = parse(args.expr)
    class_degree = degree(expr, problem.half_dim)
    result = localize(problem, expr)
    if class_degree < problem.dimension and not result.value.is_zero:
        sys.stderr.write(
            f"error: degree {class_degree} < dimension {problem.dimension} "
            f"but the sum is nonzero\n"
        )
        if args.as_json:
            _emit(result_document(result, True, render(expr)))
        else:
            sys.stdout.write(f"counterexample: {result.value}\n")
            _print_terms(result.per_point_terms)
        return EXIT_NOT_POLYNOMIAL
    if args.as_json:
        _emit(result_document(result, args.terms, render(expr)))
    else:
        if class_degree < problem.dimension:
            sys.stdout.write(
                f"ok: degree {class_degree} < dimension {problem.dimension}, sum is 0\n"
            )
        else:
            sys.stdout.write(f"ok: polynomial, value = {result.value}\n")
        if args.terms:
            _print_terms(result.per_point_terms)
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="torusloc",
        description=(
            "Exact fixed-point localization: evaluate equivariant integrals as "
            "sums over torus fixed points, certify cancellation, and extract "
            "characteristic numbers."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--space",
        metavar="ID",
        help="built-in space: sphere | cpn:<n> | product:<spec>,<spec>",
    )
    source.add_argument("--file", metavar="PATH", help="problem JSON file")
    common.add_argument(
        "--xi",
        metavar="A,B,...",
        help="integer direction; restrict to this circle subgroup first",
    )
    common.add_argument(
        "--terms", action="store_true", help="include the per-point term table"
    )
    common.add_argument(
        "--json",
        action="store_true",
        dest="as_json",
        help="emit a JSON result document instead of plain text",
    )

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser(
        "integrate", parents=[common], help="localize a class expression"
    )
    p.add_argument("--expr", required=True, help="class expression, e.g. 'c1^2 + 3*c2'")
    p.add_argument(
        "--top",
        action="store_true",
        help="require top degree and print the scalar integral",
    )
    p.set_defaults(run=_cmd_integrate)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic")
    p.set_defaults(run=_cmd_euler)

    p = sub.add_parser(
        "check", parents=[common], help="vanishing / polynomiality certification"
    )
    p.add_argument("--expr", required=True, help="class expression to certify")
    p.set_defaults(run=_cmd_check)
    return parser


def _parse_direction(text):
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise DocumentError(f"--xi must be comma-separated integers, got {text!r}") from None


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.space is not None:
            problem = parse_space(args.space)
        else:
            problem = load_problem_file(args.file)
        validate(problem)
        if args.xi is not None:
            problem = circle_reduce(problem, _parse_direction(args.xi))
        return args.run(args, problem)
    except ParseError as exc:
        return _fail(args, EXIT_PARSE, f"expression parse error {exc}")
    except (DocumentError, ValidationError, NonGenericDirection, ValueError) as exc:
        return _fail(args, EXIT_INVALID, str(exc))
    except NotPolynomialError as exc:
        sys.stderr.write(
            "error: localization sum is not a polynomial; "
            "fixed-point data is inconsistent\n"
        )
        if args.as_json:
            _emit(not_polynomial_document(exc))
        else:
            sys.stdout.write(f"residual: {exc.fraction}\n")
            _print_terms(exc.per_point or ())
        return EXIT_NOT_POLYNOMIAL
    except (DegreeMismatch, InhomogeneousExpression) as exc:
        return _fail(args, EXIT_DEGREE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
