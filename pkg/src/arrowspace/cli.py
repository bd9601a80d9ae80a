"""The ``arrows`` command line tool.

Scene files are line oriented::

    dim 2
    # comments run to end of line
    point O 0 0
    point G 2 0
    point P 1 3

Exit codes: 0 success, 1 usage/parse/scene errors, 2 an undefined geometric
operation (undefined addition, degenerate line, weights not summing to one,
and the other domain errors), 3 ``check`` found at least one failure.
"""

import argparse
import contextlib
import io
import re
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Dict

from . import affine, arrow_ops, harness, line
from .core import Arrow, Point, format_rational, measure_sq, parse_rational, pre_inner
from .errors import (
    ArrowSpaceError,
    DimensionMismatch,
    DuplicateName,
    ParseError,
    UndefinedAddition,
)
from .equivalence import parallel_transport
from .vector_space import representative, to_vector, vec_add, vec_add_at

__all__ = ["Scene", "dispatch", "format_scene", "main", "parse_scene"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_CHECK_FAILED = 3

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


@dataclass
class Scene:
    dim: int
    points: Dict[str, Point]

    def __getitem__(self, name):
        try:
            return self.points[name]
        except KeyError:
            raise _UsageError("unknown point %s" % name) from None


def parse_scene(text):
    lines = text.splitlines()
    header = lines[0].split("#", 1)[0].split() if lines else []
    if len(header) != 2 or header[0] != "dim":
        raise ParseError(1, "expected 'dim <n>' header")
    try:
        dim = int(header[1])
    except ValueError:
        raise ParseError(1, "dimension must be an integer") from None
    if dim < 1 or not header[1].isdigit():
        raise ParseError(1, "dimension must be a positive integer")
    points = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        if fields[0] != "point" or len(fields) < 2:
            raise ParseError(lineno, "expected 'point <NAME> <coords>'")
        name = fields[1]
        if not _NAME_RE.fullmatch(name):
            raise ParseError(lineno, "invalid point name %r" % name)
        if name in points:
            raise DuplicateName("line %d: point %s defined twice" % (lineno, name))
        coords = fields[2:]
        if len(coords) != dim:
            raise DimensionMismatch(
                "line %d: point %s has %d coordinates, scene dimension is %d"
                % (lineno, name, len(coords), dim)
            )
        try:
            points[name] = Point([parse_rational(c) for c in coords])
        except ArrowSpaceError as exc:
            raise ParseError(lineno, str(exc)) from None
    return Scene(dim, points)


def format_scene(scene):
    out = ["dim %d" % scene.dim]
    for name, p in scene.points.items():
        out.append("point %s %s" % (name, " ".join(format_rational(c) for c in p.coords)))
    return "\n".join(out) + "\n"


class _UsageError(Exception):
    pass


class _Undefined(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-[0-9]+(/[0-9]+)?$")

    def error(self, message):
        raise _UsageError(message)


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ArrowSpaceError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser():
    parser = _Parser(prog="arrows", description="Exact arrow-space geometry.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    check = sub.add_parser("check", help="run the randomized axiom and theorem checks")
    check.add_argument("--trials", type=int, default=1000)
    check.add_argument("--dim", type=int, default=2)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--coord-bound", type=int, default=10)
    check.add_argument("--denom-bound", type=int, default=4)
    check.add_argument("--suite", choices=("axioms", "theorems", "all"), default="all")

    def scene_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scene", required=True, metavar="FILE")
        p.add_argument("--approx", type=int, metavar="DIGITS",
                       help="append decimal approximations")
        return p

    p = scene_command("add", "add arrows head to tail")
    p.add_argument("--arrow", nargs=2, action="append", required=True, metavar=("TAIL", "HEAD"))
    p = scene_command("scale", "scalar multiple of an arrow")
    p.add_argument("--arrow", nargs=2, required=True, metavar=("TAIL", "HEAD"))
    p.add_argument("--by", type=_rational_arg, required=True, metavar="T")
    p = scene_command("project", "project a point onto a line")
    p.add_argument("--line", nargs=2, required=True, metavar=("O", "G"))
    p.add_argument("--point", required=True)
    p = scene_command("between", "is the middle point between the other two")
    p.add_argument("--points", nargs=3, required=True, metavar=("A", "B", "C"))
    p = scene_command("classify", "direction relation of two arrows")
    p.add_argument("--arrow", nargs=2, action="append", required=True, metavar=("TAIL", "HEAD"))
    p = scene_command("barycenter", "barycenter of weighted points")
    p.add_argument("--points", nargs="+", required=True)
    p.add_argument("--weights", nargs="+", type=_rational_arg, required=True)
    p.add_argument("--origin")
    p = scene_command("vadd", "add the vectors of two arrows")
    p.add_argument("--arrow", nargs=2, action="append", required=True, metavar=("TAIL", "HEAD"))
    p.add_argument("--at", metavar="P", help="transport point")
    return parser


def _approx(q, digits, root=False):
    with localcontext() as ctx:
        ctx.prec = digits + 30
        value = Decimal(q.numerator) / Decimal(q.denominator)
        if root:
            value = value.sqrt()
        return str(value.quantize(Decimal(1).scaleb(-digits)))


def _scalar(name, q, digits):
    text = "%s = %s" % (name, format_rational(q))
    if digits is not None:
        text += " ~ %s" % _approx(q, digits)
    return text


def _measure(name, q, digits):
    out = [_scalar(name + "_sq", q, digits)]
    if digits is not None:
        out.append("%s ~ %s" % (name, _approx(q, digits, root=True)))
    return out


def _exactly(args, n, what):
    if len(args) != n:
        raise _UsageError("%s needs exactly %d --arrow options" % (what, n))
    return args


def _cmd_check(args):
    cfg = harness.TrialConfig(args.trials, args.dim, args.seed, args.coord_bound, args.denom_bound)
    results = []
    if args.suite in ("axioms", "all"):
        results += harness.run_axiom_suite(cfg).results
    if args.suite in ("theorems", "all"):
        results += harness.run_theorem_suite(cfg).results
    report = harness.Report(cfg, sorted(results, key=lambda r: r.name))
    return (EXIT_OK if report.ok else EXIT_CHECK_FAILED), report.to_text().splitlines()


def _cmd_add(args, scene):
    names = args.arrow
    if len(names) < 2:
        raise _UsageError("add needs at least two --arrow options")
    arrows = [Arrow(scene[t], scene[h]) for t, h in names]
    total = arrows[0]
    for k in range(1, len(arrows)):
        try:
            total = arrow_ops.add_arrows(total, arrows[k])
        except UndefinedAddition:
            raise _Undefined("undefined addition: head %s != tail %s"
                             % (names[k - 1][1], names[k][0])) from None
    return EXIT_OK, [
        "sum = %s%s" % (names[0][0], names[-1][1]),
        "tail = %s" % total.tail,
        "head = %s" % total.head,
    ]


def _cmd_scale(args, scene):
    a = Arrow(scene[args.arrow[0]], scene[args.arrow[1]])
    result = arrow_ops.scalar_mul(args.by, a)
    return EXIT_OK, [
        "tail = %s" % result.tail,
        "head = %s" % result.head,
    ] + _measure("measure", measure_sq(result), args.approx)


def _cmd_project(args, scene):
    o, g = scene[args.line[0]], scene[args.line[1]]
    res = affine.project_point(o, g, scene[args.point])
    return EXIT_OK, [
        _scalar("t", res.parameter, args.approx),
        "W = %s" % res.foot,
    ] + _measure("residual", res.residual_sq, args.approx)


def _cmd_between(args, scene):
    a, b, c = (scene[n] for n in args.points)
    return EXIT_OK, ["between = %s" % ("true" if line.between(a, b, c) else "false")]


def _cmd_classify(args, scene):
    (t1, h1), (t2, h2) = _exactly(args.arrow, 2, "classify")
    a, b = Arrow(scene[t1], scene[h1]), Arrow(scene[t2], scene[h2])
    return EXIT_OK, [
        _scalar("pre_inner", pre_inner(a, b), args.approx),
        "direction = %s" % arrow_ops.direction_relation(a, b).value,
    ]


def _cmd_barycenter(args, scene):
    spec = affine.BarycenterSpec([scene[n] for n in args.points], args.weights)
    origin = scene[args.origin] if args.origin else Point([0] * scene.dim)
    out = ["M = %s" % affine.barycenter(spec, origin)]
    if not spec.is_convex():
        out.append("note: affine (not convex) combination")
    return EXIT_OK, out


def _cmd_vadd(args, scene):
    (t1, h1), (t2, h2) = _exactly(args.arrow, 2, "vadd")
    u = to_vector(Arrow(scene[t1], scene[h1]))
    v = to_vector(Arrow(scene[t2], scene[h2]))
    out = ["u = %s" % u, "v = %s" % v]
    if args.at:
        p = scene[args.at]
        kp = parallel_transport(representative(u), p).head_anchored
        pl = parallel_transport(representative(v), p).tail_anchored
        out += ["K = %s" % kp.tail, "L = %s" % pl.head, "sum = %s" % vec_add_at(u, v, p)]
    else:
        out.append("sum = %s" % vec_add(u, v))
    return EXIT_OK, out


_SCENE_COMMANDS = {
    "add": _cmd_add,
    "scale": _cmd_scale,
    "project": _cmd_project,
    "between": _cmd_between,
    "classify": _cmd_classify,
    "barycenter": _cmd_barycenter,
    "vadd": _cmd_vadd,
}


def dispatch(argv, stderr=None):
    """Run one command. Returns ``(exit_code, stdout_text)``; errors go to ``stderr``."""
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    help_out = io.StringIO()
    try:
        with contextlib.redirect_stdout(help_out):
            args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_USAGE, ""
    except SystemExit as exc:  # --help
        return (EXIT_OK if not exc.code else EXIT_USAGE), help_out.getvalue()

    try:
        if args.command == "check":
            code, lines = _cmd_check(args)
        else:
            try:
                with open(args.scene, encoding="utf-8") as fh:
                    scene = parse_scene(fh.read())
            except OSError as exc:
                raise _UsageError("cannot read scene: %s" % exc) from None
            except ArrowSpaceError as exc:
                raise _UsageError("%s: %s" % (args.scene, exc)) from None
            code, lines = _SCENE_COMMANDS[args.command](args, scene)
    except (_UsageError, DimensionMismatch) as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_USAGE, ""
    except (_Undefined, ArrowSpaceError) as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_UNDEFINED, ""
    except ValueError as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_USAGE, ""
    return code, "\n".join(lines) + "\n" if lines else ""


def main(argv=None):
    code, out = dispatch(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
