"""Command-line front end.

Subcommands: ``analyze``, ``segre``, ``moment``, ``tangle``, ``invariants``,
``polytope``, ``embed``. A state is given either as a JSON file path or as a
named fixture via ``--state`` (``bell``, ``ghz<m>``, ``w3``, or a bitstring
such as ``01`` for a computational basis state).

Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
3 domain error (for example a moment map requested for an entangled state).

Text output prints reals with 12 significant digits; ``--format json``
carries full double precision. Moment images use the Fubini-Study
normalization with per-axis range [-1/2, 0]; the height-function convention
with range [-1, 1] is the affine image t -> 4t + 1 of printed values.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .analyzer import AnalysisReport, DEFAULT_TOLERANCE, analyze, extract_factors
from .errors import QToricError, UnknownNameError
from .measures import check_tau4_identities, concurrence, m_tangle, three_tangle
from .moment import BoxPolytope, in_polytope, moment_product, moment_projective
from .states import (
    MultiQubitState,
    QubitFactor,
    make_state,
    named_state,
    parse_complex_pair,
    point_from_dict,
    segre_embed,
    state_from_dict,
    state_to_dict,
)
from .toric import cube, delzant_check, lattice_points, normal_fan_box, segre_relations
from .toric import max_segre_residual, relation_residual

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # The exit-code contract reserves 1 for usage errors (argparse default
    # would be 2, which is taken by input validation).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return f"{value + 0.0:.12g}"


def _fmt_complex(value: complex) -> str:
    if value.imag == 0.0:
        return _fmt(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{_fmt(value.real)}{sign}{_fmt(abs(value.imag))}i"


def _fmt_vector(values) -> str:
    return "(" + ", ".join(_fmt(float(v)) for v in values) + ")"


def _measure_text(value) -> str:
    if isinstance(value, complex):
        return _fmt_complex(value)
    return _fmt(float(value))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from exc


def _state_from_file(path: str) -> MultiQubitState:
    try:
        return state_from_dict(_load_json(path))
    except QToricError as exc:
        raise _InputError(str(exc)) from exc


def _fixture_state(name: str) -> MultiQubitState:
    if name and set(name) <= {"0", "1"}:
        index = int(name, 2)
        amplitudes = [0.0] * (1 << len(name))
        amplitudes[index] = 1.0
        return make_state(len(name), amplitudes)
    try:
        return named_state(name)
    except UnknownNameError as exc:
        raise _InputError(str(exc)) from exc


def _resolve_state(args) -> MultiQubitState:
    path = getattr(args, "path", None)
    name = getattr(args, "state", None)
    if path and name:
        raise _UsageError("give either a state file or --state, not both")
    if name:
        return _fixture_state(name)
    if path:
        return _state_from_file(path)
    raise _UsageError("a state is required: pass a JSON file or --state <name>")


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _report_text(report: AnalysisReport) -> str:
    lines = [
        f"qubits: {report.num_qubits}",
        f"separable: {str(report.separable).lower()}",
        f"max residual: {_fmt(report.max_residual)}",
        f"tolerance: {_fmt(report.tolerance)}",
    ]
    if report.borderline:
        lines.append("note: residual within 10x of tolerance (borderline)")
    if report.factors is not None:
        lines.append("factors (most significant qubit first):")
        for position, factor in enumerate(report.factors, start=1):
            lines.append(
                f"  factor {position}: [{_fmt_complex(factor.a0)}, {_fmt_complex(factor.a1)}]"
            )
    if report.moment_image is not None:
        lines.append(f"moment image: {_fmt_vector(report.moment_image)}")
    if report.measures:
        lines.append("measures:")
        for name, value in report.measures.items():
            lines.append(f"  {name} = {_measure_text(value)}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    target = getattr(args, "path", None)
    if target and Path(target).is_dir():
        files = sorted(Path(target).glob("*.json"))
        if not files:
            raise _InputError(f"no .json state files in {target}")
        states = [_state_from_file(str(f)) for f in files]
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            reports = list(pool.map(lambda s: analyze(s, args.tol), states))
        if args.format == "json":
            _emit_json(
                args,
                [{"path": f.name, **r.to_dict()} for f, r in zip(files, reports)],
            )
        else:
            blocks = [f"== {f.name}\n{_report_text(r)}" for f, r in zip(files, reports)]
            _emit(args, "\n\n".join(blocks))
        return 0
    state = _resolve_state(args)
    if state.num_qubits < 2:
        raise _InputError("analyze needs a state of at least 2 qubits")
    report = analyze(state, args.tol)
    if args.format == "json":
        _emit_json(args, report.to_dict())
    else:
        _emit(args, _report_text(report))
    return 0


# ---------------------------------------------------------------------------
# segre
# ---------------------------------------------------------------------------


def _cmd_segre(args) -> int:
    if args.list:
        if args.m is None:
            raise _UsageError("segre --list requires -m")
        if args.m < 2:
            raise _UsageError("segre needs m >= 2")
        relations = segre_relations(args.m)
        if args.format == "json":
            _emit_json(args, {"m": args.m, "relations": [_relation_dict(r) for r in relations]})
        else:
            _emit(args, "\n".join(str(r) for r in relations))
        return 0
    state = _resolve_state(args)
    if state.num_qubits < 2:
        raise _InputError("segre residuals need a state of at least 2 qubits")
    relations = segre_relations(state.num_qubits)
    residuals = [relation_residual(state, r) for r in relations]
    largest = max_segre_residual(state)
    if args.format == "json":
        payload = {
            "m": state.num_qubits,
            "relations": [
                {**_relation_dict(r), "residual": res}
                for r, res in zip(relations, residuals)
            ],
            "max_residual": largest,
        }
        _emit_json(args, payload)
    else:
        lines = [
            f"{r}   residual = {_fmt(res)}" for r, res in zip(relations, residuals)
        ]
        lines.append(f"max residual = {_fmt(largest)}")
        _emit(args, "\n".join(lines))
    return 0


def _relation_dict(relation) -> dict:
    return {
        "lhs": [relation.bitstring(i) for i in relation.lhs],
        "rhs": [relation.bitstring(i) for i in relation.rhs],
        "swap_axis": relation.swap_axis,
        "text": str(relation),
    }


# ---------------------------------------------------------------------------
# moment
# ---------------------------------------------------------------------------


def _cmd_moment(args) -> int:
    if args.projective:
        path = getattr(args, "path", None)
        if not path:
            raise _UsageError("--projective requires a point JSON file")
        try:
            point = point_from_dict(_load_json(path))
        except QToricError as exc:
            raise _InputError(str(exc)) from exc
        image = moment_projective(point)
    else:
        state = _resolve_state(args)
        factors = extract_factors(state, args.tol)
        if factors is None:
            raise _DomainError("state is not a product; moment map undefined")
        image = moment_product(factors)
    box = BoxPolytope.moment_box(len(image))
    inside = in_polytope(image, box, args.tol)
    if args.format == "json":
        _emit_json(
            args,
            {
                "moment_image": [float(t) for t in image],
                "inside": inside,
                "box": [[-0.5, 0.0]] * len(image),
            },
        )
    else:
        _emit(
            args,
            f"moment image: {_fmt_vector(image)}\n"
            f"inside [-1/2, 0]^{len(image)}: {str(inside).lower()}",
        )
    return 0


# ---------------------------------------------------------------------------
# tangle / invariants
# ---------------------------------------------------------------------------


def _cmd_tangle(args) -> int:
    state = _resolve_state(args)
    m = state.num_qubits
    measures: dict[str, float] = {}
    if m == 2:
        measures["concurrence"] = concurrence(state)
        measures["m_tangle"] = m_tangle(state)
    elif m == 3:
        measures["three_tangle"] = three_tangle(state)
    elif m % 2 == 0:
        measures["m_tangle"] = m_tangle(state)
    else:
        raise _DomainError(f"no tangle defined for a {m}-qubit state")
    if args.format == "json":
        _emit_json(args, {"qubits": m, "measures": measures})
    else:
        _emit(args, "\n".join(f"{k} = {_fmt(v)}" for k, v in measures.items()))
    return 0


def _cmd_invariants(args) -> int:
    state = _resolve_state(args)
    if state.num_qubits != 4:
        raise _InputError(f"invariants needs a 4-qubit state, got {state.num_qubits} qubits")
    report = check_tau4_identities(state)
    if args.format == "json":
        _emit_json(args, report.to_dict())
        return 0
    lines = [
        f"H = {_fmt_complex(report.h)}",
        f"I1 = {_fmt_complex(report.i1)}",
        f"tau4_spinflip = {_fmt(report.tau4_spinflip)}",
        f"tau4_epsilon = {_fmt(report.tau4_epsilon)}",
        f"|H|^2 = {_fmt(report.abs_h_sq)}",
        f"4|H|^2 = {_fmt(report.four_abs_h_sq)}",
        f"4|I1|^2 = {_fmt(report.four_abs_i1_sq)}",
        "ratios:",
    ]
    lines += [f"  {name} = {_fmt(value)}" for name, value in report.ratios.items()]
    lines.append(f"note: {report.note}")
    _emit(args, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# polytope
# ---------------------------------------------------------------------------


def _cmd_polytope(args) -> int:
    if args.m is None:
        raise _UsageError("polytope requires -m")
    if args.m < 1:
        raise _UsageError("polytope needs m >= 1")
    polytope = cube(args.m, args.variant)
    payload: dict = {
        "shape": "cube",
        "m": args.m,
        "variant": args.variant,
        "vertices": polytope.vertices.tolist(),
    }
    lines = [f"cube(m={args.m}, {args.variant}): {polytope.num_vertices} vertices"]
    lines += [f"  {tuple(int(c) for c in v)}" for v in polytope.vertices]
    if args.delzant:
        verdict = delzant_check(polytope)
        payload["delzant"] = verdict.is_delzant
        payload["failures"] = [
            {"vertex": list(f.vertex), "reason": f.reason, "determinant": f.determinant}
            for f in verdict.failures
        ]
        lines.append(f"delzant: {str(verdict.is_delzant).lower()}")
        for failure in verdict.failures:
            lines.append(f"  vertex {failure.vertex}: {failure.reason}")
    if args.lattice_points:
        points = lattice_points(polytope)
        payload["lattice_point_count"] = points.k
        payload["lattice_points"] = points.points.tolist()
        lines.append(f"lattice points: {points.k}")
        lines += [f"  {tuple(int(c) for c in p)}" for p in points.points]
    if args.fan:
        fan = normal_fan_box(polytope)
        payload["cone_count"] = fan.cone_count
        payload["maximal_cone_count"] = len(fan.maximal_cones())
        lines.append(
            f"normal fan: {fan.cone_count} cones ({len(fan.maximal_cones())} maximal)"
        )
    if args.format == "json":
        _emit_json(args, payload)
    else:
        _emit(args, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# embed
# ---------------------------------------------------------------------------


def _factors_from_file(path: str) -> list[QubitFactor]:
    data = _load_json(path)
    if not isinstance(data, dict) or "factors" not in data:
        raise _InputError('factor JSON must be an object with a "factors" field')
    raw = data["factors"]
    if not isinstance(raw, list) or not raw:
        raise _InputError('"factors" must be a nonempty array')
    factors = []
    try:
        for i, entry in enumerate(raw):
            if not isinstance(entry, list) or len(entry) != 2:
                raise _InputError(f'"factors[{i}]" must be an [a0, a1] pair')
            a0 = parse_complex_pair(entry[0], f"factors[{i}][0]")
            a1 = parse_complex_pair(entry[1], f"factors[{i}][1]")
            factors.append(QubitFactor(a0, a1))
    except QToricError as exc:
        raise _InputError(str(exc)) from exc
    return factors


def _cmd_embed(args) -> int:
    factors = _factors_from_file(args.factors)
    state = segre_embed(factors)
    _emit_json(args, state_to_dict(state))
    return 0


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--tol", type=float, default=DEFAULT_TOLERANCE, help="numeric tolerance"
    )
    common.add_argument(
        "--state", metavar="NAME", help="named fixture: bell, ghz<m>, w3, or a bitstring"
    )
    common.add_argument("-o", "--output", metavar="PATH", help="write output to a file")

    parser = _Parser(prog="qtoric", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qtoric {__version__}")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    analyze_p = commands.add_parser(
        "analyze", parents=[common], help="separability report for a state (or a directory)"
    )
    analyze_p.add_argument("path", nargs="?", help="state JSON file or directory")
    analyze_p.add_argument("--jobs", type=int, default=1, help="workers for directory input")
    analyze_p.set_defaults(run=_cmd_analyze)

    segre_p = commands.add_parser(
        "segre", parents=[common], help="binomial relations and residuals"
    )
    segre_p.add_argument("path", nargs="?", help="state JSON file")
    segre_p.add_argument("-m", type=int, help="qubit count for --list")
    segre_p.add_argument("--list", action="store_true", help="print the canonical relations")
    segre_p.set_defaults(run=_cmd_segre)

    moment_p = commands.add_parser(
        "moment", parents=[common], help="moment-map image of a product state or point"
    )
    moment_p.add_argument("path", nargs="?", help="state (or point) JSON file")
    moment_p.add_argument(
        "--projective", action="store_true", help="treat the file as a projective point"
    )
    moment_p.set_defaults(run=_cmd_moment)

    tangle_p = commands.add_parser(
        "tangle", parents=[common], help="applicable tangle measures"
    )
    tangle_p.add_argument("path", nargs="?", help="state JSON file")
    tangle_p.set_defaults(run=_cmd_tangle)

    invariants_p = commands.add_parser(
        "invariants", parents=[common], help="four-qubit invariant table"
    )
    invariants_p.add_argument("path", nargs="?", help="state JSON file")
    invariants_p.set_defaults(run=_cmd_invariants)

    polytope_p = commands.add_parser(
        "polytope", parents=[common], help="cube vertices, Delzant verdict, points, fan"
    )
    polytope_p.add_argument("shape", choices=("cube",), help="polytope family")
    polytope_p.add_argument("-m", type=int, help="dimension")
    polytope_p.add_argument(
        "--variant", choices=("centered", "unit"), default="centered", help="cube variant"
    )
    polytope_p.add_argument("--delzant", action="store_true", help="run the Delzant check")
    polytope_p.add_argument(
        "--lattice-points", action="store_true", help="enumerate integral points"
    )
    polytope_p.add_argument("--fan", action="store_true", help="normal fan cone count")
    polytope_p.set_defaults(run=_cmd_polytope)

    embed_p = commands.add_parser(
        "embed", parents=[common], help="embed single-qubit factors into a state file"
    )
    embed_p.add_argument("factors", help="factor JSON file")
    embed_p.set_defaults(run=_cmd_embed)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    if getattr(args, "tol", 1.0) <= 0:
        print("qtoric: error: --tol must be positive", file=sys.stderr)
        return 1
    try:
        return args.run(args)
    except _UsageError as exc:
        print(f"qtoric: error: {exc}", file=sys.stderr)
        return 1
    except _InputError as exc:
        print(f"qtoric: error: {exc}", file=sys.stderr)
        return 2
    except QToricError as exc:
        # Library-level validation surfacing through a command contract.
        print(f"qtoric: error: {exc}", file=sys.stderr)
        return 2
    except _DomainError as exc:
        print(f"qtoric: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
