"""Command line: ``ellipsep pave-ellipse`` and ``ellipsep localize``.

Exit codes: 0 success, 1 usage, 2 invalid or degenerate model, 3 I/O.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .errors import EllipseError
from .export import export_json, export_svg
from .interval import Box
from .localization import SONAR_EXAMPLE, ConfigError, LocalizationConfig, localize
from .paver import Paving, pave, paving_areas
from .quadric import QuadraticForm, is_ellipse
from .separators import EllipseSeparator, FwdBwdSeparator

log = logging.getLogger("ellipsep")

EXIT_OK, EXIT_USAGE, EXIT_MODEL, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what}: expected {n} comma-separated numbers")
    if len(vals) != n:
        raise argparse.ArgumentTypeError(f"{what}: expected {n} values, got {len(vals)}")
    return vals


def _q_arg(text: str) -> list[float]:
    return _floats(text, 6, "--q")


def _frame_arg(text: str) -> Box:
    v = _floats(text, 4, "--frame")
    if not (v[0] < v[1] and v[2] < v[3]):
        raise argparse.ArgumentTypeError("--frame: need x1lo < x1hi and x2lo < x2hi")
    return Box([(v[0], v[1]), (v[2], v[3])])


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ellipsep", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--frame", type=_frame_arg, help="x1lo,x1hi,x2lo,x2hi")
        p.add_argument("--eps", type=float, help="width below which boxes stay undetermined")
        p.add_argument("--config", type=Path, help="JSON configuration file")
        p.add_argument("--svg", type=Path, help="write the paving as SVG")
        p.add_argument("--json", type=Path, help="write the paving as JSON")
        p.add_argument("--baseline", choices=["fwdbwd"],
                       help="use the forward-backward separator instead of the minimal one")

    pe = sub.add_parser("pave-ellipse", help="pave {x : f(q, x) <= 0}")
    pe.add_argument("--q", type=_q_arg, help="q0,q1,q2,q3,q4,q5")
    common(pe)
    pl = sub.add_parser("localize", help="sonar localization from path-length intervals")
    common(pl)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # "--q -5,1,..." would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in ("--q", "--frame"):
            v = next(it, None)
            out.append(a if v is None else f"{a}={v}")
        else:
            out.append(a)
    return out


def _read_config(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        text = path.read_text()
    except OSError as e:
        raise OSError(f"cannot read config {path}: {e}") from e
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"config {path} is not valid JSON: {e}") from e
    if not isinstance(d, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    return d


def _report(name: str, p: Paving) -> None:
    inner, outer = paving_areas(p)
    print(f"{name}: {len(p.inside)} inside, {len(p.outside)} outside, "
          f"{len(p.undetermined)} undetermined boxes; "
          f"{p.stats['bisections']} bisections, {p.stats['separator_calls']} separator calls")
    print(f"{name}: area in [{inner:.6f}, {outer:.6f}]")


def _export(p: Paving, args, suffix: str = "", title: str | None = None) -> None:
    def with_suffix(path: Path) -> Path:
        return path.with_name(f"{path.stem}{suffix}{path.suffix}") if suffix else path

    if args.json:
        export_json(p, with_suffix(args.json))
    if args.svg:
        export_svg(p, with_suffix(args.svg), title=title)


def run_pave_ellipse(args) -> int:
    cfg = _read_config(args.config)
    q = args.q if args.q is not None else cfg.get("q")
    if q is None:
        raise UsageError("pave-ellipse needs --q or a config with 'q'")
    try:
        q = QuadraticForm.of([float(v) for v in q])
        frame = args.frame or Box([tuple(c) for c in cfg.get("frame", [[-7, 7], [-7, 7]])])
        eps = args.eps if args.eps is not None else float(cfg.get("eps", 0.05))
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from e
    if not eps > 0:
        raise UsageError("--eps must be positive")
    if not is_ellipse(q):
        raise EllipseError(
            f"q={q.coeffs} is not an ellipse: need q3 > 0 and 4*q3*q5 - q4^2 > 0")
    sep = FwdBwdSeparator(q) if args.baseline == "fwdbwd" else EllipseSeparator(q)
    p = pave(sep, frame, eps)
    _report("ellipse", p)
    _export(p, args, title=sep.label)
    return EXIT_OK


def run_localize(args) -> int:
    cfg = _read_config(args.config) if args.config else json.loads(json.dumps(SONAR_EXAMPLE))
    if args.frame is not None:
        cfg["frame"] = args.frame.as_list()
    if args.eps is not None:
        cfg["eps"] = args.eps
    config = LocalizationConfig.from_dict(cfg)
    combined, per = localize(config, baseline=args.baseline)
    for m, p in per:
        _report(m.name, p)
        _export(p, args, suffix=f".{m.name}", title=f"path {m.name} in [{m.lo}, {m.hi}]")
    _report("combined", combined)
    _export(combined, args, title="all measurements")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    handler = run_pave_ellipse if args.command == "pave-ellipse" else run_localize
    try:
        return handler(args)
    except (UsageError, ConfigError) as e:
        print(f"ellipsep: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EllipseError as e:
        print(f"ellipsep: invalid model: {e}", file=sys.stderr)
        return EXIT_MODEL
    except OSError as e:
        print(f"ellipsep: I/O error: {e}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())
