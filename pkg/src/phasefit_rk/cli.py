"""``phasefit-bench``: efficiency sweeps from the command line.

Exit status is 0 on success, 1 for an invalid configuration and 2 when the
output cannot be written.
"""

import argparse
import json
import sys

from .bench import METHODS, SweepConfig, emit, estimate_order, run_sweep, sweep_metadata
from .coefficients import DEFAULT_SERIES_SWITCH
from .errors import ConfigInvalid, InsufficientData, IoFailure


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigInvalid(message)


def _flatten(tokens, convert=str):
    """``["1000,2000", "4000"]`` -> ``(1000, 2000, 4000)``."""
    out = []
    for tok in tokens or ():
        for part in tok.replace(",", " ").split():
            try:
                out.append(convert(part))
            except ValueError:
                raise ConfigInvalid(f"not an integer: {part!r}") from None
    return tuple(out)


def build_parser():
    parser = _Parser(prog="phasefit-bench", description=__doc__.splitlines()[0])
    parser.add_argument("--series-switch", type=float, default=DEFAULT_SERIES_SWITCH,
                        help="v below which Taylor series replace the closed-form weights")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    parser.add_argument("--quiet", "-q", action="store_true", help="no order summary on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    res = sub.add_parser("resonance", help="Woods-Saxon phase-shift benchmark")
    res.add_argument("--energy", type=float, required=True)
    res.add_argument("--steps", nargs="+", default=(), help="step counts, e.g. 1000,2000,4000")
    res.add_argument("--methods", nargs="+", default=METHODS, help=f"subset of {','.join(METHODS)}")

    nl = sub.add_parser("nonlinear", help="y'' = -100 y + sin(y) endpoint benchmark")
    nl.add_argument("--steps", nargs="+", default=(), help="step counts, e.g. 1000,2000,4000")
    nl.add_argument("--methods", nargs="+", default=METHODS, help=f"subset of {','.join(METHODS)}")

    sw = sub.add_parser("sweep", help="run a sweep described by a JSON config file")
    sw.add_argument("--config", required=True)
    return parser


def config_from_args(args) -> SweepConfig:
    if args.command == "sweep":
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as err:
            raise ConfigInvalid(f"cannot read config {args.config}: {err}") from err
        if not isinstance(data, dict):
            raise ConfigInvalid("config must be a JSON object")
        data.setdefault("series_switch_v", args.series_switch)
        data.setdefault("fmt", args.format)
        if args.output is not None:
            data["output"] = args.output
        for key in ("methods", "step_counts"):
            if isinstance(data.get(key), list):
                data[key] = tuple(data[key])
        return SweepConfig.from_mapping(data)
    cfg = SweepConfig(
        problem=args.command,
        methods=_flatten(args.methods),
        step_counts=_flatten(args.steps, int),
        energy=getattr(args, "energy", None),
        series_switch_v=args.series_switch,
        fmt=args.format,
        output=args.output,
    )
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = config_from_args(args)
        curves = run_sweep(cfg)
        text = emit(curves, cfg.fmt, cfg.output, sweep_metadata(cfg))
    except ConfigInvalid as err:
        print(f"phasefit-bench: invalid configuration: {err}", file=sys.stderr)
        return 1
    except IoFailure as err:
        print(f"phasefit-bench: {err}", file=sys.stderr)
        return 2
    if cfg.output is None:
        sys.stdout.write(text)
    if not args.quiet:
        for curve in curves:
            try:
                order = f"{estimate_order(curve):.3f}"
            except InsufficientData:
                order = "n/a"
            print(f"# {curve.method}: empirical order {order}, gaps {len(curve.gaps)}",
                  file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
