import argparse
import logging
import sys
from pathlib import Path

from . import codec
from .config import RunConfig
from .errors import ConfigError, EndostarError, ExpressionSyntaxError
from .groups import INSTANCES
from .suites import SUITES, SuiteResult, run_all

log = logging.getLogger(__name__)

COMMANDS = ("group", "relations", "mul", "theta", "certify", "ideals", "ktheory", "purity", "all")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; the exit code is main's business
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", choices=sorted(INSTANCES))
    common.add_argument("--bases", help="comma separated base subgroups, e.g. G,H")
    common.add_argument(
        "--window-param",
        dest="window_param",
        action="append",
        metavar="NAME=VALUE",
        help="window parameter of the instance, repeatable",
    )
    common.add_argument("--core-depth", dest="core_depth", type=int)
    common.add_argument("--depth", type=int)
    common.add_argument("--label-size", dest="label_size", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--certificates", type=int)
    common.add_argument("--witness-cap", dest="witness_cap", type=int)
    common.add_argument("--hypothesis-cap", dest="hypothesis_cap", type=int)
    common.add_argument("--purity-depth", dest="purity_depth", type=int)
    common.add_argument("--rank", dest="k_rank", type=int)
    common.add_argument("--torsion", dest="k_torsion", type=int, nargs="*")
    common.add_argument("--k-samples", dest="k_samples", type=int)
    common.add_argument("--expr")
    common.add_argument("--output", help="report path, stdout when omitted")
    common.add_argument("--seed", type=int)
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("-q", "--quiet", action="store_true")
    return common


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = _Parser(
        prog="endostar",
        description="Exact checks for crossed products by an injective group endomorphism.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common_flags()
    for name in COMMANDS:
        commands.add_parser(name, parents=[common])
    return parser.parse_args(argv)


def _configure_logging(args: argparse.Namespace):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _run(command: str, config: RunConfig) -> SuiteResult:
    if command == "all":
        return run_all(config)
    return SUITES[command](config)


def _write(config: RunConfig, payload: str):
    if config.output is None:
        sys.stdout.write(payload)
        return
    path = Path(config.output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    """Exit code 0 when every check passes, 1 on a failed check, 2 on bad usage."""

    try:
        args = _parse_args(argv)
    except _UsageError as e:
        print(e, file=sys.stderr)
        return 2
    _configure_logging(args)

    try:
        config = RunConfig.from_args(args)
    except ConfigError as e:
        log.error("%s", e)
        return 2

    try:
        result = _run(args.command, config)
    except (ConfigError, ExpressionSyntaxError) as e:
        log.error("%s", e)
        return 2
    except EndostarError as e:
        log.error("%s: %s", type(e).__name__, e)
        body = {"error": {"type": type(e).__name__, "message": str(e)}}
        _write(config, codec.dumps(codec.envelope(args.command, config.to_json(), body, False)))
        return 1

    log.info("%s %s", args.command, "passed" if result.passed else "failed")
    report = codec.envelope(args.command, config.to_json(), result.body, result.passed)
    _write(config, codec.dumps(report))
    return 0 if result.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
