"""Command-line surface: LR coefficients, expansions, rectification,
enumeration, identity verification and worked-example replay.

Usage: uv run python cli.py lr --lambda 7,3,1,1 --mu 2,1 --nu 6,2,1
       uv run python cli.py verify-skew --shape 3,2,1/1 --max-entry 4 --exact
       uv run python cli.py repro sec32
"""
import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import codec
from config import load_config
from errors import InputError, TableauError
from jdt import CornerPolicy, rectify
from lr import lr_coeff_rect, lr_expand, lr_product_table
from repro import EXAMPLES, repro
from shapes import Diagram, SkewShape
from tableaux import ExponentTableau, Tableau, enumerate_ssyt, enumerate_ssyt_with_content, kostka
from zeta import (
    Arithmetic,
    TruncationContext,
    verify_product_theorem,
    verify_skew_theorem,
    verify_winged_theorem,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_INPUT = 2

COMMANDS = ("lr", "expand", "rect", "enumerate", "verify-skew", "verify-product", "verify-winged", "repro")


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_entry: int = 4
    arithmetic: Arithmetic = Arithmetic.EXACT
    tolerance: float = 1e-12
    seed: int = 0
    output: str | None = None
    archive: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}", "command")
        if self.max_entry < 1:
            raise InputError(f"must be at least 1, got {self.max_entry}", "max_entry")

    def context(self) -> TruncationContext:
        return TruncationContext(
            max_entry=self.max_entry,
            arithmetic=self.arithmetic,
            tolerance=self.tolerance,
            workers=self.threads,
        )


Handler = Callable[[RunConfig, dict], tuple[int, dict]]
_HANDLERS: dict[str, Handler] = {}


def handler(command: str):
    def register(fn: Handler) -> Handler:
        _HANDLERS[command] = fn
        return fn
    return register


def _require(payload: dict, key: str) -> Any:
    if payload.get(key) in (None, ""):
        raise InputError("is required", key)
    return payload[key]


def random_exponents(cells: Diagram, rng: random.Random, tag: str = "v",
                     shape: SkewShape | None = None) -> ExponentTableau:
    """Exponents p/q with 1 <= q <= p <= 5, so every value lies in [1, 5]."""
    values = {}
    for cell in cells:
        q = rng.randint(1, 5)
        values[cell] = Fraction(rng.randint(q, 5), q)
    return ExponentTableau.from_values(Tableau.from_mapping(values), tag, shape)


def _exponents(payload: dict, key: str, cells: Diagram, rng: random.Random, tag: str,
               shape: SkewShape | None = None) -> ExponentTableau:
    if payload.get(key) is None:
        return random_exponents(cells, rng, tag, shape)
    return codec.parse_exponents(payload[key], cells, tag, shape, location=key)


@handler("lr")
def _lr(config: RunConfig, payload: dict) -> tuple[int, dict]:
    lam = codec.parse_partition(_require(payload, "lambda"), "lambda")
    mu = codec.parse_partition(payload.get("mu"), "mu")
    nu = codec.parse_partition(_require(payload, "nu"), "nu")
    coeff = lr_coeff_rect(lam, mu, nu)
    return EXIT_OK, {
        "lambda": codec.encode_partition(lam),
        "mu": codec.encode_partition(mu),
        "nu": codec.encode_partition(nu),
        "coeff": coeff,
    }


@handler("expand")
def _expand(config: RunConfig, payload: dict) -> tuple[int, dict]:
    if payload.get("shape"):
        table = lr_expand(codec.parse_skew(payload["shape"]))
    else:
        mu = codec.parse_partition(_require(payload, "mu"), "mu")
        nu = codec.parse_partition(_require(payload, "nu"), "nu")
        table = lr_product_table(mu, nu)
    return EXIT_OK, codec.encode_lr_table(table)


@handler("rect")
def _rect(config: RunConfig, payload: dict) -> tuple[int, dict]:
    t = codec.parse_tableau(_require(payload, "tableau"))
    try:
        policy = CornerPolicy(payload.get("policy", CornerPolicy.LOWEST_RIGHT.value))
    except ValueError:
        raise InputError(f"unknown corner policy {payload.get('policy')!r}", "policy") from None
    return EXIT_OK, codec.encode_rect_result(rectify(t, policy))


@handler("enumerate")
def _enumerate(config: RunConfig, payload: dict) -> tuple[int, dict]:
    cells = codec.parse_diagram(_require(payload, "shape"), "shape")
    content = payload.get("content")
    if content is not None:
        if not isinstance(content, list):
            raise InputError(f"expected an array of entries, got {content!r}", "content")
        content = [codec.parse_int(x, f"content entry {i}") for i, x in enumerate(content, 1)]
    if payload.get("count_only"):
        if content is not None:
            count = kostka(cells, content)
        else:
            count = sum(1 for _ in enumerate_ssyt(cells, config.max_entry))
        return EXIT_OK, {"shape": codec.encode_shape(cells), "max_entry": config.max_entry, "count": count}
    if content is not None:
        tableaux = list(enumerate_ssyt_with_content(cells, content))
    else:
        tableaux = list(enumerate_ssyt(cells, config.max_entry))
    return EXIT_OK, {
        "shape": codec.encode_shape(cells),
        "max_entry": config.max_entry,
        "count": len(tableaux),
        "tableaux": [codec.encode_tableau(t)["rows"] for t in tableaux],
    }


def _verdict(report) -> tuple[int, dict]:
    return (EXIT_OK if report.equal else EXIT_UNEQUAL), codec.encode_report(report)


@handler("verify-skew")
def _verify_skew(config: RunConfig, payload: dict) -> tuple[int, dict]:
    shape = codec.parse_skew(_require(payload, "shape"))
    rng = random.Random(config.seed)
    v = _exponents(payload, "exponents", shape.cells(), rng, "v", shape)
    return _verdict(verify_skew_theorem(shape, v, config.context()))


@handler("verify-product")
def _verify_product(config: RunConfig, payload: dict) -> tuple[int, dict]:
    mu = codec.parse_partition(_require(payload, "mu"), "mu")
    nu = codec.parse_partition(_require(payload, "nu"), "nu")
    rng = random.Random(config.seed)
    s = _exponents(payload, "s", mu.cells(), rng, "s", SkewShape(mu))
    t = _exponents(payload, "t", nu.cells(), rng, "t", SkewShape(nu))
    return _verdict(verify_product_theorem(mu, nu, s, t, config.context()))


@handler("verify-winged")
def _verify_winged(config: RunConfig, payload: dict) -> tuple[int, dict]:
    shape = codec.parse_skew(_require(payload, "shape"))
    alpha = codec.parse_diagram(payload.get("alpha"), "alpha")
    beta = codec.parse_diagram(payload.get("beta"), "beta")
    l0 = codec.parse_int(payload.get("l0", 0), "l0")
    l1 = codec.parse_int(payload.get("l1", 0), "l1")
    rng = random.Random(config.seed)
    a = _exponents(payload, "a", alpha, rng, "alpha")
    v = _exponents(payload, "v", shape.cells(), rng, "delta", shape)
    b = _exponents(payload, "b", beta, rng, "beta")
    return _verdict(verify_winged_theorem(alpha, beta, l0, l1, shape, a, b, v, config.context()))


@handler("repro")
def _repro(config: RunConfig, payload: dict) -> tuple[int, dict]:
    report = repro(str(_require(payload, "example")))
    return (EXIT_OK if report["passed"] else EXIT_UNEQUAL), report


def run(config: RunConfig, payload: dict) -> tuple[int, dict]:
    """Execute one command; library errors become exit status 2 with an error report."""
    logger.info("Running %s (max_entry=%d, %s)", config.command, config.max_entry, config.arithmetic.value)
    try:
        status, report = _HANDLERS[config.command](config, payload)
    except TableauError as e:
        logger.warning("%s rejected its input: %s", config.command, e)
        return EXIT_INPUT, {"command": config.command, "error": str(e)}
    logger.info("%s finished with status %d", config.command, status)
    return status, report


def _parser(default_max_entry: int) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-entry", type=int, default=default_max_entry,
                        help="truncation bound N on tableau entries")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact arithmetic (default)")
    mode.add_argument("--float", type=float, metavar="TOL", dest="float_tol",
                      help="float arithmetic with relative tolerance TOL")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized exponents")
    common.add_argument("--json", metavar="FILE", help="read command input from a JSON file")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--archive", action="store_true", help="store the report in DATABASE_URL")

    parser = argparse.ArgumentParser(prog="schur-lr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", parents=[common], help="one LR coefficient")
    lr.add_argument("--lambda", dest="lambda")
    lr.add_argument("--mu")
    lr.add_argument("--nu")

    expand = sub.add_parser("expand", parents=[common], help="skew expansion or product table")
    expand.add_argument("--shape")
    expand.add_argument("--mu")
    expand.add_argument("--nu")

    sub.add_parser("rect", parents=[common], help="rectify the tableau given with --json")

    enum = sub.add_parser("enumerate", parents=[common], help="SSYT of a shape")
    enum.add_argument("--shape")
    enum.add_argument("--count-only", action="store_true", default=None, help="report only the number of tableaux")

    skew = sub.add_parser("verify-skew", parents=[common], help="skew expansion identity")
    skew.add_argument("--shape")

    product = sub.add_parser("verify-product", parents=[common], help="product expansion identity")
    product.add_argument("--mu")
    product.add_argument("--nu")

    sub.add_parser("verify-winged", parents=[common], help="winged expansion identity (JSON input)")

    rep = sub.add_parser("repro", parents=[common], help="replay a worked example")
    rep.add_argument("example", choices=sorted(EXAMPLES))
    return parser


_FLAG_KEYS = ("lambda", "mu", "nu", "shape", "example", "count_only")


def _load_payload(args: argparse.Namespace) -> dict:
    payload: dict = {}
    if args.json:
        try:
            with open(args.json, encoding="utf-8") as f:
                payload = json.load(f)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}", args.json) from None
        except OSError as e:
            raise InputError(str(e), args.json) from None
        if not isinstance(payload, dict):
            raise InputError("expected a JSON object", args.json)
    for key in _FLAG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            payload[key] = value
    return payload


def _write(report: dict, path: str | None) -> None:
    text = codec.dumps(report) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    try:
        app_config = load_config()
    except ValueError as e:
        sys.stderr.write(codec.dumps({"error": str(e), "location": "environment"}) + "\n")
        return EXIT_INPUT
    logging.basicConfig(level=app_config.log_level, stream=sys.stderr)
    args = _parser(app_config.max_entry).parse_args(argv)

    try:
        config = RunConfig(
            command=args.command,
            max_entry=args.max_entry,
            arithmetic=Arithmetic.FLOAT if args.float_tol is not None else Arithmetic.EXACT,
            tolerance=args.float_tol if args.float_tol is not None else app_config.float_tolerance,
            seed=args.seed,
            output=args.out,
            archive=args.archive,
            threads=app_config.threads,
        )
        payload = _load_payload(args)
    except TableauError as e:
        sys.stderr.write(codec.dumps({"command": args.command, "error": str(e)}) + "\n")
        return EXIT_INPUT

    status, report = run(config, payload)
    if status == EXIT_INPUT:
        sys.stderr.write(codec.dumps(report) + "\n")
        return status

    if config.archive:
        if app_config.database_url:
            from reports import ReportStore

            store = ReportStore(app_config.database_url)
            try:
                report = {**report, "archive_id": store.save(config.command, status, report)}
            finally:
                store.close()
        else:
            logger.warning("--archive given but DATABASE_URL is not set; report not stored")

    _write(report, config.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
