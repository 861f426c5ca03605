"""
Command-line front end.

Every subcommand prints one JSON object (JSON lines for ``sweep``) on
stdout. Exit status is 0 whenever the command ran, whatever the verdict;
1 for usage errors, invalid inputs, or an exceeded search cap; 2 when a
certificate or sweep fails verification.
"""
import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import harness
from .errors import SearchCapExceeded
from .modarith import ext_gcd
from .primality import probable_prime, smallest_divisor
from .splitfactor import PerfectPower, split_from_divisor
from .witness import DEFAULT_SEARCH_CAP, Type2, build_certificate, classify, verify_certificate

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

_DECIMAL = re.compile(r"[0-9]+")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _Once(argparse.Action):
    """Store a flag value, rejecting a second occurrence of the same flag."""

    def __call__(self, parser, namespace, values, option_string=None):
        seen = namespace.__dict__.setdefault("_seen_flags", set())
        if self.dest in seen:
            raise UsageError(f"duplicate flag {option_string}")
        seen.add(self.dest)
        setattr(namespace, self.dest, values)


def _natural(token):
    if not _DECIMAL.fullmatch(token):
        raise argparse.ArgumentTypeError(f"not a non-negative decimal integer: {token!r}")
    return int(token)


@dataclass
class CliConfig:
    subcommand: str
    p: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    d: Optional[int] = None
    rounds: int = 20
    seed: int = 0
    divisor: Optional[int] = None
    max: Optional[int] = None
    max_search: int = DEFAULT_SEARCH_CAP
    format: str = "json"
    out: Optional[str] = None


def _build_parser():
    parser = _Parser(prog="rmverify", allow_abbrev=False)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def command(name, *positionals):
        cmd = sub.add_parser(name, allow_abbrev=False)
        for pos in positionals:
            cmd.add_argument(pos, type=_natural)
        cmd.add_argument("--format", choices=("json", "text"), default="json", action=_Once)
        return cmd

    test = command("test", "p")
    test.add_argument("--rounds", type=_natural, default=20, action=_Once)
    test.add_argument("--seed", type=_natural, default=0, action=_Once)

    command("classify", "p", "a")

    cert = command("certificate", "p")
    cert.add_argument("--divisor", type=_natural, action=_Once)
    cert.add_argument("--max-search", type=_natural, default=DEFAULT_SEARCH_CAP, action=_Once)

    command("split", "p", "d")
    command("euclid", "a", "b")

    sweep = command("sweep")
    sweep.add_argument("--max", type=_natural, required=True, action=_Once)
    sweep.add_argument("--max-search", type=_natural, default=DEFAULT_SEARCH_CAP, action=_Once)
    sweep.add_argument("--out", action=_Once)

    carm = command("carmichael")
    carm.add_argument("--max", type=_natural, required=True, action=_Once)
    return parser


def parse_config(argv):
    ns = _build_parser().parse_args(list(argv))
    values = {k: v for k, v in vars(ns).items() if not k.startswith("_") and v is not None}
    return CliConfig(**values)


def _render(obj, fmt):
    if fmt == "text":
        return " ".join(f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in obj.items())
    return json.dumps(obj, separators=(",", ":"))


def _class_payload(cls):
    payload = {"class": cls.kind}
    if isinstance(cls, Type2):
        payload.update(last_non_one=cls.last_non_one, position=cls.position)
    return payload


def _cmd_test(cfg):
    result = probable_prime(cfg.p, cfg.rounds, cfg.seed)
    payload = {"verdict": result.verdict}
    if result.witnesses_found:
        payload["witness"] = result.witnesses_found[0]
        payload["class"] = result.witness_class.kind
    return [payload], EXIT_OK


def _cmd_classify(cfg):
    return [_class_payload(classify(cfg.p, cfg.a))], EXIT_OK


def _cmd_certificate(cfg):
    d = cfg.divisor if cfg.divisor is not None else smallest_divisor(cfg.p)
    if d is None:
        raise ValueError(f"{cfg.p} has no nontrivial divisor")
    cert = build_certificate(cfg.p, d, max_search=cfg.max_search)
    report = verify_certificate(cfg.p, cert)
    payload = {"case": cert.case.kind, "t": cert.t, "t_inv": cert.t_inv, "verified": report.passed}
    if not report.passed:
        payload["failed_check"] = report.failed_check
        payload["offending"] = report.offending
    return [payload], EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_split(cfg):
    result = split_from_divisor(cfg.p, cfg.d)
    if isinstance(result, PerfectPower):
        return [{"kind": result.kind, "q": result.q, "e": result.e}], EXIT_OK
    return [{"kind": result.kind, "q": result.q, "r": result.r}], EXIT_OK


def _cmd_euclid(cfg):
    x, y, d = ext_gcd(cfg.a, cfg.b)
    return [{"x": x, "y": y, "d": d}], EXIT_OK


def _cmd_sweep(cfg):
    rows = harness.sweep_density(3, cfg.max)
    certs = harness.sweep_certificates(3, cfg.max)
    violations = harness.half_bound_violations(rows)
    negatives = harness.false_negatives(rows)
    summary = {"half_bound_violations": violations, "false_negatives": negatives}
    summary.update(certs.summary())
    failed = violations or negatives or certs.failures
    return [row.to_dict() for row in rows] + [summary], EXIT_VERIFY if failed else EXIT_OK


def _cmd_carmichael(cfg):
    return [{"carmichael": harness.carmichael_scan(cfg.max)}], EXIT_OK


_COMMANDS = {
    "test": _cmd_test,
    "classify": _cmd_classify,
    "certificate": _cmd_certificate,
    "split": _cmd_split,
    "euclid": _cmd_euclid,
    "sweep": _cmd_sweep,
    "carmichael": _cmd_carmichael,
}


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    try:
        objects, code = _COMMANDS[cfg.subcommand](cfg)
    except SearchCapExceeded as exc:
        print(_render({"error": "search_cap_exceeded", "size": exc.size, "cap": exc.cap}, cfg.format), file=stdout)
        return EXIT_USAGE
    except ValueError as exc:
        print(_render({"error": "invalid_input", "message": str(exc)}, cfg.format), file=stdout)
        return EXIT_USAGE
    lines = [_render(obj, cfg.format) for obj in objects]
    for line in lines:
        print(line, file=stdout)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write("".join(line + "\n" for line in lines))
    return code


def main():
    sys.exit(run(sys.argv[1:]))
