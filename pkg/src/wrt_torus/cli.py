"""Command-line driver.

Subcommands: ``tau``, ``expand``, ``sweep``, ``verify``, ``tables``.
Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .asymptotics import convergence_sweep, expansion_report
from .errors import ValidationError
from .numtheory import SurgerySpec
from .reps import TABLE_COLUMNS, invariant_table
from .verify import GROUPS, all_checks, run_checks
from .wrt import tau_hat

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

SWEEP_COLUMNS = ["n", "tau_re", "tau_im", "A_re", "A_im", "B_re", "B_im", "residual",
                 "n_times_residual"]


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


@dataclass
class RunConfig:
    subcommand: str
    a: Optional[int] = None
    b: Optional[int] = None
    p: Optional[int] = None
    n: Optional[int] = None
    n_from: Optional[int] = None
    n_to: Optional[int] = None
    precision: int = 53
    fmt: str = "json"
    output: Optional[str] = None
    workers: int = 1
    only: Optional[str] = None
    check_seed: Optional[int] = None

    def spec(self, need_n: bool) -> SurgerySpec:
        if need_n and self.n is None:
            raise ValidationError("n is required")
        return SurgerySpec(self.a, self.b, self.p, self.n if need_n else None)

    def n_values(self) -> list:
        if self.n_from is None or self.n_to is None:
            raise ValidationError("--n-from and --n-to are required")
        ns = [n for n in range(max(self.n_from, 3), self.n_to + 1) if n % 2 == 1]
        if len(ns) < 2:
            raise ValidationError("n range must contain at least two odd values >= 3")
        return ns


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrt-torus", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def spec_args(sp, with_n=True):
        sp.add_argument("-a", type=int, required=True)
        sp.add_argument("-b", type=int, required=True)
        sp.add_argument("-p", type=int, required=True)
        if with_n:
            sp.add_argument("-n", type=int, required=True)
        sp.add_argument("--precision", type=int, default=53, help="working precision in bits")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("tau", help="exact invariant for one n")
    spec_args(sp)
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("expand", help="invariant, A(n), B(n) and residual for one n")
    spec_args(sp)
    sp.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")

    sp = sub.add_parser("sweep", help="residual trend over a range of odd n")
    spec_args(sp, with_n=False)
    sp.add_argument("--n-from", type=int, required=True)
    sp.add_argument("--n-to", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", dest="fmt", choices=["json", "csv"], default="csv")

    sp = sub.add_parser("verify", help="golden examples and identity checks")
    sp.add_argument("--only", choices=GROUPS)
    sp.add_argument("--check-seed", type=int, default=None,
                    help="add 20 random spot points to the l-sum identity check")

    sp = sub.add_parser("tables", help="invariant table of the irreducible representations (CSV)")
    spec_args(sp, with_n=False)
    return parser


def parse_config(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(ns.subcommand)
    for key, value in vars(ns).items():
        if key != "subcommand" and hasattr(cfg, key):
            setattr(cfg, key, value)
    if cfg.precision < 53:
        raise ValidationError("precision must be at least 53 bits")
    if cfg.workers < 1:
        raise ValidationError("workers must be >= 1")
    return cfg


def _header(spec: SurgerySpec, precision: int) -> dict:
    return {"spec": spec.to_json(), "precision_bits": precision, "tool_version": __version__}


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_tau(cfg: RunConfig) -> str:
    spec = cfg.spec(need_n=True)
    tv = tau_hat(spec, cfg.precision, workers=cfg.workers)
    return _json_text({**_header(spec, cfg.precision), **tv.to_json()})


def cmd_expand(cfg: RunConfig) -> str:
    spec = cfg.spec(need_n=True)
    rep = expansion_report(spec, cfg.precision)
    if cfg.fmt == "csv":
        return _csv_text(SWEEP_COLUMNS, [rep.csv_row()])
    return _json_text({**_header(spec, cfg.precision), **rep.to_json()})


def cmd_sweep(cfg: RunConfig) -> str:
    spec = cfg.spec(need_n=False)
    ns = cfg.n_values()
    res = convergence_sweep(spec, ns, cfg.precision, workers=cfg.workers)
    rows = [r.csv_row() for r in res.reports]
    summary = res.summary()
    if cfg.fmt == "csv":
        text = _csv_text(SWEEP_COLUMNS, rows)
        return text + "".join(f"# {k}={v!r}\n" for k, v in summary.items())
    head = _header(spec, cfg.precision)
    head["n_range"] = [ns[0], ns[-1]]
    return _json_text({**head, "rows": rows, "summary": summary})


def cmd_tables(cfg: RunConfig) -> str:
    spec = cfg.spec(need_n=False)
    return _csv_text(TABLE_COLUMNS, invariant_table(spec))


def cmd_verify(cfg: RunConfig, out) -> int:
    results = run_checks(all_checks(cfg.only, cfg.check_seed))
    failures = [r for r in results if not r[1]]
    for check, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  [{check.group}] {check.name}  ({check.anchor}): {detail}\n")
    out.write(f"{len(results) - len(failures)}/{len(results)} checks passed\n")
    if failures:
        out.write("failed: " + ", ".join(c.name for c, _, _ in failures) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


_COMMANDS = {"tau": cmd_tau, "expand": cmd_expand, "sweep": cmd_sweep, "tables": cmd_tables}


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        if cfg.subcommand == "verify":
            return cmd_verify(cfg, sys.stdout)
        text = _COMMANDS[cfg.subcommand](cfg)
    except (InputError, ValidationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    try:
        if cfg.output:
            with open(cfg.output, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write output: {exc}\n")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
