"""Command-line front end.

Commands: classical | q | hq | barnes | verify | char.

Exit codes:
  0  success
  1  a verification suite produced a failing verdict
  2  configuration error (bad flag value, malformed character file, ...)
  3  computation error
  4  work guard exceeded (d**r above --guard)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import characters as ch
from . import classical
from . import verify as vf
from .errors import CharacterError, GenocchiError, GuardExceeded
from .qcalc import Backend, QParam
from .qgenocchi import QGenocchiParams, evaluate, format_scalar

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_CONFIG, EXIT_COMPUTE, EXIT_GUARD = 0, 1, 2, 3, 4
DEFAULT_GUARD = 10 ** 7
DEFAULT_N_MAX = {"classical": 12, "q": 6, "hq": 6, "barnes": 6}


class ConfigError(Exception):
    """Raised while turning arguments into a RunConfig."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    backend: Optional[Backend]
    q: Optional[QParam]
    n_values: Optional[tuple]
    n_max: Optional[int]
    r: Optional[int]
    h: Optional[int]
    chi: Optional[ch.DirichletCharacter]
    d: Optional[int]
    x: object
    weights: Optional[tuple]
    fmt: str
    out: Optional[str]
    tol: float
    guard: int
    suite: Optional[str] = None
    char_action: Optional[str] = None
    char_path: Optional[str] = None


# -- parsing ----------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=[b.value for b in Backend], default=None,
                   help="scalar backend (default: exact; verify uses each suite's own)")
    p.add_argument("--q", default=None, help='q as "p/q" (exact) or "a+bi" (float)')
    p.add_argument("--n", type=int, default=None, help="single index n")
    p.add_argument("--n-max", type=int, default=None, dest="n_max", help="indices 0..n-max")
    p.add_argument("--r", type=int, default=None, help="order r")
    p.add_argument("--h", type=int, default=None, help="(h, r) weight exponent")
    p.add_argument("--d", type=int, default=None, help="conductor (odd)")
    p.add_argument("--char", default=None,
                   help="principal | quadratic | path to a character JSON file")
    p.add_argument("--char-file", default=None, dest="char_file", help="character JSON file")
    p.add_argument("--x", default=None, help="shift x (integer in exact backends)")
    p.add_argument("--w", default=None, help="Barnes weights, comma separated")
    p.add_argument("--format", choices=["csv", "json"], default="csv", dest="fmt")
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    p.add_argument("--tol", type=float, default=1e-6, help="float-backend tolerance")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                   help="refuse work with d**r above this (default 10^7)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgen", description=__doc__.split("\n")[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter,
                                     epilog=__doc__.split("\n", 3)[3])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [("classical", "classical Genocchi values"),
                        ("q", "normalized order-r q-Genocchi values"),
                        ("hq", "normalized (h, r) q-Genocchi values"),
                        ("barnes", "normalized Barnes-type q-Genocchi values")]:
        _common(sub.add_parser(name, help=help_))
    p = sub.add_parser("verify", help="run an identity-verification suite")
    p.add_argument("suite", choices=sorted(vf.SUITES))
    _common(p)
    p = sub.add_parser("char", help="validate a character file or enumerate characters")
    p.add_argument("action", choices=["validate", "enumerate"])
    p.add_argument("path", nargs="?", default=None)
    _common(p)
    return parser


def _parse_number(text: str, backend: Backend):
    try:
        if backend is Backend.FLOAT:
            v = complex(text.replace(" ", "").replace("i", "j"))
            return v.real if v.imag == 0 else v
        v = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot read number {text!r}") from exc
    if v.denominator != 1:
        raise ConfigError(f"{backend.value} backend needs an integer, got {text!r}")
    return int(v)


def _character(args, d: int) -> ch.DirichletCharacter:
    source = args.char_file or args.char
    if source is None or source == "principal":
        return ch.principal(d)
    if source == "quadratic":
        return ch.quadratic(d)
    chi = ch.load(source)
    if args.d is not None and chi.modulus != args.d:
        raise ConfigError(f"--d {args.d} does not match the modulus {chi.modulus} in {source}")
    return chi


def make_config(args) -> RunConfig:
    """Validate everything up front; raises ConfigError or a package error."""
    command = args.command
    backend = Backend(args.backend) if args.backend else None
    eff = backend or Backend.EXACT
    if args.n is not None and args.n_max is not None:
        raise ConfigError("give --n or --n-max, not both")
    for flag in ("n", "n_max"):
        v = getattr(args, flag)
        if v is not None and v < 0:
            raise ConfigError(f"--{flag.replace('_', '-')} must be >= 0")
    if args.r is not None and args.r < 1:
        raise ConfigError("--r must be >= 1")
    q = None
    if command in ("q", "hq", "barnes") or (command == "verify" and (args.q or backend)):
        if eff is not Backend.SYMBOLIC and args.q is None:
            raise ConfigError(f"the {eff.value} backend needs --q")
        q = QParam.parse(args.q, eff)
    chi = None
    d = args.d
    wants_char = command not in ("char", "verify") or args.char or args.char_file
    if wants_char:
        chi = _character(args, d if d is not None else 1)
        d = chi.modulus
        if q is not None and q.is_exact and not chi.is_real:
            raise ConfigError(f"character mod {d} is not real; the {eff.value} backend "
                              "needs real characters (use --backend float)")
        if command == "classical" and backend is not Backend.FLOAT and not chi.is_real:
            raise ConfigError("non-real characters need --backend float")
    x = _parse_number(args.x, eff) if args.x is not None else None
    weights = None
    if args.w is not None:
        try:
            weights = tuple(_parse_weight(t, eff) for t in args.w.split(","))
        except ValueError as exc:
            raise ConfigError(f"cannot read weights {args.w!r}") from exc
    if command == "barnes":
        if weights is None:
            raise ConfigError("barnes needs --w")
        if args.r is not None and args.r != len(weights):
            raise ConfigError(f"--r {args.r} does not match {len(weights)} weights")
    r = args.r
    if command == "barnes":
        r = len(weights)
    elif command in ("q", "hq") and r is None:
        r = 1
    h = args.h
    if command == "hq" and h is None:
        h = r
    if r is not None and d is not None and d ** r > args.guard:
        raise GuardExceeded(f"d^r = {d}^{r} exceeds the guard {args.guard}")
    if command == "verify" and args.suite == "prime-scan" and (args.n_max or 0) > \
            classical.PRIME_SCAN_LIMIT:
        raise ConfigError(f"the prime scan is limited to n <= {classical.PRIME_SCAN_LIMIT}")
    n_values = (args.n,) if args.n is not None else None
    cfg = RunConfig(command=command, backend=backend, q=q, n_values=n_values,
                    n_max=args.n_max, r=r, h=h, chi=chi, d=d, x=x, weights=weights,
                    fmt=args.fmt, out=args.out, tol=args.tol, guard=args.guard,
                    suite=getattr(args, "suite", None),
                    char_action=getattr(args, "action", None),
                    char_path=getattr(args, "path", None) or args.char_file)
    if command in ("q", "hq", "barnes"):
        _params(cfg, 0)  # surfaces invalid combinations before any work
    return cfg


def _parse_weight(text: str, backend: Backend):
    v = Fraction(text.strip())
    if backend is Backend.FLOAT:
        return float(v) if v.denominator != 1 else int(v)
    return v


def _x(cfg: RunConfig):
    return 0 if cfg.x is None else cfg.x


def _params(cfg: RunConfig, n: int) -> QGenocchiParams:
    return QGenocchiParams(n=n, r=cfg.r, chi=cfg.chi, q=cfg.q, x=_x(cfg),
                           h=cfg.h if cfg.command == "hq" else None,
                           weights=cfg.weights if cfg.command == "barnes" else None)


def _indices(cfg: RunConfig) -> List[int]:
    if cfg.n_values is not None:
        return list(cfg.n_values)
    n_max = cfg.n_max if cfg.n_max is not None else DEFAULT_N_MAX[cfg.command]
    return list(range(n_max + 1))


# -- commands ------------------------------------------------------------------------


def cmd_classical(cfg: RunConfig):
    generalized = cfg.r is not None or cfg.d not in (None, 1) or (
        cfg.chi is not None and cfg.chi.modulus != 1) or cfg.x is not None
    ns = _indices(cfg)
    if not generalized:
        G = classical.genocchi_numbers(max(ns))
        return ["n", "G_n"], [[n, str(G[n])] for n in ns]
    r = cfg.r or 1
    backend = cfg.backend or Backend.EXACT
    header = ["n", "r", "d", "chi", "x", "G"]
    rows = []
    for n in ns:
        v = classical.generalized_genocchi(n, r, cfg.chi, _x(cfg), backend)
        rows.append([n, r, cfg.chi.modulus, cfg.chi.label(), _x(cfg), format_scalar(v)])
    return header, rows


def cmd_values(cfg: RunConfig):
    """Shared by q, hq and barnes: params..., normalized, unnormalized."""
    header = ["n", "r"]
    if cfg.command == "hq":
        header.append("h")
    header += ["d", "chi", "x", "q"]
    if cfg.command == "barnes":
        header.append("w")
    header += ["g", "G"]
    rows = []
    for n in _indices(cfg):
        value = evaluate(_params(cfg, n))
        row = [n, cfg.r]
        if cfg.command == "hq":
            row.append(cfg.h)
        row += [cfg.chi.modulus, cfg.chi.label(), _x(cfg), str(cfg.q)]
        if cfg.command == "barnes":
            row.append(" ".join(str(w) for w in cfg.weights))
        row += [format_scalar(value.g), format_scalar(value.unnormalized)]
        rows.append(row)
    return header, rows


def _grid(cfg: RunConfig) -> vf.Grid:
    kw = {"tol": cfg.tol}
    if cfg.chi is not None:
        kw["chars"] = (cfg.chi,)
    elif cfg.d is not None:
        kw["d"] = (cfg.d,)
    if cfg.r is not None:
        kw["r"] = (cfg.r,)
    if cfg.h is not None:
        kw["h"] = (cfg.h,)
    if cfg.n_values is not None:
        raise ConfigError("verify takes --n-max, not --n")
    if cfg.n_max is not None:
        kw["n_max"] = cfg.n_max
    if cfg.x is not None:
        kw["x"] = (cfg.x,)
    if cfg.weights is not None:
        kw["weights"] = (cfg.weights,)
    if cfg.q is not None:
        kw["q"] = cfg.q
    return vf.Grid(**kw)


def cmd_verify(cfg: RunConfig):
    verdicts = vf.run(cfg.suite, _grid(cfg))
    return verdicts, vf.summary(verdicts)


def _value_label(chi: ch.DirichletCharacter, a: int) -> str:
    t = chi.turn(a)
    if t is None:
        return "0"
    if t == 0:
        return "1"
    if t == Fraction(1, 2):
        return "-1"
    return f"e({t.numerator}/{t.denominator})"


def cmd_char(cfg: RunConfig):
    if cfg.char_action == "validate":
        if not cfg.char_path:
            raise ConfigError("char validate needs a file path")
        chars = [ch.load(cfg.char_path)]
    else:
        d = cfg.d if cfg.d is not None else 1
        chars = ch.enumerate_characters(d)
    header = ["index", "modulus", "kind", "order", "real", "values"]
    rows = [[i, c.modulus, c.kind, c.order, str(c.is_real).lower(),
             " ".join(_value_label(c, a) for a in range(c.modulus))]
            for i, c in enumerate(chars)]
    return header, rows


# -- output --------------------------------------------------------------------------


def _table_text(cfg: RunConfig, header, rows) -> str:
    if cfg.fmt == "json":
        data = {"command": cfg.command, "rows": [dict(zip(header, r)) for r in rows]}
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _verdict_text(cfg: RunConfig, verdicts, summary) -> str:
    if cfg.fmt == "json":
        data = {"suite": cfg.suite, "verdicts": [v.to_json() for v in verdicts],
                "summary": summary}
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "params", "backend", "status", "lhs", "rhs", "abs_diff", "notes"])
    for v in verdicts:
        w.writerow([v.identity, json.dumps(v.params, separators=(",", ":")), v.backend,
                    v.status if v.asserted else v.status + " (reported)", v.lhs, v.rhs,
                    v.abs_diff if v.abs_diff is not None else "", "; ".join(v.notes)])
    return buf.getvalue()


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse itself exits with 2 on bad flags
    try:
        cfg = make_config(args)
    except GuardExceeded as exc:
        print(f"qgen: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CharacterError as exc:
        where = f" (residues {exc.residues})" if exc.residues else ""
        print(f"qgen: invalid character: {exc}{where}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, GenocchiError, ValueError, OSError) as exc:
        print(f"qgen: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if cfg.command == "verify":
            try:
                verdicts, summary = cmd_verify(cfg)
            except ConfigError as exc:
                print(f"qgen: configuration error: {exc}", file=sys.stderr)
                return EXIT_CONFIG
            _emit(cfg, _verdict_text(cfg, verdicts, summary))
            print(f"qgen: {cfg.suite}: {summary['passed']}/{summary['total']} passed, "
                  f"{summary['failed']} failed", file=sys.stderr)
            return EXIT_VERIFY_FAIL if summary["failed"] else EXIT_OK
        if cfg.command == "classical":
            header, rows = cmd_classical(cfg)
        elif cfg.command == "char":
            header, rows = cmd_char(cfg)
        else:
            header, rows = cmd_values(cfg)
    except CharacterError as exc:
        where = f" (residues {exc.residues})" if exc.residues else ""
        print(f"qgen: invalid character: {exc}{where}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, OSError) as exc:
        print(f"qgen: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GuardExceeded as exc:
        print(f"qgen: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GenocchiError, ArithmeticError, ValueError) as exc:
        print(f"qgen: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    _emit(cfg, _table_text(cfg, header, rows))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
