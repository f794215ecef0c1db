"""Command-line front end: ``pinch-rsma {eval,validate,sweep,optimize}``.

Configuration comes from an optional flat JSON file (``--config``) and is
overridden key by key by command-line flags.  Every output starts with the
fully resolved configuration so it can be reproduced from itself.

Exit codes: 0 success, 1 internal inconsistency or failed validation,
2 configuration/usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import collections
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import analysis, closed_form, coverage, oracles, tables
from .errors import ConfigError, InconsistencyError, ToleranceError
from .model import Geometry, RadioConfig, RsmaConfig, SystemConfig, UserPlacement

EXIT_OK, EXIT_INTERNAL, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3
VALIDATION_TOL = 1e-6


class UsageError(ConfigError):
    pass


# --- run configuration -------------------------------------------------------

def _real(x):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError("expected a number")
    return float(x)


def _count(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError("expected an integer")
    return x


def _flag(x):
    if not isinstance(x, bool):
        raise TypeError("expected true or false")
    return x


def _placements(x):
    if not isinstance(x, list) or not x:
        raise TypeError("expected a non-empty list of [y_u1_m, y_u2_m] pairs")
    out = []
    for p in x:
        if not (isinstance(p, list) and len(p) == 2):
            raise TypeError("expected a non-empty list of [y_u1_m, y_u2_m] pairs")
        out.append((_real(p[0]), _real(p[1])))
    return out


def _reals(x):
    if not isinstance(x, list) or not x:
        raise TypeError("expected a non-empty list of numbers")
    return [_real(v) for v in x]


# key -> (default, coercion, help); flag names are the keys with '-' for '_'
FIELDS = {
    "carrier_frequency_hz": (28e9, _real, "carrier frequency [Hz]"),
    "refractive_index_ne": (1.4, _real, "effective refractive index of the waveguide"),
    "tx_snr_db": (85.0, _real, "transmit SNR of both users [dB]"),
    "height_d_m": (3.0, _real, "waveguide height d [m]"),
    "room_dx_m": (20.0, _real, "room length along the waveguide [m]"),
    "room_dy_m": (20.0, _real, "room width D_y [m]"),
    "alpha": (0.7, _real, "power split of user 1"),
    "beta": (0.5, _real, "rate split of user 1"),
    "rate_r1": (1.0, _real, "target rate of user 1 [bit/s/Hz]"),
    "rate_r2": (1.0, _real, "target rate of user 2 [bit/s/Hz]"),
    "seed": (0, _count, "seed for Monte Carlo and random configurations"),
    "mc_samples": (1_000_000, _count, "Monte Carlo sample count"),
    "tol": (1e-10, _real, "absolute tolerance of the quadrature oracle"),
    "n_random": (500, _count, "number of random configurations for validate"),
    "snr_start_db": (75.0, _real, "first SNR of the snr sweep [dB]"),
    "snr_stop_db": (95.0, _real, "last SNR of the snr sweep [dB]"),
    "snr_step_db": (1.0, _real, "SNR step of the snr sweep [dB]"),
    "optimize": (True, _flag, "optimize (alpha, beta) per point in the snr sweep"),
    "alpha_snr_db": ([85.0, 90.0], _reals, "SNRs of the alpha sweep [dB]"),
    "alpha_start": (0.0, _real, "first alpha of the alpha sweep"),
    "alpha_stop": (1.0, _real, "last alpha of the alpha sweep"),
    "alpha_step": (0.005, _real, "alpha step of the alpha sweep"),
    "optimize_beta": (True, _flag, "alpha sweep at the optimal beta of each SNR (else the given beta)"),
    "placements": ([[15.0, 5.0], [10.0, 10.0], [5.0, 15.0]], _placements, "capacity sweep placements"),
    "n_alpha": (101, _count, "alpha points per capacity trace"),
}


@dataclass(frozen=True)
class RunConfig:
    values: dict

    def __getitem__(self, key):
        return self.values[key]

    @property
    def system(self) -> SystemConfig:
        v = self.values
        return SystemConfig(
            radio=RadioConfig.from_db(v["tx_snr_db"], carrier_frequency_hz=v["carrier_frequency_hz"],
                                      refractive_index_ne=v["refractive_index_ne"]),
            geometry=Geometry(height_d_m=v["height_d_m"], room_dx_m=v["room_dx_m"], room_dy_m=v["room_dy_m"]),
            rsma=RsmaConfig(alpha=v["alpha"], beta=v["beta"], rate_r1=v["rate_r1"], rate_r2=v["rate_r2"]))

    def echo(self) -> dict:
        """Resolved values plus derived linear SNRs."""
        out = dict(self.values)
        lin = 10.0 ** (self.values["tx_snr_db"] / 10.0)
        out["tx_snr_gamma1"] = out["tx_snr_gamma2"] = lin
        return out


def _key_line(text: str, key: str) -> int | None:
    for i, line in enumerate(text.splitlines(), 1):
        if f'"{key}"' in line:
            return i
    return None


def load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config ({exc.strerror})") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    out = {}
    for key, value in data.items():
        where = f"{path}:{_key_line(text, key) or '?'}"
        if key not in FIELDS:
            raise ConfigError(f"{where}: unknown key {key!r}")
        out[key] = _coerce(key, value, where)
    return out


def _coerce(key, value, where):
    try:
        return FIELDS[key][1](value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: key {key!r}: {exc}") from None


def resolve(file_values: dict, overrides: dict) -> RunConfig:
    values = {k: _coerce(k, d, "default") for k, (d, _, _) in FIELDS.items()}
    values.update(file_values)
    values.update({k: _coerce(k, v, "command line") for k, v in overrides.items() if v is not None})
    run = RunConfig(values)
    run.system                       # range checks of the physical config
    for key in ("mc_samples", "n_random", "n_alpha"):
        if values[key] < 1:
            raise ConfigError(f"{key} must be >= 1, got {values[key]}")
    if not 0 <= values["seed"] < 2 ** 64:
        raise ConfigError(f"seed must be a 64-bit unsigned integer, got {values['seed']}")
    if not 1e-12 < values["tol"] < 1e-3:
        raise ConfigError(f"tol must lie in (1e-12, 1e-3), got {values['tol']}")
    for key in ("snr_step_db", "alpha_step"):
        if not values[key] > 0:
            raise ConfigError(f"{key} must be > 0")
    if not 0 <= values["alpha_start"] <= values["alpha_stop"] <= 1:
        raise ConfigError("alpha sweep needs 0 <= alpha_start <= alpha_stop <= 1")
    if values["snr_stop_db"] < values["snr_start_db"]:
        raise ConfigError("snr_stop_db must be >= snr_start_db")
    return run


def _range(start, stop, step) -> list[float]:
    n = int(math.floor((stop - start) / step + 1e-9))
    return [round(start + i * step, 12) for i in range(n + 1)]


# --- output ----------------------------------------------------------------------

def fmt(x, digits: int = 17) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (tuple, list)):
        return "-".join(str(v) for v in x)
    return format(float(x), f".{digits}g")


class Table:
    def __init__(self, columns, rows, notes=()):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]
        self.notes = list(notes)


def render(run: RunConfig, command: str, table: Table, form: str) -> str:
    if form == "json":
        doc = {"command": command, "config": run.echo(), "notes": table.notes,
               "columns": table.columns, "rows": [dict(zip(table.columns, r)) for r in table.rows]}
        return json.dumps(doc, indent=1, allow_nan=True) + "\n"
    buf = io.StringIO()
    buf.write(f"# pinch-rsma {command}\n")
    for key, value in run.echo().items():
        buf.write(f"# {key} = {json.dumps(value)}\n")
    for note in table.notes:
        buf.write(f"# {note}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"{out}: cannot write output ({exc.strerror})") from None


# --- subcommands -------------------------------------------------------------

def cmd_eval(run: RunConfig, args) -> tuple[int, str]:
    cfg = run.system
    t = closed_form.outage_triple(cfg, literal=args.paper_literal)
    cols = ["message", "closed_form", "branch"]
    rows = [[m, p, b] for m, p, b in zip(tables.MESSAGES, t[:3], t[3:])]
    notes = ["closed form evaluated from the tables as printed" if args.paper_literal else "closed form"]
    if args.with_quad:
        q = oracles.quad_outage(cfg, run["tol"])
        cols.append("quad")
        for r, p in zip(rows, q[:3]):
            r.append(p)
        notes.append(f"quadrature error estimate {fmt(q.abs_error)}")
    if args.with_mc:
        mc = oracles.mc_outage(cfg, oracles.McSettings(run["mc_samples"], run["seed"]))
        cols += ["mc", "mc_std_error"]
        for r, e in zip(rows, mc):
            r += [e.estimate, e.std_error]
    table = Table(cols, rows, notes)
    if args.format is not None:
        return EXIT_OK, render(run, "eval", table, args.format)
    buf = io.StringIO()
    buf.write("resolved config:\n")
    for key, value in run.echo().items():
        buf.write(f"  {key} = {json.dumps(value)}\n")
    buf.write("  ".join(f"{c:>14}" for c in cols) + "\n")
    for r in rows:
        buf.write("  ".join(f"{fmt(v, 6):>14}" for v in r) + "\n")
    for note in notes[1:]:
        buf.write(note + "\n")
    return EXIT_OK, buf.getvalue()


def validate_configs(n: int, seed: int, base: SystemConfig, literal: bool = False) -> dict:
    """Closed form versus quadrature on ``n`` random configurations."""
    rng = np.random.default_rng(seed)
    hits = collections.Counter()
    worst = collections.defaultdict(float)
    failures, no_match, multi = [], 0, 0
    literal_bad = collections.Counter()
    for i in range(n):
        cfg = coverage.random_config(rng, base=base)
        k = closed_form.constants(cfg)
        rows = []
        for m in tables.MESSAGES:
            found = tables.matches(k, m)
            if not found:
                no_match += 1
            elif len(found) > 1:
                multi += 1
            rows.append(found[0] if found else None)
        if None in rows:
            failures.append((i, "no matching row"))
            continue
        q = oracles.quad_outage(cfg, 1e-10)
        for row, ref in zip(rows, q[:3]):
            hits[row.row_id] += 1
            p = closed_form.outage(k, row.message, literal).probability
            err = abs(p - ref) if math.isfinite(p) else math.inf
            worst[row.row_id] = max(worst[row.row_id], err)
            if err > VALIDATION_TOL:
                (literal_bad.update([row.row_id]) if literal else failures.append((i, row.row_id)))
    return dict(hits=hits, worst=worst, failures=failures, no_match=no_match, multi=multi,
                literal_bad=literal_bad)


def cmd_validate(run: RunConfig, args) -> tuple[int, str]:
    n = args.n_random if args.n_random is not None else run["n_random"]
    if n < 1:
        raise UsageError("n_random must be >= 1")
    t0 = time.perf_counter()
    res = validate_configs(n, run["seed"], run.system, args.paper_literal)
    elapsed = time.perf_counter() - t0
    worst_all = max(res["worst"].values(), default=0.0)
    rows = []
    for row in tables.ROWS:
        reason = coverage.unreachable_reason(row.row_id)
        hit = res["hits"].get(row.row_id, 0)
        status = "unreachable" if reason else ("hit" if hit else "not hit")
        rows.append([row.row_id, hit, res["worst"].get(row.row_id) if hit else None, status, reason or "",
                     res["literal_bad"].get(row.row_id, 0)])
    for row in tables.SUPPLEMENTARY_ROWS:
        hit = res["hits"].get(row.row_id, 0)
        rows.append([row.row_id, hit, res["worst"].get(row.row_id) if hit else None, "hit" if hit else "not hit",
                     "", res["literal_bad"].get(row.row_id, 0)])
    absent, why = coverage.ABSENT_X1A_CASE
    notes = [
        f"configs {n}; seed {run['seed']}; elapsed {elapsed:.3g} s",
        f"max abs error {fmt(worst_all, 6)}; tolerance {VALIDATION_TOL:g}",
        f"no-match {res['no_match']}; multi-match {res['multi']}",
        f"rows hit {sum(1 for r in rows if r[1])}; unreachable {len(coverage.UNREACHABLE)}",
        f"x1a case '{absent}' has no row: excluded by {coverage.RELATIONS[why].statement}",
    ]
    if args.paper_literal:
        bad = sorted(res["literal_bad"])
        notes.append(f"rows diverging from quadrature as printed: {len(bad)}" + (f" ({' '.join(bad)})" if bad else ""))
    failed = bool(res["failures"] or res["no_match"] or res["multi"] or res["literal_bad"])
    table = Table(["row_id", "hits", "max_abs_error", "status", "unreachable_reason", "literal_divergences"],
                  rows, notes)
    form = args.format or "csv"
    return (EXIT_INTERNAL if failed else EXIT_OK), render(run, "validate", table, form)


SNR_COLUMNS = ["snr_db", "alpha", "beta", "p_x1a", "p_xb", "p_x2a", "p_noma_system",
               "branch_x1a", "branch_xb", "branch_x2a"]


def cmd_sweep(run: RunConfig, args) -> tuple[int, str]:
    cfg = run.system
    if args.kind == "snr":
        snrs = _range(run["snr_start_db"], run["snr_stop_db"], run["snr_step_db"])
        rows = analysis.snr_sweep(cfg, snrs, optimize=run["optimize"])
        table = Table(SNR_COLUMNS, [[r.value, r.alpha, r.beta, r.p_x1a, r.p_xb, r.p_x2a, r.p_noma_system,
                                     r.branch_x1a, r.branch_xb, r.branch_x2a] for r in rows],
                      ["system outage is p_x2a; NOMA is the better of the two SIC orders"])
    elif args.kind == "alpha":
        alphas = _range(run["alpha_start"], run["alpha_stop"], run["alpha_step"])
        out, notes = [], []
        for snr in run["alpha_snr_db"]:
            point = cfg.with_snr_db(snr)
            if run["optimize_beta"]:
                point = point.with_rsma(beta=analysis.optimize_split(point).beta_star)
            rows = analysis.alpha_sweep(point, alphas)
            best = analysis.interior_minimizer(rows)
            notes.append(f"snr {fmt(snr, 6)} dB: beta {fmt(point.rsma.beta, 6)}; interior minimizer alpha "
                         + (fmt(best.alpha, 6) if best else "none"))
            out += [[snr, r.alpha, r.beta, r.p_x1a, r.p_xb, r.p_x2a, r.branch_x1a, r.branch_xb, r.branch_x2a]
                    for r in rows]
        table = Table(["snr_db", "alpha", "beta", "p_x1a", "p_xb", "p_x2a",
                       "branch_x1a", "branch_xb", "branch_x2a"], out, notes)
    else:
        out = []
        for y1, y2 in run["placements"]:
            region = analysis.capacity_region(UserPlacement(y1, y2), cfg.radio, cfg.geometry, run["n_alpha"])
            out += [[y1, y2, "vertex", None, v.rate_u1, v.rate_u2] for v in region.vertices]
            out += [[y1, y2, "trace", a, p.rate_u1, p.rate_u2] for a, p in zip(region.alphas, region.rsma_trace)]
        table = Table(["y_u1_m", "y_u2_m", "kind", "alpha", "rate_u1", "rate_u2"], out,
                      ["vertices run counter-clockwise from the origin"])
    return EXIT_OK, render(run, f"sweep --kind {args.kind}", table, args.format or "csv")


def cmd_optimize(run: RunConfig, args) -> tuple[int, str]:
    cfg = run.system
    best = analysis.optimize_split(cfg)
    noma = analysis.noma_baseline(cfg)
    table = Table(["alpha_star", "beta_star", "p_x1a", "p_xb", "p_x2a", "branch_x1a", "branch_xb", "branch_x2a",
                   "grid_points", "p_noma_system", "noma_order"],
                  [[best.alpha_star, best.beta_star, best.p_x1a, best.p_xb, best.p_x2a, *best.branches,
                    best.evaluated, noma.p_system, noma.order]],
                  [f"grids: alpha step {analysis.ALPHA_STEP}, beta step {analysis.BETA_STEP}"])
    return EXIT_OK, render(run, "optimize", table, args.format or "csv")


# --- argument parsing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="flat JSON config file")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--paper-literal", action="store_true",
                        help="evaluate the case tables exactly as printed (no corrections)")
    for key, (default, kind, text) in FIELDS.items():
        flag = "--" + key.replace("_", "-")
        if kind is _flag:
            common.add_argument(flag, dest=key, action=argparse.BooleanOptionalAction, default=None, help=text)
        elif kind in (_real, _count):
            common.add_argument(flag, dest=key, type=float if kind is _real else int, default=None, help=text)
    parser = _Parser(prog="pinch-rsma", description="Outage analysis of two-user uplink RSMA with pinching antennas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ev = sub.add_parser("eval", parents=[common], help="closed-form outage triple for one config")
    ev.add_argument("--with-mc", action="store_true", help="add a Monte Carlo column")
    ev.add_argument("--with-quad", action="store_true", help="add a quadrature column")
    va = sub.add_parser("validate", parents=[common], help="closed form vs quadrature on random configs")
    va.add_argument("n_random_pos", nargs="?", type=int, metavar="N", help="number of random configs")
    sw = sub.add_parser("sweep", parents=[common], help="SNR, alpha or capacity-region sweep")
    sw.add_argument("--kind", choices=("snr", "alpha", "capacity"), required=True)
    sub.add_parser("optimize", parents=[common], help="grid-optimal (alpha, beta)")
    return parser


COMMANDS = {"eval": cmd_eval, "validate": cmd_validate, "sweep": cmd_sweep, "optimize": cmd_optimize}


def run_cli(argv=None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout text, stderr text) without printing."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "validate":
            args.n_random = args.n_random_pos if args.n_random_pos is not None else args.n_random
        overrides = {k: getattr(args, k, None) for k in FIELDS}
        run = resolve(load_config_file(args.config) if args.config else {}, overrides)
        code, text = COMMANDS[args.command](run, args)
        if args.out is not None:
            emit(text, args.out)
            return code, "", ""
        return code, text, ""
    except ConfigError as exc:
        return EXIT_CONFIG, "", f"error: {exc}\n"
    except (InconsistencyError, ToleranceError) as exc:
        return EXIT_INTERNAL, "", f"internal error: {exc}\n"
    except OSError as exc:
        return EXIT_IO, "", f"I/O error: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run_cli(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
