"""Command-line front end.

Subcommands: zeros, spectrum, bands, gaps, diagram, verify.  Tables are
emitted as CSV (default) or JSON; diagram renders an SVG band picture.
Every numeric is printed with 15 significant digits and identical inputs
produce byte-identical output.  Exit codes: 0 ok, 1 usage or config error,
2 numerical failure, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .bands import (
    InternalConsistencyError,
    band_interval,
    band_length,
    brillouin_sweep,
    detect_gaps,
    swept_band_width,
)
from .bessel import ZeroFindingError, bessel_j, bessel_zero
from .corrections import (
    Branch,
    ExpansionParams,
    FloquetPoint,
    QuadratureConvergenceError,
    correction_for,
    correction_matrix,
    c0_multiple,
    c0_simple,
    lambda1_multiple,
)
from .oracles import (
    OracleConvergenceError,
    RadialMesh,
    boundary_arc_length,
    c0_quadrature,
    convergence_ratios,
    disk_dirichlet_eigenvalues,
)
from .spectrum import ModeIndex, Parity, enumerate_spectrum

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_INTERNAL = 3

_FORMATS = ("csv", "json", "svg")


class ConfigError(ValueError):
    """Bad flag, bad config file, or invalid parameter combination."""


def _fmt(x: float) -> str:
    return "%.15g" % (x,)


def _jnum(x: float) -> float:
    # round-trip through the printed precision so JSON and CSV agree
    return float(_fmt(x))


@dataclass
class RunConfig:
    """Resolved run parameters (defaults, then config file, then flags)."""

    epsilon: float = 1e-3
    m: float = 0.25
    grid_resolution: int = 33
    output_format: str = "csv"
    output_path: str | None = None
    error_constants: dict[tuple[int, int], float] = field(default_factory=dict)
    default_constant: float = 0.0

    def validate(self) -> None:
        if not (self.epsilon > 0.0 and math.isfinite(self.epsilon)):
            raise ConfigError("epsilon must be positive, got %r" % (self.epsilon,))
        if not (0.0 < self.m < 0.5):
            raise ConfigError(
                "m must lie strictly inside (0, 1/2); the two-term expansion "
                "assumes this fixed exponent range, got %r" % (self.m,)
            )
        if self.grid_resolution < 3:
            raise ConfigError(
                "grid resolution must be >= 3, got %r" % (self.grid_resolution,)
            )
        if self.output_format not in _FORMATS:
            raise ConfigError("unknown output format %r" % (self.output_format,))
        if self.default_constant < 0.0 or any(
            v < 0.0 for v in self.error_constants.values()
        ):
            raise ConfigError("error constants must be non-negative")

    def params(self) -> ExpansionParams:
        return ExpansionParams(self.epsilon, self.m, self.default_constant)

    def params_for(self, m: ModeIndex) -> ExpansionParams:
        c = self.error_constants.get((m.n, m.k), self.default_constant)
        return ExpansionParams(self.epsilon, self.m, c)

    def constant_for(self, m: ModeIndex) -> float:
        return self.error_constants.get((m.n, m.k), self.default_constant)

    @property
    def gamma(self) -> float:
        return min(3.0 * self.m, 1.0)


def _load_config_file(path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(
                        "%s:%d: expected 'key = value', got %r" % (path, lineno, line)
                    )
                key, _, value = line.partition("=")
                entries[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError("cannot read config file %s: %s" % (path, exc)) from exc
    return entries


def _parse_float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError("config key %s: bad number %r" % (key, text)) from exc


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    entries = _load_config_file(args.config) if args.config is not None else {}
    for key, value in entries.items():
        if key == "epsilon":
            cfg.epsilon = _parse_float(key, value)
        elif key == "m":
            cfg.m = _parse_float(key, value)
        elif key == "grid":
            try:
                cfg.grid_resolution = int(value)
            except ValueError as exc:
                raise ConfigError("config key grid: bad integer %r" % (value,)) from exc
        elif key == "format":
            cfg.output_format = value
        elif key == "out":
            cfg.output_path = value
        elif key == "c.default":
            cfg.default_constant = _parse_float(key, value)
        elif key.startswith("c."):
            parts = key.split(".")
            if len(parts) != 3:
                raise ConfigError(
                    "config key %r: error constants use c.<n>.<k>" % (key,)
                )
            try:
                n, k = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise ConfigError(
                    "config key %r: n and k must be integers" % (key,)
                ) from exc
            cfg.error_constants[(n, k)] = _parse_float(key, value)
        else:
            raise ConfigError("unknown config key %r" % (key,))
    if args.format is not None:
        cfg.output_format = args.format
    elif "format" not in entries and args.command == "diagram":
        cfg.output_format = "svg"
    if args.epsilon is not None:
        cfg.epsilon = args.epsilon
    if args.m is not None:
        cfg.m = args.m
    if args.grid is not None:
        cfg.grid_resolution = args.grid
    if args.out is not None:
        cfg.output_path = args.out
    if args.error_constant is not None:
        if args.error_constant < 0.0:
            raise ConfigError(
                "--error-constant must be non-negative, got %r"
                % (args.error_constant,)
            )
        cfg.default_constant = args.error_constant
        cfg.error_constants = {}
    cfg.validate()
    return cfg


def _emit(text: str, config: RunConfig) -> None:
    if config.output_path is None or config.output_path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(config.output_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ConfigError(
            "cannot write output file %s: %s" % (config.output_path, exc)
        ) from exc


def _csv(header: str, rows: list[str]) -> str:
    return "\n".join([header] + rows) + "\n"


def _json_doc(config: RunConfig, rows: list[dict], uncertified: bool | None = None) -> str:
    meta: dict = {
        "epsilon": _jnum(config.epsilon),
        "m": _jnum(config.m),
        "gamma": _jnum(config.gamma),
        "grid": config.grid_resolution,
    }
    if uncertified is not None:
        meta["uncertified"] = uncertified
    return json.dumps({"meta": meta, "rows": rows}, indent=1) + "\n"


def _warn_uncertified(config: RunConfig, modes: list[ModeIndex]) -> bool:
    uncertified = any(config.constant_for(m) == 0.0 for m in modes)
    if uncertified:
        print(
            "note: error constant C = 0 for some modes; pads are uncertified",
            file=sys.stderr,
        )
    return uncertified


def _reject_svg(config: RunConfig) -> None:
    if config.output_format == "svg":
        raise ConfigError("format svg is only available for the diagram command")


# ---------------------------------------------------------------- commands


def cmd_zeros(n_max: int, k_max: int, config: RunConfig) -> int:
    if n_max < 0 or k_max < 1:
        raise ConfigError(
            "need n_max >= 0 and k_max >= 1, got (%r, %r)" % (n_max, k_max)
        )
    _reject_svg(config)
    triples = [
        (n, k, bessel_zero(n, k).value)
        for n in range(n_max + 1)
        for k in range(1, k_max + 1)
    ]
    if config.output_format == "json":
        rows = [{"n": n, "k": k, "j": _jnum(j)} for n, k, j in triples]
        _emit(_json_doc(config, rows), config)
    else:
        lines = ["%d,%d,%s" % (n, k, _fmt(j)) for n, k, j in triples]
        _emit(_csv("n,k,j", lines), config)
    return EXIT_OK


def cmd_spectrum(count: int, config: RunConfig) -> int:
    if count < 1:
        raise ConfigError("count must be >= 1, got %r" % (count,))
    _reject_svg(config)
    pairs = enumerate_spectrum(count)
    if config.output_format == "json":
        rows = [
            {
                "n": p.mode.n,
                "k": p.mode.k,
                "parity": p.mode.parity.value,
                "lambda0": _jnum(p.lambda0),
            }
            for p in pairs
        ]
        _emit(_json_doc(config, rows), config)
    else:
        lines = [
            "%d,%d,%s,%s" % (p.mode.n, p.mode.k, p.mode.parity.value, _fmt(p.lambda0))
            for p in pairs
        ]
        _emit(_csv("n,k,parity,lambda0", lines), config)
    return EXIT_OK


def _band_rows(count: int, config: RunConfig) -> list[dict]:
    rows = []
    for pair in enumerate_spectrum(count):
        m = pair.mode
        params = config.params_for(m)
        interval = band_interval(m, params, config.grid_resolution)
        if interval.undetermined:
            length = None
        else:
            corr = correction_for(m)
            lam1_lo = corr.lambda1_at(interval.extrema_eta[0])
            lam1_hi = corr.lambda1_at(interval.extrema_eta[1])
            length = params.first_order_scale * (lam1_hi - lam1_lo)
            _check_band_length(m, params, length)
        rows.append(
            {
                "n": m.n,
                "k": m.k,
                "parity": m.parity.value,
                "lower": interval.lower,
                "upper": interval.upper,
                "length": length,
                "pad": interval.pad,
                "undetermined": interval.undetermined,
                "eta_min": interval.extrema_eta[0],
                "eta_max": interval.extrema_eta[1],
            }
        )
    return rows


def _check_band_length(m: ModeIndex, params: ExpansionParams, length: float) -> None:
    # the grid route must reproduce the closed-form leading width
    branch = correction_for(m).branch
    if branch is Branch.COSINE:
        if abs(length) > 1e-12:
            raise InternalConsistencyError(
                "flat branch %s reported nonzero first-order length %r"
                % (m.label(), length)
            )
        return
    expected = band_length(m, params).leading
    if expected is None:
        return
    if abs(length - expected) > 1e-8 * abs(expected):
        raise InternalConsistencyError(
            "band length mismatch for %s: swept %r vs closed form %r"
            % (m.label(), length, expected)
        )


def cmd_bands(count: int, config: RunConfig) -> int:
    if count < 1:
        raise ConfigError("count must be >= 1, got %r" % (count,))
    _reject_svg(config)
    rows = _band_rows(count, config)
    uncertified = _warn_uncertified(
        config, [ModeIndex(r["n"], r["k"], Parity(r["parity"])) for r in rows]
    )
    if config.output_format == "json":
        jrows = []
        for r in rows:
            jrows.append(
                {
                    "n": r["n"],
                    "k": r["k"],
                    "parity": r["parity"],
                    "lower": _jnum(r["lower"]),
                    "upper": _jnum(r["upper"]),
                    "length": None if r["length"] is None else _jnum(r["length"]),
                    "pad": _jnum(r["pad"]),
                    "undetermined": r["undetermined"],
                    "eta_min": [_jnum(r["eta_min"].eta1), _jnum(r["eta_min"].eta2)],
                    "eta_max": [_jnum(r["eta_max"].eta1), _jnum(r["eta_max"].eta2)],
                }
            )
        _emit(_json_doc(config, jrows, uncertified), config)
    else:
        lines = []
        for r in rows:
            lines.append(
                "%d,%d,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s"
                % (
                    r["n"],
                    r["k"],
                    r["parity"],
                    _fmt(r["lower"]),
                    _fmt(r["upper"]),
                    "" if r["length"] is None else _fmt(r["length"]),
                    _fmt(r["pad"]),
                    "true" if r["undetermined"] else "false",
                    _fmt(r["eta_min"].eta1),
                    _fmt(r["eta_min"].eta2),
                    _fmt(r["eta_max"].eta1),
                    _fmt(r["eta_max"].eta2),
                )
            )
        header = (
            "n,k,parity,lower,upper,length,pad,undetermined,"
            "eta_min_1,eta_min_2,eta_max_1,eta_max_2"
        )
        _emit(_csv(header, lines), config)
    return EXIT_OK


def cmd_gaps(count: int, config: RunConfig) -> int:
    if count < 2:
        raise ConfigError("count must be >= 2, got %r" % (count,))
    _reject_svg(config)
    reports = detect_gaps(
        count,
        config.params(),
        config.grid_resolution,
        error_constants=config.error_constants or None,
    )
    modes = [r.below for r in reports] + [reports[-1].above]
    uncertified = _warn_uncertified(config, modes)
    if config.output_format == "json":
        rows = [
            {
                "below": {"n": r.below.n, "k": r.below.k, "parity": r.below.parity.value},
                "above": {"n": r.above.n, "k": r.above.k, "parity": r.above.parity.value},
                "gap_lower": _jnum(r.gap_lower),
                "gap_upper": _jnum(r.gap_upper),
                "certified": r.certified,
                "reason": r.reason,
            }
            for r in reports
        ]
        _emit(_json_doc(config, rows, uncertified), config)
    else:
        lines = [
            "%d,%d,%s,%d,%d,%s,%s,%s,%s,%s"
            % (
                r.below.n,
                r.below.k,
                r.below.parity.value,
                r.above.n,
                r.above.k,
                r.above.parity.value,
                _fmt(r.gap_lower),
                _fmt(r.gap_upper),
                "true" if r.certified else "false",
                r.reason or "",
            )
            for r in reports
        ]
        header = (
            "below_n,below_k,below_parity,above_n,above_k,above_parity,"
            "gap_lower,gap_upper,certified,reason"
        )
        _emit(_csv(header, lines), config)
    return EXIT_OK


def _render_svg(rows: list[dict], reports, uncertified: bool) -> str:
    width, height = 460, 640
    top, bottom, band_x, band_w = 50, 600, 170, 60
    lo = min(r["lower"] for r in rows)
    hi = max(r["upper"] for r in rows)
    span = (hi - lo) or 1.0
    lo -= 0.03 * span
    hi += 0.03 * span

    def ypos(v: float) -> float:
        return bottom - (v - lo) / (hi - lo) * (bottom - top)

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(width),
            "height": str(height),
            "viewBox": "0 0 %d %d" % (width, height),
        },
    )
    defs = ET.SubElement(root, "defs")
    pattern = ET.SubElement(
        defs,
        "pattern",
        {
            "id": "hatch",
            "patternUnits": "userSpaceOnUse",
            "width": "6",
            "height": "6",
        },
    )
    ET.SubElement(
        pattern,
        "path",
        {"d": "M0,6 L6,0", "stroke": "#666666", "stroke-width": "1"},
    )
    # spectral axis with end labels
    ET.SubElement(
        root,
        "line",
        {
            "x1": "120",
            "y1": "%.2f" % ypos(lo),
            "x2": "120",
            "y2": "%.2f" % ypos(hi),
            "stroke": "#000000",
            "stroke-width": "1",
        },
    )
    for value in (min(r["lower"] for r in rows), max(r["upper"] for r in rows)):
        tick = ET.SubElement(
            root,
            "text",
            {"x": "112", "y": "%.2f" % (ypos(value) + 4), "font-size": "11",
             "text-anchor": "end"},
        )
        tick.text = _fmt(value)
    for r in rows:
        y_hi = ypos(r["upper"])
        y_lo = ypos(r["lower"])
        ET.SubElement(
            root,
            "rect",
            {
                "class": "band band-undetermined" if r["undetermined"] else "band",
                "x": str(band_x),
                "y": "%.2f" % y_hi,
                "width": str(band_w),
                "height": "%.2f" % max(y_lo - y_hi, 0.75),
                "fill": "url(#hatch)" if r["undetermined"] else "#4477aa",
                "stroke": "#223355",
                "stroke-width": "0.6",
            },
        )
        label = ET.SubElement(
            root,
            "text",
            {
                "x": str(band_x + band_w + 8),
                "y": "%.2f" % (0.5 * (y_lo + y_hi) + 4),
                "font-size": "11",
            },
        )
        label.text = "%d,%d,%s" % (r["n"], r["k"], r["parity"])
    for rep in reports:
        if not rep.certified:
            continue
        y1 = ypos(rep.gap_lower)
        y2 = ypos(rep.gap_upper)
        ET.SubElement(
            root,
            "line",
            {
                "class": "gap",
                "x1": str(band_x - 14),
                "y1": "%.2f" % y1,
                "x2": str(band_x - 14),
                "y2": "%.2f" % y2,
                "stroke": "#aa3322",
                "stroke-width": "2",
            },
        )
        note = ET.SubElement(
            root,
            "text",
            {
                "x": str(band_x - 20),
                "y": "%.2f" % (0.5 * (y1 + y2) + 4),
                "font-size": "10",
                "text-anchor": "end",
                "fill": "#aa3322",
            },
        )
        note.text = "gap %g..%g" % (_jnum(rep.gap_lower), _jnum(rep.gap_upper))
    if uncertified:
        warn = ET.SubElement(
            root,
            "text",
            {"x": "16", "y": "24", "font-size": "12", "fill": "#aa3322"},
        )
        warn.text = "uncertified pads (error constant 0 for some modes)"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        + ET.tostring(root, encoding="unicode")
        + "\n"
    )


def cmd_diagram(count: int, config: RunConfig) -> int:
    if count < 1:
        raise ConfigError("count must be >= 1, got %r" % (count,))
    rows = _band_rows(count, config)
    modes = [ModeIndex(r["n"], r["k"], Parity(r["parity"])) for r in rows]
    uncertified = _warn_uncertified(config, modes)
    reports = (
        detect_gaps(
            count,
            config.params(),
            config.grid_resolution,
            error_constants=config.error_constants or None,
        )
        if count >= 2
        else []
    )
    if config.output_format == "svg":
        _emit(_render_svg(rows, reports, uncertified), config)
        return EXIT_OK
    if config.output_format == "json":
        jrows = [
            {
                "n": m.n,
                "k": m.k,
                "parity": m.parity.value,
                "samples": [
                    {
                        "eta1": _jnum(pt.eta1),
                        "eta2": _jnum(pt.eta2),
                        "value": _jnum(v),
                    }
                    for pt, v in brillouin_sweep(
                        m, config.params_for(m), config.grid_resolution
                    )
                ],
            }
            for m in modes
        ]
        _emit(_json_doc(config, jrows, uncertified), config)
        return EXIT_OK
    lines = []
    for m in modes:
        for pt, v in brillouin_sweep(m, config.params_for(m), config.grid_resolution):
            lines.append(
                "%d,%d,%s,%s,%s,%s"
                % (m.n, m.k, m.parity.value, _fmt(pt.eta1), _fmt(pt.eta2), _fmt(v))
            )
    _emit(_csv("n,k,parity,eta1,eta2,value", lines), config)
    return EXIT_OK


# ----------------------------------------------------------------- verify


def _verify_checks(config: RunConfig):
    # each check yields (name, passed, detail)
    checks = []

    worst = 0.0
    for n in range(0, 9):
        for k in range(1, 6):
            z = bessel_zero(n, k)
            worst = max(worst, abs(bessel_j(n, z.value)))
    checks.append(("bessel-zero-residual", worst <= 1e-12, "max |J_n(j)| = %.3g" % worst))

    mesh = RadialMesh(512)
    worst = 0.0
    for n in (0, 1, 2):
        values = disk_dirichlet_eigenvalues(n, 2, mesh, verify_convergence=True)
        for k, fd in enumerate(values, start=1):
            z = bessel_zero(n, k).value
            exact = 4.0 * z * z
            worst = max(worst, abs(fd - exact) / exact)
    checks.append(
        ("disk-fd-eigenvalues", worst <= 1e-3, "max relative error = %.3g" % worst)
    )

    ratios = []
    for n in (0, 1, 2):
        ratios.extend(convergence_ratios(n, 2, mesh))
    ok = all(3.5 <= r <= 4.5 for r in ratios)
    checks.append(
        (
            "disk-fd-convergence",
            ok,
            "error ratios under mesh doubling: %s"
            % ", ".join("%.2f" % r for r in ratios),
        )
    )

    etas = [FloquetPoint(a, b) for a in _VERIFY_AXIS for b in _VERIFY_AXIS]
    worst = 0.0
    for n in range(0, 5):
        for k in (1, 2):
            for eta in etas:
                if n == 0:
                    closed = complex(c0_simple(k, eta))
                    numeric = c0_quadrature(
                        ModeIndex(0, k, Parity.SIMPLE), eta, 1.0, 0.0
                    )
                    worst = max(worst, abs(closed - numeric))
                else:
                    m = ModeIndex(n, k, Parity.COSINE)
                    for cc, cs in ((1.0, 0.0), (0.0, 1.0)):
                        closed = c0_multiple(n, k, eta, cc, cs)
                        numeric = c0_quadrature(m, eta, cc, cs)
                        worst = max(worst, abs(closed - numeric))
    checks.append(
        ("c0-closed-vs-quadrature", worst <= 1e-8, "max |difference| = %.3g" % worst)
    )

    worst = 0.0
    for n in (1, 2, 3):
        for k in (1, 2):
            for eta in etas:
                tr = correction_matrix(n, k, eta).trace()
                closed = lambda1_multiple(n, k, eta).sine
                worst = max(worst, abs(tr - closed))
    checks.append(
        ("correction-trace-vs-quadrature", worst <= 1e-8, "max |difference| = %.3g" % worst)
    )

    err = abs(boundary_arc_length() - math.pi)
    checks.append(("boundary-arc-length", err <= 1e-12, "|integral - pi| = %.3g" % err))

    params = ExpansionParams(config.epsilon, config.m, 0.0)
    worst = 0.0
    for pair in enumerate_spectrum(10):
        m = pair.mode
        if m.n % 4 == 0 and m.n > 0:
            continue
        if m.n > 0 and m.parity is Parity.COSINE:
            continue
        swept = swept_band_width(m.n, m.k, params, config.grid_resolution)
        closed = band_length(m, params).leading
        worst = max(worst, abs(swept - closed) / abs(closed))
    checks.append(
        ("band-length-closed-vs-sweep", worst <= 1e-8, "max relative error = %.3g" % worst)
    )
    return checks


_VERIFY_AXIS = (-math.pi, -math.pi / 2, 0.0, math.pi / 2, math.pi)


def cmd_verify(config: RunConfig) -> int:
    checks = _verify_checks(config)
    lines = []
    for name, passed, detail in checks:
        lines.append("%s %s: %s" % ("PASS" if passed else "FAIL", name, detail))
    _emit("\n".join(lines) + "\n", config)
    failing = [name for name, passed, _ in checks if not passed]
    if failing:
        print("verify failed: %s" % failing[0], file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


# ------------------------------------------------------------------- main


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _add_common_flags(parser: argparse.ArgumentParser, default) -> None:
    # the same flags hang off the main parser and every subcommand; the
    # subcommand copies use SUPPRESS so an absent flag does not clobber a
    # value parsed before the subcommand name
    parser.add_argument("--epsilon", type=float, default=default, help="small parameter (default 1e-3)")
    parser.add_argument("--m", type=float, default=default, help="density exponent in (0, 1/2) (default 0.25)")
    parser.add_argument("--grid", type=int, default=default, help="eta grid resolution per axis (default 33)")
    parser.add_argument("--format", choices=list(_FORMATS), default=default, help="output format (default csv; diagram defaults to svg)")
    parser.add_argument("--out", default=default, help="output file (default stdout)")
    parser.add_argument("--config", default=default, help="key=value config file; flags override it")
    parser.add_argument("--error-constant", type=float, default=default, help="error pad constant C for every mode (default 0: uncertified)")


def _build_parser() -> _Parser:
    common_main = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common_main, None)
    common_sub = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common_sub, argparse.SUPPRESS)

    parser = _Parser(
        prog="diskbands", description=__doc__.splitlines()[0], parents=[common_main]
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("zeros", parents=[common_sub], help="table of Bessel zeros j_{n,k}")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-max", type=int, default=5)
    p = sub.add_parser("spectrum", parents=[common_sub], help="leading limit eigenvalues in order")
    p.add_argument("--count", type=int, default=10)
    p = sub.add_parser("bands", parents=[common_sub], help="band intervals with pads and lengths")
    p.add_argument("--count", type=int, default=10)
    p = sub.add_parser("gaps", parents=[common_sub], help="gap reports for adjacent band pairs")
    p.add_argument("--count", type=int, default=10)
    p = sub.add_parser("diagram", parents=[common_sub], help="band diagram (SVG) or sweep samples")
    p.add_argument("--count", type=int, default=10)
    sub.add_parser("verify", parents=[common_sub], help="run the numerical cross-check suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        config = _resolve_config(args)
        if args.command == "zeros":
            return cmd_zeros(args.n_max, args.k_max, config)
        if args.command == "spectrum":
            return cmd_spectrum(args.count, config)
        if args.command == "bands":
            return cmd_bands(args.count, config)
        if args.command == "gaps":
            return cmd_gaps(args.count, config)
        if args.command == "diagram":
            return cmd_diagram(args.count, config)
        return cmd_verify(config)
    except (ConfigError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ZeroFindingError, OracleConvergenceError, QuadratureConvergenceError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return EXIT_NUMERICAL
    except InternalConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
