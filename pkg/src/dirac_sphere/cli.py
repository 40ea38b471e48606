"""Command-line interface: config ingestion, dispatch, CSV/JSON emission.

Commands: spectrum, potential, wavefunction, verify, figures.  A single JSON
config document drives each run; unknown keys are rejected so typos in
physics parameters cannot pass silently.  Exit codes: 0 ok, 1 config error,
2 non-physical parameter construction, 3 strict verification failure.

All files are written atomically (temp + rename), with LF line endings and
'.' decimal points; curve files are two-column CSV, reports are JSON.  The
default output directory comes from --out, then the config, then the
DIRAC_SPHERE_OUT environment variable, then the working directory.
"""
import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    ConfigError,
    DiracSphereError,
    PoleError,
)
from .gauge import (
    BRANCH_LABELS,
    Model1Params,
    Model2Params,
    a_u_model1,
    a_u_model2,
    alpha_beta,
    model2_derive_params,
    v_eff_model1,
    v_eff_model2,
)
from .oracle import Grid, consistency_report
from .spectra import (
    classify_levels_model1,
    energy_model2,
    wavefn_model1,
    wavefn_model2,
)

__all__ = ["RunConfig", "load_config", "main"]

_DEFAULT_GRID = {"L": 12.0, "N": 4001}
_FIGURE_GRID = {"L": 6.0, "N": 1201}


@dataclass
class RunConfig:
    """Validated run configuration; see README for the JSON schema."""

    model: int
    R: float
    k: float
    levels: int = 4
    grid_L: float = _DEFAULT_GRID["L"]
    grid_N: int = _DEFAULT_GRID["N"]
    C1: float = 0.0
    branch: Optional[str] = None  # model 1
    sign_a: str = "-"  # model 2
    sign_b: str = "+"
    alpha: Optional[float] = None
    beta: Optional[float] = None
    out: Optional[str] = None
    strict: bool = False
    corrupt_forced: bool = False

    def grid(self):
        return Grid(self.grid_L, int(self.grid_N))

    def model1_params(self):
        if self.model != 1:
            raise ConfigError("model-1 parameters requested from a model-2 config")
        return Model1Params.from_branch(self.C1, self.k, self.branch)

    def model2_params(self):
        if self.model != 2:
            raise ConfigError("model-2 parameters requested from a model-1 config")
        if self.alpha is not None and self.beta is not None:
            al, be = self.alpha, self.beta
        else:
            al, be = alpha_beta(self.k, self.sign_a, self.sign_b)
        return model2_derive_params(self.C1, be - al, be + al, self.k)

    def echo(self):
        """Physics fields only, for deterministic report provenance."""
        base = {
            "model": self.model,
            "R": self.R,
            "k": self.k,
            "levels": self.levels,
            "grid": {"L": self.grid_L, "N": self.grid_N},
        }
        if self.model == 1:
            base["model1"] = {"C1": self.C1, "branch": self.branch}
        else:
            block = {"C1": self.C1}
            if self.alpha is not None and self.beta is not None:
                block["alpha"] = self.alpha
                block["beta"] = self.beta
            else:
                block["sign_a"] = self.sign_a
                block["sign_b"] = self.sign_b
            base["model2"] = block
        return base


def _require(doc, key, kind, where):
    if key not in doc:
        raise ConfigError(f"missing required key {where}{key}")
    val = doc[key]
    if kind is float:
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            raise ConfigError(f"{where}{key} must be a number, got {val!r}")
        val = float(val)
        if not math.isfinite(val):
            raise ConfigError(f"{where}{key} must be finite, got {val!r}")
        return val
    if kind is int:
        if isinstance(val, bool) or not isinstance(val, int):
            raise ConfigError(f"{where}{key} must be an integer, got {val!r}")
        return val
    return val


def _reject_unknown(doc, allowed, where):
    for key in doc:
        if key not in allowed:
            raise ConfigError(f"unknown key {where}{key}")


def parse_config(doc) -> RunConfig:
    """Validate a decoded JSON document into a RunConfig."""
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    _reject_unknown(
        doc,
        {"model", "R", "k", "levels", "grid", "model1", "model2", "out", "strict",
         "corrupt_forced"},
        "",
    )
    model = _require(doc, "model", int, "")
    if model not in (1, 2):
        raise ConfigError(f"model must be 1 or 2, got {model}")
    r = _require(doc, "R", float, "")
    if r <= 0:
        raise ConfigError(f"R must be positive, got {r}")
    k = _require(doc, "k", float, "")
    cfg = RunConfig(model=model, R=r, k=k)
    if "levels" in doc:
        cfg.levels = _require(doc, "levels", int, "")
        if cfg.levels < 1:
            raise ConfigError(f"levels must be >= 1, got {cfg.levels}")
    if "grid" in doc:
        g = doc["grid"]
        if not isinstance(g, dict):
            raise ConfigError("grid must be an object with keys L and N")
        _reject_unknown(g, {"L", "N"}, "grid.")
        cfg.grid_L = _require(g, "L", float, "grid.")
        cfg.grid_N = _require(g, "N", int, "grid.")
        if cfg.grid_L <= 0 or cfg.grid_N < 3:
            raise ConfigError("grid needs L > 0 and N >= 3")
    if "out" in doc:
        if not isinstance(doc["out"], str):
            raise ConfigError("out must be a string path")
        cfg.out = doc["out"]
    if "strict" in doc:
        if not isinstance(doc["strict"], bool):
            raise ConfigError("strict must be a boolean")
        cfg.strict = doc["strict"]
    if "corrupt_forced" in doc:
        if not isinstance(doc["corrupt_forced"], bool):
            raise ConfigError("corrupt_forced must be a boolean")
        cfg.corrupt_forced = doc["corrupt_forced"]

    if model == 1:
        if "model2" in doc:
            raise ConfigError("model-1 config must not carry a model2 block")
        block = doc.get("model1")
        if not isinstance(block, dict):
            raise ConfigError("model-1 config needs a model1 object")
        _reject_unknown(block, {"C1", "branch"}, "model1.")
        cfg.C1 = _require(block, "C1", float, "model1.")
        branch = _require(block, "branch", str, "model1.")
        if branch not in BRANCH_LABELS:
            raise ConfigError(
                f"model1.branch must be one of {sorted(BRANCH_LABELS)}, got {branch!r}"
            )
        cfg.branch = branch
    else:
        if "model1" in doc:
            raise ConfigError("model-2 config must not carry a model1 block")
        block = doc.get("model2")
        if not isinstance(block, dict):
            raise ConfigError("model-2 config needs a model2 object")
        _reject_unknown(block, {"C1", "sign_a", "sign_b", "alpha", "beta"}, "model2.")
        has_ab = "alpha" in block or "beta" in block
        if has_ab:
            if not ("alpha" in block and "beta" in block):
                raise ConfigError("model2 needs both alpha and beta when either is given")
            if "sign_a" in block or "sign_b" in block:
                raise ConfigError("model2 takes either alpha/beta or sign_a/sign_b, not both")
            cfg.alpha = _require(block, "alpha", float, "model2.")
            cfg.beta = _require(block, "beta", float, "model2.")
        else:
            for key in ("sign_a", "sign_b"):
                if key in block:
                    val = block[key]
                    if val not in ("+", "-"):
                        raise ConfigError(f"model2.{key} must be '+' or '-', got {val!r}")
                    setattr(cfg, key, val)
        if "C1" in block:
            cfg.C1 = _require(block, "C1", float, "model2.")
        else:
            if k == 0:
                raise ConfigError("model2.C1 is required when k = 0")
            cfg.C1 = 1.0 / k  # the value at which the solvable identity closes
    return cfg


def load_config(path) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON (line {exc.lineno}): {exc.msg}") from exc
    return parse_config(doc)


def _atomic_write(path, text):
    d = os.path.dirname(path) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=d)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return repr(float(x))


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(c) for c in row))
    _atomic_write(path, "\n".join(lines) + "\n")


def _resolve_out(cfg: Optional[RunConfig], cli_out):
    if cli_out:
        return cli_out
    if cfg is not None and cfg.out:
        return cfg.out
    return os.environ.get("DIRAC_SPHERE_OUT", ".")


def _spectrum_rows(cfg: RunConfig):
    rows = []
    if cfg.model == 1:
        lines = classify_levels_model1(
            cfg.model1_params(), cfg.k, cfg.R, cfg.levels - 1
        )
    else:
        p = cfg.model2_params()
        lines = [
            energy_model2(m, p.alpha, p.beta, cfg.k, cfg.R) for m in range(cfg.levels)
        ]
    for ln in lines:
        rows.append(
            [
                ln.level,
                _fmt(ln.E_sq_bar),
                _fmt(ln.E_minus) if ln.E_minus is not None else "nan",
                _fmt(ln.E_plus) if ln.E_plus is not None else "nan",
                "true" if ln.physical else "false",
                ln.reason or "",
            ]
        )
    return rows


def cmd_spectrum(cfg: RunConfig, outdir):
    path = os.path.join(outdir, "spectrum.csv")
    _write_csv(
        path,
        ["level", "E_sq_bar", "E_minus", "E_plus", "physical", "reason"],
        _spectrum_rows(cfg),
    )
    return [path]


def _curve(cfg: RunConfig, which):
    """Sampled curve (w, value) plus pole locations for gap markers."""
    grid = cfg.grid()
    w = grid.points()
    poles = ()
    if cfg.model == 1:
        p = cfg.model1_params()
        if which == "A_u":
            fn = a_u_model1(p)
        elif which in ("Veff1", "Veff2"):
            fn = v_eff_model1(p, cfg.k, 1 if which == "Veff1" else 2).fn
        else:
            raise ConfigError(f"unknown curve {which!r}; choose A_u, Veff1 or Veff2")
    else:
        p = cfg.model2_params()
        w0 = p.pole_w()
        poles = (w0,) if w0 is not None else ()
        if which == "A_u":
            fn = a_u_model2(p)
        elif which in ("Veff1", "Veff2"):
            fn = v_eff_model2(p, 1 if which == "Veff1" else 2).fn
        else:
            raise ConfigError(f"unknown curve {which!r}; choose A_u, Veff1 or Veff2")
    try:
        vals = np.asarray(fn(w), dtype=float)
    except PoleError:
        vals = np.empty_like(w)
        for i, wi in enumerate(w):
            try:
                vals[i] = fn(wi)
            except PoleError:
                vals[i] = math.nan
    return w, vals, tuple(p0 for p0 in poles if abs(p0) <= grid.L)


def cmd_potential(cfg: RunConfig, which, outdir):
    w, vals, poles = _curve(cfg, which)
    rows = [[_fmt(wi), _fmt(vi)] for wi, vi in zip(w, vals)]
    for w0 in poles:  # gap marker row at each pole, kept in sorted order
        rows.append([_fmt(w0), "nan"])
    rows.sort(key=lambda r: float(r[0]))
    stem = which.lower()
    path = os.path.join(outdir, f"potential_{stem}.csv")
    _write_csv(path, ["w", "value"], rows)
    written = [path]
    if poles:
        side = os.path.join(outdir, f"potential_{stem}_poles.json")
        _atomic_write(
            side,
            json.dumps({"poles_w": [float(p0) for p0 in poles]}, indent=2) + "\n",
        )
        written.append(side)
    return written


def cmd_wavefunction(cfg: RunConfig, level, polynomial, outdir):
    grid = cfg.grid()
    w = grid.points()
    if cfg.model == 1:
        wf = wavefn_model1(level, cfg.model1_params(), cfg.k)
        name = f"wavefunction_l{level}.csv"
    else:
        p = cfg.model2_params()
        wf = wavefn_model2(level, p.alpha, p.beta, polynomial=polynomial)
        name = f"wavefunction_l{level}_{polynomial}.csv"
    vals = np.asarray(wf.eval(w), dtype=float)
    path = os.path.join(outdir, name)
    _write_csv(path, ["w", "value"], [[_fmt(a), _fmt(b)] for a, b in zip(w, vals)])
    return [path]


_REPORT_SCHEMA = "dirac-sphere-verification/1"


def cmd_verify(cfg: RunConfig, outdir):
    params = cfg.model1_params() if cfg.model == 1 else cfg.model2_params()
    report = consistency_report(
        cfg.model,
        params,
        cfg.k,
        cfg.R,
        cfg.grid(),
        levels=cfg.levels,
        corrupt_forced=cfg.corrupt_forced,
    )
    doc = {"schema": _REPORT_SCHEMA, "config": cfg.echo(), "report": report.as_dict()}
    path = os.path.join(outdir, f"verify_model{cfg.model}.json")
    _atomic_write(path, json.dumps(doc, indent=2, allow_nan=True) + "\n")
    failures = report.forced_failures()
    if cfg.strict and failures:
        ids = ", ".join(c.claim_id for c in failures)
        print(f"strict mode: forced claim(s) failed: {ids}", file=sys.stderr)
        return [path], 3
    return [path], 0


def _fig1_config(overrides):
    doc = {
        "model": 1,
        "R": 1.0,
        "k": 2.0,
        "levels": 6,
        "grid": dict(_FIGURE_GRID),
        "model1": {"C1": 0.4, "branch": "half-up"},
    }
    doc.update(overrides)
    return parse_config(doc)


def _fig2_config(overrides):
    doc = {
        "model": 2,
        "R": 1.0,
        "k": 2.0,
        "levels": 6,
        "grid": dict(_FIGURE_GRID),
        "model2": {"sign_a": "-", "sign_b": "+"},
    }
    doc.update(overrides)
    return parse_config(doc)


_FIG2_NOTE = """Data behind the second figure set.

The published caption for this figure states no parameter values.  The files
here use the documented defaults: k = 2, the nonsingular branch with
alpha = 1, beta = 1/3 (signs -, +), C1 = 1/k = 0.5, R = 1.  They are a
reasonable reconstruction, not a reproduction.
"""


def cmd_figures(which, overrides, outdir):
    written = []
    if which == "fig1":
        cfg = _fig1_config(overrides)
        d = os.path.join(outdir, "fig1")
        for curve, stem in (("A_u", "a_u"), ("Veff1", "veff1"), ("Veff2", "veff2")):
            w, vals, _ = _curve(cfg, curve)
            path = os.path.join(d, f"{stem}.csv")
            _write_csv(path, ["w", "value"], [[_fmt(a), _fmt(b)] for a, b in zip(w, vals)])
            written.append(path)
        # spectrum panel is drawn at large wave number
        spec_cfg = _fig1_config(dict(overrides, k=200.0))
        path = os.path.join(d, "spectrum.csv")
        _write_csv(
            path,
            ["level", "E_sq_bar", "E_minus", "E_plus", "physical", "reason"],
            _spectrum_rows(spec_cfg),
        )
        written.append(path)
    elif which == "fig2":
        cfg = _fig2_config(overrides)
        d = os.path.join(outdir, "fig2")
        for curve, stem in (("A_u", "a_u"), ("Veff1", "veff1"), ("Veff2", "veff2")):
            w, vals, _ = _curve(cfg, curve)
            path = os.path.join(d, f"{stem}.csv")
            _write_csv(path, ["w", "value"], [[_fmt(a), _fmt(b)] for a, b in zip(w, vals)])
            written.append(path)
        path = os.path.join(d, "spectrum.csv")
        _write_csv(
            path,
            ["level", "E_sq_bar", "E_minus", "E_plus", "physical", "reason"],
            _spectrum_rows(cfg),
        )
        written.append(path)
        note = os.path.join(d, "provenance.txt")
        _atomic_write(note, _FIG2_NOTE)
        written.append(note)
    else:
        raise ConfigError(f"figures takes fig1 or fig2, got {which!r}")
    return written


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _add_common(sp):
    sp.add_argument("--config", help="path to the JSON run configuration")
    sp.add_argument("--out", help="output directory (overrides config and environment)")
    sp.add_argument("--k", type=float, help="override the wave number")
    sp.add_argument("--levels", type=int, help="override the level count")
    sp.add_argument("--grid-L", type=float, dest="grid_L", help="override the grid half-width")
    sp.add_argument("--grid-N", type=int, dest="grid_N", help="override the interior point count")
    sp.add_argument("--strict", action="store_true", help="fail (exit 3) if a forced claim fails")


def _apply_overrides(cfg: RunConfig, args):
    if args.k is not None:
        cfg.k = args.k
        if cfg.model == 2 and cfg.alpha is None:
            # re-derive branch parameters for the new wave number
            if cfg.k == 0:
                raise ConfigError("cannot override k to 0 for a sign-branch model-2 config")
            cfg.C1 = 1.0 / cfg.k
    if args.levels is not None:
        if args.levels < 1:
            raise ConfigError("levels must be >= 1")
        cfg.levels = args.levels
    if args.grid_L is not None:
        cfg.grid_L = args.grid_L
    if args.grid_N is not None:
        cfg.grid_N = args.grid_N
    if args.strict:
        cfg.strict = True
    return cfg


def _load_required_config(args):
    if not args.config:
        raise ConfigError("--config is required for this command")
    return _apply_overrides(load_config(args.config), args)


def main(argv=None):
    parser = _Parser(prog="dirac-sphere", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="emit the closed-form level table")
    _add_common(sp)

    sp = sub.add_parser("potential", help="emit a sampled curve of A_u or an effective potential")
    _add_common(sp)
    sp.add_argument("--which", choices=["A_u", "Veff1", "Veff2"], default="Veff1")

    sp = sub.add_parser("wavefunction", help="emit grid samples of a closed-form eigenfunction")
    _add_common(sp)
    sp.add_argument("--level", type=int, default=0)
    sp.add_argument("--polynomial", choices=["classical", "x1"], default="classical",
                    help="polynomial interpretation (model 2 only)")

    sp = sub.add_parser("verify", help="run the oracle consistency report")
    _add_common(sp)

    sp = sub.add_parser("figures", help="emit the data behind the published figure sets")
    sp.add_argument("which", choices=["fig1", "fig2"])
    _add_common(sp)

    try:
        args = parser.parse_args(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "figures":
            overrides = {}
            if args.k is not None:
                overrides["k"] = args.k
            if args.levels is not None:
                overrides["levels"] = args.levels
            if args.grid_L is not None or args.grid_N is not None:
                g = dict(_FIGURE_GRID)
                if args.grid_L is not None:
                    g["L"] = args.grid_L
                if args.grid_N is not None:
                    g["N"] = args.grid_N
                overrides["grid"] = g
            cfg = load_config(args.config) if args.config else None
            outdir = _resolve_out(cfg, args.out)
            written = cmd_figures(args.which, overrides, outdir)
            for path in written:
                print(path)
            return 0

        cfg = _load_required_config(args)
        outdir = _resolve_out(cfg, args.out)
        if args.command == "spectrum":
            written = cmd_spectrum(cfg, outdir)
        elif args.command == "potential":
            written = cmd_potential(cfg, args.which, outdir)
        elif args.command == "wavefunction":
            written = cmd_wavefunction(cfg, args.level, args.polynomial, outdir)
        elif args.command == "verify":
            written, code = cmd_verify(cfg, outdir)
            for path in written:
                print(path)
            return code
        else:  # pragma: no cover
            raise ConfigError(f"unknown command {args.command!r}")
        for path in written:
            print(path)
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except DiracSphereError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
