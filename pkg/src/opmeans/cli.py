"""Command-line front end.

Exit codes: 0 when every observation matches what the theory predicts (or
an evaluation succeeded), 1 when an observation contradicts a decided
prediction, 2 for usage or input errors.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path

import click
import numpy as np

from . import __version__, spd
from .descriptors import parse_function
from .errors import OpMeansError
from .functions import (
    derivative_at_one,
    infinity_limit,
    is_self_adjoint,
    is_symmetric,
    is_trivial,
    standard_catalog,
    zero_limit,
)
from .lab.screens import classify_triviality
from .lab.search import check_preservation
from .lab.suites import SUITE_NAMES, run_suite
from .lab.theory import predict_verdict
from .means import AxiomsReport, Mean, check_axioms, mean_matrix
from .reports import PreservationReport, SearchConfig, SuiteReport, Verdict, _jsonable

EXIT_OK, EXIT_CONTRADICTED, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "text")
CSV_HEADER = ("check", "f", "mean", "dim", "trial", "kind", "residual")


class InputError(click.ClickException):
    exit_code = EXIT_USAGE


# ---------------------------------------------------------------------------
# report emission


def _to_obj(report):
    if isinstance(report, (PreservationReport, SuiteReport, AxiomsReport)):
        return report.to_dict()
    return _jsonable(report)


def _preservation_reports(report) -> list[PreservationReport]:
    if isinstance(report, PreservationReport):
        return [report]
    if isinstance(report, AxiomsReport):
        return report.reports()
    if isinstance(report, SuiteReport):
        return [item.report for item in report.items if item.report is not None]
    if isinstance(report, dict) and isinstance(report.get("report"), PreservationReport):
        return [report["report"]]
    return []


def _csv_text(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in _preservation_reports(report):
        for r in rep.records:
            w.writerow([rep.check, rep.f, rep.mean, r.dim, r.trial, r.kind, repr(float(r.residual))])
    return buf.getvalue()


def _matrix_text(a) -> str:
    return np.array2string(np.asarray(a), precision=6, suppress_small=False, max_line_width=120)


def _preservation_text(rep: PreservationReport, indent: str = "") -> list[str]:
    lines = [f"{indent}verdict: {rep.verdict.value}",
             f"{indent}check: {rep.check}  f: {rep.f}  mean: {rep.mean}",
             f"{indent}worst residual: {rep.worst_residual:.6e}  trials run: {rep.trials_run}  seed: {rep.seed}"]
    if rep.witness is not None:
        w = rep.witness
        lines.append(f"{indent}witness ({w.kind}, dim {w.dim}, trial {w.trial}):")
        for label, m in (("A", w.a), ("B", w.b)):
            lines.append(f"{indent}  {label} =")
            lines += [f"{indent}    {row}" for row in _matrix_text(m).splitlines()]
    return lines


def _text(report) -> str:
    lines: list[str] = []
    if isinstance(report, PreservationReport):
        lines = _preservation_text(report)
    elif isinstance(report, AxiomsReport):
        lines.append(f"axioms for {report.mean}: {'PASS' if report.passed else 'FAIL'}")
        for rep in report.reports():
            lines += _preservation_text(rep, "  ")
    elif isinstance(report, SuiteReport):
        lines.append(f"suite {report.name}: {'PASS' if report.passed else 'FAIL'} ({len(report.items)} items)")
        for item in report.items:
            tag = "PASS" if item.passed else "FAIL"
            lines.append(f"{tag} {item.name} | expected: {item.expected} | verdict: {item.observed}")
            if not item.passed and item.report is not None and item.report.witness is not None:
                lines += _preservation_text(item.report, "    ")
    elif isinstance(report, dict) and isinstance(report.get("report"), PreservationReport):
        lines = _preservation_text(report["report"])
        for k in sorted(report):
            if k != "report":
                lines.append(f"{k}: {json.dumps(_jsonable(report[k]), sort_keys=True)}")
    elif isinstance(report, dict) and "text" in report:
        lines = [str(report["text"])]
    else:
        lines = [json.dumps(_jsonable(report), sort_keys=True, indent=2)]
    return "\n".join(lines) + "\n"


def render_report(report, fmt: str = "json") -> str:
    """Serialize ``report`` as json (sorted keys), csv (one row per trial) or text."""
    if fmt == "json":
        obj = _to_obj(report)
        if isinstance(report, dict):
            obj = {k: _to_obj(v) for k, v in report.items() if k != "text"}
        return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        return _csv_text(report)
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(report, fmt: str = "json", path: str | None = None) -> None:
    """Write the rendered report to ``path`` or standard output."""
    text = render_report(report, fmt)
    if path is None or path == "-":
        click.echo(text, nl=False)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write report to {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# parsing helpers


def _function(text: str):
    try:
        return parse_function(text)
    except OpMeansError as exc:
        raise click.BadParameter(str(exc), param_hint=repr(text)) from exc


def _parse_dims(text: str | None):
    if text is None:
        return None
    try:
        dims = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise click.BadParameter(f"dims must be comma-separated integers, got {text!r}", param_hint="--dims") from None
    if not dims or any(d < 1 for d in dims):
        raise click.BadParameter(f"dims must be positive integers, got {text!r}", param_hint="--dims")
    return dims


def _parse_spectrum(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise click.BadParameter(f"spectrum is 'lo,hi', got {text!r}", param_hint="--spectrum") from None
    if not (0 < lo <= hi and math.isfinite(hi)):
        raise click.BadParameter(f"spectrum needs 0 < lo <= hi, got {text!r}", param_hint="--spectrum")
    return lo, hi


def _read_matrix(path: str) -> np.ndarray:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    try:
        return spd.from_exchange(obj)
    except OpMeansError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _config(ctx, direction=None, dims=None, trials=None, seed=None, tol=None, spectrum=None, structured=True):
    g = ctx.obj
    changes = {"seed": g["seed"] if seed is None else seed, "tol": g["tol"] if tol is None else tol,
               "structured": structured}
    if direction is not None:
        changes["direction"] = direction
    if dims is not None:
        changes["dims"] = dims
    if trials is not None:
        changes["trials"] = trials
    if spectrum is not None:
        changes["spectrum_range"] = spectrum
    try:
        return SearchConfig(**changes)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(ctx, report) -> None:
    emit_report(report, ctx.obj["format"], ctx.obj["out"])


def _local_output(fn):
    """Accept ``--out`` and ``--format`` after the subcommand as well."""

    def set_obj(key):
        def callback(ctx, _param, value):
            if value is not None:
                ctx.find_root().obj[key] = value
            return value
        return callback

    fn = click.option("--format", "fmt_local", type=click.Choice(FORMATS), default=None, expose_value=False,
                      callback=set_obj("format"), help="Report format (same as the global flag).")(fn)
    fn = click.option("--out", "out_local", type=click.Path(dir_okay=False), default=None, expose_value=False,
                      callback=set_obj("out"), help="Report path (same as the global flag).")(fn)
    return fn


# ---------------------------------------------------------------------------
# commands


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here (default stdout).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--seed", type=int, default=0, envvar="OPMEANS_SEED", show_default=True,
              help="Default seed (environment: OPMEANS_SEED).")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Violation threshold (relative).")
@click.version_option(version=__version__, prog_name="opmeans")
@click.pass_context
def main(ctx, out, fmt, seed, tol):
    """Operator means, preservation checks and theorem suites."""
    if not (tol >= 0 and math.isfinite(tol)):
        raise click.BadParameter("tol must be a finite nonnegative number", param_hint="--tol")
    ctx.obj = {"out": out, "format": fmt, "seed": seed, "tol": tol}


def _describe(f) -> dict:
    info = {"descriptor": f.descriptor(), "trivial": is_trivial(f)}
    info["at_zero"] = zero_limit(f).value
    info["adjoint_at_zero"] = zero_limit(f.adjoint()).value
    info["transpose_at_zero"] = zero_limit(f.transpose()).value
    info["at_infinity"] = infinity_limit(f)
    info["derivative_at_one"] = derivative_at_one(f)
    info["symmetric"] = is_symmetric(f)
    info["self_adjoint"] = is_self_adjoint(f)
    info["transpose"] = f.transpose().descriptor()
    info["adjoint"] = f.adjoint().descriptor()
    info["dual"] = f.dual().descriptor()
    if not info["trivial"]:
        info["triviality"] = classify_triviality(f).to_dict()
    return info


def _catalog_list(ctx):
    names = [f.descriptor() for f in standard_catalog()]
    _emit(ctx, {"catalog": names, "text": "\n".join(names)})


def _catalog_describe(ctx, fn):
    f = _function(fn)
    info = _describe(f)
    text = "\n".join(f"{k}: {json.dumps(_jsonable(v), sort_keys=True)}" for k, v in info.items())
    _emit(ctx, {**info, "text": text})


@main.group()
def catalog():
    """Inspect the function catalog."""


@catalog.command("list")
@_local_output
@click.pass_context
def catalog_list(ctx):
    """Descriptors of the standard catalog."""
    _catalog_list(ctx)


@catalog.command("describe")
@click.argument("fn")
@_local_output
@click.pass_context
def catalog_describe(ctx, fn):
    """Boundary values, transforms and triviality class of FN."""
    _catalog_describe(ctx, fn)


@main.command("catalog-list", hidden=True)
@_local_output
@click.pass_context
def catalog_list_alias(ctx):
    _catalog_list(ctx)


@main.command("catalog-describe", hidden=True)
@click.argument("fn")
@_local_output
@click.pass_context
def catalog_describe_alias(ctx, fn):
    _catalog_describe(ctx, fn)


@main.command("eval")
@click.argument("fn")
@click.argument("t", type=float)
@_local_output
@click.pass_context
def eval_cmd(ctx, fn, t):
    """Evaluate the representing function FN at T."""
    f = _function(fn)
    try:
        value = float(f(t))
    except OpMeansError as exc:
        raise InputError(str(exc)) from exc
    _emit(ctx, {"f": f.descriptor(), "t": t, "value": value, "text": repr(value)})


@main.command("mean")
@click.argument("fn")
@click.argument("mat_a", type=click.Path(dir_okay=False))
@click.argument("mat_b", type=click.Path(dir_okay=False))
@_local_output
@click.pass_context
def mean_cmd(ctx, fn, mat_a, mat_b):
    """A s B for the mean with representing function FN; matrices in exchange JSON."""
    sigma = Mean(_function(fn))
    a, b = _read_matrix(mat_a), _read_matrix(mat_b)
    try:
        m = mean_matrix(sigma, a, b)
    except OpMeansError as exc:
        raise InputError(str(exc)) from exc
    obj = spd.to_exchange(m)
    _emit(ctx, {**obj, "mean": sigma.descriptor(), "text": _matrix_text(m)})


_search_options = [
    click.option("--direction", type=click.Choice(["subL", "superR", "equality"], case_sensitive=False),
                 default="subL", show_default=True),
    click.option("--dims", default=None, help="Comma-separated dimensions (default 2,3,4,6)."),
    click.option("--trials", type=click.IntRange(min=1), default=None, help="Trials per dimension (default 200)."),
    click.option("--seed", type=int, default=None, help="Overrides the global seed."),
    click.option("--tol", type=float, default=None, help="Overrides the global tolerance."),
    click.option("--spectrum", default=None, help="Eigenvalue range 'lo,hi' (default 1e-3,1e3)."),
    click.option("--structured/--no-structured", default=True, show_default=True,
                 help="Follow up with the structured 2x2 family."),
]


def _with_search_options(fn):
    for opt in reversed(_search_options):
        fn = opt(fn)
    return fn


def _run_check(ctx, f_text, mean_text, direction, dims, trials, seed, tol, spectrum, structured, stop):
    f, phi = _function(f_text), _function(mean_text)
    cfg = _config(ctx, direction, _parse_dims(dims), trials, seed, tol, _parse_spectrum(spectrum), structured)
    rep = check_preservation(f, Mean(phi), cfg, stop_at_violation=stop)
    pred = predict_verdict(f, phi, cfg.direction)
    _emit(ctx, {"report": rep, "prediction": pred.to_dict()})
    decided = rep.verdict in (Verdict.HOLDS, Verdict.VIOLATION)
    if pred.decided and decided and rep.verdict is not pred.verdict:
        ctx.exit(EXIT_CONTRADICTED)


@main.command("check")
@click.argument("f")
@click.argument("mean_fn")
@_with_search_options
@_local_output
@click.pass_context
def check_cmd(ctx, f, mean_fn, direction, dims, trials, seed, tol, spectrum, structured):
    """Randomized check of f(A s B) <= f(A) s f(B) (or the chosen direction)."""
    _run_check(ctx, f, mean_fn, direction, dims, trials, seed, tol, spectrum, structured, stop=False)


@main.command("search")
@click.argument("f")
@click.argument("mean_fn")
@_with_search_options
@_local_output
@click.pass_context
def search_cmd(ctx, f, mean_fn, direction, dims, trials, seed, tol, spectrum, structured):
    """Counterexample search: stops at the first violating pair and reports it."""
    _run_check(ctx, f, mean_fn, direction, dims, trials, seed, tol, spectrum, structured, stop=True)


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--dims", default=None)
@click.option("--trials", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--tol", type=float, default=None)
@_local_output
@click.pass_context
def verify_cmd(ctx, suite, dims, trials, seed, tol):
    """Run a theorem suite; exit 1 if any observation contradicts its expectation."""
    cfg = _config(ctx, dims=_parse_dims(dims), trials=trials, seed=seed, tol=tol)
    report = run_suite(suite, cfg)
    _emit(ctx, report)
    if not report.passed:
        ctx.exit(EXIT_CONTRADICTED)


@main.command("axioms")
@click.argument("mean_fn")
@click.option("--dims", default=None)
@click.option("--trials", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=None)
@_local_output
@click.pass_context
def axioms_cmd(ctx, mean_fn, dims, trials, seed):
    """Randomized monotonicity, congruence and transformer checks for one mean."""
    sigma = Mean(_function(mean_fn))
    cfg = _config(ctx, dims=_parse_dims(dims), trials=trials, seed=seed)
    report = check_axioms(sigma, cfg)
    _emit(ctx, report)
    if not report.passed:
        ctx.exit(EXIT_CONTRADICTED)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
