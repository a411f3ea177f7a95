"""
Command line front end.

Machine-readable results go to stdout; logs, tables and summaries go to stderr.
Exit codes: 0 pass, 2 usage, 3 symbolic guard, 4 numeric failure, 5 conjecture
violation.
"""

import json
import logging
import os
from functools import wraps
from pathlib import Path
from typing import List, Optional

import mpmath as mp
import typer
from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from .algebra import Variable, constant_text, convert_variable, render
from .analysis import (
    c_bottom_reduced,
    coeff_bottom,
    gamma_coeffs,
    laurent,
    run_sweep,
)
from .numerics import (
    CHECKS,
    IDENTITIES,
    ModulusPoint,
    constant_mode_num,
    decay_rate,
    eisenstein_num,
    evaluate_laurent,
    exp_part_C211,
    lattice_C,
    laplace_residual,
    phi_sm,
    verify_identity,
)
from .exact import set_table_size
from .utils import MGFError, Settings, load_settings, setup_logging
from .utils.errors import ConfigError, ConjectureViolation, UnconvergedError

app = typer.Typer(
    help="Constant Fourier modes of two-loop modular graph functions",
    add_completion=False,
)
console = Console(stderr=True)
logger = logging.getLogger("mgf_fourier.cli")

DEFAULTS = Settings()

PrecOption = typer.Option(DEFAULTS.prec, "--prec", envvar="MGF_PREC",
                          help="Working precision in bits")
CutoffOption = typer.Option(DEFAULTS.cutoff, "--cutoff", envvar="MGF_CUTOFF",
                            help="Lattice box half-width N")
FormatOption = typer.Option(DEFAULTS.fmt, "--format", envvar="MGF_FORMAT",
                            help="Output format: text, json or latex")
VarOption = typer.Option(DEFAULTS.var, "--var", envvar="MGF_VAR",
                         help="Laurent variable: u = 4 pi tau2, y = pi tau2, or tau2")
TauOption = typer.Option("0,1", "--tau", help="Point tau1,tau2 (fractions allowed)")


def guarded(func):
    """Map toolkit exceptions to the exit-code contract"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MGFError as e:
            console.print(f"[red]{type(e).__name__}[/red]: {e}")
            raise typer.Exit(code=e.exit_code)

    return wrapper


def _settings(**overrides) -> Settings:
    return DEFAULTS.with_overrides(**overrides)


def _emit(payload: dict) -> None:
    typer.echo(json.dumps(payload, sort_keys=True, default=str))


def _num(x) -> str:
    return mp.nstr(x, 15)


@app.callback()
def main_options(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress at INFO"),
    log_dir: Optional[Path] = typer.Option(None, "--log-dir", envvar="MGF_LOG_DIR",
                                           help="Also write a monthly log file here"),
):
    setup_logging("mgf_fourier", log_dir, logging.INFO if verbose else logging.WARNING)
    try:
        set_table_size(load_settings().table_size)
    except ConfigError as e:
        console.print(f"[red]ConfigError[/red]: {e}")
        raise typer.Exit(code=e.exit_code)


@app.command("laurent")
@guarded
def cmd_laurent(
    a1: int, a2: int, a3: int,
    var: str = VarOption,
    fmt: str = FormatOption,
    unreduced: bool = typer.Option(False, help="Keep c_{2-w} in double-zeta form"),
    cross_check: bool = typer.Option(False, help="Compare both zeta-tower routes"),
):
    """Exact Laurent polynomial of the constant mode of C_{a1,a2,a3}"""
    settings = _settings(var=var, fmt=fmt)
    p = laurent(a1, a2, a3, reduced=not unreduced, cross_check=cross_check)
    typer.echo(render(convert_variable(p, Variable(settings.var)), settings.fmt))


@app.command("gamma")
@guarded
def cmd_gamma(
    a1: int, a2: int, a3: int,
    fmt: str = FormatOption,
    printed: bool = typer.Option(False, help="Use the uncorrected normalization"),
):
    """gamma_k of the odd-pair decomposition of c_{2-w}"""
    settings = _settings(fmt=fmt)
    result = gamma_coeffs(a1, a2, a3, printed=printed)
    folded = {} if printed else result.folded
    if settings.fmt == "json":
        _emit({
            "a": [a1, a2, a3],
            "gamma": {str(k): str(g) for k, g in result.entries.items()},
            "folded": {f"{p},{q}": str(c) for (p, q), c in folded.items()},
            "integral": result.integral,
            "normalization": result.source,
        })
        return
    table = Table(title=f"gamma_k for C_{{{a1},{a2},{a3}}} ({result.source})")
    table.add_column("k", justify="right")
    table.add_column("gamma_k", justify="right")
    table.add_column("pair")
    table.add_column("integer")
    for k, g in result.entries.items():
        pair = f"zeta({2 * k + 1}) zeta({2 * result.w - 2 * k - 3})"
        table.add_row(str(k), str(g), pair, "yes" if g.denominator == 1 else "NO")
    console.print(table)
    console.print("c_{2-w} = sum_k gamma_k/2 zeta(2k+1) zeta(2w-2k-3)")
    for (p, q), c in folded.items():
        typer.echo(f"zeta({p}) zeta({q}): {c}")
    if not result.integral:
        raise ConjectureViolation(f"non-integer gamma for C_{{{a1},{a2},{a3}}}")


@app.command("reduce")
@guarded
def cmd_reduce(a1: int, a2: int, a3: int):
    """c_{2-w} from double zetas and from the odd-pair reduction, compared"""
    direct = coeff_bottom(a1, a2, a3)
    reduced = c_bottom_reduced(a1, a2, a3).to_constant()
    typer.echo(f"double zeta form: {constant_text(direct)}")
    typer.echo(f"reduced:          {constant_text(reduced)}")


@app.command("check-xn")
@guarded
def cmd_check_xn(
    max_a1: int = typer.Option(12, "--max-a1", help="Largest a1"),
    max_a23: int = typer.Option(12, "--max-a23", help="Largest a2 and a3"),
    jobs: int = typer.Option(os.cpu_count() or 1, "--jobs", envvar="MGF_JOBS",
                             help="Worker processes"),
    checkpoint_dir: Path = typer.Option(
        DEFAULTS.checkpoint_dir, "--checkpoint-dir", envvar="MGF_CHECKPOINT_DIR",
        help="Resumable state directory"),
    checkpoint_every: int = typer.Option(DEFAULTS.checkpoint_every, "--checkpoint-every",
                                         envvar="MGF_CHECKPOINT_EVERY"),
    fresh: bool = typer.Option(False, help="Discard an existing checkpoint for this grid"),
    inject_fault: bool = typer.Option(False, help="Corrupt one cell (harness self-test)"),
):
    """Stream X_n(a1,a2,a3) over a grid as JSON lines; nonzero exit on any violation"""
    settings = _settings(jobs=jobs, checkpoint_every=checkpoint_every)
    checkpoint = Path(checkpoint_dir) / f"xn_{max_a1}_{max_a23}.json"
    if fresh and checkpoint.exists():
        checkpoint.unlink()
    summary = run_sweep(
        max_a1, max_a23, settings.jobs, checkpoint, settings.checkpoint_every,
        inject_fault=inject_fault, on_record=lambda r: typer.echo(r.to_json()),
    )
    console.print(
        f"{summary.cells} cells, {summary.triples} triples, "
        f"{len(summary.violations)} nonzero"
        + (f" (resumed after {summary.resumed_from} triples)" if summary.resumed_from else "")
    )
    if summary.violations:
        raise ConjectureViolation(f"{len(summary.violations)} nonzero X_n")


@app.command("eval")
@guarded
def cmd_eval(
    a1: int, a2: int, a3: int,
    tau2: float = typer.Option(..., "--tau2"),
    compare: str = typer.Option("laurent", help="laurent or laurent+exp"),
    cutoff: int = CutoffOption,
    prec: int = PrecOption,
    tol: float = typer.Option(1e-6, help="Agreement tolerance"),
    jobs: int = typer.Option(1, "--jobs", help="Threads per lattice sum"),
    fmt: str = FormatOption,
):
    """Numeric constant mode against the exact Laurent polynomial"""
    settings = _settings(cutoff=cutoff, prec=prec, fmt=fmt)
    if compare not in ("laurent", "laurent+exp"):
        raise typer.BadParameter(f"unknown comparison {compare!r}")
    if compare == "laurent+exp" and sorted((a1, a2, a3)) != [1, 1, 2]:
        raise typer.BadParameter("the exponential part is available for C_{2,1,1} only")
    mode = constant_mode_num((a1, a2, a3), tau2, settings.cutoff, jobs=jobs)
    predicted = evaluate_laurent(laurent(a1, a2, a3), tau2, settings.prec)
    if compare == "laurent+exp":
        predicted = predicted + exp_part_C211(tau2, 10, settings.prec)
    diff = abs(mode.value - predicted.value)
    passed = diff <= tol
    payload = {
        "a": [a1, a2, a3], "tau2": tau2, "route": compare,
        "cutoff": settings.cutoff, "prec": settings.prec,
        "numeric": _num(mode.value), "numeric_error": mp.nstr(mode.error, 3),
        "predicted": _num(predicted.value), "difference": mp.nstr(diff, 3),
        "tolerance": tol, "passed": passed,
    }
    if settings.fmt == "json":
        _emit(payload)
    else:
        typer.echo(
            f"{'PASS' if passed else 'FAIL'} C_{{{a1},{a2},{a3}}} tau2={tau2}: "
            f"lattice {payload['numeric']} vs {compare} {payload['predicted']} "
            f"(diff {payload['difference']}, tol {tol}, N={settings.cutoff}, "
            f"{settings.prec} bits)"
        )
    if not passed:
        raise UnconvergedError(f"difference {payload['difference']} above {tol}")


@app.command("verify")
@guarded
def cmd_verify(
    name: str = typer.Argument(..., help=f"One of {', '.join(sorted(IDENTITIES))}"),
    tau: str = TauOption,
    cutoff: int = CutoffOption,
    prec: int = typer.Option(128, "--prec", help="Working precision in bits"),
    tol: float = typer.Option(1e-5, help="Pass threshold on |LHS - RHS|"),
    jobs: int = typer.Option(1, "--jobs", help="Threads per lattice sum"),
    fmt: str = FormatOption,
):
    """Check an identity numerically at tau"""
    settings = _settings(cutoff=cutoff, prec=prec, fmt=fmt)
    report = verify_identity(name, ModulusPoint.parse(tau), settings.cutoff,
                             settings.prec, jobs=jobs)
    if settings.fmt == "json":
        _emit(report.to_dict(tol))
    else:
        status = "PASS" if report.passed(tol) else "FAIL"
        typer.echo(
            f"{status} {name} at tau={tau}: |LHS-RHS| = "
            f"{mp.nstr(abs(report.residual.value), 3)} (budget "
            f"{mp.nstr(report.residual.error, 3)}, tol {tol}, N={settings.cutoff}, "
            f"{settings.prec} bits)"
        )
    if not report.passed(tol):
        raise UnconvergedError(f"{name} residual above {tol}")


@app.command("eisenstein")
@guarded
def cmd_eisenstein(
    w: int,
    tau: str = TauOption,
    terms: int = typer.Option(20, help="Fourier modes kept"),
    prec: int = PrecOption,
    lattice: bool = typer.Option(False, help="Also sum the lattice C_{w-1,1}"),
    cutoff: int = CutoffOption,
):
    """E_w(tau) from its Fourier series"""
    settings = _settings(prec=prec, cutoff=cutoff)
    point = ModulusPoint.parse(tau)
    value = eisenstein_num(w, point, terms, settings.prec)
    typer.echo(f"E_{w}({tau}) = {_num(value.value)} +/- {mp.nstr(value.error, 3)} "
               f"[Fourier, {terms} terms, {settings.prec} bits]")
    if lattice:
        direct = lattice_C((w - 1, 1), point, settings.cutoff, settings.prec).value
        typer.echo(f"C_{{{w - 1},1}}({tau}) = {_num(direct.value)} +/- "
                   f"{mp.nstr(direct.error, 3)} [lattice, N={settings.cutoff}]")


@app.command("phi")
@guarded
def cmd_phi(s: int, m: int, y: float, prec: int = PrecOption):
    """phi_{s,m}(y), the decaying solution with source e^-y / y^m"""
    settings = _settings(prec=prec)
    value = phi_sm(s, m, y, settings.prec)
    typer.echo(f"phi_{{{s},{m}}}({y}) = {mp.nstr(value.value, 30)} "
               f"+/- {mp.nstr(value.error, 3)} [{settings.prec} bits]")


@app.command("laplace")
@guarded
def cmd_laplace(
    check: str = typer.Argument(..., help=f"One of {', '.join(CHECKS)}"),
    tau: str = TauOption,
    h: float = typer.Option(1 / 64, "--h", help="Finite-difference step"),
    cutoff: int = CutoffOption,
    w: int = typer.Option(3, help="Weight for the eisenstein check"),
    tol: float = typer.Option(1e-3, help="Pass threshold"),
):
    """Finite-difference residual of a Laplace equation"""
    settings = _settings(cutoff=cutoff)
    result = laplace_residual(check, ModulusPoint.parse(tau), h, settings.cutoff, w=w)
    value = abs(result.residual.value)
    steps = ", ".join(f"r({k:g})={v:.3e}" for k, v in sorted(result.by_step.items()))
    typer.echo(f"{'PASS' if value <= tol else 'FAIL'} {result.check} at tau={tau}: "
               f"|residual| = {mp.nstr(value, 3)} [{steps or 'no derivative'}]")
    if value > tol:
        raise UnconvergedError(f"Laplace residual {mp.nstr(value, 3)} above {tol}")


@app.command("decay")
@guarded
def cmd_decay(
    a1: int, a2: int, a3: int,
    tau2: List[float] = typer.Option([0.4, 0.5, 0.6, 0.7], "--tau2"),
    cutoff: int = CutoffOption,
    plot: Optional[Path] = typer.Option(None, help="Write a semilog plot here"),
):
    """Empirical decay rate of constant mode minus Laurent polynomial"""
    settings = _settings(cutoff=cutoff)
    report = decay_rate(a1, a2, a3, tau2, settings.cutoff, plot)
    table = Table(title=f"C_{{{a1},{a2},{a3}}} remainder")
    for column in report.table.columns:
        table.add_column(str(column), justify="right")
    for row in report.table.itertuples(index=False):
        table.add_row(*(f"{v:.6g}" for v in row))
    console.print(table)
    typer.echo(f"rate = {report.rate:.6f} = {report.rate_in_units_of_2pi:.4f} x 2 pi")


def main():
    load_dotenv()
    app()


if __name__ == "__main__":
    main()
