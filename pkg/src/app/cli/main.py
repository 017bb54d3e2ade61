import sys
from pathlib import Path
from typing import List, Optional

import click
import typer

from src.app.cli.runner import EXIT_CONFIG, EXIT_OK, execute
from src.app.core.config import settings
from src.app.services.crystallite_service import CrystalliteService
from src.app.services.ldos_service import LdosService
from src.app.services.mode_volume_service import ModeVolumeService
from src.app.services.slab_service import SlabService
from src.structures.presets import list_presets

app = typer.Typer(
    name=settings.PROJECT_NAME,
    help=settings.PROJECT_DESCRIPTION,
    no_args_is_help=True,
    add_completion=False,
)

ConfigOption = typer.Option(None, "--config", help="JSON run config or bare structure document")
OutOption = typer.Option(None, "--out", help="output directory")
ResolutionOption = typer.Option(None, "--resolution", help="mesh cells across a rod diameter")
ThreadsOption = typer.Option(None, "--threads", help="worker threads (falls back to QNMLAB_THREADS)")
GuessOption = typer.Option(
    None, "--guess", help="initial frequency RE,IM: omega L/c for stacks, omega a/2 pi c for crystallites"
)


@app.command("slab-qnm")
def slab_qnm(
    config: Optional[Path] = ConfigOption,
    preset: Optional[str] = typer.Option(None, "--preset", help="bundled stack, e.g. slab-n2"),
    out: Optional[Path] = OutOption,
    guess: Optional[str] = typer.Option(None, "--guess", help="initial omega L/c as RE,IM"),
    threads: Optional[int] = ThreadsOption,
):
    """QNM of a layered stack: qnm.json and field.csv."""
    overrides = dict(presets=[preset] if preset else [], out=out, guess=guess, threads=threads)
    report = execute("slab-qnm", SlabService, config, overrides)
    typer.echo(f"{report.structure}: omega = {report.omega_re:.8f} {report.omega_im:+.8f}i, Q = {report.q_factor:.6g}")


@app.command("crystallite-qnm")
def crystallite_qnm(
    config: Optional[Path] = ConfigOption,
    preset: Optional[str] = typer.Option(None, "--preset", help="bundled crystallite, e.g. paper-2d-crystallite-N1"),
    out: Optional[Path] = OutOption,
    resolution: Optional[int] = ResolutionOption,
    guess: Optional[str] = typer.Option(None, "--guess", help="initial omega a/2 pi c as RE,IM"),
    threads: Optional[int] = ThreadsOption,
):
    """Defect QNM of a rod crystallite: qnm.json, field_xaxis.csv and field_xy.csv."""
    overrides = dict(presets=[preset] if preset else [], out=out, resolution=resolution, guess=guess, threads=threads)
    report = execute("crystallite-qnm", CrystalliteService, config, overrides)
    typer.echo(f"{report.structure}: omega a/2pi c = {report.omega_re:.6f} {report.omega_im:+.6f}i, "
               f"Q = {report.q_factor:.6g}")


@app.command("mode-volume-sweep")
def mode_volume_sweep(
    config: Optional[Path] = ConfigOption,
    preset: Optional[List[str]] = typer.Option(None, "--preset", help="repeat to batch several structures"),
    out: Optional[Path] = OutOption,
    resolution: Optional[int] = ResolutionOption,
    guess: Optional[str] = GuessOption,
    radii: Optional[str] = typer.Option(None, "--radii", help="comma separated radii (half-widths for stacks)"),
    threads: Optional[int] = ThreadsOption,
    ldos: bool = typer.Option(True, "--ldos/--no-ldos", help="compare with the full LDOS at the antinode"),
):
    """V_eff^N and V_eff^Q against domain size: sweep.csv and summary.json."""
    overrides = dict(
        presets=preset or [], out=out, resolution=resolution, guess=guess, radii=radii, threads=threads,
        compute_ldos=None if ldos else False,
    )
    for summary in execute("mode-volume-sweep", ModeVolumeService, config, overrides):
        typer.echo(f"{summary.structure}: V_eff^Q = {summary.v_eff_q}, V_eff^tot = {summary.v_eff_tot}")


@app.command("ldos")
def ldos(
    config: Optional[Path] = ConfigOption,
    preset: Optional[str] = typer.Option(None, "--preset", help="bundled structure"),
    out: Optional[Path] = OutOption,
    resolution: Optional[int] = ResolutionOption,
    guess: Optional[str] = GuessOption,
    probe: Optional[str] = typer.Option(None, "--probe", help="emitter position X,Y"),
    threads: Optional[int] = ThreadsOption,
):
    """Full and single-mode LDOS enhancement spectrum: ldos.csv."""
    overrides = dict(
        presets=[preset] if preset else [], out=out, resolution=resolution, guess=guess, probe=probe, threads=threads,
    )
    report = execute("ldos", LdosService, config, overrides)
    typer.echo(f"{report.structure}: peak F = {report.peak_enhancement:.6g} at {report.peak_omega:.6f}")


@app.command("presets")
def presets():
    """List the bundled structures."""
    for name in list_presets():
        typer.echo(name)


def main() -> None:
    """Console entry point; usage errors exit with 1 like any other input problem."""
    try:
        code = app(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_CONFIG)
    except click.exceptions.Abort:
        sys.exit(EXIT_CONFIG)
    sys.exit(code if isinstance(code, int) else EXIT_OK)
