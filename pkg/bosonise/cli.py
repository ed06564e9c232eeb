"""Bosonise CLI -- all commands registered here."""

from dataclasses import asdict
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError

from bosonise import config, ui
from bosonise.algebra import Polynomial
from bosonise.errors import (
    BosonisationError,
    GoldenMismatchError,
    ResourceCapError,
)
from bosonise.fock import ShellSpec, shell_dimension, slater_basis
from bosonise.fqhe import laughlin_report
from bosonise.golden import check_golden
from bosonise.models import (
    DecompositionReport,
    LaughlinReport,
    MultipletEntry,
    MultipletsReport,
    OutputFormat,
    RmReport,
    RunConfig,
    ShapeEntry,
    ShapesReport,
    ShellReport,
    StateEntry,
    Table1Entry,
)
from bosonise.multiplets import (
    Multiplet,
    highest_weight_counts,
    psi4_identity_check,
    resolve_shell,
    state_by_label,
    table1_report,
)
from bosonise.rmcm import band_assign, format_cm_rm, is_pure_rm, multiplet_band, rm_form, rm_quanta
from bosonise.shapes import ShapeBasis, complete_shape_basis, decompose, full_shape_basis
from bosonise.spherical import format_spherical
from bosonise.textfmt import format_polynomial, parse_polynomial
from bosonise.utils import dump_report, rational_str, read_text_input

app = typer.Typer(
    name="bosonise",
    help="Exact shape and Euler-boson factorisation of fermionic oscillator shells",
    add_completion=False,
    invoke_without_command=True,
    rich_markup_mode="rich",
    context_settings={"max_content_width": 120},
)


def _exit_code(e: Exception) -> int:
    if isinstance(e, GoldenMismatchError):
        return 1
    if isinstance(e, ResourceCapError):
        return 3
    return 2


def _handle_error(e: Exception) -> None:
    """Handles errors uniformly across CLI commands."""
    if isinstance(e, GoldenMismatchError):
        ui.print_diff_table(e.changes)
    if isinstance(e, ValidationError):
        first = e.errors()[0]
        field = ".".join(str(p) for p in first["loc"]) or "options"
        ui.error(f"Invalid {field}: {first['msg']}")
    else:
        ui.error(str(e))
        if isinstance(e, BosonisationError) and e.hint:
            ui.hint(e.hint)
    raise typer.Exit(code=_exit_code(e))


def _version_callback(value: bool):
    if value:
        ui.print_version()
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False, "--version", "-v",
        callback=_version_callback, is_eager=True,
        help="Show version and exit.",
    ),
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Log computation steps to stderr."),
):
    """Bosonise -- shapes, Euler bosons and multiplets of fermionic oscillator shells."""
    ui.configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()


# -- shared plumbing -----------------------------------------------------------


def _emit(report: dict[str, Any], cfg: RunConfig, render_text) -> None:
    """Writes the report in the chosen format, then checks it against the golden file."""
    if cfg.output is OutputFormat.JSON:
        typer.echo(dump_report(report))
    else:
        render_text()
    if cfg.golden is not None:
        changes = check_golden(report, cfg.golden)
        if cfg.output is OutputFormat.TEXT:
            ui.success(f"Matches {cfg.golden} ({len(changes['unchanged'])} field(s))")


def _cap_guard(cfg: RunConfig):
    return lambda spec: config.enforce_cap(spec, cfg.cap)


def _shape_basis(cfg: RunConfig) -> ShapeBasis:
    return complete_shape_basis(cfg.particles, cfg.dims, ceiling=cfg.shell_ceiling, guard=_cap_guard(cfg))


def _lookup_state(label: str, cfg: RunConfig) -> tuple[Multiplet, int]:
    try:
        return state_by_label(label, particles=cfg.particles, dims=cfg.dims)
    except KeyError:
        raise BosonisationError(
            f"Unknown state label '{label}'",
            hint="labels look like 233-II, 222 or 23m2-II (shell, l, m, family)",
        ) from None


def _read_polynomial(path: Path, cfg: RunConfig) -> Polynomial:
    return parse_polynomial(read_text_input(path), particles=cfg.particles, dims=cfg.dims)


def _one_source(state: str | None, input_file: Path | None) -> None:
    if (state is None) == (input_file is None):
        raise BosonisationError("Give exactly one of --state or --input", hint="e.g. --state 233-II")


# -- commands ------------------------------------------------------------------


@app.command()
def shells(
    particles: int = typer.Option(2, "--particles", "-N", help="Number of fermions."),
    dims: int = typer.Option(3, "--dims", "-d", help="Spatial dimension."),
    shell: int = typer.Option(0, "--shell", "-s", help="Excitation above the ground shell."),
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """List the Slater basis of one shell and its dimension."""
    try:
        cfg = config.build_config(
            particles=particles, dims=dims, shell=shell, cap=cap, output=output, golden=golden
        )
        spec = ShellSpec(cfg.particles, cfg.dims, shell)
        config.enforce_cap(spec, cfg.cap)
        basis = slater_basis(spec)
        report = ShellReport(
            particles=cfg.particles,
            dims=cfg.dims,
            shell=shell,
            total_degree=spec.total_degree,
            dimension=len(basis),
            oracle_dimension=shell_dimension(spec),
            basis=[format_polynomial(s.polynomial, dims=cfg.dims) for s in basis],
        )

        def render() -> None:
            ui.print_header(f"Shell {shell} of N={cfg.particles}, d={cfg.dims}", icon=ui.Icons.ATOM)
            ui.print_summary_panel(
                "Shell",
                [
                    ("Total degree", str(report.total_degree)),
                    ("Dimension", str(report.dimension)),
                    ("Oracle dimension", str(report.oracle_dimension)),
                ],
                style="success" if report.dimension == report.oracle_dimension else "error",
            )
            table = ui.create_table("Slater state", title="Basis", show_row_numbers=True)
            for i, text in enumerate(report.basis, start=1):
                table.add_row(str(i), text)
            ui.print_table(table)
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command()
def shapes(
    particles: int = typer.Option(2, "--particles", "-N", help="Number of fermions."),
    dims: int = typer.Option(3, "--dims", "-d", help="Spatial dimension."),
    max_shell: int | None = typer.Option(
        None, "--max-shell", help="Scan exactly shells 0..max-shell (default: until complete)."
    ),
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    workers: int | None = typer.Option(None, "--workers", help="Threads for per-shell extraction."),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Extract the shapes: the antisymmetric states no Euler boson reaches."""
    try:
        cfg = config.build_config(
            particles=particles, dims=dims, max_shell=max_shell, cap=cap,
            workers=workers, output=output, golden=golden,
        )
        if cfg.max_shell is None:
            basis = _shape_basis(cfg)
        else:
            for s in range(cfg.max_shell + 1):
                config.enforce_cap(ShellSpec(cfg.particles, cfg.dims, s), cfg.cap)
            basis = full_shape_basis(cfg.particles, cfg.dims, cfg.max_shell, workers=cfg.workers)
        report = ShapesReport(
            particles=cfg.particles,
            dims=cfg.dims,
            expected=basis.expected,
            complete=basis.complete,
            shapes=[
                ShapeEntry(
                    index=i,
                    shell=s.shell,
                    degree=s.degree,
                    polynomial=format_polynomial(s.polynomial, dims=cfg.dims),
                    norm_sq=rational_str(s.norm_sq),
                )
                for i, s in enumerate(basis, start=1)
            ],
        )

        def render() -> None:
            ui.print_header(f"Shapes of N={cfg.particles}, d={cfg.dims}", icon=ui.Icons.ATOM)
            table = ui.create_table("#", "Shell", "Degree", "Norm²", "Shape", title="Shapes")
            for e in report.shapes:
                table.add_row(str(e.index), str(e.shell), str(e.degree), e.norm_sq, e.polynomial)
            ui.print_table(table)
            if report.complete:
                ui.success(f"{len(report.shapes)} of {report.expected} shapes: basis complete")
            else:
                ui.warning(f"{len(report.shapes)} of {report.expected} shapes: basis incomplete")
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command()
def multiplets(
    particles: int = typer.Option(2, "--particles", "-N", help="Number of fermions."),
    dims: int = typer.Option(3, "--dims", "-d", help="Spatial dimension."),
    shell: int = typer.Option(2, "--shell", "-s", help="Shell to resolve."),
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    verify: bool = typer.Option(
        False, "--verify", help="Recount the multiplets from the kernel of L+ on the Slater basis."
    ),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Resolve a two-particle shell into angular-momentum multiplets."""
    try:
        cfg = config.build_config(
            particles=particles, dims=dims, shell=shell, cap=cap, output=output, golden=golden
        )
        if shell > cfg.shell_ceiling:
            raise BosonisationError(
                f"shell {shell} is above the configured ceiling {cfg.shell_ceiling}",
                hint=f"raise shell_ceiling in {config.CONFIG_FILE}",
            )
        spec = ShellSpec(cfg.particles, cfg.dims, shell)
        config.enforce_cap(spec, cfg.cap)
        resolution = resolve_shell(spec)
        check: bool | None = None
        if verify:
            counts = highest_weight_counts(spec)
            check = all(resolution.multiplicity(m) == n for m, n in counts.items())
        report = MultipletsReport(
            shell=shell,
            dimension=resolution.dimension,
            l_content=resolution.l_content,
            multiplets=[
                MultipletEntry(
                    label=mp.label,
                    l=mp.l,
                    states=[
                        StateEntry(
                            label=mp.state_label(m),
                            m=m,
                            spherical=format_spherical(mp.state(m)),
                            norm_sq=rational_str(mp.norm_sq(m)),
                        )
                        for m in mp.ms()
                    ],
                )
                for mp in resolution.multiplets
            ],
            highest_weight_check=check,
        )

        def render() -> None:
            ui.print_header(f"Multiplets of shell {shell}", icon=ui.Icons.SPIN)
            ui.print_kv_list(
                [
                    ("Dimension", str(report.dimension)),
                    ("l content", ", ".join(str(x) for x in report.l_content)),
                    *([("Highest-weight recount", ui.Icons.CHECK if check else ui.Icons.CROSS)] if verify else []),
                ]
            )
            table = ui.create_table("State", "m", "Norm²", "Spherical form", title="Multiplets")
            for mp_entry in report.multiplets:
                for st in mp_entry.states:
                    table.add_row(st.label, str(st.m), st.norm_sq, st.spherical)
            ui.print_table(table)
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command()
def table1(
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Second-shell states with m >= 1 and the fourth-shape identity."""
    try:
        cfg = config.build_config(output=output, golden=golden)
        resolution = resolve_shell(ShellSpec(2, 3, 2))
        rows = table1_report(resolution)
        check = psi4_identity_check(resolution)
        report: dict[str, Any] = {
            row.key: Table1Entry(
                label=row.label,
                spherical=row.spherical,
                polynomial=row.polynomial,
                norm_sq=rational_str(row.norm_sq),
                matches_paper=row.matches_paper,
                in_reference_span=row.in_reference_span,
            ).model_dump(mode="json")
            for row in rows
        }
        report["all_match"] = all(row.matches_paper for row in rows)
        report["all_in_reference_span"] = all(row.in_reference_span for row in rows)
        report["psi4_identity"] = bool(check)

        def render() -> None:
            ui.print_header("Second shell, m >= 1", icon=ui.Icons.SPIN)
            table = ui.create_table("State", "Norm²", "Spherical form", "Match", title="States")
            for row in rows:
                mark = ui.Icons.CHECK if row.matches_paper else ui.Icons.CROSS
                table.add_row(row.label, rational_str(row.norm_sq), row.spherical, mark)
            ui.print_table(table)
            ui.print_checklist(
                [
                    ("Reference states", report["all_match"], f"{sum(r.matches_paper for r in rows)}/{len(rows)}"),
                    (
                        "Reference spans",
                        report["all_in_reference_span"],
                        f"{sum(r.in_reference_span for r in rows)}/{len(rows)}",
                    ),
                    ("Fourth-shape identity", check.identity_holds, f"residual {check.residual}"),
                    ("Fourth shape elsewhere", check.orthogonal_elsewhere, ", ".join(check.overlapping)),
                ]
            )
            ui.print_footer()

        _emit(report, cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command("decompose")
def decompose_cmd(
    input_file: Path | None = typer.Option(None, "--input", "-i", help="File holding one polynomial."),
    state: str | None = typer.Option(None, "--state", help="Multiplet state label, e.g. 233-II."),
    particles: int = typer.Option(2, "--particles", "-N", help="Number of fermions."),
    dims: int = typer.Option(3, "--dims", "-d", help="Spatial dimension."),
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Write an antisymmetric polynomial as sum(Phi_i * Psi_i) over the shapes."""
    try:
        _one_source(state, input_file)
        cfg = config.build_config(particles=particles, dims=dims, cap=cap, output=output, golden=golden)
        if input_file is not None:
            p = _read_polynomial(input_file, cfg)
        else:
            multiplet, m = _lookup_state(state or "", cfg)
            p = multiplet.polynomial(m)
        basis = _shape_basis(cfg)
        result = decompose(p, basis)
        report = DecompositionReport(
            input=format_polynomial(p, dims=cfg.dims),
            coefficients=[format_polynomial(phi, dims=cfg.dims) for phi in result.coefficients],
            support=result.support(),
            reconstructs=result.reconstruct(basis) == p,
        )

        def render() -> None:
            ui.print_header("Module decomposition", icon=ui.Icons.ATOM)
            table = ui.create_table("i", "Shape", "Phi_i", title="Coefficients")
            for i, (shape, phi) in enumerate(zip(basis, report.coefficients, strict=True), start=1):
                table.add_row(str(i), format_polynomial(shape.polynomial, dims=cfg.dims), phi)
            ui.print_table(table)
            ui.print_checklist([("Reconstruction", report.reconstructs, "sum Phi_i Psi_i == input")])
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command()
def rm(
    state: str | None = typer.Option(None, "--state", help="Multiplet state label, e.g. 233-II."),
    input_file: Path | None = typer.Option(None, "--input", "-i", help="File holding one polynomial."),
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Classify a two-particle state: relative motion, band and radial quanta."""
    try:
        _one_source(state, input_file)
        cfg = config.build_config(particles=2, dims=3, cap=cap, output=output, golden=golden)
        basis = _shape_basis(cfg)
        n_r = l_value = None
        if state is not None:
            multiplet, m = _lookup_state(state, cfg)
            p = multiplet.polynomial(m)
            pure = is_pure_rm(p)
            assignment = multiplet_band(multiplet, basis)
            if pure:
                quanta = rm_quanta(multiplet, pure)
                n_r, l_value = quanta.n_r, quanta.l
            name = multiplet.state_label(m)
        else:
            assert input_file is not None
            p = _read_polynomial(input_file, cfg)
            pure = is_pure_rm(p)
            assignment = band_assign(p, basis)
            name = "input"
        form = None
        if pure:
            slots = rm_form(p)
            form = {key: format_cm_rm(slot) for key, slot in zip("pqrs", slots.slots(), strict=True)}
        report = RmReport(
            state=name,
            pure_rm=pure,
            band=assignment.band.value,
            n_r=n_r,
            l=l_value,
            phi_support=list(assignment.phi_support),
            rm_form=form,
        )

        def render() -> None:
            ui.print_header(f"Classification of {name}", icon=ui.Icons.SPIN)
            items = [
                ("Pure relative motion", "yes" if report.pure_rm else "no"),
                ("Band", report.band),
                ("Shape support", ", ".join(f"Psi{i}" for i in report.phi_support) or "-"),
            ]
            if report.n_r is not None:
                items.append(("Radial quanta n_r", str(report.n_r)))
                items.append(("Angular momentum l", str(report.l)))
            ui.print_summary_panel("Relative motion", items, style="info")
            if report.rm_form:
                ui.print_kv_list([(k.upper(), v) for k, v in report.rm_form.items()], title="P t + Q u + R v + S tuv")
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)


@app.command()
def laughlin(
    cap: int | None = typer.Option(None, "--cap", help="Largest shell basis to build."),
    output: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or text."),
    golden: Path | None = typer.Option(None, "--golden", help="Compare against a golden JSON file."),
):
    """Holomorphic shape of three particles in the plane versus the Vandermonde product."""
    try:
        cfg = config.build_config(particles=3, dims=2, cap=cap, output=output, golden=golden)
        summary = laughlin_report(_shape_basis(cfg))
        report = LaughlinReport.model_validate(asdict(summary))

        def render() -> None:
            ui.print_header("Three particles in the plane", icon=ui.Icons.ATOM)
            ui.print_kv_list(
                [
                    ("Shapes", f"{report.shape_count} (complete: {report.complete})"),
                    ("Degrees", ", ".join(str(d) for d in report.shape_degrees)),
                    ("Holomorphic dimension", str(report.holomorphic_dimension)),
                    ("Holomorphic shape", report.holomorphic_combination),
                ]
            )
            ui.print_checklist(
                [
                    ("Vandermonde product", report.vandermonde_match, report.vandermonde),
                    ("Vandermonde determinant", report.determinant_match, ""),
                    ("Antisymmetric", report.antisymmetric, ""),
                ]
            )
            ui.print_footer()

        _emit(report.model_dump(mode="json"), cfg, render)
    except (BosonisationError, ValidationError) as e:
        _handle_error(e)
