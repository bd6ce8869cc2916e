"""Command line pipeline: curve in, verified linkage out.

synth runs parse -> load -> normalize -> minmot -> factor -> choose_m0 ->
synthesize -> verify and only then writes the linkage document, the
kinematic trace, a plain-text report and the figures.  factor, check and
bounds expose the individual stages.

Exit codes: 0 success, 2 unbounded or invalid curve, 3 factorization
failure, 4 seed-joint search exhausted, 5 verification mismatch.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click

from . import docio
from .algebra import DualQuaternion, Quaternion, Vec3, vscale
from .errors import (
    ClosureViolation,
    FlipUndefined,
    InvalidDegreeParity,
    IrreducibleFactorNotQuadraticOverRationals,
    Mismatch,
    NoRationalZeroInDirection,
    NonInvertibleRemainderLead,
    NotGeneric,
    NotMotionPolynomial,
    NotRepresentable,
    NotTame,
    PipelineError,
    ScissorlinkError,
    SearchExhausted,
    SpecParseError,
    Unbounded,
    UserM0Invalid,
    ZeroPickExhausted,
)
from .linkage import (
    Linkage,
    UserSupplied,
    choose_m0,
    common_axis_point,
    count_bounds,
    recentre_factorization,
    synthesize,
)
from .motion import (
    Factorization,
    MotionPolynomial,
    RationalCurve,
    curve_load,
    curve_normalize,
    minmot,
    tfactor,
)
from .verify import DEFAULT_SAMPLES, INFINITY, check_loop_closure, check_trajectory, configuration_at

_EXIT_CODES: Tuple[Tuple[tuple, int], ...] = (
    ((SpecParseError, Unbounded, InvalidDegreeParity), 2),
    ((NotGeneric, NotTame, ZeroPickExhausted, NonInvertibleRemainderLead,
      IrreducibleFactorNotQuadraticOverRationals, NoRationalZeroInDirection,
      NotMotionPolynomial, NotRepresentable), 3),
    ((SearchExhausted, UserM0Invalid, FlipUndefined), 4),
    ((Mismatch, ClosureViolation), 5),
)


def _exit_code(exc: BaseException) -> int:
    cause = exc.cause if isinstance(exc, PipelineError) else exc
    for classes, code in _EXIT_CODES:
        if isinstance(cause, classes):
            return code
    return 1


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ScissorlinkError as exc:
        raise PipelineError(name, exc) from exc


def _fail(exc: BaseException) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(_exit_code(exc))


def _parse_samples(text: Optional[str]) -> Tuple[Fraction, ...]:
    if text is None:
        return DEFAULT_SAMPLES
    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"--samples: {exc}") from exc


def _parse_m0(text: Optional[str]) -> Optional[DualQuaternion]:
    if text is None:
        return None
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 8:
        raise SpecParseError(f"--m0: expected 8 rationals, got {len(parts)}")
    try:
        cs = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"--m0: {exc}") from exc
    return DualQuaternion(Quaternion.of(*cs[:4]), Quaternion.of(*cs[4:]))


@dataclass(frozen=True)
class PipelineResult:
    curve: RationalCurve
    motion: MotionPolynomial
    factorization: Factorization
    linkage: Linkage
    mode: str
    samples: Tuple[Fraction, ...]


def run_pipeline(spec: docio.CurveSpec, mode: Optional[str],
                 m0_override: Optional[DualQuaternion],
                 seed: Optional[int],
                 samples: Tuple[Fraction, ...]) -> PipelineResult:
    """The full synthesis chain; each stage failure carries its name."""
    mode_name = mode or spec.mode or "generic"
    m0_value = m0_override if m0_override is not None else spec.m0
    seed = spec.seed if seed is None else seed
    curve = _stage("curve_load", curve_load, *spec.coords)
    ncurve, frame = _stage("normalize", curve_normalize, curve)
    motion = _stage("minmot", minmot, ncurve)
    fz = _stage("factor", tfactor, motion, spec.directions, seed)
    recenter: Vec3 = (Fraction(0), Fraction(0), Fraction(0))
    if mode_name == "spherical" and any(
            not h.value.dual.is_zero() for h in fz.factors):
        p_star = common_axis_point(list(fz.factors))
        if p_star is None:
            raise PipelineError("recentre", SearchExhausted(
                "spherical mode needs a common point of all joint axes"))
        recenter = vscale(-1, p_star)
        fz = _stage("recentre", recentre_factorization, fz, recenter)
    if len(fz.factors) == 1:
        m0 = None
    elif m0_value is not None:
        m0 = _stage("choose_m0", choose_m0, list(fz.factors), UserSupplied(m0_value), seed)
    else:
        m0 = _stage("choose_m0", choose_m0, list(fz.factors),
                    docio.mode_from_name(mode_name), seed)
    linkage = _stage("synthesize", synthesize, fz, m0, frame, recenter)
    _stage("verify", check_trajectory, linkage, curve, samples)
    _stage("verify", check_loop_closure, linkage, seed)
    return PipelineResult(curve, motion, fz, linkage, mode_name, samples)


def _trace_rows(linkage: Linkage,
                samples: Sequence[Fraction]) -> List[Tuple[object, Vec3]]:
    rows: List[Tuple[object, Vec3]] = [
        (t, configuration_at(linkage, t).drawn) for t in sorted(set(samples))]
    rows.append((INFINITY, configuration_at(linkage, INFINITY).drawn))
    return rows


def _report_text(result: PipelineResult, files: Sequence[str]) -> str:
    curve, linkage = result.curve, result.linkage
    d, c = curve.degree, curve.circularity
    bound_links, bound_joints = count_bounds(d, c)
    lines = [
        "scissor linkage synthesis report",
        "",
        f"curve: degree d = {d}, circularity c = {c}",
        f"motion polynomial: deg C = {result.motion.degree()} (= d - c), "
        f"deg H = {result.factorization.cofactor.degree()} (= (d - 2c)/2)",
        f"mode: {result.mode}",
        f"factors: n = {linkage.n}",
    ]
    if linkage.k:
        for i, rep in enumerate(linkage.cell_reports(), start=1):
            lines.append(f"cell {i}: {rep.kind.value}")
    else:
        lines.append("single factor: one revolute joint, no cells")
    lines += [
        f"links: {linkage.link_count()} (bound {bound_links})",
        f"joints: {linkage.joint_count()} (bound {bound_joints})",
        f"verification: trajectory exact at {len(result.samples)} samples "
        "and symbolically; loop closure exact in every cell",
        "",
        "outputs:",
    ]
    lines += [f"  {f}" for f in files]
    return "\n".join(lines) + "\n"


@click.group()
def main() -> None:
    """Exact synthesis of scissor linkages drawing rational curves."""


_spec_arg = click.argument("spec_file", type=click.Path(exists=True, dir_okay=False))
_mode_opt = click.option("--mode", type=click.Choice(list(docio.MODE_NAMES)),
                         default=None, help="cell type policy for the seed joint")
_m0_opt = click.option("--m0", "m0_text", default=None,
                       help="seed joint override: 8 comma-separated rationals")
_seed_opt = click.option("--seed", type=int, default=None,
                         help="seed for the deterministic search tails")
_samples_opt = click.option("--samples", "samples_text", default=None,
                            help="comma-separated rational parameters to verify at")


@main.command()
@_spec_arg
@_mode_opt
@_m0_opt
@_seed_opt
@_samples_opt
@click.option("--out-dir", type=click.Path(file_okay=False), default=".",
              help="directory for the output files")
def synth(spec_file: str, mode: Optional[str], m0_text: Optional[str],
          seed: Optional[int], samples_text: Optional[str], out_dir: str) -> None:
    """Run the full pipeline and write linkage, trace, report and figures."""
    from . import plotting
    try:
        with open(spec_file) as fh:
            spec = docio.load_curve_spec(fh)
        samples = _parse_samples(samples_text)
        m0_override = _parse_m0(m0_text)
        result = run_pipeline(spec, mode, m0_override, seed, samples)
    except ScissorlinkError as exc:
        _fail(exc)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = _trace_rows(result.linkage, result.samples)
    doc = docio.linkage_to_doc(result.linkage, result.curve, result.mode)
    with open(out / "linkage.json", "w") as fh:
        docio.dump_linkage_doc(doc, fh)
    with open(out / "trace.csv", "w", newline="") as fh:
        docio.write_trace(fh, rows)
    plotting.render_curve_figure(str(out / "curve.png"), result.curve, rows)
    plotting.render_linkage_figure(str(out / "linkage.png"), result.linkage)
    files = ["linkage.json", "trace.csv", "curve.png", "linkage.png", "report.txt"]
    report = _report_text(result, files)
    with open(out / "report.txt", "w") as fh:
        fh.write(report)
    click.echo(report, nl=False)


@main.command()
@_spec_arg
@_seed_opt
def factor(spec_file: str, seed: Optional[int]) -> None:
    """Print the motion polynomial and its factorization."""
    try:
        with open(spec_file) as fh:
            spec = docio.load_curve_spec(fh)
        curve = _stage("curve_load", curve_load, *spec.coords)
        ncurve, _ = _stage("normalize", curve_normalize, curve)
        motion = _stage("minmot", minmot, ncurve)
        fz = _stage("factor", tfactor, motion, spec.directions,
                    spec.seed if seed is None else seed)
    except ScissorlinkError as exc:
        _fail(exc)
    click.echo(f"curve: d = {curve.degree}, c = {curve.circularity}")
    click.echo(f"deg C = {motion.degree()}, deg H = {fz.cofactor.degree()}")
    for i, h in enumerate(fz.factors, start=1):
        comps = ",".join(docio.fmt(c) for c in h.value.components())
        click.echo(f"h{i}: {comps}")
    cof = "; ".join(",".join(docio.fmt(c) for c in coeff.components())
                    for coeff in fz.cofactor.coeffs)
    click.echo(f"H coefficients (ascending): {cof}")


@main.command()
@click.argument("linkage_file", type=click.Path(exists=True, dir_okay=False))
@_spec_arg
@_samples_opt
def check(linkage_file: str, spec_file: str, samples_text: Optional[str]) -> None:
    """Verify an existing linkage document against a curve specification."""
    try:
        with open(linkage_file) as fh:
            linkage = docio.load_linkage_doc(fh)
        with open(spec_file) as fh:
            spec = docio.load_curve_spec(fh)
        samples = _parse_samples(samples_text)
        curve = _stage("curve_load", curve_load, *spec.coords)
        _stage("verify", check_trajectory, linkage, curve, samples)
        _stage("verify", check_loop_closure, linkage)
    except ScissorlinkError as exc:
        _fail(exc)
    click.echo(f"trajectory: PASS ({len(samples)} samples, symbolic identity)")
    cells = linkage.n if linkage.k else 0
    click.echo(f"loop closure: PASS ({cells} cells)")


@main.command()
@click.argument("degree", type=int)
@click.argument("circularity", type=int)
def bounds(degree: int, circularity: int) -> None:
    """Print the worst-case link and joint counts for (d, c)."""
    try:
        links, joints = count_bounds(degree, circularity)
    except ScissorlinkError as exc:
        _fail(exc)
    click.echo(f"links <= {links}")
    click.echo(f"joints <= {joints}")


if __name__ == "__main__":
    main()
