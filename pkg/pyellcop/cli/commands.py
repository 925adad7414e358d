import argparse
import os
import statistics
import sys
import time

from pyellcop.cli.exceptions import UsageError
from pyellcop.cli.experiment import ExperimentRunner, resolve_jobs
from pyellcop.cli.ingest import ingest
from pyellcop.cli.output import write_csv, write_json
from pyellcop.cli.schemas import EXPERIMENT_COLUMNS, RunManifest
from pyellcop.copula import CopulaModel, Family, transform
from pyellcop.estimate import (
    FitResult,
    StepConfig,
    fit_approximate,
    fit_inverse_gradient,
    fit_moments,
    fit_naive_gradient,
    fit_t_full,
)
from pyellcop.estimate.exceptions import BracketError
from pyellcop.testgen import CaseSpec, generate_case, random_correlation_with_spectrum
from pyellcop.tools.utils import Stopwatch

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOT_CONVERGED = 2


def _parameters(args: argparse.Namespace) -> dict:
    return {
        k: v for k, v in sorted(vars(args).items()) if k not in ("handler", "log_level")
    }


def _sidecar(path: str | None, suffix: str) -> str | None:
    return None if path is None else f"{os.path.splitext(path)[0]}{suffix}"


def resolve_model(family: str, nu: float | None, method: str | None = None) -> CopulaModel | None:
    """
    The copula model selected by --family/--nu. The joint ν fit takes no
    model and returns None.

    :raises UsageError: on inconsistent flags
    """
    family = Family(family)
    if method == "full-t":
        if family is not Family.STUDENT_T:
            raise UsageError("--method full-t requires --family t")
        if nu is not None:
            raise UsageError("--method full-t estimates nu; do not pass --nu")
        return None
    if family is Family.STUDENT_T:
        if nu is None:
            raise UsageError("--family t requires --nu unless --method full-t")
        if not nu > 0:
            raise UsageError(f"--nu must be positive, got {nu}")
        return CopulaModel.student_t(nu)
    if nu is not None:
        raise UsageError("--nu is only valid with --family t")
    return CopulaModel.gaussian()


def step_config(args: argparse.Namespace) -> StepConfig:
    overrides = {
        "lambda0": args.lambda0,
        "k1": args.k1,
        "k2": args.k2,
        "tol_param": args.tol,
        "max_iters": args.max_iters,
    }
    try:
        return StepConfig(**{k: v for k, v in overrides.items() if v is not None})
    except ValueError as e:
        raise UsageError(f"invalid step configuration: {e}")


def cmd_fit(args: argparse.Namespace) -> int:
    """Fit a copula correlation matrix to pseudo-observations."""
    model = resolve_model(args.family, args.nu, args.method)
    cfg = step_config(args)
    watch = Stopwatch()

    with watch.phase("ingest"):
        ingested = ingest(args.input, args.format)
    sample = ingested.sample

    nu_hat = None
    with watch.phase("fit"):
        if args.method == "full-t":
            if not 0.0 < args.nu_lo < args.nu_hi:
                raise UsageError("the full-t bracket needs 0 < --nu-lo < --nu-hi")
            try:
                fit, dof = fit_t_full(sample, (args.nu_lo, args.nu_hi), cfg)
            except BracketError as e:
                print(f"pyellcop: {e}", file=sys.stderr)
                return EXIT_NOT_CONVERGED
            nu_hat = dof.nu
        elif args.method == "moments":
            fit = fit_moments(sample, model)
        elif args.method == "approx":
            fit = fit_approximate(
                transform(sample, model), model, max_iters=cfg.max_iters, tol=cfg.tol_param
            )
        elif args.method == "naive":
            fit = fit_naive_gradient(transform(sample, model), model, cfg)
        else:
            fit = fit_inverse_gradient(transform(sample, model), model, cfg)

    result = fit.as_dict(include_trace=args.trace)
    if nu_hat is not None:
        result["nu_hat"] = nu_hat
    result["n"] = sample.n
    result["clamped"] = ingested.clamped
    manifest = RunManifest(
        command="fit",
        parameters=_parameters(args),
        seeds={"seed": args.seed},
        timings=watch.timings,
    )
    write_json({**result, "manifest": manifest}, args.out)
    return exit_code(fit)


def exit_code(fit: FitResult) -> int:
    return EXIT_OK if fit.converged else EXIT_NOT_CONVERGED


def _case_spec(args: argparse.Namespace, n_obs: int) -> CaseSpec:
    model = resolve_model(args.family, args.nu)
    try:
        return CaseSpec(dim=args.dim, nu=model.nu, n_obs=n_obs, seed=args.seed)
    except ValueError as e:
        raise UsageError(str(e))


def cmd_sample(args: argparse.Namespace) -> int:
    """Draw a sample from a copula with a random correlation matrix."""
    spec = _case_spec(args, args.n)
    watch = Stopwatch()
    with watch.phase("generate"):
        rho, sample = generate_case(spec)
    write_csv(sample.u.tolist(), args.out)
    if args.rho_out is not None:
        write_csv(rho.tolist(), args.rho_out)
    if args.out is not None:
        manifest = RunManifest(
            command="sample",
            parameters=_parameters(args),
            seeds={"seed": args.seed},
            timings=watch.timings,
        )
        write_json(manifest, _sidecar(args.out, ".manifest.json"))
    return EXIT_OK


def cmd_gen_corr(args: argparse.Namespace) -> int:
    """Generate a random correlation matrix and its spectrum."""
    if args.dim < 2:
        raise UsageError(f"--dim must be at least 2, got {args.dim}")
    watch = Stopwatch()
    with watch.phase("generate"):
        rho, spectrum = random_correlation_with_spectrum(args.dim, args.seed)
    write_csv(rho.tolist(), args.out)
    spectrum_out = args.spectrum_out or _sidecar(args.out, ".spectrum.csv")
    write_csv([[float(x)] for x in spectrum], spectrum_out, header=["eigenvalue"])
    if args.out is not None:
        manifest = RunManifest(
            command="gen-corr",
            parameters=_parameters(args),
            seeds={"seed": args.seed},
            timings=watch.timings,
        )
        write_json(manifest, _sidecar(args.out, ".manifest.json"))
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    """Compare the inverse gradient and approximate estimators over synthetic cases."""
    if args.cases_per_cell < 1:
        raise UsageError("--cases-per-cell must be at least 1")
    try:
        jobs = resolve_jobs(args.jobs)
    except ValueError as e:
        raise UsageError(str(e))
    runner = ExperimentRunner(
        dims=args.dims,
        nus=args.nus,
        cases_per_cell=args.cases_per_cell,
        n_obs=args.n_obs,
        seed=args.seed,
        jobs=jobs,
    )
    watch = Stopwatch()
    with watch.phase("run"):
        records = runner.run()
    with watch.phase("summarize"):
        cells = runner.summarize(records, args.eig_bins)

    write_csv([r.row() for r in records], args.out, header=EXPERIMENT_COLUMNS)
    manifest = RunManifest(
        command="experiment",
        parameters=_parameters(args),
        seeds={"seed": args.seed},
        timings=watch.timings,
    )
    summary_path = args.summary or _sidecar(args.out, ".summary.json")
    write_json({"cells": cells, "manifest": manifest}, summary_path)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Time the inverse gradient fit on one generated case."""
    if args.repeats < 1:
        raise UsageError("--repeats must be at least 1")
    spec = _case_spec(args, args.n_obs)
    watch = Stopwatch()
    with watch.phase("generate"):
        _, sample = generate_case(spec)
        z = transform(sample, spec.model)

    times, logliks, statuses = [], [], []
    for _ in range(args.repeats):
        start = time.perf_counter()
        fit = fit_inverse_gradient(z, spec.model)
        times.append(time.perf_counter() - start)
        logliks.append(fit.loglik)
        statuses.append(fit.status.value)
    watch.timings["fit"] = sum(times)

    report = {
        "d": spec.dim,
        "n_obs": spec.n_obs,
        "nu": spec.nu,
        "times": times,
        "median": statistics.median(times),
        "max": max(times),
        "loglik": logliks,
        "status": statuses,
        "manifest": RunManifest(
            command="bench",
            parameters=_parameters(args),
            seeds={"seed": args.seed},
            timings=watch.timings,
        ),
    }
    write_json(report, args.out)
    return EXIT_OK
