"""Experiment commands: random instance files and corpus runs."""

import logging
from pathlib import Path

from src.commands.report import Report, resolve
from src.experiments.corpus import SuiteConfig, run_corpus
from src.experiments.generator import random_instances
from src.files.writers import structure_to_text, write_text
from src.validators.input_validator import CORPUS_SUITES, CorpusInput, RandomInput

logger = logging.getLogger(__name__)

DEFAULT_REPRODUCER = "corpus-reproducer.txt"


def cmd_random(args, settings) -> Report:
    validated = RandomInput(
        seed=resolve(args.seed, settings.seed),
        n=args.n,
        d=args.d,
        s=args.s,
        count=args.count,
        directory=args.directory,
    )
    report = Report(command="random", config=validated.model_dump())
    files = []
    with report.timed("random"):
        for k, structure in enumerate(
            random_instances(validated.seed, validated.n, validated.d, validated.s, validated.count)
        ):
            path = Path(validated.directory) / f"instance-{k:04d}.txt"
            write_text(path, structure_to_text(structure))
            files.append(str(path))
    logger.info(f"wrote {len(files)} instance(s) to {validated.directory}")
    report.properties = {"files": files, "count": len(files)}
    return report


def _suites(text: str | None) -> list[str]:
    if not text:
        return list(CORPUS_SUITES)
    return [name for name in text.split(",") if name.strip()]


def cmd_corpus(args, settings) -> Report:
    validated = CorpusInput(
        seed=resolve(args.seed, settings.seed),
        count=args.count,
        suites=_suites(args.suites),
        n_max=args.n_max,
        d_max_factor=args.d_max_factor,
        s_max=args.s_max,
        fiber_d_max=resolve(args.d_max, settings.d_max),
        max_variables=args.max_variables,
        jobs=resolve(args.jobs, settings.jobs),
        reproducer=args.reproducer,
        fiber_cap=resolve(args.fiber_cap, settings.fiber_cap),
        step_cap=resolve(args.step_cap, settings.step_cap),
    )
    config = SuiteConfig(
        seed=validated.seed,
        n_max=validated.n_max,
        d_max_factor=validated.d_max_factor,
        s_max=validated.s_max,
        fiber_d_max=validated.fiber_d_max,
        max_variables=validated.max_variables,
        fiber_cap=validated.fiber_cap,
        step_cap=validated.step_cap,
    )
    report = Report(command="corpus", config=validated.model_dump())
    with report.timed("corpus"):
        summary = run_corpus(validated.suites, validated.count, config, validated.jobs)

    counts = summary.counts()
    report.verdicts = summary.verdicts()
    report.statistics = {"suites": counts, "instances": len(summary.results)}
    report.properties = {"suites": validated.suites, "count": validated.count}

    failure = summary.first_failure()
    if failure is not None:
        path = validated.reproducer or DEFAULT_REPRODUCER
        if failure.instance:
            write_text(path, failure.instance)
            report.properties["reproducer"] = path
        report.witnesses["first_failure"] = {
            "suite": failure.suite,
            "index": failure.index,
            "error": failure.error,
            "detail": failure.detail,
        }
        logger.warning(f"first failure: {failure.suite}[{failure.index}]")
    return report


def register_experiment_commands(subparsers, common):
    """Register the random-instance and corpus commands on the subcommand parser."""
    random = subparsers.add_parser("random", parents=[common], help="Write seeded random product instances")
    random.add_argument("--n", type=int, required=True, help="Number of variables")
    random.add_argument("--d", type=int, required=True, help="Degree of every factor")
    random.add_argument("--s", type=int, required=True, help="Number of factors")
    random.add_argument("--count", type=int, required=True, help="Number of instances")
    random.add_argument("--directory", default="instances", help="Directory receiving the files")
    random.set_defaults(handler=cmd_random)

    corpus = subparsers.add_parser("corpus", parents=[common], help="Run property suites over a random corpus")
    corpus.add_argument("--count", type=int, default=100, help="Instances per suite")
    corpus.add_argument("--suites", default=None, help=f"Comma-separated subset of: {', '.join(CORPUS_SUITES)}")
    corpus.add_argument("--n-max", dest="n_max", type=int, default=5)
    corpus.add_argument("--d-max-factor", dest="d_max_factor", type=int, default=3)
    corpus.add_argument("--s-max", dest="s_max", type=int, default=3)
    corpus.add_argument("--max-variables", dest="max_variables", type=int, default=60)
    corpus.add_argument("--reproducer", default=None, help=f"Reproducer path (default: {DEFAULT_REPRODUCER})")
    corpus.set_defaults(handler=cmd_corpus)
