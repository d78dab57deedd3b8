"""Algebra-invariant commands: hilbert, rees."""

import logging

from src.commands.inputs import describe_source, load_basis, load_source
from src.commands.report import Report, binomial_list, resolve
from src.core.bases import ProductStructure, has_sep
from src.core.invariants import hilbert_data, is_palindromic, rees_bidegrees
from src.core.toric import build_presentation, minimal_generators
from src.validators.input_validator import HilbertInput, ReesInput

logger = logging.getLogger(__name__)

REES_ALLOWED = {(0, 1), (0, 2), (1, 1)}


def cmd_hilbert(args, settings) -> Report:
    validated = HilbertInput(
        path=args.path, max_degree=args.max_degree, allow_unstable=args.allow_unstable
    )
    basis = load_basis(validated.path)
    report = Report(command="hilbert", config=validated.model_dump())
    with report.timed("hilbert"):
        data = hilbert_data(basis, validated.max_degree, validated.allow_unstable)
    report.verdicts = {"stabilized": data.stabilized}
    report.properties = {
        **describe_source(basis),
        "hilbert_function": list(data.values),
        "dim": data.dim,
        "h_vector": list(data.h_vector),
        "palindromic": is_palindromic(data.h_vector),
        "max_degree": data.max_degree,
    }
    return report


def _sep_source(source) -> bool:
    if isinstance(source, ProductStructure):
        return all(has_sep(f)[0] for f in source.factors)
    return has_sep(source)[0]


def cmd_rees(args, settings) -> Report:
    validated = ReesInput(
        path=args.path,
        cap_x=resolve(args.cap_x, settings.rees_cap_x),
        cap_y=resolve(args.cap_y, settings.rees_cap_y),
        fiber_cap=resolve(args.fiber_cap, settings.fiber_cap),
    )
    source = load_source(validated.path)
    report = Report(command="rees", config=validated.model_dump())
    with report.timed("rees"):
        result = rees_bidegrees(source, validated.cap_x, validated.cap_y, validated.fiber_cap)
    with report.timed("toric_slice"):
        toric = minimal_generators(build_presentation(source), validated.cap_y, validated.fiber_cap)

    report.verdicts = {"toric_slice_matches": sorted(result.toric_part()) == sorted(toric)}
    sep = _sep_source(source)
    if sep:
        report.verdicts["bidegrees_within_bound"] = result.within(REES_ALLOWED)
    bidegrees = [list(b.as_tuple()) for b in result.bidegrees]
    report.properties = {
        **describe_source(source),
        "sep": sep,
        "bidegrees": bidegrees,
        "generators": binomial_list(result.generators, result.presentation),
        "caps": [validated.cap_x, validated.cap_y],
    }
    report.statistics = {
        "generators": len(result.generators),
        "degree_one": result.degree_one_count,
    }
    if result.degree_one_count:
        logger.warning(f"{result.degree_one_count} Rees generator(s) of bidegree (0, 1)")
    return report


def register_invariant_commands(subparsers, common):
    """Register the invariant commands on the subcommand parser."""
    hilbert = subparsers.add_parser("hilbert", parents=[common], help="Hilbert function and h-vector")
    hilbert.add_argument("path")
    hilbert.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    hilbert.add_argument(
        "--allow-unstable", dest="allow_unstable", action="store_true",
        help="Report an h-vector that has not stabilized instead of failing",
    )
    hilbert.set_defaults(handler=cmd_hilbert)

    rees = subparsers.add_parser("rees", parents=[common], help="Bidegrees of Rees-ideal generators")
    rees.add_argument("path")
    rees.add_argument("--cap-x", dest="cap_x", type=int, default=None)
    rees.add_argument("--cap-y", dest="cap_y", type=int, default=None)
    rees.set_defaults(handler=cmd_rees)
