"""Toric-ideal commands: toric, white, groebner."""

import logging

from src.commands.inputs import load_presentation
from src.commands.report import Report, binomial_list, resolve
from src.core.groebner import (
    MonomialOrder,
    OrderKind,
    buchberger,
    certify_generation,
    is_quadratic,
    search_quadratic_order,
)
from src.core.toric import (
    MoveSet,
    MoveKind,
    Presentation,
    exchange_relations,
    linear_relations,
    minimal_generators,
    single_column_moves,
    white_check,
)
from src.utils.errors import PreconditionViolationError
from src.utils.formatters import format_groebner_lines, format_ymonomial
from src.validators.input_validator import MOVE_KINDS, ORDER_KINDS, GroebnerInput, ToricInput, WhiteInput

logger = logging.getLogger(__name__)


def _caps(args, settings) -> dict:
    return {
        "d_max": resolve(args.d_max, settings.d_max),
        "fiber_cap": resolve(args.fiber_cap, settings.fiber_cap),
        "step_cap": resolve(args.step_cap, settings.step_cap),
    }


def _degree_counts(binomials) -> dict[str, int]:
    counts: dict[str, int] = {}
    for b in binomials:
        counts[str(b.degree)] = counts.get(str(b.degree), 0) + 1
    return counts


def cmd_toric(args, settings) -> Report:
    validated = ToricInput(path=args.path, **_caps(args, settings))
    presentation = load_presentation(validated.path)
    report = Report(command="toric", config=validated.model_dump())
    with report.timed("minimal_generators"):
        generators = minimal_generators(presentation, validated.d_max, validated.fiber_cap)
    with report.timed("self_check"):
        check = white_check(presentation, generators, max(2, validated.d_max), validated.fiber_cap)
    linear = linear_relations(presentation)
    report.verdicts = {"generators_connect_fibers": check.passed}
    report.properties = {
        "variables": [
            {"label": v.label, "image": str(v.image)} for v in presentation.variables
        ],
        "linear_relations": binomial_list(linear, presentation),
        "minimal_generators": binomial_list(generators, presentation),
        "d_max": validated.d_max,
    }
    report.statistics = {
        "generator_degrees": _degree_counts(generators),
        "proper_exchange_relations": len(exchange_relations(presentation)),
    }
    return report


def _moves_for(kind: str, presentation: Presentation, validated: WhiteInput) -> MoveSet:
    if kind == "proper":
        return exchange_relations(presentation)
    if kind == "generalized":
        return exchange_relations(presentation, generalized=True)
    if kind == "single-column":
        return single_column_moves(presentation, validated.single_column_degree, validated.fiber_cap)
    if kind == "minimal":
        return MoveSet(
            MoveKind.CUSTOM, tuple(minimal_generators(presentation, validated.d_max, validated.fiber_cap))
        )
    return MoveSet(MoveKind.CUSTOM)


def cmd_white(args, settings) -> Report:
    validated = WhiteInput(
        path=args.path,
        moves=args.moves,
        single_column_degree=resolve(args.single_column_degree, settings.single_column_degree),
        **_caps(args, settings),
    )
    presentation = load_presentation(validated.path)
    report = Report(command="white", config=validated.model_dump())
    with report.timed("moves"):
        moves = _moves_for(validated.moves, presentation, validated)
    with report.timed("white_check"):
        result = white_check(presentation, moves, validated.d_max, validated.fiber_cap)
    report.verdicts = {"fibers_connected": result.passed}
    report.properties = {"moves": validated.moves, "d_max": result.d_max, "truncated": True}
    report.statistics = {
        "moves": result.move_count,
        "linear_relations": result.linear_count,
        "per_degree": [
            {
                "degree": s.degree,
                "monomials": s.monomials,
                "fibers": s.fibers,
                "nontrivial_fibers": s.nontrivial_fibers,
                "largest_fiber": s.largest_fiber,
                "disconnected_fibers": s.disconnected_fibers,
            }
            for s in result.per_degree
        ],
    }
    if result.first_failure is not None:
        failure = result.first_failure
        report.witnesses["fiber"] = {
            "degree": failure.degree,
            "target": str(failure.target),
            "components": [
                [format_ymonomial(m, presentation) for m in component]
                for component in failure.components
            ],
        }
    return report


def _ranking(labels: list[str] | None, presentation: Presentation) -> tuple[int, ...]:
    if not labels:
        return tuple(range(len(presentation)))
    try:
        return tuple(presentation.monomial(label)[0] for label in labels)
    except KeyError as e:
        raise PreconditionViolationError(str(e.args[0]), operation="groebner") from e


def cmd_groebner(args, settings) -> Report:
    validated = GroebnerInput(
        path=args.path,
        order=args.order,
        ranking=args.ranking.split(",") if args.ranking else None,
        search=args.search,
        search_limit=resolve(args.search_limit, settings.order_search_limit),
        **_caps(args, settings),
    )
    presentation = load_presentation(validated.path)
    report = Report(command="groebner", config=validated.model_dump())
    with report.timed("minimal_generators"):
        generators = minimal_generators(presentation, validated.d_max, validated.fiber_cap)

    if validated.search:
        with report.timed("order_search"):
            search = search_quadratic_order(
                generators, presentation, validated.search_limit, validated.step_cap
            )
        report.verdicts = {"quadratic_order_found": search.first_quadratic is not None}
        report.properties = {
            "first_quadratic": search.first_quadratic.describe(presentation)
            if search.first_quadratic
            else None,
        }
        report.statistics = {
            "orders_tried": len(search.outcomes),
            "outcomes": [
                {
                    **outcome.order.describe(presentation),
                    "size": outcome.size,
                    "quadratic": outcome.quadratic,
                    "timed_out": outcome.timed_out,
                }
                for outcome in search.outcomes
            ],
        }
        return report

    order = MonomialOrder(OrderKind(validated.order), _ranking(validated.ranking, presentation))
    with report.timed("buchberger"):
        gb = buchberger(generators, order, presentation=presentation, step_cap=validated.step_cap)
    with report.timed("certify"):
        certificate = certify_generation(
            generators, order, presentation, validated.d_max, validated.fiber_cap, validated.step_cap
        )
    report.verdicts = {"generation_certified": certificate.certified}
    report.properties = {
        "order": order.describe(presentation),
        "quadratic": is_quadratic(gb),
        "groebner_basis": format_groebner_lines(gb, presentation),
        "d_max": validated.d_max,
    }
    report.statistics = {**gb.statistics, "size": len(gb), "generators": len(generators)}
    if certificate.failing_target is not None:
        report.witnesses["fiber"] = {
            "target": list(certificate.failing_target),
            "normal_forms": [format_ymonomial(m, presentation) for m in certificate.normal_forms],
        }
    return report


def register_toric_commands(subparsers, common):
    """Register the toric-ideal commands on the subcommand parser."""
    toric = subparsers.add_parser("toric", parents=[common], help="Presentation and minimal generators")
    toric.add_argument("path")
    toric.set_defaults(handler=cmd_toric)

    white = subparsers.add_parser("white", parents=[common], help="Fiber-connectivity check of a move family")
    white.add_argument("path")
    white.add_argument("--moves", choices=MOVE_KINDS, default="proper")
    white.add_argument("--single-column-degree", dest="single_column_degree", type=int, default=None)
    white.set_defaults(handler=cmd_white)

    groebner = subparsers.add_parser("groebner", parents=[common], help="Groebner basis of the toric ideal")
    groebner.add_argument("path")
    groebner.add_argument("--order", choices=ORDER_KINDS, default="lex")
    groebner.add_argument("--ranking", default=None, help="Comma-separated labels, largest first")
    groebner.add_argument("--search", action="store_true", help="Search for an order with a quadratic basis")
    groebner.add_argument("--search-limit", dest="search_limit", type=int, default=None)
    groebner.set_defaults(handler=cmd_groebner)
