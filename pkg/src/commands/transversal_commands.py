"""Transversal-polymatroid commands: hibi, trans-gb, gorenstein."""

import logging

from src.commands.inputs import describe_source, load_transversal
from src.commands.report import Report, binomial_list, resolve
from src.core.toric import linear_relations, white_check
from src.core.transversal import gorenstein_candidate, hibi_relations, transversal_groebner
from src.utils.formatters import format_binomial, format_groebner_lines
from src.validators.input_validator import GorensteinInput, TransversalInput

logger = logging.getLogger(__name__)


def _transversal_input(args, settings) -> TransversalInput:
    return TransversalInput(
        path=args.path,
        hibi_variable_cap=resolve(args.hibi_variable_cap, settings.hibi_variable_cap),
        step_cap=resolve(args.step_cap, settings.step_cap),
        d_max=resolve(args.d_max, 2),
        fiber_cap=resolve(args.fiber_cap, settings.fiber_cap),
    )


def cmd_hibi(args, settings) -> Report:
    validated = _transversal_input(args, settings)
    structure = load_transversal(validated.path)
    presentation = structure.presentation()
    report = Report(command="hibi", config=validated.model_dump())
    with report.timed("hibi"):
        moves = hibi_relations(structure, validated.hibi_variable_cap)
    linear = linear_relations(presentation)
    with report.timed("white_check"):
        check = white_check(presentation, moves, max(2, validated.d_max), validated.fiber_cap)
    report.verdicts = {"hibi_connects_fibers": check.passed}
    report.properties = {
        **describe_source(structure),
        "variables": len(presentation),
        "hibi_count": len(moves),
        "hibi_relations": binomial_list(moves, presentation),
        "linear_relations": binomial_list(linear, presentation),
    }
    report.statistics = {"linear_relations": len(linear), "d_max": check.d_max}
    return report


def cmd_trans_gb(args, settings) -> Report:
    validated = _transversal_input(args, settings)
    structure = load_transversal(validated.path)
    report = Report(command="trans-gb", config=validated.model_dump())
    with report.timed("transversal_groebner"):
        result = transversal_groebner(structure, validated.hibi_variable_cap, validated.step_cap)
    presentation = result.structure.presentation()
    report.verdicts = {
        "hibi_is_groebner": result.hibi_is_groebner,
        "top_avoids_leading_terms": result.top_avoids_leading_terms,
        "leading_terms_preserved": result.leading_terms_preserved,
        "substituted_is_groebner": result.substituted_is_groebner,
        "with_linear_is_groebner": result.with_linear_is_groebner,
        "quadratic": result.quadratic,
    }
    report.properties = {
        "orderings": [[i + 1 for i in subset] for subset in result.structure.subsets],
        "linear_relation": format_binomial(result.linear, presentation),
        "groebner_basis": format_groebner_lines(result.basis, presentation),
    }
    report.statistics = {"hibi_count": result.hibi_count, "size": len(result.basis)}
    return report


def cmd_gorenstein(args, settings) -> Report:
    validated = GorensteinInput(path=args.path, max_degree=args.max_degree)
    structure = load_transversal(validated.path)
    report = Report(command="gorenstein", config=validated.model_dump())
    with report.timed("hilbert"):
        result = gorenstein_candidate(structure, validated.max_degree)
    hypotheses = result.equal_sizes and result.single_linear_relation
    # the palindromic claim is only made under its hypotheses
    if hypotheses:
        report.verdicts = {"palindromic": result.palindromic}
    report.properties = {
        **describe_source(structure),
        "equal_sizes": result.equal_sizes,
        "single_linear_relation": result.single_linear_relation,
        "palindromic": result.palindromic,
        "hilbert_function": list(result.hilbert.values),
        "dim": result.hilbert.dim,
        "h_vector": list(result.hilbert.h_vector),
        "segre_dim": result.segre.dim,
        "segre_h_vector": list(result.segre.h_vector),
    }
    return report


def register_transversal_commands(subparsers, common):
    """Register the transversal commands on the subcommand parser."""
    for name, handler, text in (
        ("hibi", cmd_hibi, "Hibi relations of a transversal presentation"),
        ("trans-gb", cmd_trans_gb, "Quadratic Groebner basis after the linear substitution"),
    ):
        parser = subparsers.add_parser(name, parents=[common], help=text)
        parser.add_argument("path", help="TRANSVERSAL file")
        parser.add_argument("--hibi-variable-cap", dest="hibi_variable_cap", type=int, default=None)
        parser.set_defaults(handler=handler)

    gorenstein = subparsers.add_parser(
        "gorenstein", parents=[common], help="Palindromicity of the h-vector"
    )
    gorenstein.add_argument("path", help="TRANSVERSAL file")
    gorenstein.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    gorenstein.set_defaults(handler=cmd_gorenstein)
