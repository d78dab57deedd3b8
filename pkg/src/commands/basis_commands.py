"""Basis commands: check, exchange, veronese, product, power."""

import logging

from src.commands.inputs import describe_source, load_basis, load_presentation
from src.commands.report import Report, binomial_list
from src.core.bases import (
    has_sep,
    is_polymatroidal,
    lattice_point_count,
    power,
    product_of,
    profile,
    shortcut_property,
    verify_symmetric_exchange,
    veronese_type,
)
from src.core.toric import exchange_relations
from src.validators.input_validator import (
    CheckInput,
    ExchangeInput,
    PowerInput,
    ProductInput,
    VeroneseInput,
)

logger = logging.getLogger(__name__)


def _tokens(text: str) -> list[str]:
    return text.replace(",", " ").split()


def cmd_check(args, settings) -> Report:
    validated = CheckInput(path=args.path)
    basis = load_basis(validated.path)
    report = Report(command="check", config={"path": validated.path})
    with report.timed("check"):
        polymatroidal, poly_witness = is_polymatroidal(basis)
        symmetric, sym_witness = verify_symmetric_exchange(basis)
        sep, sep_witness = has_sep(basis)
        bounds = profile(basis)
    report.verdicts = {"polymatroidal": polymatroidal, "symmetric_exchange": symmetric}
    report.properties = {
        **describe_source(basis),
        "sep": sep,
        "veronese_type": sep,
        "lower": list(bounds.lower),
        "upper": list(bounds.upper),
        "elements": [str(m) for m in basis.elements],
    }
    if sep:
        report.properties["shortcut"] = shortcut_property(basis)
    for name, witness in (
        ("polymatroidal", poly_witness),
        ("symmetric_exchange", sym_witness),
        ("sep", sep_witness),
    ):
        if witness is not None:
            report.witnesses[name] = witness.as_dict()
    return report


def cmd_exchange(args, settings) -> Report:
    validated = ExchangeInput(path=args.path, generalized=args.generalized)
    presentation = load_presentation(validated.path)
    report = Report(command="exchange", config=validated.model_dump())
    with report.timed("exchange"):
        moves = exchange_relations(presentation, generalized=validated.generalized)
    report.properties = {
        "kind": moves.kind.value,
        "count": len(moves),
        "relations": binomial_list(moves, presentation),
        "variables": len(presentation),
    }
    return report


def cmd_veronese(args, settings) -> Report:
    validated = VeroneseInput(
        n=args.n, d=args.d, lower=_tokens(args.lower), upper=_tokens(args.upper)
    )
    report = Report(command="veronese", config=validated.model_dump())
    with report.timed("veronese"):
        basis = veronese_type(validated.n, validated.d, validated.lower, validated.upper)
        expected = lattice_point_count(validated.n, validated.d, validated.lower, validated.upper)
    report.verdicts = {"count_matches": expected == len(basis), "sep": has_sep(basis)[0]}
    report.properties = {
        "size": len(basis),
        "elements": [str(m) for m in basis.elements],
        "exponents": [list(m.exponents) for m in basis.elements],
    }
    return report


def cmd_product(args, settings) -> Report:
    validated = ProductInput(paths=args.paths)
    factors = [load_basis(path) for path in validated.paths]
    report = Report(command="product", config=validated.model_dump())
    with report.timed("product"):
        structure = product_of(*factors)
        polymatroidal, witness = is_polymatroidal(structure.flattened)
    factor_verdicts = [is_polymatroidal(f)[0] for f in factors]
    # a product of polymatroidal bases must stay polymatroidal
    report.verdicts = {"polymatroidal": polymatroidal or not all(factor_verdicts)}
    report.properties = {
        **describe_source(structure),
        "factors_polymatroidal": factor_verdicts,
        "product_polymatroidal": polymatroidal,
        "sep": has_sep(structure.flattened)[0],
        "size": len(structure.flattened),
        "elements": [str(m) for m in structure.flattened.elements],
    }
    if witness is not None:
        report.witnesses["polymatroidal"] = witness.as_dict()
    return report


def cmd_power(args, settings) -> Report:
    validated = PowerInput(path=args.path, k=args.k)
    basis = load_basis(validated.path)
    report = Report(command="power", config=validated.model_dump())
    sep = has_sep(basis)[0]
    with report.timed("power"):
        flattened = power(basis, validated.k).flattened
    report.verdicts = {"polymatroidal": is_polymatroidal(flattened)[0]}
    if sep:
        report.verdicts["sep_preserved"] = has_sep(flattened)[0]
    bounds = profile(flattened)
    report.properties = {
        "base_sep": sep,
        "size": len(flattened),
        "lower": list(bounds.lower),
        "upper": list(bounds.upper),
        "elements": [str(m) for m in flattened.elements],
    }
    return report


def register_basis_commands(subparsers, common):
    """Register the basis commands on the subcommand parser."""
    check = subparsers.add_parser("check", parents=[common], help="Exchange-property verdicts for a basis")
    check.add_argument("path", help="Basis, product or transversal file")
    check.set_defaults(handler=cmd_check)

    exchange = subparsers.add_parser("exchange", parents=[common], help="Symmetric exchange relations")
    exchange.add_argument("path")
    exchange.add_argument("--generalized", action="store_true", help="Drop the degree-inequality conditions")
    exchange.set_defaults(handler=cmd_exchange)

    veronese = subparsers.add_parser("veronese", parents=[common], help="Enumerate a Veronese-type basis")
    veronese.add_argument("--n", type=int, required=True, help="Number of variables")
    veronese.add_argument("--d", type=int, required=True, help="Degree")
    veronese.add_argument("--lower", required=True, help="Comma-separated lower bounds")
    veronese.add_argument("--upper", required=True, help="Comma-separated upper bounds")
    veronese.set_defaults(handler=cmd_veronese)

    product = subparsers.add_parser("product", parents=[common], help="Product of bases")
    product.add_argument("paths", nargs="+", help="One basis file per factor")
    product.set_defaults(handler=cmd_product)

    power_parser = subparsers.add_parser("power", parents=[common], help="k-th power of a basis")
    power_parser.add_argument("path")
    power_parser.add_argument("--k", type=int, required=True, help="Exponent")
    power_parser.set_defaults(handler=cmd_power)
