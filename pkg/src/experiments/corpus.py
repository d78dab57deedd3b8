"""Property suites over seeded random corpora.

Every (suite, index) pair derives its own generator from the seed, so results
do not depend on the worker count or on scheduling order.

Each instance also records whether it exercised the property at all (a fiber
with two or more members, a basis with two or more elements, a permutation
that moved something, a certified Groebner basis). A suite whose nontrivial
instances fall below NONTRIVIAL_FRACTION of its instances fails.
"""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from src.core.bases import (
    MonomialBasis,
    factor_power_element,
    has_sep,
    is_polymatroidal,
    is_veronese_type,
    power,
    product_of,
    shortcut_property,
    verify_symmetric_exchange,
)
from src.core.groebner import MonomialOrder, OrderKind, certify_generation
from src.core.monomials import Monomial
from src.core.toric import (
    MoveIndex,
    build_presentation,
    exchange_relations,
    fiber,
    fiber_connected,
    graded_fibers,
    linear_relations,
    minimal_generators,
    permute_column,
    same_component,
    single_column_moves,
    white_check,
)
from src.experiments.generator import (
    random_sep_product,
    random_subset,
    random_veronese,
)
from src.files.writers import structure_to_text
from src.utils.errors import PolymatroidError
from src.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

ORACLE_MAX_VARIABLES = 12
ORACLE_DRAWS = 10
PERMUTATION_ATTEMPTS = 200
NONTRIVIAL_FRACTION = 0.5


@dataclass(frozen=True)
class SuiteConfig:
    seed: int
    n_max: int = 5
    d_max_factor: int = 3
    s_max: int = 3
    fiber_d_max: int = 3
    max_variables: int = 60
    fiber_cap: int = 1_000_000
    step_cap: int = 1_000_000


@dataclass
class InstanceResult:
    suite: str
    index: int
    passed: bool
    instance: str = ""
    error: str | None = None
    detail: dict = field(default_factory=dict)
    nontrivial: bool = False


def nontrivial_floor(instances: int) -> int:
    return math.ceil(NONTRIVIAL_FRACTION * instances)


# ---------------------------------------------------------------------------
# Suites: each returns (passed, instance text, detail); detail["nontrivial"]
# says whether the instance exercised the property
# ---------------------------------------------------------------------------

def _product_instance(rng: SplitMix64, config: SuiteConfig, d_max: int | None = None, max_variables: int | None = None):
    """A product of at least two factors when s_max allows it; two factors of size >= 2 always share a fiber."""
    return random_sep_product(
        rng,
        config.n_max,
        d_max or config.d_max_factor,
        config.s_max,
        max_variables or config.max_variables,
        s_min=2,
    )


def _nontrivial_fibers(report) -> int:
    return sum(s.nontrivial_fibers for s in report.per_degree)


def _white(rng: SplitMix64, config: SuiteConfig):
    structure = _product_instance(rng, config)
    presentation = build_presentation(structure)
    proper = white_check(
        presentation, exchange_relations(presentation), config.fiber_d_max, config.fiber_cap
    )
    single = white_check(
        presentation,
        single_column_moves(presentation, config.fiber_d_max, config.fiber_cap),
        config.fiber_d_max,
        config.fiber_cap,
    )
    fibers = _nontrivial_fibers(proper)
    detail = {
        "variables": len(presentation),
        "proper": proper.passed,
        "single_column": single.passed,
        "nontrivial_fibers": fibers,
        "nontrivial": fibers > 0,
    }
    return proper.passed and single.passed, structure_to_text(structure), detail


def _sep_veronese(rng: SplitMix64, config: SuiteConfig):
    n = rng.between(min(2, config.n_max), config.n_max)
    d = rng.between(1, config.d_max_factor)
    basis = random_veronese(rng, n, d)
    from_veronese = not rng.below(2)
    if not from_veronese:
        basis = random_subset(rng, basis)
    verdict, _ = has_sep(basis)
    passed = verdict == is_veronese_type(basis) and (verdict or not from_veronese)
    detail = {"sep": verdict, "drawn_as_veronese": from_veronese, "size": len(basis), "nontrivial": len(basis) > 1}
    return passed, structure_to_text(basis), detail


def _power_sep(rng: SplitMix64, config: SuiteConfig):
    basis = random_veronese(
        rng, rng.between(min(2, config.n_max), config.n_max), rng.between(1, config.d_max_factor)
    )
    k = rng.between(1, 3)
    flattened = power(basis, k).flattened
    passed = has_sep(flattened)[0]
    for m in flattened.elements:
        parts = factor_power_element(basis, m, k)
        total = Monomial.one(basis.n)
        for part in parts:
            total = total.multiply(part)
        passed = passed and total == m
    return passed, structure_to_text(basis), {"k": k, "size": len(flattened), "nontrivial": len(basis) > 1}


POLYMATROIDAL_FACTOR_SIZE = 12


def _polymatroidal_basis(rng: SplitMix64, config: SuiteConfig, n: int | None = None) -> MonomialBasis:
    """The flattened product of at most two small Veronese-type bases."""
    structure = random_sep_product(
        rng, config.n_max, min(2, config.d_max_factor), 2,
        min(config.max_variables, POLYMATROIDAL_FACTOR_SIZE), n=n,
    )
    return structure.flattened


def _product_polymatroidal(rng: SplitMix64, config: SuiteConfig):
    first = _polymatroidal_basis(rng, config)
    second = _polymatroidal_basis(rng, config, n=first.n)
    structure = product_of(first, second)
    verdict, witness = is_polymatroidal(structure.flattened)
    detail = {
        "witness": witness.as_dict() if witness else None,
        "size": len(structure.flattened),
        "nontrivial": len(structure.flattened) > 1,
    }
    return verdict, structure_to_text(structure), detail


def _symmetric_exchange(rng: SplitMix64, config: SuiteConfig):
    basis = _polymatroidal_basis(rng, config)
    verdict, witness = verify_symmetric_exchange(basis)
    detail = {"witness": witness.as_dict() if witness else None, "size": len(basis), "nontrivial": len(basis) > 1}
    return verdict, structure_to_text(basis), detail


def _generalized_moves(rng: SplitMix64, config: SuiteConfig):
    structure = _product_instance(rng, config)
    presentation = build_presentation(structure)
    linear = list(linear_relations(presentation))
    proper = MoveIndex(list(exchange_relations(presentation)) + linear)
    both = MoveIndex(
        list(exchange_relations(presentation)) + list(exchange_relations(presentation, generalized=True)) + linear
    )
    checked = 0
    for e in range(2, config.fiber_d_max + 1):
        for members in graded_fibers(presentation, e, config.fiber_cap).values():
            if len(members) < 2:
                continue
            checked += 1
            if fiber_connected(members, proper).components != fiber_connected(members, both).components:
                detail = {"degree": e, "fiber": [list(m) for m in members], "nontrivial": True}
                return False, structure_to_text(structure), detail
    return True, structure_to_text(structure), {"fibers": checked, "nontrivial": checked > 0}


def _shortcut(rng: SplitMix64, config: SuiteConfig):
    basis = random_veronese(
        rng, rng.between(min(2, config.n_max), config.n_max), rng.between(1, config.d_max_factor)
    )
    return shortcut_property(basis), structure_to_text(basis), {"size": len(basis), "nontrivial": len(basis) > 1}


def _shuffle(rng: SplitMix64, size: int) -> list[int]:
    order = list(range(size))
    for k in range(size - 1, 0, -1):
        j = rng.below(k + 1)
        order[k], order[j] = order[j], order[k]
    return order


def _column_permutation(rng: SplitMix64, config: SuiteConfig):
    structure = _product_instance(rng, config)
    presentation = build_presentation(structure)
    # redraw until the permutation changes the monomial
    for _ in range(PERMUTATION_ATTEMPTS):
        e = rng.between(2, max(2, min(3, config.fiber_d_max)))
        mono = tuple(sorted(rng.below(len(presentation)) for _ in range(e)))
        column = rng.below(structure.s)
        permuted = permute_column(presentation, mono, column, _shuffle(rng, e))
        if permuted != mono:
            break
    detail = {"monomial": list(mono), "permuted": list(permuted), "column": column, "nontrivial": permuted != mono}
    if permuted == mono:
        return True, structure_to_text(structure), detail
    reachable = same_component(
        presentation, exchange_relations(presentation), mono, permuted, fiber_cap=config.fiber_cap
    )
    return reachable, structure_to_text(structure), detail


def _groebner_oracle(rng: SplitMix64, config: SuiteConfig):
    structure = _product_instance(
        rng, config, d_max=min(2, config.d_max_factor),
        max_variables=min(config.max_variables, ORACLE_MAX_VARIABLES),
    )
    presentation = build_presentation(structure)
    gens = minimal_generators(presentation, config.fiber_d_max, config.fiber_cap)
    order = MonomialOrder.standard(OrderKind.DEGREVLEX, len(presentation))
    certificate = certify_generation(
        gens, order, presentation, config.fiber_d_max, config.fiber_cap, config.step_cap
    )
    if not certificate.certified:
        logger.info(f"generation not certified on {len(presentation)} variables; oracle skipped")
        return True, structure_to_text(structure), {"certified": False, "nontrivial": False}
    gb = certificate.basis
    agreements = 0
    for _ in range(ORACLE_DRAWS):
        e = rng.between(1, 3)
        a = tuple(sorted(rng.below(len(presentation)) for _ in range(e)))
        members = fiber(presentation, presentation.image(a), e, config.fiber_cap)
        same = members[rng.below(len(members))]
        other = tuple(sorted(rng.below(len(presentation)) for _ in range(e)))
        for b in (same, other):
            in_fiber = presentation.image(a) == presentation.image(b)
            if in_fiber != (gb.normal_form(a) == gb.normal_form(b)):
                detail = {"a": list(a), "b": list(b), "certified": True, "nontrivial": True}
                return False, structure_to_text(structure), detail
            agreements += 1
    return True, structure_to_text(structure), {"certified": True, "pairs": agreements, "nontrivial": True}


SUITES: dict[str, Callable] = {
    "white": _white,
    "sep-veronese": _sep_veronese,
    "power-sep": _power_sep,
    "product-polymatroidal": _product_polymatroidal,
    "symmetric-exchange": _symmetric_exchange,
    "generalized-moves": _generalized_moves,
    "shortcut": _shortcut,
    "column-permutation": _column_permutation,
    "groebner-oracle": _groebner_oracle,
}


def _suite_rng(seed: int, suite: str, index: int) -> SplitMix64:
    offset = list(SUITES).index(suite)
    return SplitMix64(seed).fork(offset).fork(index)


def run_instance(task: tuple[str, int, SuiteConfig]) -> InstanceResult:
    """Run one suite on one instance; library errors are recorded, not raised."""
    suite, index, config = task
    rng = _suite_rng(config.seed, suite, index)
    try:
        passed, instance, detail = SUITES[suite](rng, config)
    except PolymatroidError as e:
        logger.warning(f"{suite}[{index}]: {e}")
        return InstanceResult(suite, index, False, error=str(e))
    nontrivial = bool(detail.pop("nontrivial", False))
    return InstanceResult(suite, index, bool(passed), instance, detail=detail, nontrivial=nontrivial)


@dataclass
class CorpusSummary:
    results: list[InstanceResult]

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.results:
            entry = out.setdefault(
                r.suite, {"instances": 0, "passed": 0, "failed": 0, "errors": 0, "nontrivial": 0}
            )
            entry["instances"] += 1
            if "certified" in r.detail:
                entry["certified"] = entry.get("certified", 0) + int(bool(r.detail["certified"]))
            if r.nontrivial:
                entry["nontrivial"] += 1
            if r.passed:
                entry["passed"] += 1
            else:
                entry["failed"] += 1
                if r.error:
                    entry["errors"] += 1
        for entry in out.values():
            entry["nontrivial_floor"] = nontrivial_floor(entry["instances"])
        return out

    def verdicts(self) -> dict[str, bool]:
        """A suite passes when nothing failed and enough instances were nontrivial."""
        return {
            suite: entry["failed"] == 0 and entry["nontrivial"] >= entry["nontrivial_floor"]
            for suite, entry in self.counts().items()
        }

    def first_failure(self) -> InstanceResult | None:
        return next((r for r in self.results if not r.passed), None)


def run_corpus(suites: list[str], count: int, config: SuiteConfig, jobs: int = 1) -> CorpusSummary:
    """Run ``count`` instances of each suite; results come back ordered by (suite, index)."""
    tasks = [(suite, index, config) for suite in suites for index in range(count)]
    logger.info(f"corpus: {len(tasks)} tasks over {len(suites)} suites, {jobs} worker(s)")
    if jobs <= 1 or len(tasks) <= 1:
        results = [run_instance(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    summary = CorpusSummary(results)
    for suite, entry in summary.counts().items():
        if entry["nontrivial"] < entry["nontrivial_floor"]:
            logger.warning(
                f"{suite}: only {entry['nontrivial']}/{entry['instances']} nontrivial instance(s)"
            )
    return summary
