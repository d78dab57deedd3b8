"""Seeded random instances: Veronese-type bases and their products."""

import logging
import math

from src.core.bases import (
    MonomialBasis,
    ProductStructure,
    lattice_point_count,
    product_of,
    veronese_type,
)
from src.utils.errors import PreconditionViolationError
from src.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

PROFILE_ATTEMPTS = 1_000
SIZE_ATTEMPTS = 1_000
MIN_BASIS_SIZE = 2


def random_profile(
    rng: SplitMix64, n: int, d: int, min_size: int = MIN_BASIS_SIZE
) -> tuple[list[int], list[int]]:
    """Bounds drawn uniformly per coordinate, redrawn until the box holds at least
    ``min_size`` monomials of degree d.

    ``min_size`` drops to 1 when n = 1 or d = 0, where every Veronese type is a
    single monomial. Falls back to lower = 0, upper = d.
    """
    target = min_size if n >= 2 and d >= 1 else 1
    for _ in range(PROFILE_ATTEMPTS):
        lower = [rng.between(0, d) for _ in range(n)]
        upper = [rng.between(lo, d) for lo in lower]
        if sum(lower) <= d <= sum(upper) and lattice_point_count(n, d, lower, upper) >= target:
            return lower, upper
    logger.debug(f"profile rejection exhausted for n={n}, d={d}; using the full Veronese")
    return [0] * n, [d] * n


def random_veronese(rng: SplitMix64, n: int, d: int) -> MonomialBasis:
    lower, upper = random_profile(rng, n, d)
    return veronese_type(n, d, lower, upper)


def random_subset(rng: SplitMix64, basis: MonomialBasis) -> MonomialBasis:
    """A random subset of a basis, each element kept with probability 1/2.

    At least min(2, |basis|) elements survive.
    """
    kept = [m for m in basis.elements if rng.below(2)]
    floor = min(MIN_BASIS_SIZE, len(basis))
    while len(kept) < floor:
        missing = [m for m in basis.elements if m not in kept]
        kept.append(missing[rng.below(len(missing))])
    return MonomialBasis.of(kept)


def random_product(rng: SplitMix64, n: int, degrees: list[int]) -> ProductStructure:
    return product_of(*(random_veronese(rng, n, d) for d in degrees))


def presentation_size(structure: ProductStructure) -> int:
    return math.prod(len(factor) for factor in structure.factors)


def random_sep_product(
    rng: SplitMix64,
    n_max: int,
    d_max: int,
    s_max: int,
    max_variables: int,
    n: int | None = None,
    s_min: int = 1,
) -> ProductStructure:
    """A product of s_min <= s <= s_max Veronese-type bases in n <= n_max variables, redrawn while too large."""
    fixed = n
    s_min = min(s_min, s_max)
    for _ in range(SIZE_ATTEMPTS):
        n = fixed if fixed is not None else rng.between(min(2, n_max), n_max)
        s = rng.between(s_min, s_max)
        degrees = [rng.between(1, d_max) for _ in range(s)]
        structure = random_product(rng, n, degrees)
        if presentation_size(structure) <= max_variables:
            return structure
    raise PreconditionViolationError(
        f"No instance with at most {max_variables} variables after {SIZE_ATTEMPTS} draws.",
        operation="random_sep_product",
    )


def random_instances(seed: int, n: int, d: int, s: int, count: int) -> list[ProductStructure]:
    """``count`` products of s random degree-d Veronese-type bases; instance k depends only on (seed, k)."""
    root = SplitMix64(seed)
    return [random_product(root.fork(k), n, [d] * s) for k in range(count)]
