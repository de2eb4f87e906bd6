import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from .base import GroupInstance

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PurityReport:
    """
    Attributes:
        depth: the N of the probe
        survival: (element, largest n <= N with element ∈ φⁿ(G)) per sampled element
        violators: non-identity elements surviving every n <= N
    """

    depth: int
    survival: tuple[tuple[Any, int], ...]
    violators: tuple[Any, ...]

    @property
    def passed(self) -> bool:
        return not self.violators


def purity_probe(group: GroupInstance, depth: int, elements: Iterable) -> PurityReport:
    """Look for non-identity elements that lie in φⁿ(G) for every n <= depth."""

    if depth < 1:
        raise ValueError(f"purity probe depth must be at least 1, got {depth}")
    survival = []
    for x in elements:
        n = 0
        while n < depth and group.phi_preimage(x, n + 1) is not None:
            n += 1
        survival.append((x, n))
    violators = tuple(x for x, n in survival if n == depth and x != group.identity)
    if violators:
        log.warning(
            "%s: %d elements lie in every φ^n(G), n <= %d",
            group.id,
            len(violators),
            depth,
        )
    return PurityReport(depth, tuple(survival), violators)


def check_image_hypothesis(group: GroupInstance, cap: int = 16) -> int | None:
    """Least k <= cap with φ^k(G) inside every configured base subgroup."""

    bases = [group.image(0, base) for base in group.bases]
    for k in range(cap + 1):
        image = group.image(k)
        if all(group.contains_subgroup(base, image) for base in bases):
            return k
    log.warning("%s: no φ^k(G) with k <= %d lies in %s", group.id, cap, group.bases)
    return None
