"""
Basic cosets of lattice subgroups and the combinatorics built on them.

Set-level computation never goes beyond basic cosets: intersections of basic
cosets are basic or empty, and everything else is an integer combination of
indicators (a :class:`VirtualIndicator`).
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import EmptyDomainError, WitnessNotFoundError
from .groups import GroupInstance, IndexClass, IndexKind, LatticeSubgroup

log = logging.getLogger(__name__)

DEFAULT_WITNESS_CAP = 10**6


@dataclass(frozen=True, order=True)
class BasicCoset:
    rep: Any
    sub: LatticeSubgroup


@dataclass(frozen=True)
class VirtualIndicator:
    """Integer combination of basic-coset indicator functions."""

    terms: tuple[tuple[BasicCoset, int], ...] = ()

    @classmethod
    def of(cls, coefficients: Mapping[BasicCoset, int] | Iterable) -> "VirtualIndicator":
        items = (
            coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        )
        acc: dict[BasicCoset, int] = {}
        for coset, coeff in items:
            acc[coset] = acc.get(coset, 0) + coeff
        return cls(tuple(sorted((c, k) for c, k in acc.items() if k)))

    def __add__(self, other: "VirtualIndicator") -> "VirtualIndicator":
        return VirtualIndicator.of(self.terms + other.terms)

    def __neg__(self) -> "VirtualIndicator":
        return VirtualIndicator(tuple((c, -k) for c, k in self.terms))

    def __sub__(self, other: "VirtualIndicator") -> "VirtualIndicator":
        return self + -other

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def cosets(self) -> tuple[BasicCoset, ...]:
        return tuple(c for c, _ in self.terms)


@dataclass(frozen=True)
class Atom:
    """
    One nonempty cell of the Boolean algebra generated by a coset family.

    The cell is ``base`` minus the union of ``excluded``; ``support`` holds the
    indices of the input cosets containing it and ``witness`` is a verified point.
    """

    indicator: VirtualIndicator
    support: frozenset[int]
    base: BasicCoset
    excluded: tuple[BasicCoset, ...]
    witness: Any = field(compare=False)


class CosetLattice:
    """Coset operations over one group instance."""

    def __init__(self, group: GroupInstance, witness_cap: int = DEFAULT_WITNESS_CAP):
        if witness_cap < 1:
            raise ValueError(f"witness cap must be positive, got {witness_cap}")
        self.group = group
        self.witness_cap = witness_cap

    def coset(self, x, L: LatticeSubgroup) -> BasicCoset:
        return BasicCoset(self.group.coset_rep(x, L), L)

    def whole(self) -> BasicCoset:
        return BasicCoset(self.group.identity, self.group.whole())

    def contains(self, c: BasicCoset, x) -> bool:
        return self.group.member(self.group.left_quotient(c.rep, x), c.sub)

    def intersect(self, c1: BasicCoset, c2: BasicCoset) -> BasicCoset | None:
        rep = self.group.coset_meet(c1.rep, c1.sub, c2.rep, c2.sub)
        if rep is None:
            return None
        return BasicCoset(rep, self.group.meet(c1.sub, c2.sub))

    def intersect_all(self, cosets: Iterable[BasicCoset]) -> BasicCoset | None:
        result = None
        for i, c in enumerate(cosets):
            result = c if i == 0 else self.intersect(result, c)
            if result is None:
                return None
        return result

    def subset(self, c1: BasicCoset, c2: BasicCoset) -> bool:
        return self.intersect(c1, c2) == c1

    def translate(self, c: BasicCoset, g) -> BasicCoset:
        return self.coset(self.group.multiply(g, c.rep), c.sub)

    def phi(self, c: BasicCoset, k: int) -> BasicCoset:
        if k == 0:
            return c
        return self.coset(
            self.group.phi_pow(c.rep, k), self.group.phi_subgroup(c.sub, k)
        )

    def index_class(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass:
        return self.group.index_class(L, M)

    def translated_family(self, c: BasicCoset, K: LatticeSubgroup) -> list[BasicCoset]:
        """Split c into the cosets of sub(c)∩K it contains; needs a finite index."""

        inner = self.group.meet(c.sub, K)
        return [
            self.coset(self.group.multiply(c.rep, t), inner)
            for t in self.group.transversal(c.sub, inner)
        ]

    def evaluate(self, indicator: VirtualIndicator, x) -> int:
        return sum(k for c, k in indicator.terms if self.contains(c, x))

    def cell_indicator(
        self, base: BasicCoset, excluded: Sequence[BasicCoset]
    ) -> VirtualIndicator:
        """Inclusion–exclusion for 1_base · Π (1 − 1_d)."""

        terms: dict[BasicCoset, int] = {base: 1}
        for d in excluded:
            update = dict(terms)
            for c, k in terms.items():
                meet = self.intersect(c, d)
                if meet is not None:
                    update[meet] = update.get(meet, 0) - k
            terms = {c: k for c, k in update.items() if k}
        return VirtualIndicator.of(terms)

    # witnesses

    def witness_outside(self, D: BasicCoset | None, excluded: Sequence[BasicCoset]):
        """First element of D, in enumeration order, lying in no excluded coset."""

        if D is None:
            raise EmptyDomainError("cannot search for a witness in an empty coset")
        for count, y in enumerate(self.group.iter_subgroup(D.sub)):
            if count >= self.witness_cap:
                raise WitnessNotFoundError(
                    f"no element of {D} outside {len(excluded)} cosets",
                    self.witness_cap,
                )
            if count and count % 10_000 == 0:
                log.debug("witness search in %s: %d candidates so far", D, count)
            r = self.group.multiply(D.rep, y)
            if not any(self.contains(c, r) for c in excluded):
                return r
        raise EmptyDomainError(f"{D} is covered by the excluded cosets")

    def cell_witness(self, base: BasicCoset, excluded: Sequence[BasicCoset]):
        """
        A point of base outside every excluded coset, or None when the cell is empty.

        Excluded cosets of finite index in base are handled by running through the
        finitely many cosets of their common refinement; what remains is excluded
        with infinite index, and finitely many such cosets never cover a coset, so a
        witness exists.
        """

        parts = [
            p for p in (self.intersect(base, d) for d in excluded) if p is not None
        ]
        if any(p == base for p in parts):
            return None
        finite = [p for p in parts if self.index_class(base.sub, p.sub).is_finite]
        infinite = [p for p in parts if p not in finite]
        refined = base.sub
        for p in finite:
            refined = self.group.meet(refined, p.sub)
        for t in self.group.transversal(base.sub, refined):
            cell = self.coset(self.group.multiply(base.rep, t), refined)
            if any(self.contains(p, cell.rep) for p in finite):
                continue
            rest = [
                q for q in (self.intersect(cell, p) for p in infinite) if q is not None
            ]
            return self.witness_outside(cell, rest)
        return None

    def orthogonalize(self, cosets: Sequence[BasicCoset]) -> list[Atom]:
        """Nonempty atoms of the Boolean algebra generated by the cosets."""

        if not cosets:
            raise ValueError("orthogonalize needs at least one coset")
        regions: list[tuple[BasicCoset, tuple[BasicCoset, ...], frozenset[int]]] = []
        for idx, c in enumerate(cosets):
            split = []
            for base, excluded, support in regions:
                inside = self.intersect(base, c)
                if inside is None:
                    split.append((base, excluded, support))
                    continue
                split.append(
                    (
                        inside,
                        tuple(
                            m
                            for m in (self.intersect(inside, d) for d in excluded)
                            if m is not None
                        ),
                        support | {idx},
                    )
                )
                split.append((base, excluded + (inside,), support))
            earlier = (self.intersect(c, prev) for prev in cosets[:idx])
            split.append((c, tuple(m for m in earlier if m is not None), frozenset({idx})))
            regions, witnesses = [], []
            for region in split:
                witness = self.cell_witness(region[0], region[1])
                if witness is not None:
                    regions.append(region)
                    witnesses.append(witness)

        atoms = []
        for (base, excluded, support), witness in zip(regions, witnesses):
            atoms.append(
                Atom(
                    indicator=self.cell_indicator(base, excluded),
                    support=support,
                    base=base,
                    excluded=excluded,
                    witness=witness,
                )
            )
        atoms.sort(key=lambda a: sorted(a.support))
        log.debug("%d cosets orthogonalized into %d atoms", len(cosets), len(atoms))
        return atoms

    def refine_family(self, family: Sequence[LatticeSubgroup]) -> list[LatticeSubgroup]:
        """
        Shrink members by finite-index intersections until every pairwise index
        class is one or infinite.

        Each new member is first cut down by the earlier members it meets with
        finite index above one, then every earlier member is cut down by the
        result in the same way.
        """

        refined: list[LatticeSubgroup] = []
        for K in family:
            current = K
            for earlier in refined:
                if self.index_class(current, earlier).kind is IndexKind.FINITE:
                    current = self.group.meet(current, earlier)
            for j, earlier in enumerate(refined):
                if self.index_class(earlier, current).kind is IndexKind.FINITE:
                    refined[j] = self.group.meet(earlier, current)
            refined.append(current)
        return refined
