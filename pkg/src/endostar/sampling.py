"""Seeded generators of random group data, monomials and algebra elements."""

import random
from collections.abc import Iterator

from .algebra import AlgebraElement, Monomial, StarAlgebra
from .groups import GroupInstance, LatticeSubgroup
from .lattice import BasicCoset
from .scalars import scalar


def small_elements(group: GroupInstance, size: int = 2) -> list:
    """Identity and every product of at most ``size`` walk generators or inverses."""

    letters = [
        x for g in group.walk_generators() for x in (g, group.invert(g))
    ]
    elements = {group.identity: None}
    frontier = [group.identity]
    for _ in range(size):
        frontier = [group.multiply(x, y) for x in frontier for y in letters]
        elements.update(dict.fromkeys(frontier))
    return list(elements)


def lattice_subgroups(group: GroupInstance, depth: int) -> list[LatticeSubgroup]:
    """Distinct φ^k(H) for configured bases H and k <= depth, plus their pairwise meets."""

    images = [group.image(k, base) for k in range(depth + 1) for base in group.bases]
    found = dict.fromkeys(images)
    for i, L in enumerate(images):
        for M in images[i + 1 :]:
            found[group.meet(L, M)] = None
    return sorted(found)


def random_subgroup(
    group: GroupInstance, rng: random.Random, depth: int = 2
) -> LatticeSubgroup:
    terms = [
        (rng.randint(0, depth), rng.choice(group.bases))
        for _ in range(rng.randint(1, 2))
    ]
    return group.lattice(terms)


def random_coset(
    group: GroupInstance, rng: random.Random, depth: int = 2, radius: int = 1
) -> BasicCoset:
    L = random_subgroup(group, rng, depth)
    return BasicCoset(group.coset_rep(group.random_element(rng, radius), L), L)


def random_monomial(
    algebra: StarAlgebra, rng: random.Random, depth: int = 2, radius: int = 1
) -> Monomial:
    """A canonical monomial with exponents at most ``depth``; zero draws are redrawn."""

    group = algebra.group
    while True:
        label = algebra.canonical(
            Monomial(
                rng.randint(0, depth),
                group.random_element(rng, radius),
                random_subgroup(group, rng, depth),
                group.random_element(rng, radius),
                rng.randint(0, depth),
            )
        )
        if label is not None:
            return label


def random_scalar(rng: random.Random, bound: int = 3):
    return scalar(f"{rng.randint(-bound, bound)}/{rng.randint(1, bound)}")


def random_element(
    algebra: StarAlgebra, rng: random.Random, terms: int = 3, depth: int = 2
) -> AlgebraElement:
    return AlgebraElement(
        (random_monomial(algebra, rng, depth), random_scalar(rng))
        for _ in range(rng.randint(1, terms))
    )


def random_self_adjoint(
    algebra: StarAlgebra, rng: random.Random, terms: int = 2, depth: int = 1
) -> AlgebraElement:
    """x + x* plus a diagonal part, redrawn until θ of the result is nonzero."""

    group = algebra.group
    while True:
        x = random_element(algebra, rng, terms, depth)
        diagonal = algebra.e(random_coset(group, rng, depth)).scaled(
            rng.randint(1, 3)
        )
        candidate = x + algebra.adjoint(x) + diagonal
        if algebra.theta(candidate):
            return candidate


def monomial_family(
    algebra: StarAlgebra, exponent: int = 2, size: int = 2, depth: int = 2
) -> Iterator[Monomial]:
    """Distinct canonical monomials from small exponents, elements and subgroups."""

    group = algebra.group
    elements = small_elements(group, size)
    subgroups = lattice_subgroups(group, depth)
    seen = set()
    for n in range(exponent + 1):
        for m in range(exponent + 1):
            for L in subgroups:
                for a in elements:
                    for b in elements:
                        label = algebra.canonical(Monomial(n, a, L, b, m))
                        if label is not None and label not in seen:
                            seen.add(label)
                            yield label
