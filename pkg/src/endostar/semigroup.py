"""
The Ore semigroup S = G ⋊_φ ℕ, its enveloping group 𝔾 ⋊ ℤ and constructible
right ideals.

𝔾 is the direct limit of G → G → … along φ; an element "g at level i" stands
for φ̄^{-i}(g) and (g, i) is identified with (φ(g), i+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from .groups import GroupInstance

if TYPE_CHECKING:
    from .algebra import AlgebraElement, StarAlgebra


@dataclass(frozen=True)
class SemigroupElement:
    g: Any
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"semigroup elements need n >= 0, got {self.n}")


@dataclass(frozen=True)
class EnvElement:
    g: Any
    level: int
    z: int


@dataclass(frozen=True)
class RightIdeal:
    """(g, n)S, or the empty ideal when ``generator`` is None."""

    generator: SemigroupElement | None = None

    @property
    def is_empty(self) -> bool:
        return self.generator is None


EMPTY_IDEAL = RightIdeal()


class Semigroup:
    def __init__(self, group: GroupInstance):
        self.group = group

    def element(self, g, n: int) -> SemigroupElement:
        return SemigroupElement(g, n)

    @property
    def unit(self) -> SemigroupElement:
        return SemigroupElement(self.group.identity, 0)

    def s_mul(self, p: SemigroupElement, q: SemigroupElement) -> SemigroupElement:
        return SemigroupElement(
            self.group.multiply(p.g, self.group.phi_pow(q.g, p.n)), p.n + q.n
        )

    def common_left_multiple(
        self, p: SemigroupElement, q: SemigroupElement
    ) -> tuple[SemigroupElement, SemigroupElement]:
        """(c_p, c_q) with c_p·p = c_q·q = (e, n_p + n_q)."""

        if p == q:
            return self.unit, self.unit
        return (
            SemigroupElement(self.group.phi_pow(self.group.invert(p.g), q.n), q.n),
            SemigroupElement(self.group.phi_pow(self.group.invert(q.g), p.n), p.n),
        )

    # enveloping group

    @property
    def env_identity(self) -> EnvElement:
        return EnvElement(self.group.identity, 0, 0)

    def env_normalize(self, x: EnvElement) -> EnvElement:
        g, level = x.g, x.level
        while level > 0:
            lower = self.group.phi_preimage(g, 1)
            if lower is None:
                break
            g, level = lower, level - 1
        return EnvElement(g, level, x.z)

    def _at_level(self, g, level: int, target: int):
        return self.group.phi_pow(g, target - level)

    def _limit_mul(self, g, i: int, h, k: int) -> tuple[Any, int]:
        top = max(i, k)
        return (
            self.group.multiply(self._at_level(g, i, top), self._at_level(h, k, top)),
            top,
        )

    def _phi_bar(self, g, level: int, j: int) -> tuple[Any, int]:
        if j >= 0:
            return self.group.phi_pow(g, j), level
        return g, level - j

    def env_mul(self, x: EnvElement, y: EnvElement) -> EnvElement:
        h, k = self._phi_bar(y.g, y.level, x.z)
        g, level = self._limit_mul(x.g, x.level, h, k)
        return self.env_normalize(EnvElement(g, level, x.z + y.z))

    def env_inv(self, x: EnvElement) -> EnvElement:
        g, level = self._phi_bar(self.group.invert(x.g), x.level, -x.z)
        return self.env_normalize(EnvElement(g, level, -x.z))

    def embed(self, p: SemigroupElement) -> EnvElement:
        return EnvElement(p.g, 0, p.n)

    def env_factor(self, x: EnvElement) -> tuple[SemigroupElement, SemigroupElement]:
        """(p, q) with x = embed(p)⁻¹·embed(q)."""

        x = self.env_normalize(x)
        level = max(x.level, -x.z)
        g = self._at_level(x.g, x.level, level)
        return (
            SemigroupElement(self.group.invert(g), level),
            SemigroupElement(self.group.identity, x.z + level),
        )

    # constructible right ideals

    def principal(self, p: SemigroupElement) -> RightIdeal:
        rep = self.group.coset_rep(p.g, self.group.image(p.n))
        return RightIdeal(SemigroupElement(rep, p.n))

    def whole(self) -> RightIdeal:
        return self.principal(self.unit)

    def ideal_contains(self, ideal: RightIdeal, x: SemigroupElement) -> bool:
        if ideal.is_empty:
            return False
        g, n = ideal.generator.g, ideal.generator.n
        return x.n >= n and self.group.member(
            self.group.left_quotient(g, x.g), self.group.image(n)
        )

    def ideal_intersect(self, first: RightIdeal, second: RightIdeal) -> RightIdeal:
        if first.is_empty or second.is_empty:
            return EMPTY_IDEAL
        if first.generator.n > second.generator.n:
            first, second = second, first
        g, n = first.generator.g, first.generator.n
        if self.group.member(
            self.group.left_quotient(g, second.generator.g), self.group.image(n)
        ):
            return second
        return EMPTY_IDEAL

    def ideal_preimage(self, p: SemigroupElement, ideal: RightIdeal) -> RightIdeal:
        """p⁻¹·ideal = {x ∈ S : p·x ∈ ideal}."""

        if ideal.is_empty:
            return EMPTY_IDEAL
        h, m = ideal.generator.g, ideal.generator.n
        d = self.group.left_quotient(p.g, h)
        if p.n >= m:
            if self.group.member(d, self.group.image(m)):
                return self.whole()
            return EMPTY_IDEAL
        c = self.group.phi_preimage(d, p.n)
        if c is None:
            return EMPTY_IDEAL
        return self.principal(SemigroupElement(c, m - p.n))

    # generator bridge into the algebra

    def li_generators(self, algebra: StarAlgebra, p: SemigroupElement) -> AlgebraElement:
        """The isometry u_g sⁿ standing for v_(g,n)."""

        return algebra.monomial(0, p.g, self.group.whole(), self.group.identity, p.n)

    def li_ideal_projection(self, algebra: StarAlgebra, ideal: RightIdeal) -> AlgebraElement:
        if ideal.is_empty:
            return algebra.zero()
        v = self.li_generators(algebra, ideal.generator)
        return algebra.mul(v, algebra.adjoint(v))
