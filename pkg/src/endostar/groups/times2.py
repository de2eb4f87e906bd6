import random
from collections.abc import Iterator
from math import lcm
from typing import Any

from sympy.ntheory.modular import solve_congruence

from .base import GroupInstance, IndexClass, LatticeSubgroup, Terms


class Times2(GroupInstance):
    """
    ℤ with φ(x) = 2x.

    Pure, but G/φ(G) has two elements, so every index is finite. The extra base
    subgroup T = 3ℤ contains no φ^k(ℤ) and serves as a configuration on which the
    image hypothesis fails. A lattice subgroup is dℤ with d = 2^a or 3·2^a.
    """

    id = "times2"
    available_bases = ("G", "T")
    infinite_cokernel = False
    identity = 0

    def multiply(self, x: int, y: int) -> int:
        return x + y

    def invert(self, x: int) -> int:
        return -x

    def phi(self, x: int) -> int:
        return 2 * x

    def phi_pow(self, x: int, n: int) -> int:
        if n < 0:
            raise ValueError(f"phi_pow needs a natural exponent, got {n}")
        return x << n

    def phi_preimage(self, x: int, n: int = 1) -> int | None:
        if x % (1 << n):
            return None
        return x >> n

    def size(self, x: int) -> int:
        return abs(x)

    def iter_elements(self) -> Iterator[int]:
        yield 0
        k = 1
        while True:
            yield k
            yield -k
            k += 1

    def window(self, bound: int = 8, **_: int) -> tuple[int, ...]:
        if bound < 0:
            raise ValueError("window bound must be a natural number")
        return (0,) + tuple(x for k in range(1, bound + 1) for x in (k, -k))

    def walk_generators(self) -> tuple[int, ...]:
        return (1,)

    def random_element(self, rng: random.Random, radius: int = 2) -> int:
        return rng.randint(-(4**radius), 4**radius)

    def to_json(self, x: int) -> Any:
        return x

    def from_json(self, data: Any) -> int:
        if isinstance(data, bool) or not isinstance(data, int):
            raise ValueError(f"not a times2 element: {data!r}")
        return data

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text == "e":
            return 0
        return int(text)

    def format_element(self, x: int) -> str:
        return str(x)

    # lattice

    @staticmethod
    def _modulus(terms: Terms) -> int:
        return lcm(*((3 if base == "T" else 1) << n for n, base in terms))

    def _canonical_terms(self, terms: Terms) -> Terms:
        d = self._modulus(terms)
        base = "G"
        if d % 3 == 0:
            d, base = d // 3, "T"
        return ((d.bit_length() - 1, base),)

    def member(self, x: int, L: LatticeSubgroup) -> bool:
        return x % self._modulus(L.terms) == 0

    def coset_rep(self, x: int, L: LatticeSubgroup) -> int:
        return x % self._modulus(L.terms)

    def coset_meet(
        self,
        r1: int,
        L1: LatticeSubgroup,
        r2: int,
        L2: LatticeSubgroup,
    ) -> int | None:
        solution = solve_congruence(
            (r1 % self._modulus(L1.terms), self._modulus(L1.terms)),
            (r2 % self._modulus(L2.terms), self._modulus(L2.terms)),
        )
        if solution is None:
            return None
        return self.coset_rep(int(solution[0]), self.meet(L1, L2))

    def index_class(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass:
        return IndexClass.of(
            self._modulus(self.meet(L, M).terms) // self._modulus(L.terms)
        )

    def transversal(self, L: LatticeSubgroup, M: LatticeSubgroup) -> list[int]:
        d = self._modulus(L.terms)
        return [k * d for k in range(self.index_class(L, M).value)]
