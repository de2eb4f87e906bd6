import itertools
import random
from collections.abc import Iterator
from math import lcm
from typing import Any

from sympy.ntheory.modular import solve_congruence

from .base import (
    GroupInstance,
    IndexClass,
    LatticeSubgroup,
    Terms,
    compositions,
    signed,
)

# finitely supported index -> value map, sorted by index, no zero values
Vector = tuple[tuple[int, int], ...]


def vector(entries: dict[int, int]) -> Vector:
    return tuple(sorted((i, v) for i, v in entries.items() if v))


def _combine(p: int, q: int) -> int:
    # moduli of coordinate progressions; 0 pins the coordinate to a single value
    if p == 0 or q == 0:
        return 0
    return lcm(p, q)


def _solve(a: int, p: int, b: int, q: int) -> int | None:
    """A common value of a + pℤ and b + qℤ (modulus 0 meaning the single value)."""

    if p == 0 and q == 0:
        return a if a == b else None
    if p == 0:
        return a if (a - b) % q == 0 else None
    if q == 0:
        return b if (a - b) % p == 0 else None
    if p == 1:
        return b % q
    if q == 1:
        return a % p
    solution = solve_congruence((a % p, p), (b % q, q))
    return None if solution is None else int(solution[0])


class ShiftZ(GroupInstance):
    """
    ⊕_{i∈ℕ} ℤ with the index shift φ(x)_{i+1} = x_i.

    The optional base subgroup H = {x : x_0 even} contains φ(G). Every lattice
    subgroup is a product of per-coordinate subgroups mℤ with m ∈ {0, 1, 2}, which
    is how membership, representatives and indices are computed here.
    """

    id = "shift-z"
    available_bases = ("G", "H")
    identity: Vector = ()

    def multiply(self, x: Vector, y: Vector) -> Vector:
        entries = dict(x)
        for i, v in y:
            entries[i] = entries.get(i, 0) + v
        return vector(entries)

    def invert(self, x: Vector) -> Vector:
        return tuple((i, -v) for i, v in x)

    def phi(self, x: Vector) -> Vector:
        return tuple((i + 1, v) for i, v in x)

    def phi_pow(self, x: Vector, n: int) -> Vector:
        if n < 0:
            raise ValueError(f"phi_pow needs a natural exponent, got {n}")
        return tuple((i + n, v) for i, v in x)

    def phi_preimage(self, x: Vector, n: int = 1) -> Vector | None:
        if x and x[0][0] < n:
            return None
        return tuple((i - n, v) for i, v in x)

    def size(self, x: Vector) -> int:
        if not x:
            return 0
        return x[-1][0] + sum(abs(v) for _, v in x)

    @staticmethod
    def _order_key(x: Vector) -> tuple:
        top = x[-1][0] if x else -1
        return (
            top,
            sum(abs(v) for _, v in x),
            tuple((i, abs(v), v < 0) for i, v in x),
        )

    def iter_elements(self) -> Iterator[Vector]:
        yield self.identity
        for weight in itertools.count(1):
            batch = []
            for top in range(weight):
                total = weight - top
                for head in compositions(total - 1, top + 1):
                    # last coordinate is nonzero
                    magnitudes = head[:-1] + (head[-1] + 1,)
                    for values in signed(magnitudes):
                        batch.append(vector(dict(enumerate(values))))
            yield from sorted(batch, key=self._order_key)

    def window(self, indices: int = 3, bound: int = 2, **_: int) -> tuple[Vector, ...]:
        if indices < 0 or bound < 0:
            raise ValueError("window parameters must be natural numbers")
        elements = (
            vector(dict(enumerate(values)))
            for values in itertools.product(range(-bound, bound + 1), repeat=indices)
        )
        return tuple(sorted(elements, key=lambda x: (self.size(x), self._order_key(x))))

    def walk_generators(self) -> tuple[Vector, ...]:
        return (((0, 1),), ((1, 1),))

    def random_element(self, rng: random.Random, radius: int = 2) -> Vector:
        return vector(
            {i: rng.randint(-radius, radius) for i in range(radius) if rng.random() < 0.6}
        )

    def to_json(self, x: Vector) -> Any:
        return [[i, v] for i, v in x]

    def from_json(self, data: Any) -> Vector:
        try:
            entries = {int(i): int(v) for i, v in data}
        except (TypeError, ValueError) as e:
            raise ValueError(f"not a shift-z element: {data!r}") from e
        if any(i < 0 for i in entries):
            raise ValueError(f"negative index in shift-z element: {data!r}")
        return vector(entries)

    def parse_element(self, text: str) -> Vector:
        text = text.strip()
        if text in ("", "e", "0"):
            return self.identity
        entries: dict[int, int] = {}
        for item in text.split(","):
            index, sep, value = item.partition(":")
            if not sep:
                raise ValueError(f"expected index:value, got {item.strip()!r}")
            i = int(index)
            if i < 0:
                raise ValueError(f"negative index {i}")
            entries[i] = entries.get(i, 0) + int(value)
        return vector(entries)

    def format_element(self, x: Vector) -> str:
        return ",".join(f"{i}:{v}" for i, v in x) or "e"

    # lattice

    def _moduli(self, terms: Terms) -> tuple[int, ...]:
        length = max(n + (base == "H") for n, base in terms)
        moduli = [1] * length
        for n, base in terms:
            for i in range(n):
                moduli[i] = 0
            if base == "H":
                moduli[n] = _combine(moduli[n], 2)
        while moduli and moduli[-1] == 1:
            moduli.pop()
        return tuple(moduli)

    @staticmethod
    def _modulus(moduli: tuple[int, ...], i: int) -> int:
        return moduli[i] if i < len(moduli) else 1

    def _canonical_terms(self, terms: Terms) -> Terms:
        moduli = self._moduli(terms)
        pinned = 0
        while pinned < len(moduli) and moduli[pinned] == 0:
            pinned += 1
        if pinned == len(moduli):
            return ((pinned, "G"),)
        return ((pinned, "H"),)

    def member(self, x: Vector, L: LatticeSubgroup) -> bool:
        moduli = self._moduli(L.terms)
        for i, v in x:
            m = self._modulus(moduli, i)
            if m == 0 or v % m:
                return False
        return True

    def coset_rep(self, x: Vector, L: LatticeSubgroup) -> Vector:
        moduli = self._moduli(L.terms)
        entries = {}
        for i, v in x:
            m = self._modulus(moduli, i)
            entries[i] = v if m == 0 else v % m
        return vector(entries)

    def coset_meet(
        self,
        r1: Vector,
        L1: LatticeSubgroup,
        r2: Vector,
        L2: LatticeSubgroup,
    ) -> Vector | None:
        m1, m2 = self._moduli(L1.terms), self._moduli(L2.terms)
        d1, d2 = dict(r1), dict(r2)
        indices = set(d1) | set(d2) | set(range(max(len(m1), len(m2))))
        entries = {}
        for i in sorted(indices):
            value = _solve(
                d1.get(i, 0), self._modulus(m1, i), d2.get(i, 0), self._modulus(m2, i)
            )
            if value is None:
                return None
            entries[i] = value
        return self.coset_rep(vector(entries), self.meet(L1, L2))

    def index_class(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass:
        outer = self._moduli(L.terms)
        inner = self._moduli(self.meet(L, M).terms)
        index = 1
        for i in range(max(len(outer), len(inner))):
            a, c = self._modulus(outer, i), self._modulus(inner, i)
            if a == c:
                continue
            if c == 0:
                return IndexClass.of(None)
            index *= c // a
        return IndexClass.of(index)

    def transversal(self, L: LatticeSubgroup, M: LatticeSubgroup) -> list[Vector]:
        self._require_finite(L, M)
        outer = self._moduli(L.terms)
        inner = self._moduli(self.meet(L, M).terms)
        choices = []
        for i in range(max(len(outer), len(inner))):
            a, c = self._modulus(outer, i), self._modulus(inner, i)
            if a != c:
                choices.append([(i, a * k) for k in range(c // a)])
        return [vector(dict(combo)) for combo in itertools.product(*choices)]
