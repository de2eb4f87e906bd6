import itertools
import random
import re
from collections.abc import Iterator
from typing import Any

from .base import GroupInstance, IndexClass, LatticeSubgroup, Terms

# reduced word: letters (generator index >= 1, exponent ±1)
Word = tuple[tuple[int, int], ...]

_LETTER = re.compile(r"a(\d+)(?:\^(-?1))?")


def reduce_word(letters) -> Word:
    stack: list[tuple[int, int]] = []
    for gen, exp in letters:
        if stack and stack[-1] == (gen, -exp):
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class FreeShift(GroupInstance):
    """
    The free group on a_1, a_2, … with φ(a_i) = a_{i+1}.

    φⁿ(G) is the free subgroup on the generators above n. Lattice subgroups are
    these images, and a left coset of one is represented by the reduced word with
    its longest suffix inside the subgroup removed.
    """

    id = "free-shift"
    amenable = False
    identity: Word = ()

    def multiply(self, x: Word, y: Word) -> Word:
        return reduce_word(x + y)

    def invert(self, x: Word) -> Word:
        return tuple((gen, -exp) for gen, exp in reversed(x))

    def phi(self, x: Word) -> Word:
        return tuple((gen + 1, exp) for gen, exp in x)

    def phi_pow(self, x: Word, n: int) -> Word:
        if n < 0:
            raise ValueError(f"phi_pow needs a natural exponent, got {n}")
        return tuple((gen + n, exp) for gen, exp in x)

    def phi_preimage(self, x: Word, n: int = 1) -> Word | None:
        if any(gen <= n for gen, _ in x):
            return None
        return tuple((gen - n, exp) for gen, exp in x)

    def size(self, x: Word) -> int:
        return sum(gen for gen, _ in x)

    @staticmethod
    def _order_key(x: Word) -> tuple:
        return (len(x), tuple((gen, exp < 0) for gen, exp in x))

    def _words_of_weight(self, weight: int, last=None) -> Iterator[Word]:
        if weight == 0:
            yield ()
            return
        for gen in range(1, weight + 1):
            for exp in (1, -1):
                if last == (gen, -exp):
                    continue
                for rest in self._words_of_weight(weight - gen, (gen, exp)):
                    yield ((gen, exp),) + rest

    def iter_elements(self) -> Iterator[Word]:
        for weight in itertools.count(0):
            yield from sorted(self._words_of_weight(weight), key=self._order_key)

    def window(self, length: int = 2, index: int = 2, **_: int) -> tuple[Word, ...]:
        if length < 0 or index < 1:
            raise ValueError("window needs length >= 0 and index >= 1")
        letters = [(gen, exp) for gen in range(1, index + 1) for exp in (1, -1)]
        words = {()}
        frontier = {()}
        for _ in range(length):
            frontier = {
                w + (letter,)
                for w in frontier
                for letter in letters
                if not w or w[-1] != (letter[0], -letter[1])
            }
            words |= frontier
        return tuple(sorted(words, key=lambda w: (self.size(w), self._order_key(w))))

    def walk_generators(self) -> tuple[Word, ...]:
        return (((1, 1),), ((2, 1),))

    def random_element(self, rng: random.Random, radius: int = 2) -> Word:
        length = rng.randint(0, radius)
        return reduce_word(
            (rng.randint(1, radius), rng.choice((1, -1))) for _ in range(length)
        )

    def to_json(self, x: Word) -> Any:
        return [[gen, exp] for gen, exp in x]

    def from_json(self, data: Any) -> Word:
        try:
            letters = [(int(gen), int(exp)) for gen, exp in data]
        except (TypeError, ValueError) as e:
            raise ValueError(f"not a free-shift word: {data!r}") from e
        if any(gen < 1 or exp not in (1, -1) for gen, exp in letters):
            raise ValueError(f"letters must be a_i^±1 with i >= 1: {data!r}")
        return reduce_word(letters)

    def parse_element(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        letters = []
        for token in text.split():
            match = _LETTER.fullmatch(token)
            if match is None or int(match.group(1)) < 1:
                raise ValueError(f"expected a letter like a2 or a3^-1, got {token!r}")
            letters.append((int(match.group(1)), int(match.group(2) or 1)))
        return reduce_word(letters)

    def format_element(self, x: Word) -> str:
        return " ".join(f"a{gen}" if exp == 1 else f"a{gen}^-1" for gen, exp in x) or "e"

    # lattice

    def _canonical_terms(self, terms: Terms) -> Terms:
        return ((max(n for n, _ in terms), "G"),)

    def member(self, x: Word, L: LatticeSubgroup) -> bool:
        return all(gen > L.depth for gen, _ in x)

    def coset_rep(self, x: Word, L: LatticeSubgroup) -> Word:
        end = len(x)
        while end and x[end - 1][0] > L.depth:
            end -= 1
        return x[:end]

    def coset_meet(
        self,
        r1: Word,
        L1: LatticeSubgroup,
        r2: Word,
        L2: LatticeSubgroup,
    ) -> Word | None:
        # lattice subgroups are nested, so the intersection is the smaller coset or empty
        if L1.depth > L2.depth:
            r1, L1, r2, L2 = r2, L2, r1, L1
        if not self.member(self.left_quotient(r1, r2), L1):
            return None
        return self.coset_rep(r2, L2)

    def index_class(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass:
        return IndexClass.of(1 if L.depth >= M.depth else None)

    def transversal(self, L: LatticeSubgroup, M: LatticeSubgroup) -> list[Word]:
        self._require_finite(L, M)
        return [self.identity]
