import abc
import enum
import itertools
import json
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any, ClassVar

from ..errors import UnsupportedPairError

Element = Any
Terms = tuple[tuple[int, str], ...]


class IndexKind(enum.Enum):
    ONE = "one"
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class IndexClass:
    """Size of L/(L∩M): one, an exact finite number above one, or infinite."""

    kind: IndexKind
    value: int | None = None

    @classmethod
    def of(cls, index: int | None) -> "IndexClass":
        if index is None:
            return cls(IndexKind.INFINITE)
        if index == 1:
            return cls(IndexKind.ONE, 1)
        return cls(IndexKind.FINITE, index)

    @property
    def is_finite(self) -> bool:
        return self.kind is not IndexKind.INFINITE

    def __str__(self) -> str:
        if self.kind is IndexKind.FINITE:
            return f"finite({self.value})"
        return self.kind.value


@dataclass(frozen=True, order=True)
class LatticeSubgroup:
    """
    Canonical descriptor of ⋂ φ^n_i(H_i).

    Only a :class:`GroupInstance` builds these, through :meth:`GroupInstance.lattice`,
    so two descriptors of one instance are equal exactly when the subgroups are.
    """

    terms: Terms

    @property
    def depth(self) -> int:
        return max(n for n, _ in self.terms)

    def shifted(self, k: int) -> "LatticeSubgroup":
        return LatticeSubgroup(tuple((n + k, base) for n, base in self.terms))

    def __str__(self) -> str:
        parts = []
        for n, base in self.terms:
            if n == 0:
                parts.append(base)
            else:
                parts.append(f"phi^{n}({base})")
        return " & ".join(parts)


class GroupInstance(abc.ABC):
    """
    A computable group G with an injective endomorphism φ.

    Subclasses supply element arithmetic and the oracles the coset lattice relies
    on: membership in lattice subgroups, canonical left-coset representatives,
    intersection of cosets and index classification.

    Attributes:
        id: name used in configs and reports
        available_bases: base subgroups this instance knows, "G" always first
        pure: ⋂ φ^n(G) is trivial
        infinite_cokernel: G/φ(G) is infinite
        amenable: G is amenable
    """

    id: ClassVar[str]
    available_bases: ClassVar[tuple[str, ...]] = ("G",)
    pure: ClassVar[bool] = True
    infinite_cokernel: ClassVar[bool] = True
    amenable: ClassVar[bool] = True

    def __init__(self, bases: Iterable[str] = ("G",)):
        bases = tuple(dict.fromkeys(("G", *bases)))
        unknown = [base for base in bases if base not in self.available_bases]
        if unknown:
            raise ValueError(
                f"{self.id} has no base subgroup {', '.join(unknown)}; "
                f"choose from {', '.join(self.available_bases)}"
            )
        self.bases = bases

    def __repr__(self) -> str:
        return f"{type(self).__name__}(bases={self.bases!r})"

    # elements

    @property
    @abc.abstractmethod
    def identity(self) -> Element: ...

    @abc.abstractmethod
    def multiply(self, x: Element, y: Element) -> Element: ...

    @abc.abstractmethod
    def invert(self, x: Element) -> Element: ...

    @abc.abstractmethod
    def phi(self, x: Element) -> Element: ...

    @abc.abstractmethod
    def phi_preimage(self, x: Element, n: int = 1) -> Element | None:
        """The unique h with φⁿ(h) = x, or None when x ∉ φⁿ(G)."""

    def phi_pow(self, x: Element, n: int) -> Element:
        if n < 0:
            raise ValueError(f"phi_pow needs a natural exponent, got {n}")
        for _ in range(n):
            x = self.phi(x)
        return x

    def product(self, *xs: Element) -> Element:
        result = self.identity
        for x in xs:
            result = self.multiply(result, x)
        return result

    def left_quotient(self, x: Element, y: Element) -> Element:
        """x⁻¹·y"""
        return self.multiply(self.invert(x), y)

    @abc.abstractmethod
    def size(self, x: Element) -> int:
        """Weight used by the enumeration order; finitely many elements per weight."""

    @abc.abstractmethod
    def iter_elements(self) -> Iterator[Element]:
        """All elements, identity first, in the deterministic enumeration order."""

    @abc.abstractmethod
    def window(self, **params: int) -> tuple[Element, ...]:
        """A finite box of elements, identity included, in enumeration order."""

    @abc.abstractmethod
    def walk_generators(self) -> tuple[Element, ...]:
        """Small generators used for window walks and random sampling."""

    @abc.abstractmethod
    def random_element(self, rng: random.Random, radius: int = 2) -> Element: ...

    @abc.abstractmethod
    def to_json(self, x: Element) -> Any: ...

    @abc.abstractmethod
    def from_json(self, data: Any) -> Element: ...

    @abc.abstractmethod
    def parse_element(self, text: str) -> Element:
        """Read the body of ``u{...}`` in the expression syntax."""

    @abc.abstractmethod
    def format_element(self, x: Element) -> str: ...

    def encode(self, x: Element) -> bytes:
        return json.dumps(self.to_json(x), separators=(",", ":")).encode()

    # lattice subgroups

    def lattice(self, terms: Iterable[tuple[int, str]]) -> LatticeSubgroup:
        terms = tuple((int(n), str(base)) for n, base in terms)
        if not terms:
            raise ValueError("a lattice subgroup needs at least one term")
        for n, base in terms:
            if n < 0:
                raise ValueError(f"negative φ exponent {n} in lattice term")
            if base not in self.bases:
                raise ValueError(
                    f"base subgroup {base!r} is not configured for {self.id}"
                )
        return LatticeSubgroup(self._canonical_terms(terms))

    def whole(self) -> LatticeSubgroup:
        return LatticeSubgroup(((0, "G"),))

    def image(self, n: int, base: str = "G") -> LatticeSubgroup:
        return self.lattice(((n, base),))

    def meet(self, L: LatticeSubgroup, M: LatticeSubgroup) -> LatticeSubgroup:
        return self.lattice(L.terms + M.terms)

    def phi_subgroup(self, L: LatticeSubgroup, k: int) -> LatticeSubgroup:
        return self.lattice(L.shifted(k).terms)

    def subgroup_preimage(self, L: LatticeSubgroup) -> LatticeSubgroup | None:
        """L₀ with φ(L₀) = L inside the lattice, when every term sits below φ(G)."""

        if any(n == 0 for n, _ in L.terms):
            return None
        return self.lattice(L.shifted(-1).terms)

    def contains_subgroup(self, L: LatticeSubgroup, M: LatticeSubgroup) -> bool:
        """M ⊆ L"""
        return self.index_class(M, L).kind is IndexKind.ONE

    def iter_subgroup(self, L: LatticeSubgroup) -> Iterator[Element]:
        """Elements of L, identity first."""

        if len(L.terms) == 1:
            ((n, base),) = L.terms
            base_group = self.lattice(((0, base),))
            for h in self.iter_elements():
                if base == "G" or self.member(h, base_group):
                    yield self.phi_pow(h, n)
        else:
            for h in self.iter_elements():
                if self.member(h, L):
                    yield h

    @abc.abstractmethod
    def _canonical_terms(self, terms: Terms) -> Terms: ...

    @abc.abstractmethod
    def member(self, x: Element, L: LatticeSubgroup) -> bool: ...

    @abc.abstractmethod
    def coset_rep(self, x: Element, L: LatticeSubgroup) -> Element:
        """Canonical representative of x·L; the identity represents L itself."""

    @abc.abstractmethod
    def coset_meet(
        self,
        r1: Element,
        L1: LatticeSubgroup,
        r2: Element,
        L2: LatticeSubgroup,
    ) -> Element | None:
        """Canonical representative of r1·L1 ∩ r2·L2 as a coset of L1∩L2, or None."""

    @abc.abstractmethod
    def index_class(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass: ...

    @abc.abstractmethod
    def transversal(self, L: LatticeSubgroup, M: LatticeSubgroup) -> list[Element]:
        """Representatives of L/(L∩M); raises UnsupportedPairError for infinite index."""

    def _require_finite(self, L: LatticeSubgroup, M: LatticeSubgroup) -> IndexClass:
        index = self.index_class(L, M)
        if not index.is_finite:
            raise UnsupportedPairError(f"{L} has infinitely many cosets of {L}∩{M}")
        return index


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write total as a sum of `parts` naturals."""

    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def signed(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every sign choice for the nonzero entries, positive first."""

    choices = [(v, -v) if v else (0,) for v in values]
    yield from itertools.product(*choices)
