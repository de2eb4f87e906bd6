"""
The dense *-algebra spanned by the monomials s*ⁿ u_a e_[L] u_b sᵐ.

Acting on l²(G) with s ξ_x = ξ_φ(x), u_g ξ_x = ξ_gx and e_[X] ξ_x = [x ∈ X] ξ_x,
a monomial sends ξ_k to ξ_h with φⁿ(h) = a·b·φᵐ(k) whenever b·φᵐ(k) ∈ L and
such an h exists, and to zero otherwise. Every product of monomials is again a
single monomial or zero, so the algebra is handled entirely through canonical
monomial labels with exact scalar coefficients.
"""

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from .errors import NotDiagonalError
from .groups import GroupInstance, LatticeSubgroup
from .lattice import DEFAULT_WITNESS_CAP, Atom, BasicCoset, CosetLattice, VirtualIndicator
from .scalars import ONE, ZERO, Scalar, abs_squared, conjugate, rational_sqrt, scalar
from .semigroup import EnvElement, Semigroup, SemigroupElement

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Monomial:
    """Label of s*ⁿ u_a e_[L] u_b sᵐ."""

    n: int
    a: Any
    L: LatticeSubgroup
    b: Any
    m: int


class AlgebraElement:
    """Finite combination of canonical monomials with nonzero Gaussian-rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Any] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Scalar] = {}
        for mono, coeff in items:
            acc[mono] = acc.get(mono, ZERO) + scalar(coeff)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, ZERO)

    def scaled(self, c) -> "AlgebraElement":
        c = scalar(c)
        return AlgebraElement((k, v * c) for k, v in self._terms.items())

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement((k, -v) for k, v in self._terms.items())

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + -other

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"AlgebraElement({self._terms!r})"


@dataclass(frozen=True)
class DiagonalNorm:
    """Operator norm of a diagonal element, kept exact through its square."""

    squared: Any

    @property
    def value(self):
        """The norm itself, or None when it is not rational."""
        return rational_sqrt(self.squared)

    def __str__(self) -> str:
        value = self.value
        return f"sqrt({self.squared})" if value is None else str(value)


class StarAlgebra:
    """Arithmetic of canonical monomials over one group instance."""

    def __init__(self, group: GroupInstance, witness_cap: int = DEFAULT_WITNESS_CAP):
        self.group = group
        self.lattice = CosetLattice(group, witness_cap)
        self.semigroup = Semigroup(group)

    # constructors

    def zero(self) -> AlgebraElement:
        return AlgebraElement()

    def monomial(self, n: int, a, X, b, m: int, coefficient=ONE) -> AlgebraElement:
        """s*ⁿ u_a e_[X] u_b sᵐ for a lattice subgroup or basic coset X."""

        if n < 0 or m < 0:
            raise ValueError(f"monomial exponents must be natural, got n={n}, m={m}")
        return self.canonicalize(n, a, X, b, m, coefficient)

    def element(self, terms: Iterable[tuple[Monomial, Any]]) -> AlgebraElement:
        """Combination of labels, each canonicalized first."""

        result = self.zero()
        for mono, coeff in terms:
            result = result + self.canonicalize(
                mono.n, mono.a, mono.L, mono.b, mono.m, coeff
            )
        return result

    def one(self) -> AlgebraElement:
        e = self.group.identity
        return self.monomial(0, e, self.group.whole(), e, 0)

    def u(self, g) -> AlgebraElement:
        e = self.group.identity
        return self.monomial(0, g, self.group.whole(), e, 0)

    def s(self, k: int = 1) -> AlgebraElement:
        e = self.group.identity
        return self.monomial(0, e, self.group.whole(), e, k)

    def s_star(self, k: int = 1) -> AlgebraElement:
        e = self.group.identity
        return self.monomial(k, e, self.group.whole(), e, 0)

    def e(self, X: BasicCoset | LatticeSubgroup) -> AlgebraElement:
        e = self.group.identity
        return self.monomial(0, e, X, e, 0)

    def indicator_element(self, indicator: VirtualIndicator) -> AlgebraElement:
        result = self.zero()
        for coset, k in indicator.terms:
            result = result + self.e(coset).scaled(k)
        return result

    # normal form

    def _as_coset(self, X: BasicCoset | LatticeSubgroup) -> BasicCoset:
        if isinstance(X, LatticeSubgroup):
            return BasicCoset(self.group.identity, X)
        return X

    def canonicalize(self, n: int, a, X, b, m: int, coefficient=ONE) -> AlgebraElement:
        """
        Normal form of coefficient · s*ⁿ u_a e_[X] u_b sᵐ.

        The projection is cut down to the points where the monomial is defined,
        its representative moved into a and b, common powers of s cancelled and
        a replaced by the canonical representative of a·L.
        """

        coefficient = scalar(coefficient)
        if not coefficient:
            return self.zero()
        group, lattice = self.group, self.lattice
        effective = lattice.intersect_all(
            (
                self._as_coset(X),
                lattice.coset(b, group.image(m)),
                lattice.coset(group.invert(a), group.image(n)),
            )
        )
        if effective is None:
            return self.zero()
        t, L = effective.rep, effective.sub
        a, b = group.multiply(a, t), group.left_quotient(t, b)

        while n and m:
            a0, b0 = group.phi_preimage(a, 1), group.phi_preimage(b, 1)
            L0 = group.subgroup_preimage(L)
            if a0 is None or b0 is None or L0 is None:
                break
            n, a, L, b, m = n - 1, a0, L0, b0, m - 1

        r = group.coset_rep(a, L)
        b = group.multiply(group.left_quotient(r, a), b)
        return AlgebraElement({Monomial(n, r, L, b, m): coefficient})

    def canonical(self, mono: Monomial) -> Monomial | None:
        result = self.canonicalize(mono.n, mono.a, mono.L, mono.b, mono.m)
        return next(iter(result.monomials()), None)

    # products

    def mono_mul(self, x: Monomial, y: Monomial) -> AlgebraElement:
        group, lattice = self.group, self.lattice
        c1, c2 = group.multiply(x.a, x.b), group.multiply(y.a, y.b)
        X1 = lattice.coset(group.invert(x.b), x.L)
        X2 = lattice.coset(y.a, y.L)
        X = lattice.intersect_all(
            (
                lattice.phi(X1, y.n),
                lattice.coset(group.identity, group.image(y.n + x.m)),
                lattice.phi(X2, x.m),
            )
        )
        if X is None:
            return self.zero()
        return self.canonicalize(
            x.n + y.n,
            group.phi_pow(c1, y.n),
            X,
            group.phi_pow(c2, x.m),
            x.m + y.m,
        )

    def mul(self, *factors: AlgebraElement) -> AlgebraElement:
        if not factors:
            return self.one()
        result = factors[0]
        for y in factors[1:]:
            terms = []
            for k1, v1 in result.items():
                for k2, v2 in y.items():
                    for k, v in self.mono_mul(k1, k2).items():
                        terms.append((k, v * v1 * v2))
            result = AlgebraElement(terms)
        return result

    def adjoint(self, x: AlgebraElement) -> AlgebraElement:
        group = self.group
        result = self.zero()
        for k, v in x.items():
            result = result + self.canonicalize(
                k.m, group.invert(k.b), k.L, group.invert(k.a), k.n, conjugate(v)
            )
        return result

    def act_alpha(self, p: SemigroupElement, x: AlgebraElement) -> AlgebraElement:
        """u_g sⁿ · x · s*ⁿ u_{g⁻¹} for p = (g, n)."""

        v = self.semigroup.li_generators(self, p)
        return self.mul(v, x, self.adjoint(v))

    def is_self_adjoint(self, x: AlgebraElement) -> bool:
        return self.adjoint(x) == x

    # grading and the conditional expectation

    def degree(self, mono: Monomial) -> EnvElement:
        return self.semigroup.env_normalize(
            EnvElement(self.group.multiply(mono.a, mono.b), mono.n, mono.m - mono.n)
        )

    def is_diagonal_term(self, mono: Monomial) -> bool:
        return self.degree(mono) == self.semigroup.env_identity

    def theta(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement((k, v) for k, v in x.items() if self.is_diagonal_term(k))

    def is_diagonal(self, x: AlgebraElement) -> bool:
        return all(self.is_diagonal_term(k) for k in x.monomials())

    def diagonal_coset(self, mono: Monomial) -> BasicCoset:
        """The coset X of a diagonal term e_[X]."""

        if not self.is_diagonal_term(mono):
            raise NotDiagonalError(f"{mono} has non-identity degree")
        return BasicCoset(mono.a, mono.L)

    def diagonal_atoms(self, x: AlgebraElement) -> list[tuple[Atom, Scalar]]:
        """Atoms of the cosets of a diagonal x, each with the value x takes on it."""

        if not x:
            return []
        cosets, coefficients = [], []
        for k, v in x.items():
            cosets.append(self.diagonal_coset(k))
            coefficients.append(v)
        result = []
        for atom in self.lattice.orthogonalize(cosets):
            value = ZERO
            for i in atom.support:
                value = value + coefficients[i]
            result.append((atom, value))
        return result

    def diagonal_norm(self, x: AlgebraElement) -> DiagonalNorm:
        squares = [abs_squared(v) for _, v in self.diagonal_atoms(x)]
        return DiagonalNorm(max(squares, default=abs_squared(ZERO)))

    # presentation for B = {G}

    def presentation_check(self, elements: Iterable, depth: int) -> list[str]:
        """
        The rules fixing the projections of cosets of the images φⁿ(G):
        e_[gφⁿG]·e_[hφᵐG] is e_[hφᵐG] when n <= m and h ∈ gφⁿ(G), zero when
        the cosets are disjoint, and e_[gφⁿG] = u_g sⁿ s*ⁿ u_{g⁻¹}.
        """

        group, lattice = self.group, self.lattice
        elements = list(elements)
        failures = []
        for n in range(depth + 1):
            for g in elements:
                X = lattice.coset(g, group.image(n))
                generated = self.mul(
                    self.u(g), self.s(n), self.s_star(n), self.u(group.invert(g))
                )
                if self.e(X) != generated:
                    failures.append(f"e[{X}] is not generated by u_g s^n")
                for m in range(n, depth + 1):
                    for h in elements:
                        Y = lattice.coset(h, group.image(m))
                        expected = self.e(Y) if lattice.contains(X, h) else self.zero()
                        if self.mul(self.e(X), self.e(Y)) != expected:
                            failures.append(f"e[{X}] e[{Y}]")
                        if self.mul(self.e(Y), self.e(X)) != expected:
                            failures.append(f"e[{Y}] e[{X}]")
        return failures
