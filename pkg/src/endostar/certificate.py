"""
Witnesses that a self-adjoint element x admits the data of the pure-infiniteness
criterion: projections f_i = e_[a_i φ^b_i(G)] with isometries z_i = u_a_i s^b_i
such that

    (i)   f_i f_j = 0 for i ≠ j
    (ii)  z_i z_i* = f_i and z_i* z_i = 1
    (iii) ‖Σ f_i θ(x) f_i‖ = ‖θ(x)‖
    (iv)  f_i x f_i = λ_i f_i

All four are checked as exact identities of the dense algebra.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from .algebra import AlgebraElement, DiagonalNorm, StarAlgebra
from .errors import (
    HypothesisViolationError,
    NotSelfAdjointError,
    ThetaZeroError,
    VerificationFailure,
    WitnessNotFoundError,
)
from .groups import check_image_hypothesis
from .lattice import Atom, VirtualIndicator
from .scalars import ZERO, Scalar

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralRegion:
    """
    Attributes:
        value: the value λ of θ(x) on the region
        atoms: the atoms on which θ(x) takes that value
        h, m: h·φ^m(G) lies inside the region
    """

    value: Scalar
    atoms: tuple[Atom, ...]
    h: Any
    m: int

    @property
    def projection(self) -> VirtualIndicator:
        result = VirtualIndicator()
        for atom in self.atoms:
            result = result + atom.indicator
        return result


@dataclass(frozen=True)
class DecomposedTheta:
    """θ(x) = s*ⁿ (Σ λ_i p_i) sⁿ; canonical labels always give n = 0."""

    depth: int
    regions: tuple[SpectralRegion, ...]


@dataclass(frozen=True)
class Critical:
    """A term s*^n u_{g⁻¹} e_[J] u_{g′} s^{n′} of x − θ(x)."""

    g: Any
    g_prime: Any
    n: int
    n_prime: int


@dataclass(frozen=True)
class CertifiedRegion:
    region: SpectralRegion
    a: Any
    b: int
    f: AlgebraElement
    z: AlgebraElement


@dataclass
class Certificate:
    x: AlgebraElement
    hypothesis_power: int
    criticals: tuple[Critical, ...]
    regions: tuple[CertifiedRegion, ...]
    transcript: list[tuple[str, str]] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return bool(self.transcript) and all(s == "ok" for _, s in self.transcript)


class Certifier:
    def __init__(self, algebra: StarAlgebra, hypothesis_cap: int = 16):
        self.algebra = algebra
        self.group = algebra.group
        self.hypothesis_cap = hypothesis_cap

    def hypothesis_power(self) -> int:
        k = check_image_hypothesis(self.group, self.hypothesis_cap)
        if k is None:
            raise HypothesisViolationError(
                f"no φ^k(G) with k <= {self.hypothesis_cap} lies in every base "
                f"subgroup of {', '.join(self.group.bases)}"
            )
        return k

    def decompose_theta(self, x: AlgebraElement, k: int | None = None) -> DecomposedTheta:
        """Spectral regions of θ(x), each with a basic coset h·φ^m(G) inside it."""

        algebra, group, lattice = self.algebra, self.group, self.algebra.lattice
        theta = algebra.theta(x)
        if not theta:
            raise ThetaZeroError("θ(x) = 0")
        if k is None:
            k = self.hypothesis_power()

        diagonal = [(algebra.diagonal_coset(mono), v) for mono, v in theta.items()]
        subgroups = sorted({c.sub for c, _ in diagonal})
        refined = dict(zip(subgroups, lattice.refine_family(subgroups)))
        cosets, coefficients = [], []
        for c, v in diagonal:
            for piece in lattice.translated_family(c, refined[c.sub]):
                cosets.append(piece)
                coefficients.append(v)

        by_value: dict[Scalar, list[Atom]] = {}
        for atom in lattice.orthogonalize(cosets):
            value = sum((coefficients[i] for i in atom.support), start=ZERO)
            if value:
                by_value.setdefault(value, []).append(atom)

        regions = []
        for value, atoms in by_value.items():
            first = atoms[0]
            subs = [first.base.sub, *(d.sub for d in first.excluded)]
            m = k
            while not all(group.contains_subgroup(sub, group.image(m)) for sub in subs):
                m += 1
            h = first.witness
            region = SpectralRegion(value, tuple(atoms), h, m)
            inner = algebra.e(lattice.coset(h, group.image(m)))
            if algebra.mul(inner, algebra.indicator_element(region.projection)) != inner:
                raise VerificationFailure(
                    "inner coset lies in its region", f"h={h}, m={m}, value={value}"
                )
            log.debug("region λ=%s: %d atoms, inner coset at depth %d", value, len(atoms), m)
            regions.append(region)
        return DecomposedTheta(0, tuple(regions))

    def criticals(self, x: AlgebraElement) -> tuple[Critical, ...]:
        return tuple(
            Critical(self.group.invert(mono.a), mono.b, mono.n, mono.m)
            for mono in (x - self.algebra.theta(x)).monomials()
        )

    def critical_value(self, c: Critical, a) -> Any:
        """φ^{n′}(a⁻¹) g′⁻¹ g φ^n(a)"""

        group = self.group
        return group.product(
            group.phi_pow(group.invert(a), c.n_prime),
            group.invert(c.g_prime),
            c.g,
            group.phi_pow(a, c.n),
        )

    def find_a(self, criticals: Sequence[Critical], h, m: int) -> Any:
        """First a in h·φ^m(G) with every critical value different from e."""

        cap = self.algebra.lattice.witness_cap
        for count, y in enumerate(self.group.iter_subgroup(self.group.image(m))):
            if count >= cap:
                raise WitnessNotFoundError(
                    f"no a in {h}·phi^{m}(G) separates {len(criticals)} critical terms",
                    cap,
                )
            a = self.group.multiply(h, y)
            if all(self.critical_value(c, a) != self.group.identity for c in criticals):
                return a
        raise WitnessNotFoundError("subgroup enumeration ended", cap)

    def image_depth(self, v) -> int:
        """Largest n with v ∈ φⁿ(G); finite for v ≠ e under purity."""

        n = 0
        while self.group.phi_preimage(v, n + 1) is not None:
            n += 1
        return n

    def find_b(self, criticals: Sequence[Critical], a, floor: int) -> int:
        if not criticals:
            return floor
        return max(
            floor, 1 + max(self.image_depth(self.critical_value(c, a)) for c in criticals)
        )

    def certify(self, x: AlgebraElement) -> Certificate:
        algebra, group = self.algebra, self.group
        if not algebra.is_self_adjoint(x):
            raise NotSelfAdjointError("x differs from its adjoint")
        k = self.hypothesis_power()
        decomposition = self.decompose_theta(x, k)
        criticals = self.criticals(x)

        certified = []
        for region in decomposition.regions:
            a = self.find_a(criticals, region.h, region.m)
            b = self.find_b(criticals, a, region.m)
            f = algebra.e(algebra.lattice.coset(a, group.image(b)))
            z = algebra.mul(algebra.u(a), algebra.s(b))
            certified.append(CertifiedRegion(region, a, b, f, z))

        certificate = Certificate(x, k, criticals, tuple(certified))
        self.verify(certificate)
        log.info(
            "certified x with %d terms: %d regions, %d critical terms",
            len(x),
            len(certified),
            len(criticals),
        )
        return certificate

    def verify(self, certificate: Certificate) -> None:
        """Re-check the four identities, recording each in the transcript."""

        algebra = self.algebra
        x, regions = certificate.x, certificate.regions
        transcript = certificate.transcript
        transcript.clear()

        def check(identity: str, holds: bool, detail: str = ""):
            transcript.append((identity, "ok" if holds else "failed"))
            if not holds:
                raise VerificationFailure(identity, detail)

        for i, ri in enumerate(regions):
            for j, rj in enumerate(regions):
                if i < j:
                    check(f"(i) f_{i} f_{j} = 0", not algebra.mul(ri.f, rj.f))
        for i, r in enumerate(regions):
            star = algebra.adjoint(r.z)
            check(f"(ii) z_{i} z_{i}* = f_{i}", algebra.mul(r.z, star) == r.f)
            check(f"(ii) z_{i}* z_{i} = 1", algebra.mul(star, r.z) == algebra.one())

        theta = algebra.theta(x)
        compressed = AlgebraElement()
        for r in regions:
            compressed = compressed + algebra.mul(r.f, theta, r.f)
        lhs: DiagonalNorm = algebra.diagonal_norm(compressed)
        rhs: DiagonalNorm = algebra.diagonal_norm(theta)
        check(
            "(iii) |sum f_i theta(x) f_i| = |theta(x)|",
            lhs == rhs,
            f"{lhs} != {rhs}",
        )
        for i, r in enumerate(regions):
            check(
                f"(iv) f_{i} x f_{i} = lambda_{i} f_{i}",
                algebra.mul(r.f, x, r.f) == r.f.scaled(r.region.value),
                f"lambda={r.region.value}",
            )
