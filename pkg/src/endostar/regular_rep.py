"""
The left regular representation on a finite window of l²(G).

Every monomial maps basis vectors to basis vectors or to zero, so an operator is
stored column by column as a sparse map of exact scalars. A column whose image
leaves the window is marked spilled instead of being truncated; identities are
only compared on columns defined on both sides, which keeps every comparison
exact.
"""

import logging
import random
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

from .algebra import AlgebraElement, Monomial, StarAlgebra
from .errors import WindowTooSmallError
from .groups import GroupInstance
from .lattice import BasicCoset, VirtualIndicator
from .sampling import random_coset, random_element, random_monomial, small_elements
from .scalars import ONE, ZERO, Scalar, scalar, to_json as scalar_to_json

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Window:
    """
    Attributes:
        basis: window elements in enumeration order
        core: indices whose neighbourhood of the configured depth stays inside
    """

    group: GroupInstance
    basis: tuple
    core: frozenset[int]
    depth: int
    index: Mapping[Any, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.basis)

    def position(self, x) -> int | None:
        return self.index.get(x)


def _neighbours(group: GroupInstance, x) -> list:
    result = [group.phi(x)]
    lower = group.phi_preimage(x, 1)
    if lower is not None:
        result.append(lower)
    for g in group.walk_generators():
        result.append(group.multiply(g, x))
        result.append(group.multiply(group.invert(g), x))
    return result


def build_window(group: GroupInstance, depth: int = 1, **params: int) -> Window:
    """The instance's window with its safe core: points reachable in ``depth`` steps stay inside."""

    if depth < 1:
        raise ValueError(f"window depth must be positive, got {depth}")
    basis = tuple(dict.fromkeys(group.window(**params)))
    index = {x: i for i, x in enumerate(basis)}
    core = set(index)
    for _ in range(depth):
        core = {x for x in core if all(y in core for y in _neighbours(group, x))}
    if not core:
        raise WindowTooSmallError(
            f"{group.id} window {params or 'with defaults'} has an empty core at depth {depth}"
        )
    log.debug("%s window: %d points, core of %d", group.id, len(basis), len(core))
    return Window(group, basis, frozenset(index[x] for x in core), depth, index)


def apply_monomial(group: GroupInstance, mono: Monomial, k):
    """Image point of ξ_k under the monomial, or None when ξ_k is sent to zero."""

    y = group.multiply(mono.b, group.phi_pow(k, mono.m))
    if not group.member(y, mono.L):
        return None
    return group.phi_preimage(group.multiply(mono.a, y), mono.n)


Column = Mapping[int, Scalar]


@dataclass(frozen=True)
class PartialMapMatrix:
    """
    Exact sparse matrix over a window.

    ``columns`` maps a basis index to its nonzero entries; ``spilled`` holds the
    columns whose true image has a component outside the window.
    """

    size: int
    columns: Mapping[int, Column]
    spilled: frozenset[int] = frozenset()

    def column(self, j: int) -> Column:
        return self.columns.get(j, {})

    def is_defined(self, j: int) -> bool:
        return j not in self.spilled

    def __add__(self, other: "PartialMapMatrix") -> "PartialMapMatrix":
        columns = {}
        for j in set(self.columns) | set(other.columns):
            col = dict(self.column(j))
            for i, v in other.column(j).items():
                col[i] = col.get(i, ZERO) + v
            columns[j] = col
        return _matrix(self.size, columns, self.spilled | other.spilled)

    def scaled(self, c) -> "PartialMapMatrix":
        c = scalar(c)
        return _matrix(
            self.size,
            {j: {i: v * c for i, v in col.items()} for j, col in self.columns.items()},
            self.spilled,
        )

    def __matmul__(self, other: "PartialMapMatrix") -> "PartialMapMatrix":
        columns, spilled = {}, set(other.spilled)
        for j, col in other.columns.items():
            if j in spilled:
                continue
            if any(i in self.spilled for i in col):
                spilled.add(j)
                continue
            acc: dict[int, Scalar] = {}
            for i, v in col.items():
                for r, w in self.column(i).items():
                    acc[r] = acc.get(r, ZERO) + w * v
            columns[j] = acc
        return _matrix(self.size, columns, frozenset(spilled))

    def mismatches(
        self, other: "PartialMapMatrix", columns: Iterable[int] | None = None
    ) -> tuple[list[int], int]:
        """Columns defined on both sides where the matrices differ, and how many were compared."""

        if columns is None:
            columns = range(self.size)
        bad, checked = [], 0
        for j in columns:
            if not (self.is_defined(j) and other.is_defined(j)):
                continue
            checked += 1
            if dict(self.column(j)) != dict(other.column(j)):
                bad.append(j)
        return bad, checked


def _matrix(size: int, columns: Mapping[int, Mapping[int, Scalar]], spilled) -> PartialMapMatrix:
    cleaned = {}
    for j, col in columns.items():
        if j in spilled:
            continue
        col = {i: v for i, v in col.items() if v}
        if col:
            cleaned[j] = col
    return PartialMapMatrix(size, cleaned, frozenset(spilled))


def point_map(w: Window, f: Callable[[Any], Any]) -> PartialMapMatrix:
    """Matrix of ξ_k ↦ ξ_f(k), with f returning None for zero."""

    columns, spilled = {}, set()
    for j, k in enumerate(w.basis):
        image = f(k)
        if image is None:
            continue
        i = w.position(image)
        if i is None:
            spilled.add(j)
        else:
            columns[j] = {i: ONE}
    return _matrix(len(w), columns, frozenset(spilled))


def identity_matrix(w: Window) -> PartialMapMatrix:
    return point_map(w, lambda k: k)


def u_matrix(w: Window, g) -> PartialMapMatrix:
    return point_map(w, lambda k: w.group.multiply(g, k))


def s_matrix(w: Window) -> PartialMapMatrix:
    return point_map(w, w.group.phi)


def s_star_matrix(w: Window) -> PartialMapMatrix:
    return point_map(w, lambda k: w.group.phi_preimage(k, 1))


def projection_matrix(w: Window, contains: Callable[[Any], bool]) -> PartialMapMatrix:
    return point_map(w, lambda k: k if contains(k) else None)


def power(matrix: PartialMapMatrix, w: Window, k: int) -> PartialMapMatrix:
    result = identity_matrix(w)
    for _ in range(k):
        result = matrix @ result
    return result


def represent(algebra: StarAlgebra, x: AlgebraElement, w: Window) -> PartialMapMatrix:
    columns: dict[int, dict[int, Scalar]] = {}
    spilled = set()
    for j, k in enumerate(w.basis):
        col: dict[int, Scalar] = {}
        for mono, coeff in x.items():
            image = apply_monomial(algebra.group, mono, k)
            if image is None:
                continue
            i = w.position(image)
            if i is None:
                spilled.add(j)
                break
            col[i] = col.get(i, ZERO) + coeff
        columns[j] = col
    return _matrix(len(w), columns, frozenset(spilled))


# reports


@dataclass
class RelationReport:
    relation: str
    sample_count: int = 0
    checked_columns: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked_columns > 0 and not self.failures

    def record(
        self,
        w: Window,
        lhs: PartialMapMatrix,
        rhs: PartialMapMatrix,
        label: str = "",
    ):
        """Compare on the safe core only; spilled columns are skipped."""

        self.sample_count += 1
        bad, checked = lhs.mismatches(rhs, sorted(w.core))
        self.checked_columns += checked
        for j in bad[:1]:
            self.failures.append(
                {
                    "sample": label,
                    "witness": w.group.to_json(w.basis[j]),
                    "lhs": _column_json(w, lhs.column(j)),
                    "rhs": _column_json(w, rhs.column(j)),
                }
            )

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "sampleCount": self.sample_count,
            "checkedColumns": self.checked_columns,
            "failures": self.failures,
        }


def _column_json(w: Window, col: Column) -> list:
    return [
        {"point": w.group.to_json(w.basis[i]), **scalar_to_json(v)}
        for i, v in sorted(col.items())
    ]


def check_relations(
    algebra: StarAlgebra,
    w: Window,
    rng: random.Random,
    samples: int = 500,
    depth: int = 2,
) -> list[RelationReport]:
    """
    The defining relations as matrix identities between the concrete generator
    matrices and the matrices of the symbolic results.
    """

    group, lattice = algebra.group, algebra.lattice
    fmt = group.format_element
    S, S_star = s_matrix(w), s_star_matrix(w)
    pool = small_elements(group, 2)

    def e(c: BasicCoset) -> PartialMapMatrix:
        return projection_matrix(w, lambda k: lattice.contains(c, k))

    unions_seen: dict[tuple[BasicCoset, BasicCoset], AlgebraElement] = {}

    def union_element(X: BasicCoset, Y: BasicCoset) -> AlgebraElement:
        """e of X∪Y as the sum of its atoms."""

        if (X, Y) not in unions_seen:
            total = VirtualIndicator()
            for atom in lattice.orthogonalize([X, Y]):
                total = total + atom.indicator
            unions_seen[X, Y] = algebra.indicator_element(total)
        return unions_seen[X, Y]

    def refined_pieces(X: BasicCoset, Y: BasicCoset) -> AlgebraElement:
        """e_X + e_Y rebuilt from the cosets of the refined subgroups."""

        K, M = lattice.refine_family([X.sub, Y.sub])
        result = algebra.zero()
        for piece in (*lattice.translated_family(X, K), *lattice.translated_family(Y, M)):
            result = result + algebra.e(piece)
        return result

    products = RelationReport("(i) u_g s^n u_h s^m = u_{g phi^n(h)} s^(n+m)")
    conjugation = RelationReport("(ii) u_g s^n e_X s*^n u_g^-1 = e_{g phi^n(X)}")
    unit = RelationReport("(iii) e_G = 1")
    meets = RelationReport("(iv) e_X e_Y = e_{X meet Y}")
    unions = RelationReport("(v) e_X + e_Y = e_{X union Y} + e_{X meet Y}")

    unit.record(w, e(lattice.whole()), identity_matrix(w), "G")
    unit.record(w, represent(algebra, algebra.one(), w), identity_matrix(w), "1")

    for _ in range(samples):
        g, h = rng.choice(pool), rng.choice(pool)
        n, m = rng.randint(0, depth), rng.randint(0, depth)
        lhs = u_matrix(w, g) @ power(S, w, n) @ u_matrix(w, h) @ power(S, w, m)
        rhs = algebra.mul(
            algebra.u(group.multiply(g, group.phi_pow(h, n))), algebra.s(n + m)
        )
        products.record(
            w, lhs, represent(algebra, rhs, w), f"g={fmt(g)} h={fmt(h)} n={n} m={m}"
        )

        X = random_coset(group, rng, depth)
        lhs = (
            u_matrix(w, g)
            @ power(S, w, n)
            @ e(X)
            @ power(S_star, w, n)
            @ u_matrix(w, group.invert(g))
        )
        image = lattice.translate(lattice.phi(X, n), g)
        conjugation.record(w, lhs, e(image), f"g={fmt(g)} n={n} X={X}")
        conjugation.record(
            w, lhs, represent(algebra, algebra.e(image), w), f"symbolic X={X}"
        )

        Y = random_coset(group, rng, depth)
        meet = lattice.intersect(X, Y)
        meet_matrix = (
            projection_matrix(w, lambda k: False) if meet is None else e(meet)
        )
        meets.record(w, e(X) @ e(Y), meet_matrix, f"X={X} Y={Y}")
        symbolic = algebra.mul(algebra.e(X), algebra.e(Y))
        meets.record(w, represent(algebra, symbolic, w), meet_matrix, f"symbolic X={X} Y={Y}")

        union = union_element(X, Y)
        if meet is not None:
            union = union + algebra.e(meet)
        unions.record(w, e(X) + e(Y), represent(algebra, union, w), f"X={X} Y={Y}")
        unions.record(
            w,
            e(X) + e(Y),
            represent(algebra, refined_pieces(X, Y), w),
            f"refined X={X} Y={Y}",
        )

    reports = [products, conjugation, unit, meets, unions]
    for report in reports:
        log.info(
            "%s: %d samples, %d failures",
            report.relation,
            report.sample_count,
            len(report.failures),
        )
    return reports


def check_oracle(
    algebra: StarAlgebra, w: Window, rng: random.Random, samples: int = 1000
) -> RelationReport:
    """Symbolic products against matrix products of random monomials."""

    report = RelationReport("oracle: represent(xy) = represent(x) represent(y)")
    for _ in range(samples):
        x = AlgebraElement({random_monomial(algebra, rng): ONE})
        y = AlgebraElement({random_monomial(algebra, rng): ONE})
        report.record(
            w,
            represent(algebra, algebra.mul(x, y), w),
            represent(algebra, x, w) @ represent(algebra, y, w),
            f"{x.monomials()[0]} * {y.monomials()[0]}",
        )
    return report


def signature(group: GroupInstance, mono: Monomial, w: Window) -> tuple:
    return tuple(apply_monomial(group, mono, k) for k in w.basis)


def domain_points(group: GroupInstance, labels: Iterable[Monomial], reach: int) -> list:
    """
    Points sent into each label's subgroup: φ^-m(b⁻¹ φ^j(g)) for small g and
    j up to ``reach``. They land in the label's domain when φ^j(g) does.
    """

    targets = [
        group.phi_pow(g, j) for g in small_elements(group, 2) for j in range(reach + 1)
    ]
    points: dict[Any, None] = {}
    for label in labels:
        inverse = group.invert(label.b)
        for t in targets:
            k = group.phi_preimage(group.multiply(inverse, t), label.m)
            if k is not None:
                points[k] = None
    return list(points)


def separating_point(group: GroupInstance, x: Monomial, y: Monomial):
    """A point where the two labels act differently, or None when none was found."""

    reach = 1 + max(x.n, x.m, x.L.depth, y.n, y.m, y.L.depth)
    for k in domain_points(group, (x, y), reach):
        if apply_monomial(group, x, k) != apply_monomial(group, y, k):
            return k
    return None


def check_distinguishability(
    algebra: StarAlgebra, w: Window, labels: Iterable[Monomial]
) -> RelationReport:
    """
    Distinct canonical labels must act as distinct partial maps.

    Labels are first told apart by their action on the window. Labels that agree
    there are compared again on points of their own domains, which the window may
    not reach.
    """

    group = algebra.group
    report = RelationReport("distinct labels act distinctly")
    buckets: dict[tuple, list[Monomial]] = {}
    unobservable = separated = 0
    for label in labels:
        key = signature(group, label, w)
        if all(image is None for image in key):
            # zero on every window point, nothing to compare
            unobservable += 1
            continue
        report.sample_count += 1
        report.checked_columns += len(w)
        bucket = buckets.setdefault(key, [])
        for other in bucket:
            if other == label:
                continue
            if separating_point(group, other, label) is not None:
                separated += 1
                continue
            log.warning("labels %s and %s act alike", other, label)
            report.failures.append({"sample": str(label), "collidesWith": str(other)})
            break
        bucket.append(label)
    log.debug(
        "%d labels act as zero on the window, %d pairs separated outside it",
        unobservable,
        separated,
    )
    return report


def check_theta_faithfulness(
    algebra: StarAlgebra, w: Window, rng: random.Random, samples: int = 1000
) -> RelationReport:
    """A nonzero window image of x forces θ(x*x) ≠ 0."""

    report = RelationReport("theta(x* x) != 0 when x acts nontrivially")
    for _ in range(samples):
        x = random_element(algebra, rng)
        report.sample_count += 1
        if not represent(algebra, x, w).columns:
            continue
        report.checked_columns += 1
        if not algebra.theta(algebra.mul(algebra.adjoint(x), x)):
            report.failures.append({"sample": repr(x)})
    return report
