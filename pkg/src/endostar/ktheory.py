"""
Bookkeeping for the shift on ⊕_ℕ A, where A stands for K_*(C*(G)).

The endomorphism acts on ⊕_ℕ A as the shift σ, and the six-term sequence reduces
to the kernel and cokernel of 1 − σ: the kernel is zero and the cokernel is A,
identified through the sum of coordinates.
"""

import logging
import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

log = logging.getLogger(__name__)

Element = tuple[int, ...]


@dataclass(frozen=True)
class CoeffGroup:
    """ℤ^rank ⊕ ℤ/t_1 ⊕ … ⊕ ℤ/t_k, elements stored as reduced integer tuples."""

    rank: int = 1
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"rank must be a natural number, got {self.rank}")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion orders must be at least 2, got {self.torsion}")

    @property
    def width(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.width == 0

    def element(self, values: Iterable[int]) -> Element:
        values = tuple(int(v) for v in values)
        if len(values) != self.width:
            raise ValueError(f"{self} needs {self.width} coordinates, got {values}")
        return self.rank_part(values) + tuple(
            v % t for v, t in zip(values[self.rank :], self.torsion)
        )

    def rank_part(self, values: Element) -> Element:
        return values[: self.rank]

    @property
    def zero(self) -> Element:
        return (0,) * self.width

    def add(self, x: Element, y: Element) -> Element:
        return self.element(a + b for a, b in zip(x, y))

    def neg(self, x: Element) -> Element:
        return self.element(-a for a in x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def random(self, rng: random.Random, bound: int = 5) -> Element:
        free = [rng.randint(-bound, bound) for _ in range(self.rank)]
        return self.element(free + [rng.randrange(t) for t in self.torsion])

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}" if self.rank > 1 else "Z"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class FinSeq:
    """Finitely supported sequence in ⊕_ℕ A with no stored zeros."""

    coeff: CoeffGroup
    entries: tuple[tuple[int, Element], ...] = ()

    @classmethod
    def of(cls, coeff: CoeffGroup, entries: Mapping[int, Any] | Iterable) -> "FinSeq":
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, Element] = {}
        for k, v in items:
            if k < 0:
                raise ValueError(f"negative index {k}")
            acc[k] = coeff.add(acc.get(k, coeff.zero), coeff.element(v))
        return cls(coeff, tuple((k, v) for k, v in sorted(acc.items()) if v != coeff.zero))

    def __getitem__(self, k: int) -> Element:
        return dict(self.entries).get(k, self.coeff.zero)

    def __bool__(self) -> bool:
        return bool(self.entries)

    @property
    def length(self) -> int:
        """One past the last nonzero index."""
        return self.entries[-1][0] + 1 if self.entries else 0


def shift(x: FinSeq) -> FinSeq:
    return FinSeq.of(x.coeff, ((k + 1, v) for k, v in x.entries))


def one_minus_sigma(x: FinSeq) -> FinSeq:
    """y_k = x_k − x_{k−1}"""

    coeff = x.coeff
    return FinSeq.of(
        coeff, [*x.entries, *((k, coeff.neg(v)) for k, v in shift(x).entries)]
    )


def cokernel_class(x: FinSeq) -> Element:
    total = x.coeff.zero
    for _, v in x.entries:
        total = x.coeff.add(total, v)
    return total


def solve_one_minus_sigma(y: FinSeq) -> FinSeq | None:
    """The unique x with (1 − σ)x = y; None when y is not in the image."""

    coeff = y.coeff
    if cokernel_class(y) != coeff.zero:
        return None
    partial, entries = coeff.zero, []
    for k in range(y.length):
        partial = coeff.add(partial, y[k])
        entries.append((k, partial))
    return FinSeq.of(coeff, entries)


def stage(coeff: CoeffGroup, values: Iterable[Element]) -> FinSeq:
    """Image of A^n in ⊕_ℕ A under the inclusion of the first n coordinates."""

    return FinSeq.of(coeff, enumerate(values))


def stage_values(x: FinSeq, n: int) -> tuple[Element, ...]:
    """Coordinates of x at stage n; x must lie in the image of A^n."""

    if x.length > n:
        raise ValueError(f"sequence of length {x.length} does not fit in stage {n}")
    return tuple(x[k] for k in range(n))


def random_finseq(
    coeff: CoeffGroup, rng: random.Random, length: int = 6, bound: int = 5
) -> FinSeq:
    return FinSeq.of(
        coeff,
        ((k, coeff.random(rng, bound)) for k in range(length) if rng.random() < 0.7),
    )


@dataclass
class KernelReport:
    samples: int = 0
    nonzero_kernel: int = 0
    exactness_failures: int = 0
    section_failures: int = 0
    recurrence_failures: int = 0

    @property
    def passed(self) -> bool:
        return not (
            self.nonzero_kernel
            or self.exactness_failures
            or self.section_failures
            or self.recurrence_failures
        )


def adversarial_samples(coeff: CoeffGroup) -> list[FinSeq]:
    """Constant blocks, alternating signs and torsion-order repeats."""

    if coeff.is_trivial:
        return [FinSeq(coeff)]
    one = coeff.element([1] * coeff.width)
    result = [FinSeq(coeff)]
    for n in (1, 2, 5, *coeff.torsion):
        result.append(FinSeq.of(coeff, ((k, one) for k in range(n))))
        result.append(
            FinSeq.of(
                coeff, ((k, one if k % 2 == 0 else coeff.neg(one)) for k in range(n))
            )
        )
    return result


def kernel_probe(
    coeff: CoeffGroup, rng: random.Random, samples: int = 10_000
) -> KernelReport:
    """
    Checks injectivity of 1 − σ, exactness cokernel_class ∘ (1 − σ) = 0, the
    section a ↦ (a, 0, …) and recovery of x from (1 − σ)x by partial sums.
    """

    report = KernelReport()
    draws = adversarial_samples(coeff) + [
        random_finseq(coeff, rng) for _ in range(samples)
    ]
    for x in draws:
        report.samples += 1
        y = one_minus_sigma(x)
        if x and not y:
            report.nonzero_kernel += 1
        if cokernel_class(y) != coeff.zero:
            report.exactness_failures += 1
        if solve_one_minus_sigma(y) != x:
            report.recurrence_failures += 1
        a = x[0]
        if cokernel_class(FinSeq.of(coeff, {0: a})) != a:
            report.section_failures += 1
    log.info(
        "1 - sigma on %s: %d samples, %s",
        coeff,
        report.samples,
        "passed" if report.passed else "FAILED",
    )
    return report


def six_term_summary(
    coeff: CoeffGroup, rng: random.Random, samples: int = 1000
) -> dict:
    report = kernel_probe(coeff, rng, samples)
    return {
        "coefficients": {"rank": coeff.rank, "torsion": list(coeff.torsion)},
        "kernel": "0",
        "cokernel": str(coeff),
        "isomorphism": "class of (x_0, x_1, ...) -> x_0 + x_1 + ...",
        "conclusion": f"K_*(U) = {coeff}",
        "samples": report.samples,
        "passed": report.passed,
    }
