"""
The check suites behind the command line. Each returns a :class:`SuiteResult`
whose body goes into the JSON report; a failed identity is a report entry, never
an exception.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field, replace

from . import codec
from .algebra import AlgebraElement, StarAlgebra
from .certificate import Certifier
from .config import RunConfig
from .errors import ConfigError, EndostarError
from .expr import parse_expr
from .groups import check_image_hypothesis, purity_probe
from .ktheory import (
    FinSeq,
    cokernel_class,
    kernel_probe,
    one_minus_sigma,
    six_term_summary,
)
from .lattice import BasicCoset
from .regular_rep import (
    RelationReport,
    Window,
    build_window,
    check_distinguishability,
    check_oracle,
    check_relations,
    check_theta_faithfulness,
    represent,
)
from .sampling import (
    monomial_family,
    random_coset,
    random_monomial,
    random_self_adjoint,
    small_elements,
)
from .semigroup import EnvElement, Semigroup, SemigroupElement

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    body: dict = field(default_factory=dict)


def _window(config: RunConfig, algebra: StarAlgebra) -> Window:
    return build_window(algebra.group, config.core_depth, **config.window_params)


def _window_json(w: Window) -> dict:
    return {"size": len(w), "core": len(w.core), "depth": w.depth}


def _reports(reports: list[RelationReport]) -> tuple[bool, list[dict]]:
    return all(r.passed for r in reports), [r.to_json() for r in reports]


# group

PHI_EXPONENT = 6
ENUMERATED = 1000


def group_laws(config: RunConfig) -> SuiteResult:
    """φ against the group operations on random pairs, and the start of the enumeration."""

    group = config.group()
    rng = config.rng("group")
    fmt = group.format_element
    homomorphism = _law("phi(gh) = phi(g) phi(h) and phi is injective")
    preimage = _law("phi_preimage(phi^n(g), n) = g")
    membership = _law("g in phi^n(G) iff phi_preimage(g, n) exists")
    for _ in range(config.samples):
        g, h = group.random_element(rng), group.random_element(rng)
        n = rng.randint(0, PHI_EXPONENT)
        label = f"g={fmt(g)} h={fmt(h)} n={n}"
        _expect(
            homomorphism,
            group.phi(group.multiply(g, h)) == group.multiply(group.phi(g), group.phi(h)),
            label,
        )
        _expect(homomorphism, (group.phi(g) == group.phi(h)) == (g == h), label)
        _expect(preimage, group.phi_preimage(group.phi_pow(g, n), n) == g, label)
        for x in (g, group.phi_pow(h, n), group.multiply(g, group.phi_pow(h, n))):
            _expect(
                membership,
                group.member(x, group.image(n)) == (group.phi_preimage(x, n) is not None),
                f"x={fmt(x)} n={n}",
            )

    enumeration = _law("enumeration starts at e without repeats")
    first = list(itertools.islice(group.iter_elements(), ENUMERATED))
    _expect(
        enumeration,
        first[0] == group.identity and len(set(first)) == len(first),
        f"first {len(first)} elements",
    )

    passed, body = _reports([homomorphism, preimage, membership, enumeration])
    return SuiteResult("group", passed, {"instance": group.id, "checks": body})


# relations


def relations(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    w = _window(config, algebra)
    rng = config.rng("relations")
    reports = check_relations(algebra, w, rng, config.samples, config.depth)
    reports.append(check_oracle(algebra, w, rng, config.samples))
    labels = monomial_family(
        algebra, exponent=2, size=config.label_size, depth=min(config.depth, 2)
    )
    reports.append(check_distinguishability(algebra, w, labels))
    passed, body = _reports(reports)
    return SuiteResult("relations", passed, {"window": _window_json(w), "relations": body})


# algebra laws


def _law(name: str) -> RelationReport:
    return RelationReport(name)


def _expect(report: RelationReport, holds: bool, label: str):
    report.sample_count += 1
    report.checked_columns += 1
    if not holds:
        report.failures.append({"sample": label})


def laws(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    group = algebra.group
    rng = config.rng("laws")

    def mono() -> AlgebraElement:
        return AlgebraElement({random_monomial(algebra, rng, config.depth): 1})

    def diagonal() -> AlgebraElement:
        return algebra.e(random_coset(group, rng, config.depth)).scaled(rng.randint(1, 3))

    associativity = _law("(xy)z = x(yz)")
    star = _law("(xy)* = y*x* and x** = x")
    degree = _law("degree(xy) = degree(x) degree(y)")
    idempotent = _law("theta(theta(x)) = theta(x)")
    bimodule = _law("theta(d x d') = d theta(x) d'")
    for _ in range(config.samples):
        x, y, z = mono(), mono(), mono()
        label = f"{x.monomials()[0]} | {y.monomials()[0]} | {z.monomials()[0]}"
        _expect(
            associativity,
            algebra.mul(algebra.mul(x, y), z) == algebra.mul(x, algebra.mul(y, z)),
            label,
        )
        _expect(
            star,
            algebra.adjoint(algebra.mul(x, y))
            == algebra.mul(algebra.adjoint(y), algebra.adjoint(x))
            and algebra.adjoint(algebra.adjoint(x)) == x,
            label,
        )
        product = algebra.mul(x, y)
        if product:
            (k,) = product.monomials()
            (kx,), (ky,) = x.monomials(), y.monomials()
            expected = algebra.semigroup.env_mul(algebra.degree(kx), algebra.degree(ky))
            _expect(degree, algebra.degree(k) == expected, label)
        sample = x + y.scaled(2)
        theta = algebra.theta(sample)
        _expect(idempotent, algebra.theta(theta) == theta, label)
        d, d2 = diagonal(), diagonal()
        _expect(
            bimodule,
            algebra.theta(algebra.mul(d, sample, d2)) == algebra.mul(d, theta, d2),
            label,
        )

    unital = _law("theta(1) = 1")
    _expect(unital, algebra.theta(algebra.one()) == algebra.one(), "1")
    w = _window(config, algebra)
    faithful = check_theta_faithfulness(algebra, w, rng, config.samples)
    reports = [associativity, star, degree, idempotent, unital, bimodule, faithful]

    if group.bases == ("G",):
        presentation = _law("projections of phi^n(G) cosets")
        failures = algebra.presentation_check(small_elements(group, 1), config.depth)
        presentation.sample_count = presentation.checked_columns = 1
        presentation.failures = [{"sample": f} for f in failures]
        reports.append(presentation)

    passed, body = _reports(reports)
    return SuiteResult("laws", passed, {"window": _window_json(w), "laws": body})


# semigroup and ideals


def _random_semigroup_element(
    semigroup: Semigroup, rng: random.Random, depth: int
) -> SemigroupElement:
    return SemigroupElement(semigroup.group.random_element(rng, 1), rng.randint(0, depth))


def ideals(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    group, semigroup = algebra.group, algebra.semigroup
    rng = config.rng("ideals")

    def sample() -> SemigroupElement:
        return _random_semigroup_element(semigroup, rng, config.depth)

    ore = _law("cancellative with common left multiples")
    env = _law("embedding into the enveloping group")
    for _ in range(config.samples):
        p, q, r = sample(), sample(), sample()
        label = f"{p} {q} {r}"
        _expect(
            ore,
            semigroup.s_mul(semigroup.s_mul(p, q), r)
            == semigroup.s_mul(p, semigroup.s_mul(q, r)),
            label,
        )
        if q != r:
            _expect(ore, semigroup.s_mul(p, q) != semigroup.s_mul(p, r), label)
            _expect(ore, semigroup.s_mul(q, p) != semigroup.s_mul(r, p), label)
        cp, cq = semigroup.common_left_multiple(p, q)
        _expect(ore, semigroup.s_mul(cp, p) == semigroup.s_mul(cq, q), label)

        _expect(
            env,
            semigroup.env_mul(semigroup.embed(p), semigroup.embed(q))
            == semigroup.embed(semigroup.s_mul(p, q)),
            label,
        )
        _expect(env, (semigroup.embed(p) == semigroup.embed(q)) == (p == q), label)
        x = semigroup.env_normalize(
            EnvElement(group.random_element(rng, 1), rng.randint(0, 2), rng.randint(-2, 2))
        )
        _expect(
            env,
            semigroup.env_mul(semigroup.env_inv(x), x) == semigroup.env_identity,
            label,
        )
        fp, fq = semigroup.env_factor(x)
        _expect(
            env,
            semigroup.env_mul(semigroup.env_inv(semigroup.embed(fp)), semigroup.embed(fq))
            == x,
            label,
        )

    w = _window(config, algebra)
    ball = [SemigroupElement(x, p) for p in range(4) for x in w.basis]
    generators = [
        SemigroupElement(g, n) for n in range(4) for g in small_elements(group, 1)
    ]
    closed_form = _law("ideal operations against the ball")
    bridge = _law("projections of ideals multiply like the ideals intersect")
    members = {
        p: frozenset(
            i
            for i, z in enumerate(ball)
            if semigroup.ideal_contains(semigroup.principal(p), z)
        )
        for p in generators
    }
    projections = {
        p: semigroup.li_ideal_projection(algebra, semigroup.principal(p))
        for p in generators
    }
    for p in generators:
        ideal = semigroup.principal(p)
        translated = [semigroup.s_mul(p, z) for z in ball]
        for q in generators:
            J = semigroup.principal(q)
            label = f"{p} {q}"
            meet = semigroup.ideal_intersect(ideal, J)
            found = {i for i, z in enumerate(ball) if semigroup.ideal_contains(meet, z)}
            _expect(closed_form, found == members[p] & members[q], label)
            pre = semigroup.ideal_preimage(p, J)
            found = {i for i, z in enumerate(ball) if semigroup.ideal_contains(pre, z)}
            brute = {i for i, pz in enumerate(translated) if semigroup.ideal_contains(J, pz)}
            _expect(closed_form, found == brute, label)
            _expect(
                bridge,
                semigroup.li_ideal_projection(algebra, meet)
                == algebra.mul(projections[p], projections[q]),
                label,
            )
        _expect(
            bridge,
            projections[p] == algebra.e(BasicCoset(ideal.generator.g, group.image(p.n))),
            f"{p}",
        )

    passed, body = _reports([ore, env, closed_form, bridge])
    return SuiteResult(
        "ideals",
        passed,
        {
            "ballSize": len(ball),
            "checks": body,
            "example": _ideal_example(semigroup, generators[1], generators[-1]),
        },
    )


def _ideal_example(semigroup: Semigroup, p: SemigroupElement, q: SemigroupElement) -> dict:
    group = semigroup.group
    cp, cq = semigroup.common_left_multiple(p, q)
    x = semigroup.env_mul(semigroup.env_inv(semigroup.embed(p)), semigroup.embed(q))
    fp, fq = semigroup.env_factor(x)
    return {
        "p": codec.semigroup_element_to_json(group, p),
        "q": codec.semigroup_element_to_json(group, q),
        "intersection": codec.ideal_to_json(
            group, semigroup.ideal_intersect(semigroup.principal(p), semigroup.principal(q))
        ),
        "preimage": codec.ideal_to_json(
            group, semigroup.ideal_preimage(p, semigroup.principal(q))
        ),
        "commonLeftMultiple": [
            codec.semigroup_element_to_json(group, cp),
            codec.semigroup_element_to_json(group, cq),
        ],
        "quotient": codec.env_to_json(group, x),
        "factor": [
            codec.semigroup_element_to_json(group, fp),
            codec.semigroup_element_to_json(group, fq),
        ],
    }


# K-theory


def ktheory(config: RunConfig) -> SuiteResult:
    coeff = config.coeff_group()
    rng = config.rng("ktheory")
    summary = six_term_summary(coeff, rng, config.k_samples)
    probe = kernel_probe(coeff, rng, min(config.k_samples, 100))
    a = coeff.random(rng) if not coeff.is_trivial else coeff.zero
    section = FinSeq.of(coeff, {0: a})
    summary["section"] = {
        "a": list(a),
        "oneMinusSigma": codec.finseq_to_json(one_minus_sigma(section)),
        "class": list(cokernel_class(section)),
    }
    passed = summary["passed"] and probe.passed and cokernel_class(section) == a
    return SuiteResult("ktheory", passed, summary)


# purity


def purity(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    group = algebra.group
    w = _window(config, algebra)
    probe = purity_probe(group, config.purity_depth, w.basis)
    k = check_image_hypothesis(group, config.hypothesis_cap)
    return SuiteResult(
        "purity",
        probe.passed,
        {
            "depth": probe.depth,
            "sampled": len(probe.survival),
            "violators": [group.to_json(x) for x in probe.violators],
            "hypothesis": {"holds": k is not None, "k": k, "bases": list(group.bases)},
            "metadata": {
                "pure": group.pure,
                "infiniteCokernel": group.infinite_cokernel,
                "amenable": group.amenable,
            },
        },
    )


# expressions


def _parsed(config: RunConfig, algebra: StarAlgebra) -> AlgebraElement:
    if config.expr is None:
        raise ConfigError("this command needs --expr")
    return parse_expr(algebra, config.expr)


def mul(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    x = _parsed(config, algebra)
    terms = codec.element_to_json(algebra.group, x)
    round_trip = codec.element_from_json(algebra, terms) == x
    return SuiteResult(
        "mul",
        round_trip,
        {"result": codec.described(algebra, x), "jsonRoundTrip": round_trip},
    )


def theta(config: RunConfig) -> SuiteResult:
    """θ of the given expression, or the law suite when there is none."""

    if config.expr is None:
        return laws(config)
    algebra = config.algebra()
    x = _parsed(config, algebra)
    t = algebra.theta(x)
    body = {
        "x": codec.described(algebra, x),
        "theta": codec.described(algebra, t),
        "norm": codec.norm_to_json(algebra.diagonal_norm(t)),
    }
    if t and algebra.is_self_adjoint(x):
        try:
            decomposition = Certifier(algebra, config.hypothesis_cap).decompose_theta(x)
        except EndostarError as e:
            body["spectrum"] = {"error": str(e)}
        else:
            body["spectrum"] = codec.decomposition_to_json(algebra.group, decomposition)
    return SuiteResult("theta", True, body)


# certificates


def _window_check(algebra: StarAlgebra, w: Window, certificate) -> bool:
    for r in certificate.regions:
        lhs = represent(algebra, algebra.mul(r.f, certificate.x, r.f), w)
        rhs = represent(algebra, r.f, w).scaled(r.region.value)
        if lhs.mismatches(rhs)[0]:
            return False
    return True


def certify(config: RunConfig) -> SuiteResult:
    algebra = config.algebra()
    certifier = Certifier(algebra, config.hypothesis_cap)
    w = _window(config, algebra)
    if config.expr is not None:
        certificate = certifier.certify(_parsed(config, algebra))
        ok = _window_check(algebra, w, certificate)
        body = codec.certificate_to_json(algebra, certificate)
        body["windowCheck"] = ok
        return SuiteResult("certify", certificate.verified and ok, body)

    rng = config.rng("certify")
    report = _law("random self-adjoint elements certify")
    for _ in range(config.certificates):
        x = random_self_adjoint(algebra, rng)
        try:
            certificate = certifier.certify(x)
        except EndostarError as e:
            report.sample_count += 1
            report.failures.append({"sample": repr(x), "error": str(e)})
            continue
        _expect(
            report,
            certificate.verified and _window_check(algebra, w, certificate),
            repr(x),
        )
    return SuiteResult("certify", report.passed, {"certificates": report.to_json()})


SUITES = {
    "group": group_laws,
    "relations": relations,
    "mul": mul,
    "theta": theta,
    "certify": certify,
    "ideals": ideals,
    "ktheory": ktheory,
    "purity": purity,
}


def run_all(config: RunConfig) -> SuiteResult:
    results = []
    for name in ("group", "relations", "ideals", "ktheory", "purity"):
        results.append(SUITES[name](config))
    results.append(laws(config))
    if check_image_hypothesis(config.group(), config.hypothesis_cap) is not None:
        results.append(certify(replace(config, expr=None)))
    body = {r.name: {"passed": r.passed, **r.body} for r in results}
    return SuiteResult("all", all(r.passed for r in results), body)
