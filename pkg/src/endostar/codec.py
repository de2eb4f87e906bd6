"""JSON forms of the domain types and the versioned report envelope."""

import json
from typing import Any

from .algebra import AlgebraElement, DiagonalNorm, Monomial, StarAlgebra
from .certificate import Certificate, Critical, DecomposedTheta
from .expr import format_expr
from .groups import GroupInstance, LatticeSubgroup
from .ktheory import FinSeq
from .lattice import BasicCoset, VirtualIndicator
from .scalars import format_rational, from_json as scalar_from_json, to_json as scalar_to_json
from .semigroup import EnvElement, RightIdeal, SemigroupElement

SCHEMA = "endostar/1"


def dumps(data: Any) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def envelope(command: str, config: dict, body: dict, passed: bool) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "passed": passed,
        **body,
    }


# group layer


def lattice_to_json(L: LatticeSubgroup) -> list:
    return [{"n": n, "baseId": base} for n, base in L.terms]


def lattice_from_json(group: GroupInstance, data) -> LatticeSubgroup:
    return group.lattice((term["n"], term["baseId"]) for term in data)


def coset_to_json(group: GroupInstance, c: BasicCoset) -> dict:
    return {"rep": group.to_json(c.rep), "sub": lattice_to_json(c.sub)}


def indicator_to_json(group: GroupInstance, indicator: VirtualIndicator) -> list:
    return [
        {"coset": coset_to_json(group, c), "coeff": k} for c, k in indicator.terms
    ]


# algebra


def monomial_to_json(group: GroupInstance, mono: Monomial) -> dict:
    return {
        "n": mono.n,
        "a": group.to_json(mono.a),
        "L": lattice_to_json(mono.L),
        "b": group.to_json(mono.b),
        "m": mono.m,
    }


def monomial_from_json(group: GroupInstance, data) -> Monomial:
    return Monomial(
        int(data["n"]),
        group.from_json(data["a"]),
        lattice_from_json(group, data["L"]),
        group.from_json(data["b"]),
        int(data["m"]),
    )


def element_to_json(group: GroupInstance, x: AlgebraElement) -> list:
    return [
        {"monomial": monomial_to_json(group, k), **scalar_to_json(v)} for k, v in x.items()
    ]


def element_from_json(algebra: StarAlgebra, data) -> AlgebraElement:
    """Labels are canonicalized on the way in, so foreign input is safe."""

    group = algebra.group
    return algebra.element(
        (monomial_from_json(group, item["monomial"]), scalar_from_json(item))
        for item in data
    )


def norm_to_json(norm: DiagonalNorm) -> dict:
    value = norm.value
    return {
        "squared": format_rational(norm.squared),
        "value": None if value is None else format_rational(value),
    }


def described(algebra: StarAlgebra, x: AlgebraElement) -> dict:
    return {"text": format_expr(algebra, x), "terms": element_to_json(algebra.group, x)}


# semigroup


def semigroup_element_to_json(group: GroupInstance, p: SemigroupElement) -> dict:
    return {"g": group.to_json(p.g), "n": p.n}


def env_to_json(group: GroupInstance, x: EnvElement) -> dict:
    return {"g": group.to_json(x.g), "level": x.level, "z": x.z}


def ideal_to_json(group: GroupInstance, ideal: RightIdeal) -> dict:
    if ideal.is_empty:
        return {"empty": True}
    return semigroup_element_to_json(group, ideal.generator)


# certificates


def critical_to_json(group: GroupInstance, c: Critical) -> dict:
    return {
        "g": group.to_json(c.g),
        "gPrime": group.to_json(c.g_prime),
        "n": c.n,
        "nPrime": c.n_prime,
    }


def decomposition_to_json(group: GroupInstance, d: DecomposedTheta) -> dict:
    return {
        "depth": d.depth,
        "regions": [
            {
                "lambda": scalar_to_json(r.value),
                "atoms": len(r.atoms),
                "projection": indicator_to_json(group, r.projection),
                "h": group.to_json(r.h),
                "m": r.m,
            }
            for r in d.regions
        ],
    }


def certificate_to_json(algebra: StarAlgebra, certificate: Certificate) -> dict:
    group = algebra.group
    return {
        "x": described(algebra, certificate.x),
        "hypothesisPower": certificate.hypothesis_power,
        "criticals": [critical_to_json(group, c) for c in certificate.criticals],
        "regions": [
            {
                "lambda": scalar_to_json(r.region.value),
                "h": group.to_json(r.region.h),
                "m": r.region.m,
                "atoms": len(r.region.atoms),
                "projection": indicator_to_json(group, r.region.projection),
                "a": group.to_json(r.a),
                "b": r.b,
                "f": element_to_json(group, r.f),
                "z": element_to_json(group, r.z),
            }
            for r in certificate.regions
        ],
        "transcript": [
            {"identity": identity, "status": status}
            for identity, status in certificate.transcript
        ],
        "verified": certificate.verified,
    }


# K-theory


def finseq_to_json(x: FinSeq) -> list:
    return [[k, list(v)] for k, v in x.entries]
