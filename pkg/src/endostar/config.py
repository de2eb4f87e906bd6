import json
import os
import random
from collections.abc import Mapping
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from .algebra import StarAlgebra
from .errors import ConfigError
from .groups import INSTANCES, GroupInstance, get_instance
from .ktheory import CoeffGroup
from .lattice import DEFAULT_WITNESS_CAP

SEED_ENV = "ENDOSTAR_SEED"

DEFAULT_WINDOWS: dict[str, dict[str, int]] = {
    "shift-z": {"indices": 3, "bound": 2},
    "free-shift": {"length": 3, "index": 3},
    "times2": {"bound": 8},
}


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a run depends on. Equal configs give byte-identical reports.

    Attributes:
        instance: group instance id
        bases: base subgroups, "G" always included
        window: window parameters; missing keys take the instance defaults
        core_depth: steps a core point may take without leaving the window
        depth: largest power of s in sampled monomials and subgroups
        label_size: word size of group elements in the distinguishability family
        samples: samples per relation and per law
        certificates: random elements certified when no expression is given
        witness_cap: enumeration cap of every witness search
        hypothesis_cap: largest k tried for φ^k(G) inside every base subgroup
        purity_depth: the N of the purity probe
        k_rank, k_torsion: coefficient group of the shift bookkeeping
        k_samples: random sequences fed to the kernel probe
        expr: algebra element for mul, theta and certify
        output: report path, stdout when unset
        seed: seed of every random choice
    """

    instance: str = "shift-z"
    bases: tuple[str, ...] = ("G",)
    window: Mapping[str, int] = field(default_factory=dict)
    core_depth: int = 1
    depth: int = 2
    label_size: int = 2
    samples: int = 1000
    certificates: int = 25
    witness_cap: int = DEFAULT_WITNESS_CAP
    hypothesis_cap: int = 16
    purity_depth: int = 8
    k_rank: int = 1
    k_torsion: tuple[int, ...] = ()
    k_samples: int = 10_000
    expr: str | None = None
    output: str | None = None
    seed: int = 0

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        values = dict(data)
        for key in ("bases", "k_torsion"):
            if key in values:
                values[key] = tuple(values[key])
        if "window" in values:
            values["window"] = dict(values["window"])
        return cls(**values)

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "RunConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"config {path} must hold a JSON object")
        return cls.from_mapping(data)

    @classmethod
    def from_args(cls, args, environ: Mapping[str, str] = os.environ) -> "RunConfig":
        """File values from ``--config`` first, then every flag that was given."""

        config = cls.from_file(args.config) if getattr(args, "config", None) else cls()
        overrides = {}
        for f in fields(cls):
            value = getattr(args, f.name, None)
            if value is not None:
                overrides[f.name] = value
        if "bases" in overrides:
            overrides["bases"] = tuple(
                b.strip() for b in overrides["bases"].split(",") if b.strip()
            )
        if "k_torsion" in overrides:
            overrides["k_torsion"] = tuple(overrides["k_torsion"])
        window = dict(config.window)
        for pair in getattr(args, "window_param", None) or ():
            name, sep, value = pair.partition("=")
            if not sep:
                raise ConfigError(f"window parameters look like name=value, got {pair!r}")
            try:
                window[name.strip()] = int(value)
            except ValueError as e:
                raise ConfigError(f"window parameter {pair!r} is not an integer") from e
        overrides["window"] = window
        if environ.get(SEED_ENV):
            try:
                overrides["seed"] = int(environ[SEED_ENV])
            except ValueError as e:
                raise ConfigError(f"{SEED_ENV} must be an integer") from e
        return replace(config, **overrides).validate()

    def validate(self) -> "RunConfig":
        if self.instance not in INSTANCES:
            raise ConfigError(
                f"unknown instance {self.instance!r}; choose from {', '.join(INSTANCES)}"
            )
        try:
            self.group()
        except ValueError as e:
            raise ConfigError(str(e)) from e
        defaults = DEFAULT_WINDOWS[self.instance]
        unknown = sorted(set(self.window) - set(defaults))
        if unknown:
            raise ConfigError(
                f"{self.instance} windows take {', '.join(defaults)}, not {', '.join(unknown)}"
            )
        for name in ("core_depth", "depth", "samples", "witness_cap", "purity_depth"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("label_size", "certificates", "hypothesis_cap", "k_rank", "k_samples"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must not be negative, got {getattr(self, name)}")
        if any(t < 2 for t in self.k_torsion):
            raise ConfigError(f"torsion orders must be at least 2, got {self.k_torsion}")
        return self

    # derived objects

    @property
    def window_params(self) -> dict[str, int]:
        return {**DEFAULT_WINDOWS[self.instance], **self.window}

    def group(self) -> GroupInstance:
        return get_instance(self.instance, self.bases)

    def algebra(self) -> StarAlgebra:
        return StarAlgebra(self.group(), self.witness_cap)

    def rng(self, salt: str = "") -> random.Random:
        """Independent stream per suite, so suites do not shift each other's draws."""
        return random.Random(f"{self.seed}:{salt}")

    def coeff_group(self) -> CoeffGroup:
        return CoeffGroup(self.k_rank, self.k_torsion)

    def to_json(self) -> dict[str, Any]:
        data = asdict(self)
        data["bases"] = list(self.bases)
        data["k_torsion"] = list(self.k_torsion)
        data["window"] = self.window_params
        return data
