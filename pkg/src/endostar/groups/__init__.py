"""Computable groups with an injective endomorphism."""

from .base import GroupInstance, IndexClass, IndexKind, LatticeSubgroup
from .free_shift import FreeShift
from .probes import PurityReport, check_image_hypothesis, purity_probe
from .shift_z import ShiftZ
from .times2 import Times2

INSTANCES: dict[str, type[GroupInstance]] = {
    cls.id: cls for cls in (ShiftZ, FreeShift, Times2)
}


def get_instance(name: str, bases=("G",)) -> GroupInstance:
    try:
        cls = INSTANCES[name]
    except KeyError:
        raise ValueError(
            f"unknown group instance {name!r}; choose from {', '.join(INSTANCES)}"
        ) from None
    return cls(bases)


__all__ = [
    "FreeShift",
    "GroupInstance",
    "INSTANCES",
    "IndexClass",
    "IndexKind",
    "LatticeSubgroup",
    "PurityReport",
    "ShiftZ",
    "Times2",
    "check_image_hypothesis",
    "get_instance",
    "purity_probe",
]
