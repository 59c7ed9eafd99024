"""4-ranks of tame kernels of Q(sqrt(+-pl)), Q(sqrt(+-2pl)) via binary quadratic forms."""

from .classify import ClassificationRecord, RankTuple, SplittingCase, classify
from .criteria import FastPath, Quartic, SatisfactionProfile, profile, split_generator
from .qforms import ClassGroup, QuadForm, enumerate_class_group
from .report import DensityReport, consistency_check, density_series, enumerate_omega, tabulate

__all__ = [
    "ClassGroup",
    "ClassificationRecord",
    "DensityReport",
    "FastPath",
    "QuadForm",
    "Quartic",
    "RankTuple",
    "SatisfactionProfile",
    "SplittingCase",
    "classify",
    "consistency_check",
    "density_series",
    "enumerate_class_group",
    "enumerate_omega",
    "profile",
    "split_generator",
    "tabulate",
]
