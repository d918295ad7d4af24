"""Exact recoupling and closure computations for su(2), su_q(2) and osp(1|2)."""

from .exact import DomainError, ExactValue, IncompatibleSurdError, Spin, SurdSum
from .reports import VerificationReport

__version__ = "0.1.0"

__all__ = ["DomainError", "ExactValue", "IncompatibleSurdError", "Spin", "SurdSum", "VerificationReport"]
