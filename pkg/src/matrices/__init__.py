"""Exact determinants and the Hankel-type determinant inequalities."""

from src.matrices.checks import (
    check_thm3_plain,
    check_thm3_signed,
    check_thm3_unsigned,
    check_thm7_det,
    check_thm7_product,
    index_tuples,
    sweep_thm3,
    sweep_thm7_det,
    sweep_thm7_product,
)
from src.matrices.determinants import ExactMatrix, IndexTuple, det_cofactor, det_exact, sign_twisted

__all__ = [
    "ExactMatrix",
    "IndexTuple",
    "check_thm3_plain",
    "check_thm3_signed",
    "check_thm3_unsigned",
    "check_thm7_det",
    "check_thm7_product",
    "det_cofactor",
    "det_exact",
    "index_tuples",
    "sign_twisted",
    "sweep_thm3",
    "sweep_thm7_det",
    "sweep_thm7_product",
]
