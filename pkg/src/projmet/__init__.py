"""Projective metrics on finite vector spaces."""
from __future__ import annotations

from .budget import Budget, budget_scope
from .errors import BudgetExceeded, ProjmetError
from .family import SpanningFamily, family_from_vectors, named_family
from .field import FiniteField, gf
from .parent import LinearCode, parent_code, parent_function
from .weight import WeightTable, projective_weight, weight_table

__all__ = [
    "Budget", "BudgetExceeded", "FiniteField", "LinearCode", "ProjmetError", "SpanningFamily",
    "WeightTable", "budget_scope", "family_from_vectors", "gf", "named_family", "parent_code",
    "parent_function", "projective_weight", "weight_table",
]
__version__ = "0.1.0"
