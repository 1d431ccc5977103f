"""Label-decoder formulas: syntax, parsing, semantics and normal forms."""

from .formula import (Add, And, Eq, Exists, Forall, Formula, Lt, Mul, Not, Or, Var,
                      capped_add, capped_mul, evaluate, free_vars, rename_free, to_text)
from .normal import (Atom, Clause, clause_conflict, clause_satisfiable, from_clauses,
                     to_dnf, to_nnf_lt)
from .parser import parse_formula
from .weak_orders import (WeakOrder, equivalent, order_type, semantic_signature,
                          signature_ranks, weak_orders)

__all__ = [
    "Add", "And", "Atom", "Clause", "Eq", "Exists", "Forall", "Formula", "Lt", "Mul", "Not",
    "Or", "Var", "WeakOrder", "capped_add", "capped_mul", "clause_conflict",
    "clause_satisfiable", "equivalent", "evaluate", "free_vars", "from_clauses",
    "order_type", "parse_formula", "rename_free", "semantic_signature", "signature_ranks",
    "to_dnf", "to_nnf_lt", "to_text", "weak_orders",
]
