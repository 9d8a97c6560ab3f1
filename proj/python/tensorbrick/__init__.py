from tensorbrick._core import (
    Algebra,
    Error,
    FieldMismatch,
    Incomplete,
    NotAdmissible,
    ParseError,
    PreconditionError,
    certify,
    explore,
    is_symmetric,
    kronecker,
    linear_path,
    nakayama,
    poset_isomorphic,
    run_cli,
    tensor,
    truncated_polynomial,
)

__all__ = [
    "Algebra",
    "Error",
    "FieldMismatch",
    "Incomplete",
    "NotAdmissible",
    "ParseError",
    "PreconditionError",
    "certify",
    "explore",
    "is_symmetric",
    "kronecker",
    "linear_path",
    "nakayama",
    "poset_isomorphic",
    "run_cli",
    "tensor",
    "truncated_polynomial",
]
