"""Character polynomials over finite fields: norms, limit formulas, minimizers."""

from littlewood._core import build, field_info, limit_ratio4, minimize, norms

__all__ = ["build", "field_info", "limit_ratio4", "minimize", "norms"]
