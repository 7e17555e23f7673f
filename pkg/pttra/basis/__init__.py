from pttra.basis.expansion import (
    ExpansionCoefficients,
    ExpansionMode,
    is_integer,
    monomial_expansion,
    monomial_projection,
)
from pttra.basis.laguerre import (
    LaguerreParams,
    laguerre_derivative_identity,
    laguerre_derivatives,
    laguerre_eval,
    laguerre_norm,
    laguerre_ode_residual,
    laguerre_table,
)
from pttra.basis.quadrature import QuadratureRule, gauss_laguerre_rule, integrate, triple_product

__all__ = [
    "ExpansionCoefficients",
    "ExpansionMode",
    "LaguerreParams",
    "QuadratureRule",
    "gauss_laguerre_rule",
    "integrate",
    "is_integer",
    "laguerre_derivative_identity",
    "laguerre_derivatives",
    "laguerre_eval",
    "laguerre_norm",
    "laguerre_ode_residual",
    "laguerre_table",
    "monomial_expansion",
    "monomial_projection",
    "triple_product",
]
