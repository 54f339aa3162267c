"""Exact verification of determinant identities for cyclotomic matrices over GF(q)."""

from .fieldcore import (
    Field,
    FieldElem,
    FieldError,
    enumerate_nonzero,
    field_inv,
    field_pow,
    field_sqrt,
    irreducible_check,
    legendre_symbol,
    make_extension_field,
    make_field,
    make_prime_field,
    power_sum,
    primitive_element,
    quadratic_character,
)
from .matlin import ExactMatrix, char_poly, circulant, determinant, rank, vandermonde_pair_product
from .trinomial import TrinomialRow, central_trinomial, trinomial_coeff, trinomial_row

__version__ = "0.1.0"
