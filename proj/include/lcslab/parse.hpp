#pragma once

#include "lcslab/kform.hpp"
#include "lcslab/lie_algebra.hpp"

#include <optional>
#include <string>

namespace lcslab {

/// Salamon structure string: "(" slot ("," slot)* ")" where slot k lists
/// d e^k as a signed sum of two-digit index pairs with optional integer
/// coefficients, or "0". Indices >= 10 may be written "[i,j]". Structure
/// constants come out as c^k_{ij} = -(coefficient of e^{ij} in d e^k);
/// the result is Jacobi-validated. Throws SyntaxError (with position),
/// IndexOutOfRange, JacobiViolation.
LieAlgebra parse_salamon(const std::string& text, const std::string& name = "");

/// Canonical Salamon string; nullopt when some d e^k coefficient is not an
/// integer (the grammar only carries integer coefficients).
std::optional<std::string> print_salamon(const LieAlgebra& g);

/// Form literal: signed sums of integer-coefficient monomials "e..." with
/// one digit per index, e.g. "e12 - 2*e34", "-e01 - e24 - e35", or "0".
/// Digits are display indices: display_offset 0 reads "e0" as the first
/// basis vector. Degree must be uniform and equal to `degree`.
KForm parse_form(const std::string& text, int n, int degree, int display_offset = 1);

/// JSON algebra schema:
///   {"dim": n, "basis_offset": 0|1, "brackets":
///     [{"x": i, "y": j, "out": {"k": "p/q", ...}}, ...], "name": "..."}
/// Indices follow the declared basis_offset (default 1).
LieAlgebra algebra_from_json_text(const std::string& text);

std::string algebra_to_json_text(const LieAlgebra& g);

} // namespace lcslab
