#pragma once

#include <optional>
#include <vector>

#include "barbell/deckgroup.hpp"
#include "barbell/groupring.hpp"

namespace barbell::linalg {

using Vector = std::vector<Integer>;
using Matrix = std::vector<Vector>;  // row major

/// Solves A x = b over F2 (entries read mod 2) or over Z. Returns nullopt when
/// no solution exists in the coefficient ring.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, Coefficients coeffs);

/// Rank over F2, or over Q for integer matrices.
std::size_t rank(const Matrix& a, std::size_t cols, Coefficients coeffs);

}  // namespace barbell::linalg
