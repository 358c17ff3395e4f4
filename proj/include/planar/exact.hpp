#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "planar/matrix.hpp"

namespace planar {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

/// Solves a·X = rhs exactly. Returns nullopt when a is singular.
std::optional<RationalMatrix> solve(const IntMatrix& a, const RationalMatrix& rhs);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric integer matrix by rational congruence
/// diagonalization. Zero pivots are cleared by adding a row/column that
/// meets them off the diagonal (the hyperbolic-plane split).
Inertia symmetric_inertia(const IntMatrix& m);

/// "p/q" with q > 0 and gcd(p, q) = 1; integers print as "p/1".
std::string to_fraction_string(const Rational& r);

/// Inverse of to_fraction_string; also accepts a bare integer. Returns
/// nullopt on malformed text.
std::optional<Rational> parse_fraction(const std::string& text);

}  // namespace planar
