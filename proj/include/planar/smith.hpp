#pragma once

#include <gmpxx.h>

#include <vector>

#include "planar/matrix.hpp"

namespace planar {

/// Nonzero diagonal of the Smith normal form: d₁ | d₂ | … | d_r, all > 0,
/// where r is the rank of m.
std::vector<mpz_class> invariant_factors(const IntMatrix& m);

}  // namespace planar
