#pragma once

#include <optional>
#include <vector>

#include "planar/exact.hpp"
#include "planar/openbook.hpp"

namespace planar {

/// Planar book of the overtwisted structure on S³ with d₃ = ½: +1 contact
/// surgery on the once-stabilized Legendrian unknot. Word
/// [D⁺{1}, D⁺{2}, D⁻{1,2}].
OpenBook block_half();

/// Planar book of an overtwisted structure on S³ with d₃ = −3/2: +1 contact
/// surgery on S₊(U) (tb −2, rot 1) and −1 contact surgery on S₋²S₊(U)
/// (tb −4, rot −1), U the standard Legendrian unknot; lk = −2.
/// Word [D⁺{1}, D⁺{2}, D⁺{3}, D⁺{4}, D⁻{1,2}, D⁺{1,2,3,4}].
OpenBook block_neg_three_half();

/// Numbers of block_half and block_neg_three_half summands.
struct D3Steps {
    int half = 0;
    int neg_three_half = 0;

    friend bool operator==(const D3Steps&, const D3Steps&) = default;
};

/// Summands whose connected sum with the standard S³ has the given d₃
/// (which must lie in ℤ + ½). Always at least one block, so the result is
/// overtwisted; the count is minimal otherwise.
D3Steps steps_for_s3_d3(const Rational& target);

/// For a base realizing `base_d3`, the summands bringing the total to
/// `target` (d₃ of a connected sum adds, plus ½). Throws
/// UnreachableTarget if target − base_d3 − ½ is not in ℤ + ½.
D3Steps steps_for_d3(const Rational& target, const Rational& base_d3);

/// Planar open book supporting an overtwisted structure with prescribed
/// homotopy data: for each hole i of the base, |d2_delta[i]| Lutz twists
/// along successive Legendrian realizations of the hole curve {i}, oriented
/// by the sign of d2_delta[i]; then Murasugi sums with the S³ blocks.
/// A bare S³ disk book (no holes, empty word) is treated as (S³, ξ_std).
OpenBook realize_overtwisted(const OpenBook& base, const std::vector<Int>& d2_delta, D3Steps steps);

}  // namespace planar
