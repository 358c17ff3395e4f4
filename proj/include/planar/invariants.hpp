#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "planar/exact.hpp"
#include "planar/openbook.hpp"
#include "planar/presentation.hpp"
#include "planar/record.hpp"

namespace planar {

/// Finitely generated abelian group ℤ^rank ⊕ ⊕ ℤ/dᵢ with d₁ | d₂ | …, dᵢ > 1.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of the presentation matrix.
AbelianGroup first_homology(const LinkingPresentation& p);
AbelianGroup first_homology(const IntMatrix& relations);
AbelianGroup first_homology(const OpenBook& ob);

/// d₃ = ¼(c₁² − 3σ − 2χ) + q for the manifold obtained by contact (±1)
/// surgery on the recorded link in (S³, ξ_std):
///   χ  = 1 + #components,
///   σ  = signature of the topological linking matrix L,
///   c₁² = rotᵀ L⁻¹ rot,
///   q  = #components with coefficient +1.
/// Throws DegeneratePresentation when det L = 0.
Rational d3_invariant(const ContactSurgeryRecord& r);

/// d₃ of the book's record, or nullopt when it carries none.
std::optional<Rational> d3_of(const OpenBook& ob);

/// Accumulated Lutz-twist classes over the tracker's base holes.
std::vector<Int> d2_difference(const OpenBook& ob);

struct HomotopyData {
    std::vector<Int> d2_class;
    std::optional<Rational> d3;

    friend bool operator==(const HomotopyData&, const HomotopyData&) = default;
};

/// Plane fields are homotopic iff d₂ and d₃ agree. Throws UndefinedD3
/// unless both d₃ values are present.
bool same_homotopy_class(const HomotopyData& a, const HomotopyData& b);

}  // namespace planar
