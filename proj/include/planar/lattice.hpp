#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planar/exact.hpp"
#include "planar/matrix.hpp"
#include "planar/record.hpp"

namespace planar {

/// Intersection form q_X on H₂(X; ℤ) of a filling X, with the boundary data
/// the planarity obstruction needs.
class IntersectionForm {
public:
    /// Throws NotSymmetric; InvalidArgument if boundary_components < 1.
    explicit IntersectionForm(IntMatrix matrix, int boundary_components = 1,
                              bool boundary_is_homology_sphere = false);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    std::size_t rank() const noexcept { return matrix_.rows(); }
    int boundary_components() const noexcept { return boundary_components_; }
    bool boundary_is_homology_sphere() const noexcept { return boundary_is_homology_sphere_; }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

private:
    IntMatrix matrix_;
    int boundary_components_;
    bool boundary_is_homology_sphere_;
};

/// (b₂⁺, b₂⁻, b₂⁰) packed as positive / negative / zero.
Inertia inertia(const IntersectionForm& f);

struct EnumerationLimits {
    std::size_t max_rank = 16;
    std::uint64_t node_budget = 5'000'000;
};

/// Limits with node_budget taken from PLANAROB_ENUM_BUDGET when set.
EnumerationLimits limits_from_environment();

/// All v ≠ 0 with vᵀ(−Q)v = 1 for negative definite Q, one of each ±v
/// pair, by exact Fincke–Pohst backtracking over the rational LDLᵀ
/// decomposition of −Q. Throws ResourceExceeded past the limits.
std::vector<std::vector<Int>> unit_norm_vectors(const IntMatrix& q, const EnumerationLimits& limits = {});

/// Whether f is congruent over ℤ to diag(−1, …, −1). The norm −1 vectors
/// of a definite unimodular lattice span its ⟨−1⟩ⁿ summand, so f is
/// diagonalizable iff they generate the whole lattice.
/// Throws NotNegativeDefinite, NotUnimodular or ResourceExceeded.
bool is_diagonalizable(const IntersectionForm& f, const EnumerationLimits& limits = {});

/// Trace of Legendrian surgery: diagonal tb − 1, off-diagonal linking,
/// connected boundary; the boundary is flagged a homology sphere exactly
/// when the form is unimodular. Throws NotLegendrian on a +1 coefficient.
IntersectionForm legendrian_filling_form(const ContactSurgeryRecord& r);

enum class VerdictStatus { Obstructed, Unobstructed };

inline constexpr const char* kReasonPositive = "positive part";
inline constexpr const char* kReasonDegenerate = "degenerate part";
inline constexpr const char* kReasonDisconnected = "disconnected boundary";
inline constexpr const char* kReasonNonDiagonalizable = "non-diagonalizable";

/// Obstructed means the filling certifies that the filled contact
/// structure has no planar supporting open book. Unobstructed proves
/// nothing.
struct PlanarVerdict {
    VerdictStatus status = VerdictStatus::Unobstructed;
    std::vector<std::string> reasons;

    friend bool operator==(const PlanarVerdict&, const PlanarVerdict&) = default;
};

PlanarVerdict planar_support_verdict(const IntersectionForm& f, const EnumerationLimits& limits = {});

std::string to_string(VerdictStatus s);

}  // namespace planar
