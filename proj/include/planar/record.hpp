#pragma once

#include <cstddef>
#include <vector>

#include "planar/matrix.hpp"
#include "planar/page.hpp"

namespace planar {

/// One Legendrian knot of a contact (±1)-surgery diagram in (S³, ξ_std).
struct SurgeryComponent {
    Int tb = 0;
    Int rot = 0;
    int coeff = -1;

    /// Topological surgery coefficient relative to the Seifert framing.
    Int framing() const { return tb + coeff; }

    friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

/// Components plus their pairwise topological linking numbers.
class ContactSurgeryRecord {
public:
    ContactSurgeryRecord() = default;
    /// Throws AsymmetricLinking for a non-symmetric matrix or nonzero
    /// diagonal, InvalidArgument for size mismatch or a coefficient ∉ {±1}.
    ContactSurgeryRecord(std::vector<SurgeryComponent> components, IntMatrix linking);

    const std::vector<SurgeryComponent>& components() const noexcept { return components_; }
    const IntMatrix& linking() const noexcept { return linking_; }
    std::size_t size() const noexcept { return components_.size(); }
    bool empty() const noexcept { return components_.empty(); }

    /// Linking matrix with the topological framings tb + coeff on the diagonal.
    IntMatrix topological_matrix() const;

    /// Appends a component; `links[j]` is its linking number with component j.
    ContactSurgeryRecord with_component(const SurgeryComponent& c, const std::vector<Int>& links) const;

    friend bool operator==(const ContactSurgeryRecord&, const ContactSurgeryRecord&) = default;

private:
    std::vector<SurgeryComponent> components_;
    IntMatrix linking_;
};

/// Disjoint (split) union: the diagram of the contact connected sum.
ContactSurgeryRecord split_union(const ContactSurgeryRecord& a, const ContactSurgeryRecord& b);

/// A page curve with known Legendrian invariants in (S³, ξ_std).
struct TrackedLegendrian {
    Curve curve;
    Int tb;
    Int rot;

    friend bool operator==(const TrackedLegendrian&, const TrackedLegendrian&) = default;
};

/// Contact data carried by an open book built from the disk book of S³.
/// `surgery_letters` maps record components to word positions; `legendrians`
/// lists page curves with known Legendrian invariants.
struct ContactState {
    ContactSurgeryRecord record;
    std::vector<std::size_t> surgery_letters;
    std::vector<TrackedLegendrian> legendrians;

    const TrackedLegendrian* find(const Curve& c) const;
    /// Registers c; re-registering with different invariants is an error.
    void track(const Curve& c, Int tb, Int rot);

    friend bool operator==(const ContactState&, const ContactState&) = default;
};

/// Accumulated d₂ difference over a fixed basis of base-book holes.
struct LutzTracking {
    std::vector<int> base_holes;
    std::vector<Int> d2;

    friend bool operator==(const LutzTracking&, const LutzTracking&) = default;
};

}  // namespace planar
