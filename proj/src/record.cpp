#include "planar/record.hpp"

#include <algorithm>
#include <string>

#include "planar/errors.hpp"

namespace planar {

ContactSurgeryRecord::ContactSurgeryRecord(std::vector<SurgeryComponent> components, IntMatrix linking)
    : components_(std::move(components)), linking_(std::move(linking)) {
    const std::size_t n = components_.size();
    if (linking_.rows() != n || linking_.cols() != n)
        throw Error(Errc::InvalidArgument, "linking matrix size does not match component count");
    for (const auto& c : components_)
        if (c.coeff != 1 && c.coeff != -1)
            throw Error(Errc::InvalidArgument, "contact surgery coefficient must be +1 or -1");
    for (std::size_t i = 0; i < n; ++i) {
        if (linking_(i, i) != 0)
            throw Error(Errc::AsymmetricLinking, "linking matrix must have zero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (linking_(i, j) != linking_(j, i))
                throw Error(Errc::AsymmetricLinking, "lk(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                         ") differs from lk(" + std::to_string(j + 1) + "," +
                                                         std::to_string(i + 1) + ")");
    }
}

IntMatrix ContactSurgeryRecord::topological_matrix() const {
    IntMatrix m = linking_;
    for (std::size_t i = 0; i < components_.size(); ++i)
        m(i, i) = components_[i].framing();
    return m;
}

ContactSurgeryRecord ContactSurgeryRecord::with_component(const SurgeryComponent& c,
                                                          const std::vector<Int>& links) const {
    const std::size_t n = size();
    if (links.size() != n)
        throw Error(Errc::InvalidArgument, "one linking number per existing component required");
    IntMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = linking_(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        m(n, j) = links[j];
        m(j, n) = links[j];
    }
    auto comps = components_;
    comps.push_back(c);
    return ContactSurgeryRecord(std::move(comps), std::move(m));
}

ContactSurgeryRecord split_union(const ContactSurgeryRecord& a, const ContactSurgeryRecord& b) {
    auto comps = a.components();
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    return ContactSurgeryRecord(std::move(comps), direct_sum(a.linking(), b.linking()));
}

const TrackedLegendrian* ContactState::find(const Curve& c) const {
    auto it = std::find_if(legendrians.begin(), legendrians.end(),
                           [&](const TrackedLegendrian& t) { return t.curve == c; });
    return it == legendrians.end() ? nullptr : &*it;
}

void ContactState::track(const Curve& c, Int tb, Int rot) {
    if (const auto* known = find(c)) {
        if (known->tb != tb || known->rot != rot)
            throw Error(Errc::InvalidArgument, "curve " + c.to_string() + " already tracked with different invariants");
        return;
    }
    legendrians.push_back({c, tb, rot});
}

}  // namespace planar
