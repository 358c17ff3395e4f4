#include "planar/invariants.hpp"

#include "planar/errors.hpp"
#include "planar/smith.hpp"

namespace planar {

std::string AbelianGroup::to_string() const {
    std::string s;
    for (const auto& d : torsion)
        s += (s.empty() ? "" : " + ") + ("Z/" + d.get_str());
    if (free_rank > 0)
        s += (s.empty() ? "" : " + ") + (free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank));
    return s.empty() ? "0" : s;
}

AbelianGroup first_homology(const IntMatrix& relations) {
    AbelianGroup g;
    const auto factors = invariant_factors(relations);
    g.free_rank = relations.cols() - factors.size();
    for (const auto& d : factors)
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

AbelianGroup first_homology(const LinkingPresentation& p) { return first_homology(p.matrix); }

AbelianGroup first_homology(const OpenBook& ob) { return first_homology(to_linking_presentation(ob)); }

Rational d3_invariant(const ContactSurgeryRecord& r) {
    const std::size_t n = r.size();
    const IntMatrix l = r.topological_matrix();

    RationalMatrix rot(n, std::vector<Rational>(1));
    std::size_t plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
        rot[i][0] = static_cast<long>(r.components()[i].rot);
        if (r.components()[i].coeff == 1)
            ++plus;
    }

    const auto x = solve(l, rot);
    if (!x)
        throw Error(Errc::DegeneratePresentation, "topological linking matrix is singular");

    Rational c1_squared = 0;
    for (std::size_t i = 0; i < n; ++i)
        c1_squared += (*x)[i][0] * rot[i][0];
    const long sigma = symmetric_inertia(l).signature();
    const long euler = 1 + static_cast<long>(n);

    Rational d3 = (c1_squared - 3 * sigma - 2 * euler) / 4 + static_cast<long>(plus);
    d3.canonicalize();
    return d3;
}

std::optional<Rational> d3_of(const OpenBook& ob) {
    if (!ob.contact())
        return std::nullopt;
    return d3_invariant(ob.contact()->record);
}

std::vector<Int> d2_difference(const OpenBook& ob) {
    if (!ob.tracking())
        throw Error(Errc::NoTrackingState, "open book carries no Lutz tracking state");
    return ob.tracking()->d2;
}

bool same_homotopy_class(const HomotopyData& a, const HomotopyData& b) {
    if (!a.d3 || !b.d3)
        throw Error(Errc::UndefinedD3, "d3 undefined for at least one plane field");
    return a.d2_class == b.d2_class && *a.d3 == *b.d3;
}

}  // namespace planar
