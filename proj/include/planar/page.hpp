#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "planar/matrix.hpp"

namespace planar {

/// A disk with `holes` numbered holes 1..h. The outer boundary is implicit,
/// so the page has h + 1 boundary components and H₁ of rank h.
class PlanarPage {
public:
    explicit PlanarPage(int holes);

    int holes() const noexcept { return holes_; }
    bool has_hole(int hole) const noexcept { return hole >= 1 && hole <= holes_; }

    friend bool operator==(const PlanarPage&, const PlanarPage&) = default;

private:
    int holes_;
};

/// Isotopy class of an essential simple closed curve on a planar page,
/// encoded by the nonempty set of holes it encloses (kept sorted).
class Curve {
public:
    /// Validates nonemptiness and positivity only; use make_curve to also
    /// check against a page.
    explicit Curve(std::vector<int> holes);
    Curve(std::initializer_list<int> holes) : Curve(std::vector<int>(holes)) {}

    const std::vector<int>& enclosed() const noexcept { return enclosed_; }
    std::size_t size() const noexcept { return enclosed_.size(); }
    bool encloses(int hole) const;
    int max_hole() const noexcept { return enclosed_.back(); }
    bool valid_on(const PlanarPage& page) const noexcept { return page.has_hole(max_hole()); }

    /// Curve enclosing this curve's holes and the given extra ones.
    Curve with(std::span<const int> extra) const;
    Curve with(int extra) const { return with(std::span<const int>(&extra, 1)); }
    /// Hole i becomes hole i + offset.
    Curve shifted(int offset) const;
    /// Hole i becomes hole perm[i - 1].
    Curve relabeled(const std::vector<int>& perm) const;

    std::string to_string() const;

    friend bool operator==(const Curve&, const Curve&) = default;
    friend auto operator<=>(const Curve&, const Curve&) = default;

private:
    std::vector<int> enclosed_;
};

PlanarPage make_page(int holes);
Curve make_curve(const PlanarPage& page, std::vector<int> holes);

/// Σ e_i over enclosed holes, in the basis of hole-encircling classes.
std::vector<Int> curve_class(const PlanarPage& page, const Curve& c);

/// True iff the two classes have disjoint representatives: the enclosed
/// sets are nested or disjoint.
bool laminar_pair(const Curve& a, const Curve& b);

}  // namespace planar
