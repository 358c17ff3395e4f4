#include "planar/page.hpp"

#include <algorithm>
#include <iterator>

#include "planar/errors.hpp"

namespace planar {

PlanarPage::PlanarPage(int holes) : holes_(holes) {
    if (holes < 0)
        throw Error(Errc::InvalidArgument, "page must have a nonnegative number of holes");
}

Curve::Curve(std::vector<int> holes) : enclosed_(std::move(holes)) {
    if (enclosed_.empty())
        throw Error(Errc::EmptyCurve, "a curve must enclose at least one hole");
    std::sort(enclosed_.begin(), enclosed_.end());
    enclosed_.erase(std::unique(enclosed_.begin(), enclosed_.end()), enclosed_.end());
    if (enclosed_.front() < 1)
        throw Error(Errc::HoleOutOfRange, "hole indices start at 1, got " + std::to_string(enclosed_.front()));
}

bool Curve::encloses(int hole) const {
    return std::binary_search(enclosed_.begin(), enclosed_.end(), hole);
}

Curve Curve::with(std::span<const int> extra) const {
    std::vector<int> holes = enclosed_;
    holes.insert(holes.end(), extra.begin(), extra.end());
    return Curve(std::move(holes));
}

Curve Curve::shifted(int offset) const {
    std::vector<int> holes = enclosed_;
    for (int& h : holes)
        h += offset;
    return Curve(std::move(holes));
}

Curve Curve::relabeled(const std::vector<int>& perm) const {
    std::vector<int> holes;
    holes.reserve(enclosed_.size());
    for (int h : enclosed_) {
        if (h > static_cast<int>(perm.size()))
            throw Error(Errc::HoleOutOfRange, "relabeling does not cover hole " + std::to_string(h));
        holes.push_back(perm[h - 1]);
    }
    return Curve(std::move(holes));
}

std::string Curve::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < enclosed_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(enclosed_[i]);
    }
    return s + "}";
}

PlanarPage make_page(int holes) { return PlanarPage(holes); }

Curve make_curve(const PlanarPage& page, std::vector<int> holes) {
    Curve c(std::move(holes));
    if (!c.valid_on(page))
        throw Error(Errc::HoleOutOfRange, "hole " + std::to_string(c.max_hole()) + " not on a page with " +
                                              std::to_string(page.holes()) + " holes");
    return c;
}

std::vector<Int> curve_class(const PlanarPage& page, const Curve& c) {
    if (!c.valid_on(page))
        throw Error(Errc::HoleOutOfRange, "curve " + c.to_string() + " not on page");
    std::vector<Int> v(static_cast<std::size_t>(page.holes()), 0);
    for (int h : c.enclosed())
        v[static_cast<std::size_t>(h - 1)] = 1;
    return v;
}

bool laminar_pair(const Curve& a, const Curve& b) {
    const auto& x = a.enclosed();
    const auto& y = b.enclosed();
    std::vector<int> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.empty() || common.size() == x.size() || common.size() == y.size();
}

}  // namespace planar
