#include "planar/realize.hpp"

#include <cstdlib>
#include <string>

#include "planar/errors.hpp"
#include "planar/presentation.hpp"

namespace planar {

OpenBook block_half() {
    const Stabilization hopf = positive_stabilization(standard_s3_open_book(), {});
    const StabilizedCurve s = stabilize_legendrian_once(hopf.book, Curve{hopf.new_hole}, +1);
    return contact_surgery_on_page_curve(s.book, s.stabilized, +1);
}

OpenBook block_neg_three_half() {
    const Stabilization hopf = positive_stabilization(standard_s3_open_book(), {});
    const StabilizedCurve plus = stabilize_legendrian_once(hopf.book, Curve{hopf.new_hole}, +1);
    const StabilizedCurve minus1 = stabilize_legendrian_once(plus.book, plus.stabilized, -1);
    const StabilizedCurve minus2 = stabilize_legendrian_once(minus1.book, minus1.stabilized, -1);
    const OpenBook book = contact_surgery_on_page_curve(minus2.book, plus.stabilized, +1);
    return contact_surgery_on_page_curve(book, minus2.stabilized, -1);
}

D3Steps steps_for_s3_d3(const Rational& target) {
    // The standard S³ has d₃ = −½.
    return steps_for_d3(target, Rational(-1, 2));
}

D3Steps steps_for_d3(const Rational& target, const Rational& base_d3) {
    // Each block contributes d₃(block) + ½: +1 for block_half, −1 for the
    // other, so the net count is target − base_d3.
    Rational net = target - base_d3;
    net.canonicalize();
    if (net.get_den() != 1 || !net.get_num().fits_slong_p())
        throw Error(Errc::UnreachableTarget,
                    "d3 target differs from the base by a non-integer: " + to_fraction_string(net));
    const long n = net.get_num().get_si();
    if (n > 0)
        return {static_cast<int>(n), 0};
    if (n < 0)
        return {0, static_cast<int>(-n)};
    return {1, 1};
}

OpenBook realize_overtwisted(const OpenBook& base, const std::vector<Int>& d2_delta, D3Steps steps) {
    if (static_cast<int>(d2_delta.size()) != base.holes())
        throw Error(Errc::InvalidArgument, "d2 vector needs one entry per hole of the base (" +
                                               std::to_string(base.holes()) + ")");
    if (steps.half < 0 || steps.neg_three_half < 0)
        throw Error(Errc::InvalidArgument, "block counts must be nonnegative");

    OpenBook book = base;
    if (!book.contact() && book.holes() == 0 && book.word().empty())
        book = standard_s3_open_book();
    book = start_lutz_tracking(book);

    for (int i = 1; i <= base.holes(); ++i) {
        const Int k = d2_delta[static_cast<std::size_t>(i - 1)];
        const int orientation = k > 0 ? 1 : -1;
        Curve legendrian{i};
        for (Int rep = 0; rep < std::abs(k); ++rep) {
            // Later twists use the previous stabilized copy, which is
            // homologous to {i} and nests with everything already on the page.
            LutzResult r = lutz_twist_detailed(book, legendrian, orientation);
            book = std::move(r.book);
            legendrian = std::move(r.stabilized_copy);
        }
    }

    for (int k = 0; k < steps.half; ++k)
        book = murasugi_sum(book, block_half());
    for (int k = 0; k < steps.neg_three_half; ++k)
        book = murasugi_sum(book, block_neg_three_half());
    return book;
}

}  // namespace planar
