#include "planar/openbook.hpp"

#include <algorithm>
#include <string>

#include "planar/errors.hpp"
#include "planar/presentation.hpp"

namespace planar {

namespace {

void check_letter(const PlanarPage& page, const TwistLetter& letter) {
    if (letter.sign != 1 && letter.sign != -1)
        throw Error(Errc::InvalidArgument, "twist sign must be +1 or -1");
    if (!letter.curve.valid_on(page))
        throw Error(Errc::HoleOutOfRange, "curve " + letter.curve.to_string() + " not on a page with " +
                                              std::to_string(page.holes()) + " holes");
}

void check_through(const OpenBook& ob, const std::vector<int>& through) {
    for (int h : through)
        if (!ob.page().has_hole(h))
            throw Error(Errc::HoleOutOfRange, "stabilization arc crosses nonexistent hole " + std::to_string(h));
}

Stabilization stabilize(const OpenBook& ob, const std::vector<int>& through, int sign) {
    check_through(ob, through);
    const int nu = ob.holes() + 1;
    std::vector<int> enclosed = through;
    enclosed.push_back(nu);
    OpenBook next = ob.with_extra_holes(1).with_letter({Curve(std::move(enclosed)), sign});
    return {std::move(next), nu};
}

}  // namespace

OpenBook::OpenBook(PlanarPage page, std::vector<TwistLetter> word) : page_(page), word_(std::move(word)) {
    for (const auto& letter : word_)
        check_letter(page_, letter);
}

OpenBook OpenBook::with_letter(TwistLetter letter) const {
    check_letter(page_, letter);
    OpenBook next = *this;
    next.word_.push_back(std::move(letter));
    return next;
}

OpenBook OpenBook::with_extra_holes(int count) const {
    OpenBook next = *this;
    next.page_ = PlanarPage(page_.holes() + count);
    return next;
}

OpenBook OpenBook::with_contact(std::optional<ContactState> state) const {
    OpenBook next = *this;
    next.contact_ = std::move(state);
    return next;
}

OpenBook OpenBook::with_tracking(std::optional<LutzTracking> state) const {
    OpenBook next = *this;
    next.tracking_ = std::move(state);
    return next;
}

OpenBook identity_open_book(int holes) { return OpenBook(make_page(holes)); }

OpenBook standard_s3_open_book() { return OpenBook(make_page(0)).with_contact(ContactState{}); }

OpenBook append_twist(const OpenBook& ob, const Curve& c, int sign) { return ob.with_letter({c, sign}); }

Stabilization positive_stabilization(const OpenBook& ob, const std::vector<int>& through) {
    Stabilization s = stabilize(ob, through, +1);
    if (through.empty() && s.book.contact()) {
        ContactState state = *s.book.contact();
        state.track(Curve{s.new_hole}, -1, 0);
        s.book = s.book.with_contact(std::move(state));
    }
    return s;
}

Stabilization negative_stabilization(const OpenBook& ob, const std::vector<int>& through) {
    Stabilization s = stabilize(ob, through, -1);
    s.book = s.book.with_contact(std::nullopt).with_tracking(std::nullopt);
    return s;
}

StabilizedCurve stabilize_legendrian_once(const OpenBook& ob, const Curve& legendrian, int sign) {
    if (sign != 1 && sign != -1)
        throw Error(Errc::InvalidArgument, "stabilization sign must be +1 or -1");
    if (!legendrian.valid_on(ob.page()))
        throw Error(Errc::HoleOutOfRange, "curve " + legendrian.to_string() + " not on page");
    Stabilization s = positive_stabilization(ob, {});
    Curve stabilized = legendrian.with(s.new_hole);
    if (s.book.contact()) {
        if (const auto* known = s.book.contact()->find(legendrian)) {
            const SurgeryComponent next = stabilize_legendrian_record({known->tb, known->rot, -1}, sign);
            ContactState state = *s.book.contact();
            state.track(stabilized, next.tb, next.rot);
            s.book = s.book.with_contact(std::move(state));
        }
    }
    return {std::move(s.book), std::move(stabilized)};
}

StabilizedPair stabilize_for_legendrian(const OpenBook& ob, const Curve& legendrian) {
    StabilizedCurve plus = stabilize_legendrian_once(ob, legendrian, +1);
    StabilizedCurve minus = stabilize_legendrian_once(plus.book, legendrian, -1);
    return {std::move(minus.book), std::move(plus.stabilized), std::move(minus.stabilized)};
}

OpenBook murasugi_sum(const OpenBook& a, const OpenBook& b) {
    const int offset = a.holes();
    std::vector<TwistLetter> word = a.word();
    for (const auto& letter : b.word())
        word.push_back({letter.curve.shifted(offset), letter.sign});
    OpenBook sum(make_page(a.holes() + b.holes()), std::move(word));

    if (a.contact() && b.contact()) {
        ContactState state = *a.contact();
        const ContactState& other = *b.contact();
        state.record = split_union(state.record, other.record);
        for (std::size_t idx : other.surgery_letters)
            state.surgery_letters.push_back(idx + a.word().size());
        for (const auto& t : other.legendrians)
            state.legendrians.push_back({t.curve.shifted(offset), t.tb, t.rot});
        sum = sum.with_contact(std::move(state));
    }

    if (a.tracking() || b.tracking()) {
        LutzTracking tracking = a.tracking().value_or(LutzTracking{});
        if (b.tracking()) {
            for (int h : b.tracking()->base_holes)
                tracking.base_holes.push_back(h + offset);
            tracking.d2.insert(tracking.d2.end(), b.tracking()->d2.begin(), b.tracking()->d2.end());
        }
        sum = sum.with_tracking(std::move(tracking));
    }
    return sum;
}

OpenBook relabel_holes(const OpenBook& ob, const std::vector<int>& perm) {
    const int h = ob.holes();
    if (static_cast<int>(perm.size()) != h)
        throw Error(Errc::InvalidArgument, "relabeling must list every hole exactly once");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < h; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw Error(Errc::InvalidArgument, "relabeling is not a permutation of the holes");

    std::vector<TwistLetter> word;
    word.reserve(ob.word().size());
    for (const auto& letter : ob.word())
        word.push_back({letter.curve.relabeled(perm), letter.sign});
    OpenBook out(ob.page(), std::move(word));

    if (ob.contact()) {
        ContactState state = *ob.contact();
        for (auto& t : state.legendrians)
            t.curve = t.curve.relabeled(perm);
        out = out.with_contact(std::move(state));
    }
    if (ob.tracking()) {
        LutzTracking tracking = *ob.tracking();
        for (int& hole : tracking.base_holes)
            hole = perm[static_cast<std::size_t>(hole - 1)];
        out = out.with_tracking(std::move(tracking));
    }
    return out;
}

}  // namespace planar
