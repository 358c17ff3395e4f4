#include "planar/presentation.hpp"

#include <algorithm>
#include <string>

#include "planar/errors.hpp"
#include "planar/exact.hpp"

namespace planar {

namespace {

IntMatrix presentation_matrix(int holes, const std::vector<TwistLetter>& letters) {
    const auto h = static_cast<std::size_t>(holes);
    IntMatrix m(h + letters.size(), h + letters.size());
    for (std::size_t k = 0; k < letters.size(); ++k) {
        const std::size_t row = h + k;
        m(row, row) = -letters[k].sign;
        for (int hole : letters[k].curve.enclosed()) {
            m(row, static_cast<std::size_t>(hole - 1)) = 1;
            m(static_cast<std::size_t>(hole - 1), row) = 1;
        }
    }
    return m;
}

void require_laminar(const std::vector<TwistLetter>& word) {
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (!laminar_pair(word[i].curve, word[j].curve))
                throw Error(Errc::NonLaminarWord, "letters " + word[i].curve.to_string() + " and " +
                                                      word[j].curve.to_string() + " interleave");
}

}  // namespace

bool laminar_word(const std::vector<TwistLetter>& word) {
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (!laminar_pair(word[i].curve, word[j].curve))
                return false;
    return true;
}

LinkingPresentation to_linking_presentation(const OpenBook& ob) {
    require_laminar(ob.word());
    return {presentation_matrix(ob.holes(), ob.word()), ob.holes()};
}

IntMatrix page_curve_linking(const OpenBook& ob, const std::vector<Curve>& curves,
                             const std::vector<std::size_t>& surgery_letters) {
    std::vector<TwistLetter> ambient;
    for (std::size_t k = 0; k < ob.word().size(); ++k)
        if (std::find(surgery_letters.begin(), surgery_letters.end(), k) == surgery_letters.end())
            ambient.push_back(ob.word()[k]);
    {
        std::vector<TwistLetter> all = ambient;
        for (const auto& c : curves) {
            if (!c.valid_on(ob.page()))
                throw Error(Errc::HoleOutOfRange, "curve " + c.to_string() + " not on page");
            all.push_back({c, 1});
        }
        require_laminar(all);
    }

    const IntMatrix a = presentation_matrix(ob.holes(), ambient);
    const std::size_t n = a.rows();
    // Column j: how curve j meets the presentation (it links the unknots of
    // the holes it encloses; page push-offs of letters are unlinked from it).
    RationalMatrix rhs(n, std::vector<Rational>(curves.size(), 0));
    for (std::size_t j = 0; j < curves.size(); ++j)
        for (int hole : curves[j].enclosed())
            rhs[static_cast<std::size_t>(hole - 1)][j] = 1;

    const auto x = solve(a, rhs);
    if (!x)
        throw Error(Errc::DegeneratePresentation, "ambient open book does not present a rational homology sphere");

    IntMatrix lk(curves.size(), curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = 0; j < curves.size(); ++j) {
            Rational s = 0;
            for (std::size_t r = 0; r < n; ++r)
                if (rhs[r][i] != 0)
                    s += (*x)[r][j];
            if (s.get_den() != 1)
                throw Error(Errc::DegeneratePresentation, "ambient open book is not an integral homology sphere");
            lk(i, j) = -s.get_num().get_si();
        }
    return lk;
}

SurgeryComponent stabilize_legendrian_record(const SurgeryComponent& comp, int sign) {
    if (sign != 1 && sign != -1)
        throw Error(Errc::InvalidArgument, "stabilization sign must be +1 or -1");
    return {comp.tb - 1, comp.rot + sign, comp.coeff};
}

OpenBook contact_surgery_on_page_curve(const OpenBook& ob, const Curve& c, int coeff) {
    if (coeff != 1 && coeff != -1)
        throw Error(Errc::InvalidArgument, "contact surgery coefficient must be +1 or -1");
    OpenBook next = ob.with_letter({c, -coeff});
    if (!ob.contact())
        return next;

    const ContactState& state = *ob.contact();
    const TrackedLegendrian* legendrian = state.find(c);
    if (!legendrian)
        throw Error(Errc::UntrackedCurve, "no Legendrian invariants known for " + c.to_string());

    std::vector<Curve> curves;
    for (std::size_t idx : state.surgery_letters)
        curves.push_back(ob.word()[idx].curve);
    curves.push_back(c);
    const IntMatrix lk = page_curve_linking(ob, curves, state.surgery_letters);

    std::vector<Int> links(state.record.size());
    for (std::size_t j = 0; j < links.size(); ++j)
        links[j] = lk(curves.size() - 1, j);

    ContactState updated = state;
    updated.record = state.record.with_component({legendrian->tb, legendrian->rot, coeff}, links);
    updated.surgery_letters.push_back(ob.word().size());
    return next.with_contact(std::move(updated));
}

OpenBook start_lutz_tracking(const OpenBook& ob) {
    if (ob.tracking())
        return ob;
    LutzTracking tracking;
    for (int h = 1; h <= ob.holes(); ++h)
        tracking.base_holes.push_back(h);
    tracking.d2.assign(tracking.base_holes.size(), 0);
    return ob.with_tracking(std::move(tracking));
}

LutzResult lutz_twist_detailed(const OpenBook& ob, const Curve& legendrian, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw Error(Errc::InvalidArgument, "Lutz twist orientation must be +1 or -1");
    if (!legendrian.valid_on(ob.page()))
        throw Error(Errc::HoleOutOfRange, "curve " + legendrian.to_string() + " not on page");

    LutzTracking tracking = *start_lutz_tracking(ob).tracking();
    for (std::size_t k = 0; k < tracking.base_holes.size(); ++k)
        if (legendrian.encloses(tracking.base_holes[k]))
            tracking.d2[k] += orientation;

    const StabilizedPair first = stabilize_for_legendrian(ob, legendrian);
    const Curve once = orientation > 0 ? first.splus : first.sminus;
    const StabilizedPair second = stabilize_for_legendrian(first.book, once);
    Curve copy = orientation > 0 ? second.splus : second.sminus;

    OpenBook book = contact_surgery_on_page_curve(second.book, legendrian, +1);
    book = contact_surgery_on_page_curve(book, copy, +1);
    return {book.with_tracking(std::move(tracking)), std::move(copy)};
}

OpenBook lutz_twist(const OpenBook& ob, const Curve& legendrian, int orientation) {
    return lutz_twist_detailed(ob, legendrian, orientation).book;
}

ContactSurgeryRecord derive_record(const OpenBook& ob) {
    if (!ob.contact())
        throw Error(Errc::InvalidArgument, "open book carries no contact data");
    const ContactState& state = *ob.contact();
    std::vector<Curve> curves;
    for (std::size_t idx : state.surgery_letters)
        curves.push_back(ob.word()[idx].curve);
    const IntMatrix lk = page_curve_linking(ob, curves, state.surgery_letters);

    std::vector<SurgeryComponent> comps;
    IntMatrix linking(curves.size(), curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const TrackedLegendrian* t = state.find(curves[i]);
        if (!t)
            throw Error(Errc::UntrackedCurve, "no Legendrian invariants known for " + curves[i].to_string());
        comps.push_back({lk(i, i), t->rot, -ob.word()[state.surgery_letters[i]].sign});
        for (std::size_t j = 0; j < curves.size(); ++j)
            if (i != j)
                linking(i, j) = lk(i, j);
    }
    return ContactSurgeryRecord(std::move(comps), std::move(linking));
}

}  // namespace planar
