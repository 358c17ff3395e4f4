#pragma once

#include <optional>
#include <vector>

#include "planar/page.hpp"
#include "planar/record.hpp"

namespace planar {

/// Dehn twist about a page curve: sign +1 is right-handed, -1 left-handed.
struct TwistLetter {
    Curve curve;
    int sign;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Planar open book: page plus monodromy word (letters applied left to
/// right). Optionally carries contact surgery data for books built from
/// the disk book of S³, and the d₂ tracker used by Lutz twists.
class OpenBook {
public:
    explicit OpenBook(PlanarPage page, std::vector<TwistLetter> word = {});

    const PlanarPage& page() const noexcept { return page_; }
    int holes() const noexcept { return page_.holes(); }
    const std::vector<TwistLetter>& word() const noexcept { return word_; }
    const std::optional<ContactState>& contact() const noexcept { return contact_; }
    const std::optional<LutzTracking>& tracking() const noexcept { return tracking_; }

    OpenBook with_letter(TwistLetter letter) const;
    OpenBook with_extra_holes(int count) const;
    OpenBook with_contact(std::optional<ContactState> state) const;
    OpenBook with_tracking(std::optional<LutzTracking> state) const;

    friend bool operator==(const OpenBook&, const OpenBook&) = default;

private:
    PlanarPage page_;
    std::vector<TwistLetter> word_;
    std::optional<ContactState> contact_;
    std::optional<LutzTracking> tracking_;
};

/// Identity monodromy on an h-holed disk, presenting #_h(S¹×S²).
OpenBook identity_open_book(int holes);

/// The disk open book of S³ carrying the empty surgery record, i.e. the
/// standard tight contact structure.
OpenBook standard_s3_open_book();

OpenBook append_twist(const OpenBook& ob, const Curve& c, int sign);

struct Stabilization {
    OpenBook book;
    int new_hole;
};

/// Adds hole ν = h + 1 and appends D⁺ about the curve enclosing through ∪ {ν}.
/// When the book carries contact data and `through` is empty, the new
/// Hopf-band core {ν} is tracked as the Legendrian unknot (tb −1, rot 0).
Stabilization positive_stabilization(const OpenBook& ob, const std::vector<int>& through);

/// Same page change with a left-handed twist. Changes the supported contact
/// structure, so contact data and d₂ tracking are dropped.
Stabilization negative_stabilization(const OpenBook& ob, const std::vector<int>& through);

struct StabilizedCurve {
    OpenBook book;
    Curve stabilized;
};

/// One positive stabilization of the book, producing L ∪ {ν} on the page;
/// as a Legendrian this is S₊(L) for sign +1 and S₋(L) for sign −1.
StabilizedCurve stabilize_legendrian_once(const OpenBook& ob, const Curve& legendrian, int sign);

struct StabilizedPair {
    OpenBook book;
    Curve splus;
    Curve sminus;
};

/// Two positive stabilizations making S₊(L) and S₋(L) page curves. The
/// first new hole gives S₊(L), the second S₋(L).
StabilizedPair stabilize_for_legendrian(const OpenBook& ob, const Curve& legendrian);

/// Boundary-connected Murasugi sum: b's holes are shifted past a's and its
/// word follows a's. Supports the contact connected sum.
OpenBook murasugi_sum(const OpenBook& a, const OpenBook& b);

/// Renames hole i to perm[i - 1]; perm must be a permutation of 1..h.
OpenBook relabel_holes(const OpenBook& ob, const std::vector<int>& perm);

}  // namespace planar
