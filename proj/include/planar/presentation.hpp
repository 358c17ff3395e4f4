#pragma once

#include <cstddef>
#include <vector>

#include "planar/matrix.hpp"
#include "planar/openbook.hpp"
#include "planar/record.hpp"

namespace planar {

/// Integer surgery presentation of an open book's 3-manifold over S³.
/// Rows 0..h-1 are 0-framed unknots, one per hole; row h + k is the page
/// push-off of word letter k, framed −sign, linking the hole unknots it
/// encloses once and every other letter zero times.
struct LinkingPresentation {
    IntMatrix matrix;
    int holes = 0;

    friend bool operator==(const LinkingPresentation&, const LinkingPresentation&) = default;
};

/// True iff every pair of letters is laminar.
bool laminar_word(const std::vector<TwistLetter>& word);

/// Throws NonLaminarWord if two letters interleave.
LinkingPresentation to_linking_presentation(const OpenBook& ob);

/// Linking data of page curves in the manifold presented by the holes and
/// all letters not listed in `surgery_letters`. Entry (i, j) is
/// lk(cᵢ, cⱼ) for i ≠ j and the page framing of cᵢ (its tb when the
/// curve is Legendrian on a page of a book for (S³, ξ_std)) on the
/// diagonal. Throws DegeneratePresentation unless that manifold is an
/// integral homology sphere.
IntMatrix page_curve_linking(const OpenBook& ob, const std::vector<Curve>& curves,
                             const std::vector<std::size_t>& surgery_letters);

/// Legendrian stabilization bookkeeping: tb − 1, rot ± 1.
SurgeryComponent stabilize_legendrian_record(const SurgeryComponent& comp, int sign);

/// ±1 contact surgery on a page curve: appends the twist D∓ (coefficient
/// −1 appends a right-handed twist). If the book carries contact data, the
/// curve must be a tracked Legendrian and a record component is appended.
OpenBook contact_surgery_on_page_curve(const OpenBook& ob, const Curve& c, int coeff);

/// Starts d₂ tracking over the book's current holes (no-op if present).
OpenBook start_lutz_tracking(const OpenBook& ob);

struct LutzResult {
    OpenBook book;
    /// The doubly stabilized parallel copy S₊²(L) or S₋²(L).
    Curve stabilized_copy;
};

/// Lutz twist along the transverse push-off of L, realized as +1 contact
/// surgery on L and on its doubly stabilized copy after four positive
/// stabilizations of the book. Adds orientation · [L] to the d₂ tracker,
/// creating the tracker (over the current holes) if absent.
LutzResult lutz_twist_detailed(const OpenBook& ob, const Curve& legendrian, int orientation);
OpenBook lutz_twist(const OpenBook& ob, const Curve& legendrian, int orientation);

/// Recomputes the surgery record of a contact-carrying book from the page
/// model alone (tb and linking via page_curve_linking, rot from the
/// tracked curves). Agrees with the stored record for pipeline outputs.
ContactSurgeryRecord derive_record(const OpenBook& ob);

}  // namespace planar
