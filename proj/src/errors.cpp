#include "planar/errors.hpp"

namespace planar {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyCurve: return "EmptyCurve";
    case Errc::HoleOutOfRange: return "HoleOutOfRange";
    case Errc::NonLaminarWord: return "NonLaminarWord";
    case Errc::UntrackedCurve: return "UntrackedCurve";
    case Errc::DegeneratePresentation: return "DegeneratePresentation";
    case Errc::NoTrackingState: return "NoTrackingState";
    case Errc::UndefinedD3: return "UndefinedD3";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotNegativeDefinite: return "NotNegativeDefinite";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NotLegendrian: return "NotLegendrian";
    case Errc::ResourceExceeded: return "ResourceExceeded";
    case Errc::AsymmetricLinking: return "AsymmetricLinking";
    case Errc::UnreachableTarget: return "UnreachableTarget";
    }
    return "Unknown";
}

}  // namespace planar
