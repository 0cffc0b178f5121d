#include "centersvar/error.hpp"

namespace centersvar {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::CenterHit: return "CenterHit";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::InadmissibleCenter: return "InadmissibleCenter";
        case ErrorCode::DegenerateCurve: return "DegenerateCurve";
        case ErrorCode::NoRationalImage: return "NoRationalImage";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

}  // namespace centersvar
