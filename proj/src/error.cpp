#include "tangent/error.hpp"

namespace tangent {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidCharacter: return "InvalidCharacter";
    case Errc::LengthOutOfRange: return "LengthOutOfRange";
    case Errc::NotDesubstitutable: return "NotDesubstitutable";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::NoInnerRun: return "NoInnerRun";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ChainViolation: return "ChainViolation";
    case Errc::DomainError: return "DomainError";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NoInteriorPoint: return "NoInteriorPoint";
    case Errc::CornerHit: return "CornerHit";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::TooManyCornerHits: return "TooManyCornerHits";
  }
  return "Unknown";
}

}  // namespace tangent
