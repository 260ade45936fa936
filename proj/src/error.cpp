#include "swimlab/error.hpp"

namespace swimlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidFrequency: return "InvalidFrequency";
    case Errc::EmptyScene: return "EmptyScene";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotSettled: return "NotSettled";
    case Errc::AliasingRisk: return "AliasingRisk";
    case Errc::DegeneratePath: return "DegeneratePath";
    case Errc::InvalidExtent: return "InvalidExtent";
    case Errc::ReferenceMismatch: return "ReferenceMismatch";
    case Errc::EmptyFrame: return "EmptyFrame";
    case Errc::PathKindMismatch: return "PathKindMismatch";
    case Errc::NoOscillation: return "NoOscillation";
    case Errc::InsufficientFringes: return "InsufficientFringes";
    case Errc::MissingField: return "MissingField";
    case Errc::UnknownField: return "UnknownField";
    case Errc::InvalidValue: return "InvalidValue";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace swimlab
