#include "dsr/error.hpp"

namespace dsr {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::RoleMissing: return "RoleMissing";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotAdmitted: return "NotAdmitted";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBody: return "TruncatedBody";
    case ErrorCode::NotGraphic: return "NotGraphic";
    case ErrorCode::NotForcing: return "NotForcing";
    case ErrorCode::CompletionContradiction: return "CompletionContradiction";
  }
  return "Unknown";
}

}  // namespace dsr
