#include "ordgrp/error.hpp"

namespace ordgrp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::IndexOutOfBand: return "IndexOutOfBand";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::StepCapExceeded: return "StepCapExceeded";
    case ErrorCode::BadStrandCount: return "BadStrandCount";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::DegreeCeilingExceeded: return "DegreeCeilingExceeded";
    case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::IdentityWord: return "IdentityWord";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasibleConstraints: return "InfeasibleConstraints";
    case ErrorCode::ZeroConstraint: return "ZeroConstraint";
    case ErrorCode::IsolatedOrder: return "IsolatedOrder";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ProbeCapExceeded: return "ProbeCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentSeed: return "InconsistentSeed";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

bool is_resource_bound(ErrorCode code) {
  switch (code) {
    case ErrorCode::StepCapExceeded:
    case ErrorCode::DegreeCeilingExceeded:
    case ErrorCode::CoefficientOverflow:
    case ErrorCode::ProbeCapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace ordgrp
