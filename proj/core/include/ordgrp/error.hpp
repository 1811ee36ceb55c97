#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordgrp {

enum class ErrorCode {
  MalformedWord,
  IndexOutOfBand,
  StrandMismatch,
  StepCapExceeded,
  BadStrandCount,
  CapTooSmall,
  DegreeCeilingExceeded,
  CoefficientOverflow,
  IdentityWord,
  DimensionMismatch,
  InfeasibleConstraints,
  ZeroConstraint,
  IsolatedOrder,
  NotMonotone,
  BadEndpoints,
  OutOfDomain,
  ProbeCapExceeded,
  ParseError,
  InconsistentSeed,
  MalformedCertificate,
};

std::string_view to_string(ErrorCode code);

/// True for codes that mean a search or reduction hit its configured bound
/// rather than rejecting the input.
bool is_resource_bound(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordgrp
