#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivevp {

enum class Errc {
  InvalidEndpoints,
  UndefinedOperation,
  EmptyFamily,
  InfiniteTerm,
  NotMonotone,
  Unbounded,
  EndpointOrderViolation,
  OutOfDomain,
  EmptyGrid,
  NonConvergent,
  ImproperFunction,
  HypothesisViolated,
  EmptyArgmin,
  SyntaxError,
  UnknownIdentifier,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidEndpoints: return "InvalidEndpoints";
    case Errc::UndefinedOperation: return "UndefinedOperation";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::InfiniteTerm: return "InfiniteTerm";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::Unbounded: return "Unbounded";
    case Errc::EndpointOrderViolation: return "EndpointOrderViolation";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::ImproperFunction: return "ImproperFunction";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::EmptyArgmin: return "EmptyArgmin";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code lets
/// callers (and the CLI report writer) dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : Error(Errc::SyntaxError, what + " at offset " + std::to_string(position)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace ivevp
