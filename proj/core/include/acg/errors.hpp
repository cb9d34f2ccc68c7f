#pragma once

#include <stdexcept>
#include <string>

namespace acg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point outside the non-periodic bounds of a chart.
struct DomainError : Error { using Error::Error; };

// Mismatched charts / malformed chart data.
struct ChartError : Error { using Error::Error; };

// A backing cannot provide what was asked (e.g. exact derivatives).
struct CapabilityError : Error { using Error::Error; };

// An operation precondition stated by the contract failed (e.g. a
// non-minimal connection passed where a minimal one is required).
struct ContractError : Error { using Error::Error; };

struct ParseError : Error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct ConfigError : Error { using Error::Error; };

}  // namespace acg
