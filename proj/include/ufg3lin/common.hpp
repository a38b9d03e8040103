// Shared error type and numeric tolerances.

#pragma once

#include <stdexcept>
#include <string>

namespace ufg3lin {

// Global tolerance for complex-arithmetic equality checks.
inline constexpr double kTol = 1e-9;
// Tolerance for rounding character inner products to integer multiplicities.
inline constexpr double kMultTol = 1e-6;
// Cap on the number of points enumerated in a Fourier domain.
inline constexpr long kDomainCap = 10'000'000;
// Cap on the number of assignments tried by the brute-force solver.
inline constexpr long kBruteForceCap = 10'000'000;

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  LengthMismatch,
  DomainTooLarge,
  MissingIrrep,
  DomainMismatch,
  CatalogIncomplete,
  MissingEntry,
  ParameterOutOfRange,
  IndexOutOfRange,
  InvalidDictator,
  UsageError,
  BadFile,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::MissingIrrep: return "MissingIrrep";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidDictator: return "InvalidDictator";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::BadFile: return "BadFile";
  }
  return "Unknown";
}

}  // namespace ufg3lin
