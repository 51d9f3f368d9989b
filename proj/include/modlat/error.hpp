#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace modlat {

/// Exact integer used for every chain count and h-vector entry.
using Integer = mpz_class;

/// Default element bound for operations that enumerate chains.
inline constexpr std::size_t kDefaultChainBound = 64;

/// Default element bound for the pentagon sublattice search.
inline constexpr std::size_t kDefaultPentagonBound = 40;

enum class ErrorKind {
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  SizeLimit,
  NotALattice,
  NotIrreducible,
  IrreducibilityLost,
  EmptyPoset,
  AllZero,
  EmptyVector,
  TrailingZero,
  GenerationFailed,
  ParseError,
  SchemaError,
  InvalidArgument,
  ContractViolation,
  SearchExhausted,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modlat
