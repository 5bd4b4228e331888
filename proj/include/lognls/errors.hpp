#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lognls {

/// Invalid user-supplied configuration (bad grid, bad parameters, bad config file).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The sampling box cannot hold a gausson without truncating its tail.
struct BoxTooSmallError : DomainError {
  using DomainError::DomainError;
};

struct NumericalBlowupError : std::runtime_error {
  NumericalBlowupError(std::size_t step_index, const std::string& what)
      : std::runtime_error(what), step(step_index) {}
  std::size_t step;
};

/// The implicit solver's fixed-point loop did not reach its tolerance.
struct IterationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lognls
