#pragma once

#include <stdexcept>
#include <string>

namespace latkern {

/// Violated precondition on caller-supplied data (shape, rank, causality).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate check failed after a construction. Indicates a bug or an
/// input that slipped past precondition checks.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace latkern
