#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posslog {

// Search-space or instance-count bound exceeded. CLI maps this to exit code 3,
// distinct from "not entailed" and from input errors.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A formula mentions an atom outside the valuation's declared universe.
struct UnknownAtomError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Strict lookup on a graded map missed.
struct MissingEntryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation not defined for the knowledge base's backend.
struct UnsupportedModeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two knowledge bases with different backends were combined.
struct BackendMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// No rule of a nonempty remainder is tolerated; the default set is inconsistent.
struct InconsistentDefaultsError : std::runtime_error {
  explicit InconsistentDefaultsError(std::vector<std::string> stuck_rules);
  const std::vector<std::string>& stuck() const { return stuck_; }

 private:
  std::vector<std::string> stuck_;
};

}  // namespace posslog
