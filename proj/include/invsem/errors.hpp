// errors.hpp -- exception taxonomy shared by all modules
#ifndef INVSEM_ERRORS_HPP_
#define INVSEM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace invsem {

// Malformed or out-of-contract input: bad tables, size mismatches,
// violated operation preconditions. CLI exit code 1.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit before a verdict was reached.
// CLI exit code 3; harnesses report "inconclusive".
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A property that is a theorem for the structures at hand failed on a
// concrete instance. Carries a witness description. CLI exit code 2.
struct TheoryViolation : std::runtime_error {
  explicit TheoryViolation(const std::string& what) : std::runtime_error(what) {}
};

// Internal inconsistency (a bug, not a user error).
struct InvariantFailure : std::logic_error {
  explicit InvariantFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace invsem

#endif  // INVSEM_ERRORS_HPP_
