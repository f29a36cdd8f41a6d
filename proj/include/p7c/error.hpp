#ifndef P7C_ERROR_HPP
#define P7C_ERROR_HPP

#include <stdexcept>
#include <string>

namespace p7c {

/// Raised when caller-supplied data is malformed (bad vertex ids, unparsable
/// files, graphs above the supported size).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation is invoked outside its documented precondition.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the brute-force oracles when asked to enumerate above their bound.
class OracleBoundExceeded : public std::runtime_error {
 public:
  explicit OracleBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace p7c

#endif  // P7C_ERROR_HPP
