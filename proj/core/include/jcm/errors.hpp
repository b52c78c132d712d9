#ifndef JCM_ERRORS_HPP
#define JCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jcm {

/// Invalid physical parameters or malformed operation arguments.
class SpecError : public std::invalid_argument {
public:
  explicit SpecError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numeric failure during evaluation (distinct exit code in the CLI).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Photon-number truncation could not satisfy the requested tolerance.
class TruncationError : public NumericError {
public:
  explicit TruncationError(const std::string& msg) : NumericError(msg) {}
};

/// A probability vector or density block violated positivity beyond tolerance.
class InvalidDistribution : public NumericError {
public:
  explicit InvalidDistribution(const std::string& msg) : NumericError(msg) {}
};

/// An entropy inequality that must hold was violated; indicates an upstream bug.
class BoundViolation : public NumericError {
public:
  explicit BoundViolation(const std::string& msg) : NumericError(msg) {}
};

} // namespace jcm

#endif
