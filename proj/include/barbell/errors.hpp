#pragma once

#include <stdexcept>
#include <string>

namespace barbell {

// Malformed input: unknown labels, group mismatches, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters outside the range where a theorem's hypotheses hold.
class HypothesisViolation : public std::domain_error {
 public:
  explicit HypothesisViolation(const std::string& what) : std::domain_error(what) {}
};

// A computation produced a shape the algebra does not support.
class ShapeError : public std::logic_error {
 public:
  explicit ShapeError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace barbell
