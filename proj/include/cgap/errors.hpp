#pragma once

#include <stdexcept>
#include <string>

namespace cgap {

/// Input geometry has no interior (fewer than three hull vertices or zero area).
class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

/// Abscissa outside the projection of a polygon.
class OutOfRange : public std::out_of_range {
 public:
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// Scalar argument outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A geometric fact that must hold for every convex polygon did not.
/// Seeing this means a bug in the geometry code, not bad input.
class InternalInvariantViolation : public std::logic_error {
 public:
  explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// A check that needs omega > 0 was asked to run on a frame with omega == 0.
class SkippedDegenerate : public std::runtime_error {
 public:
  explicit SkippedDegenerate(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed polygon file or command-line value.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cgap
