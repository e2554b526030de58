#pragma once

#include <stdexcept>
#include <string>

namespace trispace {

// Quadrature or optimizer gave up before reaching the requested accuracy.
// Carries the best estimate obtained so far.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double partial_estimate)
      : std::runtime_error(what), partial_(partial_estimate) {}

  double partial_estimate() const noexcept { return partial_; }

 private:
  double partial_;
};

// A coordinate assignment violates the gluing constraints of its
// triangulation (the two face-side values of an interior edge disagree).
class constraint_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A chart point develops to a polygon that is not strictly convex, so it
// has no preimage in the space of convex shapes.
class not_convex_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace trispace
