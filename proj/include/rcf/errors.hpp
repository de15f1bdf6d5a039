#ifndef RCF_ERRORS_HPP
#define RCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcf {

// A certified bound was requested outside the region where it is justified
// (e.g. the monotone-sandwich bounds below alpha = 1/6).
class certification_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative solver failed to meet its tolerance; carries the last iterate's value.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last)
      : std::runtime_error(what), last_estimate(last) {}
  double last_estimate;
};

// Fixed-point iteration drifted to the Heaviside solution instead of the cdf of interest.
class degenerate_attractor_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested problem size exceeds the configured memory/time budget.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcf

#endif
