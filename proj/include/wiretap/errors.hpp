#ifndef WIRETAP_ERRORS_HPP
#define WIRETAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wiretap {

// Bad argument shapes or out-of-range values.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A precondition of the callee was violated by the caller.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Quantity is undefined for the given parameters (e.g. level structure at beta1 >= 1).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Request exceeds an enforced search cap.
struct capacity_error : std::length_error {
  using std::length_error::length_error;
};

// The alignment scheme has no construction for this instance.
struct construction_unavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace wiretap

#endif
