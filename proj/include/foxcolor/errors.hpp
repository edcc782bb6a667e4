#pragma once

#include <stdexcept>
#include <string>

namespace foxcolor {

// Malformed or inconsistent input: bad PD text, unknown catalog name,
// out-of-range modulus, an inapplicable move site.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured size limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace foxcolor
