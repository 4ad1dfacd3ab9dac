#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anth/int.hpp"

namespace anth {

/// Precondition on a value failed (negative isqrt input, perfect-square
/// radicand, misordered magnitudes, mismatched contexts).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index or count outside what an expansion can supply.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A periodic-expansion search ran out of steps before detecting a period.
/// Carries the quotients computed so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::vector<Int> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const std::vector<Int>& partial_quotients() const noexcept { return partial_; }

 private:
  std::vector<Int> partial_;
};

}  // namespace anth
