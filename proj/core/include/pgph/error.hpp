#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgph {

/// Malformed input data: group files, catalogs, inconsistent matrices.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int degree_reached)
      : std::runtime_error(what), degree_reached_(degree_reached) {}

  /// Last degree that was completed before the budget was hit (-1 if none).
  int degree_reached() const noexcept { return degree_reached_; }

 private:
  int degree_reached_;
};

/// An internal invariant failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Size limits shared by the whole library.
///
/// Defaults can be overridden process-wide through the PGPH_BUDGET
/// environment variable (a single integer scaling the F_p entry budget;
/// the integral budget keeps its 1:20 ratio).
struct Budget {
  std::size_t max_group_order = 512;
  std::size_t fp_entries = 200'000'000;
  std::size_t integral_entries = 10'000'000;

  static Budget from_environment();
};

/// Snapshot of the process-wide budget.
Budget budget();
void set_budget(const Budget& b);

}  // namespace pgph
