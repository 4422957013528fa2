#include "pgph/error.hpp"

#include <cstdlib>
#include <mutex>
#include <optional>

namespace pgph {

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("PGPH_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
      throw DataError(std::string("PGPH_BUDGET must be a positive integer, got '") + env + "'");
    b.fp_entries = static_cast<std::size_t>(value);
    b.integral_entries = static_cast<std::size_t>(value / 20 == 0 ? 1 : value / 20);
  }
  return b;
}

namespace {

std::mutex budget_mutex;
std::optional<Budget> current;

}  // namespace

Budget budget() {
  std::lock_guard lock(budget_mutex);
  if (!current) current = Budget::from_environment();
  return *current;
}

void set_budget(const Budget& b) {
  std::lock_guard lock(budget_mutex);
  current = b;
}

}  // namespace pgph
