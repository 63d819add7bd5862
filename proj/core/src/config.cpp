#include "intrel/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "intrel/errors.hpp"

namespace intrel {
namespace {

int initial_limit() {
  const char* raw = std::getenv(kEnumLimitEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultEnumLimit;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > 8) return kDefaultEnumLimit;
  return static_cast<int>(value);
}

std::atomic<int>& limit_slot() {
  static std::atomic<int> slot{initial_limit()};
  return slot;
}

}  // namespace

int enumeration_limit() { return limit_slot().load(std::memory_order_relaxed); }

void set_enumeration_limit(int n) {
  if (n < 0 || n > 8) throw InputError("enumeration limit must lie in 0..8");
  limit_slot().store(n, std::memory_order_relaxed);
}

void require_enumerable(int n, const char* what) {
  if (n > enumeration_limit()) {
    throw LimitError(std::string(what) + ": size " + std::to_string(n) +
                     " exceeds the enumeration limit " + std::to_string(enumeration_limit()) +
                     " (raise it with " + kEnumLimitEnv + ")");
  }
}

}  // namespace intrel
