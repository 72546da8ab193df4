#include "bnelim/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

std::optional<unsigned> read_env(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw InvalidArgument(std::string("invalid value for ") + name + ": '" + raw + "'");
  }
  return value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  if (auto cap = read_env("BNELIM_STATE_CAP")) {
    limits.max_stg_components = *cap;
    limits.max_table_components = std::max(limits.max_table_components, *cap);
  }
  if (auto cap = read_env("BNELIM_CYCLE_CAP")) {
    limits.max_cycle_vertices = *cap;
  }
  return limits;
}

void require_within(const char* what_for, unsigned components, unsigned cap) {
  if (components > cap) {
    throw CapExceeded(what_for, components, cap);
  }
}

}  // namespace bnelim
