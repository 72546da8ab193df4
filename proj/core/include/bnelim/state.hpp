#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace bnelim {

/// An assignment of n Boolean values. Component k lives in bit k of the
/// integer encoding (little-endian); the display form writes component 0
/// leftmost, so State::parse("011") has component 0 off and components 1, 2 on.
class State {
 public:
  static constexpr unsigned kMaxWidth = 63;

  State(unsigned width, std::uint64_t bits);

  static State zeros(unsigned width) { return State(width, 0); }
  static State ones(unsigned width);
  static State parse(std::string_view display);

  unsigned width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](unsigned k) const { return ((bits_ >> k) & 1U) != 0; }

  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  unsigned width_;
  std::uint64_t bits_;
};

/// x̄^I: complement exactly the components in `components`.
State flip(const State& x, std::span<const unsigned> components);
State flip(const State& x, std::initializer_list<unsigned> components);
State flip(const State& x, unsigned component);

/// x^{i=a}.
State with_value(const State& x, unsigned component, bool value);

/// Drops component v; components above v move down one index.
State project(const State& x, unsigned v);

/// Inverse of project on the fiber: inserts `value` at index v.
State embed(const State& y, unsigned v, bool value);

namespace bits {

inline bool get(std::uint64_t x, unsigned k) { return ((x >> k) & 1U) != 0; }

inline std::uint64_t set(std::uint64_t x, unsigned k, bool value) {
  return value ? (x | (std::uint64_t{1} << k)) : (x & ~(std::uint64_t{1} << k));
}

inline std::uint64_t remove(std::uint64_t x, unsigned v) {
  const std::uint64_t low = x & ((std::uint64_t{1} << v) - 1);
  return low | ((x >> (v + 1)) << v);
}

inline std::uint64_t insert(std::uint64_t y, unsigned v, bool value) {
  const std::uint64_t low = y & ((std::uint64_t{1} << v) - 1);
  return low | (std::uint64_t{value} << v) | ((y >> v) << (v + 1));
}

std::string display(std::uint64_t x, unsigned width);

}  // namespace bits

}  // namespace bnelim
