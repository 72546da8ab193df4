#include "bnelim/state.hpp"

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

std::uint64_t width_mask(unsigned width) { return (std::uint64_t{1} << width) - 1; }

void check_index(const State& x, unsigned k) {
  if (k >= x.width()) {
    throw InvalidArgument("component index " + std::to_string(k) + " out of range for width " +
                          std::to_string(x.width()));
  }
}

}  // namespace

State::State(unsigned width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width == 0 || width > kMaxWidth) {
    throw InvalidArgument("state width must be in [1, 63], got " + std::to_string(width));
  }
  if ((bits & ~width_mask(width)) != 0) {
    throw InvalidArgument("state bits exceed width " + std::to_string(width));
  }
}

State State::ones(unsigned width) { return State(width, width_mask(width)); }

State State::parse(std::string_view display) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < display.size(); ++k) {
    const char c = display[k];
    if (c != '0' && c != '1') {
      throw InvalidArgument("state string must contain only 0 and 1: '" + std::string(display) + "'");
    }
    if (c == '1') {
      bits |= std::uint64_t{1} << k;
    }
  }
  return State(static_cast<unsigned>(display.size()), bits);
}

std::string State::to_string() const { return bits::display(bits_, width_); }

State flip(const State& x, std::span<const unsigned> components) {
  std::uint64_t bits = x.bits();
  for (unsigned k : components) {
    check_index(x, k);
    bits ^= std::uint64_t{1} << k;
  }
  return State(x.width(), bits);
}

State flip(const State& x, std::initializer_list<unsigned> components) {
  return flip(x, std::span<const unsigned>(components.begin(), components.size()));
}

State flip(const State& x, unsigned component) {
  check_index(x, component);
  return State(x.width(), x.bits() ^ (std::uint64_t{1} << component));
}

State with_value(const State& x, unsigned component, bool value) {
  check_index(x, component);
  return State(x.width(), bits::set(x.bits(), component, value));
}

State project(const State& x, unsigned v) {
  check_index(x, v);
  if (x.width() == 1) {
    throw InvalidArgument("cannot project a width-1 state");
  }
  return State(x.width() - 1, bits::remove(x.bits(), v));
}

State embed(const State& y, unsigned v, bool value) {
  if (v > y.width()) {
    throw InvalidArgument("insert position " + std::to_string(v) + " out of range");
  }
  return State(y.width() + 1, bits::insert(y.bits(), v, value));
}

namespace bits {

std::string display(std::uint64_t x, unsigned width) {
  std::string out(width, '0');
  for (unsigned k = 0; k < width; ++k) {
    if (get(x, k)) {
      out[k] = '1';
    }
  }
  return out;
}

}  // namespace bits

}  // namespace bnelim
