#include "bnelim/truth_table.hpp"

#include <bit>

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

// Word patterns of x_k for k < 6 within a 64-bit block.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(unsigned arity) { return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6)); }

}  // namespace

TruthTable::TruthTable(unsigned arity) : arity_(arity), words_(word_count(arity), 0) {
  if (arity > 32) {
    throw InvalidArgument("truth table arity too large: " + std::to_string(arity));
  }
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    for (auto& w : t.words_) {
      w = ~std::uint64_t{0};
    }
    t.clear_padding();
  }
  return t;
}

TruthTable TruthTable::variable(unsigned arity, unsigned k) {
  if (k >= arity) {
    throw InvalidArgument("variable " + std::to_string(k) + " out of range for arity " +
                          std::to_string(arity));
  }
  TruthTable t(arity);
  if (k < 6) {
    for (auto& w : t.words_) {
      w = kLowPatterns[k];
    }
  } else {
    const std::size_t block = std::size_t{1} << (k - 6);
    for (std::size_t i = 0; i < t.words_.size(); ++i) {
      t.words_[i] = ((i / block) & 1U) != 0 ? ~std::uint64_t{0} : 0;
    }
  }
  t.clear_padding();
  return t;
}

void TruthTable::set(std::uint64_t x, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= bit;
  } else {
    words_[x >> 6] &= ~bit;
  }
}

std::uint64_t TruthTable::count() const {
  std::uint64_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

bool TruthTable::is_constant() const {
  const std::uint64_t ones = count();
  return ones == 0 || ones == size();
}

bool TruthTable::depends_on(unsigned k) const {
  if (k >= arity_) {
    return false;
  }
  if (k < 6) {
    const unsigned shift = 1U << k;
    for (auto w : words_) {
      if (((w >> shift) ^ w) & ~kLowPatterns[k]) {
        return true;
      }
    }
    return false;
  }
  const std::size_t block = std::size_t{1} << (k - 6);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((i / block) % 2 == 0 && words_[i] != words_[i + block]) {
      return true;
    }
  }
  return false;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  if (other.arity_ != arity_) {
    throw InvalidArgument("truth table arity mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
  if (other.arity_ != arity_) {
    throw InvalidArgument("truth table arity mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable t(*this);
  for (auto& w : t.words_) {
    w = ~w;
  }
  t.clear_padding();
  return t;
}

void TruthTable::clear_padding() {
  if (arity_ < 6) {
    words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << arity_)) - 1;
  }
}

}  // namespace bnelim
