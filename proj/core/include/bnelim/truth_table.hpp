#pragma once

#include <cstdint>
#include <vector>

namespace bnelim {

/// Dense 2^arity bit vector; bit x is the function value at state integer x.
/// Bits past 2^arity in the last word are kept zero.
class TruthTable {
 public:
  explicit TruthTable(unsigned arity);

  static TruthTable constant(unsigned arity, bool value);
  /// Projection x ↦ x_k.
  static TruthTable variable(unsigned arity, unsigned k);

  unsigned arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool operator[](std::uint64_t x) const { return ((words_[x >> 6] >> (x & 63)) & 1U) != 0; }
  void set(std::uint64_t x, bool value);

  std::uint64_t count() const;
  bool is_constant() const;
  bool depends_on(unsigned k) const;

  TruthTable& operator&=(const TruthTable& other);
  TruthTable& operator|=(const TruthTable& other);
  TruthTable operator~() const;
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void clear_padding();

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

}  // namespace bnelim
