#ifndef HFG_BITVEC_HPP
#define HFG_BITVEC_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hfg {

/// A vector over GF(2), stored as its length plus a sorted list of the
/// coordinates that are 1. Addition is symmetric difference of supports.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : length_(length) {}
  BitVec(std::size_t length, std::initializer_list<uint32_t> support);
  BitVec(std::size_t length, std::vector<uint32_t> support);

  static BitVec unit(std::size_t length, uint32_t index);
  static BitVec from_bits(const std::vector<uint8_t> &bits);

  std::size_t length() const { return length_; }
  const std::vector<uint32_t> &support() const { return support_; }
  std::size_t weight() const { return support_.size(); }
  bool is_zero() const { return support_.empty(); }
  bool get(uint32_t index) const;
  void set(uint32_t index, bool value);
  void flip(uint32_t index);

  BitVec operator+(const BitVec &other) const;
  BitVec &operator+=(const BitVec &other);
  bool operator==(const BitVec &other) const = default;
  /// Ordering by (weight, support lexicographic); used for deterministic
  /// tie-breaking in coset searches.
  bool weight_lex_less(const BitVec &other) const;

  /// Parity of |supp(a) ∩ supp(b)|.
  bool dot(const BitVec &other) const;
  /// Elementwise product (support intersection).
  BitVec elementwise_and(const BitVec &other) const;
  /// Restriction: keeps coordinates listed in `coords`, reindexed by their
  /// position in `coords`.
  BitVec restrict_to(const std::vector<uint32_t> &coords) const;
  /// Embedding into a longer vector with coordinate i mapped to map[i].
  BitVec embed(std::size_t new_length, const std::vector<uint32_t> &map) const;

  std::vector<uint8_t> to_bits() const;
  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<uint32_t> support_;
  void normalize();
};

}  // namespace hfg

#endif
