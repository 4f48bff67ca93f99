#include "hfg/bitvec.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hfg {

BitVec::BitVec(std::size_t length, std::initializer_list<uint32_t> support)
    : length_(length), support_(support) {
  normalize();
}

BitVec::BitVec(std::size_t length, std::vector<uint32_t> support)
    : length_(length), support_(std::move(support)) {
  normalize();
}

void BitVec::normalize() {
  std::sort(support_.begin(), support_.end());
  // A repeated index means the entry was added twice, i.e. cancels mod 2.
  std::vector<uint32_t> out;
  out.reserve(support_.size());
  for (std::size_t i = 0; i < support_.size();) {
    std::size_t j = i;
    while (j < support_.size() && support_[j] == support_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(support_[i]);
    i = j;
  }
  support_ = std::move(out);
  if (!support_.empty() && support_.back() >= length_) {
    throw std::out_of_range("BitVec support index exceeds length");
  }
}

BitVec BitVec::unit(std::size_t length, uint32_t index) {
  return BitVec(length, {index});
}

BitVec BitVec::from_bits(const std::vector<uint8_t> &bits) {
  BitVec v(bits.size());
  for (uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) v.support_.push_back(i);
  }
  return v;
}

bool BitVec::get(uint32_t index) const {
  return std::binary_search(support_.begin(), support_.end(), index);
}

void BitVec::set(uint32_t index, bool value) {
  if (get(index) != value) flip(index);
}

void BitVec::flip(uint32_t index) {
  if (index >= length_) throw std::out_of_range("BitVec::flip index");
  auto it = std::lower_bound(support_.begin(), support_.end(), index);
  if (it != support_.end() && *it == index) {
    support_.erase(it);
  } else {
    support_.insert(it, index);
  }
}

BitVec BitVec::operator+(const BitVec &other) const {
  BitVec out = *this;
  out += other;
  return out;
}

BitVec &BitVec::operator+=(const BitVec &other) {
  if (length_ != other.length_) throw std::invalid_argument("BitVec length mismatch");
  std::vector<uint32_t> merged;
  merged.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(),
                                other.support_.begin(), other.support_.end(),
                                std::back_inserter(merged));
  support_ = std::move(merged);
  return *this;
}

bool BitVec::weight_lex_less(const BitVec &other) const {
  if (weight() != other.weight()) return weight() < other.weight();
  return support_ < other.support_;
}

bool BitVec::dot(const BitVec &other) const {
  std::size_t overlap = 0;
  auto a = support_.begin();
  auto b = other.support_.begin();
  while (a != support_.end() && b != other.support_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++overlap;
      ++a;
      ++b;
    }
  }
  return overlap % 2 == 1;
}

BitVec BitVec::elementwise_and(const BitVec &other) const {
  if (length_ != other.length_) throw std::invalid_argument("BitVec length mismatch");
  BitVec out(length_);
  std::set_intersection(support_.begin(), support_.end(), other.support_.begin(),
                        other.support_.end(), std::back_inserter(out.support_));
  return out;
}

BitVec BitVec::restrict_to(const std::vector<uint32_t> &coords) const {
  BitVec out(coords.size());
  for (uint32_t i = 0; i < coords.size(); ++i) {
    if (get(coords[i])) out.support_.push_back(i);
  }
  return out;
}

BitVec BitVec::embed(std::size_t new_length, const std::vector<uint32_t> &map) const {
  assert(map.size() == length_);
  std::vector<uint32_t> mapped;
  mapped.reserve(support_.size());
  for (uint32_t i : support_) mapped.push_back(map[i]);
  return BitVec(new_length, std::move(mapped));
}

std::vector<uint8_t> BitVec::to_bits() const {
  std::vector<uint8_t> bits(length_, 0);
  for (uint32_t i : support_) bits[i] = 1;
  return bits;
}

std::string BitVec::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(support_[i]);
  }
  s += "}";
  return s;
}

}  // namespace hfg
