#include "hfg/phased_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfg {

PhasedCssOperator PhasedCssOperator::from_x(const BitVec &support) {
  PhasedCssOperator op(support.length());
  op.x_ = support;
  return op;
}

PhasedCssOperator PhasedCssOperator::from_z(const BitVec &support) {
  PhasedCssOperator op(support.length());
  for (uint32_t q : support.support()) op.linear_[q] = 2;
  return op;
}

PhasedCssOperator PhasedCssOperator::pauli_x(std::size_t n, uint32_t q) {
  return from_x(BitVec::unit(n, q));
}

PhasedCssOperator PhasedCssOperator::pauli_z(std::size_t n, uint32_t q) {
  return from_z(BitVec::unit(n, q));
}

PhasedCssOperator PhasedCssOperator::s_power(std::size_t n, uint32_t q, int power) {
  PhasedCssOperator op(n);
  op.linear_[q] = static_cast<uint8_t>(((power % 4) + 4) % 4);
  return op;
}

PhasedCssOperator PhasedCssOperator::cz(std::size_t n, uint32_t p, uint32_t q) {
  PhasedCssOperator op(n);
  op.toggle_quad(p, q);
  return op;
}

bool PhasedCssOperator::is_identity() const {
  return global_ == 0 && x_.is_zero() && quad_.empty() &&
         std::all_of(linear_.begin(), linear_.end(), [](uint8_t l) { return l == 0; });
}

bool PhasedCssOperator::is_pure_z() const {
  return global_ == 0 && x_.is_zero() && quad_.empty() &&
         std::all_of(linear_.begin(), linear_.end(), [](uint8_t l) { return l % 2 == 0; });
}

BitVec PhasedCssOperator::z_vector() const {
  BitVec z(n_);
  for (uint32_t q = 0; q < n_; ++q) {
    if (linear_[q] == 2) z.flip(q);
  }
  return z;
}

bool PhasedCssOperator::is_cz_type() const {
  return global_ == 0 && x_.is_zero() &&
         std::all_of(linear_.begin(), linear_.end(), [](uint8_t l) { return l == 0; });
}

void PhasedCssOperator::add_linear(uint32_t q, int amount) {
  linear_[q] = static_cast<uint8_t>(((linear_[q] + amount) % 4 + 4) % 4);
}

void PhasedCssOperator::toggle_quad(uint32_t p, uint32_t q) {
  if (p == q) throw std::invalid_argument("CZ pair needs distinct qubits");
  if (p > q) std::swap(p, q);
  auto pair = std::make_pair(p, q);
  auto it = std::lower_bound(quad_.begin(), quad_.end(), pair);
  if (it != quad_.end() && *it == pair) {
    quad_.erase(it);
  } else {
    quad_.insert(it, pair);
  }
}

bool PhasedCssOperator::quad_get(uint32_t p, uint32_t q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(quad_.begin(), quad_.end(), std::make_pair(p, q));
}

int PhasedCssOperator::linear_dot(const BitVec &a) const {
  int total = 0;
  for (uint32_t q : a.support()) total += linear_[q];
  return total % 4;
}

bool PhasedCssOperator::quad_form(const BitVec &a) const {
  int count = 0;
  for (const auto &[p, q] : quad_) {
    if (a.get(p) && a.get(q)) ++count;
  }
  return count % 2 == 1;
}

BitVec PhasedCssOperator::quad_times(const BitVec &a) const {
  BitVec out(n_);
  for (const auto &[p, q] : quad_) {
    if (a.get(q)) out.flip(p);
    if (a.get(p)) out.flip(q);
  }
  return out;
}

PhasedCssOperator PhasedCssOperator::operator*(const PhasedCssOperator &other) const {
  if (n_ != other.n_) throw std::invalid_argument("operator qubit count mismatch");
  PhasedCssOperator out(n_);
  const BitVec &a2 = other.x_;
  // Reorder D1 past X(a2): picks up a global phase and a Z-dressing.
  out.global_ = (global_ + other.global_ + 2 * linear_dot(a2) + (quad_form(a2) ? 4 : 0)) % 8;
  out.x_ = x_ + a2;
  BitVec mu = quad_times(a2);
  for (uint32_t q : a2.support()) {
    if (linear_[q] % 2 == 1) mu.flip(q);
  }
  for (uint32_t q = 0; q < n_; ++q) {
    int l = linear_[q] + other.linear_[q] + (mu.get(q) ? 2 : 0);
    out.linear_[q] = static_cast<uint8_t>(l % 4);
  }
  out.quad_ = quad_;
  for (const auto &[p, q] : other.quad_) out.toggle_quad(p, q);
  return out;
}

PhasedCssOperator PhasedCssOperator::dagger() const {
  PhasedCssOperator out(n_);
  std::vector<uint8_t> lam_dag(n_);
  for (uint32_t q = 0; q < n_; ++q) lam_dag[q] = static_cast<uint8_t>((4 - linear_[q]) % 4);
  int dot = 0;
  for (uint32_t q : x_.support()) dot += lam_dag[q];
  out.global_ = (((-global_ + 2 * (dot % 4) + (quad_form(x_) ? 4 : 0)) % 8) + 8) % 8;
  out.x_ = x_;
  BitVec mu = quad_times(x_);
  for (uint32_t q : x_.support()) {
    if (lam_dag[q] % 2 == 1) mu.flip(q);
  }
  for (uint32_t q = 0; q < n_; ++q) {
    out.linear_[q] = static_cast<uint8_t>((lam_dag[q] + (mu.get(q) ? 2 : 0)) % 4);
  }
  out.quad_ = quad_;
  return out;
}

PhasedCssOperator PhasedCssOperator::commutator(const PhasedCssOperator &other) const {
  return *this * other * dagger() * other.dagger();
}

PhasedCssOperator PhasedCssOperator::multiply_phase(int omega_power) const {
  PhasedCssOperator out = *this;
  out.global_ = ((out.global_ + omega_power) % 8 + 8) % 8;
  return out;
}

PhasedCssOperator PhasedCssOperator::conjugate_by_t(uint32_t site, int sign) const {
  PhasedCssOperator out = *this;
  if (!x_.get(site)) return out;  // diagonal parts commute with T
  // Frozen from the 2x2 oracle: T X T^dag = w X S^dag, T^dag X T = w^-1 X S.
  out.global_ = ((out.global_ + (sign > 0 ? 1 : 7)) % 8);
  out.add_linear(site, sign > 0 ? 3 : 1);
  return out;
}

PhasedCssOperator PhasedCssOperator::conjugate_by_ccz(uint32_t i, uint32_t j, uint32_t k) const {
  if (i == j || j == k || i == k) throw std::invalid_argument("CCZ triple must be distinct");
  PhasedCssOperator out = *this;
  const bool xi = x_.get(i), xj = x_.get(j), xk = x_.get(k);
  if (xi) out.toggle_quad(j, k);
  if (xj) out.toggle_quad(i, k);
  if (xk) out.toggle_quad(i, j);
  if (xi && xj) out.add_linear(k, 2);
  if (xi && xk) out.add_linear(j, 2);
  if (xj && xk) out.add_linear(i, 2);
  if (xi && xj && xk) out.global_ = (out.global_ + 4) % 8;
  return out;
}

PhasedCssOperator PhasedCssOperator::conjugate_by_cx(uint32_t control, uint32_t target) const {
  if (control == target) throw std::invalid_argument("CX needs distinct qubits");
  PhasedCssOperator out = *this;
  if (x_.get(control)) out.x_.flip(target);
  // Rewrite the diagonal from the old field values.
  const int lam_t = linear_[target];
  if (lam_t) {
    out.add_linear(control, lam_t);
    if (lam_t % 2 == 1) out.toggle_quad(control, target);
  }
  if (quad_get(control, target)) out.add_linear(control, 2);
  for (const auto &[p, q] : quad_) {
    uint32_t u;
    if (p == target && q != control) {
      u = q;
    } else if (q == target && p != control) {
      u = p;
    } else {
      continue;
    }
    out.toggle_quad(control, u);
  }
  return out;
}

bool PhasedCssOperator::is_hermitian_involution() const {
  if (!(*this == dagger())) return false;
  return (*this * *this).is_identity();
}

BitVec PhasedCssOperator::support() const {
  BitVec s = x_;
  for (uint32_t q = 0; q < n_; ++q) {
    if (linear_[q] && !s.get(q)) s.flip(q);
  }
  for (const auto &[p, q] : quad_) {
    s.set(p, true);
    s.set(q, true);
  }
  return s;
}

int PhasedCssOperator::phase_exponent(uint64_t z_bits) const {
  int dot = 0;
  for (uint32_t q = 0; q < n_; ++q) {
    if ((z_bits >> q) & 1) dot += linear_[q];
  }
  int quad = 0;
  for (const auto &[p, q] : quad_) {
    if (((z_bits >> p) & 1) && ((z_bits >> q) & 1)) ++quad;
  }
  return (global_ + 2 * (dot % 4) + 4 * (quad % 2)) % 8;
}

uint64_t PhasedCssOperator::x_mask() const {
  if (n_ > 64) throw std::logic_error("x_mask: register too wide");
  uint64_t mask = 0;
  for (uint32_t q : x_.support()) mask |= uint64_t{1} << q;
  return mask;
}

PhasedCssOperator PhasedCssOperator::embedded(std::size_t new_n,
                                              const std::vector<uint32_t> &qubit_map) const {
  if (qubit_map.size() != n_) throw std::invalid_argument("embedded: map size mismatch");
  PhasedCssOperator out(new_n);
  out.global_ = global_;
  out.x_ = x_.embed(new_n, qubit_map);
  for (uint32_t q = 0; q < n_; ++q) out.linear_[qubit_map[q]] = linear_[q];
  for (const auto &[p, q] : quad_) out.toggle_quad(qubit_map[p], qubit_map[q]);
  return out;
}

PhasedCssOperator PhasedCssOperator::padded(std::size_t new_n) const {
  std::vector<uint32_t> map(n_);
  for (uint32_t q = 0; q < n_; ++q) map[q] = q;
  return embedded(new_n, map);
}

CycloMatrix PhasedCssOperator::to_matrix() const {
  if (n_ > 12) throw std::invalid_argument("to_matrix: more than 12 qubits");
  const std::size_t dim = std::size_t{1} << n_;
  const uint64_t mask = x_mask();
  CycloMatrix m(dim);
  for (uint64_t z = 0; z < dim; ++z) {
    m.at(z ^ mask, z) = Omega8::from_power(phase_exponent(z));
  }
  return m;
}

std::string PhasedCssOperator::to_string() const {
  std::string s;
  if (global_) s += "w^" + std::to_string(global_) + " ";
  if (!x_.is_zero()) s += "X" + x_.to_string() + " ";
  std::string lin;
  for (uint32_t q = 0; q < n_; ++q) {
    if (linear_[q]) {
      if (!lin.empty()) lin += ",";
      lin += std::to_string(q) + ":" + std::to_string(linear_[q]);
    }
  }
  if (!lin.empty()) s += "S{" + lin + "} ";
  if (!quad_.empty()) {
    s += "CZ{";
    for (std::size_t i = 0; i < quad_.size(); ++i) {
      if (i) s += ",";
      s += "(" + std::to_string(quad_[i].first) + "," + std::to_string(quad_[i].second) + ")";
    }
    s += "} ";
  }
  if (s.empty()) return "I";
  s.pop_back();
  return s;
}

}  // namespace hfg
