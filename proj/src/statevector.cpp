#include "hfg/statevector.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hfg {

namespace {

std::array<std::complex<double>, 8> omega_table() {
  std::array<std::complex<double>, 8> table;
  for (int k = 0; k < 8; ++k) {
    table[k] = std::polar(1.0, std::numbers::pi * k / 4.0);
  }
  return table;
}

const std::array<std::complex<double>, 8> kOmega = omega_table();

}  // namespace

StateVector::StateVector(std::size_t n, std::size_t max_qubits)
    : n_(n), max_qubits_(max_qubits) {
  if (n > max_qubits_) {
    throw std::invalid_argument("statevector: " + std::to_string(n) +
                                " qubits exceeds the ceiling of " +
                                std::to_string(max_qubits_));
  }
  amps_.assign(std::size_t{1} << n, 0.0);
}

StateVector StateVector::basis_state(std::size_t n, uint64_t bits, std::size_t max_qubits) {
  StateVector s(n, max_qubits);
  s.amps_[bits] = 1.0;
  return s;
}

StateVector StateVector::plus_state(std::size_t n, std::size_t max_qubits) {
  StateVector s(n, max_qubits);
  double amp = std::pow(0.5, static_cast<double>(n) / 2.0);
  for (auto &a : s.amps_) a = amp;
  return s;
}

void StateVector::apply(const PhasedCssOperator &op) {
  if (op.n() != n_) throw std::invalid_argument("statevector: operator size mismatch");
  const uint64_t mask = op.x_mask();
  const std::size_t dim = amps_.size();
  if (mask == 0) {
    for (uint64_t z = 0; z < dim; ++z) amps_[z] *= kOmega[op.phase_exponent(z)];
    return;
  }
  const uint64_t low_bit = mask & (~mask + 1);
  for (uint64_t z = 0; z < dim; ++z) {
    if (z & low_bit) continue;
    uint64_t partner = z ^ mask;
    std::complex<double> az = amps_[z];
    std::complex<double> ap = amps_[partner];
    amps_[partner] = kOmega[op.phase_exponent(z)] * az;
    amps_[z] = kOmega[op.phase_exponent(partner)] * ap;
  }
}

void StateVector::h(uint32_t q) {
  const uint64_t bit = uint64_t{1} << q;
  const double inv_sqrt2 = std::sqrt(0.5);
  for (uint64_t z = 0; z < amps_.size(); ++z) {
    if (z & bit) continue;
    std::complex<double> a0 = amps_[z];
    std::complex<double> a1 = amps_[z | bit];
    amps_[z] = inv_sqrt2 * (a0 + a1);
    amps_[z | bit] = inv_sqrt2 * (a0 - a1);
  }
}

int StateVector::measure_involution(const PhasedCssOperator &op, SeededRng &rng) {
  StateVector transformed = *this;
  transformed.apply(op);
  const std::size_t dim = amps_.size();
  double p_plus = 0.0;
  for (std::size_t z = 0; z < dim; ++z) {
    p_plus += std::norm(0.5 * (amps_[z] + transformed.amps_[z]));
  }
  constexpr double kEps = 1e-12;
  int outcome;
  if (p_plus >= 1.0 - kEps) {
    outcome = +1;
  } else if (p_plus <= kEps) {
    outcome = -1;
  } else {
    outcome = rng.next_unit() < p_plus ? +1 : -1;
  }
  const double sign = outcome > 0 ? 1.0 : -1.0;
  for (std::size_t z = 0; z < dim; ++z) {
    amps_[z] = 0.5 * (amps_[z] + sign * transformed.amps_[z]);
  }
  normalize();
  return outcome;
}

std::complex<double> StateVector::inner(const StateVector &other) const {
  if (other.n_ != n_) throw std::invalid_argument("statevector: size mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t z = 0; z < amps_.size(); ++z) acc += std::conj(amps_[z]) * other.amps_[z];
  return acc;
}

std::complex<double> StateVector::expectation(const PhasedCssOperator &op) const {
  StateVector transformed = *this;
  transformed.apply(op);
  return inner(transformed);
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto &a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

double StateVector::fidelity(const StateVector &other) const {
  return std::norm(inner(other));
}

void StateVector::normalize() {
  double total = norm();
  if (total <= 0.0) throw std::logic_error("statevector: zero-norm projection");
  for (auto &a : amps_) a /= total;
}

void StateVector::append_qubits(std::size_t m) {
  if (n_ + m > max_qubits_) {
    throw std::invalid_argument("statevector: appending exceeds the qubit ceiling");
  }
  amps_.resize(std::size_t{1} << (n_ + m), 0.0);
  n_ += m;
}

void StateVector::discard_qubits(std::size_t n_keep, uint64_t bits) {
  const std::size_t dim_keep = std::size_t{1} << n_keep;
  double off_mass = 0.0;
  for (uint64_t z = 0; z < amps_.size(); ++z) {
    if ((z >> n_keep) != bits) off_mass += std::norm(amps_[z]);
  }
  if (off_mass > 1e-9) {
    throw std::logic_error("statevector: register to discard is not in the expected product state");
  }
  std::vector<std::complex<double>> kept(dim_keep);
  for (uint64_t z = 0; z < dim_keep; ++z) kept[z] = amps_[z | (bits << n_keep)];
  amps_ = std::move(kept);
  n_ = n_keep;
  normalize();
}

void StateVector::save_amplitudes(std::ostream &out) const {
  for (const auto &a : amps_) {
    double re = a.real(), im = a.imag();
    out.write(reinterpret_cast<const char *>(&re), sizeof(re));
    out.write(reinterpret_cast<const char *>(&im), sizeof(im));
  }
}

}  // namespace hfg
