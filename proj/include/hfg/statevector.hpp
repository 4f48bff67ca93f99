#ifndef HFG_STATEVECTOR_HPP
#define HFG_STATEVECTOR_HPP

#include <complex>
#include <iosfwd>
#include <vector>

#include "hfg/phased_operator.hpp"
#include "hfg/rng.hpp"

namespace hfg {

/// Dense statevector backend. Qubit 0 is the least significant index bit.
/// Public operations keep the norm within 1e-12 of 1.
class StateVector {
 public:
  static constexpr std::size_t kDefaultMaxQubits = 24;

  static StateVector basis_state(std::size_t n, uint64_t bits = 0,
                                 std::size_t max_qubits = kDefaultMaxQubits);
  static StateVector plus_state(std::size_t n,
                                std::size_t max_qubits = kDefaultMaxQubits);

  std::size_t n() const { return n_; }
  const std::vector<std::complex<double>> &amplitudes() const { return amps_; }

  void apply(const PhasedCssOperator &op);
  /// Hadamard on one qubit (used for random-Clifford state preparation;
  /// not representable as a PhasedCssOperator).
  void h(uint32_t q);

  /// Projective measurement of a Hermitian involution. Outcomes with
  /// probability within 1e-12 of 0 or 1 are deterministic and do not consume
  /// randomness; otherwise exactly one uniform draw decides the branch.
  int measure_involution(const PhasedCssOperator &op, SeededRng &rng);

  std::complex<double> inner(const StateVector &other) const;
  std::complex<double> expectation(const PhasedCssOperator &op) const;
  double norm() const;
  double fidelity(const StateVector &other) const;

  /// Tensors |0>^m onto the high end of the register.
  void append_qubits(std::size_t m);
  /// Drops qubits [n_keep, n); requires them to be in the product state
  /// |bits> (checked to 1e-9 amplitude mass).
  void discard_qubits(std::size_t n_keep, uint64_t bits);

  /// Little-endian raw dump: 2^n (re, im) double pairs.
  void save_amplitudes(std::ostream &out) const;

 private:
  StateVector(std::size_t n, std::size_t max_qubits);
  void normalize();

  std::size_t n_ = 0;
  std::size_t max_qubits_ = kDefaultMaxQubits;
  std::vector<std::complex<double>> amps_;
};

}  // namespace hfg

#endif
