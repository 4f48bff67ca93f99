#ifndef HFG_PHASED_OPERATOR_HPP
#define HFG_PHASED_OPERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hfg/bitvec.hpp"
#include "hfg/cyclotomic.hpp"

namespace hfg {

/// An X-type Pauli dressed by diagonal Clifford phases:
///
///   w^g * X(a) * prod_q S_q^{lambda_q} * prod_{p<q} CZ_{pq}^{Q_pq}
///
/// with w = exp(i*pi/4), g in Z_8, lambda_q in Z_4 and Q a symmetric GF(2)
/// matrix with zero diagonal. The form is canonical: two operators are equal
/// iff all four fields match. Products, daggers, group commutators and
/// conjugation by T / CCZ / CX stay inside the class, which is what makes
/// every operator identity in the gauging constructions checkable exactly.
class PhasedCssOperator {
 public:
  PhasedCssOperator() = default;
  explicit PhasedCssOperator(std::size_t n) : n_(n), x_(n), linear_(n, 0) {}

  static PhasedCssOperator identity(std::size_t n) { return PhasedCssOperator(n); }
  static PhasedCssOperator from_x(const BitVec &support);
  static PhasedCssOperator from_z(const BitVec &support);
  static PhasedCssOperator pauli_x(std::size_t n, uint32_t q);
  static PhasedCssOperator pauli_z(std::size_t n, uint32_t q);
  static PhasedCssOperator s_power(std::size_t n, uint32_t q, int power);
  static PhasedCssOperator cz(std::size_t n, uint32_t p, uint32_t q);

  std::size_t n() const { return n_; }
  int global_phase() const { return global_; }
  const BitVec &x_part() const { return x_; }
  const std::vector<uint8_t> &linear_part() const { return linear_; }
  const std::vector<std::pair<uint32_t, uint32_t>> &quad_part() const { return quad_; }

  bool is_identity() const;
  bool is_diagonal() const { return x_.is_zero(); }
  /// A plain +1-phase product of Pauli Z operators; support via z_vector().
  bool is_pure_z() const;
  BitVec z_vector() const;
  /// True iff the X-part and the S-part are empty and only CZ factors remain.
  bool is_cz_type() const;

  PhasedCssOperator operator*(const PhasedCssOperator &other) const;
  PhasedCssOperator dagger() const;
  /// Group commutator A B A^dag B^dag.
  PhasedCssOperator commutator(const PhasedCssOperator &other) const;
  PhasedCssOperator multiply_phase(int omega_power) const;

  /// T_q^{+/-1} (.) T_q^{-/+1}; phases frozen from the 2x2 oracle.
  PhasedCssOperator conjugate_by_t(uint32_t site, int sign) const;
  /// CCZ (.) CCZ on a triple of distinct sites.
  PhasedCssOperator conjugate_by_ccz(uint32_t i, uint32_t j, uint32_t k) const;
  /// CX_{c->t} (.) CX_{c->t}.
  PhasedCssOperator conjugate_by_cx(uint32_t control, uint32_t target) const;

  bool is_hermitian_involution() const;

  /// Qubits the operator acts on nontrivially.
  BitVec support() const;

  /// Phase exponent (power of w) the operator applies to basis state |z>,
  /// i.e. Op|z> = w^{phase_exponent(z)} |z ^ x_mask()>.
  int phase_exponent(uint64_t z_bits) const;
  uint64_t x_mask() const;  // n <= 64 only

  /// Re-index onto a larger register; qubit_map[i] is the new index of i.
  PhasedCssOperator embedded(std::size_t new_n, const std::vector<uint32_t> &qubit_map) const;
  PhasedCssOperator padded(std::size_t new_n) const;

  /// Exact dense unitary, n <= 12; the independent test oracle.
  CycloMatrix to_matrix() const;

  std::string to_string() const;
  bool operator==(const PhasedCssOperator &other) const = default;

 private:
  std::size_t n_ = 0;
  int global_ = 0;                // exponent of w, mod 8
  BitVec x_;                      // X support
  std::vector<uint8_t> linear_;   // S exponent per qubit, mod 4
  std::vector<std::pair<uint32_t, uint32_t>> quad_;  // sorted CZ pairs, p < q

  void add_linear(uint32_t q, int amount);
  void toggle_quad(uint32_t p, uint32_t q);
  bool quad_get(uint32_t p, uint32_t q) const;
  // (lambda . a) mod 4 and the F2 products used by the reordering rule.
  int linear_dot(const BitVec &a) const;
  bool quad_form(const BitVec &a) const;      // sum_{p<q} Q_pq a_p a_q mod 2
  BitVec quad_times(const BitVec &a) const;   // Q a over F2
};

}  // namespace hfg

#endif
