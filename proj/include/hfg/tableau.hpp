#ifndef HFG_TABLEAU_HPP
#define HFG_TABLEAU_HPP

#include <cstdint>
#include <vector>

#include "hfg/phased_operator.hpp"
#include "hfg/rng.hpp"

namespace hfg {

/// A signed Pauli product in the tableau's representation: per qubit
/// (x,z) in {I, X, Y, Z} encoding with Y = i X Z, global sign (-1)^r.
struct PauliRow {
  std::vector<uint64_t> x, z;
  bool r = false;

  static PauliRow identity(std::size_t n);
  bool x_bit(uint32_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool z_bit(uint32_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(uint32_t q, bool v);
  void set_z(uint32_t q, bool v);
  bool anticommutes(const PauliRow &other) const;

  /// Conversion from a PhasedCssOperator that is a Hermitian Pauli product;
  /// throws otherwise.
  static PauliRow from_operator(const PhasedCssOperator &op);
  PhasedCssOperator to_operator(std::size_t n) const;
};

/// Aaronson-Gottesman stabilizer tableau with destabilizers. Global phases
/// are not tracked (stabilizer states are phase-free by convention), so
/// applying a PhasedCssOperator ignores its w^g factor. Auxiliary qubits
/// that have been measured out stay in the tableau as pinned product
/// qubits; callers treat the register slice [0, data qubits) as the state.
class StabTableau {
 public:
  explicit StabTableau(std::size_t n);  // |0...0>

  std::size_t n() const { return n_; }

  // Gate set used by the gauging circuits.
  void h(uint32_t q);
  void s(uint32_t q);
  void cx(uint32_t control, uint32_t target);
  void cz(uint32_t a, uint32_t b);
  void x(uint32_t q);
  void z(uint32_t q);

  /// Applies w^g X(a) D by gate decomposition (diagonal first, then X);
  /// requires the operator's diagonal part to be Clifford, which it always
  /// is in this representation.
  void apply(const PhasedCssOperator &op);

  int measure(const PauliRow &p, SeededRng &rng);
  /// Duck-typed entry point shared with StateVector; op must be a Hermitian
  /// Pauli product.
  int measure_involution(const PhasedCssOperator &op, SeededRng &rng);

  /// +1/-1 when the Pauli is deterministic on the state, 0 when random.
  int expectation(const PauliRow &p) const;
  int expectation(const PhasedCssOperator &op) const;

  void append_qubits(std::size_t m);

  const PauliRow &stabilizer(std::size_t i) const { return rows_[n_ + i]; }
  const PauliRow &destabilizer(std::size_t i) const { return rows_[i]; }

 private:
  std::size_t n_ = 0;
  std::vector<PauliRow> rows_;  // destabilizers [0, n), stabilizers [n, 2n)

  void rowsum(PauliRow &h, const PauliRow &i) const;
};

}  // namespace hfg

#endif
