#ifndef HFG_HIGHER_FORM_GATE_HPP
#define HFG_HIGHER_FORM_GATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hfg/css_code.hpp"
#include "hfg/phased_operator.hpp"

namespace hfg {

struct TargetCode {
  CssCode code;
  std::size_t qubit_offset = 0;
};

/// A commuting on-site representation of the cocycle group ker delta_{h+1}
/// of a gate complex: one Hermitian involution per C_h basis element, acting
/// on the combined qubit register of the target codes.
class HigherFormGate {
 public:
  HigherFormGate(std::size_t h, ChainComplex gate_complex, std::size_t n_data,
                 std::vector<TargetCode> targets, std::vector<PhasedCssOperator> sites);

  std::size_t h() const { return h_; }
  const ChainComplex &gate_complex() const { return gate_complex_; }
  std::size_t n_data() const { return n_data_; }
  std::size_t num_sites() const { return sites_.size(); }
  const PhasedCssOperator &site(std::size_t s) const { return sites_[s]; }
  const std::vector<TargetCode> &targets() const { return targets_; }

  /// Per-target identification of gate sites with target qubits (global
  /// indices); empty when sites are not qubit-aligned for that target.
  void set_site_embedding(std::size_t target, std::vector<uint32_t> map);
  const std::vector<uint32_t> &site_embedding(std::size_t target) const;

  void set_pre_rotation_t_powers(std::vector<int> powers);
  const std::vector<int> &pre_rotation_t_powers() const { return pre_rotation_t_power_; }
  bool sites_x_conjugate() const { return sites_x_conjugate_; }
  void set_sites_x_conjugate(bool value) { sites_x_conjugate_ = value; }
  bool strongly_transversal() const { return strongly_transversal_; }
  void set_strongly_transversal(bool value) { strongly_transversal_ = value; }

  /// Site involutivity, pairwise commutation, and sparsity caps.
  ValidationReport validate_gate(std::size_t max_site_support = 24,
                                 std::size_t max_qubit_fanin = 24) const;

  /// U(c) = prod_s site_s^{c_s}; requires c in ker delta_{h+1}.
  PhasedCssOperator gate_for_cocycle(const BitVec &c) const;
  /// Same product for an arbitrary chain (partial symmetry, byproducts).
  PhasedCssOperator gate_for_chain(const BitVec &c) const;

  /// 1-form CZ codespace condition over generator triples:
  /// (Im delta_1^{(0)} o Im delta_1^{(1)}) . Im delta_1^{(2)} = 0,
  /// restricted to the qubits identified with the gate sites.
  ValidationReport validate_codespace_cz() const;
  /// 1-form XS condition: the trilinear vanishing for the single target plus
  /// the overlap-region parity of XS against half the region size.
  ValidationReport validate_codespace_xs() const;

  /// Commutators of U(c) with target checks, classified. `cycles_ok` holds
  /// when every commutator is a +1 Z-cycle of its code (the literal
  /// Im . Im in ker d_1 condition); `strict_ok` when every commutator is a
  /// +1 Z-check product, i.e. conjugated checks stay in the check group.
  struct CodespaceReport {
    bool cycles_ok = true;
    bool strict_ok = true;
    std::vector<std::string> failures;
  };
  CodespaceReport check_preserves_codespace(const BitVec &cocycle) const;

  /// Local coboundary element b with (c + delta_h b) supported away from the
  /// given site region, when one exists.
  std::optional<BitVec> cleanability_witness(const std::vector<uint32_t> &region,
                                             const BitVec &cocycle) const;

  /// Combined embedded Z-check supports of all targets (stabilizer span used
  /// by codespace checks and gauged-code commutation tests).
  const BitMatrix &z_check_span() const { return z_span_; }
  BitVec embed_in_register(std::size_t target, const BitVec &v) const;

  std::string to_json() const;

 private:
  std::size_t h_ = 1;
  ChainComplex gate_complex_;
  std::size_t n_data_ = 0;
  std::vector<TargetCode> targets_;
  std::vector<PhasedCssOperator> sites_;
  std::vector<std::vector<uint32_t>> site_embeddings_;
  std::vector<int> pre_rotation_t_power_;
  bool sites_x_conjugate_ = false;
  bool strongly_transversal_ = false;
  BitMatrix z_span_;

  void build_z_span();
};

/// 1-form CZ gate across two copies of a CSS code supporting transversal
/// CCZ; the precondition is the generator-triple trilinear condition, and
/// each site operator is produced by the group commutator of the qubitwise
/// CCZ with an X on the third copy.
HigherFormGate derive_from_ccz(const CssCode &code);

/// 1-form XS gate from a third-level diagonal gate: site q carries
/// T_q X_q T_q^dag (sign +1) or T_q^dag X_q T_q (sign -1).
HigherFormGate derive_from_t(const CssCode &code, const std::vector<int> &t_signs);

/// Pauli 1-form gate reading the X (or Z) logical group, optionally across
/// several code blocks and optionally truncated to a qubit subset.
enum class PauliBasis { X, Z };
HigherFormGate make_pauli_1form(const CssCode &code, PauliBasis basis,
                                const std::vector<uint32_t> &restriction = {},
                                std::size_t blocks = 1);

/// Induced 1-form CZ gate between two CSS codes on a shared qubit indexing:
/// the gate complex constraints are the elementwise products of X-check
/// pairs, so every cocycle preserves both codespaces exactly.
HigherFormGate make_cz_pair(const CssCode &code_a, const CssCode &code_b);

}  // namespace hfg

#endif
