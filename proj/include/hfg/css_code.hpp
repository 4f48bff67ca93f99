#ifndef HFG_CSS_CODE_HPP
#define HFG_CSS_CODE_HPP

#include <string>
#include <vector>

#include "hfg/chain_complex.hpp"

namespace hfg {

struct LdpcProfile {
  std::size_t max_check_weight = 0;
  std::size_t max_qubit_degree = 0;
};

/// CSS code derived from the first three grades of a chain complex:
/// C_0 = X-checks, C_1 = qubits, C_2 = Z-checks. All checks are +1
/// stabilizers. Logical bases are symplectically normalized so that the
/// pairing matrix between X and Z representatives is the identity.
class CssCode {
 public:
  explicit CssCode(ChainComplex cx);

  const ChainComplex &complex() const { return complex_; }
  std::size_t n() const { return complex_.dim(1); }
  std::size_t k() const { return k_; }
  std::size_t num_x_checks() const { return complex_.dim(0); }
  std::size_t num_z_checks() const { return complex_.dim(2); }

  /// Support of the X-check attached to C_0 basis element i (column of delta_1).
  BitVec x_check(std::size_t i) const;
  /// Support of the Z-check attached to C_2 basis element j (column of d_2).
  BitVec z_check(std::size_t j) const;

  const std::vector<BitVec> &logical_x() const { return logical_x_; }
  const std::vector<BitVec> &logical_z() const { return logical_z_; }

  std::pair<DistanceResult, DistanceResult> code_distance(std::size_t budget = 1u << 20) const;
  LdpcProfile ldpc_profile() const;

  /// True iff v is a product of Z-checks (lies in Im d_2).
  bool in_z_check_group(const BitVec &v) const;
  /// True iff v is a product of X-checks (lies in Im delta_1).
  bool in_x_check_group(const BitVec &v) const;

  std::string to_json() const;

 private:
  ChainComplex complex_;
  std::size_t k_ = 0;
  std::vector<BitVec> logical_x_;
  std::vector<BitVec> logical_z_;
};

}  // namespace hfg

#endif
