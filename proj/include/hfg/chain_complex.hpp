#ifndef HFG_CHAIN_COMPLEX_HPP
#define HFG_CHAIN_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "hfg/bitmatrix.hpp"

namespace hfg {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;  // "grade g column c ..." entries
};

enum class HomologyKind { Homology, Cohomology };

struct HomologyBasis {
  std::size_t grade = 0;
  HomologyKind kind = HomologyKind::Homology;
  std::vector<BitVec> representatives;
};

struct DistanceResult {
  enum class Status { Finite, Infinite, Unknown };
  Status status = Status::Unknown;
  std::size_t weight = 0;
  BitVec witness;

  bool is_finite() const { return status == Status::Finite; }
  std::string to_string() const;
};

/// Exact rational value of a Cheeger constant.
struct CheegerResult {
  bool known = false;
  std::size_t numerator = 0;    // |delta c~| of the minimizing class
  std::size_t denominator = 1;  // |c~|
  BitVec witness;               // the minimizing c~

  double value() const { return static_cast<double>(numerator) / denominator; }
  /// this <= a/b, compared exactly.
  bool leq(std::size_t a, std::size_t b) const { return numerator * b <= a * denominator; }
};

/// A chain complex over GF(2): graded spaces C_0..C_n with boundary maps
/// boundary(i): C_i -> C_{i-1} for i in [1, n], composing to zero. One basis
/// per grade is fixed at construction; coboundaries are plain transposes in
/// that basis.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// boundaries[i-1] is the map C_i -> C_{i-1}.
  ChainComplex(std::vector<std::size_t> dims, std::vector<BitMatrix> boundaries);

  std::size_t top_grade() const { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t num_grades() const { return dims_.size(); }
  std::size_t dim(std::size_t grade) const { return dims_.at(grade); }
  const std::vector<std::size_t> &dims() const { return dims_; }

  /// C_i -> C_{i-1}; zero-shaped outside [1, top].
  BitMatrix boundary(std::size_t i) const;
  /// delta_i = boundary(i)^T : C_{i-1} -> C_i.
  BitMatrix coboundary(std::size_t i) const;

  ValidationReport validate() const;

  std::size_t betti(std::size_t grade) const;        // dim H_grade
  std::size_t cobetti(std::size_t grade) const;      // dim H^grade
  HomologyBasis homology_basis(std::size_t grade) const;
  HomologyBasis cohomology_basis(std::size_t grade) const;

  DistanceResult homology_distance(std::size_t grade, HomologyKind kind,
                                   std::size_t budget = 1u << 20) const;

  /// h-Cheeger constant: min over classes of C_h / ker delta_{h+1} of
  /// |delta_{h+1} c~| / |c~| with c~ the minimum-weight class representative.
  /// Exhaustive over classes when rank(delta_{h+1}) <= class_budget_bits.
  CheegerResult cheeger(std::size_t h, std::size_t class_budget_bits = 20) const;

  /// Appends a new top grade whose boundary columns are a kernel basis of
  /// the current top boundary map (hyperedge cycle generators).
  ChainComplex extend_with_cycle_space() const;

  void set_labels(std::size_t grade, std::vector<std::string> labels);
  const std::vector<std::string> &labels(std::size_t grade) const;

  std::string to_json() const;
  static ChainComplex from_json(const std::string &text);

 private:
  std::vector<std::size_t> dims_;
  std::vector<BitMatrix> boundaries_;  // boundaries_[i-1]: C_i -> C_{i-1}
  std::vector<std::vector<std::string>> labels_;

  // Representatives of ker(cycles) modulo Im(boundaries), deterministic.
  std::vector<BitVec> quotient_basis(const BitMatrix &cycle_map,
                                     const BitMatrix &boundary_map) const;
};

}  // namespace hfg

#endif
