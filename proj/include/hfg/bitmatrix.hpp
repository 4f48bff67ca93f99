#ifndef HFG_BITMATRIX_HPP
#define HFG_BITMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "hfg/bitvec.hpp"

namespace hfg {

/// Sparse GF(2) matrix in column-major form: one BitVec of length `rows`
/// per column. Boundary maps of chain complexes are column sparse, which
/// this layout preserves; elimination routines densify internally.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::size_t rows, std::vector<BitVec> columns);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zero(std::size_t rows, std::size_t cols);
  /// Columns given as row-index lists.
  static BitMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<uint32_t>> &cols);
  static BitMatrix from_rows(std::size_t cols, const std::vector<BitVec> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const BitVec &column(std::size_t j) const { return columns_[j]; }
  BitVec row(std::size_t i) const;
  bool get(std::size_t i, std::size_t j) const { return columns_[j].get(i); }
  void set(std::size_t i, std::size_t j, bool value) { columns_[j].set(i, value); }
  bool is_zero() const;
  bool operator==(const BitMatrix &other) const = default;

  BitMatrix transpose() const;
  BitMatrix multiply(const BitMatrix &other) const;
  BitVec multiply(const BitVec &x) const;

  std::size_t rank() const;
  /// Solves M·y = x by deterministic leftmost-pivot elimination. Free
  /// variables are set to zero, so the result is unique for a fixed input.
  std::optional<BitVec> solve(const BitVec &x) const;
  /// Independent vectors spanning ker M, ordered by ascending free column.
  std::vector<BitVec> kernel_basis() const;
  /// Reduced basis of the column space (deterministic).
  std::vector<BitVec> image_basis() const;
  /// Max column weight and max row weight.
  std::pair<std::size_t, std::size_t> sparsity_profile() const;

  std::string to_json() const;
  static BitMatrix from_json(const std::string &text);

 private:
  std::size_t rows_ = 0;
  std::vector<BitVec> columns_;
};

struct CosetSearchResult {
  bool known = false;
  std::size_t weight = 0;
  BitVec witness;  // the minimum-weight coset element found
};

/// Minimum Hamming weight over the coset {v + M·y : y}, searched exactly.
/// When the column space has dimension at most `exhaustive_limit` bits the
/// whole coset is enumerated (Gray-code walk); otherwise candidate vectors
/// of weight <= budget are tested for coset membership. Ties are broken
/// toward the lexicographically smallest support.
CosetSearchResult coset_min_weight(const BitMatrix &m, const BitVec &v,
                                   std::size_t budget,
                                   std::size_t exhaustive_limit = 24);

}  // namespace hfg

#endif
