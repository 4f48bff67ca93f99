#include "hfg/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include <json.hpp>

namespace hfg {

namespace {

// Dense bit rows used internally by elimination routines.
struct DenseRows {
  std::size_t width = 0;
  std::vector<std::vector<uint64_t>> rows;

  DenseRows(std::size_t n_rows, std::size_t n_cols)
      : width(n_cols), rows(n_rows, std::vector<uint64_t>((n_cols + 63) / 64, 0)) {}

  bool get(std::size_t r, std::size_t c) const {
    return (rows[r][c >> 6] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c) { rows[r][c >> 6] |= uint64_t{1} << (c & 63); }
  void xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < rows[dst].size(); ++w) rows[dst][w] ^= rows[src][w];
  }
};

// Reduced row echelon with leftmost pivots. Returns (row, col) pivot pairs
// in elimination order.
std::vector<std::pair<std::size_t, std::size_t>> reduce(DenseRows &m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.width && next_row < m.rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows.size() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows.size()) continue;
    std::swap(m.rows[next_row], m.rows[pivot]);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r != next_row && m.get(r, col)) m.xor_rows(r, next_row);
    }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }
  return pivots;
}

DenseRows rows_of(const BitMatrix &m) {
  DenseRows d(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (uint32_t i : m.column(j).support()) d.set(i, j);
  }
  return d;
}

// Columns of m laid out as dense rows (i.e. rows of the transpose).
DenseRows cols_as_rows(const BitMatrix &m) {
  DenseRows d(m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (uint32_t i : m.column(j).support()) d.set(j, i);
  }
  return d;
}

BitVec row_to_bitvec(const DenseRows &d, std::size_t r) {
  std::vector<uint32_t> support;
  for (std::size_t w = 0; w < d.rows[r].size(); ++w) {
    uint64_t word = d.rows[r][w];
    while (word) {
      support.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return BitVec(d.width, std::move(support));
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols, BitVec(rows)) {}

BitMatrix::BitMatrix(std::size_t rows, std::vector<BitVec> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const BitVec &c : columns_) {
    if (c.length() != rows_) throw std::invalid_argument("BitMatrix column length");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (uint32_t i = 0; i < n; ++i) m.columns_[i] = BitVec::unit(n, i);
  return m;
}

BitMatrix BitMatrix::zero(std::size_t rows, std::size_t cols) {
  return BitMatrix(rows, cols);
}

BitMatrix BitMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<uint32_t>> &cols) {
  BitMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.columns_[j] = BitVec(rows, cols[j]);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<BitVec> &rows) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].length() != cols) throw std::invalid_argument("BitMatrix row length");
    for (uint32_t j : rows[i].support()) m.columns_[j].flip(static_cast<uint32_t>(i));
  }
  return m;
}

BitVec BitMatrix::row(std::size_t i) const {
  BitVec r(cols());
  for (uint32_t j = 0; j < cols(); ++j) {
    if (columns_[j].get(static_cast<uint32_t>(i))) r.flip(j);
  }
  return r;
}

bool BitMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const BitVec &c) { return c.is_zero(); });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols(), rows_);
  for (uint32_t j = 0; j < cols(); ++j) {
    for (uint32_t i : columns_[j].support()) t.columns_[i].flip(j);
  }
  return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix &other) const {
  if (cols() != other.rows()) throw std::invalid_argument("BitMatrix dimension mismatch");
  std::vector<BitVec> out;
  out.reserve(other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) out.push_back(multiply(other.column(j)));
  return BitMatrix(rows_, std::move(out));
}

BitVec BitMatrix::multiply(const BitVec &x) const {
  if (x.length() != cols()) throw std::invalid_argument("BitMatrix dimension mismatch");
  BitVec acc(rows_);
  for (uint32_t j : x.support()) acc += columns_[j];
  return acc;
}

std::size_t BitMatrix::rank() const {
  DenseRows d = rows_of(*this);
  return reduce(d).size();
}

std::optional<BitVec> BitMatrix::solve(const BitVec &x) const {
  if (x.length() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
  // Augmented [M | x], reduced with leftmost pivots over the M part.
  DenseRows d(rows_, cols() + 1);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (uint32_t i : columns_[j].support()) d.set(i, j);
  }
  for (uint32_t i : x.support()) d.set(i, cols());
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols() && next_row < rows_; ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows_ && !d.get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(d.rows[next_row], d.rows[pivot]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != next_row && d.get(r, col)) d.xor_rows(r, next_row);
    }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }
  for (std::size_t r = next_row; r < rows_; ++r) {
    if (d.get(r, cols())) return std::nullopt;  // 0 = 1: x not in the image
  }
  BitVec y(cols());
  for (auto [r, c] : pivots) {
    if (d.get(r, cols())) y.flip(static_cast<uint32_t>(c));
  }
  return y;
}

std::vector<BitVec> BitMatrix::kernel_basis() const {
  DenseRows d = rows_of(*this);
  auto pivots = reduce(d);
  std::vector<bool> is_pivot(cols(), false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (uint32_t f = 0; f < cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols());
    v.flip(f);
    for (auto [r, c] : pivots) {
      if (d.get(r, f)) v.flip(static_cast<uint32_t>(c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVec> BitMatrix::image_basis() const {
  DenseRows d = cols_as_rows(*this);
  auto pivots = reduce(d);
  std::vector<BitVec> basis;
  basis.reserve(pivots.size());
  for (auto [r, c] : pivots) basis.push_back(row_to_bitvec(d, r));
  return basis;
}

std::pair<std::size_t, std::size_t> BitMatrix::sparsity_profile() const {
  std::size_t max_col = 0;
  std::vector<std::size_t> row_weight(rows_, 0);
  for (const BitVec &c : columns_) {
    max_col = std::max(max_col, c.weight());
    for (uint32_t i : c.support()) ++row_weight[i];
  }
  std::size_t max_row = 0;
  for (std::size_t w : row_weight) max_row = std::max(max_row, w);
  return {max_col, max_row};
}

std::string BitMatrix::to_json() const {
  nlohmann::json j;
  j["rows"] = rows_;
  j["cols"] = cols();
  nlohmann::json cols_json = nlohmann::json::array();
  for (const BitVec &c : columns_) cols_json.push_back(c.support());
  j["columns"] = cols_json;
  return j.dump();
}

BitMatrix BitMatrix::from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  auto columns = j.at("columns").get<std::vector<std::vector<uint32_t>>>();
  if (columns.size() != cols) throw std::invalid_argument("matrix json: cols mismatch");
  return BitMatrix::from_columns(rows, columns);
}

CosetSearchResult coset_min_weight(const BitMatrix &m, const BitVec &v,
                                   std::size_t budget, std::size_t exhaustive_limit) {
  std::vector<BitVec> basis = m.image_basis();
  const std::size_t r = basis.size();
  if (r <= exhaustive_limit) {
    // Gray-code walk over the whole coset; exact regardless of budget.
    const std::size_t words = (v.length() + 63) / 64;
    std::vector<std::vector<uint64_t>> dense_basis(r, std::vector<uint64_t>(words, 0));
    for (std::size_t b = 0; b < r; ++b) {
      for (uint32_t i : basis[b].support()) dense_basis[b][i >> 6] |= uint64_t{1} << (i & 63);
    }
    std::vector<uint64_t> current(words, 0);
    for (uint32_t i : v.support()) current[i >> 6] |= uint64_t{1} << (i & 63);
    auto weight_of = [&](const std::vector<uint64_t> &w) {
      std::size_t total = 0;
      for (uint64_t word : w) total += std::popcount(word);
      return total;
    };
    // For equal weights, the support with its first differing index present
    // is the lexicographically smaller one.
    auto support_lex_less = [&](const std::vector<uint64_t> &a,
                                const std::vector<uint64_t> &b) {
      for (std::size_t w = 0; w < words; ++w) {
        uint64_t diff = a[w] ^ b[w];
        if (diff) return (a[w] >> std::countr_zero(diff)) & 1;
      }
      return uint64_t{0};
    };
    std::vector<uint64_t> best = current;
    std::size_t best_weight = weight_of(current);
    for (uint64_t k = 1; k < (uint64_t{1} << r); ++k) {
      std::size_t flip = std::countr_zero(k);
      for (std::size_t w = 0; w < words; ++w) current[w] ^= dense_basis[flip][w];
      std::size_t weight = weight_of(current);
      if (weight < best_weight ||
          (weight == best_weight && support_lex_less(current, best))) {
        best = current;
        best_weight = weight;
      }
    }
    std::vector<uint32_t> support;
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t word = best[w];
      while (word) {
        support.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return {true, best_weight, BitVec(v.length(), std::move(support))};
  }

  // Weight-bounded enumeration: test candidates of ascending weight for
  // membership in v + Im M.
  DenseRows echelon(r, v.length());
  for (std::size_t b = 0; b < r; ++b) {
    for (uint32_t i : basis[b].support()) echelon.set(b, i);
  }
  auto pivots = reduce(echelon);
  auto in_image = [&](const BitVec &w) {
    std::vector<uint64_t> acc((v.length() + 63) / 64, 0);
    for (uint32_t i : w.support()) acc[i >> 6] |= uint64_t{1} << (i & 63);
    for (auto [row, col] : pivots) {
      if ((acc[col >> 6] >> (col & 63)) & 1) {
        for (std::size_t word = 0; word < acc.size(); ++word)
          acc[word] ^= echelon.rows[row][word];
      }
    }
    return std::all_of(acc.begin(), acc.end(), [](uint64_t x) { return x == 0; });
  };
  const std::size_t n = v.length();
  for (std::size_t w = 0; w <= budget && w <= n; ++w) {
    std::vector<uint32_t> idx(w);
    for (uint32_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitVec candidate(n, idx);
      if (in_image(candidate + v)) return {true, w, candidate};
      if (w == 0) break;
      // Next combination in lexicographic order.
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {false, 0, BitVec(n)};
}

}  // namespace hfg
