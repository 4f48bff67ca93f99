#include "hfg/tableau.hpp"

#include <stdexcept>

namespace hfg {

namespace {
std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

PauliRow PauliRow::identity(std::size_t n) {
  PauliRow row;
  row.x.assign(words_for(n), 0);
  row.z.assign(words_for(n), 0);
  return row;
}

void PauliRow::set_x(uint32_t q, bool v) {
  uint64_t bit = uint64_t{1} << (q & 63);
  if (v) {
    x[q >> 6] |= bit;
  } else {
    x[q >> 6] &= ~bit;
  }
}

void PauliRow::set_z(uint32_t q, bool v) {
  uint64_t bit = uint64_t{1} << (q & 63);
  if (v) {
    z[q >> 6] |= bit;
  } else {
    z[q >> 6] &= ~bit;
  }
}

bool PauliRow::anticommutes(const PauliRow &other) const {
  int parity = 0;
  for (std::size_t w = 0; w < x.size(); ++w) {
    parity ^= __builtin_parityll(x[w] & other.z[w]);
    parity ^= __builtin_parityll(z[w] & other.x[w]);
  }
  return parity;
}

PauliRow PauliRow::from_operator(const PhasedCssOperator &op) {
  if (!op.quad_part().empty()) {
    throw std::invalid_argument("tableau: operator has CZ factors, not a Pauli");
  }
  const std::size_t n = op.n();
  PauliRow row = PauliRow::identity(n);
  int y_count = 0;
  for (uint32_t q = 0; q < n; ++q) {
    bool xq = op.x_part().get(q);
    uint8_t lam = op.linear_part()[q];
    if (lam % 2 == 1) throw std::invalid_argument("tableau: operator has S factors, not a Pauli");
    bool zq = lam == 2;
    row.set_x(q, xq);
    row.set_z(q, zq);
    if (xq && zq) ++y_count;
  }
  // Sign-0 reference: prod_q i^{x z} X^x Z^z.
  BitVec zvec(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (row.z_bit(q)) zvec.flip(q);
  }
  PhasedCssOperator reference =
      (PhasedCssOperator::from_x(op.x_part()) * PhasedCssOperator::from_z(zvec))
          .multiply_phase((2 * y_count) % 8);
  if (op == reference) {
    row.r = false;
  } else if (op == reference.multiply_phase(4)) {
    row.r = true;
  } else {
    throw std::invalid_argument("tableau: operator is not a Hermitian Pauli product");
  }
  return row;
}

PhasedCssOperator PauliRow::to_operator(std::size_t n) const {
  BitVec xs(n), zs(n);
  int y_count = 0;
  for (uint32_t q = 0; q < n; ++q) {
    if (x_bit(q)) xs.flip(q);
    if (z_bit(q)) zs.flip(q);
    if (x_bit(q) && z_bit(q)) ++y_count;
  }
  PhasedCssOperator op = PhasedCssOperator::from_x(xs) * PhasedCssOperator::from_z(zs);
  return op.multiply_phase(((2 * y_count) % 8 + (r ? 4 : 0)) % 8);
}

StabTableau::StabTableau(std::size_t n) : n_(n) {
  rows_.assign(2 * n, PauliRow::identity(n));
  for (uint32_t q = 0; q < n; ++q) {
    rows_[q].set_x(q, true);        // destabilizer X_q
    rows_[n + q].set_z(q, true);    // stabilizer Z_q
  }
}

void StabTableau::h(uint32_t q) {
  for (PauliRow &row : rows_) {
    bool xq = row.x_bit(q), zq = row.z_bit(q);
    row.r ^= xq && zq;
    row.set_x(q, zq);
    row.set_z(q, xq);
  }
}

void StabTableau::s(uint32_t q) {
  for (PauliRow &row : rows_) {
    bool xq = row.x_bit(q), zq = row.z_bit(q);
    row.r ^= xq && zq;
    row.set_z(q, xq ^ zq);
  }
}

void StabTableau::cx(uint32_t control, uint32_t target) {
  for (PauliRow &row : rows_) {
    bool xc = row.x_bit(control), zc = row.z_bit(control);
    bool xt = row.x_bit(target), zt = row.z_bit(target);
    row.r ^= xc && zt && (xt ^ zc ^ 1);
    row.set_x(target, xt ^ xc);
    row.set_z(control, zc ^ zt);
  }
}

void StabTableau::cz(uint32_t a, uint32_t b) {
  h(b);
  cx(a, b);
  h(b);
}

void StabTableau::x(uint32_t q) {
  for (PauliRow &row : rows_) row.r ^= row.z_bit(q);
}

void StabTableau::z(uint32_t q) {
  for (PauliRow &row : rows_) row.r ^= row.x_bit(q);
}

void StabTableau::apply(const PhasedCssOperator &op) {
  if (op.n() != n_) throw std::invalid_argument("tableau: operator size mismatch");
  // U = X(a) D: conjugate by the diagonal part first.
  for (uint32_t q = 0; q < n_; ++q) {
    for (int rep = 0; rep < op.linear_part()[q]; ++rep) s(q);
  }
  for (const auto &[p, q] : op.quad_part()) cz(p, q);
  for (uint32_t q : op.x_part().support()) x(q);
}

void StabTableau::rowsum(PauliRow &h, const PauliRow &i) const {
  // Phase exponent of the product i . h in powers of the imaginary unit.
  int phase = 2 * (h.r ? 1 : 0) + 2 * (i.r ? 1 : 0);
  for (uint32_t q = 0; q < n_; ++q) {
    int x1 = i.x_bit(q), z1 = i.z_bit(q);
    int x2 = h.x_bit(q), z2 = h.z_bit(q);
    if (x1 == 0 && z1 == 0) continue;
    if (x1 == 1 && z1 == 1) {
      phase += z2 - x2;
    } else if (x1 == 1) {
      phase += z2 * (2 * x2 - 1);
    } else {
      phase += x2 * (1 - 2 * z2);
    }
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase != 0 && phase != 2) throw std::logic_error("tableau: odd phase in rowsum");
  h.r = phase == 2;
  for (std::size_t w = 0; w < h.x.size(); ++w) {
    h.x[w] ^= i.x[w];
    h.z[w] ^= i.z[w];
  }
}

int StabTableau::measure(const PauliRow &p, SeededRng &rng) {
  std::size_t pivot = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (rows_[i].anticommutes(p)) {
      pivot = i;
      break;
    }
  }
  if (pivot < 2 * n_) {
    PauliRow old = rows_[pivot];
    for (std::size_t q = 0; q < 2 * n_; ++q) {
      // The paired destabilizer is replaced outright below; everything else
      // that anticommutes with P is repaired by multiplying in the old row.
      if (q != pivot && q != pivot - n_ && rows_[q].anticommutes(p)) rowsum(rows_[q], old);
    }
    int outcome = rng.next_bool() ? -1 : +1;
    rows_[pivot - n_] = old;  // becomes the paired destabilizer
    rows_[pivot] = p;
    rows_[pivot].r = p.r ^ (outcome < 0);
    return outcome;
  }
  int value = expectation(p);
  if (value == 0) throw std::logic_error("tableau: deterministic measure fell through");
  return value;
}

int StabTableau::measure_involution(const PhasedCssOperator &op, SeededRng &rng) {
  return measure(PauliRow::from_operator(op), rng);
}

int StabTableau::expectation(const PauliRow &p) const {
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (rows_[i].anticommutes(p)) return 0;
  }
  PauliRow scratch = PauliRow::identity(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows_[i].anticommutes(p)) rowsum(scratch, rows_[n_ + i]);
  }
  if (scratch.x != p.x || scratch.z != p.z) {
    throw std::logic_error("tableau: Pauli outside the stabilizer span");
  }
  return scratch.r == p.r ? +1 : -1;
}

int StabTableau::expectation(const PhasedCssOperator &op) const {
  return expectation(PauliRow::from_operator(op));
}

void StabTableau::append_qubits(std::size_t m) {
  const std::size_t new_n = n_ + m;
  std::vector<PauliRow> new_rows(2 * new_n, PauliRow::identity(new_n));
  auto copy_into = [&](const PauliRow &src, PauliRow &dst) {
    for (uint32_t q = 0; q < n_; ++q) {
      dst.set_x(q, src.x_bit(q));
      dst.set_z(q, src.z_bit(q));
    }
    dst.r = src.r;
  };
  for (std::size_t i = 0; i < n_; ++i) {
    copy_into(rows_[i], new_rows[i]);
    copy_into(rows_[n_ + i], new_rows[new_n + i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    new_rows[n_ + i].set_x(static_cast<uint32_t>(n_ + i), true);
    new_rows[new_n + n_ + i].set_z(static_cast<uint32_t>(n_ + i), true);
  }
  rows_ = std::move(new_rows);
  n_ = new_n;
}

}  // namespace hfg
