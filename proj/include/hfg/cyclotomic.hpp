#ifndef HFG_CYCLOTOMIC_HPP
#define HFG_CYCLOTOMIC_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace hfg {

/// Exact element of Z[w], w = exp(i*pi/4), reduced by w^4 = -1. Keeps the
/// operator-algebra oracle free of floating-point rounding.
struct Omega8 {
  std::array<int64_t, 4> c{0, 0, 0, 0};  // coefficients of 1, w, w^2, w^3

  static Omega8 zero() { return {}; }
  static Omega8 one() { return from_power(0); }
  static Omega8 from_power(int k) {
    Omega8 v;
    k = ((k % 8) + 8) % 8;
    v.c[k % 4] = k < 4 ? 1 : -1;
    return v;
  }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool operator==(const Omega8 &other) const = default;

  Omega8 operator+(const Omega8 &o) const {
    Omega8 v;
    for (int i = 0; i < 4; ++i) v.c[i] = c[i] + o.c[i];
    return v;
  }
  Omega8 operator-(const Omega8 &o) const {
    Omega8 v;
    for (int i = 0; i < 4; ++i) v.c[i] = c[i] - o.c[i];
    return v;
  }
  Omega8 operator*(const Omega8 &o) const {
    Omega8 v;
    for (int i = 0; i < 4; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.c[j] == 0) continue;
        int k = i + j;
        int64_t term = c[i] * o.c[j];
        if (k >= 4) {
          k -= 4;
          term = -term;
        }
        v.c[k] += term;
      }
    }
    return v;
  }

  std::complex<double> to_complex() const {
    const double r = std::sqrt(0.5);
    const std::complex<double> w(r, r);
    std::complex<double> acc(static_cast<double>(c[0]), 0.0);
    acc += static_cast<double>(c[1]) * w;
    acc += static_cast<double>(c[2]) * std::complex<double>(0.0, 1.0);
    acc += static_cast<double>(c[3]) * std::complex<double>(-r, r);
    return acc;
  }
};

/// Dense matrix over Z[w]; exact equality, used as the unitary oracle.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  explicit CycloMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static CycloMatrix identity(std::size_t dim) {
    CycloMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Omega8::one();
    return m;
  }

  std::size_t dim() const { return dim_; }
  Omega8 &at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Omega8 &at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  bool operator==(const CycloMatrix &other) const = default;

  CycloMatrix operator*(const CycloMatrix &o) const {
    CycloMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        }
      }
    }
    return out;
  }

  CycloMatrix dagger() const {
    CycloMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        Omega8 v = at(j, i);
        // Conjugation maps w^k to w^{-k}: 1->1, w->-w^3, i->-i, w^3->-w.
        Omega8 conj;
        conj.c[0] = v.c[0];
        conj.c[1] = -v.c[3];
        conj.c[2] = -v.c[2];
        conj.c[3] = -v.c[1];
        out.at(i, j) = conj;
      }
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Omega8> data_;
};

}  // namespace hfg

#endif
