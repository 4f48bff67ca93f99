#include "hfg/phased_operator.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace hfg;

namespace {

PhasedCssOperator random_op(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<int> phase(0, 7), spow(0, 3), coin(0, 1);
  PhasedCssOperator op = PhasedCssOperator::identity(n).multiply_phase(phase(rng));
  BitVec a(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (coin(rng)) a.flip(q);
  }
  op = op * PhasedCssOperator::from_x(a);
  for (uint32_t q = 0; q < n; ++q) op = op * PhasedCssOperator::s_power(n, q, spow(rng));
  for (uint32_t p = 0; p < n; ++p) {
    for (uint32_t q = p + 1; q < n; ++q) {
      if (coin(rng)) op = op * PhasedCssOperator::cz(n, p, q);
    }
  }
  return op;
}

// Diagonal unitary with entry w^{exponent(z)} at |z>.
CycloMatrix diagonal_matrix(std::size_t n, const std::function<int(uint64_t)> &exponent) {
  CycloMatrix m(std::size_t{1} << n);
  for (uint64_t z = 0; z < m.dim(); ++z) m.at(z, z) = Omega8::from_power(exponent(z));
  return m;
}

CycloMatrix t_matrix(std::size_t n, uint32_t site, int sign) {
  return diagonal_matrix(n, [&](uint64_t z) {
    return ((z >> site) & 1) ? (sign > 0 ? 1 : -1) : 0;
  });
}

CycloMatrix ccz_matrix(std::size_t n, uint32_t i, uint32_t j, uint32_t k) {
  return diagonal_matrix(n, [&](uint64_t z) {
    bool all = ((z >> i) & 1) && ((z >> j) & 1) && ((z >> k) & 1);
    return all ? 4 : 0;
  });
}

CycloMatrix cx_matrix(std::size_t n, uint32_t control, uint32_t target) {
  CycloMatrix m(std::size_t{1} << n);
  for (uint64_t z = 0; z < m.dim(); ++z) {
    uint64_t out = ((z >> control) & 1) ? z ^ (uint64_t{1} << target) : z;
    m.at(out, z) = Omega8::one();
  }
  return m;
}

}  // namespace

TEST(ToMatrix, Trivials) {
  EXPECT_EQ(PhasedCssOperator::identity(1).to_matrix(), CycloMatrix::identity(2));

  CycloMatrix x(2);
  x.at(1, 0) = Omega8::one();
  x.at(0, 1) = Omega8::one();
  EXPECT_EQ(PhasedCssOperator::pauli_x(1, 0).to_matrix(), x);

  CycloMatrix cz = CycloMatrix::identity(4);
  cz.at(3, 3) = Omega8::from_power(4);  // diag(1,1,1,-1)
  EXPECT_EQ(PhasedCssOperator::cz(2, 0, 1).to_matrix(), cz);
}

TEST(Multiply, IdentityAndAnticommutation) {
  std::mt19937_64 rng(1);
  PhasedCssOperator a = random_op(rng, 3);
  EXPECT_EQ(a * PhasedCssOperator::identity(3), a);
  EXPECT_EQ(PhasedCssOperator::identity(3) * a, a);

  PhasedCssOperator x = PhasedCssOperator::pauli_x(1, 0);
  PhasedCssOperator z = PhasedCssOperator::pauli_z(1, 0);
  EXPECT_EQ(z * x, (x * z).multiply_phase(4));  // ZX = -XZ
}

TEST(Multiply, SqrtMinusIXSSquaresToIdentity) {
  // sqrt(-i) X S = w^7 X S; verified against the 2x2 oracle.
  PhasedCssOperator xs =
      PhasedCssOperator::pauli_x(1, 0).multiply_phase(7) * PhasedCssOperator::s_power(1, 0, 1);
  EXPECT_EQ(xs.to_matrix() * xs.to_matrix(), CycloMatrix::identity(2));
  EXPECT_TRUE((xs * xs).is_identity());
}

TEST(Multiply, HomomorphismAgainstDenseOracle) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> qubits(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = qubits(rng);
    PhasedCssOperator a = random_op(rng, n);
    PhasedCssOperator b = random_op(rng, n);
    EXPECT_EQ((a * b).to_matrix(), a.to_matrix() * b.to_matrix());
  }
}

TEST(Dagger, UnitarityAndOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    PhasedCssOperator a = random_op(rng, 3);
    EXPECT_TRUE((a * a.dagger()).is_identity());
    EXPECT_TRUE((a.dagger() * a).is_identity());
    EXPECT_EQ(a.dagger().to_matrix(), a.to_matrix().dagger());
  }
}

TEST(Commutator, SelfAndCzX) {
  std::mt19937_64 rng(44);
  PhasedCssOperator a = random_op(rng, 2);
  EXPECT_TRUE(a.commutator(a).is_identity());

  PhasedCssOperator cz = PhasedCssOperator::cz(2, 0, 1);
  PhasedCssOperator x0 = PhasedCssOperator::pauli_x(2, 0);
  EXPECT_EQ(cz.commutator(x0), PhasedCssOperator::pauli_z(2, 1));
  EXPECT_EQ(cz.commutator(x0).to_matrix(),
            cz.to_matrix() * x0.to_matrix() * cz.to_matrix().dagger() *
                x0.to_matrix().dagger());
}

TEST(Commutator, IdentityIffMatricesCommute) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 200; ++trial) {
    PhasedCssOperator a = random_op(rng, 3);
    PhasedCssOperator b = random_op(rng, 3);
    bool commute = a.to_matrix() * b.to_matrix() == b.to_matrix() * a.to_matrix();
    EXPECT_EQ(a.commutator(b).is_identity(), commute);
  }
}

TEST(ConjugateByT, OracleFixesPhases) {
  EXPECT_TRUE(PhasedCssOperator::identity(1).conjugate_by_t(0, +1).is_identity());

  PhasedCssOperator x0 = PhasedCssOperator::pauli_x(1, 0);
  for (int sign : {+1, -1}) {
    PhasedCssOperator conj = x0.conjugate_by_t(0, sign);
    CycloMatrix t = t_matrix(1, 0, sign);
    EXPECT_EQ(conj.to_matrix(), t * x0.to_matrix() * t.dagger());
  }
  // T X T^dag = w X S^dag, with the w and the S power pinned by the oracle.
  PhasedCssOperator expected =
      PhasedCssOperator::pauli_x(1, 0).multiply_phase(1) * PhasedCssOperator::s_power(1, 0, 3);
  EXPECT_EQ(x0.conjugate_by_t(0, +1), expected);

  PhasedCssOperator z0 = PhasedCssOperator::pauli_z(1, 0);
  EXPECT_EQ(z0.conjugate_by_t(0, +1), z0);
}

TEST(ConjugateByT, RandomOpsMatchOracle) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    PhasedCssOperator a = random_op(rng, 3);
    for (int sign : {+1, -1}) {
      CycloMatrix t = t_matrix(3, 1, sign);
      EXPECT_EQ(a.conjugate_by_t(1, sign).to_matrix(), t * a.to_matrix() * t.dagger());
    }
  }
}

TEST(ConjugateByCcz, TextbookAndOracle) {
  PhasedCssOperator x0 = PhasedCssOperator::pauli_x(3, 0);
  PhasedCssOperator expected = x0 * PhasedCssOperator::cz(3, 1, 2);
  EXPECT_EQ(x0.conjugate_by_ccz(0, 1, 2), expected);

  PhasedCssOperator z0 = PhasedCssOperator::pauli_z(3, 0);
  EXPECT_EQ(z0.conjugate_by_ccz(0, 1, 2), z0);

  std::mt19937_64 rng(47);
  CycloMatrix ccz = ccz_matrix(3, 0, 1, 2);
  PhasedCssOperator x01 = PhasedCssOperator::from_x(BitVec(3, {0, 1}));
  EXPECT_EQ(x01.conjugate_by_ccz(0, 1, 2).to_matrix(),
            ccz * x01.to_matrix() * ccz.dagger());
  for (int trial = 0; trial < 100; ++trial) {
    PhasedCssOperator a = random_op(rng, 3);
    EXPECT_EQ(a.conjugate_by_ccz(0, 1, 2).to_matrix(), ccz * a.to_matrix() * ccz.dagger());
  }
}

TEST(ConjugateByCx, MatchesOracle) {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 200; ++trial) {
    PhasedCssOperator a = random_op(rng, 3);
    for (auto [c, t] : {std::pair<uint32_t, uint32_t>{0, 1}, {1, 0}, {2, 1}}) {
      CycloMatrix cx = cx_matrix(3, c, t);
      EXPECT_EQ(a.conjugate_by_cx(c, t).to_matrix(), cx * a.to_matrix() * cx.dagger());
    }
  }
}

TEST(HermitianInvolution, Cases) {
  EXPECT_TRUE(PhasedCssOperator::from_x(BitVec(2, {0, 1})).is_hermitian_involution());
  EXPECT_TRUE(
      PhasedCssOperator::pauli_x(1, 0).multiply_phase(4).is_hermitian_involution());  // -X

  PhasedCssOperator xs =
      PhasedCssOperator::pauli_x(1, 0).multiply_phase(7) * PhasedCssOperator::s_power(1, 0, 1);
  EXPECT_TRUE(xs.is_hermitian_involution());
  EXPECT_EQ(xs.to_matrix(), xs.to_matrix().dagger());

  EXPECT_FALSE(PhasedCssOperator::s_power(1, 0, 1).is_hermitian_involution());
  EXPECT_FALSE(PhasedCssOperator::pauli_x(1, 0).multiply_phase(2).is_hermitian_involution());
}

TEST(Embedding, PreservesAction) {
  std::mt19937_64 rng(49);
  PhasedCssOperator a = random_op(rng, 2);
  PhasedCssOperator padded = a.padded(3);
  EXPECT_EQ(padded.to_matrix() * PhasedCssOperator::pauli_x(3, 2).to_matrix(),
            PhasedCssOperator::pauli_x(3, 2).to_matrix() * padded.to_matrix());
  // Remap qubits 0,1 -> 2,0.
  PhasedCssOperator mapped = a.embedded(3, {2, 0});
  EXPECT_EQ(mapped.x_part().get(2), a.x_part().get(0));
  EXPECT_EQ(mapped.linear_part()[0], a.linear_part()[1]);
}

TEST(TextForm, Readable) {
  PhasedCssOperator op = PhasedCssOperator::from_x(BitVec(5, {0, 4})).multiply_phase(3) *
                         PhasedCssOperator::s_power(5, 2, 1) * PhasedCssOperator::cz(5, 1, 3);
  EXPECT_EQ(op.to_string(), "w^3 X{0,4} S{2:1} CZ{(1,3)}");
  EXPECT_EQ(PhasedCssOperator::identity(2).to_string(), "I");
}
