#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "homdil/algebra.hpp"
#include "homdil/dilation.hpp"
#include "oracles.hpp"

using namespace homdil;

namespace {

using Units = std::vector<std::pair<std::size_t, std::size_t>>;

Units column_major(std::size_t n) {
  Units u;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u.emplace_back(r, c);
  return u;
}

Units column_blocks(std::size_t n) {
  Units u;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r <= c; ++r) u.emplace_back(r, c);
  return u;
}

// Dual numbers Q[x]/(x^2): basis 1, x.
AlgebraPtr dual_numbers() {
  return custom_algebra(2, Vector{1, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {"1", "x"});
}

}  // namespace

TEST(Algebra, MatrixUnitOrdering) {
  const auto m2 = full_matrix_algebra(2);
  EXPECT_EQ(m2->labels(), (std::vector<std::string>{"E11", "E21", "E12", "E22"}));
  EXPECT_EQ(m2->unit(), (Vector{1, 0, 0, 1}));
  const auto t3 = upper_triangular_algebra(3);
  EXPECT_EQ(t3->labels(), (std::vector<std::string>{"E11", "E12", "E22", "E13", "E23", "E33"}));
  EXPECT_EQ(t3->unit(), (Vector{1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(m2->matrix_units()->units, column_major(2));
  EXPECT_EQ(t3->matrix_units()->units, column_blocks(3));
}

TEST(Algebra, BuiltinsValidate) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(validate_algebra(*full_matrix_algebra(n))) << n;
    EXPECT_TRUE(validate_algebra(*upper_triangular_algebra(n))) << n;
  }
  EXPECT_TRUE(validate_algebra(*dual_numbers()));
}

TEST(Algebra, MutatedConstantReportsTriple) {
  const auto m2 = full_matrix_algebra(2);
  std::vector<Rational> constants = m2->constants();
  // E12 E21 = E11 becomes 2 E11.
  const std::size_t e11 = 0, e21 = 1, e12 = 2;
  constants[(e12 * 4 + e21) * 4 + e11] = 2;
  const Algebra broken("broken", m2->labels(), constants, m2->unit());
  const AlgebraCheck check = validate_algebra(broken);
  ASSERT_FALSE(check);
  ASSERT_TRUE(check.triple);
  const auto [i, j, l] = *check.triple;
  EXPECT_NE(check.check.message.find("associativity fails on"), std::string::npos);
  // Independent recomputation of (g_i g_j) g_l vs g_i (g_j g_l) on the reported triple.
  const Vector gi = broken.basis_vector(i), gj = broken.basis_vector(j), gl = broken.basis_vector(l);
  EXPECT_NE(mul(broken, mul(broken, gi, gj), gl), mul(broken, gi, mul(broken, gj, gl)));
}

TEST(Algebra, WrongUnitRejected) {
  const auto m2 = full_matrix_algebra(2);
  const Algebra bad("bad", m2->labels(), m2->constants(), Vector{1, 0, 0, 0});
  const AlgebraCheck check = validate_algebra(bad);
  EXPECT_FALSE(check);
  EXPECT_FALSE(check.triple);
  EXPECT_NE(check.check.message.find("unit law"), std::string::npos);
}

TEST(Algebra, ConstructionErrors) {
  EXPECT_THROW(full_matrix_algebra(0), std::invalid_argument);
  EXPECT_THROW(custom_algebra(2, Vector{1}, {}), std::invalid_argument);
  EXPECT_THROW(custom_algebra(2, Vector{1, 0}, {{0, 0, 5, 1}}), std::invalid_argument);
}

TEST(Algebra, MulExamples) {
  const auto m2 = full_matrix_algebra(2);
  const auto e = [&](std::size_t i) { return m2->basis_vector(i); };
  EXPECT_EQ(mul(*m2, e(2), e(1)), e(0));           // E12 E21 = E11
  EXPECT_EQ(mul(*m2, e(1), e(2)), e(3));           // E21 E12 = E22
  EXPECT_EQ(mul(*m2, e(2), e(2)), Vector(4));      // E12 E12 = 0
  const auto t2 = upper_triangular_algebra(2);
  const auto f = [&](std::size_t i) { return t2->basis_vector(i); };
  EXPECT_EQ(mul(*t2, f(1), f(2)), f(1));           // E12 E22 = E12
  EXPECT_EQ(mul(*t2, f(2), f(1)), Vector(3));      // E22 E12 = 0
  const auto dn = dual_numbers();
  EXPECT_EQ(mul(*dn, Vector{0, 1}, Vector{0, 1}), Vector(2));
  EXPECT_EQ(mul(*dn, Vector{2, 3}, Vector{1, -1}), (Vector{2, 1}));
}

TEST(Algebra, MatrixRoundTrip) {
  const auto t2 = upper_triangular_algebra(2);
  const Matrix a{{1, 2}, {0, 3}};
  EXPECT_EQ(from_matrix(*t2, a), (Vector{1, 2, 3}));
  EXPECT_EQ(to_matrix(*t2, Vector{1, 2, 3}), a);
  EXPECT_THROW(from_matrix(*t2, Matrix{{1, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(to_matrix(*dual_numbers(), Vector{1, 0}), std::invalid_argument);
}

TEST(Algebra, MulMatchesMatrixProduct) {
  const auto m3 = full_matrix_algebra(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Vector x = seeded_random_vector(9, seed), y = seeded_random_vector(9, seed + 50);
    EXPECT_EQ(to_matrix(*m3, mul(*m3, x, y)), oracle::product(to_matrix(*m3, x), to_matrix(*m3, y)));
  }
}

TEST(Algebra, LeftRegularMatchesOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const bool full : {true, false}) {
      const auto alg = full ? full_matrix_algebra(n) : upper_triangular_algebra(n);
      const Units units = full ? column_major(n) : column_blocks(n);
      const Representation rep = left_regular_representation(alg);
      EXPECT_TRUE(validate_representation(rep));
      for (std::size_t i = 0; i < alg->dim(); ++i) {
        const Matrix expected = oracle::left_multiplication(n, units, oracle::unit(n, units[i].first, units[i].second));
        EXPECT_EQ(rep.pi[i], expected) << alg->name() << " " << alg->label(i);
        EXPECT_EQ(alg->left_multiplication(i), expected);
      }
    }
  }
}

TEST(Algebra, RightMultiplication) {
  const auto m2 = full_matrix_algebra(2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(m2->right_multiplication(i) * m2->basis_vector(j), mul(*m2, m2->basis_vector(j), m2->basis_vector(i)));
}
