#include <gtest/gtest.h>

#include <json.hpp>

#include "homdil/algebra.hpp"
#include "homdil/dilation.hpp"
#include "homdil/linsys.hpp"
#include "homdil/report.hpp"
#include "oracles.hpp"

using namespace homdil;
using nlohmann::json;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Subspace coords(std::size_t n, std::vector<std::size_t> one_based) {
  for (auto& i : one_based) --i;
  return Subspace::coordinate(n, one_based);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

LinearSystem trace_m2() { return builtin_system("normalized_trace", {{"algebra", "full_matrix"}, {"n", 2}}); }
LinearSystem trace_t(int n) { return builtin_system("normalized_trace", {{"algebra", "upper_triangular"}, {"n", n}}); }
LinearSystem transpose_t2() { return builtin_system("transpose_t_to_m", {{"n", 2}}); }

std::vector<LinearSystem> sample_systems() {
  return {trace_m2(),
          trace_t(2),
          trace_t(3),
          transpose_t2(),
          builtin_system("transpose_t_to_m", {{"n", 3}}),
          builtin_system("transpose", {{"n", 2}}),
          builtin_system("scaled_trace_identity", {{"n", 2}}),
          builtin_system("diag_map_d"),
          builtin_system("diag_map_phi"),
          bundled_system("4.6/tau.json")};
}

}  // namespace

TEST(Universal, MatchesTensorFormula) {
  for (const auto& sys : sample_systems()) {
    const DilationSystem u = universal_dilation(sys);
    const std::size_t da = sys.dim_a(), dv = sys.dim_v;
    ASSERT_EQ(u.dim_w(), da * dv);
    for (std::size_t i = 0; i < da; ++i)
      EXPECT_EQ(u.rep.pi[i], kron(sys.algebra->left_multiplication(i), Matrix::identity(dv)));
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t r = 0; r < dv; ++r) EXPECT_EQ(u.s(r, i * dv + j), sys.phi[i](r, j));
    EXPECT_EQ(u.t, kron(Matrix::column(sys.algebra->unit()), Matrix::identity(dv)));
    EXPECT_TRUE(validate_dilation(u, sys)) << validate_dilation(u, sys).message;
    EXPECT_TRUE(is_linearly_minimal(u));
    EXPECT_EQ(rank(spanning_map(u)), u.dim_w());
  }
}

TEST(Canonical, MinimalIrreducibleAndPrinciple) {
  for (const auto& sys : sample_systems()) {
    const DilationSystem c = canonical_dilation(sys);
    const DilationSystem p = principle_dilation(sys);
    EXPECT_TRUE(validate_dilation(c, sys)) << validate_dilation(c, sys).message;
    EXPECT_TRUE(is_linearly_minimal(c));
    EXPECT_TRUE(is_irreducible(c));
    EXPECT_TRUE(is_irreducible(p));
    EXPECT_EQ(c.dim_w(), p.dim_w());
    const DilationSystem u = universal_dilation(sys);
    EXPECT_EQ(u.dim_w() - maximal_invariant_subspace(u.rep, kernel(u.s)).dim(), c.dim_w());
  }
}

TEST(Canonical, Dimensions) {
  EXPECT_EQ(canonical_dilation(trace_m2()).dim_w(), 4u);
  EXPECT_EQ(canonical_dilation(trace_t(2)).dim_w(), 2u);
  EXPECT_EQ(canonical_dilation(trace_t(3)).dim_w(), 3u);
  EXPECT_EQ(canonical_dilation(transpose_t2()).dim_w(), 4u);
  EXPECT_EQ(canonical_dilation(builtin_system("transpose_t_to_m", {{"n", 3}})).dim_w(), 10u);
  EXPECT_EQ(canonical_dilation(bundled_system("4.6/tau.json")).dim_w(), 8u);
  EXPECT_EQ(canonical_dilation(bundled_system("4.6/sigma.json")).dim_w(), 8u);
}

TEST(Canonical, TraceOnT2EqualsDisplay) {
  const auto sys = trace_t(2);
  const auto c = canonical_dilation(sys);
  const auto shown = bundled_dilation("4.5i/canonical.json", sys);
  EXPECT_EQ(c.rep.pi, shown.rep.pi);
  EXPECT_EQ(c.s, shown.s);
  EXPECT_EQ(c.t, shown.t);
}

TEST(Invariant, MaximalSubspaceExamples) {
  const auto u45i = universal_dilation(trace_t(2));
  EXPECT_EQ(maximal_invariant_subspace(u45i.rep, kernel(u45i.s)), coords(3, {2}));
  const auto u45ii = universal_dilation(trace_t(3));
  EXPECT_EQ(kernel(u45ii.s).dim(), 5u);
  EXPECT_EQ(maximal_invariant_subspace(u45ii.rep, kernel(u45ii.s)), coords(6, {2, 4, 5}));
  const auto u44 = universal_dilation(trace_m2());
  EXPECT_TRUE(maximal_invariant_subspace(u44.rep, kernel(u44.s)).is_zero());
}

TEST(Invariant, FixedPointAgreesWithJointKernel) {
  for (const auto& sys : sample_systems()) {
    const auto u = universal_dilation(sys);
    const Subspace m = maximal_invariant_subspace(u.rep, kernel(u.s));
    EXPECT_EQ(m, maximal_invariant_subspace_in_kernel(u.rep, u.s));
    EXPECT_TRUE(is_invariant(u.rep, m));
    EXPECT_TRUE(kernel(u.s).contains(m));
  }
}

TEST(Invariant, TransposeClosureInDisplayBasis) {
  const auto sys = transpose_t2();
  const auto shown = change_basis(universal_dilation(sys), tensor_permutation(3, 2));
  const Subspace e3 = coords(6, {3});
  EXPECT_FALSE(is_invariant(shown.rep, e3));
  const std::vector<Vector> seeds = e3.basis_vectors();
  EXPECT_EQ(invariant_closure(shown.rep, seeds), coords(6, {2, 3}));
  EXPECT_EQ(maximal_invariant_subspace(shown.rep, kernel(shown.s)), coords(6, {4, 5}));
}

TEST(Invariant, ClosureIsSmallestInvariant) {
  const auto u = universal_dilation(trace_t(3));
  const std::vector<Vector> seeds = {Vector{0, 0, 0, 0, 1, 0}};
  const Subspace c = invariant_closure(u.rep, seeds);
  EXPECT_TRUE(is_invariant(u.rep, c));
  // E23 generates {E13, E23} under left multiplication by T3.
  EXPECT_EQ(c, coords(6, {4, 5}));
}

TEST(Reduce, QuotientByPlaneGivesDisplayedPi4) {
  const auto sys = trace_t(3);
  const auto r = reduce(universal_dilation(sys), coords(6, {2, 4}));
  const auto shown = bundled_dilation("4.5ii/pi4.json", sys);
  EXPECT_EQ(r.rep.pi, shown.rep.pi);
  EXPECT_EQ(r.s, shown.s);
  EXPECT_EQ(r.t, shown.t);
  EXPECT_TRUE(validate_dilation(r, sys));
  EXPECT_TRUE(is_linearly_minimal(r));
  EXPECT_FALSE(is_irreducible(r));
}

TEST(Reduce, Rejections) {
  const auto u = universal_dilation(trace_t(3));
  EXPECT_THROW(reduce(u, coords(6, {3})), std::invalid_argument);       // E22 not invariant
  EXPECT_THROW(reduce(u, coords(6, {1, 2, 3, 4, 5, 6})), std::invalid_argument);  // not in ker S
  EXPECT_THROW(reduce(u, Subspace::zero(5)), std::invalid_argument);
}

TEST(Validate, DetectsEachFailure) {
  const auto sys = trace_t(2);
  const auto c = canonical_dilation(sys);

  auto bad_shape = c;
  bad_shape.s = Matrix(1, 3);
  EXPECT_NE(validate_dilation(bad_shape, sys).message.find("S has shape 1x3, expected 1x2"), std::string::npos);

  auto bad_t = c;
  bad_t.t = Matrix(1, 1);
  EXPECT_NE(validate_dilation(bad_t, sys).message.find("T has shape"), std::string::npos);

  auto not_mult = c;
  not_mult.rep.pi[1] = Matrix{{0, 1}, {1, 0}};
  EXPECT_NE(validate_dilation(not_mult, sys).message.find("not multiplicative"), std::string::npos);

  auto not_unital = c;
  not_unital.rep.pi[0] = Matrix::identity(2);
  EXPECT_FALSE(validate_dilation(not_unital, sys));

  auto wrong_s = c;
  wrong_s.s = wrong_s.s * q(2);
  const Check k = validate_dilation(wrong_s, sys);
  EXPECT_FALSE(k);
  EXPECT_NE(k.message.find("dilation identity fails at E11"), std::string::npos);

  const Check other = validate_dilation(c, trace_m2());
  EXPECT_NE(other.message.find("different algebra"), std::string::npos);
}

TEST(Minimality, PaddedDilationIsNotMinimal) {
  const auto sys = trace_t(2);
  const auto c = canonical_dilation(sys);
  // Pad with the character A -> A11 (E11 -> 1, E12 -> 0, E22 -> 0).
  DilationSystem padded = c;
  padded.rep.dim_w = 3;
  const Rational chi[] = {1, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) padded.rep.pi[i] = direct_sum(c.rep.pi[i], Matrix{{chi[i]}});
  padded.s = hstack(c.s, Matrix(1, 1));
  padded.t = vstack(c.t, Matrix(1, 1));
  EXPECT_TRUE(validate_dilation(padded, sys)) << validate_dilation(padded, sys).message;
  EXPECT_FALSE(is_linearly_minimal(padded));
}

TEST(Irreducible, UniversalVersusCanonical) {
  EXPECT_FALSE(is_irreducible(universal_dilation(trace_t(2))));
  EXPECT_TRUE(is_irreducible(universal_dilation(trace_m2())));
}

TEST(TensorPermutation, MapsAlgebraMajorToVectorMajor) {
  const std::size_t da = 3, dv = 2;
  const Matrix p = tensor_permutation(da, dv);
  EXPECT_EQ(oracle::product(p, p.transpose()), Matrix::identity(6));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dv; ++j) {
      Vector e(6);
      e[i * dv + j] = 1;
      Vector expected(6);
      expected[j * da + i] = 1;
      EXPECT_EQ(p * e, expected);
    }
}

TEST(ChangeBasis, PreservesValidity) {
  const auto sys = transpose_t2();
  const auto u = universal_dilation(sys);
  const Matrix p{{1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0},
                 {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, -1}, {0, 0, 0, 0, 0, 1}};
  const auto d = change_basis(u, p);
  EXPECT_TRUE(validate_dilation(d, sys));
  EXPECT_EQ(d.s * p, u.s);
  EXPECT_EQ(d.t, p * u.t);
  EXPECT_THROW(change_basis(u, Matrix(6, 6)), std::invalid_argument);
}

TEST(Representation, AtIsLinear) {
  const auto rep = left_regular_representation(upper_triangular_algebra(2));
  EXPECT_EQ(rep.at(Vector{1, 2, 3}), rep.pi[0] + 2 * rep.pi[1] + 3 * rep.pi[2]);
  EXPECT_THROW(rep.at(Vector{1}), std::invalid_argument);
}
