#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homdil/dilation.hpp"
#include "homdil/poly.hpp"

namespace homdil {

/// Bijective R : W1 -> W2 with R T1 = T2, S2 R = S1, R pi1(g) = pi2(g) R.
struct EquivalenceWitness {
  Matrix r;
};

/// Kernel of the spanning map: the pi_u-invariant subspace of A (x) V whose
/// quotient reproduces d. Throws std::invalid_argument if d is not linearly
/// minimal; throws std::logic_error if the result is not pi_u-invariant
/// inside ker S_u.
Subspace reduced_subspace(const DilationSystem& d, const LinearSystem& sys);

/// Witness if the two dilations have the same reduced subspace, else nullopt.
/// Both must validate against sys and be linearly minimal.
std::optional<EquivalenceWitness> are_equivalent(const DilationSystem& d1, const DilationSystem& d2,
                                                 const LinearSystem& sys);

/// Checks every equivalence-witness condition; the message names the first failure.
Check check_witness(const EquivalenceWitness& w, const DilationSystem& d1, const DilationSystem& d2);

/// Basis of {X : pi2(g) X = X pi1(g) for all g}.
std::vector<Matrix> intertwiner_space(const Representation& rep1, const Representation& rep2);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct InvertibilityVerdict {
  Verdict verdict = Verdict::no;
  std::optional<Matrix> witness;
  std::size_t trials = 0;   // random combinations tried
  bool exact = false;       // decided by the exhaustive grid
};

/// Does span(basis) contain an invertible matrix? Exact for small spaces
/// (dimension <= 3, size <= 8) via a grid of (n+1)^m points, which suffices
/// because det of a combination has degree <= n in each coefficient; else up
/// to 32 seeded random combinations.
InvertibilityVerdict contains_invertible(const std::vector<Matrix>& basis, std::uint64_t seed);

inline constexpr std::size_t kRandomInvertibilityTrials = 32;

struct StrongIsomorphismVerdict {
  Verdict verdict = Verdict::no;
  std::string reason;
  /// Isomorphism R of W = A (x) V with R(K1) = K2 and pi_u R - R pi_u
  /// landing in K2; present when verdict is yes.
  std::optional<Matrix> r;
  std::optional<Matrix> quotient_intertwiner;
};

/// K1, K2 strongly isomorphic, i.e. the quotient representations of pi_u on
/// W/K1 and W/K2 are equivalent. Throws std::invalid_argument unless both are
/// pi_u-invariant subspaces of ker S_u.
StrongIsomorphismVerdict are_strongly_isomorphic(const Subspace& k1, const Subspace& k2, const LinearSystem& sys,
                                                 std::uint64_t seed = 0);

/// A maximal subspace on which every pi(g_i) acts as the scalar character[i].
struct CharacterLine {
  Vector character;
  Subspace eigenspace;
};

/// Part of `within` where some generator's restricted characteristic
/// polynomial has no rational roots.
struct UnresolvedFactor {
  std::size_t generator = 0;
  Polynomial factor;
  Subspace subspace;
};

struct CharacterLines {
  std::vector<CharacterLine> lines;
  std::vector<UnresolvedFactor> unresolved;
};

/// Every invariant line of rep inside `within` with a rational character lies
/// in exactly one returned eigenspace. Throws if `within` is not invariant.
CharacterLines character_lines(const Representation& rep, const Subspace& within);

/// True iff the universal dilation has no nonzero invariant subspace in ker S_u.
/// For dim_v = 1 this is cross-checked against largest_left_ideal_in_kernel.
bool has_unique_dilation_class(const LinearSystem& sys);

}  // namespace homdil
