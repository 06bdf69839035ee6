#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homdil/algebra.hpp"
#include "homdil/check.hpp"
#include "homdil/linsys.hpp"
#include "homdil/matrix.hpp"
#include "homdil/qlinalg.hpp"

namespace homdil {

/// A unital algebra homomorphism into L(W), one dim_w x dim_w matrix per basis element.
struct Representation {
  AlgebraPtr algebra;
  std::size_t dim_w = 0;
  std::vector<Matrix> pi;

  /// pi(a) for a given in algebra coordinates.
  Matrix at(const Vector& a) const;
};

Check validate_representation(const Representation& rep);

/// x -> g_i x on the algebra itself.
Representation left_regular_representation(const AlgebraPtr& algebra);

/// The quadruple (pi, S, T, W): S is the dim_v x dim_w synthesis operator,
/// T the dim_w x dim_v analysis operator.
struct DilationSystem {
  Representation rep;
  Matrix s;
  Matrix t;

  std::size_t dim_w() const { return rep.dim_w; }
};

/// Representation laws, S pi(g_i) T = phi(g_i) on every basis element,
/// T injective, S surjective. The message names the first failing law.
Check validate_dilation(const DilationSystem& d, const LinearSystem& sys);

/// Columns pi(g_i) T e_j, ordered i * dim_v + j (the universal basis order).
Matrix spanning_map(const DilationSystem& d);

/// span{pi(A) T V} = W.
bool is_linearly_minimal(const DilationSystem& d);

/// W = A (x) V with basis g_i (x) e_j at index i * dim_v + j.
DilationSystem universal_dilation(const LinearSystem& sys);

/// W = span{alpha_{a,x} : b -> phi(b a) x} inside Hom(A, V). The basis of W is
/// the first linearly independent subfamily of alpha_{g_i, e_j} taken in
/// universal order.
DilationSystem canonical_dilation(const LinearSystem& sys);

bool is_invariant(const Representation& rep, const Subspace& k);
Subspace invariant_closure(const Representation& rep, std::span<const Vector> seeds);

/// Largest pi-invariant subspace contained in k0, by the descending iteration
/// K_{m+1} = {w in K_m : pi(g_i) w in K_m for all i}.
Subspace maximal_invariant_subspace(const Representation& rep, const Subspace& k0);
/// Largest pi-invariant subspace of ker(s): the joint kernel of s pi(g_i).
Subspace maximal_invariant_subspace_in_kernel(const Representation& rep, const Matrix& s);

/// Quotient dilation on W/K. Throws std::invalid_argument if K is not
/// invariant or not inside ker S.
DilationSystem reduce(const DilationSystem& d, const Subspace& k);

bool is_irreducible(const DilationSystem& d);

/// The universal dilation reduced by its maximal invariant subspace of ker S.
DilationSystem principle_dilation(const LinearSystem& sys);

/// Permutation matrix P sending algebra-major coordinates (i * dim_v + j) of
/// A (x) V to vector-major ones (j * dim_a + i), the layout several worked
/// examples display.
Matrix tensor_permutation(std::size_t dim_a, std::size_t dim_v);

/// Same system in new coordinates w' = P w for an invertible P.
DilationSystem change_basis(const DilationSystem& d, const Matrix& p);

}  // namespace homdil
