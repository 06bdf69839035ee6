#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homdil/matrix.hpp"

namespace homdil {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form. Uses the dispatching elimination kernel.
RrefResult rref(Matrix m);
/// Same result computed with the serial kernel only.
RrefResult rref_serial(Matrix m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n stored by its canonical basis: the nonzero rows of
/// the RREF of any spanning set. Equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);
  /// Span of the rows of `rows` (rows.cols() must equal ambient_dim).
  static Subspace span_rows(std::size_t ambient_dim, const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  /// Span of coordinate vectors e_i for the listed indices.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space of m as a subspace of Q^{m.rows()}.
Subspace image(const Matrix& m);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // a contains b
  bool equals = false;
};

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Quotient Q^n / k in coordinates given by the non-pivot columns of k's
/// canonical basis. projection has kernel exactly k; projection * section = I.
struct Quotient {
  Matrix projection;
  Matrix section;
  std::vector<std::size_t> coordinates;
};

Quotient quotient(std::size_t ambient_dim, const Subspace& k);

/// The map induced by m : Q^n/k_dom -> Q^p/k_cod in quotient coordinates.
/// Throws std::invalid_argument("map does not descend") if m(k_dom) is not
/// contained in k_cod.
Matrix induced_map(const Matrix& m, const Subspace& k_dom, const Subspace& k_cod);

/// Image of a subspace under m.
Subspace apply(const Matrix& m, const Subspace& s);

/// Deterministic integer vector with entries in [-10, 10].
Vector seeded_random_vector(std::size_t dim, std::uint64_t seed);

/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);

}  // namespace homdil
