#include "homdil/qlinalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "homdil/kernels.hpp"

namespace homdil {

namespace {

template <typename Eliminate>
RrefResult rref_with(Matrix m, Eliminate eliminate) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      auto a = m.row_span(pivot);
      auto b = m.row_span(row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    }
    eliminate(m, row, col);
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace dimension mismatch: ambient " + std::to_string(a.ambient_dim()) +
                                " vs " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

RrefResult rref(Matrix m) {
  return rref_with(std::move(m), [](Matrix& mm, std::size_t r, std::size_t c) { kernels::eliminate_column(mm, r, c); });
}

RrefResult rref_serial(Matrix m) {
  return rref_with(std::move(m),
                   [](Matrix& mm, std::size_t r, std::size_t c) { kernels::serial::eliminate_column(mm, r, c); });
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  return span_rows(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span_rows(std::size_t ambient_dim, const Matrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim) {
    throw std::invalid_argument("spanning vectors have length " + std::to_string(rows.cols()) +
                                ", expected " + std::to_string(ambient_dim));
  }
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  if (rows.rows() == 0) {
    s.basis_ = Matrix(0, ambient_dim);
    return s;
  }
  auto r = rref(rows);
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  s.basis_ = r.reduced.select_rows(keep);
  s.pivots_ = std::move(r.pivot_cols);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Matrix rows(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("spanning vector length mismatch");
    std::copy(vectors[i].begin(), vectors[i].end(), rows.row_span(i).begin());
  }
  return span_rows(ambient_dim, rows);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices) {
  Matrix rows(indices.size(), ambient_dim);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= ambient_dim) throw std::invalid_argument("coordinate index out of range");
    rows(i, indices[i]) = 1;
  }
  return span_rows(ambient_dim, rows);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector length does not match ambient dimension");
  Vector w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational f = w[pivots_[r]];
    if (homdil::is_zero(f)) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (!homdil::is_zero(basis_(r, c))) w[c] -= f * basis_(r, c);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return homdil::is_zero(x); });
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row_vector(r))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace image(const Matrix& m) { return Subspace::span_rows(m.rows(), m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::span_rows(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // c = (c1, c2) with a^T c1 = b^T c2 gives the common vector a^T c1.
  const Matrix system = hstack(a.basis().transpose(), b.basis().transpose() * Rational(-1));
  const Subspace coeffs = kernel(system);
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < coeffs.dim(); ++r) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational& c = coeffs.basis()(r, i);
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += c * a.basis()(i, j);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  SubspaceOps out;
  out.sum = sum(a, b);
  out.intersection = intersection(a, b);
  out.contains = a.contains(b);
  out.equals = a == b;
  return out;
}

Quotient quotient(std::size_t ambient_dim, const Subspace& k) {
  if (k.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient: subspace ambient dimension mismatch");
  const auto& pivots = k.pivots();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  Quotient q;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (!is_pivot[i]) q.coordinates.push_back(i);
  }
  const std::size_t qdim = q.coordinates.size();
  q.projection = Matrix(qdim, ambient_dim);
  q.section = Matrix(ambient_dim, qdim);
  for (std::size_t t = 0; t < qdim; ++t) {
    const std::size_t coord = q.coordinates[t];
    q.projection(t, coord) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) q.projection(t, pivots[r]) -= k.basis()(r, coord);
    q.section(coord, t) = 1;
  }
  return q;
}

Matrix induced_map(const Matrix& m, const Subspace& k_dom, const Subspace& k_cod) {
  if (m.cols() != k_dom.ambient_dim() || m.rows() != k_cod.ambient_dim()) {
    throw std::invalid_argument("induced_map: shape does not match subspaces");
  }
  for (std::size_t r = 0; r < k_dom.dim(); ++r) {
    if (!k_cod.contains(m * k_dom.basis().row_vector(r))) throw std::invalid_argument("map does not descend");
  }
  const Quotient dom = quotient(k_dom.ambient_dim(), k_dom);
  const Quotient cod = quotient(k_cod.ambient_dim(), k_cod);
  return cod.projection * m * dom.section;
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw std::invalid_argument("apply: shape mismatch");
  if (s.is_zero()) return Subspace::zero(m.rows());
  return Subspace::span_rows(m.rows(), (m * s.basis().transpose()).transpose());
}

Vector seeded_random_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Vector v(dim);
  for (auto& x : v) x = static_cast<long>(engine() % 21) - 10;
  return v;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const auto r = rref(hstack(a, b));
  for (auto p : r.pivot_cols) {
    if (p >= a.cols()) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r.pivot_cols[i], c) = r.reduced(i, a.cols() + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const auto r = rref(hstack(m, Matrix::identity(m.rows())));
  if (r.rank < m.rows() || (m.rows() > 0 && r.pivot_cols[m.rows() - 1] >= m.cols())) return std::nullopt;
  std::vector<std::size_t> right(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) right[i] = m.cols() + i;
  return r.reduced.select_columns(right);
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      auto a = m.row_span(pivot);
      auto b = m.row_span(col);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = 1 / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!is_zero(m(col, c))) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

}  // namespace homdil
