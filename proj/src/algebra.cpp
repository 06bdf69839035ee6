#include "homdil/algebra.hpp"

#include <stdexcept>

namespace homdil {

namespace {

std::string unit_label(std::size_t r, std::size_t c, std::size_t n) {
  if (n < 10) return "E" + std::to_string(r + 1) + std::to_string(c + 1);
  return "E" + std::to_string(r + 1) + "," + std::to_string(c + 1);
}

AlgebraPtr matrix_unit_algebra(std::string name, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> units) {
  const std::size_t dim = units.size();
  std::vector<Rational> constants(dim * dim * dim);
  std::vector<std::string> labels;
  std::vector<std::vector<std::ptrdiff_t>> index(n, std::vector<std::ptrdiff_t>(n, -1));
  for (std::size_t i = 0; i < dim; ++i) {
    index[units[i].first][units[i].second] = static_cast<std::ptrdiff_t>(i);
    labels.push_back(unit_label(units[i].first, units[i].second, n));
  }
  // E_ab E_cd = [b == c] E_ad
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (units[i].second != units[j].first) continue;
      const auto k = index[units[i].first][units[j].second];
      if (k < 0) throw std::logic_error("matrix-unit basis not closed under multiplication");
      constants[(i * dim + j) * dim + static_cast<std::size_t>(k)] = 1;
    }
  }
  Vector unit(dim);
  for (std::size_t d = 0; d < n; ++d) {
    const auto k = index[d][d];
    if (k < 0) throw std::logic_error("matrix-unit basis lacks a diagonal unit");
    unit[static_cast<std::size_t>(k)] = 1;
  }
  return std::make_shared<const Algebra>(std::move(name), std::move(labels), std::move(constants), std::move(unit),
                                         MatrixUnitLayout{n, std::move(units)});
}

}  // namespace

Algebra::Algebra(std::string name, std::vector<std::string> labels, std::vector<Rational> constants, Vector unit,
                 std::optional<MatrixUnitLayout> layout)
    : name_(std::move(name)),
      dim_(unit.size()),
      labels_(std::move(labels)),
      constants_(std::move(constants)),
      unit_(std::move(unit)),
      layout_(std::move(layout)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be at least 1");
  if (constants_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure constant tensor has wrong size");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("g" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw std::invalid_argument("label count does not match algebra dimension");
  if (layout_ && layout_->units.size() != dim_) throw std::invalid_argument("matrix-unit layout size mismatch");
}

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim_);
  v.at(i) = 1;
  return v;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
  return m;
}

Matrix Algebra::right_multiplication(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(j, i, k);
  return m;
}

AlgebraCheck validate_algebra(const Algebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = 0; m < d; ++m) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < d; ++k) {
            if (!is_zero(a.constant(i, j, k))) lhs += a.constant(i, j, k) * a.constant(k, l, m);
            if (!is_zero(a.constant(j, l, k))) rhs += a.constant(j, l, k) * a.constant(i, k, m);
          }
          if (lhs != rhs) {
            return {Check::fail("associativity fails on (" + a.label(i) + ", " + a.label(j) + ", " + a.label(l) + ")"),
                    std::array<std::size_t, 3>{i, j, l}};
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      Rational left = 0, right = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (is_zero(a.unit()[j])) continue;
        left += a.unit()[j] * a.constant(j, i, k);
        right += a.unit()[j] * a.constant(i, j, k);
      }
      const Rational expected = i == k ? 1 : 0;
      if (left != expected) return {Check::fail("left unit law fails on " + a.label(i)), std::nullopt};
      if (right != expected) return {Check::fail("right unit law fails on " + a.label(i)), std::nullopt};
    }
  }
  return {Check::pass(), std::nullopt};
}

Vector mul(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t d = a.dim();
  if (x.size() != d || y.size() != d) {
    throw std::invalid_argument("mul: coordinate length mismatch (expected " + std::to_string(d) + ")");
  }
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!is_zero(a.constant(i, j, k))) out[k] += xy * a.constant(i, j, k);
      }
    }
  }
  return out;
}

AlgebraPtr full_matrix_algebra(std::size_t n) {
  if (n == 0) throw std::invalid_argument("full_matrix_algebra: n must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) units.emplace_back(r, c);
  return matrix_unit_algebra("M" + std::to_string(n), n, std::move(units));
}

AlgebraPtr upper_triangular_algebra(std::size_t n) {
  if (n == 0) throw std::invalid_argument("upper_triangular_algebra: n must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r <= c; ++r) units.emplace_back(r, c);
  return matrix_unit_algebra("T" + std::to_string(n), n, std::move(units));
}

AlgebraPtr custom_algebra(std::size_t dim, Vector unit, const std::vector<StructureConstant>& constants,
                          std::vector<std::string> labels) {
  if (dim == 0) throw std::invalid_argument("custom algebra: dim must be at least 1");
  if (unit.size() != dim) throw std::invalid_argument("custom algebra: unit has wrong length");
  std::vector<Rational> tensor(dim * dim * dim);
  for (const auto& sc : constants) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim) {
      throw std::invalid_argument("custom algebra: structure constant index out of range");
    }
    tensor[(sc.i * dim + sc.j) * dim + sc.k] = sc.value;
  }
  return std::make_shared<const Algebra>("custom" + std::to_string(dim), std::move(labels), std::move(tensor),
                                         std::move(unit));
}

Matrix to_matrix(const Algebra& a, const Vector& coords) {
  const auto& layout = a.matrix_units();
  if (!layout) throw std::invalid_argument("algebra " + a.name() + " has no matrix-unit layout");
  if (coords.size() != a.dim()) throw std::invalid_argument("to_matrix: coordinate length mismatch");
  Matrix m(layout->n, layout->n);
  for (std::size_t i = 0; i < a.dim(); ++i) m(layout->units[i].first, layout->units[i].second) = coords[i];
  return m;
}

Vector from_matrix(const Algebra& a, const Matrix& m) {
  const auto& layout = a.matrix_units();
  if (!layout) throw std::invalid_argument("algebra " + a.name() + " has no matrix-unit layout");
  if (m.rows() != layout->n || m.cols() != layout->n) throw std::invalid_argument("from_matrix: size mismatch");
  Vector coords(a.dim());
  Matrix rest = m;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto [r, c] = layout->units[i];
    coords[i] = m(r, c);
    rest(r, c) = 0;
  }
  if (!rest.is_zero()) throw std::invalid_argument("matrix does not lie in algebra " + a.name());
  return coords;
}

}  // namespace homdil
