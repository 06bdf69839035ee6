#include "homdil/dilation.hpp"

#include <stdexcept>

namespace homdil {

Matrix Representation::at(const Vector& a) const {
  if (a.size() != pi.size()) throw std::invalid_argument("representation: coordinate length mismatch");
  Matrix out(dim_w, dim_w);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i])) out += pi[i] * a[i];
  }
  return out;
}

Check validate_representation(const Representation& rep) {
  if (!rep.algebra) return Check::fail("representation has no algebra");
  const Algebra& alg = *rep.algebra;
  if (rep.pi.size() != alg.dim()) {
    return Check::fail("pi has " + std::to_string(rep.pi.size()) + " matrices, algebra has dimension " +
                       std::to_string(alg.dim()));
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (rep.pi[i].rows() != rep.dim_w || rep.pi[i].cols() != rep.dim_w) {
      return Check::fail("pi(" + alg.label(i) + ") is not " + std::to_string(rep.dim_w) + "x" +
                         std::to_string(rep.dim_w));
    }
  }
  if (!rep.at(alg.unit()).is_identity()) return Check::fail("pi is not unital: pi(I) != identity");
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix expected(rep.dim_w, rep.dim_w);
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (!is_zero(alg.constant(i, j, k))) expected += rep.pi[k] * alg.constant(i, j, k);
      }
      if (rep.pi[i] * rep.pi[j] != expected) {
        return Check::fail("pi is not multiplicative on (" + alg.label(i) + ", " + alg.label(j) + ")");
      }
    }
  }
  return Check::pass();
}

Representation left_regular_representation(const AlgebraPtr& algebra) {
  Representation rep{algebra, algebra->dim(), {}};
  for (std::size_t i = 0; i < algebra->dim(); ++i) rep.pi.push_back(algebra->left_multiplication(i));
  return rep;
}

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  return &a == &b || (a.dim() == b.dim() && a.constants() == b.constants() && a.unit() == b.unit());
}

}  // namespace

Check validate_dilation(const DilationSystem& d, const LinearSystem& sys) {
  const std::size_t n = d.dim_w();
  if (!d.rep.algebra || !same_algebra(*d.rep.algebra, *sys.algebra)) {
    return Check::fail("representation is over a different algebra than the system");
  }
  if (d.s.rows() != sys.dim_v || d.s.cols() != n) {
    return Check::fail("S has shape " + std::to_string(d.s.rows()) + "x" + std::to_string(d.s.cols()) +
                       ", expected " + std::to_string(sys.dim_v) + "x" + std::to_string(n));
  }
  if (d.t.rows() != n || d.t.cols() != sys.dim_v) {
    return Check::fail("T has shape " + std::to_string(d.t.rows()) + "x" + std::to_string(d.t.cols()) +
                       ", expected " + std::to_string(n) + "x" + std::to_string(sys.dim_v));
  }
  if (auto rep_check = validate_representation(d.rep); !rep_check) return rep_check;

  std::string failures;
  auto note = [&](const std::string& why) { failures += (failures.empty() ? "" : "; ") + why; };
  for (std::size_t i = 0; i < sys.dim_a(); ++i) {
    if (d.s * d.rep.pi[i] * d.t != sys.phi[i]) {
      note("dilation identity fails at " + sys.algebra->label(i));
      break;
    }
  }
  if (rank(d.t) != sys.dim_v) note("T not injective");
  if (rank(d.s) != sys.dim_v) note("S not surjective");
  return failures.empty() ? Check::pass() : Check::fail(failures);
}

Matrix spanning_map(const DilationSystem& d) {
  const std::size_t dv = d.t.cols();
  const std::size_t da = d.rep.pi.size();
  Matrix out(d.dim_w(), da * dv);
  for (std::size_t i = 0; i < da; ++i) {
    const Matrix cols = d.rep.pi[i] * d.t;
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t r = 0; r < d.dim_w(); ++r) out(r, i * dv + j) = cols(r, j);
  }
  return out;
}

bool is_linearly_minimal(const DilationSystem& d) { return rank(spanning_map(d)) == d.dim_w(); }

DilationSystem universal_dilation(const LinearSystem& sys) {
  const Algebra& alg = *sys.algebra;
  const std::size_t da = alg.dim();
  const std::size_t dv = sys.dim_v;
  const std::size_t n = da * dv;
  DilationSystem d{{sys.algebra, n, {}}, Matrix(dv, n), Matrix(n, dv)};
  for (std::size_t a = 0; a < da; ++a) {
    Matrix pi(n, n);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = 0; k < da; ++k) {
        const Rational& c = alg.constant(a, i, k);
        if (is_zero(c)) continue;
        for (std::size_t j = 0; j < dv; ++j) pi(k * dv + j, i * dv + j) = c;
      }
    d.rep.pi.push_back(std::move(pi));
  }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dv; ++j) {
      d.t(i * dv + j, j) = alg.unit()[i];
      for (std::size_t r = 0; r < dv; ++r) d.s(r, i * dv + j) = sys.phi[i](r, j);
    }
  return d;
}

DilationSystem canonical_dilation(const LinearSystem& sys) {
  const Algebra& alg = *sys.algebra;
  const std::size_t da = alg.dim();
  const std::size_t dv = sys.dim_v;
  const std::size_t n = da * dv;

  // Column i * dv + j is alpha_{g_i, e_j}; its entry b * dv + r is (phi(g_b g_i) e_j)_r.
  Matrix functionals(n, n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t b = 0; b < da; ++b)
      for (std::size_t k = 0; k < da; ++k) {
        const Rational& c = alg.constant(b, i, k);
        if (is_zero(c)) continue;
        for (std::size_t j = 0; j < dv; ++j)
          for (std::size_t r = 0; r < dv; ++r) functionals(b * dv + r, i * dv + j) += c * sys.phi[k](r, j);
      }

  const auto reduced = rref(functionals);
  const std::size_t w = reduced.rank;
  const auto& basis_cols = reduced.pivot_cols;
  // functionals = functionals[:, basis_cols] * coords, so coords x gives the
  // W-coordinates of the functional (functionals * x).
  std::vector<std::size_t> first_rows(w);
  for (std::size_t r = 0; r < w; ++r) first_rows[r] = r;
  const Matrix coords = reduced.reduced.select_rows(first_rows);

  // Coordinates of products: alpha_{g_a g_i, e_j} = sum_k c(a, i, k) alpha_{g_k, e_j}.
  DilationSystem d{{sys.algebra, w, {}}, Matrix(dv, w), Matrix(w, dv)};
  for (std::size_t a = 0; a < da; ++a) {
    Matrix pi(w, w);
    for (std::size_t col = 0; col < w; ++col) {
      const std::size_t i = basis_cols[col] / dv;
      const std::size_t j = basis_cols[col] % dv;
      for (std::size_t k = 0; k < da; ++k) {
        const Rational& c = alg.constant(a, i, k);
        if (is_zero(c)) continue;
        for (std::size_t r = 0; r < w; ++r) pi(r, col) += c * coords(r, k * dv + j);
      }
    }
    d.rep.pi.push_back(std::move(pi));
  }
  // T x = alpha_{I, x}.
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t k = 0; k < da; ++k) {
      if (is_zero(alg.unit()[k])) continue;
      for (std::size_t r = 0; r < w; ++r) d.t(r, j) += alg.unit()[k] * coords(r, k * dv + j);
    }
  // S alpha = alpha(I) = sum_b unit_b alpha(g_b).
  for (std::size_t col = 0; col < w; ++col)
    for (std::size_t b = 0; b < da; ++b) {
      if (is_zero(alg.unit()[b])) continue;
      for (std::size_t r = 0; r < dv; ++r) d.s(r, col) += alg.unit()[b] * functionals(b * dv + r, basis_cols[col]);
    }
  return d;
}

bool is_invariant(const Representation& rep, const Subspace& k) {
  if (k.ambient_dim() != rep.dim_w) throw std::invalid_argument("is_invariant: ambient dimension mismatch");
  for (const auto& v : k.basis_vectors())
    for (const auto& p : rep.pi)
      if (!k.contains(p * v)) return false;
  return true;
}

Subspace invariant_closure(const Representation& rep, std::span<const Vector> seeds) {
  Subspace current = Subspace::span(rep.dim_w, seeds);
  for (std::size_t round = 0; round <= rep.dim_w; ++round) {
    std::vector<Vector> vectors = current.basis_vectors();
    const std::size_t base = vectors.size();
    for (std::size_t v = 0; v < base; ++v)
      for (const auto& p : rep.pi) vectors.push_back(p * vectors[v]);
    Subspace next = Subspace::span(rep.dim_w, vectors);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  return current;
}

Subspace maximal_invariant_subspace(const Representation& rep, const Subspace& k0) {
  if (k0.ambient_dim() != rep.dim_w) {
    throw std::invalid_argument("maximal_invariant_subspace: ambient dimension mismatch");
  }
  Subspace current = k0;
  for (std::size_t round = 0; round <= rep.dim_w; ++round) {
    if (current.is_zero()) return current;
    const Matrix basis_t = current.basis().transpose();
    const Matrix proj = quotient(rep.dim_w, current).projection;
    if (proj.rows() == 0) return current;
    std::vector<Matrix> blocks;
    for (const auto& p : rep.pi) blocks.push_back(proj * p * basis_t);
    const Subspace coeffs = kernel(vstack(blocks));
    if (coeffs.dim() == current.dim()) return current;
    current = coeffs.is_zero() ? Subspace::zero(rep.dim_w)
                               : Subspace::span_rows(rep.dim_w, coeffs.basis() * current.basis());
  }
  return current;
}

Subspace maximal_invariant_subspace_in_kernel(const Representation& rep, const Matrix& s) {
  if (s.cols() != rep.dim_w) throw std::invalid_argument("maximal_invariant_subspace_in_kernel: shape mismatch");
  std::vector<Matrix> blocks;
  for (const auto& p : rep.pi) blocks.push_back(s * p);
  return kernel(vstack(blocks));
}

DilationSystem reduce(const DilationSystem& d, const Subspace& k) {
  if (k.ambient_dim() != d.dim_w()) throw std::invalid_argument("reduce: subspace ambient dimension mismatch");
  if (!is_invariant(d.rep, k)) throw std::invalid_argument("reduce: subspace is not pi-invariant");
  for (const auto& v : k.basis_vectors()) {
    const Vector sv = d.s * v;
    for (const auto& x : sv)
      if (!is_zero(x)) throw std::invalid_argument("reduce: subspace is not contained in ker S");
  }
  if (k.is_zero()) return d;
  const Quotient q = quotient(d.dim_w(), k);
  DilationSystem out{{d.rep.algebra, q.coordinates.size(), {}}, d.s * q.section, q.projection * d.t};
  for (const auto& p : d.rep.pi) out.rep.pi.push_back(q.projection * p * q.section);
  return out;
}

bool is_irreducible(const DilationSystem& d) {
  return maximal_invariant_subspace(d.rep, kernel(d.s)).is_zero();
}

DilationSystem principle_dilation(const LinearSystem& sys) {
  const DilationSystem u = universal_dilation(sys);
  return reduce(u, maximal_invariant_subspace(u.rep, kernel(u.s)));
}

Matrix tensor_permutation(std::size_t dim_a, std::size_t dim_v) {
  const std::size_t n = dim_a * dim_v;
  Matrix p(n, n);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_v; ++j) p(j * dim_a + i, i * dim_v + j) = 1;
  return p;
}

DilationSystem change_basis(const DilationSystem& d, const Matrix& p) {
  const auto p_inv = inverse(p);
  if (!p_inv) throw std::invalid_argument("change_basis: matrix is not invertible");
  DilationSystem out{{d.rep.algebra, d.dim_w(), {}}, d.s * *p_inv, p * d.t};
  for (const auto& m : d.rep.pi) out.rep.pi.push_back(p * m * *p_inv);
  return out;
}

}  // namespace homdil
