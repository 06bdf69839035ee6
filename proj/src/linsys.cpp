#include "homdil/linsys.hpp"

#include <functional>
#include <stdexcept>

#include "homdil/json_util.hpp"

namespace homdil {

Check validate_system(const LinearSystem& sys) {
  if (!sys.algebra) return Check::fail("system has no algebra");
  if (sys.dim_v == 0) return Check::fail("dim_v must be at least 1");
  if (sys.phi.size() != sys.algebra->dim()) {
    return Check::fail("phi has " + std::to_string(sys.phi.size()) + " matrices, algebra has dimension " +
                       std::to_string(sys.algebra->dim()));
  }
  for (std::size_t i = 0; i < sys.phi.size(); ++i) {
    if (sys.phi[i].rows() != sys.dim_v || sys.phi[i].cols() != sys.dim_v) {
      return Check::fail("phi(" + sys.algebra->label(i) + ") is not " + std::to_string(sys.dim_v) + "x" +
                         std::to_string(sys.dim_v));
    }
  }
  if (!apply_phi(sys, sys.algebra->unit()).is_identity()) return Check::fail("phi is not unital: phi(I) != identity");
  return Check::pass();
}

Matrix apply_phi(const LinearSystem& sys, const Vector& a) {
  if (a.size() != sys.dim_a()) {
    throw std::invalid_argument("apply_phi: coordinate length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(sys.dim_a()));
  }
  Matrix out(sys.dim_v, sys.dim_v);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i])) out += sys.phi[i] * a[i];
  }
  return out;
}

namespace {

std::size_t param_n(const nlohmann::json& params) {
  if (!params.contains("n") || !params["n"].is_number_integer() || params["n"].get<long long>() <= 0) {
    throw std::invalid_argument("builtin parameter \"n\" must be a positive integer");
  }
  return params["n"].get<std::size_t>();
}

AlgebraPtr param_algebra(const nlohmann::json& params) {
  const std::string kind = params.value("algebra", std::string("full_matrix"));
  const std::size_t n = param_n(params);
  if (kind == "full_matrix") return full_matrix_algebra(n);
  if (kind == "upper_triangular") return upper_triangular_algebra(n);
  throw std::invalid_argument("builtin parameter \"algebra\" must be full_matrix or upper_triangular, got " + kind);
}

Vector param_vector(const nlohmann::json& params, const std::string& key, std::size_t len, const Vector& fallback) {
  if (!params.contains(key)) {
    if (fallback.empty()) throw std::invalid_argument("builtin parameter \"" + key + "\" is required");
    return fallback;
  }
  Vector v = vector_from_json(params[key], "params." + key);
  if (v.size() != len) {
    throw std::invalid_argument("builtin parameter \"" + key + "\" must have " + std::to_string(len) + " entries");
  }
  return v;
}

/// phi(g_i) = f(matrix of g_i) for matrix-unit algebras.
LinearSystem from_matrix_map(AlgebraPtr algebra, std::size_t dim_v, const std::function<Matrix(const Matrix&)>& f) {
  LinearSystem sys{algebra, dim_v, {}};
  for (std::size_t i = 0; i < algebra->dim(); ++i) sys.phi.push_back(f(to_matrix(*algebra, algebra->basis_vector(i))));
  return sys;
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

LinearSystem diagonal_compression(const Vector& alpha, const Vector& beta, const Vector& xi, const Vector& gamma) {
  return from_matrix_map(full_matrix_algebra(2), 2, [&](const Matrix& a) {
    Matrix out(2, 2);
    out(0, 0) = alpha[0] * (xi[0] * a(0, 0) + xi[1] * a(0, 1)) + alpha[1] * (xi[0] * a(1, 0) + xi[1] * a(1, 1));
    out(1, 1) = beta[0] * (gamma[0] * a(0, 0) + gamma[1] * a(0, 1)) + beta[1] * (gamma[0] * a(1, 0) + gamma[1] * a(1, 1));
    return out;
  });
}

LinearSystem make_builtin(const std::string& name, const nlohmann::json& params) {
  if (name == "normalized_trace") {
    const auto algebra = param_algebra(params);
    const Rational scale = make_rational(1, static_cast<long>(param_n(params)));
    return from_matrix_map(algebra, 1, [&](const Matrix& a) { return Matrix{{trace(a) * scale}}; });
  }
  if (name == "identity") {
    const auto algebra = param_algebra(params);
    return from_matrix_map(algebra, param_n(params), [](const Matrix& a) { return a; });
  }
  if (name == "transpose") {
    return from_matrix_map(full_matrix_algebra(param_n(params)), param_n(params),
                           [](const Matrix& a) { return a.transpose(); });
  }
  if (name == "transpose_t_to_m") {
    return from_matrix_map(upper_triangular_algebra(param_n(params)), param_n(params),
                           [](const Matrix& a) { return a.transpose(); });
  }
  if (name == "scaled_trace_identity") {
    const std::size_t n = param_n(params);
    const Rational scale = make_rational(1, static_cast<long>(n));
    return from_matrix_map(full_matrix_algebra(n), n,
                           [&](const Matrix& a) { return Matrix::identity(n) * (trace(a) * scale); });
  }
  if (name == "coefficient_map") {
    Vector forms[4] = {param_vector(params, "a", 4, {}), param_vector(params, "b", 4, {}),
                       param_vector(params, "c", 4, {}), param_vector(params, "d", 4, {})};
    return from_matrix_map(full_matrix_algebra(2), 2, [&](const Matrix& a) {
      const Rational entries[4] = {a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
      Matrix out(2, 2);
      for (std::size_t e = 0; e < 4; ++e) {
        Rational acc = 0;
        for (std::size_t i = 0; i < 4; ++i) acc += forms[e][i] * entries[i];
        out(e / 2, e % 2) = acc;
      }
      return out;
    });
  }
  const Vector e1{1, 0}, e2{0, 1};
  if (name == "diagonal_compression") {
    return diagonal_compression(param_vector(params, "alpha", 2, e1), param_vector(params, "beta", 2, e2),
                                param_vector(params, "xi", 2, e1), param_vector(params, "gamma", 2, e2));
  }
  if (name == "diag_map_d") return diagonal_compression(e1, e2, e1, e2);
  if (name == "diag_map_phi") return diagonal_compression(e1, e1, e1, e1);
  throw std::invalid_argument("unknown builtin system \"" + name + "\"");
}

}  // namespace

LinearSystem builtin_system(const std::string& name, const nlohmann::json& params) {
  if (!params.is_object()) throw std::invalid_argument("builtin parameters must be a JSON object");
  LinearSystem sys = make_builtin(name, params);
  if (const auto check = validate_system(sys); !check) {
    throw std::invalid_argument("builtin " + name + " with these parameters is invalid: " + check.message);
  }
  return sys;
}

std::vector<std::string> builtin_system_names() {
  return {"normalized_trace", "identity",        "transpose",            "transpose_t_to_m", "scaled_trace_identity",
          "coefficient_map",  "diagonal_compression", "diag_map_d", "diag_map_phi"};
}

Subspace largest_left_ideal_in_kernel(const LinearSystem& sys) {
  const Algebra& alg = *sys.algebra;
  const std::size_t d = alg.dim();
  const std::size_t v = sys.dim_v;
  // Row (b, r, s): a -> phi(g_b a)_{rs} = sum_i a_i sum_k c(b, i, k) phi(g_k)_{rs}.
  Matrix rows(d * v * v, d);
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = alg.constant(b, i, k);
        if (is_zero(c)) continue;
        for (std::size_t r = 0; r < v; ++r)
          for (std::size_t s = 0; s < v; ++s) rows((b * v + r) * v + s, i) += c * sys.phi[k](r, s);
      }
    }
  }
  return kernel(rows);
}

}  // namespace homdil
