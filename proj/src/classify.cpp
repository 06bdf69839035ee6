#include "homdil/classify.hpp"

#include <stdexcept>

namespace homdil {

namespace {

void require_valid_minimal(const DilationSystem& d, const LinearSystem& sys, const char* which) {
  if (const auto check = validate_dilation(d, sys); !check) {
    throw std::invalid_argument(std::string(which) + " is not a dilation of the system: " + check.message);
  }
  if (!is_linearly_minimal(d)) throw std::invalid_argument(std::string(which) + " is not linearly minimal");
}

void require_reducing(const DilationSystem& u, const Subspace& k, const char* which) {
  if (k.ambient_dim() != u.dim_w()) {
    throw std::invalid_argument(std::string(which) + " has ambient dimension " + std::to_string(k.ambient_dim()) +
                                ", expected " + std::to_string(u.dim_w()));
  }
  if (!is_invariant(u.rep, k)) throw std::invalid_argument(std::string(which) + " is not pi_u-invariant");
  if (!kernel(u.s).contains(k)) throw std::invalid_argument(std::string(which) + " is not contained in ker S_u");
}

Matrix reshape(const Vector& v, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, v); }

}  // namespace

Subspace reduced_subspace(const DilationSystem& d, const LinearSystem& sys) {
  if (!is_linearly_minimal(d)) throw std::invalid_argument("reduced_subspace: dilation is not linearly minimal");
  const Subspace k = kernel(spanning_map(d));
  const DilationSystem u = universal_dilation(sys);
  if (!is_invariant(u.rep, k) || !kernel(u.s).contains(k)) {
    throw std::logic_error("reduced subspace is not a pi_u-invariant subspace of ker S_u");
  }
  return k;
}

Check check_witness(const EquivalenceWitness& w, const DilationSystem& d1, const DilationSystem& d2) {
  const Matrix& r = w.r;
  if (r.rows() != d2.dim_w() || r.cols() != d1.dim_w()) return Check::fail("R has the wrong shape");
  if (!r.is_square() || rank(r) != r.rows()) return Check::fail("R is not bijective");
  if (r * d1.t != d2.t) return Check::fail("R T1 != T2");
  if (d2.s * r != d1.s) return Check::fail("S2 R != S1");
  for (std::size_t i = 0; i < d1.rep.pi.size(); ++i) {
    if (r * d1.rep.pi[i] != d2.rep.pi[i] * r) {
      return Check::fail("R does not intertwine pi1 and pi2 at " + d1.rep.algebra->label(i));
    }
  }
  return Check::pass();
}

std::optional<EquivalenceWitness> are_equivalent(const DilationSystem& d1, const DilationSystem& d2,
                                                 const LinearSystem& sys) {
  require_valid_minimal(d1, sys, "first dilation");
  require_valid_minimal(d2, sys, "second dilation");
  if (reduced_subspace(d1, sys) != reduced_subspace(d2, sys)) return std::nullopt;

  // Phi2 = R Phi1; Phi1 has full row rank, so its pivot columns are invertible.
  const Matrix phi1 = spanning_map(d1);
  const Matrix phi2 = spanning_map(d2);
  const auto pivots = rref(phi1).pivot_cols;
  const auto inv = inverse(phi1.select_columns(pivots));
  if (!inv) throw std::logic_error("pivot block of a full-rank spanning map is singular");
  EquivalenceWitness w{phi2.select_columns(pivots) * *inv};
  if (w.r * phi1 != phi2) throw std::logic_error("equivalence witness does not reproduce the spanning map");
  if (const auto check = check_witness(w, d1, d2); !check) {
    throw std::logic_error("equal reduced subspaces but witness fails: " + check.message);
  }
  return w;
}

std::vector<Matrix> intertwiner_space(const Representation& rep1, const Representation& rep2) {
  if (rep1.pi.size() != rep2.pi.size()) throw std::invalid_argument("intertwiner_space: different algebras");
  const std::size_t n1 = rep1.dim_w;
  const std::size_t n2 = rep2.dim_w;
  const std::size_t unknowns = n1 * n2;
  if (unknowns == 0) return {};

  // Columns of `param` span the current solution space, as vectorized X (row-major n2 x n1).
  Matrix param = Matrix::identity(unknowns);
  for (std::size_t g = 0; g < rep1.pi.size() && param.cols() > 0; ++g) {
    if (rep1.pi[g].is_identity() && rep2.pi[g].is_identity()) continue;
    Matrix constraint(unknowns, param.cols());
    for (std::size_t b = 0; b < param.cols(); ++b) {
      const Matrix x = reshape(param.column_vector(b), n2, n1);
      const Matrix defect = rep2.pi[g] * x - x * rep1.pi[g];
      for (std::size_t e = 0; e < unknowns; ++e) constraint(e, b) = defect.entries()[e];
    }
    const Subspace coeffs = kernel(constraint);
    if (coeffs.is_zero()) return {};
    param = param * coeffs.basis().transpose();
  }
  std::vector<Matrix> out;
  const Subspace space = image(param);
  for (const auto& v : space.basis_vectors()) out.push_back(reshape(v, n2, n1));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

InvertibilityVerdict contains_invertible(const std::vector<Matrix>& basis, std::uint64_t seed) {
  InvertibilityVerdict out;
  if (basis.empty()) {
    out.exact = true;
    return out;
  }
  const std::size_t n = basis.front().rows();
  for (const auto& b : basis) {
    if (!b.is_square() || b.rows() != n) throw std::invalid_argument("contains_invertible: size mismatch");
  }
  const std::size_t m = basis.size();
  auto combine = [&](const Vector& coeffs) {
    Matrix acc(n, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_zero(coeffs[i])) acc += basis[i] * coeffs[i];
    }
    return acc;
  };

  if (m <= 3 && n <= 8) {
    out.exact = true;
    std::vector<long> t(m, 0);
    while (true) {
      Vector coeffs(t.begin(), t.end());
      Matrix candidate = combine(coeffs);
      if (!is_zero(determinant(candidate))) {
        out.verdict = Verdict::yes;
        out.witness = std::move(candidate);
        return out;
      }
      // Lexicographic, last coordinate fastest.
      std::size_t pos = m;
      while (pos > 0 && t[pos - 1] == static_cast<long>(n)) t[--pos] = 0;
      if (pos == 0) break;
      ++t[pos - 1];
    }
    out.verdict = Verdict::no;
    return out;
  }

  for (std::size_t trial = 0; trial < kRandomInvertibilityTrials; ++trial) {
    ++out.trials;
    Matrix candidate = combine(seeded_random_vector(m, seed * 7919 + trial));
    if (!is_zero(determinant(candidate))) {
      out.verdict = Verdict::yes;
      out.witness = std::move(candidate);
      return out;
    }
  }
  out.verdict = Verdict::unknown;
  return out;
}

StrongIsomorphismVerdict are_strongly_isomorphic(const Subspace& k1, const Subspace& k2, const LinearSystem& sys,
                                                 std::uint64_t seed) {
  const DilationSystem u = universal_dilation(sys);
  require_reducing(u, k1, "K1");
  require_reducing(u, k2, "K2");
  StrongIsomorphismVerdict out;
  if (k1 == k2) {
    out.verdict = Verdict::yes;
    out.reason = "identical subspaces";
    out.r = Matrix::identity(u.dim_w());
    out.quotient_intertwiner = Matrix::identity(u.dim_w() - k1.dim());
    return out;
  }
  if (k1.dim() != k2.dim()) {
    out.reason = "dimension mismatch: " + std::to_string(k1.dim()) + " vs " + std::to_string(k2.dim());
    return out;
  }
  const Representation rho1 = reduce(u, k1).rep;
  const Representation rho2 = reduce(u, k2).rep;
  // Similarity invariants rule out equivalence cheaply.
  for (std::size_t i = 0; i < rho1.pi.size(); ++i) {
    const auto r1 = rank(rho1.pi[i]);
    const auto r2 = rank(rho2.pi[i]);
    if (r1 != r2) {
      out.reason = "quotient representations differ: rank of pi(" + sys.algebra->label(i) + ") is " +
                   std::to_string(r1) + " vs " + std::to_string(r2);
      return out;
    }
  }
  const auto basis = intertwiner_space(rho1, rho2);
  const auto inv = contains_invertible(basis, seed);
  out.verdict = inv.verdict;
  if (inv.verdict == Verdict::no) {
    out.reason = basis.empty() ? "no nonzero intertwiner between the quotient representations"
                               : "intertwiner space of dimension " + std::to_string(basis.size()) +
                                     " contains no invertible map";
    return out;
  }
  if (inv.verdict == Verdict::unknown) {
    out.reason = "no invertible intertwiner found in " + std::to_string(inv.trials) + " random trials";
    return out;
  }
  // Lift L : W/K1 -> W/K2 to R on W mapping K1's basis onto K2's.
  const Matrix& l = *inv.witness;
  const Quotient q1 = quotient(u.dim_w(), k1);
  const Quotient q2 = quotient(u.dim_w(), k2);
  const Matrix domain = hstack(q1.section, k1.basis().transpose());
  const Matrix target = hstack(q2.section * l, k2.basis().transpose());
  const auto domain_inv = inverse(domain);
  if (!domain_inv) throw std::logic_error("quotient section and subspace basis do not span W");
  const Matrix r = target * *domain_inv;
  if (rank(r) != r.rows() || apply(r, k1) != k2) throw std::logic_error("lifted map does not carry K1 onto K2");
  for (const auto& p : u.rep.pi) {
    if (!(q2.projection * (p * r - r * p)).is_zero()) {
      throw std::logic_error("lifted map does not commute with pi_u modulo K2");
    }
  }
  out.reason = "invertible intertwiner of the quotient representations";
  out.r = r;
  out.quotient_intertwiner = l;
  return out;
}

CharacterLines character_lines(const Representation& rep, const Subspace& within) {
  if (!is_invariant(rep, within)) throw std::invalid_argument("character_lines: subspace is not invariant");
  CharacterLines out;
  if (within.is_zero()) return out;

  struct Piece {
    Subspace space;
    Vector character;
  };
  std::vector<Piece> pieces{{within, {}}};
  for (std::size_t g = 0; g < rep.pi.size(); ++g) {
    const Matrix& op = rep.pi[g];
    const Representation single{rep.algebra, rep.dim_w, {op}};
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      // Joint eigenvectors of op inside the piece lie in its largest op-invariant part.
      const Subspace stable = maximal_invariant_subspace(single, piece.space);
      if (stable.is_zero()) continue;
      const Matrix basis_t = stable.basis().transpose();
      const auto restricted = solve(basis_t, op * basis_t);
      if (!restricted) throw std::logic_error("restriction to an invariant subspace failed");
      const RootSplit split = rational_roots(characteristic_polynomial(*restricted));
      for (const auto& root : split.roots) {
        Matrix shifted = *restricted;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= root.value;
        const Subspace coords = kernel(shifted);
        Vector character = piece.character;
        character.push_back(root.value);
        next.push_back({Subspace::span_rows(rep.dim_w, coords.basis() * stable.basis()), std::move(character)});
      }
      if (degree(split.remainder) > 0) {
        const Subspace coords = kernel(evaluate(split.remainder, *restricted));
        out.unresolved.push_back(
            {g, split.remainder, Subspace::span_rows(rep.dim_w, coords.basis() * stable.basis())});
      }
    }
    pieces = std::move(next);
  }
  for (auto& p : pieces) out.lines.push_back({std::move(p.character), std::move(p.space)});
  return out;
}

bool has_unique_dilation_class(const LinearSystem& sys) {
  const DilationSystem u = universal_dilation(sys);
  const Subspace m = maximal_invariant_subspace(u.rep, kernel(u.s));
  if (m != maximal_invariant_subspace_in_kernel(u.rep, u.s)) {
    throw std::logic_error("maximal invariant subspace: iteration and joint-kernel formula disagree");
  }
  if (sys.dim_v == 1 && m != largest_left_ideal_in_kernel(sys)) {
    throw std::logic_error("maximal invariant subspace differs from the largest left ideal in ker(phi)");
  }
  return m.is_zero();
}

}  // namespace homdil
