#include "homdil/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace homdil {

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Synthetic division by (x - root); returns the quotient, assuming root is a root.
Polynomial deflate(const Polynomial& p, const Rational& root) {
  const std::size_t n = p.size();
  Polynomial q(n - 1);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> factors;
  factor_into(abs(n), factors);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, count] : factors) {
    const std::size_t existing = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= count; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

std::size_t degree(const Polynomial& p) {
  Polynomial q = p;
  trim(q);
  return q.empty() ? 0 : q.size() - 1;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = m.rows();
  Polynomial coeffs(n + 1);
  coeffs[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeffs[n - k + 1];
    const Matrix amk = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += p[i];
  }
  return acc;
}

RootSplit rational_roots(const Polynomial& input) {
  RootSplit out;
  Polynomial p = input;
  trim(p);
  if (p.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");

  std::map<Rational, std::size_t> found;
  while (p.size() > 1 && is_zero(p.front())) {
    p = deflate(p, 0);
    ++found[Rational(0)];
  }
  if (p.size() > 1) {
    // Integer multiple of p; any root p/q in lowest terms has p | a0 and q | an.
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    const Rational scale(lcm);
    const mpz_class a0 = Rational(p.front() * scale).get_num();
    const mpz_class an = Rational(p.back() * scale).get_num();
    const auto num_divs = divisors(a0);
    const auto den_divs = divisors(an);
    std::vector<Rational> candidates;
    for (const auto& nd : num_divs) {
      for (const auto& dd : den_divs) {
        Rational r(nd, dd);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      while (p.size() > 1 && is_zero(evaluate(p, r))) {
        p = deflate(p, r);
        ++found[r];
      }
    }
  }
  for (const auto& [value, mult] : found) out.roots.push_back({value, mult});
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  out.remainder = std::move(p);
  return out;
}

std::string format(const Polynomial& p, char variable) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (is_zero(p[i])) continue;
    Rational c = p[i];
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    c = abs(c);
    if (i == 0 || c != 1) out << to_string(c);
    if (i >= 1) out << variable;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace homdil
