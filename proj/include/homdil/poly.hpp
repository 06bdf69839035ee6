#pragma once

#include <cstddef>
#include <vector>

#include "homdil/matrix.hpp"

namespace homdil {

/// Univariate polynomial over Q, coefficients ordered from the constant term.
using Polynomial = std::vector<Rational>;

/// det(xI - m), monic of degree m.rows().
Polynomial characteristic_polynomial(const Matrix& m);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity = 0;
};

struct RootSplit {
  std::vector<RationalRoot> roots;  // ascending by value
  /// What is left after dividing out every rational linear factor; degree 0
  /// when the polynomial splits over Q.
  Polynomial remainder;
};

RootSplit rational_roots(const Polynomial& p);

Rational evaluate(const Polynomial& p, const Rational& x);
Matrix evaluate(const Polynomial& p, const Matrix& m);
std::size_t degree(const Polynomial& p);
std::string format(const Polynomial& p, char variable = 'x');

}  // namespace homdil
