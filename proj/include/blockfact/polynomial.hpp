#pragma once

#include <utility>
#include <vector>

#include "blockfact/rational.hpp"

namespace blockfact {

/// Univariate polynomial over Q, coefficients low-to-high with a nonzero
/// leading coefficient (the zero polynomial has an empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs);
  static Poly constant(const Rational& c);
  /// t - root
  static Poly linear_root(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
  const Vec& coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_[i]; }
  const Rational& lead() const { return coeffs_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  bool operator==(const Poly& rhs) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

 private:
  Vec coeffs_;
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

/// p / gcd(p, p'): same roots, each once. Input must be nonzero.
Poly squarefree_part(const Poly& p);

/// Extended Euclid for coprime f, g: returns (u, v) with u*f + v*g = 1.
std::pair<Poly, Poly> bezout(const Poly& f, const Poly& g);

/// All rational roots, ascending, each listed once. Exact: clears
/// denominators and enumerates divisor candidates of the integer polynomial.
std::vector<Rational> rational_roots(const Poly& p);

/// Prime factorization of n > 0 (trial division then Pollard rho), as
/// (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

std::vector<Integer> divisors(const Integer& n);

}  // namespace blockfact
