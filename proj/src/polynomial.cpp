#include "blockfact/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockfact {

namespace {
void trim(Vec& c) {
  while (!c.empty() && blockfact::is_zero(c.back())) c.pop_back();
}
}  // namespace

Poly::Poly(Vec coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::constant(const Rational& c) { return Poly(Vec{c}); }

Poly Poly::linear_root(const Rational& root) { return Poly(Vec{-root, Rational(1)}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Vec c = coeffs_;
  const Rational l = c.back();
  if (l != 1)
    for (auto& x : c) x /= l;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  Vec c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * int(i);
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& rhs) const {
  Vec c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& rhs) const {
  Vec c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly();
  Vec c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (blockfact::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      if (!blockfact::is_zero(rhs.coeffs_[j])) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Vec rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  Vec quot(degree() - dd + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / divisor.lead();
    quot[k] = q;
    if (blockfact::is_zero(q)) continue;
    for (int i = 0; i <= dd; ++i)
      if (!blockfact::is_zero(divisor.coeff(i))) rem[k + i] -= q * divisor.coeff(i);
  }
  trim(rem);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  Poly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::pair<Poly, Poly> bezout(const Poly& f, const Poly& g) {
  // Maintain r = u*f + v*g along the Euclidean remainder sequence.
  Poly r0 = f, r1 = g;
  Poly u0 = Poly::constant(1), u1;
  Poly v0, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.degree() != 0) throw std::invalid_argument("bezout: inputs are not coprime");
  const Rational c = r0.coeff(0);
  Vec uc = u0.coeffs(), vc = v0.coeffs();
  for (auto& x : uc) x /= c;
  for (auto& x : vc) x /= c;
  return {Poly(std::move(uc)), Poly(std::move(vc))};
}

namespace {

using boost::multiprecision::gcd;

Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

Integer mulmod(const Integer& a, const Integer& b, const Integer& m) { return (a * b) % m; }

Integer powmod(Integer base, Integer exp, const Integer& m) {
  Integer result(1);
  base %= m;
  while (exp > 0) {
    if ((exp & 1) == 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(const Integer& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic witness set for n < 3.3e24; our inputs stay far below.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Integer x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Integer pollard_rho(const Integer& n) {
  if ((n & 1) == 0) return 2;
  for (Integer c(1);; ++c) {
    Integer x(2), y(2), d(1);
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd(abs_int(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_rec(Integer n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (miller_rabin(n)) { primes.push_back(n); return; }
  Integer d = pollard_rho(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  if (n <= 0) throw std::invalid_argument("factor_integer expects n > 0");
  std::vector<Integer> primes;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (n % p == 0) { primes.emplace_back(p); n /= p; }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  std::vector<Rational> roots;
  Poly q = p;
  // Factor out t^k first so the constant term is nonzero.
  if (blockfact::is_zero(q.coeff(0))) {
    roots.emplace_back(0);
    Vec c = q.coeffs();
    std::size_t k = 0;
    while (blockfact::is_zero(c[k])) ++k;
    q = Poly(Vec(c.begin() + k, c.end()));
  }
  if (q.degree() >= 1) {
    // Clear denominators: integer candidates num/den with num | a0, den | an.
    Integer common(1);
    for (const auto& c : q.coeffs()) common = boost::multiprecision::lcm(common, denominator(c));
    std::vector<Integer> ic(q.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i)
      ic[i] = numerator(q.coeff(i)) * (common / denominator(q.coeff(i)));
    const std::vector<Integer> nums = divisors(abs_int(ic.front()));
    const std::vector<Integer> dens = divisors(abs_int(ic.back()));
    for (const auto& den : dens)
      for (const auto& num : nums)
        for (int sign : {1, -1}) {
          Rational cand(sign * num, den);
          if (blockfact::is_zero(q.eval(cand))) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace blockfact
