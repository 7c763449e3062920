#include "blockfact/rational.hpp"

#include <stdexcept>

namespace blockfact {

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string render_rational(const Rational& q) {
  Integer den = denominator(q);
  if (den == 1) return numerator(q).str();
  return numerator(q).str() + "/" + den.str();
}

namespace {

// [+-]?digits, no leading whitespace, no empty digit run.
bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  out = Integer(std::string(text));
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  Integer num, den;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    return Rational(num);
  }
  if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  if (den <= 0)
    throw std::invalid_argument("denominator must be positive in rational literal: '" +
                                std::string(text) + "'");
  // Construction from a num/den pair canonicalizes (reduced, positive
  // denominator), which is the representation invariant everywhere else.
  return Rational(num, den);
}

}  // namespace blockfact
