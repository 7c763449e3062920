#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace blockfact {

// Exact arbitrary-precision scalars. All arithmetic in this project is over
// the rationals; there is no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return q.sign() == 0; }

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

/// Render as "p/q", or just "p" when the denominator is 1. Sign on the
/// numerator.
std::string render_rational(const Rational& q);

/// Inverse of render_rational. Accepts exactly the forms it emits plus
/// unreduced fractions ("4/6" parses to 2/3); rejects everything else.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace blockfact
