#ifndef LIECO_RATIONAL_HPP
#define LIECO_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lieco {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which is what subspace canonicity relies on.
using Rational = mpq_class;
using Integer = mpz_class;

using Vec = std::vector<Rational>;

/// num/den as a canonical Rational; throws on den == 0.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", with "/q" omitted when q == 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact conversion to long; throws if the value is not an integer fitting a long.
inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::domain_error("rational: integer overflow");
  return r.get_num().get_si();
}

}  // namespace lieco

#endif
