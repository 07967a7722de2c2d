#include "octoform/rational.hpp"

#include <stdexcept>

namespace octoform {

Rational rational_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational_of: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq accepts "p" and "p/q"; reject whitespace and empty pieces up front.
  for (char ch : text) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) return std::nullopt;
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace octoform
