#include "carnot/rational.hpp"

#include <stdexcept>

namespace carnot {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class num(std::string(text), 10);
      return Rational(num);
    }
    if (slash == 0 || slash + 1 == text.size()) throw bad();
    mpz_class num(std::string(text.substr(0, slash)), 10);
    mpz_class den(std::string(text.substr(slash + 1)), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace carnot
