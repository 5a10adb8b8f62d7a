#include "cantor/numeric.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

namespace cantor {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw DomainError("zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Integer int_part(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac_part(const Rational& x) { return x - Rational(int_part(x)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer parse_natural(std::string_view text, std::size_t offset) {
  if (text.empty()) {
    throw ParseError("expected an integer", offset);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);
    }
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  const auto slash = text.find('/', pos);
  const auto num_text = text.substr(pos, slash == std::string_view::npos ? text.npos : slash - pos);
  Integer num = parse_natural(num_text, pos);
  if (negative) num = -num;
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  Integer den = parse_natural(text.substr(slash + 1), slash + 1);
  if (den == 0) {
    throw ParseError("denominator must be positive", slash + 1);
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::string approximate(const Rational& x, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << x.get_d();
  return os.str();
}

}  // namespace cantor
