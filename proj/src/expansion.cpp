#include "cantor/expansion.hpp"

namespace cantor {

DigitString::DigitString(BaseSequence bases, std::vector<Integer> digits, Tail tail)
    : bases_(std::move(bases)), digits_(std::move(digits)), tail_(std::move(tail)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 0 || digits_[i] >= bases_.q_at(i + 1)) {
      throw DomainError("digit " + digits_[i].get_str() + " at position " + std::to_string(i + 1) +
                        " is outside {0, ..., q_k - 1}");
    }
  }
  if (tail_.kind == Tail::Kind::remainder && (tail_.remainder < 0 || tail_.remainder >= 1)) {
    throw DomainError("tail remainder must lie in [0,1)");
  }
  if (tail_.kind == Tail::Kind::max && digits_.empty()) {
    throw DomainError("an all-max tail needs at least one explicit digit");
  }
}

Integer DigitString::digit_at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("digit index starts at 1");
  if (k <= digits_.size()) return digits_[k - 1];
  switch (tail_.kind) {
    case Tail::Kind::zeros:
      return 0;
    case Tail::Kind::max:
      return bases_.q_at(k) - 1;
    case Tail::Kind::remainder:
      if (tail_.remainder == 0) return 0;
      break;
  }
  throw DomainError("digit " + std::to_string(k) + " lies beyond the explicit digits of a remainder tail");
}

PrefixState initial_state(const Rational& x) {
  PrefixState s;
  s.tail = x;
  return s;
}

PrefixState advance(const PrefixState& state, const Integer& q) {
  PrefixState next;
  next.depth = state.depth + 1;
  const Rational scaled = state.tail * q;
  next.digit = int_part(scaled);
  next.tail = scaled - next.digit;
  next.product = state.product * q;
  next.delta = state.delta * q + next.digit;
  next.partial_sum = make_rational(next.delta, next.product);
  return next;
}

void require_unit_interval(const Rational& x) {
  if (x < 0 || x >= 1) {
    throw DomainError("x must lie in [0,1)");
  }
}

Expansion expand_greedy(const Rational& x, const BaseSequence& bases, std::size_t n) {
  require_unit_interval(x);
  PrefixState state = initial_state(x);
  std::vector<Integer> digits;
  digits.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    state = advance(state, bases.q_at(k));
    digits.push_back(state.digit);
  }
  return {DigitString(bases, std::move(digits), Tail::exact(state.tail)), std::move(state)};
}

Rational evaluate(const DigitString& digits, std::size_t upto) {
  // Horner form: delta_k = q_k delta_{k-1} + e_k, result delta / P.
  Integer delta = 0;
  Integer product = 1;
  for (std::size_t k = 1; k <= upto; ++k) {
    const Integer q = digits.bases().q_at(k);
    delta = delta * q + digits.digit_at(k);
    product *= q;
  }
  return make_rational(delta, product);
}

std::optional<std::size_t> classify_q_rational(const Rational& x, const BaseSequence& bases,
                                               std::size_t horizon) {
  require_unit_interval(x);
  PrefixState state = initial_state(x);
  for (std::size_t m = 0;; ++m) {
    if (state.tail == 0) return m;
    if (m == horizon) return std::nullopt;
    state = advance(state, bases.q_at(m + 1));
  }
}

DigitString dual_representation(const DigitString& digits) {
  if (!digits.tail().terminates()) {
    throw DomainError("dual representation needs a terminating expansion");
  }
  const auto& d = digits.digits();
  std::size_t m = d.size();
  while (m > 0 && d[m - 1] == 0) --m;
  if (m == 0) {
    throw DomainError("0 has no dual representation");
  }
  std::vector<Integer> dual(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m));
  dual.back() -= 1;
  return DigitString(digits.bases(), std::move(dual), Tail::all_max());
}

Cylinder::Cylinder(BaseSequence bases, std::vector<Integer> base)
    : bases_(std::move(bases)), base_(std::move(base)) {
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (base_[i] < 0 || base_[i] >= bases_.q_at(i + 1)) {
      throw DomainError("cylinder digit at position " + std::to_string(i + 1) +
                        " is outside {0, ..., q_k - 1}");
    }
  }
}

Interval cylinder_interval(const Cylinder& cylinder) {
  Integer delta = 0;
  for (std::size_t i = 0; i < cylinder.rank(); ++i) {
    delta = delta * cylinder.bases().q_at(i + 1) + cylinder.base()[i];
  }
  const Integer product = cylinder.bases().product_prefix(cylinder.rank());
  return {make_rational(delta, product), make_rational(delta + 1, product)};
}

bool cylinder_contains(const Cylinder& cylinder, const Rational& x) {
  const auto expansion = expand_greedy(x, cylinder.bases(), cylinder.rank());
  return expansion.digits.digits() == cylinder.base();
}

namespace {

constexpr std::string_view kEllipsis = "…";

std::optional<std::string_view> strip_marker(std::string_view token) {
  if (token.starts_with(kEllipsis)) return token.substr(kEllipsis.size());
  if (token.starts_with("...")) return token.substr(3);
  return std::nullopt;
}

}  // namespace

DigitString parse_digit_string(std::string_view text, const BaseSequence& bases) {
  std::vector<Integer> digits;
  Tail tail = Tail::zeros();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto token = text.substr(pos, end - pos);
    if (const auto marker = strip_marker(token)) {
      if (comma != std::string_view::npos) {
        throw ParseError("tail marker must come last", pos);
      }
      const std::size_t mpos = pos + (token.size() - marker->size());
      if (*marker == "0") {
        tail = Tail::zeros();
      } else if (*marker == "max") {
        tail = Tail::all_max();
      } else if (marker->starts_with("r")) {
        try {
          tail = Tail::exact(parse_rational(marker->substr(1)));
        } catch (const ParseError& e) {
          throw ParseError("malformed remainder", mpos + 1 + e.position());
        }
      } else {
        throw ParseError("unknown tail marker", mpos);
      }
      break;
    }
    if (token.empty() && text.empty()) break;
    digits.push_back(parse_natural(token, pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DigitString(bases, std::move(digits), std::move(tail));
}

std::string join_digits(const std::vector<Integer>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += digits[i].get_str();
  }
  return out;
}

std::string to_text(const DigitString& digits) {
  std::string out = join_digits(digits.digits());
  if (!out.empty()) out += ',';
  out += kEllipsis;
  switch (digits.tail().kind) {
    case Tail::Kind::zeros:
      out += "0";
      break;
    case Tail::Kind::max:
      out += "max";
      break;
    case Tail::Kind::remainder:
      out += digits.tail().remainder == 0 ? "0" : "r" + to_string(digits.tail().remainder);
      break;
  }
  return out;
}

}  // namespace cantor
