#include "cantor/operators.hpp"

#include <stdexcept>
#include <string>

namespace cantor {

OperatorContext::OperatorContext(Rational x, BaseSequence bases, std::size_t depth)
    : x_(std::move(x)), bases_(std::move(bases)) {
  require_unit_interval(x_);
  states_.push_back(initial_state(x_));
  extend_to(depth);
}

void OperatorContext::extend_to(std::size_t depth) {
  states_.reserve(depth + 1);
  while (states_.size() <= depth) {
    const std::size_t k = states_.size();
    states_.push_back(advance(states_.back(), bases_.q_at(k)));
  }
}

const PrefixState& OperatorContext::state(std::size_t k) const {
  if (k >= states_.size()) {
    throw std::out_of_range("depth " + std::to_string(k) + " not resolved (context depth " +
                            std::to_string(depth()) + ")");
  }
  return states_[k];
}

namespace {

void require_positive_index(std::size_t m) {
  if (m == 0) throw std::invalid_argument("generalized shift index starts at 1");
}

}  // namespace

Rational shift_power(const OperatorContext& ctx, std::size_t n) {
  const auto& s = ctx.state(n);
  Rational value = ctx.x() * s.product - s.delta;
  CANTOR_CHECK(value == s.tail, "sigma^n closed form disagrees with the greedy remainder");
  return value;
}

Rational generalized_shift_via_tail(const OperatorContext& ctx, std::size_t m) {
  require_positive_index(m);
  const auto& prev = ctx.state(m - 1);
  return (Rational(prev.delta) + shift_power(ctx, m)) / prev.product;
}

Rational generalized_shift(const OperatorContext& ctx, std::size_t m) {
  require_positive_index(m);
  const auto& prev = ctx.state(m - 1);
  const auto& cur = ctx.state(m);
  const Integer q = ctx.bases().q_at(m);
  Rational value = q * ctx.x() - (q - 1) * prev.partial_sum - make_rational(cur.digit, prev.product);
  CANTOR_CHECK(value == generalized_shift_via_tail(ctx, m),
               "generalized shift: closed form and P_{m-1} sigma_m = delta_{m-1} + sigma^m disagree at m=" +
                   std::to_string(m));
  return value;
}

Rational shift_recurrence(const OperatorContext& ctx, std::size_t m) {
  require_positive_index(m);
  const Integer q_m = ctx.bases().q_at(m);
  const Integer q_next = ctx.bases().q_at(m + 1);
  const auto& before = ctx.state(m - 1);
  const auto& cur = ctx.state(m);
  const auto& next = ctx.state(m + 1);

  Rational value = make_rational(q_next, q_m) * generalized_shift(ctx, m) -
                   make_rational(q_next - q_m, q_m) * before.partial_sum -
                   make_rational(next.digit - cur.digit, cur.product);
  CANTOR_CHECK(value == generalized_shift(ctx, m + 1),
               "sigma_{m+1} recurrence disagrees with the closed form at m=" + std::to_string(m));
  return value;
}

Integer recover_digit(const OperatorContext& ctx, std::size_t m) {
  require_positive_index(m);
  const auto& before = ctx.state(m - 1);
  const auto& cur = ctx.state(m);
  const Integer q = ctx.bases().q_at(m);

  const Rational value =
      cur.product * ctx.x() - before.product * generalized_shift(ctx, m) - Rational((q - 1) * before.delta);
  if (!is_integer(value) || value < 0 || value >= q) {
    throw IdentityViolation("recovered digit " + to_string(value) + " is not in {0, ..., q_m - 1} at m=" +
                            std::to_string(m));
  }
  Integer digit = value.get_num();
  CANTOR_CHECK(digit == cur.digit, "recovered digit disagrees with the greedy digit at m=" + std::to_string(m));
  return digit;
}

DigitFormulaWitness digit_formula(const Integer& a, const Integer& b, const OperatorContext& ctx,
                                   std::size_t m) {
  if (b <= 0 || gcd(a, b) != 1 || make_rational(a, b) != ctx.x()) {
    throw std::invalid_argument("a/b must be the context's x in lowest terms");
  }
  const Integer q_next = ctx.bases().q_at(m + 1);

  DigitFormulaWitness w;
  w.m = m;
  if (m == 0) {
    w.z = make_rational(a * q_next, b);
  } else {
    const auto& cur = ctx.state(m);
    // P_m sigma_{m+1}(x) = delta_m + sigma^{m+1}(x)
    const Rational scaled_shift = Rational(cur.delta) + shift_power(ctx, m + 1);
    const Rational numerator = Rational((q_next + 1) * cur.product * a) - b * (scaled_shift + q_next * cur.delta);
    w.z = numerator / b;
  }
  w.digit = int_part(w.z);
  CANTOR_CHECK(w.digit == ctx.digit(m + 1),
               "digit formula disagrees with the greedy digit at m=" + std::to_string(m));
  return w;
}

DigitFormulaWitness digit_formula(const Integer& a, const Integer& b, const DigitString& digits,
                                   std::size_t m) {
  if (digits.tail().kind == Tail::Kind::max) {
    throw DomainError("the digit formula does not apply to representations ending in (q_k - 1)");
  }
  if (b <= 0) throw std::invalid_argument("b must be positive");
  const Rational x = make_rational(a, b);
  OperatorContext ctx(x, digits.bases(), m + 1);
  for (std::size_t k = 1; k <= std::min(m + 1, digits.size()); ++k) {
    if (ctx.digit(k) != digits.digits()[k - 1]) {
      throw std::invalid_argument("digit string is not the greedy expansion of a/b");
    }
  }
  return digit_formula(a, b, ctx, m);
}

}  // namespace cantor
