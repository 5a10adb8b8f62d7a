#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/base_sequence.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

/// What follows the explicit digits of a DigitString.
struct Tail {
  enum class Kind { remainder, zeros, max };

  Kind kind = Kind::zeros;
  /// Meaningful only for Kind::remainder: sigma^n(x) in [0,1).
  Rational remainder;

  static Tail zeros() { return {Kind::zeros, Rational(0)}; }
  static Tail all_max() { return {Kind::max, Rational(0)}; }
  static Tail exact(Rational r) { return {Kind::remainder, std::move(r)}; }

  /// zeros, or an exact remainder equal to 0.
  bool terminates() const { return kind == Kind::zeros || (kind == Kind::remainder && remainder == 0); }

  friend bool operator==(const Tail&, const Tail&) = default;
};

/// A finite digit prefix (e_1, ..., e_n) over Q plus a tail descriptor.
class DigitString {
public:
  /// Throws DomainError unless 0 <= e_k <= q_k - 1, the remainder is in [0,1),
  /// and an all-max tail follows at least one digit.
  DigitString(BaseSequence bases, std::vector<Integer> digits, Tail tail);

  const BaseSequence& bases() const { return bases_; }
  const std::vector<Integer>& digits() const { return digits_; }
  const Tail& tail() const { return tail_; }
  std::size_t size() const { return digits_.size(); }

  /// e_k for k >= 1, continuing past size() by the tail rule. Throws
  /// DomainError past the explicit digits of a nonzero remainder tail.
  Integer digit_at(std::size_t k) const;

private:
  BaseSequence bases_;
  std::vector<Integer> digits_;
  Tail tail_;
};

/// Incremental bookkeeping of a greedy expansion at depth k.
struct PrefixState {
  std::size_t depth = 0;
  Integer digit{0};         // e_k (0 at depth 0)
  Integer product{1};       // P_k
  Integer delta{0};         // delta_k = e_1 q_2...q_k + ... + e_k
  Rational partial_sum{0};  // theta_k = delta_k / P_k
  Rational tail{0};         // sigma^k(x)
};

PrefixState initial_state(const Rational& x);

/// One greedy step with base q = q_{k+1}.
PrefixState advance(const PrefixState& state, const Integer& q);

/// Throws DomainError("x must lie in [0,1)") outside the unit interval.
void require_unit_interval(const Rational& x);

struct Expansion {
  DigitString digits;
  PrefixState state;
};

/// First n greedy digits of x in [0,1); the tail is the exact remainder sigma^n(x).
Expansion expand_greedy(const Rational& x, const BaseSequence& bases, std::size_t n);

/// theta_upto = sum_{k <= upto} e_k / P_k.
Rational evaluate(const DigitString& digits, std::size_t upto);

/// Least m <= horizon with x = delta_m / P_m, or nullopt.
std::optional<std::size_t> classify_q_rational(const Rational& x, const BaseSequence& bases,
                                               std::size_t horizon);

/// (e_1, ..., e_m) followed by zeros  ->  (e_1, ..., e_m - 1) followed by (q_k - 1).
DigitString dual_representation(const DigitString& digits);

/// The set of numbers whose first m digits are (c_1, ..., c_m).
class Cylinder {
public:
  Cylinder(BaseSequence bases, std::vector<Integer> base);

  const BaseSequence& bases() const { return bases_; }
  const std::vector<Integer>& base() const { return base_; }
  std::size_t rank() const { return base_.size(); }

private:
  BaseSequence bases_;
  std::vector<Integer> base_;
};

struct Interval {
  Rational lo;
  Rational hi;
};

/// [delta_m / P_m, (delta_m + 1) / P_m].
Interval cylinder_interval(const Cylinder& cylinder);

/// True iff the first m greedy digits of x equal the cylinder's base.
bool cylinder_contains(const Cylinder& cylinder, const Rational& x);

/// Comma-separated digits with an optional tail marker: "…0" (zeros, the
/// default), "…max", or "…r<a/b>" (exact remainder). "..." is accepted for "…".
DigitString parse_digit_string(std::string_view text, const BaseSequence& bases);
std::string to_text(const DigitString& digits);

/// Comma-separated digits only.
std::string join_digits(const std::vector<Integer>& digits);

}  // namespace cantor
