#pragma once

#include <cstddef>
#include <vector>

#include "cantor/base_sequence.hpp"
#include "cantor/expansion.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

/// x together with its greedy prefix states for k = 0..depth.
///
/// Built once per x; const access is safe from several threads. extend_to()
/// must not race with readers.
class OperatorContext {
public:
  /// Throws DomainError unless x lies in [0,1).
  OperatorContext(Rational x, BaseSequence bases, std::size_t depth);

  const Rational& x() const { return x_; }
  const BaseSequence& bases() const { return bases_; }
  std::size_t depth() const { return states_.size() - 1; }

  void extend_to(std::size_t depth);

  /// Throws std::out_of_range beyond depth().
  const PrefixState& state(std::size_t k) const;
  const Integer& digit(std::size_t k) const { return state(k).digit; }
  const Integer& delta(std::size_t k) const { return state(k).delta; }
  const Integer& product(std::size_t k) const { return state(k).product; }
  const Rational& partial_sum(std::size_t k) const { return state(k).partial_sum; }

private:
  Rational x_;
  BaseSequence bases_;
  std::vector<PrefixState> states_;
};

/// sigma^n(x) = P_n x - delta_n.
Rational shift_power(const OperatorContext& ctx, std::size_t n);

/// sigma_m(x) = q_m x - (q_m - 1) theta_{m-1} - e_m / P_{m-1}, m >= 1.
Rational generalized_shift(const OperatorContext& ctx, std::size_t m);

/// sigma_m(x) = (delta_{m-1} + sigma^m(x)) / P_{m-1}, m >= 1. Second route used
/// to cross-check generalized_shift().
Rational generalized_shift_via_tail(const OperatorContext& ctx, std::size_t m);

/// sigma_{m+1}(x) from sigma_m(x) by the recurrence
///   sigma_{m+1} = (q_{m+1}/q_m) sigma_m - ((q_{m+1} - q_m)/q_m) theta_{m-1}
///                 - (e_{m+1} - e_m) / P_m.
/// Needs depth m + 1.
Rational shift_recurrence(const OperatorContext& ctx, std::size_t m);

/// e_m = P_m x - P_{m-1} sigma_m(x) - (q_m - 1) delta_{m-1}.
Integer recover_digit(const OperatorContext& ctx, std::size_t m);

struct DigitFormulaWitness {
  std::size_t m = 0;
  Rational z;     // z_{m+1}
  Integer digit;  // floor(z_{m+1}) = e_{m+1}
};

/// Digit e_{m+1} of x = a/b through
///   z_{m+1} = ((q_{m+1} + 1) P_m a - b (P_m sigma_{m+1}(x) + q_{m+1} delta_m)) / b,
/// with z_1 = a q_1 / b. sigma_{m+1} is taken from the greedy prefix, so this is
/// a verifier of the identity rather than an independent digit source. Needs
/// depth m + 1; throws std::invalid_argument unless a/b equals ctx.x() in
/// lowest terms.
DigitFormulaWitness digit_formula(const Integer& a, const Integer& b, const OperatorContext& ctx,
                                   std::size_t m);

/// Same, for x given by an explicit digit string. Digit strings with an
/// all-max tail are rejected: the formula assumes the greedy representation.
DigitFormulaWitness digit_formula(const Integer& a, const Integer& b, const DigitString& digits,
                                   std::size_t m);

}  // namespace cantor
