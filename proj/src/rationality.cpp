#include "cantor/rationality.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace cantor {

std::vector<TraceEntry> fractional_trace(OperatorContext& ctx, std::size_t horizon) {
  ctx.extend_to(horizon);
  std::vector<TraceEntry> trace;
  trace.reserve(horizon + 1);
  trace.push_back({0, frac_part(ctx.x()), int_part(ctx.x())});
  for (std::size_t k = 1; k <= horizon; ++k) {
    const Rational scaled = ctx.product(k - 1) * generalized_shift(ctx, k);
    TraceEntry entry{k, frac_part(scaled), int_part(scaled)};
    CANTOR_CHECK(entry.integer_component == ctx.delta(k - 1) && entry.value == shift_power(ctx, k),
                 "trace entry " + std::to_string(k) + " is not delta_{k-1} + sigma^k(x)");
    trace.push_back(std::move(entry));
  }
  return trace;
}

std::vector<TraceEntry> fractional_trace(const Rational& x, const BaseSequence& bases, std::size_t horizon) {
  OperatorContext ctx(x, bases, horizon);
  return fractional_trace(ctx, horizon);
}

std::optional<CollisionWitness> find_collision(std::span<const TraceEntry> trace) {
  std::map<Rational, std::vector<std::size_t>> groups;
  for (const auto& entry : trace) groups[entry.value].push_back(entry.k);

  std::optional<CollisionWitness> best;
  std::optional<CollisionWitness> fallback;
  for (auto& [value, ks] : groups) {
    std::sort(ks.begin(), ks.end());
    const auto first_positive = std::find_if(ks.begin(), ks.end(), [](std::size_t k) { return k >= 1; });
    if (std::distance(first_positive, ks.end()) >= 2) {
      CollisionWitness w{*first_positive, *std::next(first_positive)};
      if (!best || std::pair(w.m1, w.m2) < std::pair(best->m1, best->m2)) best = w;
    } else if (ks.size() >= 2) {
      CollisionWitness w{ks[0], ks[1]};
      if (!fallback || std::pair(w.m1, w.m2) < std::pair(fallback->m1, fallback->m2)) fallback = w;
    }
  }
  return best ? best : fallback;
}

Rational reconstruct(const OperatorContext& ctx, const CollisionWitness& witness) {
  const auto [m1, m2] = witness;
  if (m1 == 0 || m2 == 0) {
    throw DomainError("reconstruction needs witness indices >= 1");
  }
  if (m1 == m2) {
    throw DomainError("witness indices must differ");
  }
  const Integer q1 = ctx.bases().q_at(m1);
  const Integer q2 = ctx.bases().q_at(m2);
  const Integer numerator = q1 * ctx.delta(m1 - 1) - q2 * ctx.delta(m2 - 1) + ctx.digit(m1) - ctx.digit(m2);
  const Integer denominator = ctx.product(m1) - ctx.product(m2);
  return make_rational(numerator, denominator);
}

CollisionWitness rationality_certificate(const Integer& a, const Integer& b, const BaseSequence& bases) {
  if (b <= 0 || a < 0 || a >= b || gcd(a, b) != 1) {
    throw DomainError("a/b must satisfy 0 <= a < b with gcd(a, b) = 1");
  }
  if (!b.fits_ulong_p()) {
    throw DomainError("denominator too large for a certificate trace");
  }
  const std::size_t horizon = b.get_ui() + 2;
  const auto trace = fractional_trace(make_rational(a, b), bases, horizon);
  // Entries 1..b+1 take at most b values, so a witness with m1 >= 1 exists in
  // the prefix 0..b+1. Searching only that prefix keeps m2 <= b + 1; the
  // lexicographically first pair over the whole trace may have m2 = b + 2.
  const auto witness = find_collision(std::span(trace).first(horizon));
  if (!witness || witness->m1 == 0) {
    throw IdentityViolation("no collision with m1 >= 1 within b + 2 trace entries");
  }
  return *witness;
}

}  // namespace cantor
