#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cantor/base_sequence.hpp"
#include "cantor/numeric.hpp"
#include "cantor/operators.hpp"

namespace cantor {

/// Entry k of the fractional-part trace: P_{k-1} sigma_k(x) split into its
/// integer and fractional parts (entry 0 is x itself).
struct TraceEntry {
  std::size_t k = 0;
  Rational value;            // {P_{k-1} sigma_k(x)}, in [0,1)
  Integer integer_component; // floor(P_{k-1} sigma_k(x)) = delta_{k-1}
};

/// Two trace indices m1 < m2 whose entries have equal fractional parts.
struct CollisionWitness {
  std::size_t m1 = 0;
  std::size_t m2 = 0;

  friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

/// Entries k = 0..horizon. Extends ctx to depth horizon.
std::vector<TraceEntry> fractional_trace(OperatorContext& ctx, std::size_t horizon);
std::vector<TraceEntry> fractional_trace(const Rational& x, const BaseSequence& bases, std::size_t horizon);

/// Lexicographically first (m1, m2) with equal values among pairs with
/// m1 >= 1; pairs with m1 = 0 are reported only when no such pair exists.
std::optional<CollisionWitness> find_collision(std::span<const TraceEntry> trace);

/// x = (q_{m1} delta_{m1-1} - q_{m2} delta_{m2-1} + e_{m1} - e_{m2}) / (P_{m1} - P_{m2}).
/// Needs m1, m2 >= 1 (DomainError otherwise) and m1 != m2.
Rational reconstruct(const OperatorContext& ctx, const CollisionWitness& witness);

/// Witness for x = a/b with m1 >= 1 and m2 <= b + 1, taken from a trace
/// with horizon b + 2. Throws DomainError
/// unless 0 <= a < b and gcd(a, b) = 1.
CollisionWitness rationality_certificate(const Integer& a, const Integer& b, const BaseSequence& bases);

}  // namespace cantor
