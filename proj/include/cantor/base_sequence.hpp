#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/numeric.hpp"

namespace cantor {

/// Description of a base sequence Q = (q_k), k >= 1.
///
/// Textual form:
///   spec := "const:" INT | "cycle:" INT ("," INT)* | "list:" INT ("," INT)* ";then;" spec | "rule:succ"
struct BaseSpec {
  enum class Kind { constant, cycle, list_then, rule };
  enum class Rule { successor };

  Kind kind = Kind::constant;
  /// constant: one value; cycle: the period; list_then: the explicit prefix.
  std::vector<Integer> values;
  /// Continuation for list_then, null otherwise.
  std::shared_ptr<const BaseSpec> then;
  Rule rule = Rule::successor;

  static BaseSpec constant(Integer q);
  static BaseSpec cycle(std::vector<Integer> period);
  static BaseSpec list_then(std::vector<Integer> prefix, BaseSpec continuation);
  static BaseSpec successor();

  /// q_k computed straight from the rule, no caching. Requires k >= 1.
  Integer base_at(std::size_t k) const;
};

BaseSpec parse_base_spec(std::string_view text);
std::string to_string(const BaseSpec& spec);

/// A resolved base sequence with a lazily grown table of q_k and prefix
/// products P_k = q_1...q_k (P_0 = 1).
///
/// Copies are cheap handles onto the same cache. Cache extension is guarded by
/// a mutex, so a BaseSequence may be shared between threads.
class BaseSequence {
public:
  explicit BaseSequence(BaseSpec spec);
  static BaseSequence parse(std::string_view text) { return BaseSequence(parse_base_spec(text)); }

  const BaseSpec& spec() const { return state_->spec; }

  /// q_k, k >= 1.
  Integer q_at(std::size_t k) const;
  /// P_k, k >= 0.
  Integer product_prefix(std::size_t k) const;

private:
  struct State {
    BaseSpec spec;
    std::mutex mutex;
    std::vector<Integer> bases;     // bases[k-1] = q_k
    std::vector<Integer> products;  // products[k] = P_k
  };

  void resolve_locked(State& s, std::size_t k) const;

  std::shared_ptr<State> state_;
};

}  // namespace cantor
