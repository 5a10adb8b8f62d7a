#include "cantor/base_sequence.hpp"

#include <cctype>
#include <stdexcept>

namespace cantor {

namespace {

void require_base(const Integer& q, std::size_t position) {
  if (q < 2) {
    throw ParseError("base " + q.get_str() + " is below 2", position);
  }
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  BaseSpec parse() {
    BaseSpec spec = parse_spec();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input", pos_);
    }
    return spec;
  }

private:
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Integer parse_int() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      throw ParseError("expected an integer", start);
    }
    Integer q = parse_natural(text_.substr(start, pos_ - start), start);
    require_base(q, start);
    return q;
  }

  std::vector<Integer> parse_list() {
    std::vector<Integer> values{parse_int()};
    while (consume(",")) values.push_back(parse_int());
    return values;
  }

  BaseSpec parse_spec() {
    if (consume("const:")) return BaseSpec::constant(parse_int());
    if (consume("cycle:")) return BaseSpec::cycle(parse_list());
    if (consume("list:")) {
      auto prefix = parse_list();
      if (!consume(";then;")) {
        throw ParseError("expected ';then;'", pos_);
      }
      return BaseSpec::list_then(std::move(prefix), parse_spec());
    }
    if (consume("rule:")) {
      if (consume("succ")) return BaseSpec::successor();
      throw ParseError("unknown rule", pos_);
    }
    throw ParseError("expected 'const:', 'cycle:', 'list:' or 'rule:'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

BaseSpec BaseSpec::constant(Integer q) {
  if (q < 2) throw DomainError("base below 2");
  BaseSpec s;
  s.kind = Kind::constant;
  s.values = {std::move(q)};
  return s;
}

BaseSpec BaseSpec::cycle(std::vector<Integer> period) {
  if (period.empty()) throw DomainError("empty cycle");
  for (const auto& q : period) {
    if (q < 2) throw DomainError("base below 2");
  }
  BaseSpec s;
  s.kind = Kind::cycle;
  s.values = std::move(period);
  return s;
}

BaseSpec BaseSpec::list_then(std::vector<Integer> prefix, BaseSpec continuation) {
  if (prefix.empty()) throw DomainError("empty list");
  for (const auto& q : prefix) {
    if (q < 2) throw DomainError("base below 2");
  }
  BaseSpec s;
  s.kind = Kind::list_then;
  s.values = std::move(prefix);
  s.then = std::make_shared<const BaseSpec>(std::move(continuation));
  return s;
}

BaseSpec BaseSpec::successor() {
  BaseSpec s;
  s.kind = Kind::rule;
  s.rule = Rule::successor;
  return s;
}

Integer BaseSpec::base_at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("base index starts at 1");
  // Walk list_then chains iteratively; nesting depth is user controlled.
  const BaseSpec* s = this;
  while (s->kind == Kind::list_then) {
    if (k <= s->values.size()) return s->values[k - 1];
    k -= s->values.size();
    s = s->then.get();
  }
  switch (s->kind) {
    case Kind::constant:
      return s->values.front();
    case Kind::cycle:
      return s->values[(k - 1) % s->values.size()];
    case Kind::rule:
      return Integer(static_cast<unsigned long>(k)) + 1;
    case Kind::list_then:
      break;
  }
  throw std::logic_error("unreachable");
}

BaseSpec parse_base_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const BaseSpec& spec) {
  switch (spec.kind) {
    case BaseSpec::Kind::constant:
      return "const:" + spec.values.front().get_str();
    case BaseSpec::Kind::cycle:
      return "cycle:" + join(spec.values);
    case BaseSpec::Kind::list_then:
      return "list:" + join(spec.values) + ";then;" + to_string(*spec.then);
    case BaseSpec::Kind::rule:
      return "rule:succ";
  }
  return {};
}

BaseSequence::BaseSequence(BaseSpec spec) : state_(std::make_shared<State>()) {
  state_->spec = std::move(spec);
  state_->products.emplace_back(1);
}

void BaseSequence::resolve_locked(State& s, std::size_t k) const {
  // Amortized doubling keeps sequential scans linear.
  if (k <= s.bases.size()) return;
  const std::size_t target = std::max(k, 2 * s.bases.size());
  s.bases.reserve(target);
  s.products.reserve(target + 1);
  while (s.bases.size() < target) {
    const std::size_t next = s.bases.size() + 1;
    Integer q = s.spec.base_at(next);
    s.products.push_back(s.products.back() * q);
    s.bases.push_back(std::move(q));
  }
}

Integer BaseSequence::q_at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("base index starts at 1");
  std::lock_guard lock(state_->mutex);
  resolve_locked(*state_, k);
  return state_->bases[k - 1];
}

Integer BaseSequence::product_prefix(std::size_t k) const {
  std::lock_guard lock(state_->mutex);
  resolve_locked(*state_, k);
  return state_->products[k];
}

}  // namespace cantor
