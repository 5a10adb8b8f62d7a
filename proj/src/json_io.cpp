#include "cantor/json_io.hpp"

namespace cantor {

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(to_string(value));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto r = parse_rational(text);
    if (!is_integer(r)) throw ParseError("expected an integer", 0);
    return r.get_num();
  }
  throw ParseError("expected an integer", 0);
}

Json to_json(const DigitString& digits) {
  Json out;
  Json list = Json::array();
  for (const auto& d : digits.digits()) list.push_back(integer_to_json(d));
  out["digits"] = std::move(list);
  switch (digits.tail().kind) {
    case Tail::Kind::zeros:
      out["tail"] = "zeros";
      break;
    case Tail::Kind::max:
      out["tail"] = "max";
      break;
    case Tail::Kind::remainder:
      out["tail"] = Json{{"remainder", to_string(digits.tail().remainder)}};
      break;
  }
  return out;
}

DigitString digit_string_from_json(const Json& j, const BaseSequence& bases) {
  std::vector<Integer> digits;
  for (const auto& d : j.at("digits")) digits.push_back(integer_from_json(d));
  const auto& tail = j.at("tail");
  Tail t;
  if (tail.is_string() && tail.get<std::string>() == "zeros") {
    t = Tail::zeros();
  } else if (tail.is_string() && tail.get<std::string>() == "max") {
    t = Tail::all_max();
  } else if (tail.is_object() && tail.contains("remainder")) {
    t = Tail::exact(parse_rational(tail.at("remainder").get<std::string>()));
  } else {
    throw ParseError("unknown tail form", 0);
  }
  return DigitString(bases, std::move(digits), std::move(t));
}

Json to_json(const TraceEntry& entry) {
  return Json{{"k", entry.k}, {"value", to_string(entry.value)}, {"integer_component", to_string(entry.integer_component)}};
}

Json certificate_json(const CollisionWitness& witness, const Rational& value, const Rational& reconstructed) {
  return Json{{"m1", witness.m1}, {"m2", witness.m2}, {"value", to_string(value)}, {"reconstructed", to_string(reconstructed)}};
}

}  // namespace cantor
