#pragma once

#include "json.hpp"

#include "cantor/expansion.hpp"
#include "cantor/numeric.hpp"
#include "cantor/rationality.hpp"

namespace cantor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cantor-kit/1";

/// Machine integers when they fit in a long, decimal strings otherwise.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"digits":[...],"tail":"zeros"|"max"|{"remainder":"a/b"}}
Json to_json(const DigitString& digits);
DigitString digit_string_from_json(const Json& j, const BaseSequence& bases);

Json to_json(const TraceEntry& entry);

/// {"m1":..,"m2":..,"value":"a/b","reconstructed":"a/b"}
Json certificate_json(const CollisionWitness& witness, const Rational& value, const Rational& reconstructed);

}  // namespace cantor
