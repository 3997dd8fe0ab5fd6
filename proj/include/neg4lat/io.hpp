#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "neg4lat/lattice.hpp"
#include "neg4lat/weyl.hpp"

namespace neg4lat::io {

using nlohmann::json;

/// Accepts either the compact text form "a;b1,...,bk" (k = 0 is "a;") or a
/// JSON object {"k": int, "a": int, "b": [int, ...]}. Integers may be given as
/// JSON numbers or decimal strings.
LatticeClass parse_class(std::string_view literal);
LatticeClass class_from_json(const json& j);

/// Exact rational from "p/q", "p", or a JSON integer. Rejects decimals.
Rational parse_rational(std::string_view text);
Rational rational_from_json(const json& j);

/// Integers that fit in 64 bits are emitted as JSON numbers, others as strings.
json to_json(const Integer& v);
/// Rationals are always emitted as "p/q" strings ("p" when integral).
json to_json(const Rational& v);
json to_json(const LatticeClass& x);
json to_json(const RationalClass& x);
json to_json(const Reflection& r);
json to_json(const Move& m);
json to_json(const Word& w);

Reflection reflection_from_json(const json& j);
Move move_from_json(const json& j);
Word word_from_json(const json& j);

std::string rational_to_string(const Rational& v);

} // namespace neg4lat::io
