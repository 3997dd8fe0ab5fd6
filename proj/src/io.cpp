#include "neg4lat/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "neg4lat/errors.hpp"

namespace neg4lat::io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text)
{
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
        }
    }
    Integer v{std::string(digits)};
    return text.front() == '-' ? Integer(-v) : v;
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

std::size_t index_from_json(const json& j)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
        throw ParseError("expected a 1-based index, got " + j.dump());
    }
    return static_cast<std::size_t>(j.get<std::int64_t>() - 1);
}

} // namespace

LatticeClass class_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["b"].is_array()) {
        throw ParseError("class object needs \"a\" and an array \"b\": " + j.dump());
    }
    std::vector<Integer> b;
    for (const auto& v : j["b"]) b.push_back(integer_from_json(v));
    if (j.contains("k")) {
        const auto& k = j["k"];
        if (!k.is_number_integer() || k.get<std::int64_t>() != static_cast<std::int64_t>(b.size())) {
            throw ParseError("class object: \"k\" must equal the length of \"b\": " + j.dump());
        }
    }
    return LatticeClass(integer_from_json(j["a"]), std::move(b));
}

LatticeClass parse_class(std::string_view literal)
{
    const auto text = trim(literal);
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed class JSON: ") + e.what());
        }
        return class_from_json(j);
    }
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("class literal must look like \"a;b1,...,bk\", got '" + std::string(text) + "'");
    }
    Integer a = parse_integer(text.substr(0, semi));
    std::vector<Integer> b;
    auto rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        b.push_back(parse_integer(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (trim(rest).empty()) throw ParseError("trailing comma in class literal");
    }
    return LatticeClass(std::move(a), std::move(b));
}

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an exact rational (\"p/q\" string or integer), got " + j.dump());
}

std::string rational_to_string(const Rational& v)
{
    const Integer num = boost::multiprecision::numerator(v);
    const Integer den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

json to_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

json to_json(const Rational& v) { return rational_to_string(v); }

json to_json(const LatticeClass& x)
{
    json b = json::array();
    for (const auto& v : x.b()) b.push_back(to_json(v));
    return json{{"k", x.k()}, {"a", to_json(x.a())}, {"b", std::move(b)}};
}

json to_json(const RationalClass& x)
{
    json b = json::array();
    for (const auto& v : x.b()) b.push_back(to_json(v));
    return json{{"k", x.k()}, {"a", to_json(x.a())}, {"b", std::move(b)}};
}

json to_json(const Reflection& r)
{
    json idx = json::array();
    for (auto i : r.indices()) idx.push_back(i + 1);
    return json{{"kind", r.kind() == ReflectionKind::pair ? "pair" : "cremona"}, {"indices", idx}};
}

json to_json(const Move& m)
{
    switch (m.type) {
    case Move::Type::flip: return json{{"op", "flip"}, {"i", m.i + 1}};
    case Move::Type::swap: return json{{"op", "swap"}, {"i", m.i + 1}, {"j", m.j + 1}};
    case Move::Type::reflect: return json{{"op", "reflect"}, {"reflection", to_json(*m.reflection)}};
    case Move::Type::global_sign: return json{{"op", "global_sign"}};
    }
    return {};
}

json to_json(const Word& w)
{
    json out = json::array();
    for (const auto& m : w) out.push_back(to_json(m));
    return out;
}

Reflection reflection_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.contains("indices") || !j["indices"].is_array()) {
        throw ParseError("reflection needs \"kind\" and \"indices\": " + j.dump());
    }
    const auto& idx = j["indices"];
    const auto kind = j["kind"].get<std::string>();
    if (kind == "pair" && idx.size() == 2) {
        return Reflection::pair_kind(index_from_json(idx[0]), index_from_json(idx[1]));
    }
    if (kind == "cremona" && idx.size() == 3) {
        return Reflection::cremona(index_from_json(idx[0]), index_from_json(idx[1]),
                                   index_from_json(idx[2]));
    }
    throw ParseError("bad reflection: " + j.dump());
}

Move move_from_json(const json& j)
{
    const auto op = j.value("op", std::string());
    if (op == "flip") return Move::flip(index_from_json(j.at("i")));
    if (op == "swap") return Move::swap(index_from_json(j.at("i")), index_from_json(j.at("j")));
    if (op == "reflect") return Move::reflect(reflection_from_json(j.at("reflection")));
    if (op == "global_sign") return Move::global_sign();
    throw ParseError("unknown move: " + j.dump());
}

Word word_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("word must be a JSON array");
    Word w;
    for (const auto& m : j) w.push_back(move_from_json(m));
    return w;
}

} // namespace neg4lat::io
