#include "biform/rational.hpp"

#include <cctype>

namespace biform {

namespace {

bool parse_integer(const std::string& text, Integer& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = Integer(text);
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    Integer num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(text, num)) return std::nullopt;
    } else {
        if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) out += "/" + denominator(value).str();
    return out;
}

}  // namespace biform
