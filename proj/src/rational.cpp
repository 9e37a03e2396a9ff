#include "hilbfock/rational.hpp"

#include "hilbfock/errors.hpp"

#include <string_view>

namespace hilbfock {

namespace {

Int parse_signed_integer(std::string_view part, const std::string& full) {
    bool negative = !part.empty() && part.front() == '-';
    std::string_view digits = negative ? part.substr(1) : part;
    if (digits.empty() || digits.find_first_not_of("0123456789") != digits.npos) {
        throw ValidationError("not an exact rational: '" + full + "'");
    }
    Int value{std::string(digits)};
    if (negative) {
        value = -value;
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_signed_integer(text, text));
    }
    std::string_view view(text);
    Int num = parse_signed_integer(view.substr(0, slash), text);
    Int den = parse_signed_integer(view.substr(slash + 1), text);
    if (den == 0) {
        throw ValidationError("zero denominator: '" + text + "'");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string rational_str(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

Int integer_value(const Rational& value) {
    if (!is_integer(value)) {
        throw ConsistencyError("expected an integer, got " + rational_str(value));
    }
    return numerator(value);
}

}  // namespace hilbfock
