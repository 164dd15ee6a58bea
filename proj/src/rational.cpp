#include "bcond/rational.hpp"

#include <cctype>

#include "bcond/errors.hpp"

namespace bcond {

namespace {

BigInt parse_digits(std::string_view text, std::string_view context) {
    if (text.empty())
        throw validation_error("expected digits in " + std::string(context));
    BigInt value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw validation_error("bad numeric value '" + std::string(context) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw validation_error("empty numeric value");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(s.substr(0, slash), text);
        BigInt den = parse_digits(s.substr(slash + 1), text);
        if (den == 0)
            throw validation_error("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw validation_error("bad numeric value '" + std::string(text) + "'");
        BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole, text);
        BigInt den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw validation_error("bad numeric value '" + std::string(text) + "'");
            num = num * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(num, den);
    } else {
        value = Rational(parse_digits(s, text));
    }
    return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
    std::string out = numerator(r).convert_to<std::string>();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).convert_to<std::string>();
    }
    return out;
}

std::string format_decimal(const Rational& r, int places) {
    BigInt pow10 = 1;
    for (int i = 0; i < places; ++i)
        pow10 *= 10;

    Rational scaled = r * pow10;
    BigInt num = numerator(scaled);
    BigInt den = denominator(scaled);
    bool negative = num < 0;
    if (negative)
        num = -num;

    BigInt quot = num / den;
    BigInt rem = num % den;
    // Half-even rounding on the remainder.
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && quot % 2 != 0))
        ++quot;

    std::string digits = quot.convert_to<std::string>();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, places + 1 - digits.size(), '0');

    std::string out;
    if (negative)
        out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

} // namespace bcond
