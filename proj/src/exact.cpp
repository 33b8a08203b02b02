#include "descprox/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace descprox {

namespace {

BigInt parse_digits(const std::string& s, const std::string& original) {
    if (s.empty()) throw std::invalid_argument("not a number: \"" + original + "\"");
    BigInt v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("not a number: \"" + original + "\"");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s = s.substr(1);
    }

    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt num = parse_digits(s.substr(0, slash), text);
        BigInt den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
        Rational r(num, den);
        return negative ? -r : r;
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        BigInt whole = dot == 0 ? BigInt(0) : parse_digits(s.substr(0, dot), text);
        BigInt num = parse_digits(frac, text);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational r = Rational(whole) + Rational(num, den);
        return negative ? -r : r;
    }

    Rational r(parse_digits(s, text));
    return negative ? -r : r;
}

std::string rational_to_string(const Rational& r) {
    BigInt num = r.numerator();
    BigInt den = r.denominator();
    if (den == 1) return num.str();

    // Count how many powers of ten are needed to clear the denominator.
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return num.str() + "/" + den.str();

    int digits = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * (scale / den);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.str();
    if (body.size() <= static_cast<std::size_t>(digits))
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + body;
}

}  // namespace descprox
