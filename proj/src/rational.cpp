#include "citemetrics/rational.hpp"

#include "citemetrics/errors.hpp"

#include <cctype>
#include <sstream>

namespace citemetrics {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.erase(s.begin());
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational literal '" + text + "'");
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        result = Rational(BigInt(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw ParseError("malformed decimal literal '" + text + "'");
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(BigInt(whole) * scale + BigInt(frac), scale);
    } else {
        if (!all_digits(s)) throw ParseError("malformed integer literal '" + text + "'");
        result = Rational(BigInt(s));
    }
    return negative ? -result : result;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

}  // namespace citemetrics
