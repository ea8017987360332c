#include "pcx/rational.hpp"

#include <cctype>

#include "pcx/errors.hpp"

namespace pcx {

std::string to_string(const Rational& r) {
    return r.str();
}

Rational rational_from_string(const std::string& s) {
    size_t pos = 0;
    auto syntax = [&](const std::string& msg) {
        fail("syntax_error", "bad rational '" + s + "': " + msg);
    };
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    auto read_uint = [&]() {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            syntax("expected digits");
        Integer v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    };
    Integer num = read_uint();
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_uint();
        if (den == 0)
            syntax("zero denominator");
    }
    if (pos != s.size())
        syntax("trailing characters");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::optional<Rational> sqrt_exact(const Rational& r) {
    if (r < 0)
        fail("bad_argument", "sqrt_exact of negative rational " + to_string(r));
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den)
        return std::nullopt;
    return Rational(sn, sd);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace pcx
