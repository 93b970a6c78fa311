#include "mws/rational.hpp"

#include <cctype>
#include <limits>

namespace mws {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_i128(i128 num, i128 den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw Error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    // Terminating decimal when den = 2^a * 5^b, else p/q.
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    int digits = twos > fives ? twos : fives;
    i128 scaled = i128(num_);
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string raw;
    while (scaled > 0) {
        raw.insert(raw.begin(), static_cast<char>('0' + int(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(raw.size()) <= digits) raw.insert(raw.begin(), '0');
    raw.insert(raw.size() - digits, ".");
    return (neg ? "-" : "") + raw;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational token");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = std::stoll(text.substr(0, slash));
        std::int64_t q = std::stoll(text.substr(slash + 1));
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        size_t pos = 0;
        std::int64_t v = std::stoll(text, &pos);
        if (pos != text.size()) throw Error("trailing characters in rational token: " + text);
        return Rational(v);
    }
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw Error("malformed decimal: " + text);
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed decimal: " + text);
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    if (w < 0) w = -w;
    i128 num = w;
    i128 den = 1;
    for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
        if (den > std::numeric_limits<std::int64_t>::max() / 10)
            throw Error("decimal too long: " + text);
    }
    if (neg) num = -num;
    return from_i128(num, den);
}

}  // namespace mws
