#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mws/error.hpp"

namespace mws {

/// Exact rational on int64 with 128-bit intermediates. Always normalized:
/// gcd(num, den) == 1, den > 0. Throws on overflow instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact value as text: integer, terminating decimal, or "p/q".
    std::string to_string() const;

    /// Parses an integer, a plain decimal ("2.5"), or "p/q".
    static Rational parse(const std::string& text);

    std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }
    std::int64_t ceil() const { return -(-*this).floor(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using i128 = __int128;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    static Rational from_i128(i128 num, i128 den);

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace mws
