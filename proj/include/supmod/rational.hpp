#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace supmod {

// Exact rational scalar. Always stored normalized: denominator positive,
// numerator and denominator coprime. All the matrix tests in this library
// are inequality comparisons of entry sums, so the scalar type must never
// round; intermediates are computed in 128 bits and results that do not
// fit back into 64 bits raise std::overflow_error instead of losing
// precision silently.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(long long n) noexcept : num_(n), den_(1) {}

    static Rational fraction(long long num, long long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return normalized(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return normalized(static_cast<__int128>(a.num_) + b.num_, 1);
        return normalized(static_cast<__int128>(a.num_) * b.den_ +
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return normalized(static_cast<__int128>(a.num_) - b.num_, 1);
        return normalized(static_cast<__int128>(a.num_) * b.den_ -
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return normalized(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;  // num_ > INT64_MIN is a normalization invariant
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) noexcept {
        // Cross products of int64 operands cannot overflow __int128.
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }

    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) noexcept {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational normalized(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
        } else {
            __int128 g = gcd128(num, den);
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = std::numeric_limits<long long>::min();
        constexpr __int128 hi = std::numeric_limits<long long>::max();
        // Keep INT64_MIN out so unary negation stays total.
        if (num <= lo || num > hi || den > hi)
            throw std::overflow_error("rational value out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    long long num_;
    long long den_;
};

}  // namespace supmod
