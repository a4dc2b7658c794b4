#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gpss {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored fully reduced with a positive
/// denominator, so equality is plain structural equality.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    Rational(BigInt value) : num_(std::move(value)) {}
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // Denominators are positive, so cross-multiplication preserves order.
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Renders "num/den", or just "num" when the value is an integer.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "-?digits" or "-?digits/digits" (denominator positive).
    /// Throws std::invalid_argument on any other shape.
    static Rational parse(std::string_view text) {
        const auto bad = [&] {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        };
        std::string_view rest = text;
        bool negative = false;
        if (!rest.empty() && rest.front() == '-') {
            negative = true;
            rest.remove_prefix(1);
        }
        const auto digits = [&](std::string_view s) {
            if (s.empty()) bad();
            for (char c : s)
                if (c < '0' || c > '9') bad();
        };
        std::string_view num_part = rest;
        std::string_view den_part;
        if (auto slash = rest.find('/'); slash != std::string_view::npos) {
            num_part = rest.substr(0, slash);
            den_part = rest.substr(slash + 1);
            digits(den_part);
        }
        digits(num_part);
        BigInt num(std::string(num_part));
        if (negative) num = -num;
        if (den_part.empty()) return Rational(std::move(num));
        BigInt den{std::string(den_part)};
        if (den.is_zero()) bad();
        return Rational(std::move(num), std::move(den));
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_.is_zero()) den_ = 1;
    }

    BigInt num_{0};
    BigInt den_{1};
};

}  // namespace gpss
