#ifndef EXPOLY_RATIONAL_HPP
#define EXPOLY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace expoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = den < 0 ? boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den))
                         : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(Raw{-value_}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) {
            throw std::domain_error("inverse of zero");
        }
        return Rational(Raw{1 / value_});
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ + b.value_}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ - b.value_}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ * b.value_}); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) {
            throw std::domain_error("division by zero");
        }
        return Rational(Raw{a.value_ / b.value_});
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Integer power; negative exponents invert first.
    Rational pow(std::int64_t e) const {
        Rational base = e < 0 ? inverse() : *this;
        std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        Rational result(1);
        while (k != 0) {
            if (k & 1U) result *= base;
            base *= base;
            k >>= 1U;
        }
        return result;
    }

    /// `p` or `p/q` with q > 1.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

    /// Accepts `[+-]digits` or `[+-]digits/digits`. Decimals are rejected.
    static Rational parse(std::string_view text) {
        auto fail = [&]() -> Rational {
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        };
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        auto digits = [&](BigInt& out) {
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start) return false;
            out = BigInt(std::string(text.substr(start, pos - start)));
            return true;
        };
        BigInt num;
        BigInt den = 1;
        if (!digits(num)) return fail();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            if (!digits(den)) return fail();
            if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
        }
        if (pos != text.size()) return fail();
        return Rational(negative ? BigInt(-num) : num, den);
    }

    static Rational factorial(unsigned n) {
        BigInt f = 1;
        for (unsigned i = 2; i <= n; ++i) f *= i;
        return Rational(f);
    }

    static Rational binomial(unsigned n, unsigned k) {
        if (k > n) return Rational(0);
        BigInt c = 1;
        for (unsigned i = 1; i <= k; ++i) {
            c *= (n - k + i);
            c /= i;
        }
        return Rational(c);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct Raw {
        boost::multiprecision::cpp_rational v;
    };
    explicit Rational(Raw raw) : value_(std::move(raw.v)) {}

    boost::multiprecision::cpp_rational value_;
};

}  // namespace expoly

#endif
