#ifndef EXPOLY_MULTIPOLY_HPP
#define EXPOLY_MULTIPOLY_HPP

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "expoly/rational.hpp"

namespace expoly {

/// The three ring variables. λ is spelled `l` in text.
enum class Var : std::uint8_t { lambda = 0, x = 1, y = 2 };

inline constexpr std::array<Var, 3> kAllVars = {Var::lambda, Var::x, Var::y};

inline char var_symbol(Var v) {
    switch (v) {
        case Var::lambda: return 'l';
        case Var::x: return 'x';
        case Var::y: return 'y';
    }
    return '?';
}

struct Monomial {
    std::uint32_t exp_lambda = 0;
    std::uint32_t exp_x = 0;
    std::uint32_t exp_y = 0;

    std::uint32_t exponent(Var v) const {
        switch (v) {
            case Var::lambda: return exp_lambda;
            case Var::x: return exp_x;
            case Var::y: return exp_y;
        }
        return 0;
    }

    Monomial with_exponent(Var v, std::uint32_t e) const {
        Monomial m = *this;
        switch (v) {
            case Var::lambda: m.exp_lambda = e; break;
            case Var::x: m.exp_x = e; break;
            case Var::y: m.exp_y = e; break;
        }
        return m;
    }

    std::uint32_t total_degree() const { return exp_lambda + exp_x + exp_y; }
    bool is_constant() const { return total_degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.exp_lambda + b.exp_lambda, a.exp_x + b.exp_x, a.exp_y + b.exp_y};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term order used for storage and printing: descending in x, then y, then λ.
/// Reads as a polynomial in x (and y) with coefficients in λ, highest powers first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::tie(b.exp_x, b.exp_y, b.exp_lambda) < std::tie(a.exp_x, a.exp_y, a.exp_lambda);
    }
};

struct Substitution;

/// Polynomial in Q[λ, x, y], kept in canonical sparse form (no zero coefficients).
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) {  // NOLINT(implicit)
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    MultiPoly(std::int64_t c) : MultiPoly(Rational(c)) {}  // NOLINT(implicit)

    static MultiPoly variable(Var v) { return monomial(Monomial{}.with_exponent(v, 1)); }
    static MultiPoly lambda() { return variable(Var::lambda); }
    static MultiPoly x() { return variable(Var::x); }
    static MultiPoly y() { return variable(Var::y); }

    static MultiPoly monomial(const Monomial& m, const Rational& c = Rational(1)) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    static MultiPoly from_terms(std::initializer_list<std::pair<Monomial, Rational>> terms) {
        MultiPoly p;
        for (const auto& [m, c] : terms) p.accumulate(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest exponent of `v`; 0 for the zero polynomial.
    std::uint32_t degree(Var v) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool contains(Var v) const { return degree(v) > 0; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
        for (const auto& [m, c] : b.terms_) a.accumulate(m, c);
        return a;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
        for (const auto& [m, c] : b.terms_) a.accumulate(m, -c);
        return a;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
        }
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
        if (s.is_zero()) return {};
        MultiPoly r = p;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& p, const Rational& s) { return s * p; }
    friend MultiPoly operator/(const MultiPoly& p, const Rational& s) { return s.inverse() * p; }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(std::uint32_t k) const {
        MultiPoly result(1);
        MultiPoly base = *this;
        while (k != 0) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k != 0) base = base * base;
        }
        return result;
    }

    MultiPoly substitute(const Substitution& sigma) const;

    /// Formal partial derivative.
    MultiPoly diff(Var v) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            const auto e = m.exponent(v);
            if (e == 0) continue;
            r.accumulate(m.with_exponent(v, e - 1), c * Rational(e));
        }
        return r;
    }

    /// Definite integral over v in [0, 1]; the result does not contain v.
    MultiPoly integrate01(Var v) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            const auto e = m.exponent(v);
            r.accumulate(m.with_exponent(v, 0), c / Rational(static_cast<std::int64_t>(e) + 1));
        }
        return r;
    }

    /// Multiplies by λ^shift. A negative shift must divide every term exactly.
    MultiPoly shift_lambda(std::int32_t shift) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            const std::int64_t e = static_cast<std::int64_t>(m.exp_lambda) + shift;
            if (e < 0) {
                throw std::domain_error("lambda shift leaves the polynomial ring");
            }
            r.terms_.emplace(m.with_exponent(Var::lambda, static_cast<std::uint32_t>(e)), c);
        }
        return r;
    }

    Rational eval(const Rational& lambda, const Rational& x, const Rational& y) const {
        Rational sum;
        for (const auto& [m, c] : terms_) {
            sum += c * lambda.pow(m.exp_lambda) * x.pow(m.exp_x) * y.pow(m.exp_y);
        }
        return sum;
    }

    /// Canonical text, e.g. `l^2*x - 2*l*x + l^3`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c.sign() < 0;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            const Rational mag = c.abs();
            std::string factors;
            for (Var v : {Var::lambda, Var::x, Var::y}) {
                const auto e = m.exponent(v);
                if (e == 0) continue;
                if (!factors.empty()) factors += '*';
                factors += var_symbol(v);
                if (e > 1) factors += '^' + std::to_string(e);
            }
            if (factors.empty()) {
                out += mag.to_string();
            } else if (mag.is_one()) {
                out += factors;
            } else {
                out += mag.to_string() + '*' + factors;
            }
        }
        return out;
    }

    /// Parses the canonical text form (and any reordering of it).
    static MultiPoly parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void accumulate(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Terms terms_;
};

/// Simultaneous substitution. An unset slot leaves that variable unchanged.
struct Substitution {
    std::optional<MultiPoly> lambda;
    std::optional<MultiPoly> x;
    std::optional<MultiPoly> y;
};

inline MultiPoly MultiPoly::substitute(const Substitution& sigma) const {
    // Powers of each image are cached per variable.
    std::array<std::vector<MultiPoly>, 3> powers;
    std::array<const MultiPoly*, 3> images = {
        sigma.lambda ? &*sigma.lambda : nullptr,
        sigma.x ? &*sigma.x : nullptr,
        sigma.y ? &*sigma.y : nullptr,
    };
    auto power_of = [&](Var v, std::uint32_t e) -> MultiPoly {
        const auto i = static_cast<std::size_t>(v);
        if (images[i] == nullptr) return MultiPoly::monomial(Monomial{}.with_exponent(v, e));
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(1);
        while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
        return cache[e];
    };
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        r += c * power_of(Var::lambda, m.exp_lambda) * power_of(Var::x, m.exp_x) * power_of(Var::y, m.exp_y);
    }
    return r;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly result;
        skip_space();
        if (at_end()) error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            first = false;
            MultiPoly term = parse_term();
            result += sign < 0 ? -term : term;
            skip_space();
        }
        return result;
    }

private:
    MultiPoly parse_term() {
        MultiPoly term = parse_factor();
        skip_space();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_space();
            term = term * parse_factor();
            skip_space();
        }
        return term;
    }

    MultiPoly parse_factor() {
        if (at_end()) error("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = parse_digits();
            BigInt den = 1;
            if (!at_end() && peek() == '/') {
                ++pos_;
                den = parse_digits();
                if (den == 0) error("zero denominator");
            }
            return MultiPoly(Rational(num, den));
        }
        Var v{};
        switch (c) {
            case 'l': v = Var::lambda; break;
            case 'x': v = Var::x; break;
            case 'y': v = Var::y; break;
            default: error(std::string("unexpected character '") + c + "'");
        }
        ++pos_;
        std::uint32_t e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            const BigInt digits = parse_digits();
            if (digits > 100000) error("exponent too large");
            e = digits.convert_to<std::uint32_t>();
        }
        return MultiPoly::monomial(Monomial{}.with_exponent(v, e));
    }

    BigInt parse_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) error("expected digits");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void error(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(std::string_view text) { return detail::PolyParser(text).parse(); }

// Free-function spellings of the ring operations.

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline MultiPoly poly_pow(const MultiPoly& p, std::uint32_t k) { return p.pow(k); }
inline MultiPoly poly_substitute(const MultiPoly& p, const Substitution& sigma) { return p.substitute(sigma); }
inline MultiPoly poly_diff(const MultiPoly& p, Var v) { return p.diff(v); }
inline MultiPoly poly_integrate01(const MultiPoly& p, Var v) { return p.integrate01(v); }
inline Rational poly_eval(const MultiPoly& p, const Rational& lambda, const Rational& x, const Rational& y) {
    return p.eval(lambda, x, y);
}
inline bool poly_eq(const MultiPoly& p, const MultiPoly& q) { return (p - q).is_zero(); }

}  // namespace expoly

#endif
