#ifndef EXPOLY_SERIES_HPP
#define EXPOLY_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expoly/multipoly.hpp"

namespace expoly {

/// Power series in t truncated after t^order: c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes exactly order+1 coefficients.
    TruncatedSeries(std::size_t order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order + 1) {
            throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                        std::to_string(order + 1) + " coefficients, got " +
                                        std::to_string(coeffs_.size()));
        }
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    const MultiPoly& operator[](std::size_t k) const {
        if (k > order()) throw std::out_of_range("series coefficient beyond truncation order");
        return coeffs_[k];
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<MultiPoly> coeffs_;
};

/// Cauchy product truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& u) {
    if (s.order() != u.order()) {
        throw std::invalid_argument("series_mul: order mismatch (" + std::to_string(s.order()) + " vs " +
                                    std::to_string(u.order()) + ")");
    }
    const std::size_t order = s.order();
    std::vector<MultiPoly> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t j = 0; j <= n; ++j) out[n] += s[j] * u[n - j];
    }
    return TruncatedSeries(order, std::move(out));
}

/// exp(c·t) truncated at `order`; coefficient k is c^k / k!.
inline TruncatedSeries series_exp(const MultiPoly& c, std::size_t order) {
    std::vector<MultiPoly> out;
    out.reserve(order + 1);
    out.emplace_back(1);
    for (std::size_t k = 1; k <= order; ++k) {
        out.push_back(out.back() * c / Rational(static_cast<std::int64_t>(k)));
    }
    return TruncatedSeries(order, std::move(out));
}

inline TruncatedSeries series_scale(const TruncatedSeries& s, const MultiPoly& p) {
    std::vector<MultiPoly> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) out.push_back(c * p);
    return TruncatedSeries(s.order(), std::move(out));
}

/// n!·c_n, the n-th coefficient of the series read as an exponential generating function.
inline MultiPoly egf_coeff(const TruncatedSeries& s, std::size_t n) {
    if (n > s.order()) {
        throw std::out_of_range("egf_coeff: n=" + std::to_string(n) + " exceeds order " + std::to_string(s.order()));
    }
    return Rational::factorial(static_cast<unsigned>(n)) * s[n];
}

}  // namespace expoly

#endif
