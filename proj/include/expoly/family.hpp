#ifndef EXPOLY_FAMILY_HPP
#define EXPOLY_FAMILY_HPP

#include <cstdint>

#include "expoly/multipoly.hpp"
#include "expoly/series.hpp"

namespace expoly {

/// E_n(λ:x) = λ(x − λ)^n, expanded.
inline MultiPoly closed_form(std::uint32_t n) {
    return MultiPoly::lambda() * (MultiPoly::x() - MultiPoly::lambda()).pow(n);
}

/// E_n(λ:x) read off the generating function λ·e^{−λt}·e^{xt}.
///
/// The two exponentials are multiplied as separate series so that this route
/// never uses the collapsed form e^{(x−λ)t} and stays independent of closed_form.
inline MultiPoly via_gf(std::uint32_t n) {
    const auto decay = series_exp(-MultiPoly::lambda(), n);
    const auto growth = series_exp(MultiPoly::x(), n);
    return egf_coeff(series_scale(series_mul(decay, growth), MultiPoly::lambda()), n);
}

/// E_n(λ) = E_n(λ:0) = (−1)^n λ^{n+1}.
inline MultiPoly number(std::uint32_t n) {
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    return MultiPoly::monomial(Monomial{n + 1, 0, 0}, sign);
}

/// E_n evaluated at rescaled or shifted arguments, E_n(σ(λ) : σ(x)).
inline MultiPoly closed_form_at(std::uint32_t n, const Substitution& sigma) {
    return closed_form(n).substitute(sigma);
}

}  // namespace expoly

#endif
