#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "valleypaths/polynomial.hpp"

namespace valleypaths {

// Power series in x truncated after x^order; coefficients are polynomials.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}
    explicit TruncatedSeries(std::vector<Polynomial> coeffs);

    static TruncatedSeries constant(const Polynomial& c, std::size_t order);
    // c * x^k truncated at order (zero series when k > order).
    static TruncatedSeries monomial(const Polynomial& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    const Polynomial& operator[](std::size_t n) const { return coeffs_.at(n); }
    Polynomial& operator[](std::size_t n) { return coeffs_.at(n); }

    TruncatedSeries truncate(std::size_t order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Polynomial& p);
    friend TruncatedSeries operator*(const Polynomial& p, const TruncatedSeries& a) { return a * p; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    std::vector<Polynomial> coeffs_;
};

// 1/A for A whose constant term is a nonzero rational.
TruncatedSeries inverse(const TruncatedSeries& a);
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& a, unsigned k);
// A / x^k; requires c_0..c_{k-1} = 0 and lowers the order by k.
TruncatedSeries shift_div_x(const TruncatedSeries& a, std::size_t k);
// A * x^k, keeping the order.
TruncatedSeries shift_mul_x(const TruncatedSeries& a, std::size_t k);
// Coefficientwise exact division by a polynomial.
TruncatedSeries div_scalar_poly(const TruncatedSeries& a, const Polynomial& p);
// Coefficientwise substitution.
TruncatedSeries eval(const TruncatedSeries& a, const std::map<Var, Polynomial>& bindings);

using SeriesMap = std::function<TruncatedSeries(const TruncatedSeries&)>;

// Fixed point of an x-adic contraction, truncated at `order`. The contraction
// property is probed at every valuation and the result is re-substituted.
TruncatedSeries solve_fe(const SeriesMap& phi, std::size_t order);

// Named generating functions. Parameters stay symbolic: a, b for motzkin_ab,
// q for the Schroeder series, t for narayana / f_series / chebyshev_u.
enum class NamedSeries {
    Catalan,
    MotzkinAB,
    SchroderLarge,
    SchroderSmall,
    Narayana,
    FSeries,
    ChebyshevU,
    Fuss,
    Delannoy,
};

TruncatedSeries gen_named(NamedSeries name, std::size_t order, unsigned fuss_r = 1);

// 1 / (1 - gamma - alpha^2 beta / (1 - alpha)). beta is supplied as a numerator
// series plus a polynomial denominator that must divide alpha^2 * beta exactly.
TruncatedSeries v_series(const TruncatedSeries& alpha, const TruncatedSeries& beta, const TruncatedSeries& gamma,
                         const Polynomial& beta_denominator = Polynomial(1));

// (1 - alpha) / (1 - alpha - alpha beta), the gamma = alpha beta specialisation.
TruncatedSeries v_series_ab(const TruncatedSeries& alpha, const TruncatedSeries& beta,
                            const Polynomial& beta_denominator = Polynomial(1));

}  // namespace valleypaths
