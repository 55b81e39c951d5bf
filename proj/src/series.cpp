#include "valleypaths/series.hpp"

#include "valleypaths/error.hpp"

namespace valleypaths {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::OrderMismatch,
                    "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::constant(const Polynomial& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Polynomial& c, std::size_t k, std::size_t order) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i];
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Polynomial& p) {
    TruncatedSeries out = a;
    for (auto& c : out.coeffs_) c *= p;
    return out;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out += std::to_string(i) + ": " + coeffs_[i].str() + "\n";
    }
    return out;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    const Polynomial& c0 = a[0];
    if (c0.is_zero() || !c0.is_constant()) {
        throw Error(ErrorCode::NotAUnit, "constant term '" + c0.str() + "' is not a nonzero rational");
    }
    const Rational inv0 = Rational(1) / c0.constant_value();
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    out[0] = Polynomial(inv0);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a[i].is_zero() || out[k - i].is_zero()) continue;
            acc += a[i] * out[k - i];
        }
        out[k] = acc * Polynomial(-inv0);
    }
    return out;
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) { return a * inverse(b); }

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries result = TruncatedSeries::constant(Polynomial(1), a.order());
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

TruncatedSeries shift_div_x(const TruncatedSeries& a, std::size_t k) {
    if (k > a.order()) throw Error(ErrorCode::NotDivisibleByX, "shift exceeds the order");
    for (std::size_t i = 0; i < k; ++i) {
        if (!a[i].is_zero()) {
            throw Error(ErrorCode::NotDivisibleByX, "coefficient of x^" + std::to_string(i) + " is nonzero");
        }
    }
    std::vector<Polynomial> coeffs(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end());
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries shift_mul_x(const TruncatedSeries& a, std::size_t k) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i + k <= a.order(); ++i) out[i + k] = a[i];
    return out;
}

TruncatedSeries div_scalar_poly(const TruncatedSeries& a, const Polynomial& p) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i].exact_div(p);
    return out;
}

TruncatedSeries eval(const TruncatedSeries& a, const std::map<Var, Polynomial>& bindings) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i].eval(bindings);
    return out;
}

TruncatedSeries solve_fe(const SeriesMap& phi, std::size_t order) {
    const TruncatedSeries zero(order);
    TruncatedSeries f = TruncatedSeries::constant(phi(zero)[0], order);
    for (std::size_t i = 0; i <= order; ++i) f = phi(f);
    if (phi(f) != f) throw Error(ErrorCode::NotAContraction, "iteration did not reach a fixed point");
    // If F = G mod x^v then phi(F) = phi(G) mod x^(v+1).
    for (std::size_t v = 0; v <= order; ++v) {
        TruncatedSeries g = f;
        g[v] += Polynomial(1);
        const TruncatedSeries image = phi(g);
        for (std::size_t i = 0; i <= v; ++i) {
            if (image[i] != f[i]) {
                throw Error(ErrorCode::NotAContraction, "probe at valuation " + std::to_string(v) + " changed x^" +
                                                            std::to_string(i));
            }
        }
    }
    return f;
}

TruncatedSeries gen_named(NamedSeries name, std::size_t order, unsigned fuss_r) {
    const Polynomial a = Polynomial::variable(Var::a());
    const Polynomial b = Polynomial::variable(Var::b());
    const Polynomial q = Polynomial::variable(Var::q());
    const Polynomial t = Polynomial::variable(Var::t());
    const TruncatedSeries one = TruncatedSeries::constant(Polynomial(1), order);

    switch (name) {
        case NamedSeries::Catalan:
            return solve_fe([&](const TruncatedSeries& f) { return one + shift_mul_x(f * f, 1); }, order);
        case NamedSeries::MotzkinAB:
            return solve_fe(
                [&](const TruncatedSeries& f) { return one + shift_mul_x(f, 1) * a + shift_mul_x(f * f, 2) * b; },
                order);
        case NamedSeries::SchroderLarge:
            return solve_fe(
                [&](const TruncatedSeries& f) { return one + shift_mul_x(f, 1) * q + shift_mul_x(f * f, 1); }, order);
        case NamedSeries::SchroderSmall:
            return solve_fe(
                [&](const TruncatedSeries& f) {
                    return one - shift_mul_x(f, 1) * q + shift_mul_x(f * f, 1) * (q + Polynomial(1));
                },
                order);
        case NamedSeries::Narayana:
            return solve_fe(
                [&](const TruncatedSeries& f) {
                    return one + shift_mul_x(f, 1) * (t - Polynomial(1)) + shift_mul_x(f * f, 1);
                },
                order);
        case NamedSeries::FSeries: {
            const TruncatedSeries n = gen_named(NamedSeries::Narayana, order + 1);
            const TruncatedSeries one_big = TruncatedSeries::constant(Polynomial(1), order + 1);
            return div_scalar_poly(shift_div_x(n - one_big, 1), t);
        }
        case NamedSeries::ChebyshevU: {
            TruncatedSeries denom = one;
            if (order >= 1) denom[1] = Polynomial(-2) * t;
            if (order >= 2) denom[2] = Polynomial(1);
            return inverse(denom);
        }
        case NamedSeries::Fuss: {
            if (fuss_r < 1) throw Error(ErrorCode::BadParams, "fuss requires r >= 1");
            return solve_fe([&](const TruncatedSeries& f) { return one + shift_mul_x(pow(f, fuss_r + 1), 1); },
                            order);
        }
        case NamedSeries::Delannoy: {
            TruncatedSeries out(order);
            for (std::size_t n = 0; n <= order; ++n) {
                Integer sum = 0;
                for (std::size_t i = 0; i <= n; ++i) {
                    sum += binomial(Integer(static_cast<unsigned long>(n)), static_cast<long>(i)) *
                           binomial(Integer(static_cast<unsigned long>(n + i)), static_cast<long>(i));
                }
                out[n] = Polynomial(sum);
            }
            return out;
        }
    }
    throw Error(ErrorCode::BadParams, "unknown series");
}

namespace {

void require_zero_constant(const TruncatedSeries& s, const char* what) {
    if (!s[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, std::string(what) + " has a constant term");
}

}  // namespace

TruncatedSeries v_series(const TruncatedSeries& alpha, const TruncatedSeries& beta, const TruncatedSeries& gamma,
                         const Polynomial& beta_denominator) {
    require_same_order(alpha, beta);
    require_same_order(alpha, gamma);
    require_zero_constant(alpha, "alpha");
    require_zero_constant(beta, "beta");
    require_zero_constant(gamma, "gamma");
    const std::size_t n = alpha.order();
    const TruncatedSeries one = TruncatedSeries::constant(Polynomial(1), n);
    const TruncatedSeries blocks =
        div_scalar_poly(alpha * alpha * beta, beta_denominator) * inverse(one - alpha);
    return inverse(one - gamma - blocks);
}

TruncatedSeries v_series_ab(const TruncatedSeries& alpha, const TruncatedSeries& beta,
                            const Polynomial& beta_denominator) {
    require_same_order(alpha, beta);
    require_zero_constant(alpha, "alpha");
    require_zero_constant(beta, "beta");
    const TruncatedSeries one = TruncatedSeries::constant(Polynomial(1), alpha.order());
    const TruncatedSeries ab = div_scalar_poly(alpha * beta, beta_denominator);
    return (one - alpha) * inverse(one - alpha - ab);
}

}  // namespace valleypaths
