#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valleypaths/rational.hpp"

namespace valleypaths {

// Closed variable universe. Enumerator order is the variable name order used
// by the canonical monomial ordering.
enum class VarKind : std::uint8_t { A, B, C, D, Q, T, Alpha, Beta, Gamma };

struct Var {
    VarKind kind = VarKind::A;
    std::uint32_t index = 0;  // only meaningful for the indexed families

    static Var a() { return {VarKind::A, 0}; }
    static Var b() { return {VarKind::B, 0}; }
    static Var c() { return {VarKind::C, 0}; }
    static Var d() { return {VarKind::D, 0}; }
    static Var q() { return {VarKind::Q, 0}; }
    static Var t() { return {VarKind::T, 0}; }
    static Var alpha(std::uint32_t k) { return {VarKind::Alpha, k}; }
    static Var beta(std::uint32_t k) { return {VarKind::Beta, k}; }
    static Var gamma(std::uint32_t k) { return {VarKind::Gamma, k}; }

    static std::optional<Var> parse(const std::string& name);
    std::string name() const;

    friend auto operator<=>(const Var&, const Var&) = default;
};

// Sparse exponent vector: strictly increasing variables, positive exponents.
class Monomial {
public:
    using Entry = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial of(Var v, std::uint32_t exponent = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint64_t degree() const;
    std::uint32_t exponent(Var v) const;
    bool is_one() const { return entries_.empty(); }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Precondition: divides(other) on the right operand.
    Monomial quotient(const Monomial& divisor) const;

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

// Graded order: lower total degree first; within one degree a larger exponent
// of an earlier variable sorts first (so a^2 < a*b < b^2 in printing order).
// The largest element under this order is the leading monomial.
struct MonomialOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(long constant);  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(const Integer& constant) : Polynomial(Rational(constant)) {}  // NOLINT
    Polynomial(const Monomial& m, const Rational& coeff);

    static Polynomial variable(Var v) { return {Monomial::of(v), Rational(1)}; }
    // Parses the text form, e.g. "2*a^3*b - 1/3*t + (q+1)^2".
    static Polynomial parse(const std::string& text);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term's value; only meaningful when is_constant().
    Rational constant_value() const;
    Rational coefficient(const Monomial& m) const;
    std::uint64_t degree() const;
    std::vector<Var> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned exponent) const;

    // Exact multivariate quotient; throws NotDivisible when the remainder is nonzero.
    Polynomial exact_div(const Polynomial& divisor) const;

    // Substitution homomorphism; unbound variables stay symbolic.
    Polynomial eval(const std::map<Var, Polynomial>& bindings) const;

    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

Polynomial exact_div(const Polynomial& p, const Polynomial& divisor);

}  // namespace valleypaths
