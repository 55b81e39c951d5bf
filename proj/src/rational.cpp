#include "valleypaths/rational.hpp"

#include "valleypaths/error.hpp"

namespace valleypaths {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::NotDivisibleByX: return "NotDivisibleByX";
        case ErrorCode::NotAContraction: return "NotAContraction";
        case ErrorCode::IllegalCharacter: return "IllegalCharacter";
        case ErrorCode::NegativeLevel: return "NegativeLevel";
        case ErrorCode::NonzeroEnd: return "NonzeroEnd";
        case ErrorCode::FamilyViolation: return "FamilyViolation";
        case ErrorCode::OrderExceeded: return "OrderExceeded";
        case ErrorCode::NotInV: return "NotInV";
        case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case ErrorCode::InvalidDecoration: return "InvalidDecoration";
        case ErrorCode::NotInTargetFamily: return "NotInTargetFamily";
        case ErrorCode::UniqueFactorizationFailure: return "UniqueFactorizationFailure";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorCode::NotDivisible, "zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class value;
    const auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    auto strip_plus = [](const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    if (slash == std::string::npos) {
        if (!valid_int(text)) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
        return Rational(Integer(strip_plus(text)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
        throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
    return Rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error(ErrorCode::NotDivisible, "division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && n.fits_ulong_p()) {
        Integer out;
        mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
        return out;
    }
    // Falling factorial; the quotient is always exact.
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace valleypaths
