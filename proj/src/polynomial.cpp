#include "valleypaths/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "valleypaths/error.hpp"

namespace valleypaths {

namespace {

constexpr const char* kPlainNames[] = {"a", "b", "c", "d", "q", "t"};

}  // namespace

std::optional<Var> Var::parse(const std::string& name) {
    for (std::uint8_t i = 0; i < 6; ++i) {
        if (name == kPlainNames[i]) return Var{static_cast<VarKind>(i), 0};
    }
    auto indexed = [&](const std::string& prefix, VarKind kind) -> std::optional<Var> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        std::uint32_t index = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            index = index * 10 + static_cast<std::uint32_t>(name[i] - '0');
        }
        if (index == 0) return std::nullopt;
        return Var{kind, index};
    };
    if (auto v = indexed("alpha", VarKind::Alpha)) return v;
    if (auto v = indexed("beta", VarKind::Beta)) return v;
    if (auto v = indexed("gamma", VarKind::Gamma)) return v;
    return std::nullopt;
}

std::string Var::name() const {
    switch (kind) {
        case VarKind::Alpha: return "alpha" + std::to_string(index);
        case VarKind::Beta: return "beta" + std::to_string(index);
        case VarKind::Gamma: return "gamma" + std::to_string(index);
        default: return kPlainNames[static_cast<std::uint8_t>(kind)];
    }
}

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    std::vector<Entry> merged;
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    entries_ = std::move(merged);
}

Monomial Monomial::of(Var v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.entries_.emplace_back(v, exponent);
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t deg = 0;
    for (const auto& e : entries_) deg += e.second;
    return deg;
}

std::uint32_t Monomial::exponent(Var v) const {
    for (const auto& e : entries_) {
        if (e.first == v) return e.second;
    }
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& e : entries_) {
        while (it != other.entries_.end() && it->first < e.first) ++it;
        if (it == other.entries_.end() || it->first != e.first || it->second < e.second) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() || j != other.entries_.end()) {
        if (j == other.entries_.end() || (i != entries_.end() && i->first < j->first)) {
            out.entries_.push_back(*i++);
        } else if (i == entries_.end() || j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial out;
    auto j = divisor.entries_.begin();
    for (const auto& e : entries_) {
        std::uint32_t exp = e.second;
        if (j != divisor.entries_.end() && j->first == e.first) {
            exp -= j->second;
            ++j;
        }
        if (exp > 0) out.entries_.emplace_back(e.first, exp);
    }
    return out;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [v, exp] : entries_) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (exp != 1) out += '^' + std::to_string(exp);
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
    const auto dl = lhs.degree();
    const auto dr = rhs.degree();
    if (dl != dr) return dl < dr;
    const auto& a = lhs.entries();
    const auto& b = rhs.entries();
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) {
            // The one that carries the earlier variable has the larger exponent there.
            return a[i].first < b[i].first;
        }
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
    }
    // Same degree with one a prefix of the other cannot happen; keep the order total.
    return a.size() > b.size();
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
    if (!coeff.is_zero()) terms_.emplace(m, coeff);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& e : m.entries()) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
    Polynomial remainder = *this;
    Polynomial quotient;
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = *remainder.terms_.rbegin();
        if (!lead_m.divides(rm)) {
            throw Error(ErrorCode::NotDivisible, "(" + str() + ") / (" + divisor.str() + ")");
        }
        const Polynomial step(rm.quotient(lead_m), rc / lead_c);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& divisor) { return p.exact_div(divisor); }

Polynomial Polynomial::eval(const std::map<Var, Polynomial>& bindings) const {
    if (bindings.empty()) return *this;
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        std::vector<Monomial::Entry> kept;
        for (const auto& [v, exp] : m.entries()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                kept.emplace_back(v, exp);
            } else {
                term *= it->second.pow(exp);
            }
        }
        out += term * Polynomial(Monomial(std::move(kept)), Rational(1));
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += m.str();
        } else {
            out += mag.str() + '*' + m.str();
        }
    }
    return out;
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := unary (('*'|'/') unary)*, unary := '-' unary | power,
// power := atom ('^' integer)?, atom := number | name | '(' expr ')'.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                acc = acc.exact_div(unary());
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial(Rational(Integer(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            auto v = Var::parse(name);
            if (!v) fail("unknown variable '" + name + "'");
            return Polynomial::variable(*v);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) { return PolyParser(text).run(); }

}  // namespace valleypaths
