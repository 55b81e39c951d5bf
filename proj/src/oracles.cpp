#include "valleypaths/oracles.hpp"

#include <algorithm>

#include "valleypaths/error.hpp"
#include "valleypaths/path.hpp"
#include "valleypaths/series.hpp"

namespace valleypaths {

namespace {

struct Params {
    std::map<Var, Polynomial> bindings;
    std::map<std::string, long> integers;
};

Params read_params(const std::string& name, const ParamMap& params, const std::vector<std::string>& allowed) {
    Params out;
    for (const auto& [key, value] : params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw Error(ErrorCode::BadParams, name + " takes no parameter '" + key + "'");
        }
        if (key == "m" || key == "r") {
            try {
                std::size_t used = 0;
                out.integers[key] = std::stol(value, &used);
                if (used != value.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadParams, key + " must be an integer, got '" + value + "'");
            }
            continue;
        }
        if (value == "sym") continue;
        out.bindings[*Var::parse(key)] = Polynomial::parse(value);
    }
    return out;
}

long require_int(const Params& p, const std::string& key, long minimum) {
    const auto it = p.integers.find(key);
    if (it == p.integers.end()) throw Error(ErrorCode::BadParams, "missing parameter " + key);
    if (it->second < minimum) throw Error(ErrorCode::BadParams, key + " must be at least " + std::to_string(minimum));
    return it->second;
}

void require_n(long n, long minimum) {
    if (n < minimum) throw Error(ErrorCode::IndexOutOfRange, "n=" + std::to_string(n));
}

Polynomial var(Var v) { return Polynomial::variable(v); }

// Rejects numeric instances that violate a case's defining relation.
void require_relation(const std::string& name, const Polynomial& relation, const Params& p) {
    const Polynomial value = relation.eval(p.bindings);
    if (value.is_constant() && !value.is_zero()) {
        throw Error(ErrorCode::BadParams, name + ": parameters violate " + relation.str() + " = 0");
    }
}

Polynomial series_coefficient(NamedSeries which, long n) {
    return gen_named(which, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

Integer fuss_number(long n, long r) {
    return binomial(Integer(n * (r + 1)), n) / Integer(n * r + 1);
}

}  // namespace

Integer fibonacci(long k) {
    if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Fibonacci index");
    Integer a = 0, b = 1;
    for (long i = 0; i < k; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Integer delannoy_number(long n) {
    if (n < 0) return 0;
    Integer first = 0, second = 0;
    const Integer nn(n);
    for (long i = 0; i <= n; ++i) {
        first += binomial(nn, i) * binomial(Integer(n + i), i);
        second += binomial(nn, i) * binomial(nn, i) * pow_int(2, static_cast<unsigned long>(i));
    }
    if (first != second) throw Error(ErrorCode::BadParams, "Delannoy forms disagree at n=" + std::to_string(n));
    return first;
}

Integer delannoy_convolution(long n) {
    Integer s = 0;
    for (long i = 0; i <= n; ++i) s += delannoy_number(i) * delannoy_number(n - i);
    return s;
}

Polynomial chebyshev_u(long n, const Polynomial& arg) {
    if (n < 0) return Polynomial();
    Polynomial prev(1), cur = Polynomial(2) * arg;
    if (n == 0) return prev;
    for (long k = 2; k <= n; ++k) {
        Polynomial next = Polynomial(2) * arg * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

const std::vector<std::string>& oracle_names() {
    static const std::vector<std::string> names = {"catalan",  "fibonacci",   "motzkin_ab", "schroder_large", "schroder_small",
                                                   "narayana", "chebyshev_u", "delannoy",   "fuss"};
    return names;
}

Polynomial oracle(const std::string& name, long n, const ParamMap& params) {
    require_n(n, 0);
    const std::map<std::string, std::vector<std::string>> allowed = {
        {"catalan", {}},         {"fibonacci", {}},      {"motzkin_ab", {"a", "b"}}, {"schroder_large", {"q"}},
        {"schroder_small", {"q"}}, {"narayana", {"t"}},  {"chebyshev_u", {"t"}},     {"delannoy", {}},
        {"fuss", {"r"}},
    };
    const auto it = allowed.find(name);
    if (it == allowed.end()) throw Error(ErrorCode::BadParams, "unknown sequence '" + name + "'");
    const Params p = read_params(name, params, it->second);

    Polynomial value;
    if (name == "catalan") {
        value = Polynomial(binomial(Integer(2 * n), n) / Integer(n + 1));
    } else if (name == "fibonacci") {
        value = Polynomial(fibonacci(n));
    } else if (name == "motzkin_ab") {
        value = series_coefficient(NamedSeries::MotzkinAB, n);
    } else if (name == "schroder_large") {
        value = series_coefficient(NamedSeries::SchroderLarge, n);
    } else if (name == "schroder_small") {
        value = series_coefficient(NamedSeries::SchroderSmall, n);
    } else if (name == "narayana") {
        if (n == 0) {
            value = Polynomial(1);
        } else {
            const Integer nn(n);
            for (long i = 1; i <= n; ++i) {
                value += Polynomial(Rational(binomial(nn, i) * binomial(nn, i - 1), nn)) *
                         var(Var::t()).pow(static_cast<unsigned>(i));
            }
        }
    } else if (name == "chebyshev_u") {
        value = chebyshev_u(n, var(Var::t()));
    } else if (name == "delannoy") {
        value = Polynomial(delannoy_number(n));
    } else {
        value = Polynomial(fuss_number(n, require_int(p, "r", 1)));
    }
    return value.eval(p.bindings);
}

const std::vector<std::string>& formula_names() {
    static const std::vector<std::string> names = {
        "ex21_geom3",  "ex21_fib", "ex31",         "ex33",          "ex35",           "ex37",
        "ex39",        "eq31_closed", "case1",     "case2",         "case3",          "cheb2",
        "table31",     "ex314_first", "ex314_second", "ex314_collapse", "rem315",      "rem315_collapse"};
    return names;
}

Polynomial formula_vn(const std::string& name, long n, const ParamMap& params) {
    require_n(n, 0);
    const std::vector<std::string> abcd = {"a", "b", "c", "d"};
    const std::map<std::string, std::vector<std::string>> allowed = {
        {"ex21_geom3", {}},     {"ex21_fib", {}},           {"ex31", {"a", "b"}},           {"ex33", {"q"}},
        {"ex35", {"q"}},        {"ex37", {"t"}},            {"ex39", {"t"}},                {"eq31_closed", abcd},
        {"case1", abcd},        {"case2", abcd},            {"case3", abcd},                {"cheb2", {"a", "b", "c"}},
        {"table31", abcd},      {"ex314_first", {"m", "r"}}, {"ex314_second", {"m", "r"}}, {"ex314_collapse", {"m", "r"}},
        {"rem315", {"m", "r"}}, {"rem315_collapse", {"m", "r"}},
    };
    const auto it = allowed.find(name);
    if (it == allowed.end()) throw Error(ErrorCode::BadParams, "unknown formula '" + name + "'");
    const Params p = read_params(name, params, it->second);
    const Polynomial one(1);
    const Polynomial a = var(Var::a()), b = var(Var::b()), c = var(Var::c()), d = var(Var::d());
    const Polynomial q = var(Var::q()), t = var(Var::t());
    auto seq = [&](const char* s, long k) { return k < 0 ? Polynomial() : oracle(s, k); };
    auto done = [&](const Polynomial& v) { return v.eval(p.bindings); };

    if (n == 0) return one;

    if (name == "ex21_geom3") return Polynomial(Rational(pow_int(3, static_cast<unsigned long>(n - 1)) - 1, 2));
    if (name == "ex21_fib") return Polynomial(fibonacci(2 * (n - 1)));
    if (name == "ex31") return done(seq("motzkin_ab", n) - a * seq("motzkin_ab", n - 1));
    if (name == "ex33") return done(seq("schroder_large", n) - (q + one) * seq("schroder_large", n - 1));
    if (name == "ex35") return done(seq("schroder_small", n) - seq("schroder_small", n - 1));
    if (name == "ex37") return done(seq("narayana", n) - t * seq("narayana", n - 1));
    if (name == "ex39") return done((seq("narayana", n + 1) - (t + one) * seq("narayana", n)).exact_div(t));

    if (name == "eq31_closed") {
        // [x^n] of (a-b)c x^2 / (1 - (a+d)x + (ad-(a-b)c)x^2) by its linear recurrence.
        const Polynomial lin = a + d, quad = a * d - (a - b) * c;
        std::vector<Polynomial> g = {(a - b) * c};
        for (long k = 1; k <= n - 2; ++k) {
            Polynomial next = lin * g[static_cast<std::size_t>(k - 1)];
            if (k >= 2) next -= quad * g[static_cast<std::size_t>(k - 2)];
            g.push_back(next);
        }
        return n < 2 ? Polynomial() : done(g[static_cast<std::size_t>(n - 2)]);
    }
    if (name == "case1") {
        require_relation(name, a * d - (a - b) * c, p);
        if (n == 1) return Polynomial();
        return done(a * d * (a + d).pow(static_cast<unsigned>(n - 2)));
    }
    if (name == "case2") {
        require_relation(name, a * d - (a - b) * c - one, p);
        if (n == 1) return Polynomial();
        return done((a * d - one) * chebyshev_u(n - 2, (a + d) * Polynomial(Rational(1, 2))));
    }
    if (name == "case3") {
        require_relation(name, a * d - (a - b) * c - one, p);
        require_relation(name, a + d - Polynomial(3), p);
        return done((a * d - one) * Polynomial(fibonacci(2 * n - 2)));
    }
    if (name == "cheb2") {
        if (n == 1) return Polynomial();
        return done(Polynomial(2) * a * b * chebyshev_u(n - 2, b + c));
    }
    if (name == "table31") {
        require_relation(name, a * d - (a - b) * c - one, p);
        require_relation(name, a + d - Polynomial(6), p);
        if (n == 1) return Polynomial();
        return done((a * d - one) * Polynomial(delannoy_convolution(n - 2)));
    }

    const long r = require_int(p, "r", 1);
    const bool collapse = name == "ex314_collapse" || name == "rem315_collapse";
    const long m = collapse && !p.integers.count("m") ? r + 1 : require_int(p, "m", 0);
    if (collapse && m != r + 1) throw Error(ErrorCode::BadParams, name + " requires m = r + 1");
    const Integer top(n * (r + 1));
    Rational sum;

    if (name == "ex314_first") {
        if (n == 1) return Polynomial();
        for (long k = 1; k <= n - 1; ++k) {
            const long big = n * (r + 1) + (m - r - 1) * (k + 1);
            if (big == 0) throw Error(ErrorCode::BadParams, "vanishing denominator");
            sum += Rational(Integer(m * (k + 1)) * fibonacci(k), Integer(big)) * Rational(binomial(Integer(big), n - k - 1));
        }
    } else if (name == "ex314_second") {
        for (long k = 0; 2 * k <= n; ++k) {
            for (long j = 0; j <= n - 2 * k; ++j) {
                sum += Rational(binomial(Integer(k * (m - r - 1)), j) * Integer(2 * k + j) *
                                    binomial(top, n - 2 * k - j),
                                Integer(n));
            }
        }
    } else if (name == "ex314_collapse") {
        for (long k = 0; 2 * k <= n; ++k) sum += Rational(Integer(2 * k) * binomial(top, n - 2 * k), Integer(n));
    } else if (name == "rem315") {
        for (long k = 0; 3 * k <= n; ++k) {
            for (long j = 0; j <= n - 3 * k; ++j) {
                sum += Rational(binomial(Integer(k * (m - r - 1) + 1), j) * Integer(3 * k + j) *
                                    binomial(top, n - 3 * k - j),
                                Integer(n));
            }
        }
    } else {
        for (long k = 0; 3 * k <= n; ++k) {
            sum += Rational(Integer(3 * k * r + 3 * k + 1) * binomial(top, n - 3 * k), Integer(n * r + 3 * k + 1));
        }
    }
    return Polynomial(sum);
}

Integer delannoy_hstep_count(int n) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be at least 1");
    Integer count = 0;
    for_each_path(Family::Delannoy, n, PathFilter::None, [&](const Path& path) {
        int level = 0;
        for (Step s : path.steps()) {
            if (s == Step::H && level == 0) ++count;
            level += rise(s);
        }
        return true;
    });
    return count;
}

}  // namespace valleypaths
