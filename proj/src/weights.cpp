#include "valleypaths/weights.hpp"

#include <algorithm>

#include "valleypaths/error.hpp"

namespace valleypaths {

namespace {

const Polynomial& entry(const std::vector<Polynomial>& values, std::size_t k, const char* what) {
    if (k < 1 || k > values.size()) {
        throw Error(ErrorCode::OrderExceeded,
                    std::string(what) + "_" + std::to_string(k) + " exceeds order " + std::to_string(values.size()));
    }
    return values[k - 1];
}

TruncatedSeries series_of(const std::vector<Polynomial>& values, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 1; k <= order && k <= values.size(); ++k) s[k] = values[k - 1];
    return s;
}

std::vector<Polynomial> coefficients_of(const TruncatedSeries& s, const char* what) {
    if (!s[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, std::string(what) + " has a constant term");
    return {s.coeffs().begin() + 1, s.coeffs().end()};
}

}  // namespace

const Polynomial& WeightSpec::alpha_k(std::size_t k) const { return entry(alpha, k, "alpha"); }
const Polynomial& WeightSpec::beta_k(std::size_t k) const { return entry(beta, k, "beta"); }
const Polynomial& WeightSpec::gamma_k(std::size_t k) const { return entry(gamma, k, "gamma"); }

SeriesTriple to_series(const WeightSpec& spec) {
    return {series_of(spec.alpha, spec.order), series_of(spec.beta, spec.order), series_of(spec.gamma, spec.order)};
}

WeightSpec spec_from_series(const TruncatedSeries& alpha, const TruncatedSeries& beta, const TruncatedSeries& gamma,
                            const Polynomial& beta_denominator) {
    if (alpha.order() != beta.order() || alpha.order() != gamma.order()) {
        throw Error(ErrorCode::OrderMismatch, "weight series of different orders");
    }
    WeightSpec spec;
    spec.order = alpha.order();
    spec.alpha = coefficients_of(alpha, "alpha");
    spec.beta = coefficients_of(beta, "beta");
    spec.gamma = coefficients_of(gamma, "gamma");
    spec.beta_denominator = beta_denominator;
    return spec;
}

TruncatedSeries spec_v_series(const WeightSpec& spec) {
    const SeriesTriple s = to_series(spec);
    return v_series(s.alpha, s.beta, s.gamma, spec.beta_denominator);
}

TruncatedSeries spec_v_series_ab(const WeightSpec& spec) {
    const SeriesTriple s = to_series(spec);
    return v_series_ab(s.alpha, s.beta, spec.beta_denominator);
}

bool gamma_is_alpha_beta(const WeightSpec& spec) {
    const SeriesTriple s = to_series(spec);
    try {
        return div_scalar_poly(s.alpha * s.beta, spec.beta_denominator) == s.gamma;
    } catch (const Error&) {
        return false;
    }
}

Polynomial weight_of_part(const Part& part, const WeightSpec& spec) {
    if (const auto* p = std::get_if<Pyr>(&part)) return spec.gamma_k(static_cast<std::size_t>(p->height));
    const auto& b = std::get<Block>(part);
    Polynomial w = spec.beta_k(static_cast<std::size_t>(b.ascent));
    for (int h : b.heights) {
        if (w.is_zero()) return w;
        w *= spec.alpha_k(static_cast<std::size_t>(h));
    }
    return w.exact_div(spec.beta_denominator);
}

Polynomial weight_of_structure(const VStructure& s, const WeightSpec& spec) {
    Polynomial w(1);
    for (const auto& part : s.parts) {
        w *= weight_of_part(part, spec);
        if (w.is_zero()) break;
    }
    return w;
}

Polynomial weight_of_path(const Path& p, const WeightSpec& spec) {
    if (!is_in_v(p)) throw Error(ErrorCode::NotInV, p.str() + " has valleys at two levels in one primitive factor");
    Polynomial w(1);
    for (const Path& factor : primitive_factors(p)) {
        const PathStats stats = analyze(factor);
        Polynomial fw(1);
        for (const auto& pyr : stats.maximal_pyramids) {
            const auto h = static_cast<std::size_t>(pyr.height);
            fw *= pyr.altitude == 0 ? spec.gamma_k(h) : spec.alpha_k(h);
        }
        if (!stats.valleys.empty()) {
            fw *= spec.beta_k(static_cast<std::size_t>(stats.valleys.front().level));
            fw = fw.exact_div(spec.beta_denominator);
        }
        w *= fw;
    }
    return w;
}

Polynomial weight_sum_v(int n, const WeightSpec& spec) {
    if (n < 0) return Polynomial();
    if (static_cast<std::size_t>(n) > spec.order) {
        throw Error(ErrorCode::OrderExceeded, "n=" + std::to_string(n) + " exceeds order " + std::to_string(spec.order));
    }
    Polynomial sum;
    for_each_v_structure(n, [&](const VStructure& s) {
        sum += weight_of_structure(s, spec);
        return true;
    });
    return sum;
}

std::string_view to_string(TargetWeighting w) {
    switch (w) {
        case TargetWeighting::None: return "none";
        case TargetWeighting::MotzkinAB: return "motzkin_ab";
        case TargetWeighting::SchroderQ: return "schroder_q";
        case TargetWeighting::NarayanaT: return "narayana_t";
        case TargetWeighting::LevelPeaks: return "level_peaks";
    }
    return "?";
}

TargetWeighting parse_weighting(std::string_view name) {
    for (auto w : {TargetWeighting::None, TargetWeighting::MotzkinAB, TargetWeighting::SchroderQ,
                   TargetWeighting::NarayanaT, TargetWeighting::LevelPeaks}) {
        if (to_string(w) == name) return w;
    }
    throw Error(ErrorCode::ParseError, "unknown weighting '" + std::string(name) + "'");
}

Polynomial target_weight(const Path& p, TargetWeighting weighting) {
    const Polynomial a = Polynomial::variable(Var::a());
    const Polynomial b = Polynomial::variable(Var::b());
    const Polynomial q = Polynomial::variable(Var::q());
    const Polynomial t = Polynomial::variable(Var::t());
    Polynomial w(1);
    switch (weighting) {
        case TargetWeighting::None: break;
        case TargetWeighting::MotzkinAB:
            for (Step s : p.steps()) {
                if (s == Step::D) w *= b;
                if (s == Step::F) w *= a;
            }
            break;
        case TargetWeighting::SchroderQ:
            for (Step s : p.steps()) {
                if (s == Step::H) w *= q;
            }
            break;
        case TargetWeighting::NarayanaT:
            w = t.pow(static_cast<unsigned>(analyze(p).peaks.size()));
            break;
        case TargetWeighting::LevelPeaks:
            for (const auto& peak : analyze(p).peaks) w *= peak.level == 1 ? t + Polynomial(1) : t;
            break;
    }
    return w;
}

Polynomial weight_sum_target(int n, Family family, PathFilter filter, TargetWeighting weighting) {
    Polynomial sum;
    for_each_path(family, n, filter, [&](const Path& p) {
        sum += target_weight(p, weighting);
        return true;
    });
    return sum;
}

namespace {

Polynomial var(Var v) { return Polynomial::variable(v); }

// sum_{k>=1} first * ratio^(k-1) x^k
TruncatedSeries geometric(const Polynomial& first, const Polynomial& ratio, std::size_t order) {
    TruncatedSeries s(order);
    Polynomial c = first;
    for (std::size_t k = 1; k <= order; ++k) {
        s[k] = c;
        c *= ratio;
    }
    return s;
}

TruncatedSeries x_times(const TruncatedSeries& s, std::size_t k = 1) { return shift_mul_x(s, k); }

TruncatedSeries minus_one(const TruncatedSeries& s) {
    TruncatedSeries out = s;
    out[0] -= Polynomial(1);
    return out;
}

long int_param(const ParamMap& params, const std::string& key, long minimum) {
    const auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorCode::BadParams, "missing parameter " + key);
    long value = 0;
    try {
        std::size_t used = 0;
        value = std::stol(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadParams, key + " must be an integer, got '" + it->second + "'");
    }
    if (value < minimum) {
        throw Error(ErrorCode::BadParams, key + " must be at least " + std::to_string(minimum));
    }
    return value;
}

WeightSpec build_symbolic(const std::string& name, const ParamMap& params, std::size_t order) {
    const Polynomial one(1);
    const Polynomial a = var(Var::a()), b = var(Var::b()), c = var(Var::c()), d = var(Var::d());
    const Polynomial q = var(Var::q()), t = var(Var::t());
    const TruncatedSeries x = TruncatedSeries::monomial(one, 1, order);

    if (name == "generic") {
        WeightSpec spec;
        spec.order = order;
        for (std::uint32_t k = 1; k <= order; ++k) {
            spec.alpha.push_back(var(Var::alpha(k)));
            spec.beta.push_back(var(Var::beta(k)));
            spec.gamma.push_back(var(Var::gamma(k)));
        }
        return spec;
    }
    if (name == "geom_3x") {
        const auto al = geometric(one, one, order);
        const auto be = geometric(one, Polynomial(2), order);
        return spec_from_series(al, be, al * be);
    }
    if (name == "geom_fib") {
        const auto al = geometric(one, one, order);
        return spec_from_series(al, al, al * al);
    }
    if (name == "motzkin_ab") {
        // beta = (b/a) x M, stored as b x M over the denominator a.
        const auto m = gen_named(NamedSeries::MotzkinAB, order);
        return spec_from_series(x * a, x_times(m) * b, x_times(m, 2) * b, a);
    }
    if (name == "schroder_large_q") {
        const auto r1 = minus_one(gen_named(NamedSeries::SchroderLarge, order));
        return spec_from_series(x * (q + one), div_scalar_poly(r1, q + one), x_times(r1));
    }
    if (name == "schroder_small_q") {
        const auto s1 = minus_one(gen_named(NamedSeries::SchroderSmall, order));
        return spec_from_series(x, s1 * (q + one), x_times(s1) * (q + one));
    }
    if (name == "narayana_t") {
        const auto n1 = minus_one(gen_named(NamedSeries::Narayana, order));
        return spec_from_series(x * t, div_scalar_poly(n1, t), x_times(n1));
    }
    if (name == "narayana_shift_t") {
        // beta = t x f / (1+t), stored as t x f over the denominator 1+t.
        const auto f = gen_named(NamedSeries::FSeries, order);
        return spec_from_series(x * (one + t), x_times(f) * t, x_times(f, 2) * t, one + t);
    }
    if (name == "chebyshev_abcd" || name == "delannoy_tuple") {
        const auto al = geometric(a - b, b, order);
        const auto be = geometric(c, d, order);
        return spec_from_series(al, be, al * be);
    }
    if (name == "chebyshev_second") {
        const auto u = eval(gen_named(NamedSeries::ChebyshevU, order), {{Var::t(), c}});
        TruncatedSeries lead(order);
        if (order >= 1) lead[1] = Polynomial(2) * b;
        if (order >= 2) lead[2] = Polynomial(-2) * a * b;
        const auto al = lead * u;
        const auto be = geometric(a, a, order);
        return spec_from_series(al, be, al * be);
    }
    if (name == "fuss_sym" || name == "fuss_asym" || name == "remark315") {
        const long r = int_param(params, "r", 1);
        const long m = int_param(params, "m", 0);
        const auto tt = gen_named(NamedSeries::Fuss, order, static_cast<unsigned>(r));
        const auto xtm = x_times(pow(tt, static_cast<unsigned>(m)));
        const auto xtr = x_times(pow(tt, static_cast<unsigned>(r)));
        if (name == "fuss_sym") return spec_from_series(xtm, xtm, xtm * xtm);
        if (name == "fuss_asym") return spec_from_series(xtr, xtm, xtr * xtm);
        return spec_from_series(xtr, xtm, xtr);
    }
    throw Error(ErrorCode::BadParams, "unknown weight system '" + name + "'");
}

}  // namespace

const std::vector<RegistryEntry>& registry_entries() {
    static const std::vector<RegistryEntry> entries = {
        {"generic", {}, "independent symbols alphaK, betaK, gammaK"},
        {"geom_3x", {}, "alpha = x/(1-x), beta = x/(1-2x), gamma = alpha*beta"},
        {"geom_fib", {}, "alpha = beta = x/(1-x), gamma = alpha*beta"},
        {"motzkin_ab", {"a", "b"}, "alpha = a x, beta = (b/a) x M, gamma = b x^2 M"},
        {"schroder_large_q", {"q"}, "alpha = (q+1) x, beta = (R-1)/(q+1), gamma = x (R-1)"},
        {"schroder_small_q", {"q"}, "alpha = x, beta = (q+1)(S-1), gamma = (q+1) x (S-1)"},
        {"narayana_t", {"t"}, "alpha = t x, beta = (N-1)/t, gamma = x (N-1)"},
        {"narayana_shift_t", {"t"}, "alpha = (1+t) x, beta = t x f/(1+t), gamma = t x^2 f"},
        {"chebyshev_abcd", {"a", "b", "c", "d"}, "alpha = (a-b)x/(1-bx), beta = cx/(1-dx), gamma = alpha*beta"},
        {"chebyshev_second", {"a", "b", "c"}, "alpha = 2bx(1-ax)/(1-2cx+x^2), beta = ax/(1-ax), gamma = alpha*beta"},
        {"delannoy_tuple", {"a", "b", "c", "d"}, "chebyshev_abcd with all four parameters fixed"},
        {"fuss_sym", {"m", "r"}, "alpha = beta = x T^m, gamma = x^2 T^(2m)"},
        {"fuss_asym", {"m", "r"}, "alpha = x T^r, beta = x T^m, gamma = x^2 T^(m+r)"},
        {"remark315", {"m", "r"}, "alpha = x T^r, beta = x T^m, gamma = x T^r"},
    };
    return entries;
}

WeightSpec registry_get(const std::string& name, const ParamMap& params, std::size_t order) {
    const auto& entries = registry_entries();
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
    if (it == entries.end()) throw Error(ErrorCode::BadParams, "unknown weight system '" + name + "'");
    std::map<Var, Polynomial> bindings;
    for (const auto& [key, value] : params) {
        if (std::find(it->params.begin(), it->params.end(), key) == it->params.end()) {
            throw Error(ErrorCode::BadParams, name + " takes no parameter '" + key + "'");
        }
        if (key == "m" || key == "r" || value == "sym") continue;
        bindings[*Var::parse(key)] = Polynomial::parse(value);
    }
    if (name == "delannoy_tuple" && bindings.size() != 4) {
        throw Error(ErrorCode::BadParams, "delannoy_tuple needs numeric a, b, c and d");
    }
    WeightSpec spec = build_symbolic(name, params, order);
    if (bindings.empty()) return spec;
    spec.beta_denominator = spec.beta_denominator.eval(bindings);
    if (spec.beta_denominator.is_zero()) throw Error(ErrorCode::BadParams, name + ": parameters make beta undefined");
    for (auto* values : {&spec.alpha, &spec.beta, &spec.gamma}) {
        for (auto& v : *values) v = v.eval(bindings);
    }
    return spec;
}

}  // namespace valleypaths
