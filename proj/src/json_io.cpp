#include "valleypaths/json_io.hpp"

#include <fstream>
#include <sstream>

#include "valleypaths/error.hpp"

namespace valleypaths {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
    return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) bad(std::string("'") + key + "' must be an array");
    std::vector<int> out;
    for (const Json& e : v) {
        if (!e.is_number_integer()) bad(std::string("'") + key + "' entries must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

Json poly_list(const std::vector<Polynomial>& ps) {
    Json out = Json::array();
    for (const Polynomial& p : ps) out.push_back(to_json(p));
    return out;
}

std::vector<Polynomial> poly_list_from(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) bad(std::string("'") + key + "' must be an array");
    std::vector<Polynomial> out;
    for (const Json& e : v) out.push_back(polynomial_from_json(e));
    return out;
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [v, e] : m.entries()) mono[v.name()] = e;
        out.push_back(Json{{"coeff", c.str()}, {"monomial", mono}});
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    if (j.is_string()) return Polynomial::parse(j.get<std::string>());
    if (j.is_number_integer()) return Polynomial(j.get<long>());
    if (!j.is_array()) bad("polynomial must be a term list or a string");
    Polynomial out;
    for (const Json& term : j) {
        const Rational c = Rational::parse(string_field(term, "coeff"));
        const Json& mono = field(term, "monomial");
        if (!mono.is_object()) bad("monomial must be an object");
        std::vector<Monomial::Entry> entries;
        for (const auto& [name, e] : mono.items()) {
            const auto v = Var::parse(name);
            if (!v) bad("unknown variable '" + name + "'");
            if (!e.is_number_unsigned()) bad("exponent of '" + name + "' must be a nonnegative integer");
            entries.emplace_back(*v, e.get<std::uint32_t>());
        }
        out += Polynomial(Monomial(std::move(entries)), c);
    }
    return out;
}

Json to_json(const TruncatedSeries& s) { return Json{{"order", s.order()}, {"coeffs", poly_list(s.coeffs())}}; }

TruncatedSeries series_from_json(const Json& j) {
    std::vector<Polynomial> coeffs = poly_list_from(j, "coeffs");
    if (coeffs.empty()) bad("series needs at least one coefficient");
    const auto it = j.find("order");
    if (it != j.end() && (!it->is_number_unsigned() || it->get<std::size_t>() + 1 != coeffs.size())) {
        bad("order does not match the coefficient count");
    }
    return TruncatedSeries(std::move(coeffs));
}

Json to_json(const Path& p) { return Json{{"family", std::string(to_string(p.family()))}, {"steps", p.str()}}; }

Path path_from_json(const Json& j) {
    return parse_path(string_field(j, "steps"), parse_family(string_field(j, "family")));
}

Json to_json(const WeightSpec& spec) {
    Json out{{"alpha", poly_list(spec.alpha)}, {"beta", poly_list(spec.beta)}, {"gamma", poly_list(spec.gamma)}};
    if (spec.beta_denominator != Polynomial(1)) out["beta_denominator"] = to_json(spec.beta_denominator);
    return out;
}

WeightSpec spec_from_json(const Json& j) {
    WeightSpec spec;
    spec.alpha = poly_list_from(j, "alpha");
    spec.beta = poly_list_from(j, "beta");
    spec.gamma = poly_list_from(j, "gamma");
    if (spec.alpha.size() != spec.beta.size() || spec.beta.size() != spec.gamma.size()) {
        bad("alpha, beta and gamma must have the same length");
    }
    spec.order = spec.alpha.size();
    const auto it = j.find("beta_denominator");
    if (it != j.end()) spec.beta_denominator = polynomial_from_json(*it);
    if (spec.beta_denominator.is_zero()) throw Error(ErrorCode::BadParams, "beta_denominator is zero");
    return spec;
}

Json to_json(const DecoratedVPath& d) {
    Json parts = Json::array();
    for (const DecoratedPart& dp : d.parts) {
        Json part;
        if (const auto* pyr = std::get_if<Pyr>(&dp.part)) {
            part = Json{{"kind", "pyr"}, {"height", pyr->height}};
        } else {
            const Block& b = std::get<Block>(dp.part);
            part = Json{{"kind", "block"}, {"ascent", b.ascent}, {"heights", b.heights}};
        }
        part["inner"] = dp.inner.str();
        if (!dp.symbols.empty()) {
            Json syms = Json::array();
            for (TailSymbol s : dp.symbols) syms.push_back(s == TailSymbol::H ? "H" : "UD");
            part["symbols"] = syms;
        }
        parts.push_back(part);
    }
    return Json{{"map", std::string(to_string(d.map))}, {"parts", parts}};
}

DecoratedVPath decorated_from_json(const Json& j) {
    DecoratedVPath d;
    d.map = parse_map(string_field(j, "map"));
    if (d.map == MapId::Tau) bad("tau objects use the side/parts form");
    const Family inner_family = map_info(d.map).inner_family;
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) bad("'parts' must be an array");
    for (const Json& p : parts) {
        DecoratedPart dp;
        const std::string kind = string_field(p, "kind");
        if (kind == "pyr") {
            dp.part = Pyr{int_field(p, "height")};
        } else if (kind == "block") {
            dp.part = Block{int_field(p, "ascent"), int_list(p, "heights")};
        } else {
            bad("unknown part kind '" + kind + "'");
        }
        dp.inner = parse_path(string_field(p, "inner"), inner_family);
        if (const auto it = p.find("symbols"); it != p.end()) {
            if (!it->is_array()) bad("'symbols' must be an array");
            for (const Json& s : *it) {
                const std::string text = s.is_string() ? s.get<std::string>() : "";
                if (text == "H") {
                    dp.symbols.push_back(TailSymbol::H);
                } else if (text == "UD") {
                    dp.symbols.push_back(TailSymbol::UD);
                } else {
                    bad("tail symbols are \"H\" or \"UD\"");
                }
            }
        }
        d.parts.push_back(std::move(dp));
    }
    validate(d);
    return d;
}

Json to_json(const TauDecorated& d) {
    Json parts = Json::array();
    for (const TauPart& p : d.parts) {
        parts.push_back(Json{{"k0", p.k0}, {"letters", tau_letters_str(p.letters)}, {"blocks", p.blocks}});
    }
    return Json{{"side", std::string(to_string(d.side))}, {"parts", parts}};
}

TauDecorated tau_from_json(const Json& j) {
    TauDecorated d;
    d.side = parse_tau_side(string_field(j, "side"));
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) bad("'parts' must be an array");
    for (const Json& p : parts) {
        TauPart tp;
        tp.k0 = int_field(p, "k0");
        const Json& letters = field(p, "letters");
        if (letters.is_string()) {
            tp.letters = parse_tau_letters(letters.get<std::string>());
        } else if (letters.is_array()) {
            std::string joined;
            for (const Json& tok : letters) {
                if (!tok.is_string()) bad("letter tokens must be strings");
                joined += tok.get<std::string>();
            }
            tp.letters = parse_tau_letters(joined);
        } else {
            bad("'letters' must be a token string or an array of tokens");
        }
        tp.blocks = int_list(p, "blocks");
        d.parts.push_back(std::move(tp));
    }
    validate(d);
    return d;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

}  // namespace valleypaths
