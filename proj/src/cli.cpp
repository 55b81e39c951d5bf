#include "valleypaths/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "valleypaths/bijections.hpp"
#include "valleypaths/error.hpp"
#include "valleypaths/json_io.hpp"
#include "valleypaths/oracles.hpp"
#include "valleypaths/verify.hpp"

namespace valleypaths::cli {

namespace {

// Bad flag values that CLI11 cannot catch on its own; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::size_t order = 12;
    std::string format = "pretty";
    std::string seed_dir;
    unsigned jobs = 1;
    std::vector<std::string> at;
};

ParamMap parse_params(const std::vector<std::string>& items) {
    ParamMap out;
    for (const std::string& kv : items) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected k=v, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

bool is_file_ref(const std::string& arg) { return !arg.empty() && arg[0] == '@'; }

// "@path" reads a file, anything else is taken as inline JSON.
Json load_json_arg(const std::string& arg) {
    return is_file_ref(arg) ? read_json_file(arg.substr(1)) : parse_json(arg);
}

WeightSpec load_spec(const std::string& arg, const ParamMap& params, std::size_t order) {
    if (!is_file_ref(arg)) return registry_get(arg, params, order);
    if (!params.empty()) throw UsageError("--param cannot be combined with a spec file");
    return spec_from_json(read_json_file(arg.substr(1)));
}

class Output {
public:
    Output(const Globals& g, std::string command, std::ostream& out) : g_(g), command_(std::move(command)), out_(out) {
        if (!g_.at.empty()) {
            for (const auto& [k, v] : parse_params(g_.at)) {
                const auto var = Var::parse(k);
                if (!var) throw UsageError("unknown variable '" + k + "' in --at");
                bindings_[*var] = Polynomial::parse(v);
            }
        }
    }

    const std::string& format() const { return g_.format; }
    std::ostream& stream() { return out_; }

    void require(std::initializer_list<const char*> allowed) const {
        for (const char* f : allowed) {
            if (g_.format == f) return;
        }
        throw UsageError("--format " + g_.format + " is not available for " + command_);
    }

    // Writes the JSON artifact when json is selected, and to the fixture
    // directory when one was given.
    bool json(const Json& artifact) {
        if (!g_.seed_dir.empty()) {
            std::filesystem::create_directories(g_.seed_dir);
            std::ofstream file(std::filesystem::path(g_.seed_dir) / (command_ + ".json"));
            file << artifact.dump(2) << '\n';
            if (!file) throw UsageError("cannot write fixture for " + command_);
        }
        if (g_.format != "json") return false;
        out_ << artifact.dump(2) << '\n';
        return true;
    }

    std::string csv_value(const Polynomial& p) const {
        const Polynomial v = p.eval(bindings_);
        if (!v.is_constant()) throw UsageError("csv needs numeric values for every symbol; pass --at k=v (got " + v.str() + ")");
        return v.constant_value().str();
    }

private:
    const Globals& g_;
    std::string command_;
    std::ostream& out_;
    std::map<Var, Polynomial> bindings_;
};

int cmd_series(Output& o, const std::string& spec_arg, const std::vector<std::string>& params, std::size_t order,
               bool show_spec) {
    o.require({"json", "pretty", "csv"});
    const WeightSpec w = load_spec(spec_arg, parse_params(params), order);
    if (show_spec) {
        if (!o.json(to_json(w))) o.stream() << to_json(w).dump() << '\n';
        return 0;
    }
    TruncatedSeries v = spec_v_series(w);
    if (v.order() > order) v = v.truncate(order);
    if (o.json(to_json(v))) return 0;
    if (o.format() == "csv") o.stream() << "n,value\n";
    for (std::size_t n = 0; n <= v.order(); ++n) {
        if (o.format() == "csv") {
            o.stream() << n << ',' << o.csv_value(v[n]) << '\n';
        } else {
            o.stream() << n << ": " << v[n].str() << '\n';
        }
    }
    return 0;
}

void emit_polynomial(Output& o, long n, const Polynomial& p) {
    o.require({"json", "pretty", "csv"});
    if (o.json(to_json(p))) return;
    if (o.format() == "csv") {
        o.stream() << "n,value\n" << n << ',' << o.csv_value(p) << '\n';
    } else {
        o.stream() << p.str() << '\n';
    }
}

int cmd_count(Output& o, const std::string& spec_arg, const std::vector<std::string>& params, int n) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    const WeightSpec w = load_spec(spec_arg, parse_params(params), static_cast<std::size_t>(std::max(n, 1)));
    emit_polynomial(o, n, weight_sum_v(n, w));
    return 0;
}

int cmd_enumerate(Output& o, const std::string& family, int n, const std::string& filter) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    const std::vector<Path> paths = enumerate_family(parse_family(family), n, parse_filter(filter));
    Json artifact = Json::array();
    for (const Path& p : paths) artifact.push_back(to_json(p));
    if (o.json(artifact)) return 0;
    if (o.format() == "csv") o.stream() << "index,steps\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (o.format() == "ascii") {
            o.stream() << (i ? "\n" : "") << paths[i].str() << '\n' << render_ascii(paths[i]);
        } else if (o.format() == "csv") {
            o.stream() << i << ',' << paths[i].str() << '\n';
        } else {
            o.stream() << paths[i].str() << '\n';
        }
    }
    return 0;
}

int cmd_biject_apply(Output& o, MapId map, const std::string& arg) {
    o.require({"json", "pretty"});
    const Json in = load_json_arg(arg);
    Json artifact;
    if (map == MapId::Tau) {
        const TauDecorated t = tau_from_json(in);
        artifact = to_json(t.side == TauSide::Src4372 ? tau_forward(t) : tau_inverse(t));
    } else if (in.is_object() && in.contains("steps")) {
        artifact = to_json(inverse(map, path_from_json(in)));
    } else {
        const DecoratedVPath d = decorated_from_json(in);
        if (d.map != map) throw UsageError("object is decorated for " + std::string(to_string(d.map)));
        artifact = to_json(forward(d));
    }
    if (!o.json(artifact)) o.stream() << artifact.dump() << '\n';
    return 0;
}

int cmd_biject_list(Output& o, MapId map, int n) {
    o.require({"json", "pretty"});
    Json artifact = Json::array();
    if (map == MapId::Tau) {
        for (const TauDecorated& t : enumerate_tau(n, TauSide::Src4372)) {
            artifact.push_back(Json{{"source", to_json(t)}, {"image", to_json(tau_forward(t))}});
        }
    } else {
        for (const DecoratedVPath& d : enumerate_decorated(n, map)) {
            artifact.push_back(Json{{"source", to_json(d)}, {"image", to_json(forward(d))}});
        }
    }
    if (o.json(artifact)) return 0;
    for (const Json& e : artifact) o.stream() << e["source"].dump() << " -> " << e["image"].dump() << '\n';
    return 0;
}

int cmd_biject_roundtrip(Output& o, MapId map, int n) {
    o.require({"json", "pretty"});
    const CheckResult r = bijection_check(map, n);
    Json artifact{{"map", std::string(to_string(map))}, {"n", n}, {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass) artifact["counterexample"] = r.counterexample;
    if (!o.json(artifact)) {
        o.stream() << to_string(map) << " n=" << n << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
        if (!r.pass) o.stream() << "  " << r.counterexample.dump() << '\n';
    }
    return r.pass ? 0 : 1;
}

int cmd_oracle(Output& o, const std::string& name, long n, const std::vector<std::string>& params) {
    const ParamMap p = parse_params(params);
    const auto& names = oracle_names();
    const bool is_sequence = std::find(names.begin(), names.end(), name) != names.end();
    emit_polynomial(o, n, is_sequence ? oracle(name, n, p) : formula_vn(name, n, p));
    return 0;
}

int cmd_verify(Output& o, const std::string& suite, int max_n, unsigned jobs, std::ostream& err) {
    o.require({"json", "pretty", "csv"});
    const VerifyReport report = run_verify(suite, max_n, jobs);
    if (!o.json(to_json(report))) {
        if (o.format() == "csv") {
            o.stream() << "suite,check,status\n";
            for (const CheckResult& c : report.checks) {
                o.stream() << c.suite << ",\"" << c.name << "\"," << (c.pass ? "pass" : "fail") << '\n';
            }
        } else {
            o.stream() << pretty(report);
        }
    }
    err << "wall time: " << report.wall_seconds << " s\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_render(Output& o, const std::string& path_arg, const std::string& family) {
    o.require({"json", "pretty", "ascii"});
    const Path p = is_file_ref(path_arg) ? path_from_json(read_json_file(path_arg.substr(1)))
                                         : parse_path(path_arg, parse_family(family));
    const std::string art = render_ascii(p);
    Json rows = Json::array();
    for (std::size_t start = 0; start < art.size();) {
        const std::size_t end = art.find('\n', start);
        rows.push_back(art.substr(start, end - start));
        start = end + 1;
    }
    Json artifact = to_json(p);
    artifact["ascii"] = rows;
    if (!o.json(artifact)) o.stream() << art;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted valley-restricted Dyck paths: series, enumeration, bijections and checks", "valleypaths"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--order", g.order, "Truncation order of printed series")->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "pretty", "ascii", "csv"}))
        ->capture_default_str();
    app.add_option("--seed-fixtures", g.seed_dir, "Also write the JSON artifact to DIR/<command>.json");
    app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--at", g.at, "Rational values k=v used to flatten polynomials for csv");

    std::string spec, family, filter = "none", map_name, apply, name, suite = "all", path_arg;
    std::vector<std::string> params;
    int n = -1, max_n = 6;
    bool roundtrip = false, show_spec = false;

    auto* series = app.add_subcommand("series", "Coefficients of the generating function");
    series->add_option("--spec", spec, "Registry name or @file")->required();
    series->add_option("--param", params, "Parameter k=v");
    series->add_flag("--show-spec", show_spec, "Print the weight system instead of the series");

    auto* count = app.add_subcommand("count", "Weight sum over all structures of size n");
    count->add_option("--spec", spec, "Registry name or @file")->required();
    count->add_option("--param", params, "Parameter k=v");
    count->add_option("--n", n, "Semilength")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List the paths of a family");
    enumerate->add_option("--family", family, "dyck, motzkin, schroder_large, schroder_small, delannoy")->required();
    enumerate->add_option("--n", n, "Size")->required();
    enumerate->add_option("--filter", filter, "none, first_not_flat, first_two_not_ud, y_filter")->capture_default_str();

    auto* biject = app.add_subcommand("biject", "Run a bijection");
    biject->add_option("--map", map_name, "phi, theta, sigma, rho, psi, tau")->required();
    auto* biject_n = biject->add_option("--n", n, "Size");
    auto* biject_apply = biject->add_option("--apply", apply, "@file or inline JSON to map");
    auto* biject_rt = biject->add_flag("--roundtrip", roundtrip, "Check both directions on every object of size n");
    biject_apply->excludes(biject_n);
    biject_rt->needs(biject_n);

    auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate a named sequence or formula");
    oracle_cmd->add_option("--name", name, "Sequence or formula name")->required();
    oracle_cmd->add_option("--n", n, "Index")->required();
    oracle_cmd->add_option("--param", params, "Parameter k=v");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name or all")->capture_default_str();
    verify->add_option("--max-n", max_n, "Largest size checked")->capture_default_str();

    auto* render = app.add_subcommand("render", "Draw a path");
    render->add_option("--path", path_arg, "Step string or @file")->required();
    render->add_option("--family", family, "Path family")->default_str("dyck");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        Output o(g, command, out);
        if (series->parsed()) return cmd_series(o, spec, params, g.order, show_spec);
        if (count->parsed()) return cmd_count(o, spec, params, n);
        if (enumerate->parsed()) return cmd_enumerate(o, family, n, filter);
        if (biject->parsed()) {
            const MapId map = parse_map(map_name);
            if (!apply.empty()) return cmd_biject_apply(o, map, apply);
            if (n < 0) throw UsageError("biject needs --n or --apply");
            return roundtrip ? cmd_biject_roundtrip(o, map, n) : cmd_biject_list(o, map, n);
        }
        if (oracle_cmd->parsed()) return cmd_oracle(o, name, n, params);
        if (verify->parsed()) return cmd_verify(o, suite, max_n, g.jobs, err);
        if (render->parsed()) return cmd_render(o, path_arg, family.empty() ? "dyck" : family);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace valleypaths::cli
