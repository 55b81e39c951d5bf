#include "valleypaths/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "valleypaths/bijections.hpp"
#include "valleypaths/error.hpp"
#include "valleypaths/oracles.hpp"

namespace valleypaths {

namespace {

// Collects comparisons for one check; only the first failure is kept.
class Probe {
public:
    void equal(const std::string& what, long n, const std::string& spec, const Polynomial& lhs,
               const Polynomial& rhs) {
        if (lhs == rhs || !pass_) return;
        pass_ = false;
        cx_ = Json{{"what", what}, {"n", n}, {"spec", spec}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
    }
    void truth(const std::string& what, long n, const std::string& spec, bool ok, const std::string& detail = "") {
        if (ok || !pass_) return;
        pass_ = false;
        cx_ = Json{{"what", what}, {"n", n}, {"spec", spec}};
        if (!detail.empty()) cx_["detail"] = detail;
    }
    void error(const std::string& message) {
        pass_ = false;
        cx_ = Json{{"error", message}};
    }
    bool pass() const { return pass_; }
    const Json& counterexample() const { return cx_; }

private:
    bool pass_ = true;
    Json cx_;
};

struct Task {
    std::string suite;
    std::string name;
    std::function<void(Probe&)> body;
};

struct Target {
    Family family;
    PathFilter filter;
    TargetWeighting weighting;
};

std::string label(const std::string& name, const ParamMap& params) {
    if (params.empty()) return name;
    std::string out = name + "[";
    bool first = true;
    for (const auto& [k, v] : params) {
        out += (first ? "" : ",") + k + "=" + v;
        first = false;
    }
    return out + "]";
}

ParamMap abcd(int a, int b, int c, int d) {
    return {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"c", std::to_string(c)}, {"d", std::to_string(d)}};
}

ParamMap mr(long m, long r) { return {{"m", std::to_string(m)}, {"r", std::to_string(r)}}; }

std::size_t order_for(int max_n) { return static_cast<std::size_t>(std::max(max_n, 1)); }

// formula_vn(name) against the series coefficient, the structure sum and,
// when given, the weighted target-family sum.
Task formula_task(const std::string& suite, const std::string& formula, const ParamMap& fp, const std::string& spec,
                  const ParamMap& sp, int from, int max_n, bool ab, std::optional<Target> target = std::nullopt) {
    const std::string name = label(formula, fp) + " ~ " + label(spec, sp);
    return {suite, name, [=](Probe& p) {
                const WeightSpec w = registry_get(spec, sp, order_for(max_n));
                const TruncatedSeries v = ab ? spec_v_series_ab(w) : spec_v_series(w);
                const std::string where = label(spec, sp);
                for (int n = from; n <= max_n; ++n) {
                    const Polynomial f = formula_vn(formula, n, fp);
                    p.equal("formula = [x^n] series", n, where, f, v[static_cast<std::size_t>(n)]);
                    p.equal("formula = structure sum", n, where, f, weight_sum_v(n, w));
                    if (target) {
                        p.equal("formula = target sum", n, where, f,
                                weight_sum_target(n, target->family, target->filter, target->weighting));
                    }
                }
            }};
}

void tau_probe(int n, Probe& p) {
    std::set<std::vector<TauPart>> image;
    Polynomial src_total, dst_total;
    for_each_tau(n, TauSide::Src4372, [&](const TauDecorated& src) {
        const TauDecorated dst = tau_forward(src);
        p.truth("inverse(forward) = id", n, "src_4372", tau_inverse(dst) == src,
                to_json(src).dump());
        p.truth("size preserved", n, "src_4372", dst.size() == n, to_json(src).dump());
        p.equal("letter product preserved", n, "src_4372", tau_weight(src), tau_weight(dst));
        image.insert(dst.parts);
        src_total += tau_weight(src);
        return true;
    });
    std::size_t count = 0;
    for_each_tau(n, TauSide::Dst2174, [&](const TauDecorated& dst) {
        p.truth("forward(inverse) = id", n, "dst_2174", tau_forward(tau_inverse(dst)) == dst,
                to_json(dst).dump());
        p.truth("in image", n, "dst_2174", image.count(dst.parts) == 1, to_json(dst).dump());
        dst_total += tau_weight(dst);
        ++count;
        return true;
    });
    p.truth("image = target set", n, "dst_2174", count == image.size());
    const Polynomial expected(Integer(7) * delannoy_convolution(n - 2));
    p.equal("source sum", n, "src_4372", src_total, expected);
    p.equal("target sum", n, "dst_2174", dst_total, expected);
}

const char* aggregate_formula(MapId map) {
    switch (map) {
        case MapId::Phi: return "ex31";
        case MapId::Theta: return "ex33";
        case MapId::Sigma: return "ex35";
        case MapId::Rho: return "ex37";
        default: return "ex39";
    }
}

void map_probe(MapId map, int n, Probe& p) {
    if (map == MapId::Tau) {
        tau_probe(n, p);
        return;
    }
    const MapInfo& info = map_info(map);
    const std::string where(to_string(map));
    std::multiset<std::string> image;
    Polynomial total;
    for_each_decorated(n, map, [&](const DecoratedVPath& d) {
        const Path img = forward(d);
        p.truth("inverse(forward) = id", n, where, inverse(map, img) == d,
                to_json(d).dump());
        p.truth("size preserved", n, where, img.size() == n, to_json(d).dump());
        const Polynomial w = eval_decorated_weight(d);
        p.equal("weight preserved", n, where, w, target_weight(img, info.target_weighting));
        image.insert(img.str());
        total += w;
        return true;
    });
    std::multiset<std::string> targets;
    for_each_path(info.target_family, n, info.target_filter, [&](const Path& t) {
        p.truth("forward(inverse) = id", n, where, forward(inverse(map, t)) == t, t.str());
        targets.insert(t.str());
        return true;
    });
    p.truth("image = target family", n, where, image == targets);
    p.equal("aggregate = formula", n, where, total, formula_vn(aggregate_formula(map), n));
}

void theorem21(std::vector<Task>& out, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        out.push_back({"theorem21", "n=" + std::to_string(n), [n, max_n](Probe& p) {
                           const WeightSpec g = registry_get("generic", {}, order_for(max_n));
                           const TruncatedSeries v = spec_v_series(g);
                           Polynomial by_paths;
                           for_each_path(Family::Dyck, n, PathFilter::None, [&](const Path& path) {
                               if (is_in_v(path)) by_paths += weight_of_path(path, g);
                               return true;
                           });
                           const Polynomial sum = weight_sum_v(n, g);
                           p.equal("structure sum = [x^n] series", n, "generic", sum, v[static_cast<std::size_t>(n)]);
                           p.equal("structure sum = path sum", n, "generic", sum, by_paths);
                       }});
    }
}

void weights(std::vector<Task>& out, int max_n) {
    const std::vector<std::pair<std::string, ParamMap>> entries = {
        {"generic", {}},          {"geom_3x", {}},          {"geom_fib", {}},
        {"motzkin_ab", {}},       {"schroder_large_q", {}}, {"schroder_small_q", {}},
        {"narayana_t", {}},       {"narayana_shift_t", {}}, {"chebyshev_abcd", {}},
        {"chebyshev_second", {}}, {"delannoy_tuple", abcd(4, 3, 7, 2)},
        {"fuss_sym", mr(2, 1)},   {"fuss_asym", mr(2, 1)},  {"remark315", mr(2, 1)},
    };
    for (const auto& [name, params] : entries) {
        out.push_back({"weights", label(name, params), [name, params, max_n](Probe& p) {
                           const WeightSpec w = registry_get(name, params, order_for(max_n));
                           const TruncatedSeries v = spec_v_series(w);
                           const bool ab = gamma_is_alpha_beta(w);
                           const TruncatedSeries vab = ab ? spec_v_series_ab(w) : v;
                           const std::string where = label(name, params);
                           for (int n = 0; n <= max_n; ++n) {
                               const auto k = static_cast<std::size_t>(n);
                               const Polynomial sum = weight_sum_v(n, w);
                               p.equal("structure sum = [x^n] series", n, where, sum, v[k]);
                               p.equal("structure sum = [x^n] series_ab", n, where, sum, vab[k]);
                           }
                       }});
    }
}

void examples2(std::vector<Task>& out, int max_n) {
    out.push_back(formula_task("examples2", "ex21_geom3", {}, "geom_3x", {}, 1, max_n, true));
    out.push_back(formula_task("examples2", "ex21_fib", {}, "geom_fib", {}, 1, max_n, true));
}

void motzkin31(std::vector<Task>& out, int max_n) {
    out.push_back(formula_task("motzkin31", "ex31", {}, "motzkin_ab", {}, 0, max_n, true,
                               Target{Family::Motzkin, PathFilter::FirstNotFlat, TargetWeighting::MotzkinAB}));
}

void schroder32(std::vector<Task>& out, int max_n) {
    out.push_back(formula_task("schroder32", "ex33", {}, "schroder_large_q", {}, 0, max_n, true,
                               Target{Family::SchroderLarge, PathFilter::YFilter, TargetWeighting::SchroderQ}));
    out.push_back(formula_task("schroder32", "ex35", {}, "schroder_small_q", {}, 0, max_n, true,
                               Target{Family::SchroderSmall, PathFilter::FirstTwoNotUD, TargetWeighting::SchroderQ}));
}

void narayana33(std::vector<Task>& out, int max_n) {
    out.push_back(formula_task("narayana33", "ex37", {}, "narayana_t", {}, 0, max_n, true,
                               Target{Family::Dyck, PathFilter::FirstTwoNotUD, TargetWeighting::NarayanaT}));
    out.push_back(formula_task("narayana33", "ex39", {}, "narayana_shift_t", {}, 0, max_n, true,
                               Target{Family::Dyck, PathFilter::FirstTwoNotUD, TargetWeighting::LevelPeaks}));
}

void chebyshev34(std::vector<Task>& out, int max_n) {
    const char* s = "chebyshev34";
    out.push_back(formula_task(s, "eq31_closed", {}, "chebyshev_abcd", {}, 0, max_n, true));
    out.push_back(formula_task(s, "case1", abcd(2, 1, 2, 1), "chebyshev_abcd", abcd(2, 1, 2, 1), 0, max_n, true));
    out.push_back(formula_task(s, "case2", abcd(2, 1, 1, 1), "chebyshev_abcd", abcd(2, 1, 1, 1), 0, max_n, true));
    out.push_back(formula_task(s, "case2", abcd(3, 1, 1, 1), "chebyshev_abcd", abcd(3, 1, 1, 1), 0, max_n, true));
    out.push_back(formula_task(s, "case3", abcd(2, 1, 1, 1), "chebyshev_abcd", abcd(2, 1, 1, 1), 0, max_n, true));
    out.push_back(formula_task(s, "cheb2", {}, "chebyshev_second", {}, 0, max_n, true));
}

const std::vector<std::pair<ParamMap, long>>& delannoy_tuples() {
    static const std::vector<std::pair<ParamMap, long>> tuples = {
        {abcd(4, 3, 7, 2), 7}, {abcd(2, 1, 7, 4), 7}, {abcd(5, 4, 4, 1), 4}, {abcd(5, 1, 1, 1), 4},
        {abcd(1, 0, 4, 5), 4}, {abcd(3, 2, 8, 3), 8}, {abcd(3, 1, 4, 3), 8},
    };
    return tuples;
}

void delannoy35(std::vector<Task>& out, int max_n) {
    const char* s = "delannoy35";
    for (const auto& [params, m] : delannoy_tuples()) {
        out.push_back(formula_task(s, "table31", params, "delannoy_tuple", params, 0, max_n, true));
    }
    out.push_back({s, "scaled sums", [max_n](Probe& p) {
                       for (const auto& [params, m] : delannoy_tuples()) {
                           const WeightSpec w = registry_get("delannoy_tuple", params, order_for(max_n));
                           for (int n = 2; n <= max_n; ++n) {
                               p.equal("sum / multiplier = convolution", n, label("delannoy_tuple", params),
                                       weight_sum_v(n, w).exact_div(Polynomial(m)),
                                       Polynomial(delannoy_convolution(n - 2)));
                           }
                       }
                   }});
    out.push_back({s, "axis H-steps", [max_n](Probe& p) {
                       for (int n = 1; n <= std::min(max_n, 5); ++n) {
                           p.equal("hstep count = convolution", n, "delannoy",
                                   Polynomial(delannoy_hstep_count(n)), Polynomial(delannoy_convolution(n - 1)));
                       }
                   }});
    for (int n = 2; n <= max_n; ++n) {
        out.push_back({s, "tau n=" + std::to_string(n), [n](Probe& p) { tau_probe(n, p); }});
    }
}

void fuss36(std::vector<Task>& out, int max_n) {
    for (long r = 1; r <= 3; ++r) {
        for (long m = r; m <= r + 2; ++m) {
            const ParamMap p = mr(m, r);
            out.push_back(formula_task("fuss36", "ex314_first", p, "fuss_sym", p, 0, max_n, true));
            out.push_back(formula_task("fuss36", "ex314_second", p, "fuss_asym", p, 0, max_n, true));
            out.push_back(formula_task("fuss36", "rem315", p, "remark315", p, 0, max_n, false));
            if (m == r + 1) {
                out.push_back(formula_task("fuss36", "ex314_collapse", p, "fuss_asym", p, 0, max_n, true));
                out.push_back(formula_task("fuss36", "rem315_collapse", p, "remark315", p, 0, max_n, false));
            }
        }
    }
}

void bijections(std::vector<Task>& out, int max_n) {
    for (MapId map : {MapId::Phi, MapId::Theta, MapId::Sigma, MapId::Rho, MapId::Psi}) {
        for (int n = 0; n <= max_n; ++n) {
            const std::string name = std::string(to_string(map)) + " n=" + std::to_string(n);
            out.push_back({"bijections", name, [map, n](Probe& p) { map_probe(map, n, p); }});
        }
    }
}

using Builder = void (*)(std::vector<Task>&, int);

const std::vector<std::pair<std::string, Builder>>& builders() {
    static const std::vector<std::pair<std::string, Builder>> list = {
        {"theorem21", theorem21},   {"weights", weights},       {"examples2", examples2},
        {"motzkin31", motzkin31},   {"schroder32", schroder32}, {"narayana33", narayana33},
        {"chebyshev34", chebyshev34}, {"delannoy35", delannoy35}, {"fuss36", fuss36},
        {"bijections", bijections},
    };
    return list;
}

}  // namespace

CheckResult bijection_check(MapId map, int n) {
    Probe probe;
    try {
        map_probe(map, n, probe);
    } catch (const std::exception& e) {
        probe.error(e.what());
    }
    return {"bijections", std::string(to_string(map)) + " n=" + std::to_string(n), probe.pass(),
            probe.counterexample()};
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, build] : builders()) out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, int max_n, unsigned jobs) {
    if (max_n < 0) throw Error(ErrorCode::BadParams, "max-n must be nonnegative");
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    std::vector<Task> tasks;
    for (const auto& [name, build] : builders()) {
        if (suite != "all" && suite != name) continue;
        report.suites.push_back(name);
        build(tasks, max_n);
    }
    if (report.suites.empty()) throw Error(ErrorCode::BadParams, "unknown suite '" + suite + "'");

    report.checks.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            Probe probe;
            try {
                tasks[i].body(probe);
            } catch (const std::exception& e) {
                probe.error(e.what());
            }
            report.checks[i] = {tasks[i].suite, tasks[i].name, probe.pass(), probe.counterexample()};
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const VerifyReport& report) {
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks) {
        Json entry{{"suite", c.suite}, {"check", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) {
            entry["counterexample"] = c.counterexample;
            ++failed;
        }
        checks.push_back(entry);
    }
    return Json{{"suites", report.suites},
                {"status", failed == 0 ? "pass" : "fail"},
                {"passed", report.checks.size() - failed},
                {"failed", failed},
                {"checks", checks}};
}

std::string pretty(const VerifyReport& report) {
    std::size_t w_suite = 5, w_check = 5;
    for (const CheckResult& c : report.checks) {
        w_suite = std::max(w_suite, c.suite.size());
        w_check = std::max(w_check, c.name.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
    std::ostringstream out;
    out << pad("suite", w_suite) << pad("check", w_check) << "status\n";
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks) {
        out << pad(c.suite, w_suite) << pad(c.name, w_check) << (c.pass ? "PASS" : "FAIL") << '\n';
        if (!c.pass) {
            out << "    " << c.counterexample.dump() << '\n';
            ++failed;
        }
    }
    out << (report.checks.size() - failed) << " passed, " << failed << " failed\n";
    return out.str();
}

}  // namespace valleypaths
