#include "brute.hpp"
#include "doctest.h"
#include "valleypaths/error.hpp"
#include "valleypaths/weights.hpp"

using namespace valleypaths;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

Path dyck(const std::string& s) { return parse_path(s, Family::Dyck); }

const std::string kThreeFactor = std::string("UUU") + "UUUDDD" + "UDUD" + "DDD" + "UU" + "UDUD" + "DD" + "UUDD";

std::vector<Polynomial> polys(std::initializer_list<const char*> s) {
    std::vector<Polynomial> out;
    for (const char* c : s) out.push_back(P(c));
    return out;
}

Polynomial delannoy_convolution(long n) {
    Integer s = 0;
    for (long i = 0; i <= n - 2; ++i) s += brute::delannoy(i) * brute::delannoy(n - 2 - i);
    return Polynomial(s);
}

}  // namespace

TEST_CASE("structure and path weights on fixtures") {
    const WeightSpec generic = registry_get("generic", {}, 14);
    const Polynomial three = P("alpha1^4*alpha3*beta2*beta3*gamma2");
    CHECK(weight_of_structure(from_path(dyck(kThreeFactor)), generic) == three);
    CHECK(weight_of_path(dyck(kThreeFactor), generic) == three);
    for (int k = 1; k <= 5; ++k) {
        VStructure s{{Pyr{k}}};
        CHECK(weight_of_structure(s, generic) == P("gamma" + std::to_string(k)));
        CHECK(weight_of_path(to_path(s), generic) == P("gamma" + std::to_string(k)));
    }
    const WeightSpec mab = registry_get("motzkin_ab", {}, 14);
    const VStructure five_block{{Pyr{5}, Block{3, {1, 1, 1, 1}}, Pyr{2}}};
    const Polynomial expected = P("a^3*b^3*(a^2+b)*(a^3+3*a*b)");
    CHECK(weight_of_structure(five_block, mab) == expected);
    CHECK(weight_of_path(to_path(five_block), mab) == expected);
    CHECK_THROWS_AS(weight_of_path(dyck("UUUDUDDUDD"), generic), Error);
    CHECK_THROWS_AS(weight_of_structure(five_block, registry_get("generic", {}, 4)), Error);
}

TEST_CASE("weight sums") {
    const WeightSpec generic = registry_get("generic", {}, 7);
    CHECK(weight_sum_v(0, generic) == Polynomial(1));
    CHECK(weight_sum_v(1, generic) == P("gamma1"));
    CHECK(weight_sum_v(3, generic) == P("gamma3 + 2*gamma2*gamma1 + gamma1^3 + beta1*alpha1^2"));
    CHECK(weight_sum_v(3, registry_get("geom_3x", {}, 3)) == Polynomial(4));
    CHECK_THROWS_AS(weight_sum_v(8, generic), Error);
}

TEST_CASE("master identity with generic weights") {
    const WeightSpec generic = registry_get("generic", {}, 7);
    const TruncatedSeries v = spec_v_series(generic);
    for (int n = 0; n <= 7; ++n) {
        Polynomial by_paths;
        for (const Path& p : enumerate_family(Family::Dyck, n)) {
            if (is_in_v(p)) by_paths += weight_of_path(p, generic);
        }
        CHECK(weight_sum_v(n, generic) == v[static_cast<std::size_t>(n)]);
        CHECK(by_paths == v[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("registry coefficients") {
    const WeightSpec m = registry_get("motzkin_ab", {}, 4);
    CHECK(m.alpha == polys({"a", "0", "0", "0"}));
    CHECK(m.beta == polys({"b", "a*b", "b*(a^2+b)", "b*(a^3+3*a*b)"}));
    CHECK(m.beta_denominator == P("a"));
    CHECK(m.gamma == polys({"0", "b", "a*b", "b*(a^2+b)"}));

    const WeightSpec d = registry_get("delannoy_tuple", {{"a", "4"}, {"b", "3"}, {"c", "7"}, {"d", "2"}}, 3);
    CHECK(d.alpha == polys({"1", "3", "9"}));
    CHECK(d.beta == polys({"7", "14", "28"}));
    CHECK(d.gamma == polys({"0", "7", "35"}));

    const WeightSpec g = registry_get("generic", {}, 2);
    CHECK(g.alpha == polys({"alpha1", "alpha2"}));
    CHECK(g.gamma == polys({"gamma1", "gamma2"}));

    const WeightSpec round = spec_from_series(to_series(m).alpha, to_series(m).beta, to_series(m).gamma, P("a"));
    CHECK(round == m);
    CHECK_THROWS_AS(spec_from_series(TruncatedSeries::constant(Polynomial(1), 2), TruncatedSeries(2), TruncatedSeries(2)),
                    Error);
}

TEST_CASE("registry parameter handling") {
    CHECK_THROWS_AS(registry_get("motzkin_ab", {{"a", "0"}}, 4), Error);
    CHECK_THROWS_AS(registry_get("motzkin_ab", {{"q", "1"}}, 4), Error);
    CHECK_THROWS_AS(registry_get("nope", {}, 4), Error);
    CHECK_THROWS_AS(registry_get("fuss_sym", {{"r", "1"}}, 4), Error);
    CHECK_THROWS_AS(registry_get("delannoy_tuple", {{"a", "4"}}, 4), Error);
    const WeightSpec sym = registry_get("narayana_t", {{"t", "sym"}}, 5);
    CHECK(sym == registry_get("narayana_t", {}, 5));
    const WeightSpec one = registry_get("narayana_t", {{"t", "1"}}, 5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(one.beta_k(k).is_constant());
}

TEST_CASE("gamma = alpha beta entries satisfy the closed form") {
    const std::vector<std::pair<std::string, ParamMap>> entries = {
        {"geom_3x", {}},
        {"geom_fib", {}},
        {"motzkin_ab", {}},
        {"schroder_large_q", {}},
        {"schroder_small_q", {}},
        {"narayana_t", {}},
        {"narayana_shift_t", {}},
        {"chebyshev_abcd", {}},
        {"chebyshev_second", {}},
        {"delannoy_tuple", {{"a", "5"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}},
        {"fuss_sym", {{"m", "2"}, {"r", "1"}}},
        {"fuss_asym", {{"m", "3"}, {"r", "2"}}},
    };
    for (const auto& [name, params] : entries) {
        CAPTURE(name);
        const std::size_t n = name.rfind("chebyshev", 0) == 0 ? 7 : 9;
        const WeightSpec spec = registry_get(name, params, n);
        CHECK(gamma_is_alpha_beta(spec));
        const TruncatedSeries v = spec_v_series_ab(spec);
        CHECK(v == spec_v_series(spec));
        for (std::size_t k = 0; k <= n; ++k) CHECK(weight_sum_v(static_cast<int>(k), spec) == v[k]);
    }
    CHECK_FALSE(gamma_is_alpha_beta(registry_get("remark315", {{"m", "2"}, {"r", "1"}}, 6)));
}

TEST_CASE("difference formulas over target families") {
    const Polynomial a = P("a"), q = P("q"), t = P("t"), one(1);
    for (long n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const int ni = static_cast<int>(n);
        CHECK(weight_sum_target(ni, Family::Motzkin, PathFilter::FirstNotFlat, TargetWeighting::MotzkinAB) ==
              brute::motzkin_ab(n) - a * brute::motzkin_ab(n - 1));
        const Polynomial r_prev = n == 0 ? Polynomial() : brute::schroder_large(n - 1);
        CHECK(weight_sum_target(ni, Family::SchroderLarge, PathFilter::YFilter, TargetWeighting::SchroderQ) ==
              brute::schroder_large(n) - (q + one) * r_prev);
        const Polynomial n_prev = n == 0 ? Polynomial() : brute::narayana(n - 1);
        CHECK(weight_sum_target(ni, Family::Dyck, PathFilter::FirstTwoNotUD, TargetWeighting::NarayanaT) ==
              brute::narayana(n) - t * n_prev);
        const Polynomial level_peaks =
            n == 0 ? one : (brute::narayana(n + 1) - (t + one) * brute::narayana(n)).exact_div(t);
        CHECK(weight_sum_target(ni, Family::Dyck, PathFilter::FirstTwoNotUD, TargetWeighting::LevelPeaks) ==
              level_peaks);

        // Small Schroeder by naive words, with q per H.
        auto small_sum = [&](long k) {
            Polynomial s;
            if (k < 0) return s;
            for (const auto& w : brute::schroder_words(static_cast<int>(k), true)) {
                s += q.pow(static_cast<unsigned>(std::count(w.begin(), w.end(), 'H')));
            }
            return s;
        };
        CHECK(weight_sum_target(ni, Family::SchroderSmall, PathFilter::FirstTwoNotUD, TargetWeighting::SchroderQ) ==
              small_sum(n) - small_sum(n - 1));
        CHECK(weight_sum_target(ni, Family::Dyck, PathFilter::None, TargetWeighting::NarayanaT) == brute::narayana(n));
    }
    CHECK(weight_sum_target(2, Family::Motzkin, PathFilter::FirstNotFlat, TargetWeighting::MotzkinAB) == P("b"));
    CHECK(weight_sum_target(2, Family::SchroderLarge, PathFilter::YFilter, TargetWeighting::SchroderQ) == P("q+1"));
}

TEST_CASE("Delannoy tuples share one weight sum up to scaling") {
    const std::vector<std::pair<std::vector<const char*>, long>> tuples = {
        {{"4", "3", "7", "2"}, 7}, {{"2", "1", "7", "4"}, 7}, {{"5", "4", "4", "1"}, 4}, {{"5", "1", "1", "1"}, 4},
        {{"1", "0", "4", "5"}, 4}, {{"3", "2", "8", "3"}, 8}, {{"3", "1", "4", "3"}, 8},
    };
    for (const auto& [abcd, mult] : tuples) {
        const WeightSpec spec =
            registry_get("delannoy_tuple", {{"a", abcd[0]}, {"b", abcd[1]}, {"c", abcd[2]}, {"d", abcd[3]}}, 9);
        for (long n = 2; n <= 9; ++n) {
            CHECK(weight_sum_v(static_cast<int>(n), spec) == Polynomial(mult) * delannoy_convolution(n));
        }
    }
}
