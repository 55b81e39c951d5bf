#include "brute.hpp"
#include "doctest.h"
#include "valleypaths/error.hpp"
#include "valleypaths/oracles.hpp"

using namespace valleypaths;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

ParamMap abcd(const char* a, const char* b, const char* c, const char* d) {
    return {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
}

ParamMap mr(long m, long r) { return {{"m", std::to_string(m)}, {"r", std::to_string(r)}}; }

}  // namespace

TEST_CASE("sequence values") {
    CHECK(oracle("catalan", 3) == Polynomial(5));
    CHECK(oracle("delannoy", 2) == Polynomial(13));
    CHECK(oracle("narayana", 2) == P("t+t^2"));
    CHECK(oracle("narayana", 3, {{"t", "1"}}) == Polynomial(5));
    CHECK(oracle("fuss", 2, {{"r", "2"}}) == Polynomial(3));
    CHECK(oracle("fibonacci", 0) == Polynomial(0));
    CHECK(oracle("fibonacci", 10) == Polynomial(55));
    CHECK(oracle("motzkin_ab", 3) == P("a^3+3*a*b"));
    CHECK(oracle("chebyshev_u", 2) == P("4*t^2-1"));
    CHECK_THROWS_AS(oracle("fuss", 2), Error);
    CHECK_THROWS_AS(oracle("catalan", -1), Error);
    CHECK_THROWS_AS(oracle("catalan", 2, {{"t", "1"}}), Error);
    CHECK_THROWS_AS(oracle("nope", 2), Error);
}

TEST_CASE("sequence cross-checks") {
    for (long n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(oracle("catalan", n) == Polynomial(brute::catalan(n)));
        CHECK(oracle("narayana", n) == brute::narayana(n));
        CHECK(oracle("narayana", n, {{"t", "1"}}) == oracle("catalan", n));
        CHECK(oracle("narayana", n).eval({{Var::t(), P("q+1")}}) == oracle("schroder_large", n));
        CHECK(oracle("schroder_large", n) == brute::schroder_large(n));
        CHECK(oracle("motzkin_ab", n) == brute::motzkin_ab(n));
        if (n >= 1) CHECK(P("q+1") * oracle("schroder_small", n) == oracle("schroder_large", n));
        CHECK(oracle("fibonacci", n) == Polynomial(brute::fibonacci(n)));
    }
    const auto u = gen_named(NamedSeries::ChebyshevU, 20);
    for (long n = 0; n <= 20; ++n) {
        CHECK(delannoy_number(n) == brute::delannoy(n));
        CHECK(oracle("chebyshev_u", n) == u[static_cast<std::size_t>(n)]);
        if (n >= 2) CHECK(oracle("chebyshev_u", n) == P("2*t") * oracle("chebyshev_u", n - 1) - oracle("chebyshev_u", n - 2));
    }
}

TEST_CASE("axis H-steps of Delannoy paths") {
    CHECK(delannoy_hstep_count(1) == 1);
    CHECK(delannoy_hstep_count(2) == 6);
    CHECK(delannoy_hstep_count(3) == 35);
    for (int n = 1; n <= 5; ++n) {
        Integer naive = 0;
        for (const auto& w : brute::delannoy_words(n)) {
            int level = 0;
            for (char ch : w) {
                if (ch == 'H' && level == 0) ++naive;
                level += ch == 'U' ? 1 : (ch == 'D' ? -1 : 0);
            }
        }
        CHECK(delannoy_hstep_count(n) == naive);
        CHECK(delannoy_hstep_count(n) == delannoy_convolution(n - 1));
    }
    CHECK_THROWS_AS(delannoy_hstep_count(0), Error);
}

TEST_CASE("formula values") {
    CHECK(formula_vn("table31", 4, abcd("4", "3", "7", "2")) == Polynomial(245));
    CHECK(formula_vn("ex21_geom3", 3) == Polynomial(4));
    CHECK(formula_vn("ex314_collapse", 2, {{"r", "1"}}) == Polynomial(1));
    CHECK(formula_vn("case1", 1, abcd("2", "1", "2", "1")) == Polynomial(0));
    CHECK(formula_vn("case1", 0, abcd("2", "1", "2", "1")) == Polynomial(1));
    CHECK_THROWS_AS(formula_vn("case1", 3, abcd("2", "1", "1", "1")), Error);
    CHECK_THROWS_AS(formula_vn("ex31", -1), Error);
    CHECK_THROWS_AS(formula_vn("ex314_collapse", 3, mr(1, 1)), Error);
}

TEST_CASE("formulas equal series coefficients") {
    const std::size_t N = 9;
    auto agree = [&](const std::string& formula, const ParamMap& fp, const std::string& spec, const ParamMap& sp,
                     bool ab = true) {
        CAPTURE(formula);
        const WeightSpec w = registry_get(spec, sp, N);
        const TruncatedSeries v = ab ? spec_v_series_ab(w) : spec_v_series(w);
        for (std::size_t n = 0; n <= N; ++n) {
            CAPTURE(n);
            CHECK(formula_vn(formula, static_cast<long>(n), fp) == v[n]);
        }
    };
    agree("ex21_geom3", {}, "geom_3x", {});
    agree("ex21_fib", {}, "geom_fib", {});
    agree("ex31", {}, "motzkin_ab", {});
    agree("ex33", {}, "schroder_large_q", {});
    agree("ex35", {}, "schroder_small_q", {});
    agree("ex37", {}, "narayana_t", {});
    agree("ex39", {}, "narayana_shift_t", {});
    agree("eq31_closed", {}, "chebyshev_abcd", {});
    agree("case1", abcd("2", "1", "2", "1"), "chebyshev_abcd", abcd("2", "1", "2", "1"));
    agree("case2", abcd("2", "1", "1", "1"), "chebyshev_abcd", abcd("2", "1", "1", "1"));
    agree("case2", abcd("3", "1", "1", "1"), "chebyshev_abcd", abcd("3", "1", "1", "1"));
    agree("case3", abcd("2", "1", "1", "1"), "chebyshev_abcd", abcd("2", "1", "1", "1"));
    agree("cheb2", {}, "chebyshev_second", {});
    agree("table31", abcd("3", "1", "4", "3"), "delannoy_tuple", abcd("3", "1", "4", "3"));
    for (long r = 1; r <= 3; ++r) {
        for (long m = r; m <= r + 2; ++m) {
            CAPTURE(r);
            CAPTURE(m);
            agree("ex314_first", mr(m, r), "fuss_sym", mr(m, r));
            agree("ex314_second", mr(m, r), "fuss_asym", mr(m, r));
            agree("rem315", mr(m, r), "remark315", mr(m, r), false);
            if (m == r + 1) {
                agree("ex314_collapse", mr(m, r), "fuss_asym", mr(m, r));
                agree("rem315_collapse", mr(m, r), "remark315", mr(m, r), false);
            }
        }
    }
}
