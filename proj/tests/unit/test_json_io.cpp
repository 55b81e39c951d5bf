#include "brute.hpp"
#include "doctest.h"
#include "valleypaths/error.hpp"
#include "valleypaths/json_io.hpp"
#include "valleypaths/verify.hpp"

using namespace valleypaths;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

template <class T, class Read>
void roundtrip(const T& value, Read read) {
    const Json j = to_json(value);
    CHECK(read(j) == value);
    CHECK(read(parse_json(j.dump())) == value);
}

}  // namespace

TEST_CASE("polynomial form") {
    const Json j = to_json(P("-1/2*t + 2*a^3*b"));
    CHECK(j.dump() == R"([{"coeff":"-1/2","monomial":{"t":1}},{"coeff":"2","monomial":{"a":3,"b":1}}])");
    CHECK(to_json(Polynomial()).dump() == "[]");
    CHECK(to_json(Polynomial(5)).dump() == R"([{"coeff":"5","monomial":{}}])");
    CHECK(polynomial_from_json(Json("q+1")) == P("q+1"));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) roundtrip(brute::random_poly(rng), polynomial_from_json);
    roundtrip(P("alpha3*beta12^2 - gamma1/7"), polynomial_from_json);

    CHECK_THROWS_AS(polynomial_from_json(parse_json(R"([{"coeff":"1","monomial":{"z":1}}])")), Error);
    CHECK_THROWS_AS(polynomial_from_json(parse_json(R"([{"coeff":"1","monomial":{"a":-1}}])")), Error);
    CHECK_THROWS_AS(polynomial_from_json(parse_json(R"([{"monomial":{}}])")), Error);
    CHECK_THROWS_AS(parse_json("[1,"), Error);
}

TEST_CASE("series, path and spec forms") {
    const WeightSpec w = registry_get("motzkin_ab", {}, 6);
    roundtrip(spec_v_series(w), series_from_json);
    CHECK(to_json(spec_v_series(w)).at("order") == 6);
    CHECK_THROWS_AS(series_from_json(parse_json(R"({"order":3,"coeffs":[[]]})")), Error);

    CHECK(to_json(parse_path("UHD", Family::SchroderLarge)).dump() == R"({"family":"schroder_large","steps":"UHD"})");
    CHECK(to_json(parse_path("UUDD", Family::Dyck)).dump() == R"({"family":"dyck","steps":"UUDD"})");
    for (Family f : {Family::Dyck, Family::Motzkin, Family::SchroderLarge, Family::SchroderSmall, Family::Delannoy}) {
        for (const Path& q : enumerate_family(f, 3)) roundtrip(q, path_from_json);
    }
    CHECK_THROWS_AS(path_from_json(parse_json(R"({"family":"dyck","steps":"DU"})")), Error);

    for (const char* name : {"generic", "motzkin_ab", "narayana_shift_t", "fuss_asym"}) {
        const ParamMap params = std::string(name) == "fuss_asym" ? ParamMap{{"m", "3"}, {"r", "2"}} : ParamMap{};
        const WeightSpec s = registry_get(name, params, 5);
        roundtrip(s, spec_from_json);
        CHECK(spec_v_series(spec_from_json(to_json(s))) == spec_v_series(s));
    }
    CHECK(to_json(registry_get("motzkin_ab", {}, 2)).contains("beta_denominator"));
    CHECK_FALSE(to_json(registry_get("geom_3x", {}, 2)).contains("beta_denominator"));
    CHECK_THROWS_AS(spec_from_json(parse_json(R"({"alpha":["1"],"beta":[],"gamma":["1"]})")), Error);
}

TEST_CASE("decorated objects") {
    const Json theta = parse_json(
        R"({"map":"theta","parts":[{"kind":"pyr","height":3,"inner":"UHD"},)"
        R"({"kind":"block","ascent":1,"heights":[1,1,1],"inner":"H","symbols":["H","UD"]}]})");
    const DecoratedVPath d = decorated_from_json(theta);
    CHECK(to_json(d) == theta);
    CHECK(forward(d).str() == "UUHDDUHDHUD");

    for (MapId m : {MapId::Phi, MapId::Theta, MapId::Sigma, MapId::Rho, MapId::Psi}) {
        for (int n = 0; n <= 5; ++n) {
            for (const DecoratedVPath& x : enumerate_decorated(n, m)) roundtrip(x, decorated_from_json);
        }
    }
    // Wrong inner size for the part.
    CHECK_THROWS_AS(decorated_from_json(parse_json(R"({"map":"rho","parts":[{"kind":"pyr","height":3,"inner":"UD"}]})")),
                    Error);
    CHECK_THROWS_AS(decorated_from_json(parse_json(R"({"map":"rho","parts":[{"kind":"cube"}]})")), Error);
}

TEST_CASE("tau objects") {
    const Json src = parse_json(R"({"side":"src_4372","parts":[{"k0":8,"letters":"11h111h1h1h","blocks":[3,1,2]}]})");
    const TauDecorated t = tau_from_json(src);
    CHECK(to_json(t) == src);
    const Json tokens =
        parse_json(R"({"side":"src_4372","parts":[{"k0":8,"letters":["1","1h","1","1","1h","1h","1h"],"blocks":[3,1,2]}]})");
    CHECK(tau_from_json(tokens) == t);
    CHECK(to_json(tau_forward(t)).dump() ==
          R"({"side":"dst_2174","parts":[{"k0":6,"letters":"3h113h3h","blocks":[4,1,2,1]}]})");
    for (int n = 2; n <= 6; ++n) {
        for (TauSide side : {TauSide::Src4372, TauSide::Dst2174}) {
            for (const TauDecorated& x : enumerate_tau(n, side)) roundtrip(x, tau_from_json);
        }
    }
    CHECK_THROWS_AS(tau_from_json(parse_json(R"({"side":"src_4372","parts":[{"k0":3,"letters":"13h","blocks":[1]}]})")),
                    Error);
}

TEST_CASE("verify report is independent of the thread count") {
    const VerifyReport one = run_verify("motzkin31", 5, 1);
    const VerifyReport four = run_verify("motzkin31", 5, 4);
    CHECK(one.all_pass());
    CHECK(to_json(one).dump() == to_json(four).dump());
    CHECK(pretty(one) == pretty(four));
    CHECK_THROWS_AS(run_verify("nope", 3), Error);
    CHECK(bijection_check(MapId::Tau, 5).pass);
    CHECK(bijection_check(MapId::Sigma, 5).pass);
}
