#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "valleypaths/cli.hpp"
#include "valleypaths/json_io.hpp"

using namespace valleypaths;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("valleypaths_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("series") {
    const Run r = invoke({"series", "--spec", "geom_3x", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0: 1\n1: 0\n2: 1\n3: 4\n4: 13\n5: 40\n");

    const Run csv = invoke({"--format", "csv", "series", "--spec", "motzkin_ab", "--order", "3", "--at", "a=2", "--at", "b=1/2"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,value\n0,1\n1,0\n2,1/2\n3,2\n");
    CHECK(invoke({"--format", "csv", "series", "--spec", "motzkin_ab", "--order", "3"}).code == 2);

    const Run spec = invoke({"--format", "json", "series", "--spec", "narayana_shift_t", "--order", "6", "--show-spec"});
    const std::string file = temp_file("spec.json", spec.out);
    const Run by_name = invoke({"--format", "json", "series", "--spec", "narayana_shift_t", "--order", "6"});
    const Run by_file = invoke({"--format", "json", "series", "--spec", "@" + file});
    CHECK(by_name.code == 0);
    CHECK(by_name.out == by_file.out);
    CHECK(invoke({"series", "--spec", "@" + file, "--param", "t=2"}).code == 2);
}

TEST_CASE("count and oracle") {
    CHECK(invoke({"count", "--spec", "motzkin_ab", "--n", "3"}).out == "2*a*b\n");
    CHECK(invoke({"count", "--spec", "delannoy_tuple", "--param", "a=4", "--param", "b=3", "--param", "c=7", "--param",
               "d=2", "--n", "4"})
              .out == "245\n");
    CHECK(invoke({"oracle", "--name", "narayana", "--n", "3", "--param", "t=sym"}).out == "t + 3*t^2 + t^3\n");
    CHECK(invoke({"oracle", "--name", "table31", "--n", "4", "--param", "a=4", "--param", "b=3", "--param", "c=7",
               "--param", "d=2"})
              .out == "245\n");
    const Run j = invoke({"--format", "json", "oracle", "--name", "motzkin_ab", "--n", "2"});
    CHECK(polynomial_from_json(parse_json(j.out)) == Polynomial::parse("a^2+b"));
    CHECK(invoke({"oracle", "--name", "nope", "--n", "2"}).code == 2);
    CHECK(invoke({"count", "--spec", "nope", "--n", "2"}).code == 2);
}

TEST_CASE("enumerate and render") {
    CHECK(invoke({"enumerate", "--family", "dyck", "--n", "3"}).out == "UUUDDD\nUUDUDD\nUUDDUD\nUDUUDD\nUDUDUD\n");
    CHECK(invoke({"enumerate", "--family", "dyck", "--n", "3", "--filter", "first_two_not_ud"}).out ==
          "UUUDDD\nUUDUDD\nUUDDUD\n");
    const Run ascii = invoke({"render", "--path", "UUDDUD"});
    CHECK(ascii.out == " /\\\n/  \\/\\\n");

    const Run listed = invoke({"--format", "json", "enumerate", "--family", "motzkin", "--n", "3"});
    for (const Json& p : parse_json(listed.out)) {
        const std::string file = temp_file("path.json", p.dump());
        const Run a = invoke({"--format", "json", "render", "--path", "@" + file});
        const Run b = invoke({"--format", "json", "render", "--path", p["steps"], "--family", "motzkin"});
        CHECK(a.out == b.out);
        CHECK(path_from_json(parse_json(a.out)) == path_from_json(p));
    }
    CHECK(invoke({"render", "--path", "UDD"}).code == 2);
    CHECK(invoke({"--format", "csv", "render", "--path", "UD"}).code == 2);
}

TEST_CASE("biject") {
    CHECK(invoke({"biject", "--map", "phi", "--n", "5", "--roundtrip"}).out == "phi n=5: PASS\n");
    CHECK(invoke({"biject", "--map", "tau", "--n", "5", "--roundtrip"}).code == 0);

    const std::string src = R"({"side":"src_4372","parts":[{"k0":8,"letters":"11h111h1h1h","blocks":[3,1,2]}]})";
    const Run fwd = invoke({"--format", "json", "biject", "--map", "tau", "--apply", src});
    CHECK(fwd.code == 0);
    const Run back = invoke({"--format", "json", "biject", "--map", "tau", "--apply", "@" + temp_file("tau.json", fwd.out)});
    CHECK(parse_json(back.out) == parse_json(src));

    const Run listed = invoke({"--format", "json", "biject", "--map", "theta", "--n", "4"});
    for (const Json& e : parse_json(listed.out)) {
        const Run img = invoke({"--format", "json", "biject", "--map", "theta", "--apply", e["source"].dump()});
        CHECK(parse_json(img.out) == e["image"]);
        const Run pre = invoke({"--format", "json", "biject", "--map", "theta", "--apply", img.out});
        CHECK(parse_json(pre.out) == e["source"]);
    }
    CHECK(invoke({"biject", "--map", "rho", "--apply", R"({"family":"dyck","steps":"UDUD"})"}).code == 2);
    CHECK(invoke({"biject", "--map", "rho", "--roundtrip"}).code == 2);
    CHECK(invoke({"biject", "--map", "rho", "--n", "3", "--apply", "{}"}).code == 2);
}

TEST_CASE("verify and usage errors") {
    const Run one = invoke({"verify", "--suite", "theorem21", "--max-n", "4"});
    CHECK(one.code == 0);
    CHECK(one.err.find("wall time") != std::string::npos);
    const Run three = invoke({"--jobs", "3", "verify", "--suite", "theorem21", "--max-n", "4"});
    CHECK(one.out == three.out);
    const Run j = invoke({"--format", "json", "verify", "--suite", "examples2", "--max-n", "8"});
    CHECK(parse_json(j.out)["status"] == "pass");

    CHECK(invoke({}).code == 2);
    CHECK(invoke({"series", "--spec", "geom_3x", "--bogus"}).code == 2);
    CHECK(invoke({"--format", "xml", "series", "--spec", "geom_3x"}).code == 2);
    CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
