#include <doctest.h>

#include "hs/builtin_suite.hpp"
#include "hs/map_dsl.hpp"
#include "support/random_poly.hpp"

using namespace hs;
using hs::testing::random_poly;

TEST_CASE("parsing the C^3 example matches hand-built polynomials") {
    auto defs = parse_map_file(builtin::example_c3_source());
    REQUIRE(defs.size() == 1);
    const MapDefinition& d = defs[0];
    CHECK(d.name == "F");
    CHECK(d.variables == std::vector<std::string>{"x", "y", "z"});

    Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1),
               z = Polynomial::variable(3, 2);
    CHECK(d.components[0] == y + x * x);
    CHECK(d.components[1] == z + y * y);
    CHECK(d.components[2] == x);
    REQUIRE(d.inverse_components.has_value());
    Polynomial inner = x - z * z;
    CHECK((*d.inverse_components)[2] == y - inner * inner);
}

TEST_CASE("small grammars") {
    auto id1 = parse_map_file("map I(x) = (x)");
    CHECK(id1[0].components[0] == Polynomial::variable(1, 0));

    auto henon = parse_map_file("map B(x, y) = (y, y^2 + 1/2 - x)");
    CHECK(henon[0].components[1].constant_term() == GaussianRational(BigRational(1, 2)));
    CHECK(print_map(henon[0]) == "map B(x, y) = (y, y^2 - x + 1/2)");

    auto imag = parse_map_file("map C(x) = (i*x + (1 - i))");
    CHECK(imag[0].components[0].constant_term() == GaussianRational(BigRational(1), BigRational(-1)));
}

TEST_CASE("comments and multiple maps") {
    const char* src =
        "# two maps, one file\n"
        "map A(x) = (x^2) # trailing comment\n"
        "map B(x) = (-x)\n";
    auto defs = parse_map_file(src);
    REQUIRE(defs.size() == 2);
    CHECK(defs[1].name == "B");
    CHECK(find_map(defs, "A").name == "A");
    CHECK_THROWS_AS(find_map(defs, "missing"), std::out_of_range);
}

TEST_CASE("precedence: caret binds tighter than unary minus") {
    auto d = parse_map_file("map N(x) = (-x^2)");
    Polynomial x = Polynomial::variable(1, 0);
    CHECK(d[0].components[0] == -(x * x));
    auto e = parse_map_file("map N(x) = ((-x)^2)");
    CHECK(e[0].components[0] == x * x);
}

TEST_CASE("errors carry 1-based line and column") {
    auto expect_error = [](const char* src, int line, const char* fragment) {
        try {
            parse_map_file(src);
            FAIL_CHECK("expected ParseError for: " << src);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            CHECK(e.col >= 1);
        }
    };
    expect_error("map F(x,y) = (y", 1, "expected");
    expect_error("map F(x) = (2x)", 1, "expected");                       // no implicit multiplication
    expect_error("map F(x) = (x + w)", 1, "unknown variable");
    expect_error("map F(x) = (x^-1)", 1, "exponent");
    expect_error("map F(x) = (x^9999999999)", 1, "exponent too large");
    expect_error("map F(i) = (i)", 1, "imaginary");
    expect_error("map F(x, x) = (x, x)", 1, "duplicate");
    expect_error("map F(x, y) = (x)", 1, "components");
    expect_error("map F(x) = (x) inverse = (x, x)", 1, "inverse");
    expect_error("map F(x) = (1/0)", 1, "denominator");
    expect_error("map F(x) = (x @ 1)", 1, "unexpected character");
    expect_error("\n\nmap F(x) = (\n  x +\n)", 5, "expected");
    expect_error("", 1, "map");
}

TEST_CASE("print then parse is the identity on definitions") {
    SplitMix64 rng(808);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int t = 0; t < 40; ++t) {
        MapDefinition def;
        def.name = "R";
        def.variables = vars;
        for (int i = 0; i < 3; ++i) def.components.push_back(random_poly(rng, 3, 3, 5));
        std::string text = print_map(def);
        auto back = parse_map_file(text);
        REQUIRE(back.size() == 1);
        CHECK(back[0].components == def.components);
        CHECK(print_map(back[0]) == text);  // idempotent
    }
}

TEST_CASE("round trip of the builtin sources") {
    for (const char* src : {builtin::example_c3_source(), builtin::henon_source()}) {
        auto defs = parse_map_file(src);
        auto again = parse_map_file(print_map(defs[0]));
        CHECK(again[0].components == defs[0].components);
        CHECK(again[0].inverse_components == defs[0].inverse_components);
    }
}

TEST_CASE("zero component prints as 0") {
    MapDefinition def;
    def.name = "Z";
    def.variables = {"x"};
    def.components = {Polynomial::zero(1)};
    CHECK(print_map(def) == "map Z(x) = (0)");
}
