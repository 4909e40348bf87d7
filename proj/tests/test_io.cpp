#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "ioma/io.hpp"
#include "ioma/search.hpp"

using namespace ioma;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("example files parse to the built-in fixtures") {
    CHECK(parse_alg(slurp(std::string(IOMA_EXAMPLES_DIR) + "/e5.alg")) == make_e5());
    CHECK(parse_alg(slurp(std::string(IOMA_EXAMPLES_DIR) + "/b2.alg")) == make_b2());
}

TEST_CASE("serialize then parse is the identity") {
    for (const FiniteAlgebra& a : {make_e5(), make_b2()}) {
        CHECK(parse_alg(serialize_alg(a)) == a);
        // canonical text is a fixpoint of the round trip
        CHECK(serialize_alg(parse_alg(serialize_alg(a))) == serialize_alg(a));
    }
    enumerate_models(4, [&](const FiniteAlgebra& a) {
        CHECK(parse_alg(serialize_alg(a)) == a);
    });
}

TEST_CASE("comments, blank lines and missing zero are accepted") {
    const FiniteAlgebra a = parse_alg(
        "# header comment\n"
        "elements: x y   # trailing comment\n"
        "\n"
        "one: y\n"
        "arrow:\n"
        "y y\n"
        "x y\n");
    CHECK(a.size() == 2);
    CHECK(!a.has_zero());
    CHECK(a.one() == 1);
}

TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& text) -> std::pair<int, int> {
        try {
            parse_alg(text);
        } catch (const ParseError& e) {
            return {e.line, e.column};
        }
        FAIL("expected a parse error");
        return {0, 0};
    };

    CHECK(pos("one: x\n") == std::pair(1, 1));                       // wrong header
    CHECK(pos("elements:\n") == std::pair(1, 1));                    // no names
    CHECK(pos("elements: x y\none: x y\n") == std::pair(2, 1));      // two ones
    CHECK(pos("elements: x y\none: z\n") == std::pair(2, 6));        // unknown name
    CHECK(pos("elements: x y\none: y\nzero: x\narrow:\ny y\nx\n") ==
          std::pair(6, 1));                                          // short row
    CHECK(pos("elements: x y\none: y\narrow:\ny y\n") == std::pair(5, 1));  // few rows
    CHECK(pos("elements: x y\none: y\narrow:\ny y\nx y\nextra\n") ==
          std::pair(6, 1));                                          // trailing junk
    CHECK(pos("elements: x y\none: y\narrow:\ny q\nx y\n") == std::pair(4, 3));
}

TEST_CASE("structural problems surface as parse errors") {
    CHECK_THROWS_AS(parse_alg("elements: x x\none: x\narrow:\nx x\nx x\n"), ParseError);
}

TEST_CASE("state parsing") {
    const FiniteAlgebra a = make_e5();
    const RationalState s = parse_state("0=0, a=1/2,b = 1/2, c=1/2, 1=1", a);
    CHECK(s.value[0] == Rational(0));
    CHECK(s.value[1] == Rational(1, 2));
    CHECK(s.value[4] == Rational(1));

    CHECK_THROWS_AS(parse_state("0=0, a=1, b=1, c=1", a), ParseError);  // missing 1
    CHECK_THROWS_AS(parse_state("0=0, 0=1, a=1, b=1, c=1, 1=1", a), ParseError);
    CHECK_THROWS_AS(parse_state("q=1", a), ParseError);        // unknown name
    CHECK_THROWS_AS(parse_state("0=1/x", a), ParseError);      // malformed
    CHECK_THROWS_AS(parse_state("0=1/0", a), ParseError);      // zero denominator
    CHECK_THROWS_AS(parse_state("0=3/2", a), ParseError);      // out of range
    CHECK_THROWS_AS(parse_state("0=-1/2", a), ParseError);     // out of range
    CHECK_THROWS_AS(parse_state("0", a), ParseError);          // no '='
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(Rational(1, 2) != Rational(1, 3));
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(2, 1).str() == "2");
}
