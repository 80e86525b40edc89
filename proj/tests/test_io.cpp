#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <sstream>

#include "polyjac/io.hpp"

using namespace polyjac;

namespace {

std::string to_text(const PolynomialSystem& sys) {
    std::ostringstream os;
    write_system(sys, os);
    return os.str();
}

PolynomialSystem from_text(const std::string& text) {
    std::istringstream is(text);
    return read_system(is, "<test>");
}

}  // namespace

TEST_CASE("round trip preserves systems bit-exactly") {
    int seed = 9000;
    for (auto [n, m, k, d] : {std::array{1, 1, 1, 1}, std::array{5, 3, 2, 9},
                              std::array{32, 22, 9, 2}, std::array{32, 48, 16, 10}}) {
        const PolynomialSystem sys = random_system(n, m, k, d, seed++);
        const PolynomialSystem back = from_text(to_text(sys));
        CHECK(back.n == sys.n);
        CHECK(back.m == sys.m);
        CHECK(back.k == sys.k);
        CHECK(back.d == sys.d);
        REQUIRE(back.terms.size() == sys.terms.size());
        for (std::size_t s = 0; s < sys.terms.size(); ++s) {
            CHECK(bit_equal(back.terms[s].coeff, sys.terms[s].coeff));
            CHECK(back.terms[s].support == sys.terms[s].support);
        }
    }
}

TEST_CASE("writing is deterministic") {
    const PolynomialSystem sys = random_system(6, 4, 3, 7, 42);
    CHECK(to_text(sys) == to_text(sys));
}

TEST_CASE("positions are 1-based on disk") {
    PolynomialSystem sys{2, 1, 1, 1, {}};
    sys.terms = {{{1.0, 0.0}, {{0}, {1}}}, {{1.0, 0.0}, {{1}, {1}}}};
    const std::string text = to_text(sys);
    CHECK(text == "2 1 1 1\n1 0 1 1\n1 0 2 1\n");
}

TEST_CASE("comments and blank lines are ignored") {
    const PolynomialSystem sys = from_text(
        "# a system\n"
        "\n"
        "1 1 1 2   # header\n"
        "  0.5 -0.25 1 2\n"
        "# trailing comment\n");
    CHECK(sys.n == 1);
    CHECK(sys.terms[0].coeff == Complex{0.5, -0.25});
    CHECK(sys.terms[0].support.positions[0] == 0);
    CHECK(sys.terms[0].support.exponents[0] == 2);
}

TEST_CASE("malformed input is rejected with its line number") {
    // exponent 0
    CHECK_THROWS_WITH_AS(from_text("1 1 1 2\n1 0 1 0\n"),
                         doctest::Contains("exponent out of range"), FormatError);
    // exponent above d
    CHECK_THROWS_WITH_AS(from_text("1 1 1 2\n1 0 1 3\n"),
                         doctest::Contains("exponent out of range"), FormatError);
    // duplicate variable in one monomial
    CHECK_THROWS_WITH_AS(from_text("2 1 2 2\n1 0 1 1 1 2\n1 0 1 1 2 1\n"),
                         doctest::Contains("strictly increasing"), FormatError);
    // decreasing positions
    CHECK_THROWS_WITH_AS(from_text("2 1 2 2\n1 0 2 1 1 2\n1 0 1 1 2 1\n"),
                         doctest::Contains("strictly increasing"), FormatError);
    // zero coefficient
    CHECK_THROWS_WITH_AS(from_text("1 1 1 2\n0 0 1 1\n"), doctest::Contains("zero coefficient"),
                         FormatError);
    // position out of range
    CHECK_THROWS_WITH_AS(from_text("2 1 1 2\n1 0 3 1\n1 0 1 1\n"),
                         doctest::Contains("position out of range"), FormatError);
    // short line
    CHECK_THROWS_WITH_AS(from_text("2 1 2 2\n1 0 1 1\n1 0 1 1 2 1\n"),
                         doctest::Contains("pos exp"), FormatError);
    // missing monomials
    CHECK_THROWS_WITH_AS(from_text("2 1 1 2\n1 0 1 1\n"), doctest::Contains("expected 2"),
                         FormatError);
    // trailing data
    CHECK_THROWS_WITH_AS(from_text("1 1 1 2\n1 0 1 1\n1 0 1 1\n"), doctest::Contains("trailing"),
                         FormatError);
    // bad header
    CHECK_THROWS_WITH_AS(from_text("1 1 1\n"), doctest::Contains("header"), FormatError);
    CHECK_THROWS_WITH_AS(from_text("2 1 3 2\n"), doctest::Contains("k <= n"), FormatError);
    CHECK_THROWS_WITH_AS(from_text(""), doctest::Contains("missing header"), FormatError);

    // line numbers point at the offender
    try {
        from_text("# c\n1 1 1 2\n1 0 1 0\n");
        FAIL("expected a FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("<test>:3") != std::string::npos);
    }
}

TEST_CASE("missing file reports an error") {
    CHECK_THROWS_AS(read_system("/nonexistent/path/sys.txt"), FormatError);
}

TEST_CASE("extreme doubles survive the round trip") {
    PolynomialSystem sys{1, 1, 1, 1, {}};
    sys.terms = {{{1.0 / 3.0, -1e-300}, {{0}, {1}}}};
    const PolynomialSystem back = from_text(to_text(sys));
    CHECK(bit_equal(back.terms[0].coeff, sys.terms[0].coeff));
}
