#include "zmds/errors.hpp"
#include "zmds/zeros.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace zmds;

namespace {

ZeroList iota_zeros(std::size_t n) {
    std::vector<double> v;
    for (std::size_t k = 1; k <= n; ++k) v.push_back(static_cast<double>(k));
    return ZeroList(std::move(v));
}

ZeroList random_zeros(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> gap(0.01, 3.0);
    std::vector<double> v;
    double t = 10.0;
    for (std::size_t k = 0; k < n; ++k) {
        t += gap(rng);
        v.push_back(t);
    }
    return ZeroList(std::move(v));
}

}  // namespace

TEST_CASE("parse_zeros reads values in file order") {
    const auto z = parse_zeros("14.134725142\n21.022039639\n");
    REQUIRE(z.size() == 2);
    CHECK(z[0] == 14.134725142);
    CHECK(z[1] == 21.022039639);
}

TEST_CASE("parse_zeros skips comments and blank lines, accepts CRLF") {
    const auto z = parse_zeros("# header\n\n5.0\n");
    REQUIRE(z.size() == 1);
    CHECK(z[0] == 5.0);
    CHECK(z.line_of(0) == 3);

    const auto crlf = parse_zeros("# c\r\n1.5\r\n2.5\r\n");
    REQUIRE(crlf.size() == 2);
    CHECK(crlf[1] == 2.5);
}

TEST_CASE("parse_zeros error paths") {
    SUBCASE("non-increasing pair") {
        try {
            parse_zeros("3.0\n2.0\n");
            FAIL("expected MonotonicityError");
        } catch (const MonotonicityError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("equal values are not increasing") {
        CHECK_THROWS_AS(parse_zeros("3.0\n3.0\n"), MonotonicityError);
    }
    SUBCASE("non-numeric token") {
        try {
            parse_zeros("1.0\nabc\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("trailing garbage") { CHECK_THROWS_AS(parse_zeros("1.0x\n"), ParseError); }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_zeros(""), EmptyInputError);
        CHECK_THROWS_AS(parse_zeros("# only a comment\n\n"), EmptyInputError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), ParseError); }
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto z = random_zeros(rng, 1 + trial * 13);
        std::stringstream s;
        serialize_zeros(z, s);
        const auto back = parse_zeros(s);
        REQUIRE(back.size() == z.size());
        for (std::size_t k = 0; k < z.size(); ++k) CHECK(back[k] == z[k]);
    }
}

TEST_CASE("window_disjoint") {
    SUBCASE("10,000 zeros with m = 10 give N = 1,000") {
        const auto w = window_disjoint(iota_zeros(10000), 10);
        CHECK(w.rows() == 1000);
        CHECK(w.m() == 10);
        CHECK(w.approach() == Approach::A1);
    }
    SUBCASE("20 zeros, m = 10: row 2 is zeros 11..20") {
        const auto z = iota_zeros(20);
        const auto w = window_disjoint(z, 10);
        REQUIRE(w.rows() == 2);
        for (std::size_t k = 0; k < 10; ++k) CHECK(w.row(1)[k] == z[10 + k]);
    }
    SUBCASE("trailing partial window is dropped") {
        CHECK(window_disjoint(iota_zeros(25), 10).rows() == 2);
    }
    SUBCASE("limit caps N") { CHECK(window_disjoint(iota_zeros(100), 10, 3).rows() == 3); }
    SUBCASE("insufficient data or m = 0") {
        CHECK_THROWS_AS(window_disjoint(iota_zeros(9), 10), InvalidWindowError);
        CHECK_THROWS_AS(window_disjoint(iota_zeros(9), 0), InvalidWindowError);
    }
}

TEST_CASE("window_sliding") {
    SUBCASE("20 zeros, m = 10 give 11 rows") {
        CHECK(window_sliding(iota_zeros(20), 10).rows() == 11);
    }
    SUBCASE("degenerate window is the whole list") {
        const auto z = iota_zeros(10);
        const auto w = window_sliding(z, 10);
        REQUIRE(w.rows() == 1);
        for (std::size_t k = 0; k < 10; ++k) CHECK(w.row(0)[k] == z[k]);
    }
    SUBCASE("10,000 zeros, m = 10, limit 1,000 start at indices 1..1000") {
        const auto z = iota_zeros(10000);
        const auto w = window_sliding(z, 10, 1000);
        REQUIRE(w.rows() == 1000);
        // brute-force enumeration of the expected start indices
        for (std::size_t i = 0; i < 1000; ++i) CHECK(w.row(i)[0] == static_cast<double>(i + 1));
    }
    SUBCASE("errors match window_disjoint") {
        CHECK_THROWS_AS(window_sliding(iota_zeros(9), 10), InvalidWindowError);
        CHECK_THROWS_AS(window_sliding(iota_zeros(9), 0), InvalidWindowError);
    }
}

TEST_CASE("windowing invariants on random zero lists") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> len(1, 300);
    for (int trial = 0; trial < 200; ++trial) {
        const auto z = random_zeros(rng, len(rng));
        std::uniform_int_distribution<std::size_t> pick_m(1, z.size());
        const std::size_t m = pick_m(rng);

        // A1 rows concatenated reproduce a prefix of the list.
        const auto a1 = window_disjoint(z, m);
        CHECK(a1.rows() * m <= z.size());
        for (std::size_t k = 0; k < a1.data().size(); ++k) REQUIRE(a1.data()[k] == z[k]);

        // A2 neighbours share m - 1 values shifted by one.
        const auto a2 = window_sliding(z, m);
        CHECK(a2.rows() + m - 1 <= z.size());
        for (std::size_t i = 0; i + 1 < a2.rows(); ++i)
            for (std::size_t k = 1; k < m; ++k) REQUIRE(a2.row(i)[k] == a2.row(i + 1)[k - 1]);

        for (std::size_t i = 0; i < a2.rows(); ++i)
            for (std::size_t k = 1; k < m; ++k) REQUIRE(a2.row(i)[k - 1] < a2.row(i)[k]);
    }
}
