#include <doctest.h>

#include <limits>

#include "schurkit/characters.hpp"
#include "schurkit/error.hpp"
#include "support/oracles.hpp"

using namespace schurkit;

namespace {

SymChar chi(int n, std::map<Partition, Coeff> c) { return SymChar::from_coeffs(n, std::move(c)); }

Coeff binomial(int a, int b) {
    Coeff out = 1;
    for (int i = 1; i <= b; ++i)
        out = out * (a - b + i) / i;
    return out;
}

} // namespace

TEST_CASE("Kostka numbers agree with tableau counts") {
    CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(kostka(Partition{1, 1, 1}, Partition{2, 1}) == 0);
    for (int r = 0; r <= 7; ++r)
        for (const auto& lambda : partitions_of(r))
            for (const auto& mu : partitions_of(r))
                REQUIRE(kostka(lambda, mu) == oracle::count_ssyt(lambda, mu));
}

TEST_CASE("power characters") {
    CHECK(power_char(PowerKind::Complete, 2, 2) == chi(2, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));
    CHECK(power_char(PowerKind::Truncated, 3, 3, 2) == chi(3, {{Partition{1, 1, 1}, 1}}));
    CHECK(power_char(PowerKind::Exterior, 2, 3) == chi(3, {{Partition{1, 1}, 1}}));
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 6; ++r) {
            CHECK(dimension(power_char(PowerKind::Complete, r, n)) == binomial(n + r - 1, r));
            CHECK(dimension(power_char(PowerKind::Exterior, r, n)) == (r <= n ? binomial(n, r) : 0));
        }
}

TEST_CASE("multiplication agrees with polynomial products") {
    const auto h1 = power_char(PowerKind::Complete, 1, 3);
    CHECK(multiply(h1, h1) == chi(3, {{Partition{2}, 1}, {Partition{1, 1}, 2}}));
    CHECK(multiply(h1, SymChar(3, 0)).empty());
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : partitions_up_to(4, n))
            for (const auto& b : partitions_up_to(3, n)) {
                const auto sa = schur_char(a, n);
                const auto sb = schur_char(b, n);
                REQUIRE(multiply(sa, sb).coeffs() == oracle::dominant(oracle::times(oracle::expand(sa), oracle::expand(sb))));
            }
}

TEST_CASE("Schur decomposition") {
    const int n = 3;
    const auto h = [&](int r) { return power_char(PowerKind::Complete, r, n); };
    const auto e = [&](int r) { return power_char(PowerKind::Exterior, r, n); };
    CHECK(decompose_schur(multiply(e(2), h(1))) == std::map<Partition, Coeff>{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}});
    CHECK(decompose_schur(multiply(h(2), h(1))) == std::map<Partition, Coeff>{{Partition{3}, 1}, {Partition{2, 1}, 1}});
    CHECK(decompose_schur(e(3)) == std::map<Partition, Coeff>{{Partition{1, 1, 1}, 1}});
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            std::map<Partition, Coeff> pieri;
            for (int i = 0; i <= std::min(a, b); ++i)
                pieri[oracle::from_vector({a + b - i, i})] = 1;
            REQUIRE(decompose_schur(multiply(power_char(PowerKind::Complete, a, 2), power_char(PowerKind::Complete, b, 2))) == pieri);
        }
    for (const auto& lambda : partitions_up_to(8, 3))
        REQUIRE(decompose_schur(schur_char(lambda, 3)) == std::map<Partition, Coeff>{{lambda, 1}});
}

TEST_CASE("deficiency and twists") {
    CHECK_FALSE(is_deficient(schur_char(Partition{3}, 3), 1, 1));
    CHECK(is_deficient(schur_char(Partition{2, 2, 2}, 3), 2, 1));
    CHECK(frobenius_twist(chi(2, {{Partition{1}, 1}}), 2) == chi(2, {{Partition{2}, 1}}));
    CHECK(frobenius_twist(SymChar(2, 0), 3).empty());
}

TEST_CASE("orbit sizes and dimensions") {
    CHECK(orbit_size(Partition{2, 1}, 3) == 6);
    CHECK(orbit_size(Partition{1, 1}, 3) == 3);
    CHECK(orbit_size(Partition{}, 4) == 1);
    CHECK(dimension(schur_char(Partition{2, 1}, 3)) == 8);
}

TEST_CASE("character expressions") {
    CHECK(decompose_schur(parse_char_expr("h2*h1", 3)) == std::map<Partition, Coeff>{{Partition{3}, 1}, {Partition{2, 1}, 1}});
    CHECK(parse_char_expr("sbar3@2", 3) == power_char(PowerKind::Truncated, 3, 3, 2));
    CHECK(parse_char_expr("s[2,1]", 3) == schur_char(Partition{2, 1}, 3));
    CHECK(parse_char_expr("e2 * e1", 3) == multiply(power_char(PowerKind::Exterior, 2, 3), power_char(PowerKind::Exterior, 1, 3)));
    for (const char* bad : {"", "h", "x2", "h2+h1", "sbar3", "s[1,2]"}) {
        try {
            parse_char_expr(bad, 3);
            FAIL("accepted ", bad);
        } catch (const Error& err) {
            CHECK((err.code() == Errc::ParseError || err.code() == Errc::InputNotWeaklyDecreasing));
        }
    }
}

TEST_CASE("validation and overflow") {
    CHECK_THROWS_AS(chi(2, {{Partition{1, 1, 1}, 1}}), Error);
    CHECK_THROWS_AS(chi(3, {{Partition{1}, 1}, {Partition{2}, 1}}), Error);
    try {
        checked_mul(std::numeric_limits<Coeff>::max() / 2, 3);
        FAIL("no overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Overflow);
    }
    CHECK(checked_add(2, 3) == 5);
}
