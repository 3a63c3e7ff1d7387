#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ruled/invariants.hpp"

using namespace ruled;

TEST_CASE("chi of line bundles") {
    for (int g = 0; g <= 4; ++g)
        CHECK(chi_line({0, 0}, RuledSurface(g, 2)) == 1 - g);

    // Quadric oracle: on g = 0, e = 0 the surface is a product of lines
    // and chi O(a*C0 + b*f) factors as (a+1)(b+1).
    RuledSurface q(0, 0);
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            CHECK(chi_line({a, b}, q) == Int(a + 1) * (b + 1));
    CHECK(chi_line(fiber_class() + canonical_class(q), q) == 0);
}

TEST_CASE("chi identity behind the zeta_b extensions") {
    // chi O(C0 + (m-2b)f + K) = 0 for every m, b, (g, e).
    for (int m = 0; m <= 1; ++m)
        for (int g = 0; g <= 4; ++g)
            for (int e = 0; e <= 4; ++e) {
                RuledSurface s(g, e);
                for (Int b = 1; b <= 10; ++b) {
                    NumClass d = NumClass{1, m - 2 * b} + canonical_class(s);
                    CHECK(chi_line(d, s) == 0);
                }
            }
}

TEST_CASE("d.(d-K) is always even") {
    for (int g = 0; g <= 4; ++g)
        for (int e = 0; e <= 4; ++e) {
            RuledSurface s(g, e);
            for (int x = -8; x <= 8; ++x)
                for (int y = -8; y <= 8; ++y)
                    CHECK_NOTHROW(chi_line({x, y}, s));
        }
}

TEST_CASE("Serre symmetry chi(D) == chi(K-D)") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> c(-12, 12);
    std::uniform_int_distribution<int> ge(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        RuledSurface s(ge(rng), ge(rng));
        NumClass d{c(rng), c(rng)};
        CHECK(chi_line(d, s) == chi_line(canonical_class(s) - d, s));
    }
}

TEST_CASE("chi of twisted ideal sheaves") {
    RuledSurface s(1, 2);
    CHECK(chi_ideal_twist({3, 1}, 0, s) == chi_line({3, 1}, s));
    CHECK(chi_ideal_twist({0, 0}, 3, RuledSurface(0, 0)) == -2);
    // The wall twist has chi = 0, so chi I_Z = -|Z|.
    for (int m = 0; m <= 1; ++m) {
        RuledSurface t(2, 1);
        Int b = 3, zlen = 7;
        NumClass d = NumClass{1, m - 2 * b} + canonical_class(t);
        CHECK(chi_ideal_twist(d, zlen, t) == -zlen);
    }
}

TEST_CASE("chi of rank-2 Chern data") {
    for (int g = 0; g <= 3; ++g)
        for (Int c2 = 0; c2 <= 8; ++c2)
            CHECK(chi_rank2({2, fiber_class(), c2}, RuledSurface(g, 1)) ==
                  3 - 2 * g - c2);
    CHECK(chi_rank2({2, fiber_class(), 5}, RuledSurface(1, 0)) == -4);
    CHECK(chi_rank2({2, {1, 1}, 10}, RuledSurface(0, 0)) == -5);
    for (int g = 0; g <= 3; ++g)
        CHECK(chi_rank2({2, {0, 0}, 0}, RuledSurface(g, 2)) == 2 * (1 - g));
}

TEST_CASE("moduli dimension") {
    CHECK(moduli_dim({2, fiber_class(), 5}, RuledSurface(0, 0)) == 17);
    CHECK(moduli_dim({2, {1, 1}, 10}, RuledSurface(1, 0)) == 38);
    CHECK(moduli_dim({1, {3, -2}, 0}, RuledSurface(0, 1)) == 0);
}

TEST_CASE("expected dimension rho") {
    RuledSurface s(0, 0);
    ChernData c{2, fiber_class(), 5};
    CHECK(rho(c, 0, s) == moduli_dim(c, s));
    CHECK(rho(c, 1, s) == 14);
    CHECK(rho({2, {1, 1}, 10}, 1, s) == 29);
}

TEST_CASE("rho closed form for c1 = C0 + m*f") {
    RuledSurface s(0, 0);
    CHECK(rho_closed_form_c0mf(1, 1, 10, s) == 29);
    CHECK(rho_closed_form_c0mf(0, 0, 1, s) == 1);
    // k = 4, m = 0: independent of c2 and negative.
    for (int g = 0; g <= 3; ++g)
        for (int e = 0; e <= 3; ++e) {
            RuledSurface t(g, e);
            Int v = rho_closed_form_c0mf(0, 4, 5, t);
            CHECK(v == rho_closed_form_c0mf(0, 4, 500, t));
            CHECK(v == 9 - 9 * g - 3 * e - 16);
            CHECK(v < 0);
        }
}

TEST_CASE("rho closed form agrees with the definition") {
    for (int g = 0; g <= 3; ++g)
        for (int e = 0; e <= 3; ++e) {
            RuledSurface s(g, e);
            for (int m = 0; m <= 1; ++m)
                for (Int k = 0; k <= 6; ++k)
                    for (Int c2 = 1; c2 <= 20; ++c2)
                        CHECK(rho({2, {1, m}, c2}, k, s) ==
                              rho_closed_form_c0mf(m, k, c2, s));
        }
}

TEST_CASE("rho for c1 = f at k = 1") {
    for (int g = 0; g <= 4; ++g) {
        RuledSurface s(g, 0);
        for (Int c2 = 1; c2 <= 50; ++c2)
            CHECK(rho({2, fiber_class(), c2}, 1, s) == 3 * c2 + g - 1);
    }
}

TEST_CASE("ext1 dimensions") {
    RuledSurface s(2, 1);
    Int c2 = 9, b = 4;
    CHECK(ext1_dim(WallExtension{0, b, c2 - b}, s) == c2 - b);
    CHECK(ext1_dim(WallExtension{1, b, Int(0)}, s) == 0);
    CHECK(ext1_dim(FiberExtension{c2}, RuledSurface(0, 0)) == c2);
    // Riemann-Roch gives |Z| + g for the fiber family.
    for (int g = 0; g <= 3; ++g)
        CHECK(ext1_dim(FiberExtension{c2}, RuledSurface(g, 1)) == c2 + g);
}

TEST_CASE("ext1 report records the fiber-family discrepancy") {
    RuledSurface s(2, 0);
    Int c2 = 6;
    Ext1Report wall = ext1_report(WallExtension{0, 2, c2 - 2}, s);
    CHECK_FALSE(wall.discrepancy);
    CHECK(wall.value == c2 - 2);

    Ext1Report fib = ext1_report(FiberExtension{c2}, s);
    CHECK(fib.value == c2 + s.g);
    REQUIRE(fib.stated.has_value());
    CHECK(*fib.stated == c2 - 1 + s.g);
    CHECK(fib.discrepancy);
    CHECK(fib.note.find("discrepancy") != std::string::npos);
}
