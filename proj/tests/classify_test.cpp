#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ruled/classify.hpp"

using namespace ruled;

namespace {

BNQuery c0mf_query(int g, int e, int m, Int c2, Rat alpha, Rat beta, Int k,
                   bool assume_large = false) {
    RuledSurface s(g, e);
    return BNQuery{s, C1Case::C0mf, m, c2, Polarization(alpha, beta, s), k,
                   assume_large};
}

BNQuery fiber_query(int g, int e, Int c2, Rat alpha, Rat beta, Int k) {
    RuledSurface s(g, e);
    return BNQuery{s, C1Case::Fiber, 0, c2, Polarization(alpha, beta, s), k,
                   false};
}

} // namespace

TEST_CASE("threshold B") {
    CHECK(threshold_B(c0mf_query(0, 0, 0, 100, 1, 20, 3)) == 11);
    CHECK(threshold_B(c0mf_query(1, 1, 1, 100, 1, 9, 3)) == Rat(9, 2));
    // Ray invariance.
    CHECK(threshold_B(c0mf_query(0, 0, 0, 100, 7, 140, 3)) == 11);
    CHECK_THROWS_AS(threshold_B(fiber_query(0, 0, 10, 1, 5, 1)),
                    PreconditionError);
}

TEST_CASE("necessary bound for nonempty moduli") {
    CHECK(moduli_nonempty_necessary(c0mf_query(0, 0, 0, 100, 1, 20, 1)));
    CHECK_FALSE(moduli_nonempty_necessary(c0mf_query(0, 0, 0, 100, 1, 200, 1)));
    CHECK(moduli_nonempty_necessary(c0mf_query(0, 0, 0, 100, 1, 199, 1)));
    CHECK(moduli_nonempty_necessary(fiber_query(0, 0, 1, 1, 500, 1)));
}

TEST_CASE("h2 vanishing gate") {
    CHECK(h2_vanishing_check(fiber_query(0, 0, 10, 1, 1, 1)));
    CHECK_FALSE(h2_vanishing_check(c0mf_query(3, 0, 0, 10, 1, 1, 1)));
    // Boundary: c1 - 2K = 0 gives intersection 0, which passes.
    RuledSurface s(0, 0);
    NumClass zero = 2 * canonical_class(s) - 2 * canonical_class(s);
    CHECK(intersect(zero, Polarization(1, 1, s).num_class(), s) >= 0);
}

TEST_CASE("trivial emptiness rule") {
    CHECK_FALSE(trivial_empty(fiber_query(1, 0, 10, 1, 5, 1)));
    CHECK_FALSE(trivial_empty(c0mf_query(1, 2, 0, 10, 1, 5, 1)));
    // A non-ample probe with c1.H = 0.
    RuledSurface s(0, 0);
    CHECK(trivial_empty(section_class(), section_class(), s));
    CHECK_THROWS_AS(trivial_empty(fiber_query(0, 0, 10, 1, 5, 0)),
                    PreconditionError);
}

TEST_CASE("classify: c1 = C0 + m*f") {
    BNQuery q = c0mf_query(0, 0, 0, 100, 1, 20, 3);
    BNVerdict v = classify(q);
    CHECK(v.status == Status::NonEmpty);
    CHECK(v.certificate == "Cor-4.3");
    REQUIRE(v.B.has_value());
    CHECK(*v.B == 11);
    CHECK(v.assumptions ==
          std::vector<std::string>{"LargeC2Assumed", "ModuliNonemptyAssumed"});

    q.k = 11;
    v = classify(q);
    CHECK(v.status == Status::Empty);
    CHECK(v.certificate == "Thm-4.5");

    // beta at/above the necessary bound: moduli certified empty.
    v = classify(c0mf_query(0, 0, 0, 100, 1, 200, 3));
    CHECK(v.status == Status::ModuliEmpty);
    CHECK(v.certificate == "Thm-4.1-necessary");

    // k = 0 is the whole moduli space.
    v = classify(c0mf_query(0, 0, 0, 100, 1, 20, 0));
    CHECK(v.status == Status::NonEmpty);
    CHECK(v.certificate == "W0-filtration");

    // Genus-1 relaxation of the emptiness threshold.
    v = classify(c0mf_query(1, 0, 1, 100, 1, 7, 5));
    CHECK(v.status == Status::Empty);
    CHECK(v.certificate == "Rem-4.6");

    // The gap the theorems leave open.
    v = classify(c0mf_query(0, 0, 0, 100, 1, 6, 4));
    CHECK(v.status == Status::Unknown);
    CHECK(v.note.find("Thm-4.5") != std::string::npos);
}

TEST_CASE("classify: c1 = f") {
    BNVerdict v = classify(fiber_query(0, 0, 50, 1, 9, 3));
    CHECK(v.status == Status::Empty);
    CHECK(v.certificate == "Thm-4.10");

    v = classify(fiber_query(0, 0, 50, 1, 9, 1));
    CHECK(v.status == Status::NonEmpty);
    CHECK(v.certificate == "Thm-4.8");
    CHECK(v.rho == 149);
    CHECK(v.note.find("149") != std::string::npos);

    v = classify(fiber_query(2, 1, 50, 1, 9, 2));
    CHECK(v.status == Status::NonEmpty);
    CHECK(v.certificate == "Prop-7.7-external");

    v = classify(fiber_query(2, 1, 50, 1, 9, 0));
    CHECK(v.status == Status::NonEmpty);
}

TEST_CASE("assume_large_c2 clears only the c2 flag") {
    BNVerdict v = classify(c0mf_query(0, 0, 0, 100, 1, 20, 3, true));
    CHECK(v.status == Status::NonEmpty);
    CHECK(v.assumptions == std::vector<std::string>{"ModuliNonemptyAssumed"});
}

TEST_CASE("dichotomy scan") {
    auto rows = dichotomy_scan(c0mf_query(0, 0, 0, 100, 1, 20, 1));
    REQUIRE(rows.size() == 13);
    for (const auto& r : rows) {
        if (r.k <= 10) CHECK(r.verdict.status == Status::NonEmpty);
        else CHECK(r.verdict.status == Status::Empty);
    }

    // Genus-1 relaxed regime; threshold B = 11/2.
    auto rows2 = dichotomy_scan(c0mf_query(1, 0, 1, 100, 1, 10, 1));
    CHECK(threshold_B(c0mf_query(1, 0, 1, 100, 1, 10, 1)) == Rat(11, 2));
    for (const auto& r : rows2) {
        if (r.k <= 5) CHECK(r.verdict.status == Status::NonEmpty);
        else CHECK(r.verdict.status == Status::Empty);
    }

    // Determinism.
    auto again = dichotomy_scan(c0mf_query(0, 0, 0, 100, 1, 20, 1));
    REQUIRE(again.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        CHECK(again[i].verdict == rows[i].verdict);

    CHECK_THROWS_AS(dichotomy_scan(c0mf_query(0, 0, 0, 100, 1, 6, 1)),
                    PreconditionError);
    CHECK_THROWS_AS(dichotomy_scan(c0mf_query(0, 0, 0, 4, 1, 20, 1)),
                    PreconditionError);
}

TEST_CASE("filtration monotonicity and scale invariance") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> num(1, 40);
    std::uniform_int_distribution<int> kk(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        int g = small(rng), e = small(rng);
        RuledSurface s(g, e);
        Int c2 = 1 + num(rng);
        Rat alpha(num(rng), num(rng));
        Rat beta = alpha * e + Rat(num(rng), num(rng));
        bool fiber = small(rng) == 0;
        int m = small(rng) % 2;
        Int k = kk(rng);
        BNQuery q{s, fiber ? C1Case::Fiber : C1Case::C0mf, m, c2,
                  Polarization(alpha, beta, s), k, false};
        BNVerdict v = classify(q);

        // Scale invariance of the whole verdict.
        Rat t(num(rng), num(rng));
        BNQuery qs{s, q.c1_case, m, c2, Polarization(t * alpha, t * beta, s),
                   k, false};
        CHECK(classify(qs) == v);

        // Filtration: NonEmpty at k forces NonEmpty below.
        if (v.status == Status::NonEmpty) {
            for (Int kp = 1; kp < k; ++kp) {
                BNQuery ql = q;
                ql.k = kp;
                CHECK(classify(ql).status == Status::NonEmpty);
            }
        }
    }
}
