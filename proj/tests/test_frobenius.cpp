#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h2xr/errors.hpp"
#include "h2xr/frobenius.hpp"
#include "h2xr/hyperbolic_plane.hpp"

using namespace h2xr;

namespace {
TranslationClass tc(const char* s) { return parse_translation_class(s); }
}

TEST_CASE("rational arithmetic and wrapping") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 2) + Rational(1, 2)).is_integer());
    CHECK(Rational(3, 2).wrapped() == Rational(1, 2));
    CHECK(Rational(-1, 2).wrapped() == Rational(1, 2));
    CHECK(Rational(5, 6).wrapped() == Rational(-1, 6));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(Rational(1, 3).str() == "1/3");
}

TEST_CASE("enumerate_simply reproduces the worked cases") {
    // (2,6,4): the four classes
    auto s64 = dedupe_equivariant(enumerate_simply(6, 4));
    CHECK(s64 == std::set<TranslationClass>{tc("0,0,0"), tc("0,1/2,1/2"), tc("1/2,0,1/2"),
                                            tc("1/2,1/2,0")});

    // both periods odd: only the trivial class
    CHECK(enumerate_simply(7, 3) == std::set<TranslationClass>{tc("0,0,0")});

    // gcd 3: the m/3 family
    CHECK(enumerate_simply(9, 3) ==
          std::set<TranslationClass>{tc("0,0,0"), tc("0,1/3,1/3"), tc("0,-1/3,-1/3")});

    // p1 even: the (1/2,1/2,0) class appears
    CHECK(brute_force_congruences(8, 3).count(tc("1/2,1/2,0")) == 1);
}

TEST_CASE("completeness against the brute-force oracle") {
    for (int p1 = 3; p1 <= 40; ++p1)
        for (int p2 = 3; p2 <= 40; ++p2) {
            if (!is_hyperbolic_signature(p1, p2)) continue;
            CHECK(enumerate_simply(p1, p2) == brute_force_congruences(p1, p2));
        }
}

TEST_CASE("soundness: every emitted class satisfies the congruences exactly") {
    for (int p1 = 3; p1 <= 24; ++p1)
        for (int p2 = 3; p2 <= 24; ++p2) {
            if (!is_hyperbolic_signature(p1, p2)) continue;
            for (const auto& c : enumerate_simply(p1, p2)) CHECK(c.satisfies_congruences(p1, p2));
        }
}

TEST_CASE("classes beyond the two-period shorthand exist and are enumerated") {
    // (2,12,3) admits (1/2,1/6,-1/3): all congruences hold exactly
    TranslationClass extra = tc("1/2,1/6,-1/3");
    CHECK(extra.satisfies_congruences(12, 3));
    CHECK(enumerate_simply(12, 3).count(extra) == 1);
    CHECK(enumerate_simply(8, 4).count(tc("1/2,1/4,-1/4")) == 1);
}

TEST_CASE("enumerate_multiply per site") {
    auto b204 = enumerate_multiply(20, 4, Site::B);
    CHECK(dedupe_equivariant(b204) == std::set<TranslationClass>{tc("0,0,0"), tc("1/2,0,1/2")});

    auto a55 = enumerate_multiply(5, 5, Site::A);
    CHECK(a55 == std::set<TranslationClass>{tc("0,0,0"), tc("0,1/5,1/5"), tc("0,-1/5,-1/5"),
                                            tc("0,2/5,2/5"), tc("0,-2/5,-2/5")});

    // p1 odd: no half-turn lift at C
    CHECK(enumerate_multiply(7, 5, Site::C) == std::set<TranslationClass>{tc("0,0,0")});

    CHECK_THROWS_AS(enumerate_multiply(6, 4, Site::Interior), std::invalid_argument);
}

TEST_CASE("subset and parity laws") {
    for (int p1 = 3; p1 <= 16; ++p1)
        for (int p2 = 3; p2 <= 16; ++p2) {
            if (!is_hyperbolic_signature(p1, p2)) continue;
            auto simply = enumerate_simply(p1, p2);
            for (Site s : {Site::A, Site::B, Site::C})
                for (const auto& c : enumerate_multiply(p1, p2, s)) CHECK(simply.count(c) == 1);
            CHECK(simply.count(tc("1/2,0,1/2")) == (p2 % 2 == 0 ? 1 : 0));
            CHECK(simply.count(tc("1/2,1/2,0")) == (p1 % 2 == 0 ? 1 : 0));
        }
}

TEST_CASE("equivariant deduplication") {
    std::set<TranslationClass> in{tc("1/2,0,1/2"), tc("1/2,0,-1/2")};
    // -1/2 wraps to 1/2, so both name the same class already
    CHECK(dedupe_equivariant(in).size() == 1);

    std::set<TranslationClass> pm{tc("0,1/3,1/3"), tc("0,-1/3,-1/3")};
    auto out = dedupe_equivariant(pm);
    CHECK(out.size() == 1);
    CHECK(out.count(tc("0,1/3,1/3")) == 1);

    CHECK(dedupe_equivariant(enumerate_simply(6, 4)).size() == 4);
}

TEST_CASE("kernel site stabilizer orders") {
    CHECK(KernelSite{Site::Interior}.stabilizer_order(6, 4) == 1);
    CHECK(KernelSite{Site::A}.stabilizer_order(6, 4) == 2);
    CHECK(KernelSite{Site::B}.stabilizer_order(6, 4) == 6);
    CHECK(KernelSite{Site::C}.stabilizer_order(6, 4) == 4);
}

TEST_CASE("class parsing round trip") {
    for (const char* s : {"0,0,0", "0,1/2,1/2", "1/2,1/6,-1/3", "0,2/5,2/5"}) {
        TranslationClass c = tc(s);
        CHECK(parse_translation_class(c.str()) == c);
    }
    CHECK_THROWS(parse_translation_class("1/2"));
}
