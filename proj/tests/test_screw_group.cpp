#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "h2xr/screw_group.hpp"
#include "oracles.hpp"

using namespace h2xr;
using h2xr::testing::kPi;
using h2xr::testing::Rng;

TEST_CASE("composition basics") {
    GroupContext ctx = GroupContext::create(6, 4, parse_translation_class("0,1/2,1/2"), 0.8);
    ScrewElement id;
    ScrewElement x = compose(ctx.g1_hat, id);
    CHECK(max_abs_diff(x.linear.m, ctx.g1_hat.linear.m) < 1e-15);
    CHECK(x.tau == ctx.g1_hat.tau);

    // the half-turn squares to a pure fibre translation by 2 tau_0
    ScrewElement sq = compose(ctx.g0_hat, ctx.g0_hat);
    CHECK(max_abs_diff(sq.linear.m, Mat3::identity()) < 1e-12);
    CHECK(sq.tau == doctest::Approx(2 * ctx.g0_hat.tau));
}

TEST_CASE("applying g0 then g1 gives the rotation about C") {
    for (auto [p1, p2] : {std::pair{6, 4}, {7, 3}, {5, 5}, {12, 6}}) {
        double xi = 0.9;
        auto classes = enumerate_simply(p1, p2);
        GroupContext ctx = GroupContext::create(p1, p2, *classes.begin(), xi);
        ScrewElement w = compose(ctx.g0_hat, ctx.g1_hat);
        CHECK(max_abs_diff(w.linear.m, rotation_about(ctx.triangle.C, 2 * kPi / p2).m) < 1e-9);
        CHECK(w.tau == doctest::Approx(ctx.g0_hat.tau + ctx.g1_hat.tau).epsilon(1e-12));

        // the swapped order is the conjugate rotation about the half-turn
        // image of C, with the same translation part
        ScrewElement v = compose(ctx.g1_hat, ctx.g0_hat);
        H2Point Cimg = ctx.g0_hat.linear.apply(ctx.triangle.C);
        CHECK(max_abs_diff(v.linear.m, rotation_about(Cimg, 2 * kPi / p2).m) < 1e-9);
        CHECK(v.tau == doctest::Approx(w.tau));
    }
}

TEST_CASE("right action homomorphism") {
    GroupContext ctx = GroupContext::create(6, 4, parse_translation_class("1/2,1/2,0"), 1.1);
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const ScrewElement& a = ctx.generator((int)(rng.next() % 3));
        const ScrewElement& b = ctx.generator((int)(rng.next() % 3));
        H2xRPoint P{H2Point::polar(rng.uniform(0, 1.8), rng.uniform(-kPi, kPi)),
                    rng.uniform(-1, 1)};
        H2xRPoint lhs = compose(a, b).apply(P);
        H2xRPoint rhs = b.apply(a.apply(P));
        auto lp = lhs.projective(), rp = rhs.projective();
        for (int i = 0; i < 4; ++i) CHECK(std::abs(lp[i] - rp[i]) < 1e-10);
    }
}

TEST_CASE("lattice closure of generator powers") {
    GroupContext ctx = GroupContext::create(9, 3, parse_translation_class("0,1/3,1/3"), 0.7);
    ScrewElement acc;
    for (int k = 0; k < 9; ++k) acc = compose(acc, ctx.g1_hat);
    CHECK(max_abs_diff(acc.linear.m, Mat3::identity()) < 1e-9);
    // 9 * (1/3) * xi = 3 xi, an integer lattice multiple
    CHECK(acc.tau == doctest::Approx(3 * 0.7).epsilon(1e-12));
}

TEST_CASE("group relations hold modulo the lattice") {
    for (auto [p1, p2] : {std::pair{6, 4}, {8, 3}, {5, 5}}) {
        for (const auto& cls : enumerate_simply(p1, p2)) {
            GroupContext ctx = GroupContext::create(p1, p2, cls, 0.83);
            auto check_power = [&](const ScrewElement& g, int order) {
                ScrewElement acc;
                for (int k = 0; k < order; ++k) acc = compose(acc, g);
                CHECK(max_abs_diff(acc.linear.m, Mat3::identity()) < 1e-9);
                double cycles = acc.tau / 0.83;
                CHECK(std::abs(cycles - std::round(cycles)) < 1e-9);
            };
            check_power(ctx.g0_hat, 2);
            check_power(ctx.g1_hat, p1);
            check_power(ctx.g2_hat, p2);
            check_power(compose(ctx.g0_hat, ctx.g1_hat), p2);
        }
    }
}

TEST_CASE("closed-form images agree with the matrix action") {
    Rng rng(17);
    double worst = 0.0;
    int trials = 0;
    for (auto [p1, p2] : {std::pair{6, 4}, {7, 3}, {5, 5}, {20, 4}, {9, 3}, {62, 6}, {8, 5}}) {
        auto classes = enumerate_simply(p1, p2);
        for (int t = 0; t < 150; ++t, ++trials) {
            double r = rng.uniform(0.05, 2.0), alpha = rng.uniform(-kPi, kPi);
            double xi = rng.uniform(0.2, 2.0);
            auto it = classes.begin();
            std::advance(it, rng.next() % classes.size());
            GroupContext ctx = GroupContext::create(p1, p2, *it, xi);
            H2xRPoint K{H2Point::polar(r, alpha), 0.0};
            const Rational rs[3] = {it->r0, it->r1, it->r2};
            for (int i = 0; i < 3; ++i) {
                auto closed = appendix_image(r, alpha, i, p1, p2, rs[i], xi);
                auto matrix = ctx.generator(i).apply(K).projective();
                for (int c = 1; c < 4; ++c)
                    worst = std::max(worst, std::abs(closed[c] - matrix[c]));
            }
        }
    }
    CHECK(trials >= 1000);
    CHECK(worst < 1e-9);
    CHECK(appendix_csgn_near_zero_count() == 0);
}

TEST_CASE("closed-form image fixes the half-turn centre") {
    TriangleGeometry tri = triangle_vertices(6, 4);
    double r = tri.A.radius(), alpha = tri.A.bearing();
    auto img = appendix_image(r, alpha, 0, 6, 4, Rational(0), 1.0);
    auto expect = H2xRPoint{tri.A, 0.0}.projective();
    for (int c = 0; c < 4; ++c) CHECK(std::abs(img[c] - expect[c]) < 1e-12);
}

TEST_CASE("orbit scan: stabilizer at a vertex kernel") {
    GroupContext ctx = GroupContext::create(6, 4, parse_translation_class("0,0,0"), 1.0);
    H2xRPoint K{ctx.triangle.B, 0.0};
    OrbitScan scan = orbit_neighbors(ctx, K, 6, 2.5);
    CHECK(scan.stabilizer_count >= 5);  // g1 powers fix B
    for (const auto& n : scan.neighbors) CHECK(n.distance > 1e-6);
}

TEST_CASE("orbit scan: the record configuration touches at xi") {
    double xi = 0.814141;
    TranslationClass cls = parse_translation_class("0,1/2,1/2");
    GroupContext ctx = GroupContext::create(6, 4, cls, xi);
    H2xRPoint K{H2Point::polar(0.489201, -0.938184), 0.0};
    OrbitScan scan = orbit_neighbors(ctx, K, 8, 2.5 * xi);
    REQUIRE(!scan.neighbors.empty());
    // nothing closer than xi, and the generator images all sit at xi
    CHECK(scan.neighbors.front().distance > xi - 1e-4);
    int touching = 0;
    for (int i = 0; i < 3; ++i) {
        for (int sgn : {+1, -1}) {
            ScrewElement g = ctx.generator(i);
            if (sgn < 0) g = ScrewElement{g.linear.inverse(), g.fibre_sign, -g.tau};
            H2xRPoint img = g.apply(K);
            CHECK(h2xr_distance(K, img) == doctest::Approx(xi).epsilon(2e-5));
            bool found = false;
            for (const auto& n : scan.neighbors)
                found |= h2xr_distance(n.point, img) < 1e-5;
            CHECK(found);
            ++touching;
        }
    }
    CHECK(touching == 6);
}

TEST_CASE("orbit scan at word length one") {
    GroupContext ctx = GroupContext::create(6, 4, parse_translation_class("0,0,0"), 1.3);
    H2xRPoint K{H2Point::polar(0.45, -0.8), 0.0};
    OrbitScan scan = orbit_neighbors(ctx, K, 1, 50.0);
    // g0 gives one image (involution), g1 and g2 two each, lattice two
    CHECK(scan.neighbors.size() == 7);
    auto close = [](const H2xRPoint& a, const H2xRPoint& b) {
        auto pa = a.projective(), pb = b.projective();
        for (int i = 0; i < 4; ++i)
            if (std::abs(pa[i] - pb[i]) > 1e-8) return false;
        return true;
    };
    for (const auto& n : scan.neighbors) {
        bool matched = n.word.rfind("lattice", 0) == 0;
        for (int i = 0; i < 3 && !matched; ++i) {
            for (int sgn : {+1, -1}) {
                ScrewElement g = ctx.generator(i);
                if (sgn < 0) g = ScrewElement{g.linear.inverse(), g.fibre_sign, -g.tau};
                matched |= close(n.point, g.apply(K));
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("orbit distances are invariant along the orbit") {
    double xi = 0.814141;
    GroupContext ctx = GroupContext::create(6, 4, parse_translation_class("0,1/2,1/2"), xi);
    H2xRPoint K{H2Point::polar(0.489201, -0.938184), 0.0};
    H2xRPoint K2 = compose(ctx.g1_hat, ctx.g0_hat).apply(K);

    auto dists = [&](const H2xRPoint& P) {
        OrbitScan s = orbit_neighbors(ctx, P, 6, 1.5 * xi);
        std::vector<double> d;
        for (const auto& n : s.neighbors) d.push_back(n.distance);
        std::sort(d.begin(), d.end());
        return d;
    };
    auto d1 = dists(K), d2 = dists(K2);
    REQUIRE(d1.size() == d2.size());
    for (std::size_t i = 0; i < d1.size(); ++i) CHECK(std::abs(d1[i] - d2[i]) < 1e-8);
}
