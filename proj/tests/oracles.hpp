#pragma once

// Independent numerical oracles used by the test suite. These deliberately
// avoid the library's own closed forms: arc lengths are integrated from the
// metric, distances re-derived from geodesic parametrizations.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>

#include "h2xr/hyperbolic_plane.hpp"

namespace h2xr::testing {

inline constexpr double kPi = std::numbers::pi;

// deterministic 64-bit generator (splitmix64)
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53;
    }
};

// composite Simpson over [a, b]
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    double h = (b - a) / n, s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Arc length of the hyperboloid segment between P and Q, integrated with the
// base-plane metric diag(1, sinh^2 r) in polar coordinates. Independent of
// the acosh distance formula.
inline double base_arc_length_oracle(const H2Point& P, const H2Point& Q, int n = 4000) {
    double d = std::acosh(std::max(1.0, mink(P.v, Q.v)));
    if (d < 1e-14) return 0.0;
    auto gamma = [&](double s) {
        double a = std::sinh(d - s) / std::sinh(d);
        double b = std::sinh(s) / std::sinh(d);
        return a * P.v + b * Q.v;
    };
    auto speed = [&](double s) {
        const double h = 1e-7;
        Vec3 p0 = gamma(s - h), p1 = gamma(s + h);
        double ds = 2 * h;
        double r0 = std::acosh(std::max(1.0, p0.x1)), r1 = std::acosh(std::max(1.0, p1.x1));
        double a0 = std::atan2(p0.x3, p0.x2), a1 = std::atan2(p1.x3, p1.x2);
        double da = a1 - a0;
        while (da > kPi) da -= 2 * kPi;
        while (da < -kPi) da += 2 * kPi;
        double rm = 0.5 * (r0 + r1);
        double dr = (r1 - r0) / ds, dal = da / ds;
        return std::sqrt(dr * dr + std::sinh(rm) * std::sinh(rm) * dal * dal);
    };
    // bearings are ill-conditioned at the poles; trim the ends and patch the
    // slivers with their one-sided speeds
    const double eps = 1e-4;
    return simpson(speed, eps, d - eps, n) + eps * (speed(eps) + speed(d - eps));
}

// Arc length of a curve given in Cartesian model coordinates (x, y, z),
// integrated with the general projective-model metric form. Used to verify
// that the geodesic parametrization is unit speed.
inline double cartesian_arc_length_oracle(const std::function<void(double, double[3])>& curve,
                                          double t0, double t1, int n = 20000) {
    auto speed = [&](double t) {
        const double h = 1e-6;
        double pa[3], pb[3];
        curve(t - h, pa);
        curve(t + h, pb);
        double x = 0.5 * (pa[0] + pb[0]), y = 0.5 * (pa[1] + pb[1]), z = 0.5 * (pa[2] + pb[2]);
        double dx = (pb[0] - pa[0]) / (2 * h), dy = (pb[1] - pa[1]) / (2 * h),
               dz = (pb[2] - pa[2]) / (2 * h);
        double q = (-x * x + y * y + z * z);
        double ds2 = ((x * x + y * y + z * z) * dx * dx - 4 * x * y * dx * dy - 4 * x * z * dx * dz +
                      (x * x + y * y - z * z) * dy * dy + 4 * y * z * dy * dz +
                      (x * x - y * y + z * z) * dz * dz) /
                     (q * q);
        return std::sqrt(std::max(0.0, ds2));
    };
    return simpson(speed, t0 + 1e-5, t1 - 1e-5, n) +
           // end caps, linear estimate over the trimmed slivers
           1e-5 * (speed(t0 + 1e-5) + speed(t1 - 1e-5));
}

}  // namespace h2xr::testing
