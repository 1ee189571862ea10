#pragma once

#include <array>
#include <string>
#include <vector>

#include "h2xr/frobenius.hpp"
#include "h2xr/h2xr_geometry.hpp"
#include "h2xr/hyperbolic_plane.hpp"

namespace h2xr {

// Screw motion: hyperbolic rotation (linear part) plus fibre translation.
// Only type-I point groups appear here, so the fibre sign is always +1.
struct ScrewElement {
    H2Isometry linear;
    int fibre_sign = +1;
    double tau = 0.0;

    H2xRPoint apply(const H2xRPoint& p) const { return {linear.apply(p.base), p.t + tau}; }
};

// compose(a, b): the element acting as "a first, then b".
ScrewElement compose(const ScrewElement& a, const ScrewElement& b);

// Generators of the screw group over the (2,p1,p2) rotation triangle group:
//   g0 = half-turn about A,
//   g1 = rotation about B by -2 pi / p1,
//   g2 = rotation about C by +2 pi / p2,
// senses chosen so that applying g0 then g1 equals g2 (mod the fibre lattice).
struct GroupContext {
    int p1 = 0, p2 = 0;
    TriangleGeometry triangle;
    TranslationClass translation_class;
    double xi = 1.0;
    ScrewElement g0_hat, g1_hat, g2_hat;

    static GroupContext create(int p1, int p2, const TranslationClass& cls, double xi);
    const ScrewElement& generator(int i) const;
};

struct OrbitNeighbor {
    H2xRPoint point;
    std::string word;       // e.g. "g0 g1' g2"
    double distance;        // h2xr distance from the kernel
    double base_distance;   // base-plane part
    Rational tau_frac;      // fibre part as an exact multiple of xi (nearest lattice lift)
};

struct OrbitScan {
    std::vector<OrbitNeighbor> neighbors;  // sorted by distance
    int stabilizer_count = 0;              // elements fixing K found in the scan
    std::vector<std::string> stabilizer_words;
};

// All distinct images K^w for words of length <= word_len over the generator
// set {g0,g1,g2}^{+-1}, plus the pure lattice images, within radius_cap of K.
// Elements fixing K are excluded from the list and reported separately.
OrbitScan orbit_neighbors(const GroupContext& ctx, const H2xRPoint& K, int word_len,
                          double radius_cap);

// Closed-form orbit images of K = (polar(r, alpha), 0) under generator i with
// fibre lift r_i * xi, evaluated in projective coordinates (1, x, y, z).
// Kept as an independent verification path against the matrix action.
std::array<double, 4> appendix_image(double r, double alpha, int i, int p1, int p2,
                                     const Rational& r_i, double xi);

// Count of appendix evaluations whose sign-function argument had magnitude
// below 1e-12 (none are expected on the admissible domain).
long appendix_csgn_near_zero_count();

}  // namespace h2xr
