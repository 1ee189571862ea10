#include "h2xr/hyperbolic_plane.hpp"

#include <cmath>
#include <numbers>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
constexpr double kPi = std::numbers::pi;

Vec3 renormalize(Vec3 v) {
    double n = mink(v, v);
    if (n <= 0.0) throw InvalidPointError("point left the hyperboloid upper sheet");
    double s = 1.0 / std::sqrt(n);
    if (v.x1 < 0.0) throw InvalidPointError("point crossed to the lower sheet");
    return s * v;
}
}  // namespace

H2Point H2Point::polar(double r, double alpha) {
    return {{std::cosh(r), std::sinh(r) * std::cos(alpha), std::sinh(r) * std::sin(alpha)}};
}

H2Point H2Point::from_coords(double x1, double x2, double x3) {
    H2Point p{{x1, x2, x3}};
    p.v = renormalize(p.v);
    return p;
}

double H2Point::radius() const { return std::acosh(std::max(v.x1, 1.0)); }

double H2Point::bearing() const { return std::atan2(v.x3, v.x2); }

bool H2Point::valid(double tol) const {
    return std::abs(mink(v, v) - 1.0) <= tol && v.x1 >= 1.0 - tol;
}

H2Point H2Isometry::apply(const H2Point& p) const {
    // renormalize after every application to bound drift in long orbit words
    return {renormalize(m * p.v)};
}

double H2Isometry::lorentz_defect() const {
    Mat3 J;
    J.m = {-1, 0, 0, 0, 1, 0, 0, 0, 1};
    Mat3 mt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mt(i, j) = m(j, i);
    return max_abs_diff(mt * J * m, J);
}

double h2_distance(const H2Point& P, const H2Point& Q) {
    double c = mink(P.v, Q.v);
    if (c < 1.0 - 1e-9) throw InvalidPointError("Minkowski product below 1: invalid hyperboloid points");
    return std::acosh(std::max(c, 1.0));
}

namespace {
// Conjugation by translations with far centres multiplies large matrix
// entries; carry the products in long double and round once at the end.
using LMat = Mat3T<long double>;

LMat rotation_at_origin_l(long double angle) {
    long double c = std::cos(angle), s = std::sin(angle);
    LMat g;
    g.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return g;
}

LMat translate_to_origin_l(const H2Point& K) {
    long double x1 = K.v.x1, x2 = K.v.x2, x3 = K.v.x3;
    long double r = std::acosh(std::max<long double>(x1, 1.0L));
    if (r < 1e-16L) return LMat::identity();
    long double a = std::atan2(x3, x2);
    long double ch = std::cosh(r), sh = std::sinh(r);
    LMat T;
    T.m = {ch, -sh, 0, -sh, ch, 0, 0, 0, 1};
    return rotation_at_origin_l(a) * T * rotation_at_origin_l(-a);
}

H2Isometry round_to_double(const LMat& m, int orientation = +1) {
    H2Isometry g;
    g.orientation = orientation;
    for (int i = 0; i < 9; ++i) g.m.m[i] = static_cast<double>(m.m[i]);
    return g;
}
}  // namespace

H2Isometry translate_to_origin(const H2Point& K) {
    return round_to_double(translate_to_origin_l(K));
}

H2Isometry rotation_about(const H2Point& center, double angle) {
    LMat T = translate_to_origin_l(center);
    return round_to_double(lorentz_inverse(T) * rotation_at_origin_l(angle) * T);
}

double interior_angle(const H2Point& P, const H2Point& Q, const H2Point& R) {
    // Tangent of the geodesic P->X at P: X - <X,P> P, spacelike (negative norm).
    auto tangent = [&](const H2Point& X) { return X.v - mink(X.v, P.v) * P.v; };
    Vec3 tq = tangent(Q), tr = tangent(R);
    double num = -mink(tq, tr);  // Riemannian metric on tangent vectors is -mink
    double den = std::sqrt(mink(tq, tq) * mink(tr, tr));
    return std::acos(std::clamp(num / den, -1.0, 1.0));
}

bool is_hyperbolic_signature(int p1, int p2) {
    if (p1 < 3 || p2 < 3) return false;
    return 2 * (p1 + p2) < p1 * p2;  // 1/p1 + 1/p2 < 1/2 in integers
}

double fundamental_domain_area(int p1, int p2) {
    if (!is_hyperbolic_signature(p1, p2))
        throw NonHyperbolicError("parameters (2," + std::to_string(p1) + "," + std::to_string(p2) +
                                 ") are not hyperbolic");
    // combinatorial measure of the (+,0,[2,p1,p2]) fundamental polygon
    return kPi * (1.0 - 2.0 / p1 - 2.0 / p2);
}

TriangleGeometry triangle_vertices(int p1, int p2) {
    if (!is_hyperbolic_signature(p1, p2))
        throw NonHyperbolicError("parameters (2," + std::to_string(p1) + "," + std::to_string(p2) +
                                 ") are not hyperbolic");
    double c1 = std::cos(kPi / p1), s2 = std::sin(kPi / p2);
    double t1 = std::tan(kPi / p1), t2 = std::tan(kPi / p2);
    double w = std::sqrt(1.0 - s2 * s2 / (c1 * c1));

    TriangleGeometry tri;
    tri.p1 = p1;
    tri.p2 = p2;
    tri.A = {{c1 / s2, 0.0, -(c1 / s2) * w}};
    tri.B = {{1.0 / (t1 * t2), w / t1, -w / (t1 * t2)}};
    tri.C = H2Point::origin();
    tri.angle_A = kPi / 2;
    tri.angle_B = kPi / p1;
    tri.angle_C = kPi / p2;
    tri.area_fd = fundamental_domain_area(p1, p2);
    return tri;
}

double rotation_chord(const H2Point& center, double angle, const H2Point& P) {
    double R = h2_distance(center, P);
    return 2.0 * std::asinh(std::sinh(R) * std::abs(std::sin(angle / 2.0)));
}

}  // namespace h2xr
