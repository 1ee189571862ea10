#pragma once

#include "h2xr/linalg.hpp"

namespace h2xr {

// Point on the upper sheet of the Minkowski hyperboloid x1^2 - x2^2 - x3^2 = 1.
struct H2Point {
    Vec3 v{1.0, 0.0, 0.0};

    static H2Point origin() { return {}; }
    static H2Point polar(double r, double alpha);
    static H2Point from_coords(double x1, double x2, double x3);

    double radius() const;   // hyperbolic distance to the origin
    double bearing() const;  // atan2(x3, x2)
    bool valid(double tol = 1e-9) const;
};

// Orientation-preserving isometry of H^2 as a 3x3 Lorentz matrix.
struct H2Isometry {
    Mat3 m = Mat3::identity();
    int orientation = +1;

    H2Point apply(const H2Point& p) const;
    H2Isometry inverse() const { return {lorentz_inverse(m), orientation}; }
    friend H2Isometry operator*(const H2Isometry& a, const H2Isometry& b) {
        return {a.m * b.m, a.orientation * b.orientation};
    }
    // max |m^T J m - J|, zero for an exact Lorentz matrix
    double lorentz_defect() const;
};

struct TriangleGeometry {
    int p1 = 0, p2 = 0;  // p0 is fixed to 2
    H2Point A, B, C;     // interior angles pi/2, pi/p1, pi/p2
    double angle_A = 0, angle_B = 0, angle_C = 0;
    double area_fd = 0;  // area of the point group's fundamental domain
};

double h2_distance(const H2Point& P, const H2Point& Q);

// Rotation by `angle` about `center`, built by conjugating the origin
// rotation with the translation taking `center` to (1,0,0).
H2Isometry rotation_about(const H2Point& center, double angle);

// Pure hyperbolic translation along the axis through K and the origin,
// mapping K to (1,0,0).
H2Isometry translate_to_origin(const H2Point& K);

// Interior angle at P of the geodesic triangle P-Q-R, measured with
// Minkowski inner products of unit tangent vectors at P.
double interior_angle(const H2Point& P, const H2Point& Q, const H2Point& R);

TriangleGeometry triangle_vertices(int p1, int p2);

double fundamental_domain_area(int p1, int p2);

bool is_hyperbolic_signature(int p1, int p2);

// Distance from P to its image under a rotation by `angle` about `center`:
// 2 asinh( sinh d(P, center) * |sin(angle/2)| ).
double rotation_chord(const H2Point& center, double angle, const H2Point& P);

}  // namespace h2xr
