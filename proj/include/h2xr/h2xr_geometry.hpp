#pragma once

#include <array>
#include <vector>

#include "h2xr/hyperbolic_plane.hpp"

namespace h2xr {

// Space point: hyperbolic base point plus real fibre coordinate. The
// projective embedding is (1, e^t x1, e^t x2, e^t x3).
struct H2xRPoint {
    H2Point base;
    double t = 0.0;

    std::array<double, 4> projective() const;
    static H2xRPoint from_projective(double x0, double x1, double x2, double x3);
};

// Unit-speed geodesic from the model centre with geographic direction (u, v).
struct GeodesicShot {
    double u = 0.0;       // in (-pi, pi]
    double v = 0.0;       // in [-pi/2, pi/2]
    double length = 0.0;  // arc-length bound

    bool valid() const;
};

// Point at arc length tau along the shot, measured from (1,1,0,0):
// fibre t = tau sin v, base radius r = tau cos v, base bearing u.
H2xRPoint geodesic_point(const GeodesicShot& shot, double tau);

// Product distance sqrt(d_H2(base,base)^2 + (t_P - t_Q)^2); agrees with the
// shooting solver because along any geodesic the fibre displacement is
// tau sin v and the base displacement tau cos v.
double h2xr_distance(const H2xRPoint& P, const H2xRPoint& Q);

// Boundary-value solve: find the shot from P to Q. P is first carried to the
// model centre by a lifted base translation. Damped Newton on the endpoint
// equations; throws NoConvergenceError after max iterations.
GeodesicShot solve_shot(const H2xRPoint& P, const H2xRPoint& Q,
                        int max_iter = 50);

// Geodesic ball volume 2 pi * int_0^rho int_{-pi/2}^{pi/2} tau sinh(tau cos v) dv dtau
// by nested adaptive quadrature.
double ball_volume(double rho, double abs_tol = 1e-8);

// Surface-area integrand 2 pi * int_{-pi/2}^{pi/2} rho sinh(rho cos v) dv,
// the derivative of ball_volume.
double ball_surface(double rho, double abs_tol = 1e-10);

double prism_volume(double area, double h);

// Metric tensor diag(1,1,sinh^2 r) in (t,r,alpha) coordinates.
std::array<std::array<double, 3>, 3> metric_tensor_at(double r);

// Precomputed monotone (rho, volume) table, built once, read concurrently.
struct BallVolumeTable {
    std::vector<std::pair<double, double>> samples;
    double quadrature_tol = 1e-8;

    static BallVolumeTable build(double rho_max, int n, double tol = 1e-8);
    bool monotone() const;
};

}  // namespace h2xr
