#include "h2xr/h2xr_geometry.hpp"

#include <cmath>
#include <numbers>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
constexpr double kPi = std::numbers::pi;

// 15-point Gauss-Kronrod pair on [-1,1] (7-point Gauss embedded).
constexpr std::array<double, 15> kKronrodX = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr std::array<double, 15> kKronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr std::array<double, 7> kGaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

template <typename F>
void gk15(const F& f, double a, double b, double& kron, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double gk = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(c + h * kKronrodX[i]);
        gk += kKronrodW[i] * fx;
        if (i % 2 == 1) g += kGaussW[i / 2] * fx;
    }
    kron = gk * h;
    err = std::abs((gk - g) * h);
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double tol, long& evals, long cap) {
    double kron, err;
    gk15(f, a, b, kron, err);
    evals += 15;
    if (err <= tol || evals >= cap) return kron;
    double m = 0.5 * (a + b);
    return adaptive_gk(f, a, m, tol / 2, evals, cap) + adaptive_gk(f, m, b, tol / 2, evals, cap);
}
}  // namespace

std::array<double, 4> H2xRPoint::projective() const {
    double e = std::exp(t);
    return {1.0, e * base.v.x1, e * base.v.x2, e * base.v.x3};
}

H2xRPoint H2xRPoint::from_projective(double x0, double x1, double x2, double x3) {
    if (x0 <= 0.0) throw InvalidPointError("projective coordinate x0 must be positive");
    double a = x1 / x0, b = x2 / x0, c = x3 / x0;
    double q = a * a - b * b - c * c;
    if (q <= 0.0 || a <= 0.0) throw InvalidPointError("point outside the model cone");
    double e = std::sqrt(q);  // e^t
    return {H2Point{{a / e, b / e, c / e}}, std::log(e)};
}

bool GeodesicShot::valid() const {
    return u > -kPi - 1e-12 && u <= kPi + 1e-12 && std::abs(v) <= kPi / 2 + 1e-12 && length >= 0.0;
}

H2xRPoint geodesic_point(const GeodesicShot& shot, double tau) {
    double t = tau * std::sin(shot.v);
    double r = tau * std::cos(shot.v);
    return {H2Point::polar(r, shot.u), t};
}

double h2xr_distance(const H2xRPoint& P, const H2xRPoint& Q) {
    double db = h2_distance(P.base, Q.base);
    double dt = P.t - Q.t;
    return std::hypot(db, dt);
}

GeodesicShot solve_shot(const H2xRPoint& P, const H2xRPoint& Q, int max_iter) {
    // carry P to the model centre (base translation lifted with fibre shift)
    H2Isometry T = translate_to_origin(P.base);
    H2Point qb = T.apply(Q.base);
    double qt = Q.t - P.t;

    double base_d = h2_distance(H2Point::origin(), qb);
    if (base_d < 1e-14 && std::abs(qt) < 1e-14)
        throw InvalidPointError("solve_shot requires distinct endpoints");
    if (base_d < 1e-14) {
        // pure fibre geodesic
        return {0.0, qt > 0 ? kPi / 2 : -kPi / 2, std::abs(qt)};
    }

    std::array<double, 4> target = H2xRPoint{qb, qt}.projective();
    // closed-form seed; Newton acts as a verifier of the product decomposition
    double u = qb.bearing();
    double v = std::atan2(qt, base_d);
    double L = std::hypot(base_d, qt);

    auto F = [&](double uu, double vv, double ll, double out[3]) {
        double e = std::exp(ll * std::sin(vv));
        double rr = ll * std::cos(vv);
        out[0] = e * std::cosh(rr) - target[1];
        out[1] = e * std::sinh(rr) * std::cos(uu) - target[2];
        out[2] = e * std::sinh(rr) * std::sin(uu) - target[3];
    };

    auto norm3 = [](const double f[3]) { return std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]); };

    double f[3];
    F(u, v, L, f);
    for (int it = 0; it < max_iter && norm3(f) > 1e-13; ++it) {
        // numerical Jacobian, central differences
        double Jm[3][3];
        const double h = 1e-7;
        double fp[3], fm[3];
        double vars[3] = {u, v, L};
        for (int j = 0; j < 3; ++j) {
            double save = vars[j];
            vars[j] = save + h;
            F(vars[0], vars[1], vars[2], fp);
            vars[j] = save - h;
            F(vars[0], vars[1], vars[2], fm);
            vars[j] = save;
            for (int i = 0; i < 3; ++i) Jm[i][j] = (fp[i] - fm[i]) / (2 * h);
        }
        // solve 3x3 by Cramer
        auto det3 = [](double a[3][3]) {
            return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        };
        double D = det3(Jm);
        if (std::abs(D) < 1e-18) throw NoConvergenceError("singular Jacobian in solve_shot");
        double dx[3];
        for (int j = 0; j < 3; ++j) {
            double Aj[3][3];
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) Aj[r][c] = (c == j) ? -f[r] : Jm[r][c];
            dx[j] = det3(Aj) / D;
        }
        // damping factor 1/2 on overshoot
        double step = 1.0, fn[3];
        for (;;) {
            F(u + step * dx[0], v + step * dx[1], L + step * dx[2], fn);
            if (norm3(fn) < norm3(f) || step < 1e-8) break;
            step *= 0.5;
        }
        u += step * dx[0];
        v += step * dx[1];
        L += step * dx[2];
        F(u, v, L, f);
    }
    if (norm3(f) > 1e-9) throw NoConvergenceError("solve_shot did not converge");

    // normalize ranges
    while (u <= -kPi) u += 2 * kPi;
    while (u > kPi) u -= 2 * kPi;
    return {u, v, L};
}

double ball_volume(double rho, double abs_tol) {
    if (rho < 0.0) throw std::invalid_argument("negative ball radius");
    if (rho == 0.0) return 0.0;
    const long cap = 1000000;
    long evals = 0;
    auto inner = [&](double tau) {
        long ev = 0;
        auto f = [tau](double v) { return tau * std::sinh(tau * std::cos(v)); };
        return adaptive_gk(f, -kPi / 2, kPi / 2, abs_tol / (8 * rho), ev, cap);
    };
    double val = adaptive_gk(inner, 0.0, rho, abs_tol / 4, evals, cap);
    return 2 * kPi * val;
}

double ball_surface(double rho, double abs_tol) {
    long ev = 0;
    auto f = [rho](double v) { return rho * std::sinh(rho * std::cos(v)); };
    return 2 * kPi * adaptive_gk(f, -kPi / 2, kPi / 2, abs_tol, ev, 1000000L);
}

double prism_volume(double area, double h) {
    if (area <= 0.0 || h <= 0.0) throw std::invalid_argument("prism needs positive area and height");
    return area * h;
}

std::array<std::array<double, 3>, 3> metric_tensor_at(double r) {
    if (r < 0.0) throw std::invalid_argument("negative radius");
    double sh = std::sinh(r);
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, sh * sh}}};
}

BallVolumeTable BallVolumeTable::build(double rho_max, int n, double tol) {
    BallVolumeTable t;
    t.quadrature_tol = tol;
    t.samples.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        double rho = rho_max * i / n;
        t.samples.emplace_back(rho, ball_volume(rho, tol));
    }
    return t;
}

bool BallVolumeTable::monotone() const {
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].second <= samples[i - 1].second) return false;
    return samples.empty() ? true : samples.front().second == 0.0 || samples.front().first > 0.0;
}

}  // namespace h2xr
