#include "h2xr/packing_optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
constexpr double kPi = std::numbers::pi;

struct CaseGeometry {
    TriangleGeometry tri;
    std::array<H2Point, 3> vertex;
    std::array<double, 3> angle;   // rotation angles of g0, g1, g2
    std::array<double, 3> qfrac;   // |r_i|
};

CaseGeometry case_geometry(int p1, int p2, const TranslationClass& cls) {
    CaseGeometry g;
    g.tri = triangle_vertices(p1, p2);
    g.vertex = {g.tri.A, g.tri.B, g.tri.C};
    g.angle = {kPi, -2 * kPi / p1, 2 * kPi / p2};
    g.qfrac = {std::abs(cls.r0.value()), std::abs(cls.r1.value()), std::abs(cls.r2.value())};
    return g;
}

// Klein-model barycentric interior test (geodesics are straight chords there).
bool inside_triangle(const CaseGeometry& g, const H2Point& K, double margin = 1e-7) {
    auto klein = [](const H2Point& p) {
        return std::array<double, 2>{p.v.x2 / p.v.x1, p.v.x3 / p.v.x1};
    };
    auto a = klein(g.tri.A), b = klein(g.tri.B), c = klein(g.tri.C), k = klein(K);
    auto cross = [](const std::array<double, 2>& p, const std::array<double, 2>& q,
                    const std::array<double, 2>& r) {
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    };
    double s1 = cross(a, b, k), s2 = cross(b, c, k), s3 = cross(c, a, k);
    double orient = cross(a, b, c) > 0 ? 1.0 : -1.0;
    return orient * s1 >= -margin && orient * s2 >= -margin && orient * s3 >= -margin;
}

// Assemble the full endpoint system at the candidate solution: three
// unit-speed geodesics of length xi from the translated kernel must hit the
// translated generator images. Returns max |component|.
double full_system_residual(const CaseGeometry& g, const TranslationClass& cls,
                            const H2Point& K, double xi) {
    H2Isometry T = translate_to_origin(K);
    double worst = 0.0;
    const Rational rs[3] = {cls.r0, cls.r1, cls.r2};
    for (int i = 0; i < 3; ++i) {
        H2Point img = rotation_about(g.vertex[i], g.angle[i]).apply(K);
        H2xRPoint target{T.apply(img), rs[i].value() * xi};
        auto tp = target.projective();
        double base_d = h2_distance(H2Point::origin(), target.base);
        double u = target.base.bearing();
        double v = std::atan2(target.t, base_d);
        double e = std::exp(xi * std::sin(v));
        double rr = xi * std::cos(v);
        worst = std::max({worst, std::abs(e * std::cosh(rr) - tp[1]),
                          std::abs(e * std::sinh(rr) * std::cos(u) - tp[2]),
                          std::abs(e * std::sinh(rr) * std::sin(u) - tp[3])});
    }
    return worst;
}

PackingSolution finish_solution(int p1, int p2, Site site, const TranslationClass& cls,
                                const H2Point& K, double xi, const CaseGeometry& g) {
    PackingSolution sol;
    sol.p1 = p1;
    sol.p2 = p2;
    sol.kernel_site = {site};
    sol.translation_class = cls;
    sol.K = {K, 0.0};
    sol.kernel_r = K.radius();
    sol.kernel_alpha = K.bearing();
    sol.xi = xi;
    sol.rho = xi / 2.0;
    sol.vol_ball = ball_volume(sol.rho);
    sol.vol_dv = g.tri.area_fd * xi * sol.stabilizer_order();
    sol.density = sol.vol_ball / sol.vol_dv;
    sol.full_system_residual = full_system_residual(g, cls, K, xi);
    return sol;
}
}  // namespace

Mode parse_mode(const std::string& name) {
    if (name == "simply") return Mode::Simply;
    if (name == "multiply") return Mode::Multiply;
    throw std::invalid_argument("mode must be 'simply' or 'multiply'");
}

std::string mode_name(Mode m) { return m == Mode::Simply ? "simply" : "multiply"; }

PackingSolution solve_simply(int p1, int p2, const TranslationClass& cls) {
    if (enumerate_simply(p1, p2).count(cls) == 0 &&
        enumerate_simply(p1, p2).count(canonical_class(cls)) == 0)
        throw std::invalid_argument("translation class " + cls.str() +
                                    " is not admissible for (2," + std::to_string(p1) + "," +
                                    std::to_string(p2) + ")");
    CaseGeometry g = case_geometry(p1, p2, cls);
    const double s[3] = {std::sqrt(1 - g.qfrac[0] * g.qfrac[0]),
                         std::sqrt(1 - g.qfrac[1] * g.qfrac[1]),
                         std::sqrt(1 - g.qfrac[2] * g.qfrac[2])};

    auto eval = [&](const double x[3], double f[3]) {
        H2Point K = H2Point::polar(x[0], x[1]);
        for (int i = 0; i < 3; ++i)
            f[i] = rotation_chord(g.vertex[i], g.angle[i], K) - x[2] * s[i];
    };
    auto norm3 = [](const double f[3]) { return std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]); };

    auto newton_from = [&](double r0, double a0, double xi0, double out[3]) -> bool {
        double x[3] = {r0, a0, xi0};
        double f[3];
        eval(x, f);
        for (int it = 0; it < 120 && norm3(f) > 1e-13; ++it) {
            double Jm[3][3], fp[3], fm[3];
            const double h = 1e-7;
            for (int j = 0; j < 3; ++j) {
                double save = x[j];
                x[j] = save + h;
                eval(x, fp);
                x[j] = save - h;
                eval(x, fm);
                x[j] = save;
                for (int i = 0; i < 3; ++i) Jm[i][j] = (fp[i] - fm[i]) / (2 * h);
            }
            auto det3 = [](double a[3][3]) {
                return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
            };
            double D = det3(Jm);
            if (std::abs(D) < 1e-16) return false;
            double dx[3];
            for (int j = 0; j < 3; ++j) {
                double Aj[3][3];
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) Aj[r][c] = (c == j) ? -f[r] : Jm[r][c];
                dx[j] = det3(Aj) / D;
            }
            double step = 1.0, xn[3], fn[3];
            for (;;) {
                for (int j = 0; j < 3; ++j) xn[j] = x[j] + step * dx[j];
                if (xn[0] > 0 && xn[2] > 0) {
                    eval(xn, fn);
                    if (norm3(fn) < norm3(f)) break;
                }
                step *= 0.5;
                if (step < 1e-9) return false;
            }
            for (int j = 0; j < 3; ++j) x[j] = xn[j];
            eval(x, f);
        }
        if (norm3(f) > 1e-10) return false;
        for (int j = 0; j < 3; ++j) out[j] = x[j];
        return true;
    };

    // barycentric seed grid over the open triangle, in the Klein model
    auto klein = [](const H2Point& p) {
        return std::array<double, 2>{p.v.x2 / p.v.x1, p.v.x3 / p.v.x1};
    };
    auto a = klein(g.tri.A), b = klein(g.tri.B), c = klein(g.tri.C);
    std::vector<std::array<double, 3>> roots;
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8 && i + j <= 9; ++j) {
            double wa = i / 10.0, wb = j / 10.0, wc = 1.0 - wa - wb;
            double kx = wa * a[0] + wb * b[0] + wc * c[0];
            double ky = wa * a[1] + wb * b[1] + wc * c[1];
            double denom = std::sqrt(1.0 - kx * kx - ky * ky);
            H2Point K{{1.0 / denom, kx / denom, ky / denom}};
            double xi0 = 0.0;
            for (int t = 0; t < 3; ++t)
                xi0 += rotation_chord(g.vertex[t], g.angle[t], K) / s[t] / 3.0;
            double out[3];
            if (!newton_from(K.radius(), K.bearing(), xi0, out)) continue;
            if (!inside_triangle(g, H2Point::polar(out[0], out[1]))) continue;
            bool dup = false;
            for (const auto& r : roots)
                dup |= std::abs(r[0] - out[0]) < 1e-8 && std::abs(r[1] - out[1]) < 1e-8 &&
                       std::abs(r[2] - out[2]) < 1e-8;
            if (!dup) roots.push_back({out[0], out[1], out[2]});
        }
    }
    if (roots.empty())
        throw UnsolvedCaseError("no interior kernel found for (2," + std::to_string(p1) + "," +
                                std::to_string(p2) + ") class " + cls.str());
    std::optional<OverlapError> overlap;
    for (const auto& root : roots) {
        PackingSolution sol =
            finish_solution(p1, p2, Site::Interior, cls, H2Point::polar(root[0], root[1]), root[2], g);
        if (sol.full_system_residual > 1e-8)
            throw NoConvergenceError("endpoint system residual above 1e-8");
        try {
            return validate_packing(std::move(sol));
        } catch (const OverlapError& e) {
            overlap = e;
        }
    }
    throw *overlap;
}

PackingSolution solve_multiply(int p1, int p2, Site site, const TranslationClass& cls) {
    if (site == Site::Interior) throw std::invalid_argument("use solve_simply for interior kernels");
    if (enumerate_multiply(p1, p2, site).count(cls) == 0 &&
        enumerate_multiply(p1, p2, site).count(canonical_class(cls)) == 0)
        throw std::invalid_argument("translation class " + cls.str() + " does not fix kernel " +
                                    site_name(site));
    CaseGeometry g = case_geometry(p1, p2, cls);
    int si = site == Site::A ? 0 : (site == Site::B ? 1 : 2);
    H2Point K = g.vertex[si];

    // non-stabilizing direct generator constraints: base chord and fibre part
    std::array<int, 2> others{(si + 1) % 3, (si + 2) % 3};
    std::array<double, 2> bchord, q;
    for (int t = 0; t < 2; ++t) {
        int i = others[t];
        bchord[t] = rotation_chord(g.vertex[i], g.angle[i], K);
        q[t] = g.qfrac[i];
    }

    double area = g.tri.area_fd;
    int stab = KernelSite{site}.stabilizer_order(p1, p2);
    auto rho_of = [&](double xi) {
        double m = xi;
        for (int t = 0; t < 2; ++t)
            m = std::min(m, std::hypot(bchord[t], q[t] * xi));
        return 0.5 * m;
    };
    auto delta_of = [&](double xi) { return ball_volume(rho_of(xi), 1e-7) / (area * xi * stab); };

    // Admissible xi run over the fibre-touching branch rho(xi) = xi/2: past
    // its right endpoint the lattice neighbour no longer touches and the
    // direct-constraint objective stops describing a packing. The endpoint is
    // where the tightest generator constraint crosses the lattice one.
    double corner = std::min(bchord[0] / std::sqrt(1 - q[0] * q[0]),
                             bchord[1] / std::sqrt(1 - q[1] * q[1]));
    double lo = 1e-3 * corner, hi = corner;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = delta_of(x1), f2 = delta_of(x2);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = delta_of(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = delta_of(x1);
        }
    }
    double xi = 0.5 * (lo + hi);
    if (std::abs(corner - xi) > 1e-6 * corner || delta_of(xi - 1e-4 * xi) > delta_of(corner))
        throw UnsolvedCaseError("vertex-kernel objective does not peak at the touching corner");
    xi = corner;

    PackingSolution sol;
    sol.p1 = p1;
    sol.p2 = p2;
    sol.kernel_site = {site};
    sol.translation_class = cls;
    sol.K = {K, 0.0};
    sol.kernel_r = K.radius();
    sol.kernel_alpha = K.bearing();
    sol.xi = xi;
    sol.rho = rho_of(xi);
    sol.vol_ball = ball_volume(sol.rho);
    sol.vol_dv = area * xi * stab;
    sol.density = sol.vol_ball / sol.vol_dv;
    sol.full_system_residual = 0.0;
    return validate_packing(std::move(sol));
}

PackingSolution validate_packing(PackingSolution sol, int word_len) {
    GroupContext ctx = GroupContext::create(sol.p1, sol.p2, sol.translation_class, sol.xi);
    OrbitScan scan = orbit_neighbors(ctx, sol.K, word_len, 2.5 * sol.xi);
    sol.active_constraints.clear();
    for (const OrbitNeighbor& n : scan.neighbors) {
        if (n.distance < 2 * sol.rho - 1e-7) throw OverlapError(n.word, n.distance);
        if (n.distance <= 2 * sol.rho + 1e-6) sol.active_constraints.push_back(n.word);
    }
    sol.validated = true;
    return sol;
}

SweepReport global_optimum(int p2, int p1_lo, int p1_hi, const std::vector<Site>& sites, Mode mode) {
    if (p1_lo > p1_hi) throw std::invalid_argument("empty p1 range");
    SweepReport report;
    report.description = mode_name(mode) + " sweep, p2=" + std::to_string(p2) + ", p1 in [" +
                         std::to_string(p1_lo) + "," + std::to_string(p1_hi) + "]";

    struct Task {
        int p1;
        Site site;
        TranslationClass cls;
    };
    std::vector<Task> tasks;
    for (int p1 = p1_lo; p1 <= p1_hi; ++p1) {
        if (!is_hyperbolic_signature(p1, p2)) continue;
        if (mode == Mode::Simply) {
            for (const auto& cls : dedupe_equivariant(enumerate_simply(p1, p2)))
                tasks.push_back({p1, Site::Interior, cls});
        } else {
            for (Site s : sites)
                for (const auto& cls : dedupe_equivariant(enumerate_multiply(p1, p2, s)))
                    tasks.push_back({p1, s, cls});
        }
    }

    report.rows.resize(tasks.size());
    auto run_task = [&](std::size_t idx) {
        const Task& t = tasks[idx];
        SweepRow row;
        row.p1 = t.p1;
        row.p2 = p2;
        row.site = t.site;
        row.cls = t.cls;
        try {
            PackingSolution sol = (mode == Mode::Simply)
                                      ? solve_simply(t.p1, p2, t.cls)
                                      : solve_multiply(t.p1, p2, t.site, t.cls);
            row.status = "ok";
            row.solution = std::move(sol);
        } catch (const OverlapError& e) {
            row.status = "overlap(" + e.word + ")";
        } catch (const std::exception& e) {
            row.status = std::string("unsolved(") + e.what() + ")";
        }
        report.rows[idx] = std::move(row);
    };

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                run_task(i);
        }));
    for (auto& f : pool) f.get();

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (r.solution && r.solution->validated &&
            (report.best < 0 || r.solution->density > report.rows[report.best].solution->density))
            report.best = static_cast<int>(i);
    }
    return report;
}

LimitResult limit_case(int p2, const TranslationClass& cls, Site site, Mode mode, bool odd_p1) {
    std::array<int, 3> levels = odd_p1 ? std::array<int, 3>{101, 201, 401}
                                       : std::array<int, 3>{100, 200, 400};
    std::array<double, 3> rho{}, vol{}, del{};
    for (int k = 0; k < 3; ++k) {
        PackingSolution s = (mode == Mode::Simply) ? solve_simply(levels[k], p2, cls)
                                                   : solve_multiply(levels[k], p2, site, cls);
        rho[k] = s.rho;
        vol[k] = s.vol_ball;
        del[k] = s.density;
    }
    auto richardson = [](const std::array<double, 3>& f, double& err) {
        double t1 = 2 * f[1] - f[0], t2 = 2 * f[2] - f[1];
        double ex = (4 * t2 - t1) / 3.0;
        err = std::abs(ex - t2);
        return ex;
    };
    LimitResult r;
    r.p1_levels = levels;
    r.rho = richardson(rho, r.err_rho);
    double err_vol;
    r.vol_ball = richardson(vol, err_vol);
    r.density = richardson(del, r.err_delta);
    return r;
}

}  // namespace h2xr
