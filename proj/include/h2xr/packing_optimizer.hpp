#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h2xr/frobenius.hpp"
#include "h2xr/h2xr_geometry.hpp"
#include "h2xr/screw_group.hpp"

namespace h2xr {

struct PackingSolution {
    int p1 = 0, p2 = 0;
    KernelSite kernel_site;
    TranslationClass translation_class;
    H2xRPoint K;
    double kernel_r = 0.0, kernel_alpha = 0.0;
    double rho = 0.0;       // ball radius
    double xi = 0.0;        // fibre lattice parameter (= 2 rho at accepted optima)
    double vol_ball = 0.0;
    double vol_dv = 0.0;    // area * xi * stabilizer order
    double density = 0.0;
    double full_system_residual = 0.0;  // max |F| of the assembled 9-equation system
    std::vector<std::string> active_constraints;  // words touching at distance 2 rho
    bool validated = false;

    int stabilizer_order() const { return kernel_site.stabilizer_order(p1, p2); }
};

// Interior kernel: damped Newton on the reduced system
//   d(K, K^{g_i hat}) = xi sqrt(1 - r_i^2),  i = 0,1,2
// over (r, alpha, xi), multi-started on a barycentric grid over the open
// triangle. The full endpoint system is assembled afterwards and must vanish
// within 1e-8. The result is validated against the orbit scan.
PackingSolution solve_simply(int p1, int p2, const TranslationClass& cls);

// Kernel pinned at a vertex: maximize
//   delta(xi) = Vol(B(rho(xi))) / (area * xi * stab)
// with rho(xi) = min(xi, d(K, K^{g_i hat}))/2 over the non-stabilizing
// generator images, by golden section; at the optimum the fibre lattice
// neighbour touches (xi = 2 rho). Validation may reject with OverlapError.
PackingSolution solve_multiply(int p1, int p2, Site site, const TranslationClass& cls);

// Full orbit-word scan; throws OverlapError with the offending word if any
// non-stabilizing image lies closer than 2 rho - 1e-7. Returns the solution
// with active (touching) constraints recorded and validated set.
PackingSolution validate_packing(PackingSolution sol, int word_len = 8);

struct SweepRow {
    int p1 = 0, p2 = 0;
    Site site = Site::Interior;
    TranslationClass cls;
    std::string status;  // "ok", "overlap(<word>)", "unsolved(...)"
    std::optional<PackingSolution> solution;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    int best = -1;  // index of the maximal validated density
    std::string description;

    const SweepRow* best_row() const { return best >= 0 ? &rows[best] : nullptr; }
};

enum class Mode { Simply, Multiply };

Mode parse_mode(const std::string& name);
std::string mode_name(Mode m);

// Solve every (p1, class[, site]) combination over p1 in [p1_lo, p1_hi],
// classes deduplicated by sign equivariance; individual failures are
// recorded per row and never abort the sweep. Rows run concurrently.
SweepReport global_optimum(int p2, int p1_lo, int p1_hi, const std::vector<Site>& sites, Mode mode);

struct LimitResult {
    double rho = 0.0, vol_ball = 0.0, density = 0.0;
    double err_rho = 0.0, err_delta = 0.0;  // Richardson error estimates
    std::array<int, 3> p1_levels{};
};

// p1 -> infinity degeneration, computed by Richardson extrapolation over
// three doubling p1 levels (even: 100/200/400, odd: 101/201/401).
LimitResult limit_case(int p2, const TranslationClass& cls, Site site, Mode mode,
                       bool odd_p1 = false);

}  // namespace h2xr
