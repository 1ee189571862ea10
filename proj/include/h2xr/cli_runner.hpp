#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "h2xr/report.hpp"
#include "h2xr/scene.hpp"

namespace h2xr {

// Exit code contract: 0 success / all-pass, 1 verification failure,
// 2 usage error, 3 solver failure.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSolverFailed = 3 };

struct RunConfig {
    std::string command;  // solve | table | verify | export-scene
    int p1 = 0, p2 = 0;
    int p1_lo = 0, p1_hi = 0;
    Mode mode = Mode::Simply;
    std::vector<Site> sites{Site::B};
    std::optional<TranslationClass> cls;
    std::optional<Site> site;
    OutputFormat format = OutputFormat::Markdown;
    double quadrature_tol = 1e-8;
    double newton_tol = 1e-10;
    int word_len = 8;
    int mesh_u = 48, mesh_v = 24;
    bool all_classes = false;    // table: emit every class row, not just best-per-signature
    double perturb_rho = 0.0;    // verify: negative-control offset on the first expectation
    bool skip_limits = false;    // verify: skip the slow limit rows
    std::string output_path;     // empty: stdout; relative paths resolve under
                                 // H2XR_PACK_OUTDIR when that variable is set
};

// Dispatch a parsed configuration; returns the process exit code.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace h2xr
