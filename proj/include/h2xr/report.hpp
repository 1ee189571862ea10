#pragma once

#include <iosfwd>
#include <string>

#include "h2xr/packing_optimizer.hpp"
#include "h2xr/reference_tables.hpp"

namespace h2xr {

enum class OutputFormat { Csv, Markdown, Json };

OutputFormat parse_format(const std::string& name);

// Fixed CSV column set: p0,p1,p2,site,class,rho,xi,vol_ball,vol_dv,delta,status
std::string render_rows(const std::vector<SweepRow>& rows, OutputFormat fmt, int best_index);
std::string render_solution(const PackingSolution& sol, OutputFormat fmt);

std::string solution_to_json_text(const PackingSolution& sol);
PackingSolution solution_from_json_text(const std::string& text);

struct VerifyOptions {
    double perturb_rho = 0.0;   // added to the first expectation, negative control
    bool include_limits = true; // limit rows are slow (three large-p1 solves each)
    double tol_rho = 5e-5;
    double tol_delta = 5e-5;
    double tol_vol_rel = 1e-4;
    double tol_limit = 1e-3;    // delta gate for limit rows
};

struct VerifyOutcome {
    int checked = 0, passed = 0, failed = 0, skipped = 0;
    std::string worst_offender;
    double worst_diff = 0.0;
    std::string text;  // per-row report
    bool ok() const { return failed == 0; }
};

VerifyOutcome run_verify(const VerifyOptions& opt);

}  // namespace h2xr
