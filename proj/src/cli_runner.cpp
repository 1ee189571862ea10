#include "h2xr/cli_runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("H2XR_PACK_OUTDIR"); dir && *dir)
            p = std::filesystem::path(dir) / p;
    }
    return p;
}

int emit(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.output_path.empty()) {
        out << text;
        return kOk;
    }
    auto path = resolve_output(cfg.output_path);
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot open output file " << path << "\n";
        return kUsage;
    }
    f << text;
    return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!is_hyperbolic_signature(cfg.p1, cfg.p2)) {
        err << "error: (2," << cfg.p1 << "," << cfg.p2 << ") is not a hyperbolic signature\n";
        return kUsage;
    }
    Site site = cfg.site.value_or(Site::Interior);
    auto finish = [&](PackingSolution s) {
        if (cfg.word_len != 8) s = validate_packing(std::move(s), cfg.word_len);
        if (cfg.quadrature_tol != 1e-8) {
            s.vol_ball = ball_volume(s.rho, cfg.quadrature_tol);
            s.density = s.vol_ball / s.vol_dv;
        }
        if (s.full_system_residual > cfg.newton_tol * 100)
            throw NoConvergenceError("endpoint residual above the requested tolerance");
        return s;
    };
    std::vector<TranslationClass> candidates;
    if (cfg.cls) {
        candidates.push_back(*cfg.cls);
    } else {
        auto all = site == Site::Interior ? enumerate_simply(cfg.p1, cfg.p2)
                                          : enumerate_multiply(cfg.p1, cfg.p2, site);
        for (const auto& c : dedupe_equivariant(all)) candidates.push_back(c);
    }

    std::optional<PackingSolution> best;
    std::string last_error;
    for (const auto& c : candidates) {
        try {
            PackingSolution s = finish(site == Site::Interior
                                           ? solve_simply(cfg.p1, cfg.p2, c)
                                           : solve_multiply(cfg.p1, cfg.p2, site, c));
            if (!best || s.density > best->density) best = std::move(s);
        } catch (const OverlapError& e) {
            last_error = std::string("overlap at word '") + e.word + "'";
        } catch (const std::exception& e) {
            last_error = e.what();
        }
    }
    if (!best) {
        err << "error: no valid packing: " << last_error << "\n";
        return kSolverFailed;
    }
    return emit(render_solution(*best, cfg.format), cfg, out, err);
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.p1_lo <= 0 || cfg.p1_hi < cfg.p1_lo) {
        err << "error: empty or missing p1 range\n";
        return kUsage;
    }
    if (cfg.p2 < 3) {
        err << "error: p2 must be at least 3\n";
        return kUsage;
    }
    SweepReport rep = global_optimum(cfg.p2, cfg.p1_lo, cfg.p1_hi, cfg.sites, cfg.mode);

    std::vector<SweepRow> rows;
    int best_index = -1;
    if (cfg.all_classes) {
        rows = rep.rows;
        best_index = rep.best;
    } else {
        // one row per signature, the published table layout: pick the best
        // validated class (falling back to the first recorded failure)
        std::map<int, SweepRow> by_p1;
        for (const SweepRow& r : rep.rows) {
            auto it = by_p1.find(r.p1);
            bool better = it == by_p1.end();
            if (!better && r.solution &&
                (!it->second.solution || r.solution->density > it->second.solution->density))
                better = true;
            if (better) by_p1.insert_or_assign(r.p1, r);
        }
        for (auto& [p1, row] : by_p1) rows.push_back(row);
        double best_d = -1.0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].solution && rows[i].solution->density > best_d) {
                best_d = rows[i].solution->density;
                best_index = static_cast<int>(i);
            }
    }
    return emit(render_rows(rows, cfg.format, best_index), cfg, out, err);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    VerifyOptions opt;
    opt.perturb_rho = cfg.perturb_rho;
    opt.include_limits = !cfg.skip_limits;
    VerifyOutcome res = run_verify(opt);
    std::ostringstream text;
    text << res.text;
    text << "checked " << res.checked << ", passed " << res.passed << ", failed " << res.failed
         << ", skipped " << res.skipped << "\n";
    if (!res.ok())
        text << "worst offender: " << res.worst_offender << " (diff " << res.worst_diff << ")\n";
    int rc = emit(text.str(), cfg, out, err);
    if (rc != kOk) return rc;
    return res.ok() ? kOk : kVerifyFailed;
}

int cmd_export_scene(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!is_hyperbolic_signature(cfg.p1, cfg.p2)) {
        err << "error: (2," << cfg.p1 << "," << cfg.p2 << ") is not a hyperbolic signature\n";
        return kUsage;
    }
    Site site = cfg.site.value_or(Site::Interior);
    if (!cfg.cls) {
        err << "error: export-scene requires --class\n";
        return kUsage;
    }
    try {
        PackingSolution s = site == Site::Interior
                                ? solve_simply(cfg.p1, cfg.p2, *cfg.cls)
                                : solve_multiply(cfg.p1, cfg.p2, site, *cfg.cls);
        SceneExport scene = build_scene(s, cfg.word_len, cfg.mesh_u, cfg.mesh_v);
        std::ostringstream buf;
        write_scene(scene, buf);
        return emit(buf.str(), cfg, out, err);
    } catch (const OverlapError& e) {
        err << "error: configuration overlaps at word '" << e.word << "'\n";
        return kSolverFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailed;
    }
}
}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.quadrature_tol <= 0 || cfg.newton_tol <= 0 || cfg.word_len < 1) {
            err << "error: tolerances must be positive and word length at least 1\n";
            return kUsage;
        }
        if (cfg.command == "solve") return cmd_solve(cfg, out, err);
        if (cfg.command == "table") return cmd_table(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "export-scene") return cmd_export_scene(cfg, out, err);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsage;
    } catch (const NonHyperbolicError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailed;
    }
}

}  // namespace h2xr
