#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "h2xr/cli_runner.hpp"

namespace {
// "5..12" or a single "5"
bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return true;
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"densest geodesic ball packings of screw-motion groups in H2xR"};
    app.set_config("--config", "", "read options from a config file (flags win)");
    app.require_subcommand(1);

    h2xr::RunConfig cfg;
    std::string cls_text, site_text, sites_text = "B", mode_text = "simply", format_text = "markdown";
    std::string range_text;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--format", format_text, "csv, markdown or json");
        sub->add_option("--out", cfg.output_path, "output file (default: stdout)");
        sub->add_option("--quadrature-tol", cfg.quadrature_tol, "ball volume quadrature tolerance");
        sub->add_option("--newton-tol", cfg.newton_tol, "root-finder residual tolerance");
        sub->add_option("--word-len", cfg.word_len, "orbit word length for validation");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve one (p1, p2[, site][, class]) case");
    solve->add_option("--p1", cfg.p1)->required();
    solve->add_option("--p2", cfg.p2)->required();
    solve->add_option("--site", site_text, "kernel site: interior, A, B or C");
    solve->add_option("--class", cls_text, "translation class r0,r1,r2 (e.g. 0,1/2,1/2)");
    add_common(solve);

    CLI::App* table = app.add_subcommand("table", "sweep p1 and reproduce a density table");
    table->add_option("--p2", cfg.p2)->required();
    table->add_option("--p1", range_text, "p1 range, e.g. 5..12")->required();
    table->add_option("--mode", mode_text, "simply or multiply");
    table->add_option("--site", sites_text, "comma list of kernel sites (multiply mode)");
    table->add_flag("--all-classes", cfg.all_classes, "emit every class row");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "recompute embedded reference rows");
    verify->add_flag("--skip-limits", cfg.skip_limits, "skip the slow limit rows");
    verify->add_option("--perturb-first-rho", cfg.perturb_rho,
                       "offset the first expectation (negative control)");
    add_common(verify);

    CLI::App* scene = app.add_subcommand("export-scene", "write a packing scene file");
    scene->add_option("--p1", cfg.p1)->required();
    scene->add_option("--p2", cfg.p2)->required();
    scene->add_option("--site", site_text);
    scene->add_option("--class", cls_text)->required();
    scene->add_option("--mesh-u", cfg.mesh_u, "mesh resolution around the fibre");
    scene->add_option("--mesh-v", cfg.mesh_v, "mesh resolution along latitude");
    add_common(scene);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : h2xr::kUsage;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = h2xr::parse_format(format_text);
        cfg.mode = h2xr::parse_mode(mode_text);
        if (!cls_text.empty()) cfg.cls = h2xr::parse_translation_class(cls_text);
        if (!site_text.empty()) cfg.site = h2xr::parse_site(site_text);
        cfg.sites.clear();
        std::string token;
        for (char c : sites_text + ",") {
            if (c == ',') {
                if (!token.empty()) cfg.sites.push_back(h2xr::parse_site(token));
                token.clear();
            } else {
                token += c;
            }
        }
        if (cfg.command == "table" && !parse_range(range_text, cfg.p1_lo, cfg.p1_hi)) {
            std::cerr << "error: bad p1 range '" << range_text << "'\n";
            return h2xr::kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return h2xr::kUsage;
    }

    return h2xr::run_command(cfg, std::cout, std::cerr);
}
