#include "h2xr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct RowCells {
    std::string p0 = "2", p1, p2, site, cls, rho, xi, vol_ball, vol_dv, delta, status;
};

RowCells cells_of(const SweepRow& row, bool is_best) {
    RowCells c;
    c.p1 = std::to_string(row.p1);
    c.p2 = std::to_string(row.p2);
    c.site = site_name(row.site);
    c.cls = row.cls.str();
    if (row.solution) {
        const PackingSolution& s = *row.solution;
        c.rho = fmt6(s.rho);
        c.xi = fmt6(s.xi);
        c.vol_ball = fmt6(s.vol_ball);
        c.vol_dv = fmt6(s.vol_dv);
        c.delta = fmt6(s.density);
    } else {
        c.rho = c.xi = c.vol_ball = c.vol_dv = c.delta = "-";
    }
    c.status = row.status;
    // large-ball remark: the sphere parametrization stays injective, but
    // radii beyond pi are worth calling out in reports
    if (row.solution && row.solution->rho > std::numbers::pi) c.status += " [rho>pi]";
    if (is_best) c.status += " *best*";
    return c;
}
}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("format must be csv, markdown or json");
}

std::string render_rows(const std::vector<SweepRow>& rows, OutputFormat fmt, int best_index) {
    std::ostringstream out;
    if (fmt == OutputFormat::Csv) {
        out << "p0,p1,p2,site,class,rho,xi,vol_ball,vol_dv,delta,status\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            RowCells c = cells_of(rows[i], (int)i == best_index);
            out << c.p0 << ',' << c.p1 << ',' << c.p2 << ',' << c.site << ','
                << csv_quote(c.cls) << ',' << c.rho << ',' << c.xi << ',' << c.vol_ball << ','
                << c.vol_dv << ',' << c.delta << ',' << csv_quote(c.status) << "\n";
        }
    } else if (fmt == OutputFormat::Markdown) {
        out << "| (p0,p1,p2) | site | class | rho | xi | Vol(B) | Vol(D) | delta | status |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            RowCells c = cells_of(rows[i], (int)i == best_index);
            out << "| (2," << c.p1 << ',' << c.p2 << ") | " << c.site << " | " << c.cls << " | "
                << c.rho << " | " << c.xi << " | " << c.vol_ball << " | " << c.vol_dv << " | "
                << c.delta << " | " << c.status << " |\n";
        }
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            nlohmann::json o{{"p0", 2},      {"p1", r.p1},
                             {"p2", r.p2},   {"site", site_name(r.site)},
                             {"class", r.cls.str()}, {"status", r.status},
                             {"best", (int)i == best_index}};
            if (r.solution) o["solution"] = nlohmann::json::parse(solution_to_json_text(*r.solution));
            j.push_back(o);
        }
        out << j.dump(2) << "\n";
    }
    return out.str();
}

std::string render_solution(const PackingSolution& s, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return solution_to_json_text(s) + "\n";
    std::ostringstream out;
    auto proj = s.K.projective();
    if (fmt == OutputFormat::Markdown) {
        out << "signature (2," << s.p1 << ',' << s.p2 << "), kernel " << site_name(s.kernel_site.site)
            << ", class " << s.translation_class.str() << "\n"
            << "rho      = " << fmt6(s.rho) << "\n"
            << "xi       = " << fmt6(s.xi) << "\n"
            << "K        = [" << fmt6(proj[0]) << ", " << fmt6(proj[1]) << ", " << fmt6(proj[2])
            << ", " << fmt6(proj[3]) << "]  (r=" << fmt6(s.kernel_r)
            << ", alpha=" << fmt6(s.kernel_alpha) << ")\n"
            << "Vol(B)   = " << fmt6(s.vol_ball) << "\n"
            << "Vol(D)   = " << fmt6(s.vol_dv) << "\n"
            << "delta    = " << fmt6(s.density) << "\n"
            << "residual = " << fmt6(s.full_system_residual) << "\n"
            << "touching = ";
        for (std::size_t i = 0; i < s.active_constraints.size(); ++i)
            out << (i ? ", " : "") << s.active_constraints[i];
        out << "\n";
    } else {
        SweepRow row{s.p1, s.p2, s.kernel_site.site, s.translation_class, "ok", s};
        out << render_rows({row}, OutputFormat::Csv, -1);
    }
    return out.str();
}

std::string solution_to_json_text(const PackingSolution& s) {
    nlohmann::json j;
    j["p0"] = 2;
    j["p1"] = s.p1;
    j["p2"] = s.p2;
    j["site"] = site_name(s.kernel_site.site);
    j["class"] = s.translation_class.str();
    j["kernel"] = {{"r", s.kernel_r}, {"alpha", s.kernel_alpha}, {"t", s.K.t}};
    j["rho"] = s.rho;
    j["xi"] = s.xi;
    j["vol_ball"] = s.vol_ball;
    j["vol_dv"] = s.vol_dv;
    j["delta"] = s.density;
    j["residual"] = s.full_system_residual;
    j["active_constraints"] = s.active_constraints;
    j["validated"] = s.validated;
    return j.dump(2);
}

PackingSolution solution_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PackingSolution s;
    s.p1 = j.at("p1").get<int>();
    s.p2 = j.at("p2").get<int>();
    s.kernel_site = {parse_site(j.at("site").get<std::string>())};
    s.translation_class = parse_translation_class(j.at("class").get<std::string>());
    s.kernel_r = j.at("kernel").at("r").get<double>();
    s.kernel_alpha = j.at("kernel").at("alpha").get<double>();
    s.K = {H2Point::polar(s.kernel_r, s.kernel_alpha), j.at("kernel").at("t").get<double>()};
    s.rho = j.at("rho").get<double>();
    s.xi = j.at("xi").get<double>();
    s.vol_ball = j.at("vol_ball").get<double>();
    s.vol_dv = j.at("vol_dv").get<double>();
    s.density = j.at("delta").get<double>();
    s.full_system_residual = j.at("residual").get<double>();
    s.active_constraints = j.at("active_constraints").get<std::vector<std::string>>();
    s.validated = j.at("validated").get<bool>();
    return s;
}

namespace {
struct RowCheck {
    bool pass = true, skip = false;
    double worst = 0.0;
    std::string detail;
};

RowCheck check_row(const ReferenceRow& row, const VerifyOptions& opt, double rho_offset) {
    RowCheck rc;
    TranslationClass cls = parse_translation_class(row.cls);
    double exp_rho = row.rho + rho_offset;
    char buf[256];
    try {
        double got_rho, got_vol, got_delta;
        if (row.limit) {
            LimitResult lim = limit_case(row.p2, cls, row.site, row.mode, row.odd_p1);
            got_rho = lim.rho;
            got_vol = lim.vol_ball;
            got_delta = lim.density;
            double dd = std::abs(got_delta - (row.delta + 0.0));
            rc.worst = dd;
            rc.pass = dd <= opt.tol_limit && std::abs(got_rho - exp_rho) <= opt.tol_limit;
            std::snprintf(buf, sizeof buf,
                          "limit: rho %.6f vs %.6f, delta %.6f vs %.6f (est err %.1e)",
                          got_rho, exp_rho, got_delta, row.delta, lim.err_delta);
            rc.detail = buf;
            return rc;
        }
        PackingSolution s = row.mode == Mode::Simply
                                ? solve_simply(row.p1, row.p2, cls)
                                : solve_multiply(row.p1, row.p2, row.site, cls);
        got_rho = s.rho;
        got_vol = s.vol_ball;
        got_delta = s.density;
        double d_rho = std::abs(got_rho - exp_rho);
        double d_delta = std::abs(got_delta - row.delta);
        // relative, but never tighter than the five printed decimals
        double d_vol = std::abs(got_vol - row.vol_ball) /
                       std::max(1.2e-5 / opt.tol_vol_rel, std::abs(row.vol_ball));
        rc.worst = std::max({d_rho, d_delta, d_vol});
        rc.pass = d_rho <= opt.tol_rho && d_delta <= opt.tol_delta && d_vol <= opt.tol_vol_rel;
        std::snprintf(buf, sizeof buf,
                      "rho %.6f vs %.6f (d=%.1e), vol %.5f vs %.5f (rel=%.1e), delta %.6f vs %.6f (d=%.1e)",
                      got_rho, exp_rho, d_rho, got_vol, row.vol_ball, d_vol, got_delta, row.delta,
                      d_delta);
        rc.detail = buf;
    } catch (const std::exception& e) {
        rc.pass = false;
        rc.detail = std::string("recompute failed: ") + e.what();
        rc.worst = 1.0;
    }
    if (row.erratum) {
        rc.skip = true;
        rc.detail += std::string(" [skipped, flagged row: ") + row.note + "]";
    }
    return rc;
}
}  // namespace

VerifyOutcome run_verify(const VerifyOptions& opt) {
    VerifyOutcome out;
    std::ostringstream text;
    bool first = true;
    for (const ReferenceRow& row : reference_rows()) {
        if (row.limit && !opt.include_limits) continue;
        double offset = first ? opt.perturb_rho : 0.0;
        first = false;
        ++out.checked;
        RowCheck rc = check_row(row, opt, offset);
        std::string label = "(2," + (row.p1 ? std::to_string(row.p1) : std::string("inf")) + "," +
                            std::to_string(row.p2) + ") " + site_name(row.site) + " " + row.cls;
        if (rc.skip) {
            ++out.skipped;
            text << "SKIP " << label << ": " << rc.detail << "\n";
        } else if (rc.pass) {
            ++out.passed;
            text << "ok   " << label << ": " << rc.detail << "\n";
        } else {
            ++out.failed;
            text << "FAIL " << label << ": " << rc.detail << "\n";
            if (rc.worst > out.worst_diff) {
                out.worst_diff = rc.worst;
                out.worst_offender = label;
            }
        }
    }

    // worked example: the nine unknowns of the solved (2,6,4) record case
    {
        ReferenceExample ex;
        ++out.checked;
        try {
            PackingSolution s = solve_simply(6, 4, parse_translation_class("0,1/2,1/2"));
            GroupContext ctx = GroupContext::create(6, 4, s.translation_class, s.xi);
            H2Isometry T = translate_to_origin(s.K.base);
            double uv[6];
            for (int i = 0; i < 3; ++i) {
                H2xRPoint img = ctx.generator(i).apply(s.K);
                H2xRPoint timg{T.apply(img.base), img.t};
                GeodesicShot shot = solve_shot({H2Point::origin(), 0.0}, timg);
                uv[2 * i] = shot.u;
                uv[2 * i + 1] = shot.v;
            }
            double expect[9] = {ex.u0, ex.v0, ex.u1, ex.v1, ex.u2, ex.v2, ex.r, ex.alpha, ex.xi};
            double got[9] = {uv[0], uv[1], uv[2], uv[3], uv[4], uv[5],
                             s.kernel_r, s.kernel_alpha, s.xi};
            double worst = 0.0;
            for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(got[i] - expect[i]));
            bool ok = worst <= opt.tol_rho && s.full_system_residual < 1e-8 &&
                      std::abs(s.vol_dv - ex.vol_dv) <= 1e-4;
            if (ok) {
                ++out.passed;
                text << "ok   worked example (2,6,4): nine-state max diff " << fmt6(worst)
                     << ", residual " << fmt6(s.full_system_residual) << "\n";
            } else {
                ++out.failed;
                text << "FAIL worked example (2,6,4): nine-state max diff " << fmt6(worst) << "\n";
                if (worst > out.worst_diff) {
                    out.worst_diff = worst;
                    out.worst_offender = "worked example (2,6,4)";
                }
            }
        } catch (const std::exception& e) {
            ++out.failed;
            text << "FAIL worked example (2,6,4): " << e.what() << "\n";
        }
    }

    // worked enumeration: translation classes of (2,6,4)
    {
        ++out.checked;
        std::set<TranslationClass> expect;
        for (const char* c : {"0,0,0", "0,1/2,1/2", "1/2,0,1/2", "1/2,1/2,0"})
            expect.insert(parse_translation_class(c));
        bool ok = dedupe_equivariant(enumerate_simply(6, 4)) == expect;
        if (ok) {
            ++out.passed;
            text << "ok   translation classes of (2,6,4)\n";
        } else {
            ++out.failed;
            text << "FAIL translation classes of (2,6,4)\n";
        }
    }

    out.text = text.str();
    return out;
}

}  // namespace h2xr
