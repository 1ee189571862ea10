#include "h2xr/scene.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include <json.hpp>

namespace h2xr {

namespace {
constexpr double kPi = std::numbers::pi;

// Sphere mesh around `centre`: shoot unit geodesics from the centre in every
// grid direction and walk distance rho. Every vertex is therefore at distance
// rho from the centre by construction.
std::vector<std::array<double, 4>> sphere_mesh(const H2xRPoint& centre, double rho, int nu, int nv) {
    H2Isometry back = translate_to_origin(centre.base).inverse();
    std::vector<std::array<double, 4>> mesh;
    mesh.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        double u = -kPi + 2 * kPi * (i + 1) / nu;  // (-pi, pi]
        for (int j = 0; j < nv; ++j) {
            double v = -kPi / 2 + kPi * j / (nv - 1.0);
            H2xRPoint p = geodesic_point({u, v, rho}, rho);
            H2xRPoint world{back.apply(p.base), p.t + centre.t};
            mesh.push_back(world.projective());
        }
    }
    return mesh;
}
}  // namespace

SceneExport build_scene(const PackingSolution& sol, int word_len, int mesh_u, int mesh_v) {
    SceneExport scene;
    scene.p1 = sol.p1;
    scene.p2 = sol.p2;
    scene.site = sol.kernel_site.site;
    scene.translation_class = sol.translation_class;
    scene.rho = sol.rho;
    scene.xi = sol.xi;
    scene.delta = sol.density;
    scene.mesh_u = mesh_u;
    scene.mesh_v = mesh_v;

    TriangleGeometry tri = triangle_vertices(sol.p1, sol.p2);
    scene.triangle = {H2xRPoint{tri.A, 0.0}.projective(), H2xRPoint{tri.B, 0.0}.projective(),
                      H2xRPoint{tri.C, 0.0}.projective()};

    scene.balls.push_back(
        {sol.K.projective(), sol.rho, "", sphere_mesh(sol.K, sol.rho, mesh_u, mesh_v)});

    GroupContext ctx = GroupContext::create(sol.p1, sol.p2, sol.translation_class, sol.xi);
    OrbitScan scan = orbit_neighbors(ctx, sol.K, word_len, 2.5 * sol.xi);
    for (const OrbitNeighbor& n : scan.neighbors)
        scene.balls.push_back({n.point.projective(), sol.rho, n.word,
                               sphere_mesh(n.point, sol.rho, mesh_u, mesh_v)});
    return scene;
}

void write_scene(const SceneExport& scene, std::ostream& out) {
    nlohmann::json j;
    j["model"] = scene.model;
    j["signature"] = {2, scene.p1, scene.p2};
    j["site"] = site_name(scene.site);
    j["class"] = scene.translation_class.str();
    j["rho"] = scene.rho;
    j["xi"] = scene.xi;
    j["delta"] = scene.delta;
    j["triangle"] = {scene.triangle[0], scene.triangle[1], scene.triangle[2]};
    j["mesh_grid"] = {scene.mesh_u, scene.mesh_v};
    nlohmann::json balls = nlohmann::json::array();
    for (const SceneBall& b : scene.balls) {
        nlohmann::json jb;
        jb["center"] = b.center;
        jb["rho"] = b.rho;
        jb["word"] = b.word;
        jb["mesh"] = b.mesh;
        balls.push_back(std::move(jb));
    }
    j["balls"] = std::move(balls);
    out << j.dump() << "\n";
}

}  // namespace h2xr
