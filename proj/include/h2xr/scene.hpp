#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "h2xr/packing_optimizer.hpp"

namespace h2xr {

// Self-describing scene file for external viewers: ball centres in projective
// coordinates (1, x, y, z) with sphere meshes sampled on a geographic grid.
struct SceneBall {
    std::array<double, 4> center;
    double rho = 0.0;
    std::string word;  // group word that produced this centre ("" for the kernel)
    std::vector<std::array<double, 4>> mesh;  // mesh_u * mesh_v samples
};

struct SceneExport {
    std::string model = "projective-H2xR";
    int p1 = 0, p2 = 0;
    Site site = Site::Interior;
    TranslationClass translation_class;
    double rho = 0.0, xi = 0.0, delta = 0.0;
    std::array<std::array<double, 4>, 3> triangle{};  // A, B, C
    int mesh_u = 48, mesh_v = 24;
    std::vector<SceneBall> balls;
};

SceneExport build_scene(const PackingSolution& sol, int word_len = 8, int mesh_u = 48,
                        int mesh_v = 24);

void write_scene(const SceneExport& scene, std::ostream& out);

}  // namespace h2xr
