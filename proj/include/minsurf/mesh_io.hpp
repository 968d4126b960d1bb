#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "minsurf/analytic_kernel.hpp"
#include "minsurf/types.hpp"
#include "minsurf/verifier.hpp"

namespace minsurf {

enum class VariantKind { Plain, Tilde, Conjugate, Associated };

struct Variant {
    VariantKind kind = VariantKind::Plain;
    AssociatedParam lambda;  // used by Associated only

    static Variant plain() { return {}; }
    static Variant tilde() { return {VariantKind::Tilde, {}}; }
    static Variant conjugate() { return {VariantKind::Conjugate, {}}; }
    static Variant associated(AssociatedParam lam) { return {VariantKind::Associated, lam}; }
};

/// Row-major samples: index r * nv + c holds (u_r, v_c). The grid isolines
/// are curvature lines because the coordinates are isothermic.
struct MeshGrid {
    GridSpec grid;
    Variant variant;
    double theta = 0.0;
    std::vector<SurfacePoint> positions;
    std::vector<Vec3> normals;

    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * grid.nv + c; }
};

/// Throws DomainError for the plain or associated variant at an endpoint.
MeshGrid sample_grid(const ShapeParam& p, const GridSpec& grid, const Variant& variant = {});

/// ASCII OBJ: "v" lines, then "vn", then quads "f a//a b//b c//c d//d".
void export_obj(const MeshGrid& mesh, const std::filesystem::path& path);

/// Vertices and normals of an OBJ written by export_obj (faces are skipped).
struct ObjData {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;
    std::vector<std::array<int, 4>> faces;
};
ObjData import_obj(const std::filesystem::path& path);

/// Binary little-endian PLY with float64 x y z nx ny nz and quad faces.
void export_ply(const MeshGrid& mesh, const std::filesystem::path& path);
ObjData import_ply(const std::filesystem::path& path);

/// CSV with header "u,v,x1,x2,x3,n1,n2,n3", one row per grid vertex.
void export_csv(const MeshGrid& mesh, const std::filesystem::path& path);

/// Sampled curvature lines of the surface, header "u,v,x1,x2,x3".
struct LineSpec {
    GridSpec domain;
    int u_lines = 5;
    int v_lines = 5;
    int samples = 65;
};
void export_lines_csv(const ShapeParam& p, const LineSpec& spec, const std::filesystem::path& path,
                      const Variant& variant = {});

struct MorphSpec {
    double theta_start = kThetaMin;
    double theta_end = kThetaMax;
    int frames = 2;
    GridSpec grid{-2.0, 2.0, -kPi, kPi, 129, 129};
    bool conjugate = false;

    void validate() const;
    double theta_at(int frame) const;
};

struct MorphResult {
    std::vector<std::filesystem::path> files;
    std::vector<double> thetas;
    /// Sup-distance between consecutive frames; size frames - 1.
    std::vector<double> adjacent_sup;
};

/// One OBJ per frame, named frame_%04d.obj, of the tilde family (or the
/// scaled conjugate family). Frames are generated concurrently.
MorphResult morph_frames(const MorphSpec& spec, const std::filesystem::path& out_dir);

/// Frame positions without writing files.
MeshGrid morph_frame(const MorphSpec& spec, int frame);

/// 17 significant digits.
std::string format_double(double x);

}  // namespace minsurf
