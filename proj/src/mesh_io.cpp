#include "minsurf/mesh_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "minsurf/surface_family.hpp"

namespace minsurf {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    }
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot read '{}'", path.string()));
    }
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
    }
}

FrameJet variant_jet(const ShapeParam& p, const Variant& variant, double u, double v) {
    switch (variant.kind) {
        case VariantKind::Plain: return x_theta_jet(p, u, v);
        case VariantKind::Tilde: return x_tilde_jet(p, u, v);
        case VariantKind::Associated:
            if (p.is_endpoint()) {
                throw DomainError("associated family undefined at plane endpoints");
            }
            return associated_jet(p, variant.lambda, u, v);
        case VariantKind::Conjugate: {
            // The associated family shares the Gauss map, so the normal is
            // that of X^theta (or of the plane at the endpoints).
            FrameJet j = p.is_endpoint() ? x_tilde_jet(p, u, v) : x_theta_jet(p, u, v);
            j.X = x_conjugate(p, u, v);
            return j;
        }
    }
    throw DomainError("unknown variant");
}

template <class T>
void put_le(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& in) {
    std::array<char, sizeof(T)> bytes;
    in.read(bytes.data(), bytes.size());
    if (!in) {
        throw std::runtime_error("truncated PLY body");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

std::size_t face_count(const GridSpec& g) { return static_cast<std::size_t>(g.nu - 1) * (g.nv - 1); }

// Counter-clockwise about Xu x Xv: (r,c) -> (r+1,c) -> (r+1,c+1) -> (r,c+1).
template <class F>
void for_each_quad(const MeshGrid& mesh, F&& f) {
    for (int r = 0; r + 1 < mesh.grid.nu; ++r) {
        for (int c = 0; c + 1 < mesh.grid.nv; ++c) {
            f(std::array<std::size_t, 4>{mesh.index(r, c), mesh.index(r + 1, c), mesh.index(r + 1, c + 1),
                                         mesh.index(r, c + 1)});
        }
    }
}

}  // namespace

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

MeshGrid sample_grid(const ShapeParam& p, const GridSpec& grid, const Variant& variant) {
    grid.validate();
    MeshGrid mesh;
    mesh.grid = grid;
    mesh.variant = variant;
    mesh.theta = p.theta();
    mesh.positions.reserve(static_cast<std::size_t>(grid.nu) * grid.nv);
    mesh.normals.reserve(mesh.positions.capacity());
    for (int r = 0; r < grid.nu; ++r) {
        for (int c = 0; c < grid.nv; ++c) {
            const FrameJet j = variant_jet(p, variant, grid.u(r), grid.v(c));
            mesh.positions.push_back(j.X);
            mesh.normals.push_back(j.N);
        }
    }
    return mesh;
}

void export_obj(const MeshGrid& mesh, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << fmt::format("# minsurf theta={} grid {}\n", format_double(mesh.theta), mesh.grid.describe());
    for (const Vec3& x : mesh.positions) {
        out << fmt::format("v {} {} {}\n", format_double(x.x()), format_double(x.y()), format_double(x.z()));
    }
    for (const Vec3& n : mesh.normals) {
        out << fmt::format("vn {} {} {}\n", format_double(n.x()), format_double(n.y()), format_double(n.z()));
    }
    for_each_quad(mesh, [&](const std::array<std::size_t, 4>& q) {
        out << fmt::format("f {0}//{0} {1}//{1} {2}//{2} {3}//{3}\n", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1);
    });
    finish(out, path);
}

ObjData import_obj(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    ObjData data;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v" || tag == "vn") {
            Vec3 w;
            ls >> w.x() >> w.y() >> w.z();
            if (!ls) {
                throw std::runtime_error(fmt::format("malformed OBJ line '{}'", line));
            }
            (tag == "v" ? data.vertices : data.normals).push_back(w);
        } else if (tag == "f") {
            std::array<int, 4> face{};
            for (int& idx : face) {
                std::string token;
                ls >> token;
                idx = std::stoi(token.substr(0, token.find('/')));
            }
            data.faces.push_back(face);
        }
    }
    return data;
}

void export_ply(const MeshGrid& mesh, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path, std::ios::out | std::ios::binary);
    out << "ply\n"
        << "format binary_little_endian 1.0\n"
        << "comment minsurf theta=" << format_double(mesh.theta) << "\n"
        << "element vertex " << mesh.positions.size() << "\n"
        << "property double x\nproperty double y\nproperty double z\n"
        << "property double nx\nproperty double ny\nproperty double nz\n"
        << "element face " << face_count(mesh.grid) << "\n"
        << "property list uchar int vertex_indices\n"
        << "end_header\n";
    for (std::size_t i = 0; i < mesh.positions.size(); ++i) {
        for (int a = 0; a < 3; ++a) {
            put_le(out, mesh.positions[i](a));
        }
        for (int a = 0; a < 3; ++a) {
            put_le(out, mesh.normals[i](a));
        }
    }
    for_each_quad(mesh, [&](const std::array<std::size_t, 4>& q) {
        put_le(out, static_cast<std::uint8_t>(4));
        for (std::size_t idx : q) {
            put_le(out, static_cast<std::int32_t>(idx));
        }
    });
    finish(out, path);
}

ObjData import_ply(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path, std::ios::in | std::ios::binary);
    std::string line;
    std::size_t vertices = 0;
    std::size_t faces = 0;
    if (!std::getline(in, line) || line != "ply") {
        throw std::runtime_error("not a PLY file");
    }
    while (std::getline(in, line) && line != "end_header") {
        std::istringstream ls(line);
        std::string key, element;
        ls >> key;
        if (key == "format" && line != "format binary_little_endian 1.0") {
            throw std::runtime_error("unsupported PLY format");
        }
        if (key == "element") {
            std::size_t count = 0;
            ls >> element >> count;
            (element == "vertex" ? vertices : faces) = count;
        }
    }
    ObjData data;
    for (std::size_t i = 0; i < vertices; ++i) {
        Vec3 x, n;
        for (int a = 0; a < 3; ++a) {
            x(a) = get_le<double>(in);
        }
        for (int a = 0; a < 3; ++a) {
            n(a) = get_le<double>(in);
        }
        data.vertices.push_back(x);
        data.normals.push_back(n);
    }
    for (std::size_t f = 0; f < faces; ++f) {
        if (get_le<std::uint8_t>(in) != 4) {
            throw std::runtime_error("expected quad faces");
        }
        std::array<int, 4> face{};
        for (int& idx : face) {
            idx = get_le<std::int32_t>(in);
        }
        data.faces.push_back(face);
    }
    return data;
}

void export_csv(const MeshGrid& mesh, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << "u,v,x1,x2,x3,n1,n2,n3\n";
    for (int r = 0; r < mesh.grid.nu; ++r) {
        for (int c = 0; c < mesh.grid.nv; ++c) {
            const Vec3& x = mesh.positions[mesh.index(r, c)];
            const Vec3& n = mesh.normals[mesh.index(r, c)];
            out << fmt::format("{},{},{},{},{},{},{},{}\n", format_double(mesh.grid.u(r)),
                               format_double(mesh.grid.v(c)), format_double(x.x()), format_double(x.y()),
                               format_double(x.z()), format_double(n.x()), format_double(n.y()),
                               format_double(n.z()));
        }
    }
    finish(out, path);
}

void export_lines_csv(const ShapeParam& p, const LineSpec& spec, const std::filesystem::path& path,
                      const Variant& variant) {
    spec.domain.validate();
    if (spec.u_lines < 0 || spec.v_lines < 0 || spec.samples < 2) {
        throw DomainError("line spec needs nonnegative line counts and at least two samples per line");
    }
    const GridSpec& d = spec.domain;
    auto spaced = [](double lo, double hi, int count, int n) {
        return count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * n / (count - 1);
    };
    std::ofstream out = open_for_write(path);
    out << "u,v,x1,x2,x3\n";
    auto emit = [&](double u, double v) {
        const Vec3 x = variant_jet(p, variant, u, v).X;
        out << fmt::format("{},{},{},{},{}\n", format_double(u), format_double(v), format_double(x.x()),
                           format_double(x.y()), format_double(x.z()));
    };
    for (int n = 0; n < spec.u_lines; ++n) {
        const double v = spaced(d.v_min, d.v_max, spec.u_lines, n);
        for (int m = 0; m < spec.samples; ++m) {
            emit(spaced(d.u_min, d.u_max, spec.samples, m), v);
        }
    }
    for (int n = 0; n < spec.v_lines; ++n) {
        const double u = spaced(d.u_min, d.u_max, spec.v_lines, n);
        for (int m = 0; m < spec.samples; ++m) {
            emit(u, spaced(d.v_min, d.v_max, spec.samples, m));
        }
    }
    finish(out, path);
}

void MorphSpec::validate() const {
    if (frames < 2) {
        throw DomainError("a morph needs at least two frames");
    }
    if (!(theta_start < theta_end)) {
        throw DomainError("morph requires theta_start < theta_end");
    }
    ShapeParam::from_theta(theta_start);
    ShapeParam::from_theta(theta_end);
    grid.validate();
}

double MorphSpec::theta_at(int frame) const {
    if (frame == frames - 1) {
        return theta_end;
    }
    return theta_start + (theta_end - theta_start) * frame / (frames - 1);
}

MeshGrid morph_frame(const MorphSpec& spec, int frame) {
    const ShapeParam p = ShapeParam::from_theta(spec.theta_at(frame));
    return sample_grid(p, spec.grid, spec.conjugate ? Variant::conjugate() : Variant::tilde());
}

MorphResult morph_frames(const MorphSpec& spec, const std::filesystem::path& out_dir) {
    spec.validate();
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error(fmt::format("cannot create directory '{}': {}", out_dir.string(), ec.message()));
    }

    MorphResult result;
    for (int f = 0; f < spec.frames; ++f) {
        result.files.push_back(out_dir / fmt::format("frame_{:04d}.obj", f));
        result.thetas.push_back(spec.theta_at(f));
    }

    // Frames are written in batches of the hardware concurrency; only the
    // previous frame's positions are kept for the continuity witness.
    const int batch = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<SurfacePoint> previous;
    for (int first = 0; first < spec.frames; first += batch) {
        const int last = std::min(spec.frames, first + batch);
        std::vector<std::future<std::vector<SurfacePoint>>> pending;
        for (int f = first; f < last; ++f) {
            pending.push_back(std::async(std::launch::async, [&spec, &result, f] {
                MeshGrid mesh = morph_frame(spec, f);
                export_obj(mesh, result.files[f]);
                return std::move(mesh.positions);
            }));
        }
        for (auto& fut : pending) {
            std::vector<SurfacePoint> current = fut.get();
            if (!previous.empty()) {
                double sup = 0.0;
                for (std::size_t i = 0; i < current.size(); ++i) {
                    sup = std::max(sup, (current[i] - previous[i]).norm());
                }
                result.adjacent_sup.push_back(sup);
            }
            previous = std::move(current);
        }
    }
    return result;
}

}  // namespace minsurf
