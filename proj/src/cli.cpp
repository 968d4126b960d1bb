#include "minsurf/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "minsurf/mesh_io.hpp"
#include "minsurf/surface_family.hpp"
#include "minsurf/verifier.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::map<std::string, double>& theta_names() {
    static const std::map<std::string, double> names = {
        {"plane-left", kThetaMin}, {"catenoid", 0.0},          {"enneper", kPi / 4.0},
        {"catenoid2", kPi / 2.0},  {"plane-right", kThetaMax},
    };
    return names;
}

struct Options {
    std::optional<double> theta;
    std::optional<std::string> theta_name;
    std::optional<double> u_min, u_max, v_min, v_max;
    std::optional<int> nu, nv;
    std::string variant = "plain";
    std::string format = "obj";
    std::string out;
    std::string report;
    int frames = 9;
    std::optional<double> theta_start, theta_end;
    std::vector<std::string> tol;
};

void add_theta(CLI::App* cmd, Options& o) {
    auto* t = cmd->add_option("--theta", o.theta, "family parameter in radians, [-pi/4, 3pi/4]");
    auto* n = cmd->add_option("--theta-name", o.theta_name, "plane-left|catenoid|enneper|catenoid2|plane-right");
    t->excludes(n);
}

void add_grid(CLI::App* cmd, Options& o) {
    cmd->add_option("--u-min", o.u_min);
    cmd->add_option("--u-max", o.u_max);
    cmd->add_option("--v-min", o.v_min);
    cmd->add_option("--v-max", o.v_max);
    cmd->add_option("--nu", o.nu, "samples along u");
    cmd->add_option("--nv", o.nv, "samples along v");
}

void add_tol(CLI::App* cmd, Options& o) {
    cmd->add_option("--tol", o.tol, "tolerance override <name>=<value>")->take_all();
}

double resolve_theta(const Options& o) {
    if (o.theta_name) {
        const auto it = theta_names().find(*o.theta_name);
        if (it == theta_names().end()) {
            throw UsageError(fmt::format("unknown theta name '{}'", *o.theta_name));
        }
        return it->second;
    }
    if (!o.theta) {
        throw UsageError("--theta or --theta-name is required");
    }
    return *o.theta;
}

ShapeParam resolve_shape(const Options& o) {
    const double theta = resolve_theta(o);
    try {
        return ShapeParam::from_theta(theta);
    } catch (const DomainError&) {
        throw UsageError(fmt::format("theta {} outside [-pi/4, 3pi/4]", theta));
    }
}

GridSpec resolve_grid(const Options& o, GridSpec defaults) {
    GridSpec g = defaults;
    g.u_min = o.u_min.value_or(g.u_min);
    g.u_max = o.u_max.value_or(g.u_max);
    g.v_min = o.v_min.value_or(g.v_min);
    g.v_max = o.v_max.value_or(g.v_max);
    g.nu = o.nu.value_or(g.nu);
    g.nv = o.nv.value_or(g.nv);
    try {
        g.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return g;
}

Variant parse_variant(const std::string& text) {
    if (text == "plain") {
        return Variant::plain();
    }
    if (text == "tilde") {
        return Variant::tilde();
    }
    if (text == "conjugate") {
        return Variant::conjugate();
    }
    constexpr std::string_view prefix = "associated:";
    if (text.starts_with(prefix)) {
        const std::string rest = text.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string::npos) {
            throw UsageError("associated variant must be associated:<re>,<im>");
        }
        try {
            const double re = std::stod(rest.substr(0, comma));
            const double im = std::stod(rest.substr(comma + 1));
            return Variant::associated(AssociatedParam(Complex(re, im)));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        } catch (const std::exception&) {
            throw UsageError(fmt::format("cannot parse associated parameter '{}'", rest));
        }
    }
    throw UsageError(fmt::format("unknown variant '{}'", text));
}

ToleranceOverrides parse_tolerances(const std::vector<std::string>& items) {
    ToleranceOverrides overrides;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError(fmt::format("tolerance override '{}' is not <name>=<value>", item));
        }
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw UsageError(fmt::format("tolerance override '{}' has no numeric value", item));
        }
        const std::string name = item.substr(0, eq);
        const auto names = record_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UsageError(fmt::format("unknown tolerance name '{}'", name));
        }
        if (!(value > 0.0)) {
            throw UsageError(fmt::format("tolerance '{}' must be positive", name));
        }
        overrides[name] = value;
    }
    return overrides;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw std::runtime_error(fmt::format("cannot write '{}'", path));
    }
}

int cmd_generate(const Options& o, std::ostream& out) {
    const ShapeParam p = resolve_shape(o);
    const GridSpec grid = resolve_grid(o, {-2.0, 2.0, -kPi, kPi, 129, 129});
    const Variant variant = parse_variant(o.variant);
    if (o.out.empty()) {
        throw UsageError("generate needs --out <path>");
    }
    if (p.is_endpoint() && (variant.kind == VariantKind::Plain || variant.kind == VariantKind::Associated)) {
        throw UsageError("theta is a plane endpoint; use --variant tilde or conjugate");
    }
    if (o.format == "csv") {
        export_csv(sample_grid(p, grid, variant), o.out);
    } else if (o.format == "obj") {
        export_obj(sample_grid(p, grid, variant), o.out);
    } else if (o.format == "ply") {
        export_ply(sample_grid(p, grid, variant), o.out);
    } else {
        throw UsageError(fmt::format("unknown format '{}'", o.format));
    }
    out << fmt::format("wrote {} ({}x{}, {})\n", o.out, grid.nu, grid.nv, to_string(classify(p.theta())));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const ShapeParam p = resolve_shape(o);
    const GridSpec grid = resolve_grid(o, GridSpec{});
    const ToleranceOverrides overrides = parse_tolerances(o.tol);
    const VerificationReport report = verify_surface(p, grid, overrides);
    const std::string json = report_json(report);
    if (o.report.empty()) {
        out << json;
    } else {
        write_text(o.report, json);
        for (const ResidualRecord& r : report.records) {
            out << fmt::format("{:<4} {:<26} {:.3e} <= {:.1e}\n", r.passed ? "ok" : "FAIL", r.name, r.value,
                               r.tolerance);
        }
        out << (report.overall() ? "verification passed\n" : "verification FAILED\n");
    }
    return report.overall() ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const ShapeParam p = resolve_shape(o);
    const Variant variant = parse_variant(o.variant);
    const Family family = variant.kind == VariantKind::Conjugate ? Family::Conjugate : Family::Original;
    out << to_string(classify(p.theta(), family)) << "\n";
    return kExitOk;
}

int cmd_morph(const Options& o, std::ostream& out) {
    MorphSpec spec;
    spec.theta_start = o.theta_start.value_or(kThetaMin);
    spec.theta_end = o.theta_end.value_or(kThetaMax);
    spec.frames = o.frames;
    spec.grid = resolve_grid(o, spec.grid);
    if (o.variant == "conjugate") {
        spec.conjugate = true;
    } else if (o.variant != "tilde" && o.variant != "plain") {
        throw UsageError("morph supports --variant tilde or conjugate");
    }
    if (o.out.empty()) {
        throw UsageError("morph needs --out <directory>");
    }
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const MorphResult result = morph_frames(spec, o.out);
    for (std::size_t f = 0; f < result.files.size(); ++f) {
        out << fmt::format("{} theta={}", result.files[f].filename().string(), format_double(result.thetas[f]));
        if (f > 0) {
            out << fmt::format(" sup_step={}", format_double(result.adjacent_sup[f - 1]));
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const ShapeParam p = resolve_shape(o);
    if (p.is_endpoint()) {
        throw UsageError("Weierstrass data undefined at plane endpoints");
    }
    const GridSpec grid = resolve_grid(o, {-1.0, 1.0, -1.0, 1.0, 10, 10});
    const Variant variant = parse_variant(o.variant);
    AssociatedParam lam;
    if (variant.kind == VariantKind::Conjugate) {
        lam = AssociatedParam::conjugate();
    } else if (variant.kind == VariantKind::Associated) {
        lam = variant.lambda;
    } else if (variant.kind == VariantKind::Tilde) {
        throw UsageError("compare-weierstrass supports plain, conjugate or associated variants");
    }
    ToleranceOverrides overrides = parse_tolerances(o.tol);
    for (const auto& [name, value] : overrides) {
        if (name != "weierstrass_oracle") {
            throw UsageError(fmt::format("compare-weierstrass only accepts --tol weierstrass_oracle=<value>"));
        }
    }
    const double tol = overrides.contains("weierstrass_oracle") ? overrides.at("weierstrass_oracle")
                                                                 : tolerance::kOracle;
    VerificationReport report{p, {check_weierstrass_oracle(p, grid, lam, tol)}};
    if (variant.kind == VariantKind::Conjugate) {
        // The closed conjugate is evaluated separately from the associated
        // formula; report it against the integral as well.
        report.records.push_back(check_conjugate_procrustes(p, grid));
    }
    for (const ResidualRecord& r : report.records) {
        out << fmt::format("{} max_residual={} tolerance={} {}\n", r.name, format_double(r.value),
                           format_double(r.tolerance), r.passed ? "ok" : "FAIL");
    }
    if (!o.report.empty()) {
        write_text(o.report, report_json(report));
    }
    return report.overall() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal surfaces with planar curvature lines: generate, verify, classify, morph"};
    app.name(args.empty() ? "minsurf" : args.front());
    app.require_subcommand(1, 1);

    Options o;
    CLI::App* generate = app.add_subcommand("generate", "sample a surface and export a mesh");
    add_theta(generate, o);
    add_grid(generate, o);
    generate->add_option("--variant", o.variant, "plain|tilde|conjugate|associated:<re>,<im>");
    generate->add_option("--format", o.format, "obj|ply|csv");
    generate->add_option("--out", o.out, "output file");

    CLI::App* verify = app.add_subcommand("verify", "run the identity suite and write a JSON report");
    add_theta(verify, o);
    add_grid(verify, o);
    verify->add_option("--report", o.report, "JSON report path (stdout when omitted)");
    add_tol(verify, o);

    CLI::App* classify_cmd = app.add_subcommand("classify", "name the surface for theta");
    add_theta(classify_cmd, o);
    classify_cmd->add_option("--variant", o.variant, "plain|conjugate");

    CLI::App* morph = app.add_subcommand("morph", "write OBJ frames of the deformation");
    morph->add_option("--theta-start", o.theta_start);
    morph->add_option("--theta-end", o.theta_end);
    morph->add_option("--frames", o.frames, "number of frames, at least 2");
    add_grid(morph, o);
    morph->add_option("--variant", o.variant, "tilde|conjugate");
    morph->add_option("--out", o.out, "output directory");

    CLI::App* compare = app.add_subcommand("compare-weierstrass", "cross-check closed forms against quadrature");
    add_theta(compare, o);
    add_grid(compare, o);
    compare->add_option("--variant", o.variant, "plain|conjugate|associated:<re>,<im>");
    compare->add_option("--report", o.report, "JSON report path");
    add_tol(compare, o);

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) {
        rest.pop_back();
    }
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(o, out);
        }
        if (morph->parsed()) {
            return cmd_morph(o, out);
        }
        return cmd_compare(o, out);
    } catch (const UsageError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << app.get_name() << ": " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace minsurf::cli
