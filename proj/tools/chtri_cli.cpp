// chtri: certificates and parameter-space scans for complex hyperbolic
// ultra-parallel triangle group representations.
//
// Exit codes: 0 certified / scan complete, 1 not certified (or overlap found),
// 2 inconclusive, 3 input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chtri/certificate_json.hpp"
#include "chtri/orbit.hpp"
#include "chtri/scan.hpp"
#include "chtri/svg.hpp"

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

int verdict_exit(chtri::Verdict v) {
    switch (v) {
        case chtri::Verdict::CertifiedDiscreteFaithful: return kExitCertified;
        case chtri::Verdict::NotCertified: return kExitNotCertified;
        default: return kExitInconclusive;
    }
}

struct AngleInput {
    std::optional<double> alpha;
    std::optional<double> cos_alpha;

    double resolve() const {
        if (alpha) return *alpha;
        if (cos_alpha) {
            if (*cos_alpha < -1.0 || *cos_alpha > 1.0)
                throw std::invalid_argument("--cos-alpha must lie in [-1, 1]");
            return std::acos(*cos_alpha);
        }
        throw std::invalid_argument("one of --alpha or --cos-alpha is required");
    }
};

void add_angle_options(CLI::App* cmd, AngleInput& angle) {
    auto* a = cmd->add_option("--alpha", angle.alpha, "angular invariant (radians)");
    auto* c = cmd->add_option("--cos-alpha", angle.cos_alpha, "cosine of the angular invariant");
    a->excludes(c);
    c->excludes(a);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discreteness certificates for complex hyperbolic ultra-parallel "
                 "triangle group representations"};
    app.require_subcommand(1);

    // ---- certify (m3 > 0) ----
    auto* certify = app.add_subcommand(
        "certify", "Certify a [m1,m2,m3] representation with m3 > 0 (ball model)");
    double c_r1 = 0, c_r2 = 0, c_r3 = 0;
    std::optional<double> c_m1, c_m2, c_m3;
    AngleInput c_angle;
    long long c_all_n = 0;
    std::string c_out;
    certify->add_option("--r1", c_r1, "r1 = cosh(m1/2)");
    certify->add_option("--r2", c_r2, "r2 = cosh(m2/2)");
    certify->add_option("--r3", c_r3, "r3 = cosh(m3/2)");
    certify->add_option("--m1", c_m1, "mirror distance m1 (alternative to --r1)");
    certify->add_option("--m2", c_m2, "mirror distance m2");
    certify->add_option("--m3", c_m3, "mirror distance m3");
    add_angle_options(certify, c_angle);
    certify->add_option("--all-n", c_all_n,
                        "check every word index 1..N instead of the segment algorithm");
    certify->add_option("-o,--out", c_out, "write the JSON certificate to a file");

    // ---- certify-zero (m3 = 0) ----
    auto* certify_zero =
        app.add_subcommand("certify-zero", "Certify a [m1,m2,0] representation (Siegel model)");
    double z_r1 = 0, z_r2 = 0;
    std::optional<double> z_m1, z_m2;
    AngleInput z_angle;
    std::string z_out;
    certify_zero->add_option("--r1", z_r1, "r1 = cosh(m1/2)");
    certify_zero->add_option("--r2", z_r2, "r2 = cosh(m2/2)");
    certify_zero->add_option("--m1", z_m1, "mirror distance m1 (alternative to --r1)");
    certify_zero->add_option("--m2", z_m2, "mirror distance m2");
    add_angle_options(certify_zero, z_angle);
    certify_zero->add_option("-o,--out", z_out, "write the JSON certificate to a file");

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "Scan a parameter grid and emit CSV/SVG");
    std::string scan_config;
    scan->add_option("--config", scan_config, "flat key=value config file")->required();

    // ---- oracle ----
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force disk/sphere disjointness report for group words");
    double o_r1 = 0, o_r2 = 0, o_r3 = 0;
    AngleInput o_angle;
    long long o_max_n = 10;
    bool o_zero = false;
    std::string o_out;
    oracle->add_option("--r1", o_r1)->required();
    oracle->add_option("--r2", o_r2)->required();
    oracle->add_option("--r3", o_r3, "required unless --zero");
    add_angle_options(oracle, o_angle);
    oracle->add_option("--max-n", o_max_n, "word index range (default 10)");
    oracle->add_flag("--zero", o_zero, "m3 = 0 Cygan-sphere oracle");
    oracle->add_option("-o,--out", o_out, "write the CSV report to a file");

    // ---- trace ----
    auto* trace = app.add_subcommand("trace", "Trace and threshold of the word R1 (R2 R1)^n R3");
    double t_r1 = 0, t_r2 = 0, t_r3 = 0;
    AngleInput t_angle;
    long long t_n = 1;
    bool t_zero = false;
    trace->add_option("--r1", t_r1)->required();
    trace->add_option("--r2", t_r2)->required();
    trace->add_option("--r3", t_r3, "required unless --zero");
    add_angle_options(trace, t_angle);
    trace->add_option("--n", t_n, "word index")->required();
    trace->add_flag("--zero", t_zero, "m3 = 0 case");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            if (c_m1) c_r1 = std::cosh(*c_m1 / 2);
            if (c_m2) c_r2 = std::cosh(*c_m2 / 2);
            if (c_m3) c_r3 = std::cosh(*c_m3 / 2);
            auto p = chtri::TriangleParams::from_r(c_r1, c_r2, c_r3, c_angle.resolve());
            if (p.alpha_folded)
                std::cerr << "warning: alpha folded into [0, pi] (conjugate representation)\n";
            chtri::Certificate cert = c_all_n > 0
                                          ? chtri::certify_theorem1_all_n(p, c_all_n)
                                          : chtri::certify_theorem1(p);
            write_output(c_out, chtri::certificate_json_ultra(p, cert).dump(2) + "\n");
            return verdict_exit(cert.verdict);
        }

        if (certify_zero->parsed()) {
            if (z_m1) z_r1 = std::cosh(*z_m1 / 2);
            if (z_m2) z_r2 = std::cosh(*z_m2 / 2);
            auto z = chtri::ZeroParams::from_r(z_r1, z_r2, z_angle.resolve());
            if (z.alpha_folded)
                std::cerr << "warning: alpha folded into [0, pi] (conjugate representation)\n";
            chtri::Certificate cert = chtri::certify_theorem3(z);
            write_output(z_out, chtri::certificate_json_zero(z, cert).dump(2) + "\n");
            return verdict_exit(cert.verdict);
        }

        if (scan->parsed()) {
            auto cfg = chtri::ScanConfig::parse_file(scan_config);
            std::ostringstream csv;
            std::string svg;
            if (cfg.mode == chtri::ScanConfig::Mode::UltraKj) {
                auto cells = chtri::scan_ultra(cfg);
                chtri::write_scan_csv(cells, csv);
                if (!cfg.svg_path.empty() && !cells.empty()) svg = chtri::emit_svg(cells, cfg);
            } else {
                auto cells = chtri::scan_zero(cfg);
                chtri::write_scan_csv(cells, csv);
                csv << chtri::zero_boundary_summary(cells);
                if (!cfg.svg_path.empty() && !cells.empty()) svg = chtri::emit_svg(cells, cfg);
            }
            write_output(cfg.csv_path, csv.str());
            if (!cfg.svg_path.empty() && !svg.empty()) write_output(cfg.svg_path, svg);
            if (!cfg.svg_path.empty() && svg.empty())
                std::cerr << "note: empty grid; no SVG written\n";
            return kExitCertified;
        }

        if (oracle->parsed()) {
            chtri::OrbitReport rep;
            std::ostringstream os;
            if (o_zero) {
                auto z = chtri::ZeroParams::from_r(o_r1, o_r2, o_angle.resolve());
                rep = chtri::check_cygan_disjointness(z, o_max_n);
                os << "# h(cos_alpha) = " << rep.h_margin << "\n";
            } else {
                if (!(o_r3 > 1.0))
                    throw std::invalid_argument("oracle: --r3 > 1 is required unless --zero");
                auto p = chtri::TriangleParams::from_r(o_r1, o_r2, o_r3, o_angle.resolve());
                rep = chtri::check_disk_disjointness(p, o_max_n);
            }
            if (!rep.applicable) {
                os << "# not applicable: " << rep.note << "\n";
                write_output(o_out, os.str());
                return kExitInconclusive;
            }
            chtri::write_orbit_csv(rep, os);
            write_output(o_out, os.str());
            return rep.any_overlap() ? kExitNotCertified : kExitCertified;
        }

        if (trace->parsed()) {
            double alpha = t_angle.resolve();
            std::ostringstream os;
            os.precision(12);
            if (t_zero) {
                auto z = chtri::ZeroParams::from_r(t_r1, t_r2, alpha);
                double tr = chtri::trace_w_zero(z.r1, z.r2, z.cos_alpha(), t_n);
                auto gens = chtri::generators_zero(z);
                chtri::Mat3c w = gens[0].mat;
                chtri::Mat3c step = gens[1].mat * gens[0].mat;
                for (long long i = 0; i < t_n; ++i) w = w * step;
                w = w * gens[2].mat;  // R1 (R2 R1)^n R3
                os << "n: " << t_n << "\n"
                   << "trace_closed_form: " << tr << "\n"
                   << "trace_matrix: " << w.trace().real() << "\n"
                   << "t_n: " << chtri::t_n_zero(z.r1, z.r2, t_n) << "\n"
                   << "class: " << to_string(chtri::classify_real_trace(tr).type) << "\n";
            } else {
                if (!(t_r3 > 1.0))
                    throw std::invalid_argument("trace: --r3 > 1 is required unless --zero");
                auto p = chtri::TriangleParams::from_r(t_r1, t_r2, t_r3, alpha);
                double tr = chtri::trace_w(p, t_n);
                auto gens = chtri::generators(p);
                chtri::Mat3c w = gens[0].mat;
                chtri::Mat3c step = gens[1].mat * gens[0].mat;
                for (long long i = 0; i < t_n; ++i) w = w * step;
                w = w * gens[2].mat;  // R1 (R2 R1)^n R3
                os << "n: " << t_n << "\n"
                   << "trace_closed_form: " << tr << "\n"
                   << "trace_matrix: " << w.trace().real() << "\n"
                   << "t_n: " << chtri::t_n_threshold(p.r1, p.r2, p.r3, t_n) << "\n"
                   << "class: " << to_string(chtri::classify_real_trace(tr).type) << "\n";
            }
            std::cout << os.str();
            return kExitCertified;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
