#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chtri/siegel.hpp"

// Parameter-plane scans behind the `scan` subcommand.  Cells evaluate
// independently; iteration order (row-major by grid index) and fixed float
// formatting keep the CSV byte-stable across runs.

namespace chtri {

struct ScanConfig {
    enum class Mode { UltraKj, ZeroKn };

    Mode mode = Mode::UltraKj;
    // UltraKj: grid over (r1, r2) at fixed r3 with thresholds t_1..t_{j0+1}.
    double r3 = 0.0;
    long long j0 = 0;
    double r1_min = 0, r1_max = 0, r1_step = 0;
    double r2_min = 0, r2_max = 0, r2_step = 0;
    // ZeroKn: grid over (X, Y) = ((r1^2-1)/(r2^2-1) - 1, 1/(r2^2-1)).
    double x_min = 0, x_max = 0, x_step = 0;
    double y_min = 0, y_max = 0, y_step = 0;

    std::string csv_path;
    std::string svg_path;  // optional

    // Flat key = value file; '#' starts a comment.
    static ScanConfig parse(std::istream& in);
    static ScanConfig parse_file(const std::string& path);
};

namespace detail {

inline std::vector<double> grid_points(double lo, double hi, double step) {
    std::vector<double> out;
    if (step <= 0.0) throw std::invalid_argument("scan: grid step must be positive");
    for (long long i = 0;; ++i) {
        double v = lo + static_cast<double>(i) * step;
        if (v > hi + step * 1e-9) break;
        out.push_back(v);
    }
    return out;
}

inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

inline ScanConfig ScanConfig::parse(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }

    auto get = [&kv](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("scan config: missing key '" + key + "'");
        return it->second;
    };
    auto get_num = [&get](const std::string& key) { return std::stod(get(key)); };

    ScanConfig cfg;
    std::string mode = get("mode");
    if (mode == "ultra")
        cfg.mode = Mode::UltraKj;
    else if (mode == "zero")
        cfg.mode = Mode::ZeroKn;
    else
        throw std::invalid_argument("scan config: mode must be 'ultra' or 'zero'");

    if (cfg.mode == Mode::UltraKj) {
        cfg.r3 = get_num("r3");
        cfg.j0 = static_cast<long long>(get_num("j0"));
        cfg.r1_min = get_num("r1_min");
        cfg.r1_max = get_num("r1_max");
        cfg.r1_step = get_num("r1_step");
        cfg.r2_min = get_num("r2_min");
        cfg.r2_max = get_num("r2_max");
        cfg.r2_step = get_num("r2_step");
        if (!(cfg.r3 > 1.0)) throw std::invalid_argument("scan config: need r3 > 1");
        if (cfg.j0 < 1) throw std::invalid_argument("scan config: need j0 >= 1");
        if (cfg.r1_step <= 0 || cfg.r2_step <= 0)
            throw std::invalid_argument("scan config: steps must be positive");
    } else {
        cfg.x_min = get_num("x_min");
        cfg.x_max = get_num("x_max");
        cfg.x_step = get_num("x_step");
        cfg.y_min = get_num("y_min");
        cfg.y_max = get_num("y_max");
        cfg.y_step = get_num("y_step");
        if (cfg.x_step <= 0 || cfg.y_step <= 0)
            throw std::invalid_argument("scan config: steps must be positive");
    }
    cfg.csv_path = kv.count("csv") ? kv["csv"] : "";
    cfg.svg_path = kv.count("svg") ? kv["svg"] : "";
    return cfg;
}

inline ScanConfig ScanConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("scan config: cannot open '" + path + "'");
    return parse(in);
}

struct UltraCell {
    double r1, r2;
    long long j;  // argmin of t_j over 1..j0
    double tj;
    bool in_kj, in_kj_prime;
    bool tj_gt_1;  // w^(j) loxodromic for every alpha
};

inline std::vector<UltraCell> scan_ultra(const ScanConfig& cfg) {
    if (cfg.mode != ScanConfig::Mode::UltraKj) throw std::invalid_argument("scan_ultra: wrong mode");
    std::vector<UltraCell> out;
    auto r1s = detail::grid_points(cfg.r1_min, cfg.r1_max, cfg.r1_step);
    auto r2s = detail::grid_points(cfg.r2_min, cfg.r2_max, cfg.r2_step);
    for (double r1 : r1s)
        for (double r2 : r2s) {
            if (!(r2 > 1.0) || r2 > r1) continue;
            long long jbest = 1;
            double tbest = t_n_threshold(r1, r2, cfg.r3, 1);
            for (long long j = 2; j <= cfg.j0; ++j) {
                double tj = t_n_threshold(r1, r2, cfg.r3, j);
                if (tj < tbest) {
                    tbest = tj;
                    jbest = j;
                }
            }
            RegionMembership m = region_membership(r1, r2, cfg.r3, jbest, cfg.j0);
            out.push_back({r1, r2, jbest, m.tj, m.in_kj, m.in_kj_prime, m.tj > 1.0});
        }
    return out;
}

inline void write_scan_csv(const std::vector<UltraCell>& cells, std::ostream& os) {
    os << "r1,r2,j,t_j,in_kj,in_kj_prime,tj_gt_1\n";
    for (const auto& c : cells)
        os << detail::fmt12(c.r1) << ',' << detail::fmt12(c.r2) << ',' << c.j << ','
           << detail::fmt12(c.tj) << ',' << (c.in_kj ? 1 : 0) << ',' << (c.in_kj_prime ? 1 : 0)
           << ',' << (c.tj_gt_1 ? 1 : 0) << '\n';
}

struct ZeroCell {
    double x, y;
    double r1, r2;
    long long n;  // smallest region index
    double kn_lhs;
    bool in_kn_prime;
    long long n_alt = 0;  // second index on a strip boundary, 0 if none
    double kn_lhs_alt = 0.0;
    bool in_kn_prime_alt = false;
};

inline std::vector<ZeroCell> scan_zero(const ScanConfig& cfg) {
    if (cfg.mode != ScanConfig::Mode::ZeroKn) throw std::invalid_argument("scan_zero: wrong mode");
    std::vector<ZeroCell> out;
    auto xs = detail::grid_points(cfg.x_min, cfg.x_max, cfg.x_step);
    auto ys = detail::grid_points(cfg.y_min, cfg.y_max, cfg.y_step);
    for (double x : xs)
        for (double y : ys) {
            if (!(x > 0.0) || !(y > 0.0)) continue;
            double r1 = std::sqrt(1.0 + (x + 1.0) / y);
            double r2 = std::sqrt(1.0 + 1.0 / y);
            auto ns = region_index_n(r1, r2);
            if (ns.empty()) continue;
            ZeroCell cell;
            cell.x = x;
            cell.y = y;
            cell.r1 = r1;
            cell.r2 = r2;
            cell.n = ns[0];
            cell.kn_lhs = kn_condition_lhs(r1, r2, ns[0]);
            cell.in_kn_prime = cell.kn_lhs >= -kClassTol;
            if (ns.size() > 1) {
                cell.n_alt = ns[1];
                cell.kn_lhs_alt = kn_condition_lhs(r1, r2, ns[1]);
                cell.in_kn_prime_alt = cell.kn_lhs_alt >= -kClassTol;
            }
            out.push_back(cell);
        }
    return out;
}

inline void write_scan_csv(const std::vector<ZeroCell>& cells, std::ostream& os) {
    os << "x,y,r1,r2,n,kn_lhs,in_kn_prime,n_alt,kn_lhs_alt,in_kn_prime_alt\n";
    for (const auto& c : cells) {
        os << detail::fmt12(c.x) << ',' << detail::fmt12(c.y) << ',' << detail::fmt12(c.r1)
           << ',' << detail::fmt12(c.r2) << ',' << c.n << ',' << detail::fmt12(c.kn_lhs) << ','
           << (c.in_kn_prime ? 1 : 0) << ',';
        if (c.n_alt > 0)
            os << c.n_alt << ',' << detail::fmt12(c.kn_lhs_alt) << ','
               << (c.in_kn_prime_alt ? 1 : 0);
        else
            os << ",,";
        os << '\n';
    }
}

// Informational summary: the observed upper boundary of each membership strip
// along the sampled X columns (max member Y per column and index).
inline std::string zero_boundary_summary(const std::vector<ZeroCell>& cells) {
    std::map<std::pair<long long, double>, double> max_y;  // (n, x) -> max member y
    for (const auto& c : cells) {
        if (c.in_kn_prime) {
            auto key = std::make_pair(c.n, c.x);
            auto it = max_y.find(key);
            if (it == max_y.end() || c.y > it->second) max_y[key] = c.y;
        }
        if (c.n_alt > 0 && c.in_kn_prime_alt) {
            auto key = std::make_pair(c.n_alt, c.x);
            auto it = max_y.find(key);
            if (it == max_y.end() || c.y > it->second) max_y[key] = c.y;
        }
    }
    std::ostringstream os;
    for (const auto& [key, y] : max_y)
        os << "# K'_" << key.first << " boundary sample: X=" << detail::fmt12(key.second)
           << " max member Y=" << detail::fmt12(y) << '\n';
    return os.str();
}

}  // namespace chtri
