#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chtri/scan.hpp"

// Minimal deterministic SVG rendering of scan tables: fixed canvas, fixed
// palette, fixed number formatting, cells emitted in table order.

namespace chtri {

namespace svg_detail {

constexpr int kWidth = 720, kHeight = 560;
constexpr int kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Frame {
    double x0, x1, y0, y1;
    double px(double x) const {
        return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom);
    }
};

inline void open_svg(std::ostringstream& os) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" fill=\"#ffffff\"/>\n";
}

inline void rect(std::ostringstream& os, double x, double y, double w, double h,
                 const char* fill) {
    os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
       << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>\n";
}

inline void axes(std::ostringstream& os, const Frame& f, const char* xlabel,
                 const char* ylabel) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
       << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
       << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
       << kHeight - kBottom << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 12
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << xlabel
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 18 "
       << (kTop + kHeight - kBottom) / 2 << ")\">" << ylabel << "</text>\n";
    // corner tick labels
    os << "<text x=\"" << kLeft << "\" y=\"" << kHeight - kBottom + 18
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << num(f.x0)
       << "</text>\n";
    os << "<text x=\"" << kWidth - kRight << "\" y=\"" << kHeight - kBottom + 18
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << num(f.x1)
       << "</text>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << kHeight - kBottom + 4
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << num(f.y0)
       << "</text>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << kTop + 4
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << num(f.y1)
       << "</text>\n";
}

// Two shades per region index: strong when the word stays loxodromic for
// every angle, soft when the threshold is interior.
inline const char* ultra_fill(long long j, bool in_prime, bool in_kj, bool tj_gt_1) {
    if (!in_prime) return in_kj ? "#e0e0e0" : "#f7f7f7";
    static const char* strong[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#8c564b"};
    static const char* soft[] = {"#9467bd", "#aec7e8", "#98df8a", "#ffbb78", "#c49c94"};
    std::size_t idx = static_cast<std::size_t>((j - 1) % 5);
    return tj_gt_1 ? strong[idx] : soft[idx];
}

}  // namespace svg_detail

inline std::string emit_svg(const std::vector<UltraCell>& cells, const ScanConfig& cfg) {
    if (cells.empty()) throw std::invalid_argument("emit_svg: empty table");
    using namespace svg_detail;
    Frame f{cfg.r1_min, cfg.r1_max + cfg.r1_step, cfg.r2_min, cfg.r2_max + cfg.r2_step};
    std::ostringstream os;
    open_svg(os);
    for (const auto& c : cells) {
        double x = f.px(c.r1), y = f.py(c.r2 + cfg.r2_step);
        double w = f.px(c.r1 + cfg.r1_step) - x, h = f.py(c.r2) - f.py(c.r2 + cfg.r2_step);
        rect(os, x, y, w, h, ultra_fill(c.j, c.in_kj_prime, c.in_kj, c.tj_gt_1));
    }
    axes(os, f, "r1", "r2");
    os << "</svg>\n";
    return os.str();
}

inline std::string emit_svg(const std::vector<ZeroCell>& cells, const ScanConfig& cfg) {
    if (cells.empty()) throw std::invalid_argument("emit_svg: empty table");
    using namespace svg_detail;
    Frame f{cfg.x_min, cfg.x_max + cfg.x_step, cfg.y_min, cfg.y_max + cfg.y_step};
    std::ostringstream os;
    open_svg(os);
    for (const auto& c : cells) {
        bool member = c.in_kn_prime || (c.n_alt > 0 && c.in_kn_prime_alt);
        double x = f.px(c.x), y = f.py(c.y + cfg.y_step);
        double w = f.px(c.x + cfg.x_step) - x, h = f.py(c.y) - f.py(c.y + cfg.y_step);
        rect(os, x, y, w, h, member ? "#d62728" : "#f0f0f0");
    }
    // strip boundaries X = 2/n
    for (long long n = 1; n <= 64; ++n) {
        double xb = 2.0 / static_cast<double>(n);
        if (xb > f.x1) continue;
        if (xb < f.x0) break;
        os << "<line x1=\"" << num(f.px(xb)) << "\" y1=\"" << kTop << "\" x2=\""
           << num(f.px(xb)) << "\" y2=\"" << kHeight - kBottom
           << "\" stroke=\"#404040\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
    axes(os, f, "X", "Y");
    os << "</svg>\n";
    return os.str();
}

}  // namespace chtri
