#pragma once

#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "chtri/siegel.hpp"
#include "chtri/triangle.hpp"

// Brute-force numerical counterpart of the certificates: enumerate words of
// the group generated by R1 and R2 and test disk / sphere disjointness
// directly.  Nothing here shares a code path with the closed-form conditions,
// so agreement between the two is evidence, not tautology.

namespace chtri {

struct G2Word {
    std::string label;
    bool odd;     // true for R1 (R2 R1)^n, false for (R2 R1)^n
    long long n;
    Mat3c mat;
};

// Nontrivial elements of <R1, R2> come in two families, (R2 R1)^n and
// R1 (R2 R1)^n; the other reduced shapes are inverses or reindexings of these
// (R2 = R1 (R2 R1)^{-1} and so on).  Yields 4 max_n + 1 distinct elements.
inline std::vector<G2Word> enumerate_g2_words(const TriangleParams& p, long long max_n) {
    if (max_n < 1) throw std::invalid_argument("enumerate_g2_words: need max_n >= 1");
    auto gens = generators(p);
    const Mat3c& m1 = gens[0].mat;
    Mat3c step = gens[1].mat * m1;            // R2 R1
    Mat3c step_inv = m1 * gens[1].mat;        // (R2 R1)^{-1} = R1 R2

    std::vector<G2Word> out;
    auto push = [&out](bool odd, long long n, const Mat3c& m) {
        std::string label = odd ? "R1(R2R1)^" : "(R2R1)^";
        label += std::to_string(n);
        out.push_back({label, odd, n, m});
    };

    Mat3c pos = Mat3c::identity(), neg = Mat3c::identity();
    std::vector<Mat3c> powers_pos, powers_neg;  // (R2R1)^n for n = 1.. and -1..
    for (long long n = 1; n <= max_n; ++n) {
        pos = step * pos;
        neg = step_inv * neg;
        powers_pos.push_back(pos);
        powers_neg.push_back(neg);
    }
    for (long long n = -max_n; n <= max_n; ++n) {
        if (n == 0) continue;
        push(false, n, n > 0 ? powers_pos[n - 1] : powers_neg[-n - 1]);
    }
    for (long long n = -max_n; n <= max_n; ++n) {
        Mat3c m = n == 0 ? m1 : (n > 0 ? m1 * powers_pos[n - 1] : m1 * powers_neg[-n - 1]);
        push(true, n, m);
    }
    return out;
}

enum class DisjointVerdict { Disjoint, Tangent, Overlap };

inline const char* to_string(DisjointVerdict v) {
    switch (v) {
        case DisjointVerdict::Disjoint: return "disjoint";
        case DisjointVerdict::Tangent: return "tangent";
        default: return "overlap";
    }
}

struct OrbitCheck {
    std::string family;
    long long n;
    double distance;
    double threshold;
    DisjointVerdict verdict;
};

struct OrbitReport {
    bool applicable = true;  // false when the projected disk is undefined
    std::string note;
    double h_margin = std::numeric_limits<double>::quiet_NaN();  // m3 = 0 only
    std::vector<OrbitCheck> checks;

    bool any_overlap() const {
        for (const auto& c : checks)
            if (c.verdict == DisjointVerdict::Overlap) return true;
        return false;
    }
};

namespace detail {

inline DisjointVerdict disjoint_verdict(double distance, double threshold) {
    if (distance < threshold - kGeoTol) return DisjointVerdict::Overlap;
    if (distance <= threshold + kGeoTol) return DisjointVerdict::Tangent;
    return DisjointVerdict::Disjoint;
}

}  // namespace detail

// All group translates of the projected disk S3 have the same hyperbolic
// radius, so two translates are disjoint exactly when their centers are at
// distance >= 2 d3.  Also checks that no forward translate of S3 swallows the
// axis points v0, v1 where the mirrors C2, C1 cross C12.
inline OrbitReport check_disk_disjointness(const TriangleParams& p, long long max_n) {
    OrbitReport rep;
    double M = disk_parameter(p);
    if (M < -kClassTol) {
        rep.applicable = false;
        rep.note = "existence bound violated; no such triangle group";
        return rep;
    }
    if (M <= 1.0 + kClassTol) {
        rep.applicable = false;
        rep.note = "C3 and C12 are not ultra-parallel; the projected disk is undefined";
        return rep;
    }

    ProjectedDisk disk = projected_disk(p);
    for (const G2Word& w : enumerate_g2_words(p, max_n)) {
        cplx moved = restrict_to_disk(w.mat).apply(disk.center);
        double d = disk_distance(moved, disk.center);
        rep.checks.push_back({w.odd ? "odd" : "even", w.n, d, 2.0 * disk.radius,
                              detail::disjoint_verdict(d, 2.0 * disk.radius)});
    }

    auto gens = generators(p);
    Mobius step = restrict_to_disk(gens[1].mat * gens[0].mat);
    cplx c = disk.center;
    double v0 = 0.0, v1 = p.s3 / p.r3;
    for (long long n = 1; n <= max_n; ++n) {
        c = step.apply(c);
        double d0 = disk_distance(c, cplx(v0));
        double d1 = disk_distance(c, cplx(v1));
        rep.checks.push_back({"v0", n, d0, disk.radius, detail::disjoint_verdict(d0, disk.radius)});
        rep.checks.push_back({"v1", n, d1, disk.radius, detail::disjoint_verdict(d1, disk.radius)});
    }
    return rep;
}

// Cygan-sphere counterpart for m3 = 0: the unit sphere around the origin must
// stay at distance >= 2 from its forward translates.  The criterion is the
// triangle inequality, sufficient but not claimed necessary, so "overlap"
// here means "closer than the sum of radii".
inline OrbitReport check_cygan_disjointness(const ZeroParams& z, long long max_n) {
    if (max_n < 1) throw std::invalid_argument("check_cygan_disjointness: need max_n >= 1");
    OrbitReport rep;
    rep.h_margin = h_value(z.r1, z.r2, z.cos_alpha());

    auto gens = generators_zero(z);
    Mat3c step = gens[1].mat * gens[0].mat;
    HeisenbergPoint o = heis_identity();
    Vec3c lift = heis_lift(o);
    for (long long n = 1; n <= max_n; ++n) {
        lift = step * lift;
        double d = cygan_distance(o, heis_from_lift(lift));
        rep.checks.push_back({"even", n, d, 2.0, detail::disjoint_verdict(d, 2.0)});
    }
    return rep;
}

// CSV: one row per check, deterministic (family, n) order.
inline void write_orbit_csv(const OrbitReport& rep, std::ostream& os) {
    os << "family,n,distance,threshold,verdict\n";
    char buf[64];
    for (const auto& c : rep.checks) {
        os << c.family << ',' << c.n << ',';
        std::snprintf(buf, sizeof buf, "%.12g", c.distance);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.12g", c.threshold);
        os << buf << ',' << to_string(c.verdict) << '\n';
    }
}

}  // namespace chtri
