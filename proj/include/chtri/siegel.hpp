#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "chtri/certify.hpp"
#include "chtri/heisenberg.hpp"

// The m3 = 0 case in the Siegel model.  The mirrors C1 and C2 become infinite
// chains through infinity, C3 the unit circle in C x {0}; the fundamental
// domain of R3 is bounded by the unit Cygan sphere, and disjointness from its
// R2 R1 translates reduces to a linear condition h(cos alpha) >= 0.

namespace chtri {

struct ZeroParams {
    double r1, r2;
    double alpha;  // folded into [0, pi]
    double theta;  // (pi - alpha) / 2, in [0, pi/2]
    bool alpha_folded = false;

    double cos_alpha() const { return std::cos(alpha); }

    static ZeroParams from_r(double r1, double r2, double alpha) {
        if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(alpha))
            throw std::invalid_argument("ZeroParams: parameters must be finite");
        if (!(r1 >= r2 && r2 > 1.0))
            throw std::invalid_argument("ZeroParams: need r1 >= r2 > 1");
        ZeroParams z;
        z.r1 = r1;
        z.r2 = r2;
        z.alpha = TriangleParams::fold_angle(alpha, z.alpha_folded);
        z.theta = (std::numbers::pi - z.alpha) / 2.0;
        return z;
    }

    static ZeroParams from_m(double m1, double m2, double alpha) {
        return from_r(std::cosh(m1 / 2), std::cosh(m2 / 2), alpha);
    }
};

// Generators in the Siegel model.  R1, R2 are reflections in the infinite
// chains zeta = -r2 e^{i theta} and zeta = r1 e^{-i theta}; R3 inverts across
// the unit Cygan sphere.  R2 R1 is the Heisenberg translation by
// [2 (r1 e^{-i theta} + r2 e^{i theta}), -8 r1 r2 sin(2 theta)].
inline std::array<Isometry, 3> generators_zero(const ZeroParams& z) {
    const double rt2 = std::sqrt(2.0);
    cplx eit = std::exp(cplx(0, z.theta));

    Mat3c m1;
    m1(0, 0) = -1;
    m1(0, 1) = 2.0 * rt2 * z.r2 * std::conj(eit);
    m1(0, 2) = 4.0 * z.r2 * z.r2;
    m1(1, 1) = 1;
    m1(1, 2) = 2.0 * rt2 * z.r2 * eit;
    m1(2, 2) = -1;

    Mat3c m2;
    m2(0, 0) = -1;
    m2(0, 1) = -2.0 * rt2 * z.r1 * eit;
    m2(0, 2) = 4.0 * z.r1 * z.r1;
    m2(1, 1) = 1;
    m2(1, 2) = -2.0 * rt2 * z.r1 * std::conj(eit);
    m2(2, 2) = -1;

    Mat3c m3;
    m3(0, 2) = 1;
    m3(1, 1) = -1;
    m3(2, 0) = 1;

    return {Isometry{m1, Model::Siegel}, Isometry{m2, Model::Siegel},
            Isometry{m3, Model::Siegel}};
}

// The translation vector of R2 R1 on the Heisenberg group.
inline HeisenbergPoint translation_vector(const ZeroParams& z) {
    cplx zeta = 2.0 * (z.r1 * std::exp(cplx(0, -z.theta)) + z.r2 * std::exp(cplx(0, z.theta)));
    return {zeta, -8.0 * z.r1 * z.r2 * std::sin(2.0 * z.theta)};
}

// h(t) = -4 r1 r2 (r1^2 + r2^2) t + r1^4 + 6 r1^2 r2^2 + r2^4 - 1.
// h(cos alpha) >= 0 iff the unit Cygan sphere misses its R2 R1 translate, i.e.
// rho0^4(o, R2 R1 o) >= 16.
inline double h_value(double r1, double r2, double t) {
    double r1sq = r1 * r1, r2sq = r2 * r2;
    return -4.0 * r1 * r2 * (r1sq + r2sq) * t + r1sq * r1sq + 6.0 * r1sq * r2sq +
           r2sq * r2sq - 1.0;
}

// Parabolic threshold of w^(n) = R1 (R2 R1)^n R3 for m3 = 0.
inline double t_n_zero(double r1, double r2, long long n) {
    if (n < 1) throw std::invalid_argument("t_n_zero: need n >= 1");
    double nn = static_cast<double>(n);
    return ((r1 * r1 + r2 * r2) * nn * nn + r2 * r2 * (2.0 * nn + 1.0) - 1.0) /
           (2.0 * r1 * r2 * nn * (nn + 1.0));
}

// tr(w^(n)) = 4 (n r1 - (n+1) r2)^2 - 1 + 8 n (n+1) r1 r2 (1 - cos alpha).
inline double trace_w_zero(double r1, double r2, double cos_alpha, long long n) {
    if (n < 1) throw std::invalid_argument("trace_w_zero: need n >= 1");
    double nn = static_cast<double>(n);
    double d = nn * r1 - (nn + 1.0) * r2;
    return 4.0 * d * d - 1.0 + 8.0 * nn * (nn + 1.0) * r1 * r2 * (1.0 - cos_alpha);
}

// Region indices: every n >= 1 with 2/n <= X <= 2/(n-1) for
// X = (r1^2-1)/(r2^2-1) - 1 (no upper bound when n = 1).  Interior points get
// one index; the strip boundaries X = 2/k belong to both K_k and K_{k+1}.
// X = 0 (r1 = r2) lies in no strip and yields an empty list.
inline std::vector<long long> region_index_n(double r1, double r2) {
    if (!(r2 > 1.0)) throw std::invalid_argument("region_index_n: need r2 > 1");
    double X = (r1 * r1 - 1.0) / (r2 * r2 - 1.0) - 1.0;
    if (X < -kClassTol) throw std::invalid_argument("region_index_n: X < 0 (r1 < r2)");
    std::vector<long long> out;
    if (X <= kClassTol) return out;
    double a = 2.0 / X;
    long long lo = std::max(1LL, static_cast<long long>(std::floor(a - kClassTol)));
    long long hi = static_cast<long long>(std::ceil(a + kClassTol)) + 1;
    for (long long n = lo; n <= hi; ++n) {
        if (n < 1) continue;
        bool lower_ok = 2.0 / static_cast<double>(n) <= X + kClassTol;
        bool upper_ok = n == 1 || X <= 2.0 / static_cast<double>(n - 1) + kClassTol;
        if (lower_ok && upper_ok) out.push_back(n);
    }
    return out;
}

// Left side of the sphere-disjointness condition evaluated at the threshold:
// equals n (n+1) h(t_n).
inline double kn_condition_lhs(double r1, double r2, long long n) {
    if (n < 1) throw std::invalid_argument("kn_condition_lhs: need n >= 1");
    double nn = static_cast<double>(n);
    double r1sq = r1 * r1, r2sq = r2 * r2;
    double d = r1sq - r2sq, s = r1sq + r2sq;
    return -nn * nn * (d * d + 1.0) + nn * (s * s - 4.0 * r2sq * r2sq - 1.0) -
           2.0 * s * (r2sq - 1.0);
}

// Certificate for the m3 = 0 theorem: pick the region index (either of two on
// a strip boundary), require the sphere-disjointness condition at the
// threshold and non-ellipticity of w^(n).
inline Certificate certify_theorem3(const ZeroParams& z) {
    Certificate c;
    c.region_indices = region_index_n(z.r1, z.r2);
    if (c.region_indices.empty()) {
        c.verdict = Verdict::Inconclusive;
        c.note = "r1 = r2 lies on no region strip; the certificate does not apply";
        return c;
    }

    double t = z.cos_alpha();
    Verdict best = Verdict::NotCertified;
    bool first = true;
    for (long long n : c.region_indices) {
        double lhs = kn_condition_lhs(z.r1, z.r2, n);
        c.region_margins.push_back(lhs);
        double tr = trace_w_zero(z.r1, z.r2, t, n);
        double margin = tr - 3.0;
        WordCheck w{n, tr, margin, classify_real_trace(tr), margin >= -kClassTol};
        c.indices_checked.push_back(n);
        c.words.push_back(w);

        Verdict v;
        if (lhs < -kClassTol || !w.non_elliptic)
            v = Verdict::NotCertified;
        else if (lhs <= kClassTol)
            v = Verdict::Inconclusive;
        else
            v = Verdict::CertifiedDiscreteFaithful;

        bool better = first || (v == Verdict::CertifiedDiscreteFaithful &&
                                best != Verdict::CertifiedDiscreteFaithful) ||
                      (v == Verdict::Inconclusive && best == Verdict::NotCertified);
        if (better) {
            best = v;
            c.disjointness_margin = lhs;
        }
        first = false;
    }
    c.verdict = best;
    return c;
}

}  // namespace chtri
