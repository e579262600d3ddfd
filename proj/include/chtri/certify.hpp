#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "chtri/triangle.hpp"

// Discreteness certificates for the m3 > 0 case.  A parameter point is
// certified discrete and faithful when
//   (1) the mirror C3 stays ultra-parallel to the common orthogonal geodesic
//       C12 of C1 and C2 (strict separation margin > 0),
//   (2) the projected disk of C3 misses all its translates under the cyclic
//       group generated by R2 R1 (a quadratic inequality in cos alpha), and
//   (3) the words w^(n) = R1 (R2 R1)^n R3 are non-elliptic for the at most
//       two indices picked by the axis-segment algorithm.
//
// The exponentially weighted sums below cancel heavily near thresholds, so
// they are evaluated in extended precision and rounded once at the end.

namespace chtri {

struct QuadraticCoeffs {
    double a0, a1, a2;

    double eval(double t) const { return (a2 * t + a1) * t + a0; }
    // Axis of symmetry; the quadratic is increasing to its right.
    double axis() const { return -a1 / (2.0 * a2); }
};

// Coefficients of the disk-disjointness condition a2 t^2 + a1 t + a0 >= 0
// with t = cos(alpha).
inline QuadraticCoeffs quadratic_coeffs(double r1, double r2, double r3) {
    double r1sq = r1 * r1, r2sq = r2 * r2, r3sq = r3 * r3;
    QuadraticCoeffs q;
    q.a2 = 4.0 * r1sq * r2sq * r3sq;
    q.a1 = 2.0 * r1 * r2 * r3 * (1.0 - 2.0 * r3sq * (r1sq + r2sq));
    q.a0 = 4.0 * r1sq * r2sq * r3sq * r3sq + r3sq * (r1sq - r2sq) * (r1sq - r2sq) -
           r1sq - r2sq - r3sq + 1.0;
    return q;
}

namespace detail {

// tr(w^(n)) as a function of t = cos(alpha); affine and strictly decreasing
// in t.  No admissibility is required of t: the expression is the analytic
// continuation of the word trace.
inline long double trace_w_ld(double r1, double r2, double r3, long double t, long long n) {
    long double R1 = r1, R2 = r2, R3 = r3;
    long double S3 = std::sqrt(R3 * R3 - 1.0L);
    long double qp = ipowl(R3 + S3, 2 * n + 2);
    long double qm = ipowl(R3 - S3, 2 * n + 2);
    long double b = (2.0L * R1 * R1 * R3 * R3 - R1 * R1 + R2 * R2) * S3;
    long double c = 2.0L * R1 * R1 * R3 * (R3 * R3 - 1.0L);
    long double a0 = qm * (b + c - 2.0L * R1 * R2 * S3 * (R3 + S3) * t);
    long double a1 = qp * (b - c - 2.0L * R1 * R2 * S3 * (R3 - S3) * t);
    long double a2 = S3 * (4.0L * R1 * R2 * R3 * t - 2.0L * R1 * R1 - 2.0L * R2 * R2 -
                           R3 * R3 + 1.0L);
    return (a0 + a1 + a2) / (S3 * S3 * S3);
}

}  // namespace detail

// The root of tr(w^(n)) = 3 in cos(alpha): w^(n) is unipotent parabolic at
// cos(alpha) = t_n, loxodromic below, elliptic above.
inline double t_n_threshold(double r1, double r2, double r3, long long n) {
    if (n < 1) throw std::invalid_argument("t_n_threshold: need n >= 1");
    if (!(r3 > 1.0)) throw std::invalid_argument("t_n_threshold: need r3 > 1");
    long double R1 = r1, R2 = r2, R3 = r3;
    long double S3 = std::sqrt(R3 * R3 - 1.0L);
    long double qp = ipowl(R3 + S3, 2 * n + 2);
    long double qm = ipowl(R3 - S3, 2 * n + 2);
    long double b = (2.0L * R1 * R1 * R3 * R3 - R1 * R1 + R2 * R2) * S3;
    long double c = 2.0L * R1 * R1 * R3 * (R3 * R3 - 1.0L);
    long double a0 = qm * (b + c);
    long double a1 = qp * (b - c);
    long double a2 = -2.0L * S3 * (R1 * R1 + R2 * R2 + 2.0L * R3 * R3 - 2.0L);
    long double den = 2.0L * R1 * R2 * S3 *
                      (ipowl(R3 + S3, 2 * n + 1) + ipowl(R3 - S3, 2 * n + 1) - 2.0L * R3);
    return static_cast<double>((a0 + a1 + a2) / den);
}

inline double trace_w_formula(double r1, double r2, double r3, double cos_alpha, long long n) {
    if (n < 1) throw std::invalid_argument("trace_w_formula: need n >= 1");
    if (!(r3 > 1.0)) throw std::invalid_argument("trace_w_formula: need r3 > 1");
    return static_cast<double>(detail::trace_w_ld(r1, r2, r3, cos_alpha, n));
}

inline double trace_w(const TriangleParams& p, long long n) {
    return trace_w_formula(p.r1, p.r2, p.r3, p.cos_alpha(), n);
}

// Orthogonal projection of the disk center onto the axis (-1,1) as a function
// of t = cos(alpha):
//   f(t) = (sqrt(x0 - x1 t) - sqrt(y0 - y1 t)) / (sqrt(x0 - x1 t) + sqrt(y0 - y1 t))
// with x0 = r1^2 (r3+s3)^2 + r2^2, x1 = 2 r1 r2 (r3+s3) and y0, y1 the mirror
// images under s3 -> -s3.  Nondecreasing in t; f(cos alpha) equals
// project_to_axis of the projected disk center.
inline double projection_f(double r1, double r2, double r3, double t) {
    if (!(r3 > 1.0)) throw std::invalid_argument("projection_f: need r3 > 1");
    double s3 = std::sqrt(r3 * r3 - 1.0);
    double x0 = r1 * r1 * (r3 + s3) * (r3 + s3) + r2 * r2;
    double x1 = 2.0 * r1 * r2 * (r3 + s3);
    double y0 = r1 * r1 * (r3 - s3) * (r3 - s3) + r2 * r2;
    double y1 = 2.0 * r1 * r2 * (r3 - s3);
    double rx = x0 - x1 * t;
    double ry = y0 - y1 * t;
    if (rx < -kClassTol || ry < -kClassTol)
        throw std::domain_error("projection_f: negative radicand");
    double p = std::sqrt(std::max(rx, 0.0));
    double q = std::sqrt(std::max(ry, 0.0));
    return (p - q) / (p + q);
}

// Index l of the axis segment (v_{l-1}, v_l] containing the point pi3 of the
// axis (-1,1).  Solves v_k < pi3 in closed form; the half-open convention
// makes exact hits v_l map to l, which the small backoff preserves under
// rounding.
inline long long segment_index(double pi3, double r3) {
    if (!(pi3 > 0.0 && pi3 < 1.0))
        throw std::domain_error("segment_index: projection outside (0, 1)");
    double s3 = std::sqrt(r3 * r3 - 1.0);
    double L = (std::log1p(pi3) - std::log1p(-pi3)) / (2.0 * std::log(r3 + s3));
    long long l = static_cast<long long>(std::ceil(L - kClassTol));
    return std::max(l, 1LL);
}

inline long long segment_index_l(const TriangleParams& p) {
    return segment_index(projection_f(p.r1, p.r2, p.r3, p.cos_alpha()), p.r3);
}

// Word indices that must be tested: {l-2, l-1} clipped to positive integers.
// Indices 0 and -1 correspond to R1 R3 and R2 R3, products of reflections in
// disjoint mirrors, which are never elliptic.
inline std::vector<long long> indices_to_check(const TriangleParams& p) {
    long long l = segment_index_l(p);
    std::vector<long long> out;
    if (l - 2 >= 1) out.push_back(l - 2);
    if (l - 1 >= 1) out.push_back(l - 1);
    return out;
}

enum class Verdict { CertifiedDiscreteFaithful, NotCertified, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedDiscreteFaithful: return "CertifiedDiscreteFaithful";
        case Verdict::NotCertified: return "NotCertified";
        default: return "Inconclusive";
    }
}

struct WordCheck {
    long long n;
    double trace;       // real trace of w^(n)
    double margin;      // trace - 3
    IsometryClass cls;  // via the real-trace factorization
    bool non_elliptic;  // margin >= -kClassTol (trace >= 3 is a closed condition)
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    // Condition (1), strict: values inside the +-kClassTol band are inconclusive.
    double separation_margin = std::numeric_limits<double>::quiet_NaN();
    // Condition (2), closed, but band values are still surfaced as inconclusive
    // since the certificate cannot distinguish tangency from overlap.
    double disjointness_margin = std::numeric_limits<double>::quiet_NaN();
    std::vector<long long> indices_checked;
    std::vector<WordCheck> words;
    // m3 = 0 certificates carry the admissible region indices and the
    // per-index linear condition values; empty otherwise.
    std::vector<long long> region_indices;
    std::vector<double> region_margins;
    std::string note;
};

namespace detail {

inline WordCheck make_word_check(double r1, double r2, double r3, double t, long long n) {
    double tr = trace_w_formula(r1, r2, r3, t, n);
    double margin = tr - 3.0;
    return {n, tr, margin, classify_real_trace(tr), margin >= -kClassTol};
}

}  // namespace detail

// Certificate for a given index list (the algorithmic pair by default, or an
// explicit 1..n_max sweep).
inline Certificate certify_with_indices(const TriangleParams& p,
                                        const std::vector<long long>& indices) {
    if (p.cos_alpha() > existence_bound(p.r1, p.r2, p.r3) + kClassTol)
        throw std::domain_error("certify: parameters violate the existence bound");

    Certificate c;
    c.separation_margin = separation_margin(p);
    c.disjointness_margin = quadratic_coeffs(p.r1, p.r2, p.r3).eval(p.cos_alpha());
    c.indices_checked = indices;
    for (long long n : indices)
        c.words.push_back(detail::make_word_check(p.r1, p.r2, p.r3, p.cos_alpha(), n));

    // Pass only on a strict clearance of the band; anything else (including a
    // non-finite margin) is at best inconclusive.
    bool fail = false, band = false;
    for (double margin : {c.separation_margin, c.disjointness_margin}) {
        if (margin < -kClassTol)
            fail = true;
        else if (!(margin > kClassTol))
            band = true;
    }
    for (const WordCheck& w : c.words)
        if (!w.non_elliptic) fail = true;

    c.verdict = fail    ? Verdict::NotCertified
                : band  ? Verdict::Inconclusive
                        : Verdict::CertifiedDiscreteFaithful;
    return c;
}

inline Certificate certify_theorem1(const TriangleParams& p) {
    // The segment algorithm needs the projected center; if the separation
    // condition already fails there is no disk and nothing to check beyond it.
    std::vector<long long> indices;
    bool clipped = false;
    if (separation_margin(p) > -kClassTol) {
        try {
            indices = indices_to_check(p);
            clipped = indices.size() < 2;
        } catch (const std::domain_error&) {
            Certificate c = certify_with_indices(p, {});
            c.verdict = Verdict::Inconclusive;
            c.note = "projected center outside (0,1); index selection undefined";
            return c;
        }
    }
    Certificate c = certify_with_indices(p, indices);
    if (clipped)
        c.note = "word indices 0 and -1 (R1 R3 and R2 R3, reflections in disjoint "
                 "mirrors) are never elliptic and were skipped";
    return c;
}

// Brute-force variant: test every word index 1..n_max instead of the pair.
inline Certificate certify_theorem1_all_n(const TriangleParams& p, long long n_max) {
    std::vector<long long> indices;
    for (long long n = 1; n <= n_max; ++n) indices.push_back(n);
    Certificate c = certify_with_indices(p, indices);
    c.note = "exhaustive word check up to n_max";
    return c;
}

// Membership of (r1, r2) in the region K_j (index j minimizes the parabolic
// threshold t_j among 1..j0+1) and in its subset K_j' where discreteness is
// equivalent to non-ellipticity of the single word w^(j).
struct RegionMembership {
    long long j;
    bool in_kj;
    bool in_kj_prime;
    double tj;
    // K_j' conditions: separation at t_j, quadratic axis location, quadratic
    // value at t_j, index cap v_{j+2} - f(1).
    std::array<double, 4> condition_margins;
};

inline RegionMembership region_membership(double r1, double r2, double r3, long long j,
                                          long long j0) {
    if (!(r2 > 1.0 && r2 <= r1)) throw std::invalid_argument("region_membership: need 1 < r2 <= r1");
    if (!(r3 > 1.0)) throw std::invalid_argument("region_membership: need r3 > 1");
    if (!(j >= 1 && j <= j0)) throw std::invalid_argument("region_membership: need 1 <= j <= j0");

    RegionMembership m;
    m.j = j;
    m.tj = t_n_threshold(r1, r2, r3, j);
    m.in_kj = true;
    for (long long k = 1; k <= j0 + 1; ++k) {
        if (k == j) continue;
        if (m.tj > t_n_threshold(r1, r2, r3, k) + kClassTol) m.in_kj = false;
    }

    m.condition_margins[0] = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * r3 * m.tj;
    m.condition_margins[1] = 2.0 * r3 * r3 * (r1 * r1 + r2 * r2) - 4.0 * r1 * r2 * r3 * m.tj - 1.0;
    m.condition_margins[2] = quadratic_coeffs(r1, r2, r3).eval(m.tj);
    double f1;
    try {
        f1 = projection_f(r1, r2, r3, 1.0);
    } catch (const std::domain_error&) {
        f1 = 1.0;  // radicand collapse at t = 1; treat the cap as failed
    }
    m.condition_margins[3] = v_coordinate(r3, j + 2) - f1;

    m.in_kj_prime = m.in_kj;
    for (double margin : m.condition_margins)
        if (margin < -kClassTol) m.in_kj_prime = false;
    return m;
}

}  // namespace chtri
