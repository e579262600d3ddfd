#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// cross-check.  Word traces are recomputed with extended-precision matrix
// products built from first principles (reflection formula applied to the
// polar vectors), and the axis projection is rederived through the upper
// half-plane.

#include <array>
#include <complex>
#include <random>

#include "chtri/triangle.hpp"

namespace oracles {

using cld = std::complex<long double>;
using Mat = std::array<std::array<cld, 3>, 3>;

inline Mat identity() {
    Mat m{};
    m[0][0] = m[1][1] = m[2][2] = 1.0L;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cld s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline cld trace(const Mat& m) { return m[0][0] + m[1][1] + m[2][2]; }

inline Mat from_mat3c(const chtri::Mat3c& m) {
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = cld(m(i, j).real(), m(i, j).imag());
    return r;
}

// Ball-model reflection through the polar vector n, built directly from
// z |-> -z + 2 <z,n>/<n,n> n in long double arithmetic.
inline Mat ball_reflection(const std::array<cld, 3>& n) {
    cld nn = n[0] * std::conj(n[0]) + n[1] * std::conj(n[1]) - n[2] * std::conj(n[2]);
    long double jdiag[3] = {1.0L, 1.0L, -1.0L};
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            r[i][k] = 2.0L / nn * n[i] * std::conj(n[k]) * jdiag[k] - (i == k ? 1.0L : 0.0L);
    return r;
}

// The three generators for given triangle parameters, long double throughout.
struct UltraGenerators {
    Mat r1, r2, r3;
};

inline UltraGenerators ultra_generators(double r1d, double r2d, double r3d, double cos_alpha) {
    long double r1 = r1d, r2 = r2d, r3 = r3d, t = cos_alpha;
    long double s3 = std::sqrt(r3 * r3 - 1.0L);
    long double sin_alpha = std::sqrt(std::max(0.0L, 1.0L - t * t));
    cld z3 = (r1 * r3 - r2 * cld(t, -sin_alpha)) / s3;
    long double z1sq = std::norm(z3) - r1 * r1 + 1.0L;
    long double z1 = std::sqrt(std::max(z1sq, 0.0L));
    UltraGenerators g;
    g.r1 = ball_reflection({cld(0), cld(r3), cld(s3)});
    g.r2 = ball_reflection({cld(0), cld(1), cld(0)});
    g.r3 = ball_reflection({cld(z1), cld(r1), z3});
    return g;
}

// tr(R1 (R2 R1)^n R3) by repeated multiplication.
inline long double trace_word_ultra(double r1, double r2, double r3, double cos_alpha,
                                    long long n) {
    UltraGenerators g = ultra_generators(r1, r2, r3, cos_alpha);
    Mat step = mul(g.r2, g.r1);
    Mat w = g.r1;
    for (long long i = 0; i < n; ++i) w = mul(w, step);
    w = mul(w, g.r3);
    return trace(w).real();
}

// Siegel-model reflection through the polar vector n, from the same defining
// formula with the antidiagonal form.
inline Mat siegel_reflection(const std::array<cld, 3>& n) {
    cld nn = n[0] * std::conj(n[2]) + n[1] * std::conj(n[1]) + n[2] * std::conj(n[0]);
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            r[i][k] = 2.0L / nn * n[i] * std::conj(n[2 - k]) - (i == k ? 1.0L : 0.0L);
    return r;
}

// tr(R1 (R2 R1)^n R3) for the m3 = 0 configuration, long double throughout.
inline long double trace_word_zero(double r1d, double r2d, double alpha, long long n) {
    long double r1 = r1d, r2 = r2d;
    long double theta = (3.14159265358979323846264338327950288L - (long double)alpha) / 2.0L;
    long double rt2 = std::sqrt(2.0L);
    cld eit(std::cos(theta), std::sin(theta));
    Mat m1 = siegel_reflection({rt2 * r2 * std::conj(eit), cld(1), cld(0)});
    Mat m2 = siegel_reflection({-rt2 * r1 * eit, cld(1), cld(0)});
    Mat m3 = siegel_reflection({cld(1.0L / rt2), cld(0), cld(1.0L / rt2)});
    Mat step = mul(m2, m1);
    Mat w = m1;
    for (long long i = 0; i < n; ++i) w = mul(w, step);
    w = mul(w, m3);
    return trace(w).real();
}

// Axis projection through the half-plane model: pull the disk point back with
// f^{-1}(z) = (z conj ... ) the Cayley map, project onto the imaginary axis by
// taking the modulus, and push forward again.
inline double project_via_half_plane(std::complex<double> z) {
    std::complex<double> i(0, 1);
    std::complex<double> w = (-2.0 * z.imag() + i * (1.0 - std::norm(z))) /
                             (std::norm(z) - 2.0 * z.real() + 1.0);
    std::complex<double> axis_point = std::abs(w) * i;
    std::complex<double> back = (axis_point - i) / (axis_point + i);
    return back.real();
}

// Deterministic parameter samplers.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    long long uniform_int(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }
};

// Random ordered radii r1 >= r2 >= r3 > 1 inside ranges where the closed
// forms stay verifiable at the stated tolerances in double precision.
struct Radii {
    double r1, r2, r3;
};

inline Radii sample_radii(Rng& rng, double r3_max = 1.3, double r2_max = 4.0,
                          double r1_max = 5.0) {
    double r3 = rng.uniform(1.005, r3_max);
    double r2 = rng.uniform(r3, r2_max);
    double r1 = rng.uniform(r2, r1_max);
    return {r1, r2, r3};
}

// A random admissible angle for given radii: cos(alpha) below both the
// existence bound and 1.
inline double sample_admissible_cos(Rng& rng, const Radii& r, double headroom = 1e-3) {
    double hi = std::min(1.0, chtri::existence_bound(r.r1, r.r2, r.r3)) - headroom;
    return rng.uniform(-1.0, hi);
}

}  // namespace oracles
