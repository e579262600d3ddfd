#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chtri/disk.hpp"
#include "chtri/hermitian.hpp"

// Parametrization of ultra-parallel [m1, m2, m3]-triangle groups with m3 > 0
// in the ball model.  A group is determined by r_j = cosh(m_j / 2) >= 1 with
// r1 >= r2 >= r3 > 1 together with the angular invariant
// alpha = arg(<n1,n3><n2,n1><n3,n2>) in [0, pi].

namespace chtri {

struct TriangleParams {
    double r1, r2, r3;
    double alpha;  // radians, folded into [0, pi]
    double s1, s2, s3;
    bool alpha_folded = false;  // input alpha was outside [0, pi]

    double cos_alpha() const { return std::cos(alpha); }

    static TriangleParams from_r(double r1, double r2, double r3, double alpha) {
        if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(r3) ||
            !std::isfinite(alpha))
            throw std::invalid_argument("TriangleParams: parameters must be finite");
        if (!(r1 >= r2 && r2 >= r3))
            throw std::invalid_argument("TriangleParams: need r1 >= r2 >= r3");
        if (!(r3 > 1.0))
            throw std::invalid_argument("TriangleParams: need r3 > 1 (m3 > 0)");
        TriangleParams p;
        p.r1 = r1;
        p.r2 = r2;
        p.r3 = r3;
        p.alpha = fold_angle(alpha, p.alpha_folded);
        p.s1 = std::sqrt(r1 * r1 - 1.0);
        p.s2 = std::sqrt(r2 * r2 - 1.0);
        p.s3 = std::sqrt(r3 * r3 - 1.0);
        return p;
    }

    static TriangleParams from_m(double m1, double m2, double m3, double alpha) {
        return from_r(std::cosh(m1 / 2), std::cosh(m2 / 2), std::cosh(m3 / 2), alpha);
    }

    // Groups with angular invariants alpha and 2 pi - alpha are conjugate by
    // an anti-holomorphic isometry, so alpha is canonically in [0, pi].
    static double fold_angle(double alpha, bool& folded) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        folded = false;
        double a = std::fmod(alpha, two_pi);
        if (a < 0) a += two_pi;
        if (a > std::numbers::pi) {
            a = two_pi - a;
            folded = true;
        }
        if (a != alpha) folded = true;
        return a;
    }
};

// The triangle exists iff cos(alpha) <= existence_bound(r1, r2, r3).
inline double existence_bound(double r1, double r2, double r3) {
    return (r1 * r1 + r2 * r2 + r3 * r3 - 1.0) / (2.0 * r1 * r2 * r3);
}

// M = (r1^2 + r2^2 + r3^2 - 2 r1 r2 r3 cos(alpha) - 1) / (r3^2 - 1).
// Equals z1^2 of the third polar vector; the triangle exists iff M >= 0, and
// the mirror C3 is ultra-parallel to the common orthogonal geodesic C12 of C1
// and C2 iff M > 1.
inline double disk_parameter(const TriangleParams& p) {
    double t = p.cos_alpha();
    return (p.r1 * p.r1 + p.r2 * p.r2 + p.r3 * p.r3 - 2.0 * p.r1 * p.r2 * p.r3 * t - 1.0) /
           (p.r3 * p.r3 - 1.0);
}

// Margin of the strict separation condition cos(alpha) < (r1^2+r2^2)/(2 r1 r2 r3),
// equivalently M > 1.  Positive means C3 and C12 are ultra-parallel.
inline double separation_margin(const TriangleParams& p) {
    return (p.r1 * p.r1 + p.r2 * p.r2) / (2.0 * p.r1 * p.r2 * p.r3) - p.cos_alpha();
}

struct PolarTriple {
    Vec3c n1, n2, n3;
};

// Normalized polar vectors of the three mirrors:
//   n1 = (0, r3, s3),  n2 = (0, 1, 0),  n3 = (z1, r1, z3),
// with z3 = (r1 r3 - r2 e^{-i alpha}) / s3 and z1 = sqrt(|z3|^2 - r1^2 + 1).
inline PolarTriple polar_vectors(const TriangleParams& p) {
    cplx z3 = (p.r1 * p.r3 - p.r2 * std::exp(cplx(0, -p.alpha))) / p.s3;
    double z1sq = std::norm(z3) - p.r1 * p.r1 + 1.0;
    if (z1sq < -kClassTol)
        throw std::domain_error("polar_vectors: existence bound violated (cos alpha too large)");
    double z1 = std::sqrt(std::max(z1sq, 0.0));
    PolarTriple t;
    t.n1 = {cplx(0), cplx(p.r3), cplx(p.s3)};
    t.n2 = {cplx(0), cplx(1), cplx(0)};
    t.n3 = {cplx(z1), cplx(p.r1), z3};
    return t;
}

// The three generators in closed form.  R2 = diag(-1, 1, -1); R1 mixes the
// last two coordinates through (r3, s3); R3 is the reflection polar to n3.
inline std::array<Isometry, 3> generators(const TriangleParams& p) {
    PolarTriple n = polar_vectors(p);
    double r3 = p.r3, s3 = p.s3;

    Mat3c m1;
    m1(0, 0) = -1;
    m1(1, 1) = r3 * r3 + s3 * s3;
    m1(1, 2) = -2.0 * r3 * s3;
    m1(2, 1) = 2.0 * r3 * s3;
    m1(2, 2) = -(r3 * r3 + s3 * s3);

    Mat3c m2;
    m2(0, 0) = -1;
    m2(1, 1) = 1;
    m2(2, 2) = -1;

    cplx z1 = n.n3[0], z3 = n.n3[2];
    double r1 = p.r1;
    Mat3c m3;
    m3(0, 0) = 2.0 * z1 * z1 - 1.0;
    m3(0, 1) = 2.0 * z1 * r1;
    m3(0, 2) = -2.0 * z1 * std::conj(z3);
    m3(1, 0) = 2.0 * z1 * r1;
    m3(1, 1) = 2.0 * r1 * r1 - 1.0;
    m3(1, 2) = -2.0 * std::conj(z3) * r1;
    m3(2, 0) = 2.0 * z1 * z3;
    m3(2, 1) = 2.0 * r1 * z3;
    m3(2, 2) = -2.0 * std::norm(z3) - 1.0;

    return {Isometry{m1, Model::Ball}, Isometry{m2, Model::Ball}, Isometry{m3, Model::Ball}};
}

// (R2 R1)^n in closed form: the restriction to C12 is a hyperbolic translation
// along (-1,1) of length 2 n m3, diagonalized by the Cayley basis.
inline Isometry power_r2r1(const TriangleParams& p, long long n) {
    double qm = ipow(p.r3 - p.s3, 2 * n);
    double qp = ipow(p.r3 + p.s3, 2 * n);
    Mat3c m;
    m(0, 0) = 1;
    m(1, 1) = m(2, 2) = (qm + qp) / 2.0;
    m(1, 2) = m(2, 1) = (qm - qp) / 2.0;
    return {m, Model::Ball};
}

// Orthogonal projection of the mirror C3 onto C12: an open hyperbolic disk.
struct ProjectedDisk {
    cplx center;    // unit-disk coordinate of C0 /\ C12
    double radius;  // hyperbolic radius d3, cosh(d3) = (M+1)/(M-1)
};

inline ProjectedDisk projected_disk(const TriangleParams& p) {
    double M = disk_parameter(p);
    if (M <= 1.0 + kClassTol)
        throw std::domain_error("projected_disk: C3 and C12 are not ultra-parallel");
    cplx center = p.s3 * p.r1 / (p.r1 * p.r3 - p.r2 * std::exp(cplx(0, -p.alpha)));
    double radius = std::acosh((M + 1.0) / (M - 1.0));
    return {center, radius};
}

// Points v_j on the axis (-1,1) of C12 at distance |j| m3 from v0 = C2 /\ C12;
// v1 = C1 /\ C12 = s3/r3.
inline double v_coordinate(double r3, long long j) {
    if (!(r3 > 1.0)) throw std::invalid_argument("v_coordinate: need r3 > 1");
    double s3 = std::sqrt(r3 * r3 - 1.0);
    double a = ipow(r3 + s3, j);
    double b = ipow(r3 - s3, j);
    return (a - b) / (a + b);
}

}  // namespace chtri
