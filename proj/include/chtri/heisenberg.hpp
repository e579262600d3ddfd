#pragma once

#include <cmath>
#include <stdexcept>

#include "chtri/hermitian.hpp"

// The Heisenberg group C x R models the boundary of the Siegel domain minus
// the point at infinity.  Points are written [zeta, t].

namespace chtri {

struct HeisenbergPoint {
    cplx zeta;
    double t;
};

inline HeisenbergPoint heis_identity() { return {cplx(0), 0.0}; }

// Group law: [z1,t1] * [z2,t2] = [z1+z2, t1+t2+2 Im(z1 conj(z2))].
inline HeisenbergPoint heis_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
    return {a.zeta + b.zeta, a.t + b.t + 2.0 * std::imag(a.zeta * std::conj(b.zeta))};
}

inline HeisenbergPoint heis_inverse(const HeisenbergPoint& a) { return {-a.zeta, -a.t}; }

// Cygan metric: rho0(p, q) = | |z1-z2|^2 - i t1 + i t2 - 2 i Im(z1 conj(z2)) |^{1/2}.
inline double cygan_distance(const HeisenbergPoint& p, const HeisenbergPoint& q) {
    cplx inner(std::norm(p.zeta - q.zeta),
               -p.t + q.t - 2.0 * std::imag(p.zeta * std::conj(q.zeta)));
    return std::sqrt(std::abs(inner));
}

// Null lift of a boundary point into the Siegel model.
inline Vec3c heis_lift(const HeisenbergPoint& p) {
    return {cplx(-std::norm(p.zeta), p.t), std::sqrt(2.0) * p.zeta, cplx(1)};
}

// Inverse of heis_lift for null vectors not representing infinity.
inline HeisenbergPoint heis_from_lift(const Vec3c& z) {
    if (std::abs(z[2]) < 1e-300)
        throw std::domain_error("heis_from_lift: vector represents the point at infinity");
    cplx zeta = z[1] / (std::sqrt(2.0) * z[2]);
    double t = std::imag(z[0] / z[2]);
    return {zeta, t};
}

// Heisenberg translation by [zeta, t] as a Siegel-model matrix; unipotent,
// fixes infinity, acts on the boundary as left multiplication.
inline Mat3c heis_translation(const HeisenbergPoint& p) {
    Mat3c m = Mat3c::identity();
    m(0, 1) = -std::sqrt(2.0) * std::conj(p.zeta);
    m(0, 2) = cplx(-std::norm(p.zeta), p.t);
    m(1, 2) = std::sqrt(2.0) * p.zeta;
    return m;
}

}  // namespace chtri
