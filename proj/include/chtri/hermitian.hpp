#pragma once

#include <stdexcept>
#include <string>

#include "chtri/complex3.hpp"

// Hermitian geometry of C^{2,1} in its two standard models.
//
// Ball model:   <z,w> = z1 conj(w1) + z2 conj(w2) - z3 conj(w3)
// Siegel model: <z,w> = z1 conj(w3) + z2 conj(w2) + z3 conj(w1)
//
// Projective classes of vectors (negative / null / positive) correspond to
// interior points, boundary points and polar vectors of complex geodesics.

namespace chtri {

enum class Model { Ball, Siegel };

// Structural identities (form preservation, involutivity, normalization)
// are exact in closed form; residuals are pure rounding.
inline constexpr double kFormTol = 1e-10;
// Band half-width for the isometry-classification discriminant and for
// certificate condition margins.
inline constexpr double kClassTol = 1e-9;
// Slack for geometric comparisons that compound rounding through products.
inline constexpr double kGeoTol = 1e-8;

// Gram matrix J of the model's form, so that <z,w> = w^* J z.  Both choices
// are involutive: J^2 = I.
inline Mat3c gram(Model model) {
    Mat3c j;
    if (model == Model::Ball) {
        j(0, 0) = 1;
        j(1, 1) = 1;
        j(2, 2) = -1;
    } else {
        j(0, 2) = 1;
        j(1, 1) = 1;
        j(2, 0) = 1;
    }
    return j;
}

inline cplx herm(const Vec3c& z, const Vec3c& w, Model model) {
    if (model == Model::Ball)
        return z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]) - z[2] * std::conj(w[2]);
    return z[0] * std::conj(w[2]) + z[1] * std::conj(w[1]) + z[2] * std::conj(w[0]);
}

enum class VectorClass { Negative, Null, Positive };

inline const char* to_string(VectorClass c) {
    switch (c) {
        case VectorClass::Negative: return "Negative";
        case VectorClass::Null: return "Null";
        default: return "Positive";
    }
}

inline VectorClass vector_class(const Vec3c& z, Model model) {
    double scale = sup_norm(z);
    if (scale == 0.0) throw std::invalid_argument("vector_class: zero vector");
    double q = herm(z, z, model).real() / (scale * scale);
    if (q > kFormTol) return VectorClass::Positive;
    if (q < -kFormTol) return VectorClass::Negative;
    return VectorClass::Null;
}

// Hermitian cross product: the vector orthogonal to both arguments under the
// model's form.  With J the Gram matrix, J * (conj z x conj w) does it for any
// model; in the ball model this expands to the usual component formula.
inline Vec3c hermitian_cross(const Vec3c& z, const Vec3c& w, Model model) {
    Vec3c c = gram(model) * euclidean_cross(conj(z), conj(w));
    if (sup_norm(c) <= kFormTol * std::max(1.0, sup_norm(z) * sup_norm(w)))
        throw std::domain_error("hermitian_cross: inputs are proportional");
    return c;
}

// Hyperbolic distance between the projective points of two negative vectors:
// cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>).
inline double bergman_distance(const Vec3c& z, const Vec3c& w, Model model) {
    if (vector_class(z, model) != VectorClass::Negative ||
        vector_class(w, model) != VectorClass::Negative)
        throw std::domain_error("bergman_distance: both vectors must be negative");
    double num = std::norm(herm(z, w, model));
    double den = herm(z, z, model).real() * herm(w, w, model).real();
    double ch2 = num / den;
    if (ch2 < 1.0) ch2 = 1.0;  // rounding can land a hair below 1 at z = w
    return 2.0 * std::acosh(std::sqrt(ch2));
}

struct Isometry {
    Mat3c mat;
    Model model;
};

inline bool preserves_form(const Mat3c& m, Model model, double tol = kFormTol) {
    Mat3c j = gram(model);
    double scale = std::max(1.0, sup_norm(m));
    return sup_norm(m.adjoint() * j * m - j) <= tol * scale * scale;
}

inline bool is_involution(const Mat3c& m, double tol = kFormTol) {
    double scale = std::max(1.0, sup_norm(m));
    return sup_norm(m * m - Mat3c::identity()) <= tol * scale * scale;
}

// Complex reflection through the geodesic polar to n:
//   z |-> -z + 2 <z,n>/<n,n> n,  i.e.  R = -I + (2/<n,n>) n n^* J.
// Involutive, form preserving, det = +1 (eigenvalues 1, -1, -1).
inline Isometry reflection_from_polar(const Vec3c& n, Model model) {
    if (vector_class(n, model) != VectorClass::Positive)
        throw std::domain_error("reflection_from_polar: polar vector must be positive");
    cplx nn = herm(n, n, model);
    Mat3c j = gram(model);
    Mat3c r;
    // n n^* J without forming the outer product separately
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            cplx s = 0;
            for (std::size_t l = 0; l < 3; ++l) s += std::conj(n[l]) * j(l, k);
            r(i, k) = (2.0 / nn) * n[i] * s;
        }
    for (std::size_t i = 0; i < 3; ++i) r(i, i) -= 1.0;
    return {r, model};
}

// Inverse of a form-preserving matrix: M^* J M = J  =>  M^{-1} = J M^* J.
inline Mat3c form_inverse(const Isometry& g) {
    Mat3c j = gram(g.model);
    return j * g.mat.adjoint() * j;
}

enum class IsometryType { Loxodromic, RegularElliptic, Boundary };

inline const char* to_string(IsometryType t) {
    switch (t) {
        case IsometryType::Loxodromic: return "Loxodromic";
        case IsometryType::RegularElliptic: return "RegularElliptic";
        default: return "Boundary";
    }
}

struct IsometryClass {
    IsometryType type;
    double margin;  // value of the trace discriminant f(tr)
};

// Goldman's discriminant for SU(2,1): f(tau) = |tau|^4 - 8 Re(tau^3)
// + 18|tau|^2 - 27.  Positive for loxodromic, negative for regular elliptic,
// zero on the boundary surface (parabolics and boundary elliptics).  For real
// tau it factors as (tau-3)^3 (tau+1).  Requires det = 1; without the SU(2,1)
// normalization the discriminant means nothing.
inline IsometryClass classify_isometry(const Isometry& g) {
    double dscale = std::max(1.0, g.mat.det_scale());
    if (std::abs(g.mat.det() - cplx(1.0)) > kFormTol * dscale)
        throw std::domain_error("classify_isometry: determinant is not 1");
    cplx tau = g.mat.trace();
    double f = std::norm(tau) * std::norm(tau) - 8.0 * (tau * tau * tau).real() +
               18.0 * std::norm(tau) - 27.0;
    if (f > kClassTol) return {IsometryType::Loxodromic, f};
    if (f < -kClassTol) return {IsometryType::RegularElliptic, f};
    return {IsometryType::Boundary, f};
}

// Classification of a real trace, sharp at the parabolic boundary:
// f(tau) = (tau-3)^3 (tau+1), so elliptic exactly when -1 < tau < 3.
inline IsometryClass classify_real_trace(double tau) {
    double f = (tau - 3.0) * (tau - 3.0) * (tau - 3.0) * (tau + 1.0);
    if (f > kClassTol) return {IsometryType::Loxodromic, f};
    if (f < -kClassTol) return {IsometryType::RegularElliptic, f};
    return {IsometryType::Boundary, f};
}

}  // namespace chtri
