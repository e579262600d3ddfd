#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chtri/complex3.hpp"

// Hyperbolic geometry of the unit disk.  The complex geodesic orthogonal to
// (1,0,0) in the ball model consists of points (0, w, 1) with |w| < 1; group
// elements fixing it act on w through their lower-right 2x2 block.

namespace chtri {

// w |-> (a w + b) / (c w + d)
struct Mobius {
    cplx a, b, c, d;

    cplx apply(cplx w) const { return (a * w + b) / (c * w + d); }

    friend Mobius operator*(const Mobius& f, const Mobius& g) {
        return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
    }
};

// Restriction of a 3x3 ball-model matrix with first row/column (s,0,0) to the
// disk coordinate w = z2/z3.
inline Mobius restrict_to_disk(const Mat3c& m) {
    return {m(1, 1), m(1, 2), m(2, 1), m(2, 2)};
}

// Distance normalized so that dist(0, x) = 2 artanh(x); this matches the
// Bergman metric restricted to a complex geodesic.
inline double disk_distance(cplx z, cplx w) {
    double t = std::abs((z - w) / (cplx(1) - std::conj(z) * w));
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::atanh(t);
}

// Orthogonal projection onto the geodesic (-1, 1) of the unit disk.
inline double project_to_axis(cplx z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("project_to_axis: point must lie in the open unit disk");
    double n2 = std::norm(z);
    double re2 = 2.0 * z.real();
    double p = std::sqrt(n2 + re2 + 1.0);
    double q = std::sqrt(n2 - re2 + 1.0);
    return (p - q) / (p + q);
}

// Lift of a disk coordinate back to the ball model.
inline Vec3c disk_lift(cplx w) { return {cplx(0), w, cplx(1)}; }

}  // namespace chtri
