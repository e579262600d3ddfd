#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>

// Small dense complex linear algebra for C^{2,1}. Everything is a value type;
// 3x3 is small enough that hand-rolled loops beat any library dependency.

namespace chtri {

using cplx = std::complex<double>;

struct Vec3c {
    cplx v[3];

    constexpr Vec3c() : v{cplx(0), cplx(0), cplx(0)} {}
    constexpr Vec3c(cplx a, cplx b, cplx c) : v{a, b, c} {}

    constexpr cplx& operator[](std::size_t i) { return v[i]; }
    constexpr const cplx& operator[](std::size_t i) const { return v[i]; }

    friend Vec3c operator+(const Vec3c& a, const Vec3c& b) {
        return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
    }
    friend Vec3c operator-(const Vec3c& a, const Vec3c& b) {
        return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]};
    }
    friend Vec3c operator*(cplx s, const Vec3c& a) {
        return {s * a.v[0], s * a.v[1], s * a.v[2]};
    }
    friend Vec3c operator-(const Vec3c& a) { return {-a.v[0], -a.v[1], -a.v[2]}; }

    friend std::ostream& operator<<(std::ostream& os, const Vec3c& a) {
        return os << "(" << a.v[0] << ", " << a.v[1] << ", " << a.v[2] << ")";
    }
};

inline Vec3c conj(const Vec3c& a) {
    return {std::conj(a.v[0]), std::conj(a.v[1]), std::conj(a.v[2])};
}

// Largest component modulus; the natural scale of a homogeneous vector.
inline double sup_norm(const Vec3c& a) {
    return std::max({std::abs(a.v[0]), std::abs(a.v[1]), std::abs(a.v[2])});
}

// Euclidean (bilinear) cross product of the raw coordinates.
inline Vec3c euclidean_cross(const Vec3c& a, const Vec3c& b) {
    return {a.v[1] * b.v[2] - a.v[2] * b.v[1],
            a.v[2] * b.v[0] - a.v[0] * b.v[2],
            a.v[0] * b.v[1] - a.v[1] * b.v[0]};
}

// z and w span the same complex line iff their coordinate cross product vanishes.
inline bool projectively_equal(const Vec3c& a, const Vec3c& b, double tol = 1e-9) {
    double scale = sup_norm(a) * sup_norm(b);
    return sup_norm(euclidean_cross(a, b)) <= tol * std::max(1.0, scale);
}

struct Mat3c {
    cplx m[3][3];

    constexpr Mat3c() : m{} {}

    static constexpr Mat3c identity() {
        Mat3c r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = cplx(1);
        return r;
    }

    static Mat3c from_rows(const Vec3c& r0, const Vec3c& r1, const Vec3c& r2) {
        Mat3c r;
        for (std::size_t j = 0; j < 3; ++j) {
            r.m[0][j] = r0[j];
            r.m[1][j] = r1[j];
            r.m[2][j] = r2[j];
        }
        return r;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    cplx trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    cplx det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Sum of |a||b||c| over the det expansion; bounds the absolute rounding
    // error of det() and gives the right scale for unimodularity checks.
    double det_scale() const {
        auto t = [&](int i, int j, int k) {
            return std::abs(m[0][i]) * std::abs(m[1][j]) * std::abs(m[2][k]);
        };
        return t(0, 1, 2) + t(0, 2, 1) + t(1, 0, 2) + t(1, 2, 0) + t(2, 0, 1) + t(2, 1, 0);
    }

    Mat3c adjoint() const {  // conjugate transpose
        Mat3c r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = std::conj(m[j][i]);
        return r;
    }

    friend Mat3c operator*(const Mat3c& a, const Mat3c& b) {
        Mat3c r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                cplx s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    friend Vec3c operator*(const Mat3c& a, const Vec3c& x) {
        Vec3c r;
        for (std::size_t i = 0; i < 3; ++i)
            r[i] = a.m[i][0] * x[0] + a.m[i][1] * x[1] + a.m[i][2] * x[2];
        return r;
    }

    friend Mat3c operator-(const Mat3c& a, const Mat3c& b) {
        Mat3c r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat3c& a) {
        for (std::size_t i = 0; i < 3; ++i) {
            os << "[" << a.m[i][0] << ", " << a.m[i][1] << ", " << a.m[i][2] << "]";
            if (i < 2) os << "\n";
        }
        return os;
    }
};

inline double sup_norm(const Mat3c& a) {
    double r = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(a.m[i][j]));
    return r;
}

// Entrywise comparison relative to the larger matrix scale.
inline double relative_gap(const Mat3c& a, const Mat3c& b) {
    double scale = std::max(1.0, std::max(sup_norm(a), sup_norm(b)));
    return sup_norm(a - b) / scale;
}

// Integer power by repeated squaring; exact for n = 0 and handles x > 0 only.
inline double ipow(double x, long long n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double r = 1.0, base = x;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline long double ipowl(long double x, long long n) {
    if (n < 0) return 1.0L / ipowl(x, -n);
    long double r = 1.0L, base = x;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace chtri
