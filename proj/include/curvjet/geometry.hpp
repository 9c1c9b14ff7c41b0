#pragma once

#include <array>
#include <cmath>

namespace curvjet {

/// Plain 3-vector with value semantics. Components are unitless; the
/// surrounding context supplies units.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) {
        return i == 0 ? x : (i == 1 ? y : z);
    }

    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator/(Vec3 v, double s) { return v *= (1.0 / s); }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double max_abs(const Vec3& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

inline bool all_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Dense 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> a{};

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 m;
        m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }
    static Mat3 outer(const Vec3& u, const Vec3& v) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = u[r] * v[c];
        return m;
    }

    double operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }
    double& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }

    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) a[static_cast<std::size_t>(i)] += o.a[static_cast<std::size_t>(i)];
        return *this;
    }
    Mat3& operator-=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) a[static_cast<std::size_t>(i)] -= o.a[static_cast<std::size_t>(i)];
        return *this;
    }
    Mat3& operator*=(double s) {
        for (double& v : a) v *= s;
        return *this;
    }

    Mat3 transposed() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
        return t;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(double s, Mat3 m) { return m *= s; }
inline Mat3 operator*(Mat3 m, double s) { return m *= s; }

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) c(r, j) += a(r, k) * b(k, j);
    return c;
}

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

inline double frobenius_norm(const Mat3& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

inline double max_abs(const Mat3& m) {
    double s = 0.0;
    for (double v : m.a) s = std::max(s, std::abs(v));
    return s;
}

inline bool all_finite(const Mat3& m) {
    for (double v : m.a)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace curvjet
