#pragma once

#include <curvjet/errors.hpp>
#include <curvjet/geometry.hpp>

namespace curvjet {

/// Anti-symmetric 3x3 matrix. The full matrix is stored so that matrix
/// algebra on it reads one-to-one with the formulas it implements.
class Skew3 {
public:
    Skew3() = default;  // zero matrix

    /// Wraps a matrix already known to be anti-symmetric (no check).
    static Skew3 from_axial(const Vec3& v);

    /// Validating constructor: throws NotSkew if max |M + M^T| > 1e-12.
    static Skew3 from_matrix(const Mat3& m);

    const Mat3& matrix() const { return m_; }
    Vec3 axial() const { return {m_(2, 1), m_(0, 2), m_(1, 0)}; }

    Skew3& operator+=(const Skew3& o) {
        m_ += o.m_;
        return *this;
    }
    Skew3& operator-=(const Skew3& o) {
        m_ -= o.m_;
        return *this;
    }
    Skew3& operator*=(double s) {
        m_ *= s;
        return *this;
    }

    friend Skew3 operator+(Skew3 a, const Skew3& b) { return a += b; }
    friend Skew3 operator-(Skew3 a, const Skew3& b) { return a -= b; }
    friend Skew3 operator*(double s, Skew3 a) { return a *= s; }

private:
    explicit Skew3(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

/// Proper-orthogonal 3x3 matrix.
class Rotation {
public:
    Rotation() : q_(Mat3::identity()) {}

    static Rotation identity() { return Rotation(); }

    /// Validating constructor: ||Q^T Q - I||_F <= 1e-12 and |det Q - 1| <= 1e-12,
    /// otherwise throws NotRotation.
    static Rotation from_matrix(const Mat3& q);

    const Mat3& matrix() const { return q_; }
    Rotation transposed() const { return Rotation(q_.transposed()); }
    Vec3 operator*(const Vec3& v) const { return q_ * v; }

private:
    friend Rotation exp_so3(const Vec3&);
    friend Rotation rotation_from_gibbs(const Vec3&, double);
    explicit Rotation(const Mat3& q) : q_(q) {}
    Mat3 q_;
};

/// Linear map between rotation-vector rates and curvature (and between
/// variations of the two parametrizations).
class TangentMap {
public:
    const Mat3& matrix() const { return m_; }
    Vec3 operator*(const Vec3& v) const { return m_ * v; }

private:
    friend TangentMap tangent_map(const Vec3&);
    friend TangentMap tangent_map_inv(const Vec3&);
    explicit TangentMap(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

/// hat(v) w = v x w.
Skew3 hat(const Vec3& v);

Vec3 unhat(const Skew3& m);

/// Axial vector of a raw matrix; throws NotSkew if max |M + M^T| > 1e-12.
Vec3 unhat(const Mat3& m);

/// [A, B] = A B - B A. Axial vector of the result is axial(A) x axial(B).
Skew3 lie_bracket(const Skew3& a, const Skew3& b);

/// Rodrigues form of exp: I + (sin t / t) v^ + ((1 - cos t) / t^2) v^2,
/// with series coefficients below t = 1e-4.
Rotation exp_so3(const Vec3& theta);

/// Inverse of exp_so3 for rotation angle in [0, pi). Throws NearPiRotation
/// when the angle exceeds pi - 1e-6.
Vec3 log_so3(const Rotation& q);

/// Rotation angle of Q, computed as sqrt(-1/2 Tr(v^ v^)) of the log image.
double log_norm(const Rotation& q);

/// T mapping rotation-vector derivative to curvature: kappa = T d_xi(theta).
TangentMap tangent_map(const Vec3& theta);

/// Inverse tangent map; singular at |theta| = 2 pi, throws TangentMapSingular
/// when |theta| >= 2 pi - 1e-3.
TangentMap tangent_map_inv(const Vec3& theta);

namespace detail {

// Series switch point for the trigonometric quotients in exp/log/tangent
// maps; each series carries two terms beyond the leading one.
inline constexpr double kSmallAngle = 1e-4;

double sin_t_over_t(double t);         // sin t / t
double one_minus_cos_over_t2(double t);  // (1 - cos t) / t^2
double t_minus_sin_over_t3(double t);    // (t - sin t) / t^3
double half_t_cot_half_t(double t);      // (t/2) cot(t/2)

}  // namespace detail

}  // namespace curvjet
