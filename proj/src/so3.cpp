#include <curvjet/so3.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace curvjet {

namespace detail {

double sin_t_over_t(double t) {
    if (t < kSmallAngle) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

double one_minus_cos_over_t2(double t) {
    if (t < kSmallAngle) {
        const double t2 = t * t;
        return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    }
    return (1.0 - std::cos(t)) / (t * t);
}

double t_minus_sin_over_t3(double t) {
    if (t < kSmallAngle) {
        const double t2 = t * t;
        return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
    }
    return (t - std::sin(t)) / (t * t * t);
}

double half_t_cot_half_t(double t) {
    if (t < kSmallAngle) {
        const double t2 = t * t;
        return 1.0 - t2 / 12.0 - t2 * t2 / 720.0;
    }
    return 0.5 * t / std::tan(0.5 * t);
}

}  // namespace detail

Skew3 Skew3::from_axial(const Vec3& v) {
    Mat3 m;
    m(0, 1) = -v.z;
    m(0, 2) = v.y;
    m(1, 0) = v.z;
    m(1, 2) = -v.x;
    m(2, 0) = -v.y;
    m(2, 1) = v.x;
    return Skew3(m);
}

Skew3 Skew3::from_matrix(const Mat3& m) {
    double asym = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) asym = std::max(asym, std::abs(m(r, c) + m(c, r)));
    if (asym > 1e-12) throw NotSkew("asymmetry " + std::to_string(asym) + " exceeds 1e-12");
    return Skew3(m);
}

Rotation Rotation::from_matrix(const Mat3& q) {
    const Mat3 gram = q.transposed() * q;
    const double ortho = frobenius_norm(gram - Mat3::identity());
    if (ortho > 1e-12)
        throw NotRotation("||Q^T Q - I||_F = " + std::to_string(ortho) + " exceeds 1e-12");
    const double d = q.det();
    if (std::abs(d - 1.0) > 1e-12)
        throw NotRotation("det Q = " + std::to_string(d) + " departs from 1 beyond 1e-12");
    return Rotation(q);
}

Skew3 hat(const Vec3& v) { return Skew3::from_axial(v); }

Vec3 unhat(const Skew3& m) { return m.axial(); }

Vec3 unhat(const Mat3& m) { return Skew3::from_matrix(m).axial(); }

Skew3 lie_bracket(const Skew3& a, const Skew3& b) {
    const Mat3 c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    // The commutator of exactly anti-symmetric matrices is anti-symmetric to
    // the last bit; wrap without re-checking.
    return Skew3::from_axial({c(2, 1), c(0, 2), c(1, 0)});
}

Rotation exp_so3(const Vec3& theta) {
    const double t = norm(theta);
    const Mat3 th = hat(theta).matrix();
    const Mat3 q = Mat3::identity() + detail::sin_t_over_t(t) * th +
                   detail::one_minus_cos_over_t2(t) * (th * th);
    return Rotation(q);
}

Vec3 log_so3(const Rotation& q) {
    const Mat3& m = q.matrix();
    const double c = std::clamp(0.5 * (m.trace() - 1.0), -1.0, 1.0);
    const double t = std::acos(c);
    if (t > std::numbers::pi - 1e-6)
        throw NearPiRotation("rotation angle " + std::to_string(t) + " too close to pi");

    const Vec3 w{m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)};  // axial of Q - Q^T
    double factor;  // t / (2 sin t)
    if (t < detail::kSmallAngle) {
        const double t2 = t * t;
        factor = 0.5 + t2 / 12.0 + 7.0 * t2 * t2 / 720.0;
    } else {
        // |w| = 2 sin t for a rotation; dividing by the measured norm keeps
        // the factor conditioned as t approaches pi.
        factor = t / norm(w);
    }
    return factor * w;
}

double log_norm(const Rotation& q) {
    // The trace identity Tr(v^ v^) = -2 |v|^2 makes the radicand positive
    // with the leading minus sign.
    const Mat3 th = hat(log_so3(q)).matrix();
    return std::sqrt(-0.5 * (th * th).trace());
}

TangentMap tangent_map(const Vec3& theta) {
    const double t = norm(theta);
    const Mat3 th = hat(theta).matrix();
    const Mat3 m = detail::sin_t_over_t(t) * Mat3::identity() +
                   detail::one_minus_cos_over_t2(t) * th +
                   detail::t_minus_sin_over_t3(t) * Mat3::outer(theta, theta);
    return TangentMap(m);
}

TangentMap tangent_map_inv(const Vec3& theta) {
    const double t = norm(theta);
    if (t >= 2.0 * std::numbers::pi - 1e-3)
        throw TangentMapSingular("|theta| = " + std::to_string(t) + " too close to 2 pi");

    const double c = detail::half_t_cot_half_t(t);
    double c2;  // (1 - c) / t^2
    if (t < detail::kSmallAngle) {
        const double t2 = t * t;
        c2 = 1.0 / 12.0 + t2 / 720.0;
    } else {
        c2 = (1.0 - c) / (t * t);
    }
    const Mat3 m = c * Mat3::identity() - 0.5 * hat(theta).matrix() +
                   c2 * Mat3::outer(theta, theta);
    return TangentMap(m);
}

}  // namespace curvjet
