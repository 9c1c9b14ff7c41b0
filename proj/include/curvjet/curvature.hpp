#pragma once

#include <curvjet/jets.hpp>
#include <curvjet/so3.hpp>

#include <cstdint>
#include <vector>

namespace curvjet {

/// Derivative stack of the spatial curvature vector: row n = n-th derivative.
class CurvatureJet {
public:
    explicit CurvatureJet(VectorJet rows) : rows_(std::move(rows)) {}
    static CurvatureJet zero(int order) { return CurvatureJet(VectorJet::zero(order)); }

    int order() const { return rows_.order(); }
    const Vec3& row(int n) const { return rows_[n]; }
    Skew3 hat_row(int n) const { return hat(rows_[n]); }
    const VectorJet& vectors() const { return rows_; }

private:
    VectorJet rows_;
};

/// Derivative stack of a rotation field: row n = n-th derivative of Q.
class RotationJet {
public:
    RotationJet(Rotation q0, std::vector<Mat3> rows) : q0_(q0), rows_(std::move(rows)) {}

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    const Rotation& rotation() const { return q0_; }
    const Mat3& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }

    /// n-th derivative of the director d_m = Q E_m (a column of row n).
    Vec3 director_row(int n, int m) const {
        const Mat3& r = row(n);
        return {r(0, m), r(1, m), r(2, m)};
    }

private:
    Rotation q0_;
    std::vector<Mat3> rows_;
};

/// Largest surviving pair index in the reduced Leibniz expansion of
/// d^m [a^, d a^]: floor((m+1)/2) when (m+1)/2 is not an integer, otherwise
/// (m+1)/2 - 1.
int jmax(int m);

/// Weight of the [d^j a^, d^(m-j+1) a^] term in that reduced expansion:
/// C(m, j) - C(m, m-j+1), with C(m, m+1) taken as zero.
std::int64_t bcoef(int m, int j);

/// d^m [a^, d a^] evaluated as the jmax/bcoef-reduced sum. Needs a to
/// order m+1.
Skew3 skew_pair_derivative(const VectorJet& a, int m);

/// Curvature from the Gibbs pair: kappa = phi_bar (d phi + phi x d phi).
Vec3 curvature_from_gibbs(const VectorJet& phi, const ScalarJet& phi_bar);
Skew3 curvature_tensor_from_gibbs(const VectorJet& phi, const ScalarJet& phi_bar);

/// Closed-form derivative stack of the spatial curvature, to order N.
/// Needs phi to order N+1 and phi_bar to order N.
CurvatureJet curvature_derivatives(const VectorJet& phi, const ScalarJet& phi_bar, int N);

/// Q = I + phi_bar (phi^ + phi^2). The pair must satisfy
/// phi_bar (|phi|^2 + 1) = 2 within 1e-10.
Rotation rotation_from_gibbs(const Vec3& phi, double phi_bar);

/// Derivatives of Q by the recurrence d^n Q = sum_i C(n-1,i) d^i k^ d^(n-1-i) Q.
/// Needs the curvature stack to order N-1.
RotationJet rotation_derivatives(const Rotation& q, const CurvatureJet& kappa, int N);

inline constexpr int kMaxDerivativeOrder = 8;

}  // namespace curvjet
