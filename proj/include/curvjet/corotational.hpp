#pragma once

#include <curvjet/curvature.hpp>

#include <span>
#include <vector>

namespace curvjet {

/// Derivative stack of the material curvature: row n = n-th derivative of
/// Q^T kappa.
class MaterialCurvatureJet {
public:
    explicit MaterialCurvatureJet(VectorJet rows) : rows_(std::move(rows)) {}

    int order() const { return rows_.order(); }
    const Vec3& row(int n) const { return rows_[n]; }
    const VectorJet& vectors() const { return rows_; }

private:
    VectorJet rows_;
};

/// Co-rotational derivatives of the spatial curvature, rows 1..N (the
/// zeroth one is the curvature itself and is not stored).
class CorotationalJet {
public:
    explicit CorotationalJet(std::vector<Vec3> rows_from_one) : rows_(std::move(rows_from_one)) {}

    int order() const { return static_cast<int>(rows_.size()); }
    const Vec3& row(int n) const { return rows_.at(static_cast<std::size_t>(n - 1)); }

private:
    std::vector<Vec3> rows_;
};

/// n-th co-rotational derivative of a vector field, by the recurrence
/// d~^n v = d^n v - sum_{i=1..n} d^(i-1)(kappa x d~^(n-i) v), with the outer
/// derivatives expanded by the Leibniz rule. Intermediate stacks are
/// memoized; cost is O(n^2) cross products.
Vec3 corot_vector(const VectorJet& v, const CurvatureJet& kappa, int n);

/// Same recurrence with Lie brackets against the curvature tensor.
Skew3 corot_skew(std::span<const Skew3> a, const CurvatureJet& kappa, int n);

/// Extension to an arbitrary tensor: the bracket becomes k^ B - B k^.
Mat3 corot_tensor(std::span<const Mat3> b, const CurvatureJet& kappa, int n);

/// d^n (Q^T kappa) by the Leibniz rule over the rotation stack.
MaterialCurvatureJet material_curvature_derivatives(const RotationJet& q, const CurvatureJet& kappa,
                                                    int N);

/// Left-translation of the material rows: d~^n kappa = Q d^n kappa_bar,
/// n >= 1. Row 1 equals the plain derivative of the curvature (the bracket
/// correction vanishes identically there).
CorotationalJet corot_curvature_derivatives(const RotationJet& q, const MaterialCurvatureJet& material,
                                            int N);

}  // namespace curvjet
