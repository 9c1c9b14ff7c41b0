#pragma once

#include <curvjet/curvature.hpp>

#include <span>
#include <vector>

namespace curvjet {

/// Conjugation Q A Q^T; carries a skew matrix between frames and rotates its
/// axial vector by Q.
Skew3 transport(const Rotation& q, const Skew3& a);

/// Triangular table of transported derivatives: entry (n, k) holds the n-th
/// derivative of the transport of the (k-1)-th derivative of the carried
/// field, populated for n + k <= N + 1.
class TransportTable {
public:
    explicit TransportTable(std::vector<std::vector<Skew3>> rows) : rows_(std::move(rows)) {}

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    int width(int n) const { return static_cast<int>(rows_.at(static_cast<std::size_t>(n)).size()); }

    /// k is 1-based to mirror the (k-1)-th inner derivative it transports.
    const Skew3& entry(int n, int k) const {
        return rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k - 1));
    }

    /// d^n of the transport of the undifferentiated field.
    const Skew3& derivative(int n) const { return entry(n, 1); }

private:
    std::vector<std::vector<Skew3>> rows_;
};

/// Derivatives of the transport operator along the curve:
/// d^n T_Q[A^] = T_Q[d^n A^] + sum_{k=1..n} sum_{i=0..n-k} C(n-k, i)
///               [d^i k+^, d^(n-k-i) T_Q[d^(k-1) A^]],
/// filled in increasing n so each entry reads only lower rows. Needs the
/// carried field to order N and the curvature of Q to order N-1.
TransportTable transport_derivatives(const Rotation& q_plus, const CurvatureJet& kappa_plus,
                                     std::span<const Skew3> a, int N);

/// Updated curvature stack after composing an incremental rotation on the
/// left: d^n k_f = d^n k_+ + d^n T_{Q+}[k_i^].
CurvatureJet update_curvature(const CurvatureJet& kappa_plus, const Rotation& q_plus,
                              const CurvatureJet& kappa_i, int N);

/// Q_f = Q_+ Q_i, with orthogonality re-validated.
Rotation compose(const Rotation& q_plus, const Rotation& q_i);

}  // namespace curvjet
