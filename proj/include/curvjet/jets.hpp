#pragma once

#include <curvjet/errors.hpp>
#include <curvjet/geometry.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace curvjet {

/// Exact Pascal-triangle table. Entries are int64 and exact for every stored
/// order.
class Binomial {
public:
    explicit Binomial(int max_order);

    int max_order() const { return max_order_; }

    /// C(n, i); throws IndexError outside 0 <= i <= n <= max_order.
    std::int64_t operator()(int n, int i) const;

private:
    int max_order_;
    std::vector<std::int64_t> table_;  // row n starts at n(n+1)/2
};

/// Shared table, built once. Orders up to 24 cover every consumer here.
std::int64_t binom(int n, int i);

inline constexpr int kMaxBinomialOrder = 24;

/// A scalar value together with its derivatives in xi up to a fixed order:
/// coeffs[n] holds the n-th derivative itself (no 1/n! weighting).
class ScalarJet {
public:
    explicit ScalarJet(std::vector<double> derivs);
    static ScalarJet constant(double value, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    double& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }

private:
    std::vector<double> c_;
};

/// Derivative stack of a 3-vector field: rows[n] = n-th derivative.
class VectorJet {
public:
    explicit VectorJet(std::vector<Vec3> rows);
    static VectorJet zero(int order);
    static VectorJet constant(const Vec3& value, int order);

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    const Vec3& operator[](int n) const { return rows_[static_cast<std::size_t>(n)]; }
    Vec3& operator[](int n) { return rows_[static_cast<std::size_t>(n)]; }

private:
    std::vector<Vec3> rows_;
};

ScalarJet truncate(const ScalarJet& f, int order);
VectorJet truncate(const VectorJet& v, int order);

ScalarJet jet_add(const ScalarJet& f, const ScalarJet& g);
ScalarJet jet_sub(const ScalarJet& f, const ScalarJet& g);

/// Leibniz product: (fg)^(n) = sum_i C(n,i) f^(n-i) g^(i).
ScalarJet jet_mul(const ScalarJet& f, const ScalarJet& g);

ScalarJet jet_dot(const VectorJet& u, const VectorJet& v);
VectorJet jet_cross(const VectorJet& u, const VectorJet& v);
VectorJet jet_scale(const ScalarJet& f, const VectorJet& v);
VectorJet jet_add(const VectorJet& u, const VectorJet& v);

/// sqrt, reciprocal, tan(f/2) and 2 cos^2(f/2) propagated through the stack
/// by the usual order-by-order recurrences. All require f[0] > 0 where a
/// division by the leading value appears; tan needs f[0] away from pi mod 2pi.
ScalarJet jet_sqrt(const ScalarJet& f);
ScalarJet jet_recip(const ScalarJet& f);
ScalarJet jet_tan_half(const ScalarJet& f);
ScalarJet jet_cos2_half(const ScalarJet& f);

struct GibbsJets {
    VectorJet phi;       // tan(t/2)/t * theta, rows 0..order
    ScalarJet phi_bar;   // 2 cos^2(t/2)
};

/// Gibbs-vector jets from rotation-vector jets. The general path needs
/// |theta| in (1e-6, pi - 1e-3) at the evaluation point. When the rotation
/// axis is fixed, pass it: the signed angle f = axis . theta is then used
/// directly, which stays valid through f = 0.
GibbsJets gibbs_jets(const VectorJet& theta, std::optional<Vec3> fixed_axis = std::nullopt);

}  // namespace curvjet
