#pragma once

#include <curvjet/curve_spec.hpp>
#include <curvjet/geometry.hpp>

#include <functional>
#include <string>
#include <vector>

namespace curvjet {

/// A field sampled around one point. The sampler must be total (and
/// reentrant) on [xi0 - half_width, xi0 + half_width].
template <typename T>
struct SampledField {
    std::function<T(double)> sample;
    double xi0 = 0.0;
    double half_width = 1.0;
};

/// Central-difference configuration: derivative order, base step, stencil
/// accuracy and Richardson extrapolation levels.
struct FdConfig {
    int order = 1;
    double h = 1e-3;
    int accuracy = 4;    // 2, 4 or 6
    int richardson = 1;  // 0, 1 or 2

    /// Steps tuned per derivative order: truncation against the 1e-16/h^n
    /// rounding amplification.
    static FdConfig standard(int order);
};

/// Weights placing the m-th derivative at x0 onto the given nodes
/// (Fornberg's recursion).
std::vector<double> fd_weights(int deriv, const std::vector<double>& nodes, double x0);

double fd_derivative(const SampledField<double>& f, const FdConfig& cfg);
Vec3 fd_derivative(const SampledField<Vec3>& f, const FdConfig& cfg);
Mat3 fd_derivative(const SampledField<Mat3>& f, const FdConfig& cfg);

/// Exact rotation sample with its first derivative, from the analytic field
/// description only (Rodrigues form differentiated in closed form; no
/// curvature machinery involved).
struct RotationSample {
    Mat3 q;
    Mat3 dq;
};
RotationSample rotation_sample(const CurveSpec& spec, double xi);

SampledField<Mat3> rotation_field(const CurveSpec& spec, double xi0);
SampledField<Vec3> curvature_field(const CurveSpec& spec, double xi0);
SampledField<Vec3> material_curvature_field(const CurveSpec& spec, double xi0);

/// Curvature of xi -> Q_plus(xi) Q_i(xi), assembled by the product rule on
/// the two analytic rotation samples.
SampledField<Vec3> composed_curvature_field(const CurveSpec& initial, const CurveSpec& incremental,
                                            double xi0);

struct VerificationRow {
    std::string quantity;  // e.g. "kappa[2]"
    int deriv_order = 0;
    std::vector<double> closed_form;  // 3 entries for vectors, 9 for matrices
    std::vector<double> oracle;
    double abs_error = 0.0;
    double mixed_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // typed-error kind when the row could not be evaluated
};

struct VerificationReport {
    double xi = 0.0;
    int order = 0;
    std::vector<VerificationRow> rows;

    bool all_pass() const;
};

/// Checks the closed-form curvature, material-curvature and rotation stacks
/// at xi0 against finite differences of the sampled fields. Per-order mixed
/// tolerance: 1e-7 * 10^(n-1) * (1 + |row|). Domain failures become failing
/// rows rather than exceptions.
VerificationReport verify_curvature(const CurveSpec& spec, double xi0, int N);

}  // namespace curvjet
