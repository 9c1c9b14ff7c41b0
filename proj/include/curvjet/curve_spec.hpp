#pragma once

#include <curvjet/jets.hpp>

#include <array>
#include <string>
#include <vector>

namespace curvjet {

/// Analytic description of a rotation-vector field theta(xi). Every
/// derivative the jets need is computed exactly from the coefficients.
struct CurveSpec {
    enum class Kind { FixedAxisPoly, Poly3, Fourier3 };

    Kind kind = Kind::Poly3;
    Vec3 axis{0, 0, 1};  // fixed-axis only, unit
    // Per-component coefficient lists. Fixed-axis uses component 0 only.
    // Polynomials: c0 + c1 xi + c2 xi^2 + ...
    // Fourier: a0, then (a_j, b_j) pairs for a_j cos(j xi) + b_j sin(j xi).
    std::array<std::vector<double>, 3> coeffs;
    double xi_min = 0.0;
    double xi_max = 1.0;

    bool is_fixed_axis() const { return kind == Kind::FixedAxisPoly; }

    /// Throws InvalidSpec on a malformed description.
    void validate() const;

    /// theta and its derivatives up to `order` at xi. Exact.
    VectorJet theta_jet(double xi, int order) const;

    Vec3 theta(double xi) const { return theta_jet(xi, 0)[0]; }

    GibbsJets gibbs(double xi, int order) const;
};

std::string to_string(CurveSpec::Kind kind);
CurveSpec::Kind curve_kind_from_string(const std::string& name);

/// Derivatives of a scalar polynomial at xi: out[n] = p^(n)(xi).
std::vector<double> polynomial_derivatives(const std::vector<double>& coeffs, double xi, int order);

/// Derivatives of a0 + sum_j (a_j cos(j xi) + b_j sin(j xi)).
std::vector<double> fourier_derivatives(const std::vector<double>& coeffs, double xi, int order);

}  // namespace curvjet
