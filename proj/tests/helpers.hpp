#pragma once

#include <curvjet/corotational.hpp>
#include <curvjet/curvature.hpp>
#include <curvjet/curve_spec.hpp>
#include <curvjet/jets.hpp>
#include <curvjet/so3.hpp>

#include <random>
#include <vector>

namespace testutil {

using namespace curvjet;

inline Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    while (norm(v) < 1e-3) v = {gauss(rng), gauss(rng), gauss(rng)};
    return v / norm(v);
}

inline Vec3 random_vec(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng)};
}

/// Jets of a random integer-coefficient polynomial 3-vector field evaluated
/// at xi = 1: every row is integer-valued, so reduced and brute-force sums
/// can be compared with zero tolerance.
inline VectorJet random_int_poly_jet(std::mt19937& rng, int degree, int order) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::array<std::vector<double>, 3> c;
    for (auto& list : c) {
        list.resize(static_cast<std::size_t>(degree) + 1);
        for (double& v : list) v = static_cast<double>(coeff(rng));
    }
    std::vector<Vec3> rows(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k < 3; ++k) {
        const auto d = polynomial_derivatives(c[static_cast<std::size_t>(k)], 1.0, order);
        for (int n = 0; n <= order; ++n) rows[static_cast<std::size_t>(n)][k] = d[static_cast<std::size_t>(n)];
    }
    return VectorJet(std::move(rows));
}

/// Jets of a random real-coefficient polynomial vector field at xi.
inline VectorJet random_poly_jet(std::mt19937& rng, int degree, int order, double xi) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::array<std::vector<double>, 3> c;
    for (auto& list : c) {
        list.resize(static_cast<std::size_t>(degree) + 1);
        for (double& v : list) v = coeff(rng);
    }
    std::vector<Vec3> rows(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k < 3; ++k) {
        const auto d = polynomial_derivatives(c[static_cast<std::size_t>(k)], xi, order);
        for (int n = 0; n <= order; ++n) rows[static_cast<std::size_t>(n)][k] = d[static_cast<std::size_t>(n)];
    }
    return VectorJet(std::move(rows));
}

inline CurveSpec make_fixed_axis(const Vec3& axis, std::vector<double> poly, double lo = -10.0,
                                 double hi = 10.0) {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::FixedAxisPoly;
    spec.axis = axis;
    spec.coeffs[0] = std::move(poly);
    spec.xi_min = lo;
    spec.xi_max = hi;
    return spec;
}

inline CurveSpec make_poly3(std::vector<double> c0, std::vector<double> c1, std::vector<double> c2,
                            double lo = -10.0, double hi = 10.0) {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Poly3;
    spec.coeffs = {std::move(c0), std::move(c1), std::move(c2)};
    spec.xi_min = lo;
    spec.xi_max = hi;
    return spec;
}

inline CurveSpec make_fourier3(std::vector<double> c0, std::vector<double> c1, std::vector<double> c2,
                               double lo = -10.0, double hi = 10.0) {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Fourier3;
    spec.coeffs = {std::move(c0), std::move(c1), std::move(c2)};
    spec.xi_min = lo;
    spec.xi_max = hi;
    return spec;
}

struct FieldSample {
    CurveSpec spec;
    double xi0 = 0.0;
};

/// Random polynomial rotation-vector field with an admissible angle at the
/// drawn evaluation point (rejection-sampled, deterministic for a seed).
inline FieldSample random_admissible_field(std::mt19937& rng, double lo = 5e-2, double hi = 2.9) {
    std::uniform_real_distribution<double> coeff(-0.45, 0.45);
    std::uniform_real_distribution<double> point(0.2, 0.8);
    while (true) {
        std::vector<double> c0(5);
        std::vector<double> c1(5);
        std::vector<double> c2(5);
        for (std::size_t k = 0; k < 5; ++k) {
            const double damp = 1.0 / static_cast<double>(1 + k);
            c0[k] = coeff(rng) * damp;
            c1[k] = coeff(rng) * damp;
            c2[k] = coeff(rng) * damp;
        }
        CurveSpec spec = make_poly3(c0, c1, c2);
        const double xi0 = point(rng);
        const double angle = norm(spec.theta(xi0));
        if (angle > lo && angle < hi) return {spec, xi0};
    }
}

/// Everything the closed-form pipeline produces at one point.
struct Stacks {
    CurvatureJet kappa;
    Rotation q;
    RotationJet qjet;
    MaterialCurvatureJet kappa_bar;
};

inline Stacks stacks_at(const CurveSpec& spec, double xi, int N) {
    const GibbsJets g = spec.gibbs(xi, N + 1);
    CurvatureJet kappa = curvature_derivatives(g.phi, g.phi_bar, N);
    Rotation q = rotation_from_gibbs(g.phi[0], g.phi_bar[0]);
    RotationJet qjet = rotation_derivatives(q, kappa, N);
    MaterialCurvatureJet kbar = material_curvature_derivatives(qjet, kappa, N);
    return {std::move(kappa), q, std::move(qjet), std::move(kbar)};
}

/// Unreduced Leibniz expansion of d^m [a^, d a^]: the full (m+1)-term sum
/// with plain binomial weights. Reference for the reduced form.
inline Skew3 pair_derivative_unreduced(const VectorJet& a, int m) {
    Skew3 sum;
    for (int j = 0; j <= m; ++j)
        sum += static_cast<double>(binom(m, j)) * lie_bracket(hat(a[j]), hat(a[m - j + 1]));
    return sum;
}

/// Operator-word evaluation of the n-th co-rotational derivative: apply
/// (d - k^) to the jet stack n times, shrinking the usable order each step.
inline Vec3 corot_operator_expansion(const VectorJet& v, const CurvatureJet& kappa, int n) {
    std::vector<Vec3> cur(static_cast<std::size_t>(v.order()) + 1);
    for (int p = 0; p <= v.order(); ++p) cur[static_cast<std::size_t>(p)] = v[p];
    for (int step = 0; step < n; ++step) {
        const int len = static_cast<int>(cur.size()) - 1;
        std::vector<Vec3> next(static_cast<std::size_t>(len));
        for (int p = 0; p < len; ++p) {
            Vec3 acc = cur[static_cast<std::size_t>(p + 1)];
            for (int j = 0; j <= p; ++j)
                acc -= static_cast<double>(binom(p, j)) *
                       cross(kappa.row(j), cur[static_cast<std::size_t>(p - j)]);
            next[static_cast<std::size_t>(p)] = acc;
        }
        cur = std::move(next);
    }
    return cur[0];
}

/// Left-translation route: Q d^n(Q^T v), the outer derivative expanded by
/// Leibniz over the rotation stack.
inline Vec3 corot_left_translation(const VectorJet& v, const RotationJet& qjet, int n) {
    Vec3 material;
    for (int i = 0; i <= n; ++i)
        material += static_cast<double>(binom(n, i)) * (qjet.row(i).transposed() * v[n - i]);
    return qjet.rotation() * material;
}

/// Independent recurrence for the co-rotational curvature: the bracket sum
/// stops one step early because the curvature brackets with itself.
inline Vec3 corot_curvature_recurrence(const CurvatureJet& kappa, int n) {
    std::vector<std::vector<Vec3>> table(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) table[static_cast<std::size_t>(q)].resize(static_cast<std::size_t>(n - q) + 1);
    for (int p = 0; p <= n; ++p) table[0][static_cast<std::size_t>(p)] = kappa.row(p);
    for (int q = 1; q <= n; ++q) {
        for (int p = 0; p <= n - q; ++p) {
            Vec3 acc = kappa.row(p + q);
            for (int i = 1; i <= q - 1; ++i) {
                const int r = p + i - 1;
                for (int j = 0; j <= r; ++j)
                    acc -= static_cast<double>(binom(r, j)) *
                           cross(kappa.row(j),
                                 table[static_cast<std::size_t>(q - i)][static_cast<std::size_t>(r - j)]);
            }
            table[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = acc;
        }
    }
    return table[static_cast<std::size_t>(n)][0];
}

inline double mixed_diff(const Vec3& a, const Vec3& b) { return max_abs(a - b) / (1.0 + norm(a)); }

inline double mixed_diff(const Mat3& a, const Mat3& b) {
    return max_abs(a - b) / (1.0 + frobenius_norm(a));
}

}  // namespace testutil
