#include <curvjet/oracle.hpp>

#include <curvjet/corotational.hpp>
#include <curvjet/curvature.hpp>
#include <curvjet/errors.hpp>
#include <curvjet/so3.hpp>

#include <cmath>
#include <string>

namespace curvjet {

namespace {

int stencil_points(int order, int accuracy) {
    // Central stencil: 2 floor((n+1)/2) - 1 + p points.
    return 2 * ((order + 1) / 2) - 1 + accuracy;
}

template <typename T>
T stencil_apply(const SampledField<T>& f, int order, int accuracy, double h) {
    if (order == 0) return f.sample(f.xi0);
    const int npts = stencil_points(order, accuracy);
    const int s = (npts - 1) / 2;
    std::vector<double> nodes(static_cast<std::size_t>(npts));
    for (int j = -s; j <= s; ++j) nodes[static_cast<std::size_t>(j + s)] = f.xi0 + j * h;
    const std::vector<double> w = fd_weights(order, nodes, f.xi0);
    T acc{};
    for (int j = 0; j < npts; ++j)
        acc += w[static_cast<std::size_t>(j)] * f.sample(nodes[static_cast<std::size_t>(j)]);
    return acc;
}

template <typename T>
T fd_impl(const SampledField<T>& f, const FdConfig& cfg) {
    if (cfg.order < 0) throw StencilExceedsInterval("negative derivative order");
    if (cfg.accuracy != 2 && cfg.accuracy != 4 && cfg.accuracy != 6)
        throw StencilExceedsInterval("stencil accuracy must be 2, 4 or 6");
    if (cfg.richardson < 0 || cfg.richardson > 2)
        throw StencilExceedsInterval("richardson levels must be 0, 1 or 2");
    if (cfg.order == 0) return f.sample(f.xi0);

    const int s = (stencil_points(cfg.order, cfg.accuracy) - 1) / 2;
    if (s * cfg.h > f.half_width)
        throw StencilExceedsInterval("stencil half-width " + std::to_string(s * cfg.h) +
                                     " exceeds admissible " + std::to_string(f.half_width));

    const int r = cfg.richardson;
    std::vector<T> est(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i)
        est[static_cast<std::size_t>(i)] =
            stencil_apply(f, cfg.order, cfg.accuracy, cfg.h / static_cast<double>(1 << i));
    // Central stencils carry even error series: each level removes the
    // h^(p + 2(level-1)) term.
    for (int level = 1; level <= r; ++level) {
        const double factor = std::pow(2.0, cfg.accuracy + 2 * (level - 1));
        for (int i = r; i >= level; --i)
            est[static_cast<std::size_t>(i)] =
                (1.0 / (factor - 1.0)) *
                (factor * est[static_cast<std::size_t>(i)] - est[static_cast<std::size_t>(i - 1)]);
    }
    return est[static_cast<std::size_t>(r)];
}

Vec3 axial_of_skew_part(const Mat3& m) {
    return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

double vector_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

std::vector<double> flatten(const Vec3& v) { return {v.x, v.y, v.z}; }
std::vector<double> flatten(const Mat3& m) { return {m.a.begin(), m.a.end()}; }

VerificationRow make_row(std::string quantity, int n, std::vector<double> closed,
                         std::vector<double> oracle) {
    VerificationRow row;
    row.quantity = std::move(quantity);
    row.deriv_order = n;
    row.closed_form = std::move(closed);
    row.oracle = std::move(oracle);
    double abs_err = 0.0;
    for (std::size_t i = 0; i < row.closed_form.size(); ++i)
        abs_err = std::max(abs_err, std::abs(row.closed_form[i] - row.oracle[i]));
    row.abs_error = abs_err;
    row.mixed_error = abs_err / (1.0 + vector_norm(row.closed_form));
    row.tolerance = 1e-7 * std::pow(10.0, n - 1);
    row.pass = row.mixed_error <= row.tolerance;
    return row;
}

}  // namespace

FdConfig FdConfig::standard(int order) {
    FdConfig cfg;
    cfg.order = order;
    cfg.accuracy = 4;
    cfg.richardson = 1;
    if (order <= 2)
        cfg.h = 1e-3;
    else if (order <= 5)
        cfg.h = 1e-2;
    else
        cfg.h = 3e-2;
    return cfg;
}

std::vector<double> fd_weights(int deriv, const std::vector<double>& nodes, double x0) {
    // Fornberg's recursion for interpolation-derivative weights on arbitrary
    // nodes.
    const int nn = static_cast<int>(nodes.size()) - 1;
    const int m = deriv;
    std::vector<std::vector<std::vector<double>>> d(
        static_cast<std::size_t>(nn) + 1,
        std::vector<std::vector<double>>(static_cast<std::size_t>(nn) + 1,
                                         std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i <= nn; ++i) {
        double c2 = 1.0;
        const int mi = std::min(i, m);
        for (int v = 0; v < i; ++v) {
            const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(v)];
            c2 *= c3;
            for (int k = 0; k <= mi; ++k) {
                const double prev = d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v)]
                                     [static_cast<std::size_t>(k)];
                const double prev_lower =
                    k > 0 ? d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v)]
                             [static_cast<std::size_t>(k - 1)]
                          : 0.0;
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] =
                    ((nodes[static_cast<std::size_t>(i)] - x0) * prev - k * prev_lower) / c3;
            }
        }
        for (int k = 0; k <= mi; ++k) {
            const double prev = d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]
                                 [static_cast<std::size_t>(k)];
            const double prev_lower =
                k > 0 ? d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]
                         [static_cast<std::size_t>(k - 1)]
                      : 0.0;
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                (c1 / c2) * (k * prev_lower - (nodes[static_cast<std::size_t>(i - 1)] - x0) * prev);
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(nn) + 1);
    for (int v = 0; v <= nn; ++v)
        w[static_cast<std::size_t>(v)] =
            d[static_cast<std::size_t>(nn)][static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
    return w;
}

double fd_derivative(const SampledField<double>& f, const FdConfig& cfg) { return fd_impl(f, cfg); }
Vec3 fd_derivative(const SampledField<Vec3>& f, const FdConfig& cfg) { return fd_impl(f, cfg); }
Mat3 fd_derivative(const SampledField<Mat3>& f, const FdConfig& cfg) { return fd_impl(f, cfg); }

RotationSample rotation_sample(const CurveSpec& spec, double xi) {
    if (spec.is_fixed_axis()) {
        const auto f = polynomial_derivatives(spec.coeffs[0], xi, 1);
        const Mat3 q = exp_so3(f[0] * spec.axis).matrix();
        return {q, f[1] * (hat(spec.axis).matrix() * q)};
    }

    const VectorJet th = spec.theta_jet(xi, 1);
    const double t = norm(th[0]);
    const Mat3 h0 = hat(th[0]).matrix();
    const Mat3 h1 = hat(th[1]).matrix();
    const double a = detail::sin_t_over_t(t);
    const double b = detail::one_minus_cos_over_t2(t);
    double da;  // d/dt (sin t / t)
    double db;  // d/dt ((1 - cos t) / t^2)
    if (t < detail::kSmallAngle) {
        const double t2 = t * t;
        da = -t / 3.0 + t * t2 / 30.0;
        db = -t / 12.0 + t * t2 / 180.0;
    } else {
        da = std::cos(t) / t - std::sin(t) / (t * t);
        db = std::sin(t) / (t * t) - 2.0 * (1.0 - std::cos(t)) / (t * t * t);
    }
    // dt/dxi from |theta| = sqrt(theta . theta); the general path keeps the
    // angle away from zero.
    const double dt = t > 0.0 ? dot(th[0], th[1]) / t : 0.0;

    const Mat3 q = Mat3::identity() + a * h0 + b * (h0 * h0);
    const Mat3 dq = (da * dt) * h0 + a * h1 + (db * dt) * (h0 * h0) + b * (h1 * h0 + h0 * h1);
    return {q, dq};
}

SampledField<Mat3> rotation_field(const CurveSpec& spec, double xi0) {
    const double w = std::min(xi0 - spec.xi_min, spec.xi_max - xi0);
    return {[spec](double xi) { return rotation_sample(spec, xi).q; }, xi0, w};
}

SampledField<Vec3> curvature_field(const CurveSpec& spec, double xi0) {
    const double w = std::min(xi0 - spec.xi_min, spec.xi_max - xi0);
    return {[spec](double xi) {
                const RotationSample r = rotation_sample(spec, xi);
                return axial_of_skew_part(r.dq * r.q.transposed());
            },
            xi0, w};
}

SampledField<Vec3> material_curvature_field(const CurveSpec& spec, double xi0) {
    const double w = std::min(xi0 - spec.xi_min, spec.xi_max - xi0);
    return {[spec](double xi) {
                const RotationSample r = rotation_sample(spec, xi);
                return r.q.transposed() * axial_of_skew_part(r.dq * r.q.transposed());
            },
            xi0, w};
}

SampledField<Vec3> composed_curvature_field(const CurveSpec& initial, const CurveSpec& incremental,
                                            double xi0) {
    const double w = std::min({xi0 - initial.xi_min, initial.xi_max - xi0, xi0 - incremental.xi_min,
                               incremental.xi_max - xi0});
    return {[initial, incremental](double xi) {
                const RotationSample ri = rotation_sample(initial, xi);
                const RotationSample rp = rotation_sample(incremental, xi);
                const Mat3 qf = rp.q * ri.q;
                const Mat3 dqf = rp.dq * ri.q + rp.q * ri.dq;
                return axial_of_skew_part(dqf * qf.transposed());
            },
            xi0, w};
}

bool VerificationReport::all_pass() const {
    for (const VerificationRow& row : rows)
        if (!row.pass) return false;
    return true;
}

VerificationReport verify_curvature(const CurveSpec& spec, double xi0, int N) {
    VerificationReport report;
    report.xi = xi0;
    report.order = N;

    try {
        const GibbsJets g = spec.gibbs(xi0, N + 1);
        const CurvatureJet kappa = curvature_derivatives(g.phi, truncate(g.phi_bar, N), N);
        const Rotation q = rotation_from_gibbs(g.phi[0], g.phi_bar[0]);
        const RotationJet qjet = rotation_derivatives(q, kappa, N);
        const MaterialCurvatureJet kbar = material_curvature_derivatives(qjet, kappa, N);

        const SampledField<Vec3> kappa_f = curvature_field(spec, xi0);
        const SampledField<Vec3> kbar_f = material_curvature_field(spec, xi0);
        const SampledField<Mat3> q_f = rotation_field(spec, xi0);

        for (int n = 0; n <= N; ++n) {
            const FdConfig cfg = FdConfig::standard(n);
            try {
                report.rows.push_back(make_row("kappa[" + std::to_string(n) + "]", n,
                                               flatten(kappa.row(n)), flatten(fd_derivative(kappa_f, cfg))));
                report.rows.push_back(make_row("kappa_bar[" + std::to_string(n) + "]", n,
                                               flatten(kbar.row(n)), flatten(fd_derivative(kbar_f, cfg))));
                report.rows.push_back(make_row("Q[" + std::to_string(n) + "]", n, flatten(qjet.row(n)),
                                               flatten(fd_derivative(q_f, cfg))));
            } catch (const Error& e) {
                VerificationRow row;
                row.quantity = "order " + std::to_string(n);
                row.deriv_order = n;
                row.error = e.kind();
                row.pass = false;
                report.rows.push_back(row);
            }
        }
    } catch (const Error& e) {
        VerificationRow row;
        row.quantity = "spec at xi = " + std::to_string(xi0);
        row.error = e.kind();
        row.pass = false;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace curvjet
