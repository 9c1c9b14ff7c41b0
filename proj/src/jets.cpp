#include <curvjet/jets.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace curvjet {

Binomial::Binomial(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw IndexError("negative binomial table order");
    table_.resize(static_cast<std::size_t>((max_order + 1) * (max_order + 2) / 2));
    for (int n = 0; n <= max_order; ++n) {
        const std::size_t row = static_cast<std::size_t>(n * (n + 1) / 2);
        table_[row] = 1;
        table_[row + static_cast<std::size_t>(n)] = 1;
        const std::size_t prev = static_cast<std::size_t>((n - 1) * n / 2);
        for (int i = 1; i < n; ++i)
            table_[row + static_cast<std::size_t>(i)] =
                table_[prev + static_cast<std::size_t>(i - 1)] + table_[prev + static_cast<std::size_t>(i)];
    }
}

std::int64_t Binomial::operator()(int n, int i) const {
    if (n < 0 || n > max_order_ || i < 0 || i > n)
        throw IndexError("binom(" + std::to_string(n) + ", " + std::to_string(i) + ") out of range");
    return table_[static_cast<std::size_t>(n * (n + 1) / 2 + i)];
}

std::int64_t binom(int n, int i) {
    static const Binomial table(kMaxBinomialOrder);
    return table(n, i);
}

namespace {

void check_finite(double v) {
    if (!std::isfinite(v)) throw JetDomain("non-finite jet entry");
}

void check_same_order(int a, int b) {
    if (a != b)
        throw OrderMismatch("jet orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

double bc(int n, int i) { return static_cast<double>(binom(n, i)); }

}  // namespace

ScalarJet::ScalarJet(std::vector<double> derivs) : c_(std::move(derivs)) {
    if (c_.empty()) throw JetDomain("empty scalar jet");
    for (double v : c_) check_finite(v);
}

ScalarJet ScalarJet::constant(double value, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return ScalarJet(std::move(c));
}

VectorJet::VectorJet(std::vector<Vec3> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw JetDomain("empty vector jet");
    for (const Vec3& r : rows_)
        if (!all_finite(r)) throw JetDomain("non-finite jet entry");
}

VectorJet VectorJet::zero(int order) {
    return VectorJet(std::vector<Vec3>(static_cast<std::size_t>(order) + 1));
}

VectorJet VectorJet::constant(const Vec3& value, int order) {
    std::vector<Vec3> rows(static_cast<std::size_t>(order) + 1);
    rows[0] = value;
    return VectorJet(std::move(rows));
}

ScalarJet truncate(const ScalarJet& f, int order) {
    if (order < 0 || order > f.order()) throw OrderMismatch("cannot truncate to order " + std::to_string(order));
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = f[n];
    return ScalarJet(std::move(c));
}

VectorJet truncate(const VectorJet& v, int order) {
    if (order < 0 || order > v.order()) throw OrderMismatch("cannot truncate to order " + std::to_string(order));
    std::vector<Vec3> rows(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) rows[static_cast<std::size_t>(n)] = v[n];
    return VectorJet(std::move(rows));
}

ScalarJet jet_add(const ScalarJet& f, const ScalarJet& g) {
    check_same_order(f.order(), g.order());
    std::vector<double> c(static_cast<std::size_t>(f.order()) + 1);
    for (int n = 0; n <= f.order(); ++n) c[static_cast<std::size_t>(n)] = f[n] + g[n];
    return ScalarJet(std::move(c));
}

ScalarJet jet_sub(const ScalarJet& f, const ScalarJet& g) {
    check_same_order(f.order(), g.order());
    std::vector<double> c(static_cast<std::size_t>(f.order()) + 1);
    for (int n = 0; n <= f.order(); ++n) c[static_cast<std::size_t>(n)] = f[n] - g[n];
    return ScalarJet(std::move(c));
}

ScalarJet jet_mul(const ScalarJet& f, const ScalarJet& g) {
    check_same_order(f.order(), g.order());
    const int N = f.order();
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(n)] += bc(n, i) * f[n - i] * g[i];
    return ScalarJet(std::move(c));
}

ScalarJet jet_dot(const VectorJet& u, const VectorJet& v) {
    check_same_order(u.order(), v.order());
    const int N = u.order();
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(n)] += bc(n, i) * dot(u[n - i], v[i]);
    return ScalarJet(std::move(c));
}

VectorJet jet_cross(const VectorJet& u, const VectorJet& v) {
    check_same_order(u.order(), v.order());
    const int N = u.order();
    std::vector<Vec3> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(n)] += bc(n, i) * cross(u[n - i], v[i]);
    return VectorJet(std::move(rows));
}

VectorJet jet_scale(const ScalarJet& f, const VectorJet& v) {
    check_same_order(f.order(), v.order());
    const int N = f.order();
    std::vector<Vec3> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(n)] += (bc(n, i) * f[n - i]) * v[i];
    return VectorJet(std::move(rows));
}

VectorJet jet_add(const VectorJet& u, const VectorJet& v) {
    check_same_order(u.order(), v.order());
    std::vector<Vec3> rows(static_cast<std::size_t>(u.order()) + 1);
    for (int n = 0; n <= u.order(); ++n) rows[static_cast<std::size_t>(n)] = u[n] + v[n];
    return VectorJet(std::move(rows));
}

ScalarJet jet_sqrt(const ScalarJet& f) {
    if (!(f[0] > 0.0)) throw JetDomain("jet_sqrt needs a positive leading value");
    const int N = f.order();
    std::vector<double> g(static_cast<std::size_t>(N) + 1, 0.0);
    g[0] = std::sqrt(f[0]);
    for (int n = 1; n <= N; ++n) {
        double s = f[n];
        for (int i = 1; i < n; ++i)
            s -= bc(n, i) * g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(n - i)];
        g[static_cast<std::size_t>(n)] = s / (2.0 * g[0]);
    }
    return ScalarJet(std::move(g));
}

ScalarJet jet_recip(const ScalarJet& f) {
    if (!(f[0] > 0.0)) throw JetDomain("jet_recip needs a positive leading value");
    const int N = f.order();
    std::vector<double> h(static_cast<std::size_t>(N) + 1, 0.0);
    h[0] = 1.0 / f[0];
    for (int n = 1; n <= N; ++n) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += bc(n, i) * f[n - i] * h[static_cast<std::size_t>(i)];
        h[static_cast<std::size_t>(n)] = -s / f[0];
    }
    return ScalarJet(std::move(h));
}

ScalarJet jet_tan_half(const ScalarJet& f) {
    const double dist_to_pole = std::abs(std::remainder(f[0] - std::numbers::pi, 2.0 * std::numbers::pi));
    if (dist_to_pole < 1e-12) throw JetDomain("tan(f/2) pole at f = pi mod 2 pi");

    // t' = (1 + t^2) f' / 2, differentiated order by order together with
    // g = 1 + t^2.
    const int N = f.order();
    std::vector<double> t(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> g(static_cast<std::size_t>(N) + 1, 0.0);
    t[0] = std::tan(0.5 * f[0]);
    g[0] = 1.0 + t[0] * t[0];
    for (int n = 0; n < N; ++n) {
        double s = 0.0;
        for (int i = 0; i <= n; ++i) s += bc(n, i) * g[static_cast<std::size_t>(n - i)] * f[i + 1];
        t[static_cast<std::size_t>(n + 1)] = 0.5 * s;
        double gs = 0.0;
        for (int j = 0; j <= n + 1; ++j)
            gs += bc(n + 1, j) * t[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(n + 1 - j)];
        g[static_cast<std::size_t>(n + 1)] = gs;
    }
    return ScalarJet(std::move(t));
}

ScalarJet jet_cos2_half(const ScalarJet& f) {
    // 2 cos^2(f/2) = 1 + cos f; propagate sin f and cos f jointly for the
    // derivative rows.
    const int N = f.order();
    std::vector<double> s(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    s[0] = std::sin(f[0]);
    c[0] = std::cos(f[0]);
    for (int n = 0; n < N; ++n) {
        double ds = 0.0;
        double dc = 0.0;
        for (int i = 0; i <= n; ++i) {
            ds += bc(n, i) * c[static_cast<std::size_t>(i)] * f[n - i + 1];
            dc -= bc(n, i) * s[static_cast<std::size_t>(i)] * f[n - i + 1];
        }
        s[static_cast<std::size_t>(n + 1)] = ds;
        c[static_cast<std::size_t>(n + 1)] = dc;
    }
    std::vector<double> out(static_cast<std::size_t>(N) + 1);
    // half-angle form for the value itself: 1 + cos f cancels near f = pi
    const double ch = std::cos(0.5 * f[0]);
    out[0] = 2.0 * ch * ch;
    for (int n = 1; n <= N; ++n) out[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)];
    return ScalarJet(std::move(out));
}

GibbsJets gibbs_jets(const VectorJet& theta, std::optional<Vec3> fixed_axis) {
    constexpr double pi = std::numbers::pi;

    if (fixed_axis) {
        const Vec3 axis = *fixed_axis;
        if (std::abs(norm(axis) - 1.0) > 1e-12) throw JetDomain("fixed axis must be a unit vector");
        // Signed angle along the axis; valid through zero crossings.
        std::vector<double> fc(static_cast<std::size_t>(theta.order()) + 1);
        for (int n = 0; n <= theta.order(); ++n) fc[static_cast<std::size_t>(n)] = dot(axis, theta[n]);
        const ScalarJet f(std::move(fc));
        const double dist_to_pole = std::abs(std::remainder(f[0] - pi, 2.0 * pi));
        if (dist_to_pole < 1e-3)
            throw GimbalDomain("fixed-axis angle " + std::to_string(f[0]) + " within 1e-3 of pi mod 2 pi");
        const ScalarJet t = jet_tan_half(f);
        std::vector<Vec3> rows(static_cast<std::size_t>(t.order()) + 1);
        for (int n = 0; n <= t.order(); ++n) rows[static_cast<std::size_t>(n)] = t[n] * axis;
        return {VectorJet(std::move(rows)), jet_cos2_half(f)};
    }

    const double t0 = norm(theta[0]);
    if (t0 <= 1e-6)
        throw SmallAngleAmbiguous("|theta| = " + std::to_string(t0) +
                                  " at the evaluation point; pass the fixed axis if there is one");
    if (t0 >= pi - 1e-3)
        throw GimbalDomain("|theta| = " + std::to_string(t0) + " within 1e-3 of pi");

    const ScalarJet angle = jet_sqrt(jet_dot(theta, theta));
    const ScalarJet quotient = jet_mul(jet_tan_half(angle), jet_recip(angle));
    return {jet_scale(quotient, theta), jet_cos2_half(angle)};
}

}  // namespace curvjet
