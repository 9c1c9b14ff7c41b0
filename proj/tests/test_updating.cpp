#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvjet/oracle.hpp>
#include <curvjet/updating.hpp>

#include "helpers.hpp"

#include <random>

using namespace curvjet;

namespace {

std::vector<Skew3> hat_lift(const VectorJet& v) {
    std::vector<Skew3> out(static_cast<std::size_t>(v.order()) + 1);
    for (int n = 0; n <= v.order(); ++n) out[static_cast<std::size_t>(n)] = hat(v[n]);
    return out;
}

}  // namespace

TEST_CASE("transport basics") {
    std::mt19937 rng(401);
    const Skew3 a = hat(testutil::random_vec(rng, 2.0));

    CHECK(max_abs(transport(Rotation::identity(), a).matrix() - a.matrix()) == 0.0);

    // a rotation fixes its own axis
    const Vec3 theta = 1.3 * testutil::random_unit(rng);
    const Skew3 th = hat(theta);
    CHECK(max_abs(transport(exp_so3(theta), th).matrix() - th.matrix()) <= 1e-12);

    // conjugation rotates the axial vector
    for (int trial = 0; trial < 50; ++trial) {
        const Rotation q = exp_so3(testutil::random_vec(rng, 1.5));
        const Vec3 w = testutil::random_vec(rng, 2.0);
        CHECK(max_abs(unhat(transport(q, hat(w))) - q * w) <= 1e-14);
    }

    // transport carries the material curvature onto the spatial one
    const auto [spec, xi0] = testutil::random_admissible_field(rng);
    const auto stacks = testutil::stacks_at(spec, xi0, 1);
    const Skew3 spatial = transport(stacks.q, hat(stacks.kappa_bar.row(0)));
    CHECK(max_abs(unhat(spatial) - stacks.kappa.row(0)) <= 1e-13);
    const Skew3 material = transport(stacks.q.transposed(), stacks.kappa.hat_row(0));
    CHECK(max_abs(unhat(material) - stacks.kappa_bar.row(0)) <= 1e-13);
}

TEST_CASE("transport_derivatives low orders") {
    std::mt19937 rng(409);
    const auto [incr, xi0] = testutil::random_admissible_field(rng);
    const int N = 3;
    const auto plus = testutil::stacks_at(incr, xi0, N);
    const VectorJet w = testutil::random_poly_jet(rng, 4, N, xi0);
    const std::vector<Skew3> a = hat_lift(w);

    const TransportTable table = transport_derivatives(plus.q, plus.kappa, a, N);

    CHECK(max_abs(table.derivative(0).matrix() - transport(plus.q, a[0]).matrix()) == 0.0);

    const Skew3 first = transport(plus.q, a[1]) +
                        lie_bracket(plus.kappa.hat_row(0), transport(plus.q, a[0]));
    CHECK(max_abs(table.derivative(1).matrix() - first.matrix()) <= 1e-15);

    // every stored entry is exactly anti-symmetric
    for (int n = 0; n <= N; ++n)
        for (int k = 1; k <= table.width(n); ++k) {
            const Mat3 m = table.entry(n, k).matrix();
            CHECK(max_abs(m + m.transposed()) == 0.0);
        }

    // the underived row holds plain transports of the carried derivatives
    for (int k = 1; k <= table.width(0); ++k)
        CHECK(max_abs(table.entry(0, k).matrix() -
                      transport(plus.q, a[static_cast<std::size_t>(k - 1)]).matrix()) == 0.0);

    CHECK_THROWS_AS(transport_derivatives(plus.q, plus.kappa, a, N + 1), OrderMismatch);
}

TEST_CASE("transport_derivatives against finite differences") {
    std::mt19937 rng(419);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [incr, xi0] = testutil::random_admissible_field(rng);
        const int N = 3;
        const auto plus = testutil::stacks_at(incr, xi0, N);

        // carried field: hat of a polynomial vector field
        std::array<std::vector<double>, 3> wc;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (auto& c : wc) {
            c.resize(5);
            for (double& x : c) x = u(rng);
        }
        std::vector<Vec3> wrows(static_cast<std::size_t>(N) + 1);
        for (int k = 0; k < 3; ++k) {
            const auto d = polynomial_derivatives(wc[static_cast<std::size_t>(k)], xi0, N);
            for (int n = 0; n <= N; ++n) wrows[static_cast<std::size_t>(n)][k] = d[static_cast<std::size_t>(n)];
        }
        const std::vector<Skew3> a = hat_lift(VectorJet{std::move(wrows)});

        const TransportTable table = transport_derivatives(plus.q, plus.kappa, a, N);

        const SampledField<Mat3> field{
            [&incr, &wc](double xi) {
                const RotationSample r = rotation_sample(incr, xi);
                Vec3 w;
                for (int k = 0; k < 3; ++k)
                    w[k] = polynomial_derivatives(wc[static_cast<std::size_t>(k)], xi, 0)[0];
                return r.q * hat(w).matrix() * r.q.transposed();
            },
            xi0, 1.0};

        for (int n = 0; n <= N; ++n) {
            const Mat3 reference = fd_derivative(field, FdConfig::standard(n));
            CHECK(testutil::mixed_diff(table.derivative(n).matrix(), reference) <= 1e-5);
        }
    }
}

TEST_CASE("update_curvature identity cases") {
    std::mt19937 rng(421);
    const auto [spec, xi0] = testutil::random_admissible_field(rng);
    const int N = 4;
    const auto initial = testutil::stacks_at(spec, xi0, N);

    // zero increment: jets pass through untouched
    const CurvatureJet zero = CurvatureJet::zero(N);
    const CurvatureJet same = update_curvature(zero, Rotation::identity(), initial.kappa, N);
    for (int n = 0; n <= N; ++n) CHECK(max_abs(same.row(n) - initial.kappa.row(n)) == 0.0);

    // identity initial field: the incremental stack comes out
    const CurvatureJet plus_only = update_curvature(initial.kappa, initial.q, zero, N);
    for (int n = 0; n <= N; ++n) CHECK(max_abs(plus_only.row(n) - initial.kappa.row(n)) == 0.0);
}

TEST_CASE("update_curvature on a shared axis") {
    const Vec3 e{0.48, 0.6, 0.64};
    const std::vector<double> f{0.15, 0.4, -0.2, 0.1};
    const std::vector<double> g{0.05, -0.3, 0.25, 0.0, 0.02};
    const CurveSpec initial = testutil::make_fixed_axis(e, f);
    const CurveSpec incremental = testutil::make_fixed_axis(e, g);
    const double xi0 = 0.6;
    const int N = 4;

    const auto si = testutil::stacks_at(initial, xi0, N);
    const auto sp = testutil::stacks_at(incremental, xi0, N);
    const CurvatureJet updated = update_curvature(sp.kappa, sp.q, si.kappa, N);

    // commuting rotations add their rotation vectors: kappa_f = (f+g)' e
    std::vector<double> sum(5, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) sum[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) sum[i] += g[i];
    const auto d = polynomial_derivatives(sum, xi0, N + 1);
    for (int n = 0; n <= N; ++n) {
        const Vec3 expected = d[static_cast<std::size_t>(n + 1)] * e;
        CHECK(max_abs(updated.row(n) - expected) <= 1e-10);
    }

    const Rotation composed = compose(sp.q, si.q);
    const auto total = polynomial_derivatives(sum, xi0, 0);
    CHECK(max_abs(composed.matrix() - exp_so3(total[0] * e).matrix()) <= 1e-12);
}

TEST_CASE("update_curvature against the composed-field oracle") {
    std::mt19937 rng(431);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [initial, xi0] = testutil::random_admissible_field(rng);
        const auto [incremental, unused] = testutil::random_admissible_field(rng);
        const int N = 4;
        const auto si = testutil::stacks_at(initial, xi0, N);
        const auto sp = testutil::stacks_at(incremental, xi0, N);
        const CurvatureJet updated = update_curvature(sp.kappa, sp.q, si.kappa, N);

        const SampledField<Vec3> field = composed_curvature_field(initial, incremental, xi0);
        for (int n = 0; n <= N; ++n) {
            const Vec3 reference = fd_derivative(field, FdConfig::standard(n));
            CHECK(testutil::mixed_diff(updated.row(n), reference) <= 1e-7 * std::pow(10.0, n - 1));
        }
    }
}

TEST_CASE("compose") {
    std::mt19937 rng(433);
    const Rotation q = exp_so3(testutil::random_vec(rng, 1.0));
    CHECK(max_abs(compose(Rotation::identity(), q).matrix() - q.matrix()) == 0.0);

    const Vec3 e = testutil::random_unit(rng);
    const Rotation ab = compose(exp_so3(0.7 * e), exp_so3(0.4 * e));
    CHECK(max_abs(ab.matrix() - exp_so3(1.1 * e).matrix()) <= 1e-12);

    for (int trial = 0; trial < 100; ++trial) {
        const Rotation c =
            compose(exp_so3(testutil::random_vec(rng, 1.5)), exp_so3(testutil::random_vec(rng, 1.5)));
        CHECK(frobenius_norm(c.matrix().transposed() * c.matrix() - Mat3::identity()) <= 1e-12);
        CHECK(std::abs(c.matrix().det() - 1.0) <= 1e-12);
    }
}
