#include <curvjet/updating.hpp>

#include <string>

namespace curvjet {

Skew3 transport(const Rotation& q, const Skew3& a) {
    const Mat3 m = q.matrix() * a.matrix() * q.matrix().transposed();
    // Conjugation by an orthogonal matrix preserves anti-symmetry; extract
    // the lower triangle and mirror.
    return hat({m(2, 1), m(0, 2), m(1, 0)});
}

TransportTable transport_derivatives(const Rotation& q_plus, const CurvatureJet& kappa_plus,
                                     std::span<const Skew3> a, int N) {
    if (static_cast<int>(a.size()) < N + 1)
        throw OrderMismatch("need the carried field to order " + std::to_string(N));
    if (N >= 1 && kappa_plus.order() < N - 1)
        throw OrderMismatch("need incremental curvature to order " + std::to_string(N - 1));

    std::vector<std::vector<Skew3>> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const int k_count = N + 1 - n;
        auto& row = rows[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(k_count));
        for (int k = 1; k <= k_count; ++k) {
            Skew3 acc = transport(q_plus, a[static_cast<std::size_t>(n + k - 1)]);
            for (int kk = 1; kk <= n; ++kk) {
                for (int i = 0; i <= n - kk; ++i) {
                    const Skew3& lower =
                        rows[static_cast<std::size_t>(n - kk - i)][static_cast<std::size_t>(k + kk - 2)];
                    acc += static_cast<double>(binom(n - kk, i)) *
                           lie_bracket(kappa_plus.hat_row(i), lower);
                }
            }
            row[static_cast<std::size_t>(k - 1)] = acc;
        }
    }
    return TransportTable(std::move(rows));
}

CurvatureJet update_curvature(const CurvatureJet& kappa_plus, const Rotation& q_plus,
                              const CurvatureJet& kappa_i, int N) {
    if (kappa_plus.order() < N || kappa_i.order() < N)
        throw OrderMismatch("need both curvature stacks to order " + std::to_string(N));

    std::vector<Skew3> carried(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) carried[static_cast<std::size_t>(n)] = kappa_i.hat_row(n);
    const TransportTable table = transport_derivatives(q_plus, kappa_plus, carried, N);

    std::vector<Vec3> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        rows[static_cast<std::size_t>(n)] = kappa_plus.row(n) + unhat(table.derivative(n));
    return CurvatureJet(VectorJet(std::move(rows)));
}

Rotation compose(const Rotation& q_plus, const Rotation& q_i) {
    return Rotation::from_matrix(q_plus.matrix() * q_i.matrix());
}

}  // namespace curvjet
