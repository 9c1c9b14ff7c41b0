#include <curvjet/corotational.hpp>

#include <string>

namespace curvjet {

namespace {

// Memoized evaluation of the co-rotational recurrence. table[q][p] holds the
// p-th plain derivative of the q-th co-rotational derivative field, filled
// over the triangle q + p <= n. Each entry differentiates the recurrence
// identity p more times and expands the outer derivative by Leibniz.
template <typename T, typename Commutator>
T corot_recurrence(std::span<const T> derivs, const CurvatureJet& kappa, int n, Commutator comm) {
    if (static_cast<int>(derivs.size()) < n + 1)
        throw OrderMismatch("need field derivatives to order " + std::to_string(n));
    if (n >= 1 && kappa.order() < n - 1)
        throw OrderMismatch("need curvature to order " + std::to_string(n - 1));
    if (n == 0) return derivs[0];

    std::vector<std::vector<T>> table(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) table[static_cast<std::size_t>(q)].resize(static_cast<std::size_t>(n - q) + 1);
    for (int p = 0; p <= n; ++p) table[0][static_cast<std::size_t>(p)] = derivs[static_cast<std::size_t>(p)];

    for (int q = 1; q <= n; ++q) {
        for (int p = 0; p <= n - q; ++p) {
            T acc = derivs[static_cast<std::size_t>(p + q)];
            for (int i = 1; i <= q; ++i) {
                const int r = p + i - 1;
                for (int j = 0; j <= r; ++j) {
                    const T& inner = table[static_cast<std::size_t>(q - i)][static_cast<std::size_t>(r - j)];
                    acc -= static_cast<double>(binom(r, j)) * comm(j, inner);
                }
            }
            table[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = acc;
        }
    }
    return table[static_cast<std::size_t>(n)][0];
}

}  // namespace

Vec3 corot_vector(const VectorJet& v, const CurvatureJet& kappa, int n) {
    std::vector<Vec3> derivs(static_cast<std::size_t>(v.order()) + 1);
    for (int i = 0; i <= v.order(); ++i) derivs[static_cast<std::size_t>(i)] = v[i];
    return corot_recurrence<Vec3>(derivs, kappa, n,
                                  [&](int j, const Vec3& x) { return cross(kappa.row(j), x); });
}

Skew3 corot_skew(std::span<const Skew3> a, const CurvatureJet& kappa, int n) {
    return corot_recurrence<Skew3>(a, kappa, n, [&](int j, const Skew3& x) {
        return lie_bracket(kappa.hat_row(j), x);
    });
}

Mat3 corot_tensor(std::span<const Mat3> b, const CurvatureJet& kappa, int n) {
    return corot_recurrence<Mat3>(b, kappa, n, [&](int j, const Mat3& x) {
        const Mat3 kh = kappa.hat_row(j).matrix();
        return kh * x - x * kh;
    });
}

MaterialCurvatureJet material_curvature_derivatives(const RotationJet& q, const CurvatureJet& kappa,
                                                    int N) {
    if (q.order() < N || kappa.order() < N)
        throw OrderMismatch("need rotation and curvature stacks to order " + std::to_string(N));
    std::vector<Vec3> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Vec3 acc;
        for (int i = 0; i <= n; ++i)
            acc += static_cast<double>(binom(n, i)) * (q.row(i).transposed() * kappa.row(n - i));
        rows[static_cast<std::size_t>(n)] = acc;
    }
    return MaterialCurvatureJet(VectorJet(std::move(rows)));
}

CorotationalJet corot_curvature_derivatives(const RotationJet& q, const MaterialCurvatureJet& material,
                                            int N) {
    if (N < 1) throw OrderMismatch("co-rotational curvature rows start at order 1");
    if (material.order() < N)
        throw OrderMismatch("need material stack to order " + std::to_string(N));
    std::vector<Vec3> rows(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n)
        rows[static_cast<std::size_t>(n - 1)] = q.rotation() * material.row(n);
    return CorotationalJet(std::move(rows));
}

}  // namespace curvjet
