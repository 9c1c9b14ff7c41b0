#include <curvjet/curvature.hpp>

#include <string>

namespace curvjet {

int jmax(int m) {
    if (m < 0) throw IndexError("jmax of negative m");
    // (m+1)/2 is an integer exactly when m is odd.
    return (m % 2 == 0) ? (m + 1) / 2 : (m + 1) / 2 - 1;
}

std::int64_t bcoef(int m, int j) {
    if (j < 0 || j > jmax(m))
        throw IndexError("bcoef(" + std::to_string(m) + ", " + std::to_string(j) + ") out of range");
    const std::int64_t high = (m - j + 1 > m) ? 0 : binom(m, m - j + 1);
    return binom(m, j) - high;
}

Skew3 skew_pair_derivative(const VectorJet& a, int m) {
    if (a.order() < m + 1)
        throw OrderMismatch("need jets of order " + std::to_string(m + 1) + ", got " +
                            std::to_string(a.order()));
    Skew3 sum;
    for (int j = 0; j <= jmax(m); ++j)
        sum += static_cast<double>(bcoef(m, j)) * lie_bracket(hat(a[j]), hat(a[m - j + 1]));
    return sum;
}

Vec3 curvature_from_gibbs(const VectorJet& phi, const ScalarJet& phi_bar) {
    if (phi.order() < 1) throw OrderMismatch("need phi jets of order >= 1");
    return phi_bar[0] * (phi[1] + cross(phi[0], phi[1]));
}

Skew3 curvature_tensor_from_gibbs(const VectorJet& phi, const ScalarJet& phi_bar) {
    return hat(curvature_from_gibbs(phi, phi_bar));
}

CurvatureJet curvature_derivatives(const VectorJet& phi, const ScalarJet& phi_bar, int N) {
    if (N < 0 || N > kMaxDerivativeOrder)
        throw OrderMismatch("derivative order " + std::to_string(N) + " outside [0, " +
                            std::to_string(kMaxDerivativeOrder) + "]");
    if (phi.order() < N + 1 || phi_bar.order() < N)
        throw OrderMismatch("need phi to order " + std::to_string(N + 1) + " and phi_bar to order " +
                            std::to_string(N));

    std::vector<Vec3> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Vec3 acc;
        for (int i = 0; i <= n; ++i) {
            const int m = n - i;
            Vec3 inner = phi[m + 1];
            for (int j = 0; j <= jmax(m); ++j)
                inner += static_cast<double>(bcoef(m, j)) * cross(phi[j], phi[m + 1 - j]);
            acc += (static_cast<double>(binom(n, i)) * phi_bar[i]) * inner;
        }
        rows[static_cast<std::size_t>(n)] = acc;
    }
    return CurvatureJet(VectorJet(std::move(rows)));
}

Rotation rotation_from_gibbs(const Vec3& phi, double phi_bar) {
    const double consistency = phi_bar * (dot(phi, phi) + 1.0) - 2.0;
    if (std::abs(consistency) > 1e-10)
        throw InconsistentGibbsPair("phi_bar (|phi|^2 + 1) - 2 = " + std::to_string(consistency));
    const Mat3 ph = hat(phi).matrix();
    return Rotation(Mat3::identity() + phi_bar * (ph + ph * ph));
}

RotationJet rotation_derivatives(const Rotation& q, const CurvatureJet& kappa, int N) {
    if (N >= 1 && kappa.order() < N - 1)
        throw OrderMismatch("need curvature to order " + std::to_string(N - 1) + ", got " +
                            std::to_string(kappa.order()));
    std::vector<Mat3> rows(static_cast<std::size_t>(N) + 1);
    rows[0] = q.matrix();
    for (int n = 1; n <= N; ++n) {
        Mat3 acc;
        for (int i = 0; i <= n - 1; ++i)
            acc += static_cast<double>(binom(n - 1, i)) *
                   (kappa.hat_row(i).matrix() * rows[static_cast<std::size_t>(n - 1 - i)]);
        rows[static_cast<std::size_t>(n)] = acc;
    }
    return RotationJet(q, std::move(rows));
}

}  // namespace curvjet
