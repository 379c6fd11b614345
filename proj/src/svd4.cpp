#include "svdmark/svd4.hpp"

#include <algorithm>
#include <cmath>

namespace svdmark::svd4 {

namespace {

constexpr int kMaxSweeps = 50;
// Column-pair orthogonality threshold relative to the column norms. One-sided
// Jacobi with this stopping rule keeps small singular values accurate to
// roughly machine precision times the matrix condition number, instead of the
// squared loss a Gram-matrix eigensolve would give.
constexpr double kOrthTolerance = 1e-15;

double column_dot(const std::array<double, 16>& a, int i, int j) {
    double s = 0.0;
    for (int r = 0; r < 4; ++r)
        s += a[r * 4 + i] * a[r * 4 + j];
    return s;
}

// Plane rotation of columns p and q making them orthogonal (Hestenes).
// Returns false when the pair already met the tolerance.
bool orthogonalize(std::array<double, 16>& a, int p, int q) {
    const double app = column_dot(a, p, p);
    const double aqq = column_dot(a, q, q);
    const double apq = column_dot(a, p, q);
    if (std::fabs(apq) <= kOrthTolerance * std::sqrt(app) * std::sqrt(aqq))
        return false;

    const double tau = (aqq - app) / (2.0 * apq);
    // Smaller-magnitude tangent root keeps the rotation angle below pi/4.
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    for (int r = 0; r < 4; ++r) {
        const double vp = a[r * 4 + p];
        const double vq = a[r * 4 + q];
        a[r * 4 + p] = c * vp - s * vq;
        a[r * 4 + q] = s * vp + c * vq;
    }
    return true;
}

} // namespace

SingularSpectrum singular_values(const Matrix4& m) {
    std::array<double, 16> a = m;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                rotated |= orthogonalize(a, p, q);
        if (!rotated)
            break;
    }

    SingularSpectrum out;
    for (int i = 0; i < 4; ++i)
        out.sigma[i] = std::sqrt(column_dot(a, i, i));
    std::sort(out.sigma.begin(), out.sigma.end(), std::greater<double>());
    return out;
}

double sv_trace(const Matrix4& m) {
    const SingularSpectrum s = singular_values(m);
    return s.sigma[0] + s.sigma[1] + s.sigma[2] + s.sigma[3];
}

} // namespace svdmark::svd4
