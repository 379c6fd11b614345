#ifndef SVDMARK_SVD4_HPP
#define SVDMARK_SVD4_HPP

#include <array>

namespace svdmark::svd4 {

/// Row-major 4x4 real matrix.
using Matrix4 = std::array<double, 16>;

/// Singular values in non-increasing order.
struct SingularSpectrum {
    std::array<double, 4> sigma{};
};

/// Singular values of m via one-sided Jacobi: column pairs are rotated
/// until all pairs are mutually orthogonal, then each singular value is
/// the Euclidean norm of its column. Working on m directly instead of
/// m^T m keeps small singular values accurate to full relative
/// precision.
SingularSpectrum singular_values(const Matrix4& m);

/// Sum of the four singular values (nuclear norm).
double sv_trace(const Matrix4& m);

} // namespace svdmark::svd4

#endif
