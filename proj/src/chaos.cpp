#include "svdmark/chaos.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace svdmark::chaos {

namespace {

using Mat2 = std::array<long, 4>; // row-major 2x2

Mat2 mat_mul_mod(const Mat2& p, const Mat2& q, long n) {
    auto mul = [n](long u, long v) { return (u * v) % n; };
    return Mat2{(mul(p[0], q[0]) + mul(p[1], q[2])) % n,
                (mul(p[0], q[1]) + mul(p[1], q[3])) % n,
                (mul(p[2], q[0]) + mul(p[3], q[2])) % n,
                (mul(p[2], q[1]) + mul(p[3], q[3])) % n};
}

Mat2 arnold_matrix(long a, long b, long n) {
    return Mat2{1 % n, a % n, b % n, (a % n * (b % n) + 1) % n};
}

Mat2 mat_pow_mod(Mat2 m, long e, long n) {
    Mat2 r{1 % n, 0, 0, 1 % n};
    while (e > 0) {
        if (e & 1)
            r = mat_mul_mod(r, m, n);
        m = mat_mul_mod(m, m, n);
        e >>= 1;
    }
    return r;
}

void validate_arnold(long a, long b, long n) {
    if (n < 2)
        throw Error(errc::argument, "Arnold grid side must be >= 2");
    if (a < 1 || b < 1)
        throw Error(errc::argument, "Arnold parameters a and b must be >= 1");
}

} // namespace

void validate(const LogisticParams& params) {
    if (!(params.x0 > 0.0 && params.x0 < 1.0))
        throw Error(errc::argument, "logistic x0 must lie in (0, 1)");
    if (!(params.mu >= 3.5699 && params.mu < 4.0))
        throw Error(errc::argument, "logistic mu must lie in [3.5699, 4.0)");
}

std::vector<double> logistic_sequence(const LogisticParams& params, std::size_t n) {
    validate(params);
    if (n == 0)
        throw Error(errc::argument, "sequence length must be >= 1");
    std::vector<double> seq(n);
    double x = params.x0;
    for (std::size_t i = 0; i < n; ++i) {
        x = params.mu * x * (1.0 - x);
        seq[i] = x;
    }
    return seq;
}

std::vector<std::size_t> rank_permutation(std::span<const double> seq) {
    if (seq.empty())
        throw Error(errc::argument, "rank_permutation needs a non-empty sequence");
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&seq](std::size_t i, std::size_t j) {
        if (seq[i] != seq[j])
            return seq[i] > seq[j];
        return i < j;
    });
    return order;
}

std::pair<long, long> arnold_step(long x, long y, long a, long b, long n) {
    validate_arnold(a, b, n);
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw Error(errc::argument, "Arnold point outside the grid");
    const long xn = (x + a % n * y) % n;
    const long yn = (b % n * x + (a % n * (b % n) + 1) % n * y) % n;
    return {xn, yn};
}

long arnold_period(long a, long b, long n) {
    validate_arnold(a, b, n);
    const Mat2 m = arnold_matrix(a, b, n);
    const Mat2 identity{1 % n, 0, 0, 1 % n};
    const long cap = 6 * n * n;
    Mat2 p = m;
    for (long t = 1; t <= cap; ++t) {
        if (p == identity)
            return t;
        p = mat_mul_mod(p, m, n);
    }
    throw Error(errc::argument,
                "Arnold period exceeds cap " + std::to_string(cap) + " for a=" +
                    std::to_string(a) + " b=" + std::to_string(b) + " N=" + std::to_string(n));
}

std::vector<std::size_t> scramble_map(long n, long a, long b, long times) {
    validate_arnold(a, b, n);
    if (times < 0)
        throw Error(errc::argument, "scramble count must be >= 0");
    const Mat2 p = mat_pow_mod(arnold_matrix(a, b, n), times, n);
    std::vector<std::size_t> dest(static_cast<std::size_t>(n) * n);
    for (long y = 0; y < n; ++y) {
        for (long x = 0; x < n; ++x) {
            const long xn = (p[0] * x + p[1] * y) % n;
            const long yn = (p[2] * x + p[3] * y) % n;
            dest[static_cast<std::size_t>(y) * n + x] = static_cast<std::size_t>(yn) * n + xn;
        }
    }
    return dest;
}

} // namespace svdmark::chaos
