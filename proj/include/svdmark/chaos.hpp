#ifndef SVDMARK_CHAOS_HPP
#define SVDMARK_CHAOS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "svdmark/error.hpp"

namespace svdmark::chaos {

/// Seed and control parameter of the logistic map x <- mu*x*(1-x).
struct LogisticParams {
    double x0 = 0.5;     // in (0, 1)
    double mu = 3.5699;  // in [3.5699, 4.0)
};

void validate(const LogisticParams& params);

/// First n iterates x1..xn starting from x0 (x1 = mu*x0*(1-x0), no burn-in).
std::vector<double> logistic_sequence(const LogisticParams& params, std::size_t n);

/// Descending value order of a sequence: out[r] is the index of the
/// (r+1)-th largest element. Ties go to the smaller index, so the result
/// is a deterministic bijection on 0..n-1.
std::vector<std::size_t> rank_permutation(std::span<const double> seq);

/// Arnold parameters plus scrambling count for an n-by-n block grid.
struct ArnoldKey {
    long a = 1;
    long b = 1;
    long k = 0;  // scrambling count, must stay below the period
    long n = 0;  // grid side length
};

/// One application of [[1,a],[b,ab+1]] mod n to the point (x, y).
std::pair<long, long> arnold_step(long x, long y, long a, long b, long n);

/// Smallest t >= 1 with the transform matrix to the t-th power congruent
/// to the identity mod n. Iterated 2x2 modular multiplication, capped at
/// 6*n*n; the cap throws for pathological parameters.
long arnold_period(long a, long b, long n);

/// Destination linear index (row-major) for every source cell of an
/// n-by-n grid after `times` Arnold steps, with x = column and y = row.
std::vector<std::size_t> scramble_map(long n, long a, long b, long times);

/// Relocates the cells of a square row-major grid by `times` Arnold steps.
template <typename T>
std::vector<T> scramble_grid(const std::vector<T>& cells, long n, long a, long b, long times) {
    if (n < 2 || cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error(errc::dimension, "scramble_grid requires a square grid with side >= 2");
    const std::vector<std::size_t> dest = scramble_map(n, a, b, times);
    std::vector<T> out(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out[dest[i]] = cells[i];
    return out;
}

} // namespace svdmark::chaos

#endif
