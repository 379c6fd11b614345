#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracle_arnold.hpp"
#include "svdmark/chaos.hpp"

using namespace svdmark;

TEST_SUITE("chaos") {

TEST_CASE("logistic sequence starts at the first iterate") {
    const std::vector<double> seq = chaos::logistic_sequence({0.5, 3.6}, 2);
    REQUIRE(seq.size() == 2u);
    CHECK(seq[0] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(seq[1] == doctest::Approx(0.324).epsilon(1e-12));
}

TEST_CASE("logistic iterates stay inside the unit interval") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> x0(0.01, 0.99);
    std::uniform_real_distribution<double> mu(3.5699, 3.9999);
    for (int t = 0; t < 50; ++t) {
        const auto seq = chaos::logistic_sequence({x0(rng), mu(rng)}, 64);
        for (double v : seq) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
    }
}

TEST_CASE("logistic parameters are validated") {
    CHECK_THROWS_AS(chaos::validate({0.0, 3.6}), Error);
    CHECK_THROWS_AS(chaos::validate({1.0, 3.6}), Error);
    CHECK_THROWS_AS(chaos::validate({0.5, 3.5}), Error);
    CHECK_THROWS_AS(chaos::validate({0.5, 4.0}), Error);
    CHECK_NOTHROW(chaos::validate({0.5, 3.5699}));
}

TEST_CASE("rank permutation orders values descending with stable ties") {
    const std::vector<double> seq = {0.5, 0.9, 0.5, 0.1};
    const auto perm = chaos::rank_permutation(seq);
    CHECK(perm == std::vector<std::size_t>{1, 0, 2, 3});
}

TEST_CASE("rank permutation is a bijection") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> seq(16);
        for (auto& v : seq)
            v = d(rng);
        auto perm = chaos::rank_permutation(seq);
        std::vector<std::size_t> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> iota(16);
        std::iota(iota.begin(), iota.end(), 0u);
        CHECK(sorted == iota);
        for (std::size_t r = 1; r < perm.size(); ++r)
            CHECK(seq[perm[r - 1]] >= seq[perm[r]]);
    }
}

TEST_CASE("arnold step on the smallest grid") {
    CHECK(chaos::arnold_step(1, 0, 1, 1, 2) == std::pair<long, long>(1, 1));
    CHECK(chaos::arnold_step(0, 0, 1, 1, 2) == std::pair<long, long>(0, 0));
}

TEST_CASE("arnold period matches the point-walk oracle") {
    CHECK(chaos::arnold_period(1, 1, 2) == 3);
    for (long n : {2L, 3L, 4L, 5L, 8L, 12L, 16L, 25L, 32L})
        for (long a : {1L, 2L})
            for (long b : {1L, 3L}) {
                const long want = oracle::arnold_period(a, b, n);
                REQUIRE(want > 0);
                CHECK(chaos::arnold_period(a, b, n) == want);
            }
}

TEST_CASE("scramble map is a permutation and closes after the period") {
    const long n = 12;
    const long t = chaos::arnold_period(1, 1, n);

    auto is_identity = [&](const std::vector<std::size_t>& map) {
        for (std::size_t i = 0; i < map.size(); ++i)
            if (map[i] != i)
                return false;
        return true;
    };

    const auto one = chaos::scramble_map(n, 1, 1, 1);
    std::vector<std::size_t> sorted = one;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(sorted.size());
    std::iota(iota.begin(), iota.end(), 0u);
    CHECK(sorted == iota);
    CHECK_FALSE(is_identity(one));

    CHECK(is_identity(chaos::scramble_map(n, 1, 1, 0)));
    CHECK(is_identity(chaos::scramble_map(n, 1, 1, t)));
}

TEST_CASE("scrambling k then period minus k is the identity") {
    const long n = 16;
    const long t = chaos::arnold_period(1, 1, n);
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    std::iota(cells.begin(), cells.end(), 0);

    for (long k : {0L, 1L, t / 2, t - 1}) {
        auto once = chaos::scramble_grid(cells, n, 1, 1, k);
        auto back = chaos::scramble_grid(once, n, 1, 1, t - k);
        CHECK(back == cells);
    }
}

TEST_CASE("scramble map composes like repeated steps") {
    const long n = 8;
    const auto step = chaos::scramble_map(n, 1, 2, 1);
    const auto twice = chaos::scramble_map(n, 1, 2, 2);
    for (std::size_t i = 0; i < step.size(); ++i)
        CHECK(twice[i] == step[step[i]]);
}

TEST_CASE("scramble_grid places cell i at its mapped index") {
    const long n = 4;
    std::vector<int> cells(16);
    std::iota(cells.begin(), cells.end(), 0);
    const auto map = chaos::scramble_map(n, 1, 1, 1);
    const auto out = chaos::scramble_grid(cells, n, 1, 1, 1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        CHECK(out[map[i]] == cells[i]);
}

TEST_CASE("grid helpers reject invalid arguments") {
    std::vector<int> cells(15);
    CHECK_THROWS_AS(chaos::scramble_grid(cells, 4, 1, 1, 1), Error);
    CHECK_THROWS_AS(chaos::arnold_period(1, 1, 1), Error);
    CHECK_THROWS_AS(chaos::arnold_period(1, 1, 0), Error);
}

}
