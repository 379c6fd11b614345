#include <doctest.h>

#include "svdmark/attacks.hpp"
#include "testutil.hpp"

using namespace svdmark;

TEST_SUITE("attacks") {

TEST_CASE("copy_paste snapshots the source before writing") {
    GrayImage img(8, 8);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
            img.at(x, y) = static_cast<std::uint8_t>(y * 8 + x);

    // overlapping move one pixel right: destination must read the
    // untouched original, not the partially written result
    const GrayImage out = attacks::copy_paste(img, {0, 0, 4, 4}, 1, 0);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x)
            CHECK(out.at(x + 1, y) == img.at(x, y));
    CHECK(out.at(0, 0) == img.at(0, 0));
    CHECK(out.at(5, 5) == img.at(5, 5));
}

TEST_CASE("copy_paste within bounds leaves the rest untouched") {
    const GrayImage img = testutil::random_image(16, 4);
    const GrayImage out = attacks::copy_paste(img, {8, 8, 4, 4}, 0, 0);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            if (x < 4 && y < 4)
                CHECK(out.at(x, y) == img.at(x + 8, y + 8));
            else
                CHECK(out.at(x, y) == img.at(x, y));
        }
}

TEST_CASE("splice replaces the region with same-position content") {
    const GrayImage a = testutil::random_image(16, 5);
    const GrayImage b = testutil::random_image(16, 6);
    const GrayImage out = attacks::splice(a, b, {4, 8, 8, 4});
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            const bool inside = x >= 4 && x < 12 && y >= 8 && y < 12;
            CHECK(out.at(x, y) == (inside ? b.at(x, y) : a.at(x, y)));
        }
}

TEST_CASE("splicing the whole frame yields the source image") {
    const GrayImage a = testutil::random_image(12, 7);
    const GrayImage b = testutil::random_image(12, 8);
    CHECK(attacks::splice(a, b, {0, 0, 12, 12}) == b);
}

TEST_CASE("splice requires equal dimensions") {
    const GrayImage a = testutil::random_image(16, 9);
    const GrayImage b = testutil::random_image(12, 9);
    CHECK_THROWS_AS(attacks::splice(a, b, {0, 0, 4, 4}), Error);
}

TEST_CASE("fill_region paints a constant rectangle") {
    const GrayImage img = testutil::random_image(16, 10);
    const GrayImage out = attacks::fill_region(img, {2, 3, 5, 4}, 99);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            const bool inside = x >= 2 && x < 7 && y >= 3 && y < 7;
            CHECK(out.at(x, y) == (inside ? 99 : img.at(x, y)));
        }
}

TEST_CASE("stamp_bits inks only where the stamp is set") {
    const GrayImage img = testutil::random_image(16, 11);
    BinaryImage stamp(4, 3);
    stamp.at(0, 0) = 1;
    stamp.at(3, 2) = 1;
    const GrayImage out = attacks::stamp_bits(img, stamp, 5, 6, 0);
    CHECK(out.at(5, 6) == 0);
    CHECK(out.at(8, 8) == 0);
    CHECK(out.at(6, 6) == img.at(6, 6));
    CHECK(out.at(5, 7) == img.at(5, 7));
    CHECK(out.at(0, 0) == img.at(0, 0));
}

TEST_CASE("rectangles must stay inside the image") {
    const GrayImage img = testutil::random_image(16, 12);
    CHECK_THROWS_AS(attacks::fill_region(img, {-1, 0, 4, 4}, 0), Error);
    CHECK_THROWS_AS(attacks::fill_region(img, {0, 0, 17, 4}, 0), Error);
    CHECK_THROWS_AS(attacks::fill_region(img, {14, 14, 4, 4}, 0), Error);
    CHECK_THROWS_AS(attacks::fill_region(img, {0, 0, 0, 4}, 0), Error);
    CHECK_THROWS_AS(attacks::copy_paste(img, {0, 0, 4, 4}, 13, 0), Error);
    CHECK_THROWS_AS(attacks::copy_paste(img, {0, 0, 4, 4}, 0, -2), Error);

    BinaryImage stamp(4, 4, 1);
    CHECK_THROWS_AS(attacks::stamp_bits(img, stamp, 13, 0, 7), Error);

    const GrayImage other = testutil::random_image(16, 13);
    CHECK_THROWS_AS(attacks::splice(img, other, {12, 12, 8, 8}), Error);

    try {
        attacks::fill_region(img, {0, 0, 32, 32}, 0);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bounds);
    }
}

}
