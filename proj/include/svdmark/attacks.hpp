#ifndef SVDMARK_ATTACKS_HPP
#define SVDMARK_ATTACKS_HPP

#include <cstdint>

#include "svdmark/image.hpp"

namespace svdmark::attacks {

/// Axis-aligned pixel rectangle; must lie fully inside its target image.
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

/// Copies the src rectangle onto the destination top-left corner within
/// the same image.
GrayImage copy_paste(const GrayImage& image, const Rect& src, int dst_x, int dst_y);

/// Replaces the region with the same-position pixels of a second image
/// of equal dimensions (position-preserving collage).
GrayImage splice(const GrayImage& dst_image, const GrayImage& src_image, const Rect& region);

/// Sets the region to a constant intensity.
GrayImage fill_region(const GrayImage& image, const Rect& region, std::uint8_t value);

/// Paints `ink` wherever the stamp bitmap has a 1, anchored at (x, y).
GrayImage stamp_bits(const GrayImage& image, const BinaryImage& stamp, int at_x, int at_y,
                     std::uint8_t ink);

} // namespace svdmark::attacks

#endif
