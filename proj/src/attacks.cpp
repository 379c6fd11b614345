#include "svdmark/attacks.hpp"

namespace svdmark::attacks {

namespace {

void check_rect(const Rect& r, const GrayImage& image, const char* what) {
    if (r.w <= 0 || r.h <= 0 || r.x < 0 || r.y < 0 ||
        r.x + r.w > image.width || r.y + r.h > image.height)
        throw Error(errc::bounds, std::string(what) + " rectangle empty or outside the image");
}

} // namespace

GrayImage copy_paste(const GrayImage& image, const Rect& src, int dst_x, int dst_y) {
    check_rect(src, image, "source");
    check_rect({dst_x, dst_y, src.w, src.h}, image, "destination");

    GrayImage out = image;
    // Snapshot semantics: reads come from the input, so overlapping
    // source and destination behave like a copy through a buffer.
    for (int r = 0; r < src.h; ++r)
        for (int c = 0; c < src.w; ++c)
            out.at(dst_x + c, dst_y + r) = image.at(src.x + c, src.y + r);
    return out;
}

GrayImage splice(const GrayImage& dst_image, const GrayImage& src_image, const Rect& region) {
    if (dst_image.width != src_image.width || dst_image.height != src_image.height)
        throw Error(errc::dimension, "splice images must share dimensions");
    check_rect(region, dst_image, "splice");

    GrayImage out = dst_image;
    for (int r = 0; r < region.h; ++r)
        for (int c = 0; c < region.w; ++c)
            out.at(region.x + c, region.y + r) = src_image.at(region.x + c, region.y + r);
    return out;
}

GrayImage fill_region(const GrayImage& image, const Rect& region, std::uint8_t value) {
    check_rect(region, image, "fill");

    GrayImage out = image;
    for (int r = 0; r < region.h; ++r)
        for (int c = 0; c < region.w; ++c)
            out.at(region.x + c, region.y + r) = value;
    return out;
}

GrayImage stamp_bits(const GrayImage& image, const BinaryImage& stamp, int at_x, int at_y,
                     std::uint8_t ink) {
    check_rect({at_x, at_y, stamp.width, stamp.height}, image, "stamp");

    GrayImage out = image;
    for (int r = 0; r < stamp.height; ++r)
        for (int c = 0; c < stamp.width; ++c)
            if (stamp.at(c, r))
                out.at(at_x + c, at_y + r) = ink;
    return out;
}

} // namespace svdmark::attacks
