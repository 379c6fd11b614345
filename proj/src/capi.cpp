#include "svdmark/svdmark.h"

#include <cstring>
#include <memory>
#include <string>

#include "svdmark/attacks.hpp"
#include "svdmark/chaos.hpp"
#include "svdmark/error.hpp"
#include "svdmark/image.hpp"
#include "svdmark/pipeline.hpp"

struct svdmark_image {
    svdmark::GrayImage img;
};

struct svdmark_bitmap {
    svdmark::BinaryImage img;
};

struct svdmark_report {
    svdmark::pipeline::VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

int status_of(svdmark::errc code) {
    switch (code) {
        case svdmark::errc::argument: return SVDMARK_ERR_ARGUMENT;
        case svdmark::errc::io: return SVDMARK_ERR_IO;
        case svdmark::errc::format: return SVDMARK_ERR_FORMAT;
        case svdmark::errc::dimension: return SVDMARK_ERR_DIMENSION;
        case svdmark::errc::key: return SVDMARK_ERR_KEY;
        case svdmark::errc::bounds: return SVDMARK_ERR_BOUNDS;
    }
    return SVDMARK_ERR_INTERNAL;
}

// Runs fn, converting exceptions to status codes and recording the message.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SVDMARK_OK;
    } catch (const svdmark::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SVDMARK_ERR_INTERNAL;
    }
}

void require(bool ok, const char* message) {
    if (!ok)
        throw svdmark::Error(svdmark::errc::argument, message);
}

} // namespace

extern "C" {

const char* svdmark_last_error(void) {
    return g_last_error.c_str();
}

const char* svdmark_status_name(int status) {
    switch (status) {
        case SVDMARK_OK: return "SVDMARK_OK";
        case SVDMARK_ERR_ARGUMENT: return "SVDMARK_ERR_ARGUMENT";
        case SVDMARK_ERR_IO: return "SVDMARK_ERR_IO";
        case SVDMARK_ERR_FORMAT: return "SVDMARK_ERR_FORMAT";
        case SVDMARK_ERR_DIMENSION: return "SVDMARK_ERR_DIMENSION";
        case SVDMARK_ERR_KEY: return "SVDMARK_ERR_KEY";
        case SVDMARK_ERR_BOUNDS: return "SVDMARK_ERR_BOUNDS";
        case SVDMARK_ERR_INTERNAL: return "SVDMARK_ERR_INTERNAL";
    }
    return "SVDMARK_ERR_UNKNOWN";
}

int svdmark_image_create(int width, int height, const uint8_t* pixels, svdmark_image** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::GrayImage(width, height);
        if (pixels)
            std::memcpy(handle->img.pixels.data(), pixels, handle->img.pixels.size());
        *out = handle.release();
    });
}

int svdmark_image_load(const char* path, svdmark_image** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "path and out must not be NULL");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::load_gray(path);
        *out = handle.release();
    });
}

int svdmark_image_save(const svdmark_image* image, const char* path) {
    return guarded([&] {
        require(image != nullptr && path != nullptr, "image and path must not be NULL");
        svdmark::save_gray(image->img, path);
    });
}

int svdmark_image_width(const svdmark_image* image) {
    return image ? image->img.width : 0;
}

int svdmark_image_height(const svdmark_image* image) {
    return image ? image->img.height : 0;
}

const uint8_t* svdmark_image_data(const svdmark_image* image) {
    return image ? image->img.pixels.data() : nullptr;
}

void svdmark_image_free(svdmark_image* image) {
    delete image;
}

int svdmark_bitmap_create(int width, int height, const uint8_t* bits, svdmark_bitmap** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        auto handle = std::make_unique<svdmark_bitmap>();
        handle->img = svdmark::BinaryImage(width, height);
        if (bits)
            for (std::size_t i = 0; i < handle->img.bits.size(); ++i)
                handle->img.bits[i] = bits[i] & 1;
        *out = handle.release();
    });
}

int svdmark_bitmap_load(const char* path, svdmark_bitmap** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "path and out must not be NULL");
        auto handle = std::make_unique<svdmark_bitmap>();
        handle->img = svdmark::load_binary(path);
        *out = handle.release();
    });
}

int svdmark_bitmap_save(const svdmark_bitmap* bitmap, const char* path) {
    return guarded([&] {
        require(bitmap != nullptr && path != nullptr, "bitmap and path must not be NULL");
        svdmark::save_binary(bitmap->img, path);
    });
}

int svdmark_bitmap_width(const svdmark_bitmap* bitmap) {
    return bitmap ? bitmap->img.width : 0;
}

int svdmark_bitmap_height(const svdmark_bitmap* bitmap) {
    return bitmap ? bitmap->img.height : 0;
}

const uint8_t* svdmark_bitmap_data(const svdmark_bitmap* bitmap) {
    return bitmap ? bitmap->img.bits.data() : nullptr;
}

void svdmark_bitmap_free(svdmark_bitmap* bitmap) {
    delete bitmap;
}

int svdmark_embed(const svdmark_image* host, const svdmark_bitmap* watermark,
                  long a, long b, long k, svdmark_image** out_watermarked) {
    return guarded([&] {
        require(host != nullptr && watermark != nullptr && out_watermarked != nullptr,
                "host, watermark and out must not be NULL");
        svdmark::pipeline::AuthKey key{a, b, k, watermark->img};
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::pipeline::embed(host->img, key);
        *out_watermarked = handle.release();
    });
}

int svdmark_verify(const svdmark_image* image, const svdmark_bitmap* watermark,
                   long a, long b, long k, svdmark_report** out_report) {
    return guarded([&] {
        require(image != nullptr && watermark != nullptr && out_report != nullptr,
                "image, watermark and out must not be NULL");
        svdmark::pipeline::AuthKey key{a, b, k, watermark->img};
        auto handle = std::make_unique<svdmark_report>();
        handle->report = svdmark::pipeline::verify(image->img, key);
        *out_report = handle.release();
    });
}

size_t svdmark_report_flagged(const svdmark_report* report) {
    return report ? report->report.flagged_count : 0;
}

size_t svdmark_report_total(const svdmark_report* report) {
    return report ? report->report.total_blocks : 0;
}

int svdmark_report_block_flagged(const svdmark_report* report, int row, int col) {
    if (!report)
        return -1;
    const auto& map = report->report.map;
    if (row < 0 || col < 0 || row >= map.rows || col >= map.cols)
        return -1;
    return map.at(row, col) ? 1 : 0;
}

int svdmark_report_tamper_map(const svdmark_report* report, svdmark_image** out_map) {
    return guarded([&] {
        require(report != nullptr && out_map != nullptr, "report and out must not be NULL");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::pipeline::render_tamper_map(report->report.map);
        *out_map = handle.release();
    });
}

int svdmark_report_extracted_watermark(const svdmark_report* report, svdmark_bitmap** out_wm) {
    return guarded([&] {
        require(report != nullptr && out_wm != nullptr, "report and out must not be NULL");
        auto handle = std::make_unique<svdmark_bitmap>();
        handle->img = report->report.extracted_watermark;
        *out_wm = handle.release();
    });
}

void svdmark_report_free(svdmark_report* report) {
    delete report;
}

int svdmark_psnr(const svdmark_image* a, const svdmark_image* b, double* out_db) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out_db != nullptr,
                "images and out must not be NULL");
        *out_db = svdmark::pipeline::psnr(a->img, b->img);
    });
}

int svdmark_arnold_period(long a, long b, long n, long* out_period) {
    return guarded([&] {
        require(out_period != nullptr, "out must not be NULL");
        *out_period = svdmark::chaos::arnold_period(a, b, n);
    });
}

int svdmark_attack_copy_paste(const svdmark_image* image, int src_x, int src_y, int w, int h,
                              int dst_x, int dst_y, svdmark_image** out) {
    return guarded([&] {
        require(image != nullptr && out != nullptr, "image and out must not be NULL");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::attacks::copy_paste(image->img, {src_x, src_y, w, h}, dst_x, dst_y);
        *out = handle.release();
    });
}

int svdmark_attack_splice(const svdmark_image* dst, const svdmark_image* src, int x, int y,
                          int w, int h, svdmark_image** out) {
    return guarded([&] {
        require(dst != nullptr && src != nullptr && out != nullptr,
                "images and out must not be NULL");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::attacks::splice(dst->img, src->img, {x, y, w, h});
        *out = handle.release();
    });
}

int svdmark_attack_fill(const svdmark_image* image, int x, int y, int w, int h, int value,
                        svdmark_image** out) {
    return guarded([&] {
        require(image != nullptr && out != nullptr, "image and out must not be NULL");
        require(value >= 0 && value <= 255, "fill value must lie in [0, 255]");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::attacks::fill_region(image->img, {x, y, w, h},
                                                    static_cast<std::uint8_t>(value));
        *out = handle.release();
    });
}

int svdmark_attack_stamp(const svdmark_image* image, const svdmark_bitmap* stamp, int x, int y,
                         int ink, svdmark_image** out) {
    return guarded([&] {
        require(image != nullptr && stamp != nullptr && out != nullptr,
                "image, stamp and out must not be NULL");
        require(ink >= 0 && ink <= 255, "ink value must lie in [0, 255]");
        auto handle = std::make_unique<svdmark_image>();
        handle->img = svdmark::attacks::stamp_bits(image->img, stamp->img, x, y,
                                                   static_cast<std::uint8_t>(ink));
        *out = handle.release();
    });
}

} // extern "C"
