#ifndef SVDMARK_PIPELINE_HPP
#define SVDMARK_PIPELINE_HPP

#include <cstdint>
#include <vector>

#include "svdmark/image.hpp"

namespace svdmark::pipeline {

/// Secret key material: Arnold parameters plus the binary watermark
/// image, which must match the host dimensions. The grid side is always
/// derived from the host, so only a, b and the scrambling count travel
/// here.
struct AuthKey {
    long a = 1;
    long b = 1;
    long k = 0;
    BinaryImage watermark;
};

/// Per-block tamper flags in original (unscrambled) block coordinates.
struct TamperMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> flags;  // 1 = tampered

    std::uint8_t at(int row, int col) const {
        return flags[static_cast<std::size_t>(row) * cols + col];
    }
};

struct VerifyReport {
    TamperMap map;
    BinaryImage extracted_watermark;
    std::size_t flagged_count = 0;
    std::size_t total_blocks = 0;
};

/// Embeds the authentication payload into the LSB plane of a square
/// host image whose side is a multiple of 4. Only LSBs change.
/// threads <= 0 picks the hardware concurrency; the output is identical
/// for every thread count.
GrayImage embed(const GrayImage& host, const AuthKey& key, int threads = 0);

/// Re-derives the per-block and per-group authentication numbers and
/// matches them against the embedded payload. Flagged blocks are
/// reported in original block coordinates together with the extracted
/// watermark image.
VerifyReport verify(const GrayImage& image, const AuthKey& key, int threads = 0);

/// Peak signal-to-noise ratio in dB; +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

/// Expands a tamper map to image resolution: flagged blocks turn white.
GrayImage render_tamper_map(const TamperMap& map);

} // namespace svdmark::pipeline

#endif
