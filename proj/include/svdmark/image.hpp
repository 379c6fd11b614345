#ifndef SVDMARK_IMAGE_HPP
#define SVDMARK_IMAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "svdmark/error.hpp"

namespace svdmark {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return pixels.size(); }
};

/// Bit raster with values in {0,1}, row-major, one byte per bit in memory.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryImage() = default;
    BinaryImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return bits[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return bits.size(); }
};

bool operator==(const GrayImage& a, const GrayImage& b);
bool operator==(const BinaryImage& a, const BinaryImage& b);

// Netpbm I/O. Grayscale images travel as binary PGM (P5, maxval 255),
// bit images as binary PBM (P4, MSB-first rows padded to a byte), so a
// saved file reloads to the identical pixel/bit array.

/// Read a binary PGM (P5) file. Rejects any maxval other than 255.
GrayImage load_gray(const std::string& path);

/// Write a binary PGM (P5) file with maxval 255.
void save_gray(const GrayImage& image, const std::string& path);

/// Read a bit image: P4 ink (1 = black) maps to bit 1. A P5 file is
/// accepted too and thresholded at >= 128 -> 1.
BinaryImage load_binary(const std::string& path);

/// Write a binary PBM (P4) file.
void save_binary(const BinaryImage& image, const std::string& path);

} // namespace svdmark

#endif
