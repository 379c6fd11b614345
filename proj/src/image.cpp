#include "svdmark/image.hpp"

#include <cstdio>
#include <fstream>
#include <limits>

namespace svdmark {

namespace {

constexpr int kMaxSide = 32768;

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
int read_header_value(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        throw Error(errc::format, path + ": malformed netpbm header");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > std::numeric_limits<int>::max())
            throw Error(errc::format, path + ": header value out of range");
        c = in.get();
    }
    if (c != EOF)
        in.unget();
    return static_cast<int>(value);
}

// Reads the "P?" magic and returns the digit.
int read_magic(std::istream& in, const std::string& path) {
    int p = in.get();
    int d = in.get();
    if (p != 'P' || d < '1' || d > '7')
        throw Error(errc::format, path + ": not a netpbm file");
    return d - '0';
}

void check_dimensions(int w, int h, const std::string& path) {
    if (w <= 0 || h <= 0 || w > kMaxSide || h > kMaxSide)
        throw Error(errc::format, path + ": dimensions out of range");
}

// One whitespace byte separates the header from the raster.
void skip_raster_separator(std::istream& in, const std::string& path) {
    int c = in.get();
    if (c == EOF || !std::isspace(c))
        throw Error(errc::format, path + ": malformed netpbm header");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::io, path + ": cannot open file");
    return in;
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0)
        throw Error(errc::dimension, "image dimensions must be positive");
}

BinaryImage::BinaryImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0)
        throw Error(errc::dimension, "image dimensions must be positive");
}

bool operator==(const GrayImage& a, const GrayImage& b) {
    return a.width == b.width && a.height == b.height && a.pixels == b.pixels;
}

bool operator==(const BinaryImage& a, const BinaryImage& b) {
    return a.width == b.width && a.height == b.height && a.bits == b.bits;
}

GrayImage load_gray(const std::string& path) {
    std::ifstream in = open_input(path);
    int magic = read_magic(in, path);
    if (magic != 5)
        throw Error(errc::format, path + ": unsupported format (want binary PGM \"P5\")");

    int w = read_header_value(in, path);
    int h = read_header_value(in, path);
    int maxval = read_header_value(in, path);
    check_dimensions(w, h, path);
    if (maxval != 255)
        throw Error(errc::format, path + ": maxval must be 255, got " + std::to_string(maxval));
    skip_raster_separator(in, path);

    GrayImage img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw Error(errc::format, path + ": truncated pixel data");
    return img;
}

void save_gray(const GrayImage& image, const std::string& path) {
    if (image.width <= 0 || image.height <= 0 || image.pixels.empty())
        throw Error(errc::dimension, "empty image");
    if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height)
        throw Error(errc::dimension, "pixel buffer does not match dimensions");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(errc::io, path + ": cannot open file for writing");
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out)
        throw Error(errc::io, path + ": write failed");
}

BinaryImage load_binary(const std::string& path) {
    std::ifstream in = open_input(path);
    int magic = read_magic(in, path);

    if (magic == 5) {
        in.close();
        GrayImage gray = load_gray(path);
        BinaryImage img(gray.width, gray.height);
        for (std::size_t i = 0; i < gray.pixels.size(); ++i)
            img.bits[i] = gray.pixels[i] >= 128 ? 1 : 0;
        return img;
    }
    if (magic != 4)
        throw Error(errc::format, path + ": unsupported format (want PBM \"P4\" or PGM \"P5\")");

    int w = read_header_value(in, path);
    int h = read_header_value(in, path);
    check_dimensions(w, h, path);
    skip_raster_separator(in, path);

    BinaryImage img(w, h);
    const int row_bytes = (w + 7) / 8;
    std::vector<std::uint8_t> row(static_cast<std::size_t>(row_bytes));
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row_bytes);
        if (in.gcount() != row_bytes)
            throw Error(errc::format, path + ": truncated bit data");
        for (int x = 0; x < w; ++x)
            img.at(x, y) = (row[x >> 3] >> (7 - (x & 7))) & 1;
    }
    return img;
}

void save_binary(const BinaryImage& image, const std::string& path) {
    if (image.width <= 0 || image.height <= 0 || image.bits.empty())
        throw Error(errc::dimension, "empty image");
    if (image.bits.size() != static_cast<std::size_t>(image.width) * image.height)
        throw Error(errc::dimension, "bit buffer does not match dimensions");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(errc::io, path + ": cannot open file for writing");
    out << "P4\n" << image.width << " " << image.height << "\n";

    const int row_bytes = (image.width + 7) / 8;
    std::vector<std::uint8_t> row(static_cast<std::size_t>(row_bytes));
    for (int y = 0; y < image.height; ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (int x = 0; x < image.width; ++x)
            if (image.at(x, y) & 1)
                row[x >> 3] |= static_cast<std::uint8_t>(0x80u >> (x & 7));
        out.write(reinterpret_cast<const char*>(row.data()), row_bytes);
    }
    if (!out)
        throw Error(errc::io, path + ": write failed");
}

} // namespace svdmark
