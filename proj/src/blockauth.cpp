#include "svdmark/blockauth.hpp"

#include <cmath>

#include "svdmark/svd4.hpp"

namespace svdmark::blockauth {

namespace {

// Traces of structured integer blocks (constant, diagonal) are exact
// integers, but the kernel can return them a round-off below the
// boundary; snap before flooring so the fold is stable there.
constexpr double kIntegerSnap = 1e-6;

svd4::Matrix4 to_matrix(const Block& block) {
    svd4::Matrix4 m;
    for (int i = 0; i < 16; ++i)
        m[i] = static_cast<double>(block.pixels[i]);
    return m;
}

} // namespace

BlockGrid split_blocks(const GrayImage& image) {
    if (image.width <= 0 || image.height <= 0)
        throw Error(errc::dimension, "empty image");
    if (image.width % 4 != 0 || image.height % 4 != 0)
        throw Error(errc::dimension, "image sides must be multiples of 4");

    BlockGrid grid;
    grid.rows = image.height / 4;
    grid.cols = image.width / 4;
    grid.blocks.resize(static_cast<std::size_t>(grid.rows) * grid.cols);
    for (int br = 0; br < grid.rows; ++br)
        for (int bc = 0; bc < grid.cols; ++bc) {
            Block& blk = grid.blocks[static_cast<std::size_t>(br) * grid.cols + bc];
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    blk.pixels[i * 4 + j] = image.at(bc * 4 + j, br * 4 + i);
        }
    return grid;
}

GrayImage merge_blocks(const BlockGrid& grid) {
    if (grid.rows <= 0 || grid.cols <= 0 ||
        grid.blocks.size() != static_cast<std::size_t>(grid.rows) * grid.cols)
        throw Error(errc::dimension, "inconsistent block grid");

    GrayImage image(grid.cols * 4, grid.rows * 4);
    for (int br = 0; br < grid.rows; ++br)
        for (int bc = 0; bc < grid.cols; ++bc) {
            const Block& blk = grid.blocks[static_cast<std::size_t>(br) * grid.cols + bc];
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    image.at(bc * 4 + j, br * 4 + i) = blk.pixels[i * 4 + j];
        }
    return image;
}

Block zero_lsb(const Block& block) {
    Block out = block;
    for (auto& p : out.pixels)
        p = static_cast<std::uint8_t>(p & 0xFEu);
    return out;
}

int block_ban(const Block& block7) {
    const double trace = svd4::sv_trace(to_matrix(block7));
    double folded = std::fmod(trace, 1024.0);
    const double nearest = std::nearbyint(folded);
    if (std::fabs(folded - nearest) < kIntegerSnap)
        folded = nearest;
    return static_cast<int>(static_cast<long>(folded) % 1024);
}

std::vector<GroupRange> group_ranges(std::size_t total_blocks) {
    if (total_blocks == 0)
        throw Error(errc::argument, "need at least one block");
    std::vector<GroupRange> groups;
    groups.reserve((total_blocks + kGroupSize - 1) / kGroupSize);
    for (std::size_t begin = 0; begin < total_blocks; begin += kGroupSize)
        groups.push_back({begin, std::min(begin + kGroupSize, total_blocks)});
    return groups;
}

int group_gan(std::span<const int> bans) {
    if (bans.empty() || bans.size() > kGroupSize)
        throw Error(errc::argument, "group must hold between 1 and 5 BANs");
    long sum = 0;
    for (int ban : bans) {
        if (ban < 0 || ban > 1023)
            throw Error(errc::argument, "BAN out of range");
        sum += ban;
    }
    const long g = static_cast<long>(bans.size());
    return static_cast<int>((sum % (64 * g)) / g);
}

chaos::LogisticParams chaotic_params(const Block& block7) {
    long sum = 0;
    long sum_sq = 0;
    for (std::uint8_t p : block7.pixels) {
        sum += p;
        sum_sq += static_cast<long>(p) * p;
    }
    const double mean = static_cast<double>(sum) / 16.0;
    const double mean_sq = static_cast<double>(sum_sq) / 16.0;
    const double variance = std::max(mean_sq - mean * mean, 0.0);
    const double stdev = std::sqrt(variance);

    chaos::LogisticParams params;
    params.x0 = (mean + 1.0) / 257.0;
    params.mu = 3.5699 + (stdev - std::floor(stdev)) * 0.43;
    return params;
}

BitTile pack_auth_bits(const AuthBits& auth, std::span<const std::size_t> perm) {
    if (auth.ban < 0 || auth.ban > 1023 || auth.gan < 0 || auth.gan > 63)
        throw Error(errc::argument, "authentication bits out of range");
    if (perm.size() != 16)
        throw Error(errc::argument, "need a rank permutation of 16 positions");

    // Payload bit 15 is the BAN's MSB, bit 0 the GAN's LSB.
    const unsigned payload = (static_cast<unsigned>(auth.ban) << 6) | static_cast<unsigned>(auth.gan);
    BitTile tile{};
    for (std::size_t r = 0; r < 16; ++r)
        tile[perm[r]] = static_cast<std::uint8_t>((payload >> (15 - r)) & 1u);
    return tile;
}

AuthBits unpack_auth_bits(const BitTile& tile, std::span<const std::size_t> perm) {
    if (perm.size() != 16)
        throw Error(errc::argument, "need a rank permutation of 16 positions");
    unsigned payload = 0;
    for (std::size_t r = 0; r < 16; ++r)
        payload |= static_cast<unsigned>(tile[perm[r]] & 1u) << (15 - r);
    return AuthBits{static_cast<int>(payload >> 6), static_cast<int>(payload & 63u)};
}

} // namespace svdmark::blockauth
